use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};

/// `M = α·I + (1 − α)·Q` with `Q` doubly stochastic and zero on the
/// diagonal. For an `n`-valued graph composition `α = 1/n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovDecomposition {
    pub alpha: BigRational,
    /// Absent exactly when `α = 1` (then `M = I`).
    pub remainder: Option<RationalMatrix>,
}

impl MarkovDecomposition {
    /// `1/α`, when it is a positive integer.
    pub fn valuedness(&self) -> Option<u64> {
        if self.alpha.is_zero() {
            return None;
        }
        let inv = self.alpha.recip();
        inv.is_integer()
            .then(|| inv.to_integer())
            .and_then(|n| n.try_into().ok())
    }
}

pub fn markov_decompose(m: &RationalMatrix) -> Result<MarkovDecomposition> {
    m.check_doubly_stochastic()?;
    let n = m.dim();
    if n == 0 {
        return Err(Error::Mismatch("empty matrix".into()));
    }
    let alpha = m[(0, 0)].clone();
    if let Some(i) = (1..n).find(|&i| m[(i, i)] != alpha) {
        return Err(Error::NonConstantDiagonal {
            index: i,
            found: m[(i, i)].to_string(),
            expected: alpha.to_string(),
        });
    }
    if alpha.is_one() {
        return Ok(MarkovDecomposition {
            alpha,
            remainder: None,
        });
    }
    let rest = BigRational::one() - &alpha;
    let q = m
        .sub(&RationalMatrix::identity(n)?.scale(&alpha))
        .scale(&rest.recip());
    q.check_doubly_stochastic()?;
    debug_assert!((0..n).all(|i| q[(i, i)].is_zero()));
    Ok(MarkovDecomposition {
        alpha,
        remainder: Some(q),
    })
}

/// `α·I + (1 − α)·Q`.
pub fn compose(alpha: &BigRational, q: &RationalMatrix) -> Result<RationalMatrix> {
    let n = q.dim();
    Ok(RationalMatrix::identity(n)?
        .scale(alpha)
        .add(&q.scale(&(BigRational::one() - alpha))))
}

/// Decompositions of `J*J` and `JJ*` side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointDecompositions {
    pub star_j: MarkovDecomposition,
    pub j_star: MarkovDecomposition,
}

impl AdjointDecompositions {
    pub fn same_valuedness(&self) -> bool {
        self.star_j.alpha == self.j_star.alpha
    }
}

pub fn adjoint_decompositions(j: &RationalMatrix) -> Result<AdjointDecompositions> {
    let adjoint = j.transpose();
    Ok(AdjointDecompositions {
        star_j: markov_decompose(&adjoint.mul(j))?,
        j_star: markov_decompose(&j.mul(&adjoint))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
    use crate::joining::uniform_average;
    use crate::perm::Permutation;
    use proptest::prelude::*;

    fn rot(m: usize, k: usize) -> Permutation {
        Permutation::from_fn(m, |x| (x + k) % m).unwrap()
    }

    #[test]
    fn permutation_is_one_valued() {
        let j = RationalMatrix::koopman(&rot(6, 1)).unwrap();
        let d = adjoint_decompositions(&j).unwrap();
        assert!(d.star_j.alpha.is_one());
        assert!(d.star_j.remainder.is_none());
        assert_eq!(d.star_j.valuedness(), Some(1));
    }

    #[test]
    fn two_rotations_of_z5() {
        let (p1, p2) = (rot(5, 1), rot(5, 2));
        let j = uniform_average(&[p1.clone(), p2.clone()]).unwrap();
        let d = markov_decompose(&j.transpose().mul(&j)).unwrap();
        assert_eq!(d.alpha, ratio(1, 2));
        assert_eq!(d.valuedness(), Some(2));
        // Q = ½(P₁⁻¹P₂ + P₂⁻¹P₁), computed independently.
        let k = |p: &Permutation| RationalMatrix::koopman(p).unwrap();
        let expected = k(&p1)
            .transpose()
            .mul(&k(&p2))
            .add(&k(&p2).transpose().mul(&k(&p1)))
            .scale(&ratio(1, 2));
        assert_eq!(d.remainder.unwrap(), expected);
    }

    #[test]
    fn three_rotations_of_z7() {
        let j = uniform_average(&[rot(7, 1), rot(7, 2), rot(7, 4)]).unwrap();
        let d = adjoint_decompositions(&j).unwrap();
        assert_eq!(d.star_j.alpha, ratio(1, 3));
        assert_eq!(d.star_j.valuedness(), Some(3));
        assert!(d.same_valuedness());
        let q = d.star_j.remainder.unwrap();
        assert!((0..7).all(|i| q[(i, i)].is_zero()));
    }

    #[test]
    fn non_constant_diagonal_is_reported() {
        // Average of the identity and a transposition on 3 points.
        let j = uniform_average(&[
            Permutation::identity(3),
            Permutation::from_images(vec![1, 0, 2]).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            markov_decompose(&j),
            Err(Error::NonConstantDiagonal { index: 2, .. })
        ));
    }

    proptest! {
        #[test]
        fn compose_round_trip(
            shifts in proptest::collection::btree_set(1usize..9, 1..5),
            weights in proptest::collection::vec(1i64..5, 5),
            alpha_num in 0i64..=7,
        ) {
            // Q: weighted average of fixed-point-free rotations of Z_9.
            let shifts: Vec<usize> = shifts.into_iter().collect();
            let total: i64 = weights[..shifts.len()].iter().sum();
            let mut q = RationalMatrix::zeros(9).unwrap();
            for (&s, &w) in shifts.iter().zip(&weights) {
                q = q.add(&RationalMatrix::koopman(&rot(9, s)).unwrap().scale(&ratio(w, total)));
            }
            let alpha = ratio(alpha_num, 7);
            let m = compose(&alpha, &q).unwrap();
            let d = markov_decompose(&m).unwrap();
            prop_assert_eq!(&d.alpha, &alpha);
            if alpha_num < 7 {
                prop_assert_eq!(d.remainder.unwrap(), q);
            }
        }
    }
}
