use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arithmetic::AdmissiblePolynomial;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Matrices larger than this are refused.
pub const MAX_DIM: usize = 1000;

/// Dense square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Result<Self> {
        if n > MAX_DIM {
            return Err(Error::Mismatch(format!(
                "matrix dimension {n} exceeds {MAX_DIM}"
            )));
        }
        Ok(RationalMatrix {
            n,
            data: vec![BigRational::zero(); n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m[(i, i)] = BigRational::one();
        }
        Ok(m)
    }

    /// Koopman matrix of `σ`: `(U f)(x) = f(σ x)`, so `U[x, σ(x)] = 1`.
    pub fn koopman(perm: &Permutation) -> Result<Self> {
        let mut m = Self::zeros(perm.len())?;
        for x in 0..perm.len() {
            m[(x, perm.apply(x))] = BigRational::one();
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Mismatch("matrix is not square".into()));
        }
        let mut m = Self::zeros(n)?;
        m.data = rows.into_iter().flatten().collect();
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                t[(i, j)] = self[(j, i)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        RationalMatrix { n, data: out }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        RationalMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        RationalMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn row_sum(&self, i: usize) -> BigRational {
        self.row(i).iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> BigRational {
        (0..self.n).map(|i| &self[(i, j)]).sum()
    }

    /// Non-negative with every row and column summing to `total`.
    pub fn check_marginals(&self, total: &BigRational) -> Result<()> {
        if let Some(pos) = self.data.iter().position(|a| a.is_negative()) {
            return Err(Error::NotDoublyStochastic(format!(
                "negative entry at ({}, {})",
                pos / self.n,
                pos % self.n
            )));
        }
        for i in 0..self.n {
            let (r, c) = (self.row_sum(i), self.col_sum(i));
            if &r != total {
                return Err(Error::NotDoublyStochastic(format!("row {i} sums to {r}")));
            }
            if &c != total {
                return Err(Error::NotDoublyStochastic(format!(
                    "column {i} sums to {c}"
                )));
            }
        }
        Ok(())
    }

    pub fn check_doubly_stochastic(&self) -> Result<()> {
        self.check_marginals(&BigRational::one())
    }

    /// Number of non-zero entries in each row.
    pub fn row_support(&self, i: usize) -> usize {
        self.row(i).iter().filter(|a| !a.is_zero()).count()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self[(i, i)].is_zero())
    }

    /// Entries rendered as `p/q` (or `p` for integers), one row per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|a| a.to_string()).collect();
            writeln!(out, "{}", row.join(" ")).expect("writing to a String");
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = BigRational;
    fn index(&self, (i, j): (usize, usize)) -> &BigRational {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigRational {
        &mut self.data[i * self.n + j]
    }
}

/// `(1/n) Σ U_{σ_i}`.
pub fn uniform_average(perms: &[Permutation]) -> Result<RationalMatrix> {
    let first = perms
        .first()
        .ok_or_else(|| Error::Mismatch("average of no permutations".into()))?;
    let mut acc = RationalMatrix::zeros(first.len())?;
    for p in perms {
        if p.len() != first.len() {
            return Err(Error::Mismatch(
                "permutations act on different spaces".into(),
            ));
        }
        acc = acc.add(&RationalMatrix::koopman(p)?);
    }
    Ok(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(perms.len()))))
}

/// The Markov operator `P(T) = Σ a_i U_T^i`.
pub fn polynomial_operator(
    poly: &AdmissiblePolynomial,
    perm: &Permutation,
) -> Result<RationalMatrix> {
    let mut acc = RationalMatrix::zeros(perm.len())?;
    for (&degree, a) in poly.coefficients() {
        acc = acc.add(&RationalMatrix::koopman(&perm.pow(degree as i64))?.scale(a));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::admissible_check;
    use std::collections::BTreeMap;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn koopman_is_a_representation() {
        let f = Permutation::from_images(vec![1, 2, 0, 3]).unwrap();
        let g = Permutation::from_images(vec![3, 0, 1, 2]).unwrap();
        // U_f U_g = U_{g∘f} for the Koopman convention (U f)(x) = f(σx).
        let lhs = RationalMatrix::koopman(&f)
            .unwrap()
            .mul(&RationalMatrix::koopman(&g).unwrap());
        assert_eq!(lhs, RationalMatrix::koopman(&g.compose(&f)).unwrap());
        assert_eq!(
            RationalMatrix::koopman(&f).unwrap().transpose(),
            RationalMatrix::koopman(&f.inverse()).unwrap()
        );
    }

    #[test]
    fn admissible_polynomials_give_markov_operators() {
        let c5 = Permutation::from_fn(5, |x| (x + 1) % 5).unwrap();
        let poly = admissible_check(BTreeMap::from([(1, q(1, 2)), (3, q(1, 2))])).unwrap();
        let m = polynomial_operator(&poly, &c5).unwrap();
        m.check_doubly_stochastic().unwrap();
        assert_eq!(m[(0, 1)], q(1, 2));
        assert_eq!(m[(0, 3)], q(1, 2));
        let id = polynomial_operator(&AdmissiblePolynomial::identity(), &c5).unwrap();
        assert_eq!(id, RationalMatrix::identity(5).unwrap());
    }

    #[test]
    fn marginal_violations_are_reported() {
        let m = RationalMatrix::from_rows(vec![vec![q(1, 2), q(1, 2)], vec![q(1, 3), q(2, 3)]])
            .unwrap();
        assert!(matches!(
            m.check_doubly_stochastic(),
            Err(Error::NotDoublyStochastic(_))
        ));
        assert!(RationalMatrix::zeros(MAX_DIM + 1).is_err());
        assert_eq!(m.dump(), "1/2 1/2\n1/3 2/3\n");
    }
}
