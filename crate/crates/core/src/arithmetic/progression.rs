use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `{r, r+m, r+2m, …}` over the non-negative integers, or the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArithmeticProgression {
    residue: BigUint,
    modulus: BigUint,
    empty: bool,
}

impl ArithmeticProgression {
    /// `residue` is reduced modulo `modulus`. Panics on a zero modulus.
    pub fn new(residue: impl Into<BigUint>, modulus: impl Into<BigUint>) -> Self {
        let modulus = modulus.into();
        assert!(!modulus.is_zero(), "progression modulus must be ≥ 1");
        ArithmeticProgression {
            residue: residue.into() % &modulus,
            modulus,
            empty: false,
        }
    }

    pub fn empty() -> Self {
        ArithmeticProgression {
            residue: BigUint::zero(),
            modulus: BigUint::one(),
            empty: true,
        }
    }

    /// Every non-negative integer.
    pub fn all() -> Self {
        Self::new(0u32, 1u32)
    }

    /// Multiples of `m`.
    pub fn multiples_of(m: impl Into<BigUint>) -> Self {
        Self::new(0u32, m)
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn contains(&self, n: &BigUint) -> bool {
        !self.empty && (n % &self.modulus) == self.residue
    }

    /// Smallest member that is at least `floor`.
    pub fn first_at_least(&self, floor: &BigUint) -> Option<BigUint> {
        if self.empty {
            return None;
        }
        if floor <= &self.residue {
            return Some(self.residue.clone());
        }
        let gap = floor - &self.residue;
        let steps = gap.div_ceil(&self.modulus);
        Some(&self.residue + steps * &self.modulus)
    }

    /// Members in increasing order, starting at the residue.
    pub fn iter(&self) -> impl Iterator<Item = BigUint> + '_ {
        let mut next = (!self.empty).then(|| self.residue.clone());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            next = Some(&cur + &self.modulus);
            Some(cur)
        })
    }
}

impl fmt::Display for ArithmeticProgression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.empty {
            write!(f, "∅")
        } else {
            write!(f, "{} mod {}", self.residue, self.modulus)
        }
    }
}

/// Inverse of `a` modulo `m` (`m ≥ 1`), if it exists.
pub fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from(a % m);
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    e.x.mod_floor(&m).to_biguint()
}

/// Intersection of two progressions, as a single progression (generalized CRT).
pub fn refine_progression(
    base: &ArithmeticProgression,
    extra: &ArithmeticProgression,
) -> ArithmeticProgression {
    if base.empty || extra.empty {
        return ArithmeticProgression::empty();
    }
    let (r1, m1) = (
        BigInt::from(base.residue.clone()),
        BigInt::from(base.modulus.clone()),
    );
    let (r2, m2) = (
        BigInt::from(extra.residue.clone()),
        BigInt::from(extra.modulus.clone()),
    );
    let g = m1.gcd(&m2);
    let diff = &r2 - &r1;
    if !diff.is_multiple_of(&g) {
        return ArithmeticProgression::empty();
    }
    let m2g = &m2 / &g;
    let lcm = &m1 * &m2g;
    // r1 + m1·t ≡ r2 (mod m2)  ⇔  (m1/g)·t ≡ diff/g (mod m2/g)
    let inv = (&m1 / &g).extended_gcd(&m2g).x;
    let t = ((&diff / &g) * inv).mod_floor(&m2g);
    let x = (r1 + m1 * t).mod_floor(&lcm);
    ArithmeticProgression::new(
        x.to_biguint().expect("reduced residue is non-negative"),
        lcm.to_biguint().expect("lcm is positive"),
    )
}

/// All solutions `n` of `a·n = b·ñ + 1` together with the companion `ñ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlignmentSolution {
    a: BigUint,
    b: BigUint,
    progression: ArithmeticProgression,
    n_min: BigUint,
}

impl AlignmentSolution {
    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn b(&self) -> &BigUint {
        &self.b
    }

    pub fn progression(&self) -> &ArithmeticProgression {
        &self.progression
    }

    /// Smallest member with a non-negative companion.
    pub fn n_min(&self) -> &BigUint {
        &self.n_min
    }

    /// `ñ = (a·n − 1)/b`, defined for members `n ≥ n_min`.
    pub fn companion(&self, n: &BigUint) -> Result<BigUint> {
        if !self.progression.contains(n) || n < &self.n_min {
            return Err(Error::NotInProgression {
                n: n.clone(),
                n_min: self.n_min.clone(),
            });
        }
        let (q, r) = (&self.a * n - 1u32).div_rem(&self.b);
        debug_assert!(r.is_zero());
        Ok(q)
    }
}

/// Solve `a·n ≡ 1 (mod b)`; the solution set is `AP(a⁻¹ mod b, b)`.
pub fn solve_alignment(a: &BigUint, b: &BigUint) -> Result<AlignmentSolution> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::NoSolution {
            a: a.clone(),
            b: b.clone(),
            gcd: a.gcd(b),
        });
    }
    let inv = mod_inverse(a, b).ok_or_else(|| Error::NoSolution {
        a: a.clone(),
        b: b.clone(),
        gcd: a.gcd(b),
    })?;
    let progression = ArithmeticProgression::new(inv, b.clone());
    // a ≥ 1, so any n ≥ 1 gives a·n − 1 ≥ 0.
    let n_min = progression
        .first_at_least(&BigUint::one())
        .expect("non-empty progression");
    Ok(AlignmentSolution {
        a: a.clone(),
        b: b.clone(),
        progression,
        n_min,
    })
}
