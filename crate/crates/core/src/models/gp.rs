//! The group `G_p = ⟨s, φ | φ^p = e, [φ^i s φ^{-i}, φ^j s φ^{-j}] = e⟩`.
//!
//! Every element has a unique normal form `φ^a · t_0^{b_0} ⋯ t_{p−1}^{b_{p−1}}`
//! with `t_i = φ^i s φ^{-i}`, so `G_p ≅ Z_p ⋉ Z^p` with `Z_p` acting by
//! cyclic shift. Since `φ^{-a} t_i φ^a = t_{i−a}`, the product is
//! `(a, b)·(a', b') = (a + a', shift_{a'}(b) + b')` where
//! `shift_{a'}(b)_k = b_{k+a'}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GpLetter {
    S,
    SInv,
    Phi,
    PhiInv,
}

impl GpLetter {
    pub fn inverse(self) -> GpLetter {
        match self {
            GpLetter::S => GpLetter::SInv,
            GpLetter::SInv => GpLetter::S,
            GpLetter::Phi => GpLetter::PhiInv,
            GpLetter::PhiInv => GpLetter::Phi,
        }
    }
}

/// Parse a word: `s`/`S` are `s`/`s⁻¹`, `f`/`F` are `φ`/`φ⁻¹`; whitespace,
/// `·` and `*` are ignored.
pub fn parse_word(text: &str) -> Result<Vec<GpLetter>> {
    text.chars()
        .filter(|c| !c.is_whitespace() && *c != '·' && *c != '*')
        .map(|c| match c {
            's' => Ok(GpLetter::S),
            'S' => Ok(GpLetter::SInv),
            'f' => Ok(GpLetter::Phi),
            'F' => Ok(GpLetter::PhiInv),
            other => Err(Error::Parse {
                line: 1,
                message: format!("unknown generator letter {other:?}"),
            }),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GpNormalForm {
    p: usize,
    twist: usize,
    exponents: Vec<i64>,
}

impl GpNormalForm {
    pub fn identity(p: usize) -> Self {
        assert!(p >= 2, "G_p needs p ≥ 2");
        GpNormalForm {
            p,
            twist: 0,
            exponents: vec![0; p],
        }
    }

    pub fn new(p: usize, twist: usize, exponents: Vec<i64>) -> Result<Self> {
        if p < 2 || exponents.len() != p {
            return Err(Error::Mismatch(format!(
                "G_{p} needs p ≥ 2 and {p} exponents, got {}",
                exponents.len()
            )));
        }
        Ok(GpNormalForm {
            p,
            twist: twist % p,
            exponents,
        })
    }

    pub fn letter(p: usize, letter: GpLetter) -> Self {
        let mut g = Self::identity(p);
        match letter {
            GpLetter::S => g.exponents[0] = 1,
            GpLetter::SInv => g.exponents[0] = -1,
            GpLetter::Phi => g.twist = 1,
            GpLetter::PhiInv => g.twist = p - 1,
        }
        g
    }

    /// The conjugate `t_i = φ^i s φ^{-i}`.
    pub fn conjugate_generator(p: usize, i: usize) -> Self {
        let mut g = Self::identity(p);
        g.exponents[i % p] = 1;
        g
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn twist(&self) -> usize {
        self.twist
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn is_identity(&self) -> bool {
        self.twist == 0 && self.exponents.iter().all(|&b| b == 0)
    }

    pub fn mul(&self, rhs: &GpNormalForm) -> GpNormalForm {
        assert_eq!(self.p, rhs.p, "multiplying elements of different G_p");
        let p = self.p;
        let exponents = (0..p)
            .map(|k| self.exponents[(k + rhs.twist) % p] + rhs.exponents[k])
            .collect();
        GpNormalForm {
            p,
            twist: (self.twist + rhs.twist) % p,
            exponents,
        }
    }

    pub fn inverse(&self) -> GpNormalForm {
        // (a, b)^{-1} = (−a, −shift_{−a}(b))
        let p = self.p;
        let back = (p - self.twist) % p;
        let exponents = (0..p).map(|k| -self.exponents[(k + back) % p]).collect();
        GpNormalForm {
            p,
            twist: back,
            exponents,
        }
    }

    /// A word spelling this element: `φ^a` followed by each `t_i^{b_i}`.
    pub fn to_word(&self) -> Vec<GpLetter> {
        let mut word = vec![GpLetter::Phi; self.twist];
        for (i, &b) in self.exponents.iter().enumerate() {
            let s = if b >= 0 { GpLetter::S } else { GpLetter::SInv };
            for _ in 0..b.unsigned_abs() {
                word.extend(std::iter::repeat_n(GpLetter::Phi, i));
                word.push(s);
                word.extend(std::iter::repeat_n(GpLetter::PhiInv, i));
            }
        }
        word
    }
}

impl fmt::Display for GpNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.exponents.iter().map(|b| b.to_string()).collect();
        write!(f, "(a={}, b=({}))", self.twist, b.join(","))
    }
}

pub fn gp_reduce(p: usize, word: &[GpLetter]) -> GpNormalForm {
    word.iter().fold(GpNormalForm::identity(p), |acc, &l| {
        acc.mul(&GpNormalForm::letter(p, l))
    })
}

/// A finite realization of `G_p` by permutations `S`, `Φ` satisfying both
/// defining relations, with `R = S ∘ Φ` and `T = R^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpAction {
    p: usize,
    s: Permutation,
    phi: Permutation,
}

impl GpAction {
    pub fn new(p: usize, s: Permutation, phi: Permutation) -> Result<Self> {
        if p < 2 {
            return Err(Error::Mismatch("G_p needs p ≥ 2".into()));
        }
        if s.len() != phi.len() {
            return Err(Error::Mismatch("S and Φ act on different spaces".into()));
        }
        if !phi.pow(p as i64).is_identity() {
            return Err(Error::IdentityFailed(format!("Φ^{p} ≠ id")));
        }
        let conjugates: Vec<Permutation> = (0..p as i64)
            .map(|i| phi.pow(i).compose(&s).compose(&phi.pow(-i)))
            .collect();
        for i in 0..p {
            for j in i + 1..p {
                if !conjugates[i].commutes_with(&conjugates[j]) {
                    return Err(Error::NotCommuting(format!(
                        "Φ^{i}SΦ^-{i} and Φ^{j}SΦ^-{j}"
                    )));
                }
            }
        }
        Ok(GpAction { p, s, phi })
    }

    /// `X = Z_p × Y^p` with `Φ(c, y) = (c+1, shift(y))` and `S` applying
    /// `base` to the first coordinate of `y`. `Φ` acts freely, and when
    /// `base` has no fixed points the `p` points `RΦ^j x` lie in distinct
    /// `Φ`-orbits.
    pub fn cyclic_extension(p: usize, base: &Permutation) -> Result<Self> {
        let m = base.len();
        let block = m
            .checked_pow(p as u32)
            .filter(|&b| (b as u64).saturating_mul(p as u64) <= crate::perm::max_order())
            .ok_or_else(|| Error::CapExceeded {
                order: num_bigint::BigUint::from(m).pow(p as u32) * p,
                cap: crate::perm::max_order(),
            })?;
        let digits = |mut y: usize| {
            let mut d = vec![0; p];
            for slot in d.iter_mut().rev() {
                *slot = y % m;
                y /= m;
            }
            d
        };
        let undigits = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * m + x);
        let phi = Permutation::from_fn(p * block, |x| {
            let (c, y) = (x / block, digits(x % block));
            let shifted: Vec<usize> = (0..p).map(|i| y[(i + 1) % p]).collect();
            ((c + 1) % p) * block + undigits(&shifted)
        })?;
        let s = Permutation::from_fn(p * block, |x| {
            let (c, mut y) = (x / block, digits(x % block));
            y[0] = base.apply(y[0]);
            c * block + undigits(&y)
        })?;
        Self::new(p, s, phi)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn s(&self) -> &Permutation {
        &self.s
    }

    pub fn phi(&self) -> &Permutation {
        &self.phi
    }

    /// `R = S ∘ Φ`.
    pub fn rotation(&self) -> Permutation {
        self.s.compose(&self.phi)
    }

    /// `T = R^p`, which commutes with `Φ`.
    pub fn t(&self) -> Permutation {
        self.rotation().pow(self.p as i64)
    }

    /// Image of a group element under the action.
    pub fn evaluate(&self, g: &GpNormalForm) -> Permutation {
        let mut acc = self.phi.pow(g.twist() as i64);
        for (i, &b) in g.exponents().iter().enumerate() {
            let t = self
                .phi
                .pow(i as i64)
                .compose(&self.s)
                .compose(&self.phi.pow(-(i as i64)));
            acc = acc.compose(&t.pow(b));
        }
        acc
    }

    pub fn evaluate_word(&self, word: &[GpLetter]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(self.s.len()), |acc, l| {
                let g = match l {
                    GpLetter::S => self.s.clone(),
                    GpLetter::SInv => self.s.inverse(),
                    GpLetter::Phi => self.phi.clone(),
                    GpLetter::PhiInv => self.phi.inverse(),
                };
                acc.compose(&g)
            })
    }
}
