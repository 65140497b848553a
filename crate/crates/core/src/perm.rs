//! Permutations of `{0, …, n−1}` as explicit image arrays.
//!
//! Composition follows function notation throughout the crate:
//! `f.compose(&g)` is `f ∘ g`, i.e. `x ↦ f(g(x))`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Default cap on the size of any materialized space.
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000;

/// The materialization cap, overridable through `SPECLAB_MAX_ORDER`.
pub fn max_order() -> u64 {
    std::env::var("SPECLAB_MAX_ORDER")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (x, &y) in images.iter().enumerate() {
            if y >= n {
                return Err(Error::InvalidPermutation(format!(
                    "{x} ↦ {y} is out of range"
                )));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::InvalidPermutation(format!("{y} has two preimages")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from a closure; the result is validated.
    pub fn from_fn(n: usize, f: impl FnMut(usize) -> usize) -> Result<Self> {
        Self::from_images((0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    /// `self^n` for any integer `n`, computed cycle by cycle.
    pub fn pow(&self, n: i64) -> Permutation {
        let mut images = vec![0; self.len()];
        for cycle in self.cycles() {
            let len = cycle.len() as i64;
            let shift = n.rem_euclid(len) as usize;
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.len() == other.len()
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(&fx, &gx)| other.images[fx] == self.images[gx])
    }

    /// Cycles in order of their least element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle length → number of cycles of that length.
    pub fn cycle_type(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for c in self.cycles() {
            *counts.entry(c.len()).or_insert(0) += 1;
        }
        counts
    }

    /// `self ⊗ other` on the product space, indexed `x·|other| + y`.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let m = other.len();
        let mut images = Vec::with_capacity(self.len() * m);
        for &x in &self.images {
            for &y in &other.images {
                images.push(x * m + y);
            }
        }
        Permutation { images }
    }

    /// First point where the two permutations differ.
    pub fn first_difference(&self, other: &Permutation) -> Option<usize> {
        (0..self.len().min(other.len())).find(|&x| self.images[x] != other.images[x])
    }
}

/// Left-to-right tensor product of a list of permutations.
pub fn tensor_all(perms: &[Permutation]) -> Permutation {
    perms
        .iter()
        .skip(1)
        .fold(perms[0].clone(), |acc, p| acc.tensor(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 2]).is_err());
        assert!(Permutation::from_images(vec![1, 0]).is_ok());
    }

    #[test]
    fn composition_order() {
        let f = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let g = Permutation::from_images(vec![1, 0, 2]).unwrap();
        // (f ∘ g)(0) = f(1) = 2
        assert_eq!(f.compose(&g).apply(0), 2);
        assert_eq!(g.compose(&f).apply(0), 0);
    }

    #[test]
    fn cycle_type_of_example() {
        let p = Permutation::from_images(vec![1, 0, 3, 2, 5, 6, 4]).unwrap();
        assert_eq!(p.cycle_type(), BTreeMap::from([(2, 2), (3, 1)]));
    }

    proptest! {
        #[test]
        fn pow_matches_repeated_composition(p in arb_perm(12), n in 0i64..30) {
            let mut acc = Permutation::identity(p.len());
            for _ in 0..n {
                acc = p.compose(&acc);
            }
            prop_assert_eq!(p.pow(n), acc.clone());
            prop_assert_eq!(p.pow(-n), acc.inverse());
        }

        #[test]
        fn tensor_is_coordinatewise(a in arb_perm(6), b in arb_perm(6)) {
            let t = a.tensor(&b);
            for x in 0..a.len() {
                for y in 0..b.len() {
                    prop_assert_eq!(t.apply(x * b.len() + y), a.apply(x) * b.len() + b.apply(y));
                }
            }
        }
    }
}
