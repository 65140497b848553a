use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arithmetic::PrimeSpec;
use crate::error::{Error, Result};
use crate::perm::{max_order, Permutation};

/// `Z_{m_1} × … × Z_{m_k}`, elements enumerated lexicographically with the
/// first coordinate most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("no factors".into()));
        }
        if let Some(m) = moduli.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidGroup(format!("modulus {m} < 2")));
        }
        Ok(FiniteAbelianGroup { moduli })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> BigUint {
        self.moduli.iter().map(|&m| BigUint::from(m)).product()
    }

    /// Least common multiple of the moduli.
    pub fn exponent(&self) -> BigUint {
        self.moduli
            .iter()
            .fold(BigUint::one(), |acc, &m| acc.lcm(&BigUint::from(m)))
    }

    pub fn pairwise_coprime(&self) -> Result<()> {
        for (i, &a) in self.moduli.iter().enumerate() {
            for &b in &self.moduli[i + 1..] {
                if a.gcd(&b) != 1 {
                    return Err(Error::NotCoprime(a, b));
                }
            }
        }
        Ok(())
    }

    /// The order as a `usize`, provided it is within the materialization cap.
    pub fn materializable_order(&self) -> Result<usize> {
        let order = self.order();
        let cap = max_order();
        match order.to_u64() {
            Some(n) if n <= cap => Ok(n as usize),
            _ => Err(Error::CapExceeded { order, cap }),
        }
    }

    pub fn index_of(&self, element: &[u64]) -> usize {
        element
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&x, &m)| acc * m as usize + x as usize)
    }

    pub fn element_at(&self, mut index: usize) -> Vec<u64> {
        let mut out = vec![0; self.moduli.len()];
        for (slot, &m) in out.iter_mut().zip(&self.moduli).rev() {
            *slot = (index % m as usize) as u64;
            index /= m as usize;
        }
        out
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((&a, &b), &m)| ((a as u128 + b as u128) % m as u128) as u64)
            .collect()
    }

    /// Enumerate the group in index order.
    pub fn elements(&self) -> Result<impl Iterator<Item = Vec<u64>> + '_> {
        let n = self.materializable_order()?;
        Ok((0..n).map(move |i| self.element_at(i)))
    }

    /// Materialize a map on elements as a permutation of indices.
    pub fn permutation_from(&self, f: impl Fn(&[u64]) -> Vec<u64>) -> Result<Permutation> {
        let n = self.materializable_order()?;
        Permutation::from_fn(n, |i| self.index_of(&f(&self.element_at(i))))
    }
}

/// Translation `x ↦ x + step` on a finite abelian group with Haar measure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRotation {
    group: FiniteAbelianGroup,
    step: Vec<u64>,
}

impl GroupRotation {
    pub fn new(group: FiniteAbelianGroup, step: Vec<u64>) -> Result<Self> {
        if step.len() != group.moduli.len() {
            return Err(Error::Mismatch(format!(
                "step has {} coordinates, group has {}",
                step.len(),
                group.moduli.len()
            )));
        }
        let step = step
            .iter()
            .zip(&group.moduli)
            .map(|(&s, &m)| s % m)
            .collect();
        Ok(GroupRotation { group, step })
    }

    /// Rotation by the all-ones element (the odometer step).
    pub fn all_ones(group: FiniteAbelianGroup) -> Self {
        let step = vec![1; group.moduli.len()];
        GroupRotation { group, step }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn step(&self) -> &[u64] {
        &self.step
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        self.group.add(x, &self.step)
    }

    /// Step multiplied by an arbitrary-precision `n`.
    pub fn power_big(&self, n: &BigUint) -> GroupRotation {
        let step = self
            .step
            .iter()
            .zip(&self.group.moduli)
            .map(|(&s, &m)| {
                ((BigUint::from(s) * n) % m)
                    .to_u64()
                    .expect("reduced below a u64 modulus")
            })
            .collect();
        GroupRotation {
            group: self.group.clone(),
            step,
        }
    }

    /// Order of the rotation as a group element.
    pub fn period(&self) -> BigUint {
        self.step
            .iter()
            .zip(&self.group.moduli)
            .fold(BigUint::one(), |acc, (&s, &m)| {
                acc.lcm(&BigUint::from(m / s.gcd(&m)))
            })
    }

    pub fn is_identity(&self) -> bool {
        self.step.iter().all(|&s| s == 0)
    }

    pub fn permutation(&self) -> Result<Permutation> {
        self.group.permutation_from(|x| self.apply(x))
    }
}

/// `step ↦ n·step`; `n = 0` is rejected.
pub fn power(rotation: &GroupRotation, n: u64) -> Result<GroupRotation> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(rotation.power_big(&BigUint::from(n)))
}

/// A product of cyclic groups of pairwise coprime orders, with the all-ones
/// rotation, truncatable at any level up to its depth.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductModel {
    moduli: Vec<BigUint>,
    spec: Option<PrimeSpec>,
    depth: usize,
}

impl ProductModel {
    /// Moduli `p_j^{d_j}`; `depth` defaults to the full prime list.
    pub fn from_spec(spec: PrimeSpec, depth: Option<usize>) -> Result<Self> {
        let moduli = spec.prime_powers();
        let depth = check_depth(depth, moduli.len())?;
        Ok(ProductModel {
            moduli,
            spec: Some(spec),
            depth,
        })
    }

    /// Explicit moduli, which must be ≥ 2 and pairwise coprime.
    pub fn from_moduli(moduli: Vec<BigUint>, depth: Option<usize>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("no moduli".into()));
        }
        if let Some(m) = moduli.iter().find(|m| **m < BigUint::from(2u32)) {
            return Err(Error::InvalidGroup(format!("modulus {m} < 2")));
        }
        for (i, a) in moduli.iter().enumerate() {
            for b in &moduli[i + 1..] {
                if !a.gcd(b).is_one() {
                    return Err(Error::InvalidGroup(format!(
                        "moduli {a} and {b} are not coprime"
                    )));
                }
            }
        }
        let depth = check_depth(depth, moduli.len())?;
        Ok(ProductModel {
            moduli,
            spec: None,
            depth,
        })
    }

    pub fn from_u64_moduli(moduli: &[u64]) -> Result<Self> {
        Self::from_moduli(moduli.iter().map(|&m| BigUint::from(m)).collect(), None)
    }

    /// Attach a prime set for the theorem functions without changing the moduli.
    pub fn with_spec(mut self, spec: PrimeSpec) -> Self {
        self.spec = Some(spec);
        self
    }

    pub fn spec(&self) -> Option<&PrimeSpec> {
        self.spec.as_ref()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn moduli(&self) -> &[BigUint] {
        &self.moduli[..self.depth]
    }

    pub fn check_level(&self, level: usize) -> Result<()> {
        if level == 0 || level > self.depth {
            return Err(Error::LevelOutOfRange {
                level,
                depth: self.depth,
            });
        }
        Ok(())
    }

    pub fn truncation_moduli(&self, level: usize) -> Result<&[BigUint]> {
        self.check_level(level)?;
        Ok(&self.moduli[..level])
    }

    /// Order of the level-`k` truncation (also the period of its rotation).
    pub fn truncation_order(&self, level: usize) -> Result<BigUint> {
        Ok(self.truncation_moduli(level)?.iter().product())
    }
}

fn check_depth(depth: Option<usize>, available: usize) -> Result<usize> {
    let depth = depth.unwrap_or(available);
    if depth == 0 || depth > available {
        return Err(Error::LevelOutOfRange {
            level: depth,
            depth: available,
        });
    }
    Ok(depth)
}

/// The level-`k` group and its all-ones rotation.
pub fn truncate(model: &ProductModel, level: usize) -> Result<(FiniteAbelianGroup, GroupRotation)> {
    let moduli = model
        .truncation_moduli(level)?
        .iter()
        .map(|m| {
            m.to_u64()
                .ok_or_else(|| Error::InvalidGroup(format!("modulus {m} does not fit in 64 bits")))
        })
        .collect::<Result<Vec<_>>>()?;
    let group = FiniteAbelianGroup::new(moduli)?;
    Ok((group.clone(), GroupRotation::all_ones(group)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(primes: &[u64]) -> PrimeSpec {
        PrimeSpec::square_free(primes.to_vec()).unwrap()
    }

    #[test]
    fn truncate_examples() {
        let model = ProductModel::from_spec(spec(&[2, 3, 5]), None).unwrap();
        let (g, r) = truncate(&model, 2).unwrap();
        assert_eq!(g.moduli(), &[2, 3]);
        assert_eq!(g.order(), BigUint::from(6u32));
        assert_eq!(r.step(), &[1, 1]);
        assert_eq!(truncate(&model, 3).unwrap().0.order(), BigUint::from(30u32));
        assert!(matches!(
            truncate(&model, 4),
            Err(Error::LevelOutOfRange { .. })
        ));
        assert!(truncate(&model, 0).is_err());

        let model =
            ProductModel::from_spec(PrimeSpec::uniform(vec![2, 3], 10).unwrap(), None).unwrap();
        let (g, _) = truncate(&model, 2).unwrap();
        assert_eq!(g.order(), BigUint::from(1024u64 * 59049));
    }

    #[test]
    fn power_examples() {
        let z5 = GroupRotation::all_ones(FiniteAbelianGroup::new(vec![5]).unwrap());
        assert_eq!(power(&z5, 2).unwrap().step(), &[2]);
        let z6 = GroupRotation::all_ones(FiniteAbelianGroup::new(vec![2, 3]).unwrap());
        assert!(power(&z6, 6).unwrap().is_identity());
        assert_eq!(power(&z6, 7).unwrap().step(), &[1, 1]);
        assert_eq!(power(&z6, 0), Err(Error::ZeroPower));
    }

    #[test]
    fn rigidity_criterion_by_enumeration() {
        // R^n restricted to level k is the identity iff lcm(m_1..m_k) | n.
        let model = ProductModel::from_u64_moduli(&[4, 3, 5]).unwrap();
        for level in 1..=3 {
            let (g, r) = truncate(&model, level).unwrap();
            let lcm = g.exponent().to_u64().unwrap();
            for n in 1..=130u64 {
                let p = power(&r, n).unwrap().permutation().unwrap();
                assert_eq!(p.is_identity(), n % lcm == 0, "level {level}, n {n}");
            }
        }
    }

    #[test]
    fn explicit_moduli_must_be_coprime() {
        assert!(ProductModel::from_u64_moduli(&[4, 6]).is_err());
        assert!(ProductModel::from_u64_moduli(&[1, 3]).is_err());
        assert!(ProductModel::from_u64_moduli(&[8, 3, 25]).is_ok());
    }

    #[test]
    fn indexing_round_trip() {
        let g = FiniteAbelianGroup::new(vec![3, 4, 5]).unwrap();
        for i in 0..60 {
            assert_eq!(g.index_of(&g.element_at(i)), i);
        }
        assert_eq!(g.element_at(1), vec![0, 0, 1]);
        assert_eq!(g.element_at(5), vec![0, 1, 0]);
    }

    #[test]
    fn rotation_is_tensor_of_cycles() {
        let g = FiniteAbelianGroup::new(vec![2, 3]).unwrap();
        let r = GroupRotation::all_ones(g).permutation().unwrap();
        let c2 = Permutation::from_images(vec![1, 0]).unwrap();
        let c3 = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(r, c2.tensor(&c3));
    }
}
