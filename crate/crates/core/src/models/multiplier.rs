use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::group::{truncate, FiniteAbelianGroup, GroupRotation, ProductModel};
use crate::arithmetic::mod_inverse;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Coordinatewise multiplication `x_j ↦ c_j·x_j mod m_j` with every `c_j`
/// a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierAutomorphism {
    group: FiniteAbelianGroup,
    coefficients: Vec<u64>,
}

impl MultiplierAutomorphism {
    pub fn new(group: FiniteAbelianGroup, coefficients: Vec<u64>) -> Result<Self> {
        if coefficients.len() != group.moduli().len() {
            return Err(Error::Mismatch("one coefficient per coordinate".into()));
        }
        for (&c, &m) in coefficients.iter().zip(group.moduli()) {
            if num_integer::gcd(c, m) != 1 {
                return Err(Error::NoInverse { q: c, modulus: m });
            }
        }
        let coefficients = coefficients
            .iter()
            .zip(group.moduli())
            .map(|(&c, &m)| c % m)
            .collect();
        Ok(MultiplierAutomorphism {
            group,
            coefficients,
        })
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.coefficients)
            .zip(self.group.moduli())
            .map(|((&x, &c), &m)| ((x as u128 * c as u128) % m as u128) as u64)
            .collect()
    }

    pub fn permutation(&self) -> Result<Permutation> {
        self.group.permutation_from(|x| self.apply(x))
    }

    /// Additivity checked on every element against every basis vector,
    /// which determines a homomorphism of a product of cyclic groups.
    pub fn verify_automorphism(&self) -> Result<()> {
        let perm = self.permutation()?;
        let k = self.group.moduli().len();
        let basis: Vec<Vec<u64>> = (0..k)
            .map(|j| (0..k).map(|i| u64::from(i == j)).collect())
            .collect();
        let basis_images: Vec<Vec<u64>> = basis.iter().map(|e| self.apply(e)).collect();
        for i in 0..perm.len() {
            let x = self.group.element_at(i);
            let fx = self.group.element_at(perm.apply(i));
            for (e, fe) in basis.iter().zip(&basis_images) {
                let lhs = self.apply(&self.group.add(&x, e));
                if lhs != self.group.add(&fx, fe) {
                    return Err(Error::IdentityFailed(format!(
                        "Ψ(x + e) ≠ Ψ(x) + Ψ(e) at x = {x:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Ψ⁻¹ ∘ R ∘ Ψ = R^q` pointwise; returns the first witness on failure.
    pub fn verify_conjugation(&self, rotation: &GroupRotation, q: u64) -> Result<()> {
        let psi = self.permutation()?;
        let r = rotation.permutation()?;
        let rq = rotation.power_big(&BigUint::from(q)).permutation()?;
        let lhs = psi.inverse().compose(&r).compose(&psi);
        match lhs.first_difference(&rq) {
            None => Ok(()),
            Some(x) => Err(Error::IdentityFailed(format!(
                "Ψ⁻¹RΨ ≠ R^{q} at x = {:?}",
                self.group.element_at(x)
            ))),
        }
    }
}

/// `Ψ_q` on the level-`k` truncation, with `c_j = q⁻¹ mod m_j`.
pub fn multiplier_for(
    model: &ProductModel,
    q: u64,
    level: usize,
) -> Result<MultiplierAutomorphism> {
    let (group, _) = truncate(model, level)?;
    let coefficients = group
        .moduli()
        .iter()
        .map(|&m| {
            mod_inverse(&BigUint::from(q), &BigUint::from(m))
                .and_then(|c| c.to_u64())
                .ok_or(Error::NoInverse { q, modulus: m })
        })
        .collect::<Result<Vec<_>>>()?;
    MultiplierAutomorphism::new(group, coefficients)
}
