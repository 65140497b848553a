use super::gp::GpAction;
use super::group::GroupRotation;
use crate::error::{Error, Result};
use crate::perm::{max_order, tensor_all, Permutation};

/// `R = F ∘ (U_1 ⊗ … ⊗ U_p)` on `Y^p`, where `F(y_1, …, y_p) = (y_2, …, y_p, y_1)`
/// is the cyclic coordinate shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model2System {
    p: usize,
    bases: Vec<Permutation>,
    r: Permutation,
    f: Permutation,
}

impl Model2System {
    /// Build from base permutations of a common space `Y`.
    pub fn from_permutations(bases: Vec<Permutation>) -> Result<Self> {
        let p = bases.len();
        if p == 0 {
            return Err(Error::Mismatch("need at least one base".into()));
        }
        let m = bases[0].len();
        if let Some(b) = bases.iter().find(|b| b.len() != m) {
            return Err(Error::Mismatch(format!(
                "base spaces differ in size ({} vs {m})",
                b.len()
            )));
        }
        let size = (m as u64)
            .checked_pow(p as u32)
            .filter(|&n| n <= max_order())
            .ok_or_else(|| Error::CapExceeded {
                order: num_bigint::BigUint::from(m).pow(p as u32),
                cap: max_order(),
            })? as usize;
        let block = size / m;
        // index = y_1·m^{p−1} + rest; the shift moves y_1 to the end.
        let f = Permutation::from_fn(size, |x| (x % block) * m + x / block)?;
        let u = tensor_all(&bases);
        let r = f.compose(&u);
        if !f.pow(p as i64).is_identity() {
            return Err(Error::IdentityFailed(format!("F^{p} ≠ id")));
        }
        Ok(Model2System { p, bases, r, f })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn bases(&self) -> &[Permutation] {
        &self.bases
    }

    pub fn r(&self) -> &Permutation {
        &self.r
    }

    pub fn f(&self) -> &Permutation {
        &self.f
    }

    /// The same system as a `G_p` action with `R = S ∘ Φ`: `Φ = F` and
    /// `S = R ∘ F⁻¹`.
    pub fn gp_action(&self) -> Result<GpAction> {
        GpAction::new(self.p, self.r.compose(&self.f.inverse()), self.f.clone())
    }
}

/// Model 2 from `p` rotations of one finite group.
pub fn build_model2(bases: &[GroupRotation]) -> Result<Model2System> {
    let group = bases
        .first()
        .ok_or_else(|| Error::Mismatch("need at least one base".into()))?
        .group();
    if let Some(b) = bases.iter().find(|b| b.group() != group) {
        return Err(Error::Mismatch(format!(
            "base rotations act on different groups: {:?} vs {:?}",
            group.moduli(),
            b.group().moduli()
        )));
    }
    let perms = bases
        .iter()
        .map(GroupRotation::permutation)
        .collect::<Result<Vec<_>>>()?;
    Model2System::from_permutations(perms)
}

/// `S_j = F^{-j} ∘ R ∘ F^{j−1}` for `j = 1..=p`, after checking that they
/// commute pairwise and that `S_1 ∘ ⋯ ∘ S_p = R^p`.
pub fn sigma_family(system: &Model2System) -> Result<Vec<Permutation>> {
    let p = system.p as i64;
    let f = &system.f;
    let sigmas: Vec<Permutation> = (1..=p)
        .map(|j| f.pow(-j).compose(&system.r).compose(&f.pow(j - 1)))
        .collect();
    for i in 0..sigmas.len() {
        for j in i + 1..sigmas.len() {
            if !sigmas[i].commutes_with(&sigmas[j]) {
                return Err(Error::NotCommuting(format!("S_{} and S_{}", i + 1, j + 1)));
            }
        }
    }
    let product = sigmas
        .iter()
        .fold(Permutation::identity(f.len()), |acc, s| acc.compose(s));
    if let Some(x) = product.first_difference(&system.r.pow(p)) {
        return Err(Error::IdentityFailed(format!(
            "S_1⋯S_p ≠ R^{p} at point {x}"
        )));
    }
    Ok(sigmas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::FiniteAbelianGroup;
    use std::collections::BTreeMap;

    fn rot(m: u64, step: u64) -> GroupRotation {
        GroupRotation::new(FiniteAbelianGroup::new(vec![m]).unwrap(), vec![step]).unwrap()
    }

    fn cyc(m: usize, step: usize) -> Permutation {
        Permutation::from_fn(m, |x| (x + step) % m).unwrap()
    }

    #[test]
    fn swap_of_shifted_pairs() {
        let sys = build_model2(&[rot(3, 1), rot(3, 1)]).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(sys.r().apply(x * 3 + y), ((y + 1) % 3) * 3 + (x + 1) % 3);
            }
        }
        // (x, y) ↦ (y+1, x+1): the diagonal-ish orbits have length 3, the rest 6.
        assert_eq!(sys.r().cycle_type(), BTreeMap::from([(3, 1), (6, 1)]));
    }

    #[test]
    fn identity_bases_give_coordinate_swap() {
        let sys = build_model2(&[rot(3, 0), rot(3, 0)]).unwrap();
        assert_eq!(sys.r().cycle_type(), BTreeMap::from([(1, 3), (2, 3)]));
    }

    #[test]
    fn three_fold_on_z2() {
        let sys = build_model2(&[rot(2, 1), rot(2, 1), rot(2, 1)]).unwrap();
        assert_eq!(sys.r().len(), 8);
        assert!(sys.f().pow(3).is_identity());
        assert!(!sys.f().pow(1).is_identity());
    }

    #[test]
    fn mismatched_bases_rejected() {
        assert!(matches!(
            build_model2(&[rot(3, 1), rot(5, 1)]),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn sigma_examples() {
        let u = cyc(3, 1);
        let sys = Model2System::from_permutations(vec![u.clone(), u.clone()]).unwrap();
        let s = sigma_family(&sys).unwrap();
        assert_eq!(s[0], u.tensor(&u));
        assert_eq!(s[1], u.tensor(&u));

        let (u1, u2) = (cyc(5, 1), cyc(5, 2));
        let sys = Model2System::from_permutations(vec![u1.clone(), u2.clone()]).unwrap();
        let s = sigma_family(&sys).unwrap();
        assert_eq!(s[0], u1.tensor(&u2));
        assert_eq!(s[1], u2.tensor(&u1));

        let id = Permutation::identity(4);
        let sys = Model2System::from_permutations(vec![id.clone(), id.clone(), id]).unwrap();
        let s = sigma_family(&sys).unwrap();
        assert!(s.iter().all(Permutation::is_identity));
        assert!(sys.r().pow(3).is_identity());
    }

    #[test]
    fn square_is_crossed_tensor() {
        // R² = (U₂∘U₁) ⊗ (U₁∘U₂) for any bases; with U₁ = T, U₂ = id this is
        // the map (x, y) ↦ (y, Tx) whose square is T ⊗ T.
        let u1 = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let u2 = Permutation::from_images(vec![0, 2, 3, 1]).unwrap();
        let sys = Model2System::from_permutations(vec![u1.clone(), u2.clone()]).unwrap();
        assert_eq!(sys.r().pow(2), u2.compose(&u1).tensor(&u1.compose(&u2)));

        let t = cyc(5, 2);
        let sys =
            Model2System::from_permutations(vec![t.clone(), Permutation::identity(5)]).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(sys.r().apply(x * 5 + y), y * 5 + t.apply(x));
            }
        }
        assert_eq!(sys.r().pow(2), t.tensor(&t));
    }

    #[test]
    fn model2_is_a_gp_action() {
        let sys = build_model2(&[rot(3, 1), rot(3, 2), rot(3, 1)]).unwrap();
        let action = sys.gp_action().unwrap();
        assert_eq!(&action.rotation(), sys.r());
    }
}
