use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::angle::EigenvalueAngle;
use crate::error::{Error, Result};
use crate::models::{power, FiniteAbelianGroup, GroupRotation};
use crate::perm::{max_order, Permutation};

/// Eigenvalue → multiplicity for a unitary operator with pure point spectrum
/// on a finite-dimensional space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityProfile {
    entries: BTreeMap<EigenvalueAngle, u64>,
}

impl MultiplicityProfile {
    pub fn from_entries(entries: BTreeMap<EigenvalueAngle, u64>) -> Self {
        MultiplicityProfile {
            entries: entries.into_iter().filter(|&(_, m)| m > 0).collect(),
        }
    }

    pub fn entries(&self) -> &BTreeMap<EigenvalueAngle, u64> {
        &self.entries
    }

    pub fn multiplicity(&self, angle: &EigenvalueAngle) -> u64 {
        self.entries.get(angle).copied().unwrap_or(0)
    }

    /// Maximal spectral multiplicity.
    pub fn mm(&self) -> u64 {
        self.entries.values().copied().max().unwrap_or(0)
    }

    /// Distinct multiplicity values, ascending.
    pub fn multiplicity_set(&self) -> Vec<u64> {
        self.entries
            .values()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn cardm(&self) -> usize {
        self.multiplicity_set().len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.cardm() == 1
    }

    /// `Σ multiplicities`, the dimension of the space.
    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn distinct_eigenvalues(&self) -> usize {
        self.entries.len()
    }

    pub fn summary(&self) -> ProfileSummary {
        ProfileSummary {
            mm: BigUint::from(self.mm()),
            multiplicity_set: self
                .multiplicity_set()
                .into_iter()
                .map(BigUint::from)
                .collect(),
            dimension: BigUint::from(self.dimension()),
            distinct_eigenvalues: BigUint::from(self.distinct_eigenvalues()),
        }
    }
}

/// The derived quantities of a profile, in arbitrary precision so that
/// models too large to enumerate can still be described.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileSummary {
    pub mm: BigUint,
    pub multiplicity_set: Vec<BigUint>,
    pub dimension: BigUint,
    pub distinct_eigenvalues: BigUint,
}

impl ProfileSummary {
    pub fn cardm(&self) -> usize {
        self.multiplicity_set.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.cardm() == 1
    }
}

/// Spectrum of the permutation operator `f ↦ f ∘ σ`: each `L`-cycle
/// contributes every `L`-th root of unity once.
pub fn oracle_profile(perm: &Permutation) -> Result<MultiplicityProfile> {
    let cap = max_order();
    if perm.len() as u64 > cap {
        return Err(Error::CapExceeded {
            order: BigUint::from(perm.len()),
            cap,
        });
    }
    let mut entries = BTreeMap::new();
    for (len, count) in perm.cycle_type() {
        for j in 0..len as u64 {
            *entries
                .entry(EigenvalueAngle::new(j, len as u64))
                .or_insert(0) += count as u64;
        }
    }
    Ok(MultiplicityProfile { entries })
}

fn require_coprime(moduli: &[u64]) -> Result<()> {
    for (i, &a) in moduli.iter().enumerate() {
        for &b in &moduli[i + 1..] {
            if a.gcd(&b) != 1 {
                return Err(Error::NotCoprime(a, b));
            }
        }
    }
    Ok(())
}

/// Profile of `R^n` for the all-ones rotation on `∏ Z_{m_j}` with pairwise
/// coprime moduli: homogeneous of multiplicity `∏ gcd(n, m_j)`.
pub fn closed_form_profile(moduli: &[u64], n: u64) -> Result<MultiplicityProfile> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    require_coprime(moduli)?;
    let group = FiniteAbelianGroup::new(moduli.to_vec())?;
    let order = group.materializable_order()? as u64;
    let mult: u64 = moduli.iter().map(|&m| n.gcd(&m)).product();
    // The image of k ↦ k·n on Z_order is the subgroup of index `mult`.
    let distinct = order / mult;
    let entries = (0..distinct)
        .map(|j| (EigenvalueAngle::new(j, distinct), mult))
        .collect();
    Ok(MultiplicityProfile { entries })
}

/// `closed_form_profile` without enumerating eigenvalues.
pub fn closed_form_summary(moduli: &[BigUint], n: &BigUint) -> Result<ProfileSummary> {
    if n.to_u64() == Some(0) {
        return Err(Error::ZeroPower);
    }
    for (i, a) in moduli.iter().enumerate() {
        for b in &moduli[i + 1..] {
            if !a.gcd(b).is_one() {
                return Err(Error::NotCoprime(
                    a.to_u64().unwrap_or(u64::MAX),
                    b.to_u64().unwrap_or(u64::MAX),
                ));
            }
        }
    }
    let order: BigUint = moduli.iter().product();
    let mult: BigUint = moduli.iter().map(|m| n.gcd(m)).product();
    Ok(ProfileSummary {
        distinct_eigenvalues: &order / &mult,
        multiplicity_set: vec![mult.clone()],
        mm: mult,
        dimension: order,
    })
}

/// Compare `closed_form_profile` with `oracle_profile(R^n)` for every
/// `n` in `1..=max_n`; returns the powers where they disagree.
pub fn verify_closed_form_range(moduli: &[u64], max_n: u64) -> Result<Vec<u64>> {
    let group = FiniteAbelianGroup::new(moduli.to_vec())?;
    let rotation = GroupRotation::all_ones(group);
    let results: Vec<Result<Option<u64>>> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let oracle = oracle_profile(&power(&rotation, n)?.permutation()?)?;
            let closed = closed_form_profile(moduli, n)?;
            Ok((oracle != closed).then_some(n))
        })
        .collect();
    results.into_iter().filter_map(|r| r.transpose()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Characteristic polynomial of the permutation matrix by Faddeev–LeVerrier,
    // then split into cyclotomic factors: the exponent of Φ_d is the
    // multiplicity of every primitive d-th root of unity. Shares nothing with
    // the cycle-type path.
    fn charpoly(perm: &Permutation) -> Vec<i128> {
        let n = perm.len();
        let a: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| i128::from(perm.apply(j) == i)).collect())
            .collect();
        let mut coeffs = vec![0i128; n + 1];
        coeffs[n] = 1;
        let mut m = vec![vec![0i128; n]; n];
        for k in 1..=n {
            let mut next = vec![vec![0i128; n]; n];
            for i in 0..n {
                for j in 0..n {
                    next[i][j] = (0..n).map(|l| a[i][l] * m[l][j]).sum::<i128>();
                }
                next[i][i] += coeffs[n - k + 1];
            }
            m = next;
            let tr: i128 = (0..n)
                .map(|i| (0..n).map(|l| a[i][l] * m[l][i]).sum::<i128>())
                .sum();
            coeffs[n - k] = -tr / k as i128;
        }
        coeffs
    }

    fn div_exact(num: &[i128], den: &[i128]) -> Option<Vec<i128>> {
        let mut rem = num.to_vec();
        let dd = den.len() - 1;
        if rem.len() < den.len() {
            return None;
        }
        let mut q = vec![0i128; rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = rem[i + dd];
            q[i] = c;
            for j in 0..=dd {
                rem[i + j] -= c * den[j];
            }
        }
        rem.iter().all(|&c| c == 0).then_some(q)
    }

    fn cyclotomic(d: usize) -> Vec<i128> {
        let mut p = vec![0i128; d + 1];
        p[0] = -1;
        p[d] = 1;
        for e in 1..d {
            if d.is_multiple_of(e) {
                p = div_exact(&p, &cyclotomic(e)).unwrap();
            }
        }
        p
    }

    fn charpoly_profile(perm: &Permutation) -> BTreeMap<EigenvalueAngle, u64> {
        let mut poly = charpoly(perm);
        let mut out = BTreeMap::new();
        for d in 1..=perm.len() {
            let phi = cyclotomic(d);
            let mut e = 0;
            while let Some(q) = div_exact(&poly, &phi) {
                poly = q;
                e += 1;
            }
            if e > 0 {
                for k in (0..d as u64).filter(|k| k.gcd(&(d as u64)) == 1) {
                    out.insert(EigenvalueAngle::new(k, d as u64), e);
                }
            }
        }
        assert_eq!(poly, vec![1]);
        out
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn identity_and_single_cycle() {
        let p = oracle_profile(&Permutation::identity(5)).unwrap();
        assert_eq!(p.mm(), 5);
        assert_eq!(p.distinct_eigenvalues(), 1);

        let c7 = Permutation::from_fn(7, |x| (x + 1) % 7).unwrap();
        let p = oracle_profile(&c7).unwrap();
        assert_eq!(p.distinct_eigenvalues(), 7);
        assert_eq!(p.mm(), 1);
        assert!(p.is_homogeneous());
    }

    #[test]
    fn cycle_type_2_2_3() {
        let perm = Permutation::from_images(vec![1, 0, 3, 2, 5, 6, 4]).unwrap();
        let expected = charpoly_profile(&perm);
        let a = |k, l| EigenvalueAngle::new(k, l);
        assert_eq!(
            expected,
            BTreeMap::from([(a(0, 1), 3), (a(1, 2), 2), (a(1, 3), 1), (a(2, 3), 1)])
        );
        let p = oracle_profile(&perm).unwrap();
        assert_eq!(p.entries(), &expected);
        assert_eq!(p.mm(), 3);
        assert_eq!(p.cardm(), 3);
        assert_eq!(p.multiplicity_set(), vec![1, 2, 3]);
        assert_eq!(p.dimension(), 7);
    }

    #[test]
    fn closed_form_examples() {
        let p = closed_form_profile(&[2, 3, 5], 6).unwrap();
        assert_eq!(p.mm(), 6);
        assert_eq!(p.distinct_eigenvalues(), 5);
        assert!(p.is_homogeneous());
        assert_eq!(p.dimension(), 30);

        let p = closed_form_profile(&[2, 3, 5], 1).unwrap();
        assert_eq!(p.mm(), 1);
        assert_eq!(p.distinct_eigenvalues(), 30);

        let p = closed_form_profile(&[2, 3, 5], 7).unwrap();
        assert_eq!(p.mm(), 1);
        assert_eq!(
            verify_closed_form_range(&[2, 3, 5], 30).unwrap(),
            Vec::<u64>::new()
        );
    }

    #[test]
    fn closed_form_refuses_common_factors() {
        assert_eq!(
            closed_form_profile(&[4, 6], 2),
            Err(Error::NotCoprime(4, 6))
        );
        assert_eq!(closed_form_profile(&[4, 3], 0), Err(Error::ZeroPower));
    }

    #[test]
    fn summary_matches_enumeration() {
        let moduli = [8u64, 3, 25];
        let big: Vec<BigUint> = moduli.iter().map(|&m| BigUint::from(m)).collect();
        for n in 1..=60u64 {
            assert_eq!(
                closed_form_summary(&big, &BigUint::from(n)).unwrap(),
                closed_form_profile(&moduli, n).unwrap().summary()
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = FiniteAbelianGroup::new(vec![1009, 1013]).unwrap();
        assert!(matches!(
            closed_form_profile(g.moduli(), 1),
            Err(Error::CapExceeded { .. })
        ));
    }

    proptest! {
        #[test]
        fn oracle_matches_characteristic_polynomial(perm in arb_perm(10)) {
            let profile = oracle_profile(&perm).unwrap();
            prop_assert_eq!(profile.entries(), &charpoly_profile(&perm));
        }

        #[test]
        fn power_multiplicity_bound(perm in arb_perm(64), n in 1i64..=32) {
            let base = oracle_profile(&perm).unwrap().mm();
            let pow = oracle_profile(&perm.pow(n)).unwrap().mm();
            prop_assert!(pow <= n as u64 * base);
        }

        #[test]
        fn conjugation_invariance(perm in arb_perm(30), seed in any::<u64>()) {
            let n = perm.len();
            let mut images: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                images.swap(i, (s >> 33) as usize % (i + 1));
            }
            let pi = Permutation::from_images(images).unwrap();
            let conj = pi.inverse().compose(&perm).compose(&pi);
            prop_assert_eq!(oracle_profile(&conj).unwrap(), oracle_profile(&perm).unwrap());
        }

        #[test]
        fn tensor_multiplicativity_on_coprime_orders(
            a in proptest::collection::vec(prop_oneof![Just(1usize), Just(2), Just(4)], 1..8),
            b in proptest::collection::vec(prop_oneof![Just(1usize), Just(3), Just(9)], 1..8),
        ) {
            let from_cycles = |lens: &[usize]| {
                let mut images = Vec::new();
                for &l in lens {
                    let base = images.len();
                    images.extend((0..l).map(|i| base + (i + 1) % l));
                }
                Permutation::from_images(images).unwrap()
            };
            let (s, t) = (from_cycles(&a), from_cycles(&b));
            let mm = |p: &Permutation| oracle_profile(p).unwrap().mm();
            prop_assert_eq!(mm(&s.tensor(&t)), mm(&s) * mm(&t));
        }
    }
}
