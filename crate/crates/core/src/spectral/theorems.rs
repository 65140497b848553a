use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;

use crate::arithmetic::{factor_against, is_prime, PrimeSpec};
use crate::error::{Error, Result};

/// `mm(R^N) = ∏ p` over the primes of `P` dividing `N`; `1` when `N ⊥ P`.
pub fn mm_theorem4(n: &BigUint, spec: &PrimeSpec) -> Result<BigUint> {
    let f = factor_against(n, spec)?;
    Ok(f.hit_primes().map(BigUint::from).product())
}

/// All subset products of the primes of `P` dividing `N`, ascending.
/// There are exactly `2^m` of them for `m` hit primes.
pub fn multiplicity_set_theorem5(n: &BigUint, spec: &PrimeSpec) -> Result<Vec<BigUint>> {
    let f = factor_against(n, spec)?;
    let mut set = vec![BigUint::one()];
    for p in f.hit_primes() {
        let extended: Vec<BigUint> = set.iter().map(|s| s * p).collect();
        set.extend(extended);
    }
    set.sort();
    Ok(set)
}

/// `hm(R^N) = ∏_j gcd(N, p_j^{d_j})` for the rotation on `∏ Z_{p_j^{d_j}}`.
pub fn hm_prime_powers(n: &BigUint, spec: &PrimeSpec) -> Result<BigUint> {
    let f = factor_against(n, spec)?;
    Ok(f.hits
        .iter()
        .map(|&(p, e)| {
            let idx = spec
                .primes()
                .binary_search(&p)
                .expect("hit prime is in the spec");
            num_traits::pow(BigUint::from(p), e.min(spec.exponents()[idx]) as usize)
        })
        .product())
}

/// `hm_prime_powers` for machine-size `N` (the result divides `N`).
pub fn hm_prime_powers_u64(n: u64, spec: &PrimeSpec) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let mut rest = n;
    let mut out = 1u64;
    for (&p, &d) in spec.primes().iter().zip(spec.exponents()) {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            if e < d {
                out *= p;
            }
            e += 1;
        }
        if rest == 1 {
            break;
        }
    }
    Ok(out)
}

/// One distinct value of `hm(R^n)/n` with the first `n` attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LimitPoint {
    pub value: Ratio<u64>,
    pub witness: u64,
}

/// Distinct values of `hm(R^n)/n` for `1 ≤ n ≤ horizon`, ascending.
pub fn ratio_scan(spec: &PrimeSpec, horizon: u64) -> Result<Vec<LimitPoint>> {
    if horizon == 0 {
        return Err(Error::ZeroPower);
    }
    let mut seen: BTreeMap<Ratio<u64>, u64> = BTreeMap::new();
    for n in 1..=horizon {
        let value = Ratio::new(hm_prime_powers_u64(n, spec)?, n);
        seen.entry(value).or_insert(n);
    }
    Ok(seen
        .into_iter()
        .map(|(value, witness)| LimitPoint { value, witness })
        .collect())
}

/// `N = p_1⋯p_k + 1` evaluated against the formula, with the coprimality
/// check reported separately: the hypothesis `p_{k+1} > p_1⋯p_k` does not
/// stop `N` itself from lying in `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem4Example {
    pub n: BigUint,
    pub hypothesis_holds: bool,
    pub formula_value: BigUint,
    pub coprime_to_p: bool,
}

pub fn theorem4_example(spec: &PrimeSpec, k: usize) -> Result<Theorem4Example> {
    if k == 0 || k > spec.len() {
        return Err(Error::LevelOutOfRange {
            level: k,
            depth: spec.len(),
        });
    }
    let primorial: BigUint = spec.primes()[..k]
        .iter()
        .map(|&p| BigUint::from(p))
        .product();
    let hypothesis_holds = spec
        .primes()
        .get(k)
        .is_none_or(|&next| BigUint::from(next) > primorial);
    let n = primorial + 1u32;
    let f = factor_against(&n, spec)?;
    Ok(Theorem4Example {
        formula_value: f.hit_primes().map(BigUint::from).product(),
        coprime_to_p: f.hits.is_empty(),
        hypothesis_holds,
        n,
    })
}

/// One configuration of the prime-power construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerConfig {
    pub spec: PrimeSpec,
    /// First `n` below the target with `hm(R^n) ≠ n`, if any.
    pub first_prefix_failure: Option<u64>,
    pub hm_at_target: u64,
}

impl PrimePowerConfig {
    pub fn prefix_ok(&self) -> bool {
        self.first_prefix_failure.is_none()
    }
}

/// The construction aiming at `hm(R^n) = n` for `n < target` and
/// `hm(R^target) = 1`, for a prime target: every prime below the target
/// gets exponent `exponent`. `with_target` additionally includes
/// `Z_target` with exponent one, as displayed in the original space;
/// `without_target` omits it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePowerComparison {
    pub target: u64,
    pub with_target: PrimePowerConfig,
    pub without_target: PrimePowerConfig,
}

impl PrimePowerComparison {
    /// Whether the two configurations disagree at the target.
    pub fn discrepancy(&self) -> bool {
        self.with_target.hm_at_target != self.without_target.hm_at_target
    }
}

pub fn prime_power_comparison(target: u64, exponent: u32) -> Result<PrimePowerComparison> {
    if !is_prime(target) {
        return Err(Error::InvalidPrimeSpec(format!(
            "target {target} is not prime"
        )));
    }
    let below: Vec<u64> = (2..target).filter(|&p| is_prime(p)).collect();
    let evaluate = |spec: PrimeSpec| -> Result<PrimePowerConfig> {
        let mut first_prefix_failure = None;
        for n in 1..target {
            if hm_prime_powers_u64(n, &spec)? != n {
                first_prefix_failure = Some(n);
                break;
            }
        }
        Ok(PrimePowerConfig {
            hm_at_target: hm_prime_powers_u64(target, &spec)?,
            first_prefix_failure,
            spec,
        })
    };
    let without = if below.is_empty() {
        // Only the target prime 2: the space below it is trivial.
        PrimePowerConfig {
            spec: PrimeSpec::new(vec![target], vec![1])?,
            first_prefix_failure: None,
            hm_at_target: 1,
        }
    } else {
        evaluate(PrimeSpec::uniform(below.clone(), exponent)?)?
    };
    let mut primes = below.clone();
    primes.push(target);
    let mut exponents = vec![exponent; below.len()];
    exponents.push(1);
    let with = evaluate(PrimeSpec::new(primes, exponents)?)?;
    Ok(PrimePowerComparison {
        target,
        with_target: with,
        without_target: without,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn sf(primes: &[u64]) -> PrimeSpec {
        PrimeSpec::square_free(primes.to_vec()).unwrap()
    }

    #[test]
    fn theorem4_examples() {
        let spec = sf(&[2, 3]);
        assert_eq!(mm_theorem4(&big(6), &spec).unwrap(), big(6));
        assert_eq!(mm_theorem4(&big(35), &spec).unwrap(), big(1));
        assert_eq!(mm_theorem4(&big(8 * 3 * 7), &spec).unwrap(), big(6));
        assert_eq!(mm_theorem4(&big(1), &spec).unwrap(), big(1));
        assert!(mm_theorem4(&big(0), &spec).is_err());
    }

    #[test]
    fn theorem5_examples() {
        let spec = sf(&[2, 3, 5, 7]);
        assert_eq!(
            multiplicity_set_theorem5(&big(15), &spec).unwrap(),
            vec![big(1), big(3), big(5), big(15)]
        );
        assert_eq!(
            multiplicity_set_theorem5(&big(11 * 13), &spec).unwrap(),
            vec![big(1)]
        );
        // Subset enumeration by bitmask as the independent count.
        let hits = [2u64, 5, 7];
        let mut brute: Vec<BigUint> = (0..8u32)
            .map(|mask| {
                hits.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| big(p))
                    .product()
            })
            .collect();
        brute.sort();
        assert_eq!(
            multiplicity_set_theorem5(&big(4 * 5 * 49), &spec).unwrap(),
            brute
        );
    }

    #[test]
    fn hm_examples() {
        let spec = PrimeSpec::uniform(vec![2, 3, 5, 7, 11, 13], 4).unwrap();
        assert_eq!(hm_prime_powers(&big(12), &spec).unwrap(), big(12));
        assert_eq!(hm_prime_powers(&big(17), &spec).unwrap(), big(1));
        assert_eq!(hm_prime_powers(&big(1), &spec).unwrap(), big(1));
        assert_eq!(hm_prime_powers(&big(64), &spec).unwrap(), big(16));
        for n in 1..=3000u64 {
            assert_eq!(
                big(hm_prime_powers_u64(n, &spec).unwrap()),
                hm_prime_powers(&big(n), &spec).unwrap()
            );
        }
    }

    #[test]
    fn hm_ignores_coprime_factors() {
        let spec = PrimeSpec::new(vec![2, 3, 5], vec![3, 2, 1]).unwrap();
        for n in 1..300u64 {
            for m in [1u64, 7, 11, 49, 77, 13 * 17] {
                assert_eq!(
                    hm_prime_powers_u64(n * m, &spec).unwrap(),
                    hm_prime_powers_u64(n, &spec).unwrap()
                );
            }
        }
    }

    #[test]
    fn hm_prime_power_monotonicity() {
        for &(p, d) in &[(2u64, 6u32), (3, 4), (5, 3), (7, 2)] {
            let spec = PrimeSpec::new(vec![p], vec![d]).unwrap();
            for top in 1..=d + 2 {
                if hm_prime_powers_u64(p.pow(top), &spec).unwrap() == p.pow(top) {
                    for m in 0..top {
                        assert_eq!(hm_prime_powers_u64(p.pow(m), &spec).unwrap(), p.pow(m));
                    }
                }
            }
        }
    }

    #[test]
    fn ratio_scan_examples() {
        let spec = sf(&[2, 3, 5]);
        let pts = ratio_scan(&spec, 30).unwrap();
        let find = |v: Ratio<u64>| pts.iter().find(|p| p.value == v).map(|p| p.witness);
        assert_eq!(find(Ratio::new(1, 1)), Some(1));
        assert_eq!(find(Ratio::new(1, 7)), Some(7));
        // n = 30 attains mm = 30, i.e. ratio 1, but n = 1 witnessed it first.
        assert_eq!(hm_prime_powers_u64(30, &spec).unwrap(), 30);
        assert!(pts.windows(2).all(|w| w[0].value < w[1].value));
        let one = ratio_scan(&spec, 1).unwrap();
        assert_eq!(
            one,
            vec![LimitPoint {
                value: Ratio::new(1, 1),
                witness: 1
            }]
        );
    }

    #[test]
    fn ratio_scan_hits_every_outside_prime() {
        let spec = sf(&[2, 3, 5, 7, 11]);
        let pts = ratio_scan(&spec, 97).unwrap();
        for q in (13..=97).filter(|&q| is_prime(q)) {
            assert!(
                pts.iter().any(|p| p.value == Ratio::new(1, q)),
                "missing 1/{q}"
            );
        }
    }

    #[test]
    fn primorial_successor_can_lie_in_p() {
        let spec = sf(&[2, 3, 7, 11]);
        let ex = theorem4_example(&spec, 2).unwrap();
        assert_eq!(ex.n, big(7));
        assert!(ex.hypothesis_holds);
        assert!(!ex.coprime_to_p);
        assert_eq!(ex.formula_value, big(7));

        let spec = sf(&[2, 3, 11]);
        let ex = theorem4_example(&spec, 2).unwrap();
        assert!(ex.coprime_to_p);
        assert_eq!(ex.formula_value, big(1));
    }

    #[test]
    fn scaled_prime_power_comparison() {
        let c = prime_power_comparison(17, 4).unwrap();
        assert_eq!(c.without_target.spec.primes(), &[2, 3, 5, 7, 11, 13]);
        assert!(c.without_target.prefix_ok());
        assert_eq!(c.without_target.hm_at_target, 1);
        assert!(c.with_target.prefix_ok());
        assert_eq!(c.with_target.hm_at_target, 17);
        assert!(c.discrepancy());

        let c = prime_power_comparison(17, 3).unwrap();
        assert_eq!(c.without_target.first_prefix_failure, Some(16));
    }
}
