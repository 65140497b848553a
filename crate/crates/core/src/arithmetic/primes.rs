use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The prime set `P = {p_1 < p_2 < …}` together with exponents `d_j ≥ 1`.
///
/// The exponents only matter for the prime-power rotation models; the
/// theorem functions look at the primes alone.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeSpec {
    primes: Vec<u64>,
    exponents: Vec<u32>,
}

impl PrimeSpec {
    pub fn new(primes: Vec<u64>, exponents: Vec<u32>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::InvalidPrimeSpec("prime list is empty".into()));
        }
        if primes.len() != exponents.len() {
            return Err(Error::InvalidPrimeSpec(format!(
                "{} primes but {} exponents",
                primes.len(),
                exponents.len()
            )));
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::InvalidPrimeSpec(format!("{p} is not prime")));
        }
        if let Some(w) = primes.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPrimeSpec(format!(
                "primes must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidPrimeSpec("exponents must be ≥ 1".into()));
        }
        Ok(PrimeSpec { primes, exponents })
    }

    /// All exponents equal to one.
    pub fn square_free(primes: Vec<u64>) -> Result<Self> {
        let exponents = vec![1; primes.len()];
        Self::new(primes, exponents)
    }

    pub fn uniform(primes: Vec<u64>, exponent: u32) -> Result<Self> {
        let exponents = vec![exponent; primes.len()];
        Self::new(primes, exponents)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// `p_j^{d_j}` for every entry.
    pub fn prime_powers(&self) -> Vec<BigUint> {
        self.primes
            .iter()
            .zip(&self.exponents)
            .map(|(&p, &d)| num_traits::pow(BigUint::from(p), d as usize))
            .collect()
    }
}

/// `N = q · ∏ p_{k_i}^{e_i}` with `q` coprime to every prime of the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub hits: Vec<(u64, u32)>,
    pub residual: BigUint,
}

impl Factorization {
    pub fn hit_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.hits.iter().map(|&(p, _)| p)
    }

    pub fn reassemble(&self) -> BigUint {
        self.hits
            .iter()
            .fold(self.residual.clone(), |acc, &(p, e)| {
                acc * num_traits::pow(BigUint::from(p), e as usize)
            })
    }
}

/// Split `n` into the part supported on the primes of `spec` and the
/// coprime residual.
pub fn factor_against(n: &BigUint, spec: &PrimeSpec) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroPower);
    }
    let mut residual = n.clone();
    let mut hits = Vec::new();
    for &p in spec.primes() {
        let big_p = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (quot, rem) = residual.div_rem(&big_p);
            if !rem.is_zero() {
                break;
            }
            residual = quot;
            e += 1;
        }
        if e > 0 {
            hits.push((p, e));
        }
    }
    Ok(Factorization { hits, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn miller_rabin_agrees_with_trial_division() {
        let trial = |n: u64| {
            n >= 2
                && (2..)
                    .take_while(|d| d * d <= n)
                    .all(|d| !n.is_multiple_of(d))
        };
        for n in 0..20_000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
        assert!(is_prime(2011));
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
    }

    #[test]
    fn spec_validation() {
        assert!(PrimeSpec::square_free(vec![2, 3, 5]).is_ok());
        assert!(PrimeSpec::square_free(vec![]).is_err());
        assert!(PrimeSpec::square_free(vec![2, 4]).is_err());
        assert!(PrimeSpec::square_free(vec![3, 2]).is_err());
        assert!(PrimeSpec::square_free(vec![3, 3]).is_err());
        assert!(PrimeSpec::new(vec![2, 3], vec![1]).is_err());
        assert!(PrimeSpec::new(vec![2, 3], vec![1, 0]).is_err());
    }

    #[test]
    fn factor_examples() {
        let spec = PrimeSpec::square_free(vec![2, 5, 11]).unwrap();
        let f = factor_against(&big(20), &spec).unwrap();
        assert_eq!(f.hits, vec![(2, 2), (5, 1)]);
        assert_eq!(f.residual, big(1));

        let f = factor_against(&big(1), &spec).unwrap();
        assert!(f.hits.is_empty());
        assert_eq!(f.residual, big(1));

        let spec = PrimeSpec::square_free(vec![2, 3, 11]).unwrap();
        let f = factor_against(&big(7), &spec).unwrap();
        assert!(f.hits.is_empty());
        assert_eq!(f.residual, big(7));

        assert_eq!(factor_against(&big(0), &spec), Err(Error::ZeroPower));
    }

    #[test]
    fn factor_round_trip() {
        let specs = [
            PrimeSpec::square_free(vec![2, 3, 5]).unwrap(),
            PrimeSpec::square_free(vec![3, 7, 11, 13]).unwrap(),
            PrimeSpec::new(vec![2, 5, 97], vec![4, 2, 1]).unwrap(),
        ];
        for spec in &specs {
            for n in 1..=100_000u64 {
                let f = factor_against(&big(n), spec).unwrap();
                assert_eq!(f.reassemble(), big(n));
                for &p in spec.primes() {
                    assert_ne!(&f.residual % p, big(0));
                }
                assert!(f.hits.windows(2).all(|w| w[0].0 < w[1].0));
            }
        }
    }
}
