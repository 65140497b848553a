//! Rigidity and weak-limit conditions, verified as exact operator equality
//! on the truncated algebras.
//!
//! On a truncation the power `R^k` of the all-ones rotation depends only on
//! `k` modulo the truncation order, so along a progression the operators
//! repeat with a period. A stage holds for every member iff it holds on one
//! full period; when it holds the period is 1, and when it fails some member
//! among the first two fails. Checking `min(period, MAX_CHECKS)` members
//! therefore decides the claim for the whole progression.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arithmetic::{refine_progression, solve_alignment, ArithmeticProgression};
use crate::error::{Error, Result};
use crate::models::{truncate, ProductModel};
use crate::perm::{tensor_all, Permutation};

const MAX_CHECKS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexVerdict {
    pub n: BigUint,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageCertificate {
    pub stage: usize,
    pub progression: ArithmeticProgression,
    /// First member `n ≥ 1` from which the claim is checked.
    pub threshold: Option<BigUint>,
    pub limit: String,
    pub verdicts: Vec<IndexVerdict>,
    pub holds: bool,
    /// True when the progression is empty and the claim holds vacuously.
    pub vacuous: bool,
    /// Failed auxiliary identity, if any (first witness).
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WLCertificate {
    pub level: usize,
    pub stages: Vec<StageCertificate>,
}

impl WLCertificate {
    pub fn holds(&self) -> bool {
        self.stages.iter().all(|s| s.holds)
    }

    pub fn vacuous(&self) -> bool {
        self.stages.iter().all(|s| s.vacuous)
    }
}

fn to_u64(n: &BigUint) -> u64 {
    n.to_u64().expect("reduced below a materialized order")
}

/// Whether `R^n → I` along `progression` on the level-`k` algebra.
pub fn check_rigidity(
    model: &ProductModel,
    progression: &ArithmeticProgression,
    level: usize,
) -> Result<WLCertificate> {
    let (_, rotation) = truncate(model, level)?;
    let order = model.truncation_order(level)?;
    let r = rotation.permutation()?;
    let identity = Permutation::identity(r.len());

    let mut stage = StageCertificate {
        stage: 1,
        progression: progression.clone(),
        threshold: None,
        limit: "I".into(),
        verdicts: Vec::new(),
        holds: true,
        vacuous: progression.is_empty(),
        note: None,
    };
    if progression.is_empty() {
        return Ok(WLCertificate {
            level,
            stages: vec![stage],
        });
    }
    let threshold = progression
        .first_at_least(&BigUint::one())
        .expect("non-empty progression");
    let period = &order / progression.modulus().gcd(&order);
    let checks = period.to_usize().map_or(MAX_CHECKS, |p| p.min(MAX_CHECKS));
    let mut n = threshold.clone();
    for _ in 0..checks {
        let holds = r.pow(to_u64(&(&n % &order)) as i64) == identity;
        stage.verdicts.push(IndexVerdict {
            n: n.clone(),
            holds,
        });
        n += progression.modulus();
    }
    stage.holds = stage.verdicts.iter().all(|v| v.holds);
    debug_assert_eq!(
        stage.holds,
        (progression.residue() % &order).is_zero() && (progression.modulus() % &order).is_zero()
    );
    stage.threshold = Some(threshold);
    Ok(WLCertificate {
        level,
        stages: vec![stage],
    })
}

/// Progressions for stages `2..=k` of the weak-limit chain.
///
/// Stage `j` asks for `(R_1⊗…⊗R_j)^{P·n} = I⊗…⊗I⊗R_j` with
/// `P = p_1⋯p_{j−1}`. Its progression is the rigidity progression of
/// `R_1, …, R_{j−1}` (multiples of each truncation order) refined by the
/// alignment `P·n = p_j·ñ + 1`, where `ñ` must also be a rigidity time of
/// `T_j = R_j^{p_j}`; together that is `P·n ≡ 1 (mod lcm(p_j, L_j))`.
/// An unsolvable stage yields the empty progression.
pub fn wl_progressions(
    models: &[ProductModel],
    primes: &[u64],
    level: usize,
) -> Result<Vec<ArithmeticProgression>> {
    if models.len() != primes.len() {
        return Err(Error::Mismatch(format!(
            "{} models but {} primes",
            models.len(),
            primes.len()
        )));
    }
    let orders = models
        .iter()
        .map(|m| m.truncation_order(level))
        .collect::<Result<Vec<_>>>()?;
    let mut rigid = ArithmeticProgression::all();
    let mut prefix = BigUint::one();
    let mut out = Vec::new();
    for j in 1..models.len() {
        rigid = refine_progression(
            &rigid,
            &ArithmeticProgression::multiples_of(orders[j - 1].clone()),
        );
        prefix *= primes[j - 1];
        let modulus = BigUint::from(primes[j]).lcm(&orders[j]);
        let stage = match solve_alignment(&prefix, &modulus) {
            Ok(sol) => refine_progression(&rigid, sol.progression()),
            Err(_) => ArithmeticProgression::empty(),
        };
        out.push(stage);
    }
    Ok(out)
}

/// Verify each stage of the weak-limit chain on the product of the level-`k`
/// truncations. `progressions[j−2]` drives stage `j`; with a single model
/// there is nothing to check.
pub fn check_wl(
    models: &[ProductModel],
    primes: &[u64],
    progressions: &[ArithmeticProgression],
    level: usize,
) -> Result<WLCertificate> {
    if models.len() != primes.len() || progressions.len() + 1 != models.len().max(1) {
        return Err(Error::Mismatch(format!(
            "{} models, {} primes, {} stage progressions",
            models.len(),
            primes.len(),
            progressions.len()
        )));
    }
    let mut rotations = Vec::new();
    let mut orders = Vec::new();
    for m in models {
        let (_, r) = truncate(m, level)?;
        rotations.push(r.permutation()?);
        orders.push(m.truncation_order(level)?);
    }
    let mut stages = Vec::new();
    if models.len() == 1 {
        stages.push(StageCertificate {
            stage: 1,
            progression: ArithmeticProgression::all(),
            threshold: None,
            limit: "R_1".into(),
            verdicts: Vec::new(),
            holds: true,
            vacuous: true,
            note: None,
        });
    }
    let mut prefix = BigUint::one();
    for (idx, progression) in progressions.iter().enumerate() {
        let j = idx + 2;
        prefix *= primes[j - 2];
        if progression.is_empty() {
            return Err(Error::EmptyProgression(j));
        }
        stages.push(check_stage(
            j,
            &rotations[..j],
            &orders[..j],
            primes,
            &prefix,
            progression,
        )?);
    }
    Ok(WLCertificate { level, stages })
}

fn check_stage(
    stage: usize,
    rotations: &[Permutation],
    orders: &[BigUint],
    primes: &[u64],
    prefix: &BigUint,
    progression: &ArithmeticProgression,
) -> Result<StageCertificate> {
    let last = stage - 1;
    let product = tensor_all(rotations);
    let exponent = orders.iter().fold(BigUint::one(), |acc, o| acc.lcm(o));
    let mut limit_factors: Vec<Permutation> = rotations[..last]
        .iter()
        .map(|r| Permutation::identity(r.len()))
        .collect();
    limit_factors.push(rotations[last].clone());
    let limit = tensor_all(&limit_factors);

    let threshold = progression
        .first_at_least(&BigUint::one())
        .expect("non-empty progression");
    let period = &exponent / (prefix * progression.modulus()).gcd(&exponent);
    let checks = period.to_usize().map_or(MAX_CHECKS, |p| p.min(MAX_CHECKS));

    let pow_mod =
        |perm: &Permutation, k: &BigUint, order: &BigUint| perm.pow(to_u64(&(k % order)) as i64);
    let mut verdicts = Vec::new();
    let mut note = None;
    let mut n = threshold.clone();
    for _ in 0..checks {
        let k = prefix * &n;
        let holds = pow_mod(&product, &k, &exponent) == limit;
        verdicts.push(IndexVerdict {
            n: n.clone(),
            holds,
        });
        if note.is_none() {
            note = decomposition_failure(rotations, orders, primes, prefix, &n);
        }
        n += progression.modulus();
    }
    let mut claim: Vec<String> = (1..stage).map(|_| "I".to_string()).collect();
    claim.push(format!("R_{stage}"));
    Ok(StageCertificate {
        stage,
        progression: progression.clone(),
        threshold: Some(threshold),
        limit: claim.join("⊗"),
        holds: verdicts.iter().all(|v| v.holds) && note.is_none(),
        verdicts,
        vacuous: false,
        note,
    })
}

/// `R_i^{P·n} = T_i^{(P/p_i)·n}` for the earlier factors and
/// `R_j^{P·n} = T_j^{ñ} ∘ R_j` for the last, with `T_i = R_i^{p_i}` and
/// `P·n = p_j·ñ + 1`.
fn decomposition_failure(
    rotations: &[Permutation],
    orders: &[BigUint],
    primes: &[u64],
    prefix: &BigUint,
    n: &BigUint,
) -> Option<String> {
    let last = rotations.len() - 1;
    let k = prefix * n;
    let pow =
        |perm: &Permutation, e: &BigUint, order: &BigUint| perm.pow(to_u64(&(e % order)) as i64);
    for i in 0..last {
        let t = rotations[i].pow(primes[i] as i64);
        let lhs = pow(&rotations[i], &k, &orders[i]);
        let rhs = pow(&t, &(prefix / primes[i] * n), &orders[i]);
        if lhs != rhs {
            return Some(format!(
                "R_{0}^(P·n) ≠ T_{0}^((P/p_{0})·n) at n = {n}",
                i + 1
            ));
        }
    }
    let (companion, rem) = (&k - 1u32).div_rem(&BigUint::from(primes[last]));
    if !rem.is_zero() {
        return Some(format!("p_{} does not divide P·n − 1 at n = {n}", last + 1));
    }
    let t = rotations[last].pow(primes[last] as i64);
    let lhs = pow(&rotations[last], &k, &orders[last]);
    let rhs = pow(&t, &companion, &orders[last]).compose(&rotations[last]);
    (lhs != rhs).then(|| format!("R_{0}^(P·n) ≠ T_{0}^ñ ∘ R_{0} at n = {n}", last + 1))
}
