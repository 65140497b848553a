use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `P(T) = Σ a_i T^i` with `a_i ≥ 0` and `Σ a_i = 1`: the admissible
/// weak limits of powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePolynomial {
    coefficients: BTreeMap<u32, BigRational>,
}

impl AdmissiblePolynomial {
    pub fn coefficients(&self) -> &BTreeMap<u32, BigRational> {
        &self.coefficients
    }

    /// The identity limit `I`.
    pub fn identity() -> Self {
        AdmissiblePolynomial {
            coefficients: BTreeMap::from([(0, BigRational::one())]),
        }
    }
}

pub fn admissible_check(coefficients: BTreeMap<u32, BigRational>) -> Result<AdmissiblePolynomial> {
    if let Some((&degree, value)) = coefficients.iter().find(|(_, a)| a.is_negative()) {
        return Err(Error::NegativeCoefficient {
            degree,
            value: value.to_string(),
        });
    }
    let sum = coefficients
        .values()
        .fold(BigRational::zero(), |acc, a| acc + a);
    if !sum.is_one() {
        return Err(Error::SumNotOne {
            sum: sum.to_string(),
        });
    }
    let coefficients = coefficients
        .into_iter()
        .filter(|(_, a)| !a.is_zero())
        .collect();
    Ok(AdmissiblePolynomial { coefficients })
}
