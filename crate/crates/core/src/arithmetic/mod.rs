//! Exact number theory behind every model: factorization against a prime
//! set, the congruence `a·n = b·ñ + 1`, progression intersection and
//! admissible polynomials.

mod polynomial;
mod primes;
mod progression;

pub use polynomial::{admissible_check, AdmissiblePolynomial};
pub use primes::{factor_against, is_prime, Factorization, PrimeSpec};
pub use progression::{
    mod_inverse, refine_progression, solve_alignment, AlignmentSolution, ArithmeticProgression,
};
