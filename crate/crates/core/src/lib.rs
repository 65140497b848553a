//! Exact spectral multiplicities for discrete-spectrum models of
//! measure-preserving transformations and all of their powers.
//!
//! Every automorphism here is a permutation of a finite uniform space, so
//! its Koopman operator is a permutation matrix and every spectral claim is
//! decidable by enumeration. The crate is organized as:
//!
//! - [`arithmetic`]: factorization against a prime set, the alignment
//!   congruence `a·n = b·ñ + 1`, progression intersection.
//! - [`models`]: group rotations, truncated product models, multiplier
//!   automorphisms, the group `G_p` and the coordinate-shift model.
//! - [`spectral`]: the cycle-type eigenvalue oracle, closed-form rotation
//!   profiles, the multiplicity formulas for powers, rigidity and
//!   weak-limit certificates.
//! - [`joining`]: off-diagonal joinings, multi-valued graphs and Markov
//!   operator decompositions in exact rational arithmetic.
//! - [`report`] and [`cli`]: tables and the `speclab` command line.
//!
//! See `examples/` for one runnable program per capability.

pub mod arithmetic;
pub mod cli;
pub mod error;
pub mod joining;
pub mod models;
pub mod perm;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use perm::Permutation;
