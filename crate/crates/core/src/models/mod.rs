//! Concrete finite systems: rotations of finite abelian groups, truncated
//! product models, multiplier automorphisms, the group `G_p` and the
//! coordinate-shift model built from `p` base rotations.

mod gp;
mod group;
mod model2;
mod multiplier;
mod specfile;

pub use gp::{gp_reduce, parse_word, GpAction, GpLetter, GpNormalForm};
pub use group::{power, truncate, FiniteAbelianGroup, GroupRotation, ProductModel};
pub use model2::{build_model2, sigma_family, Model2System};
pub use multiplier::{multiplier_for, MultiplierAutomorphism};
pub use specfile::parse_model_spec;
