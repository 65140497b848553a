//! Exact spectral multiplicities of permutation operators and the
//! arithmetic multiplicity formulas for powers of the product models.

mod angle;
mod profile;
mod rigidity;
mod theorems;

pub use angle::EigenvalueAngle;
pub use profile::{
    closed_form_profile, closed_form_summary, oracle_profile, verify_closed_form_range,
    MultiplicityProfile, ProfileSummary,
};
pub use rigidity::{
    check_rigidity, check_wl, wl_progressions, IndexVerdict, StageCertificate, WLCertificate,
};
pub use theorems::{
    hm_prime_powers, hm_prime_powers_u64, mm_theorem4, multiplicity_set_theorem5,
    prime_power_comparison, ratio_scan, theorem4_example, LimitPoint, PrimePowerComparison,
    PrimePowerConfig, Theorem4Example,
};
