//! The multiplier automorphism Ψ_q conjugating R to R^q, and the resulting
//! equality of spectral profiles.

use speclab::arithmetic::PrimeSpec;
use speclab::models::{multiplier_for, truncate, ProductModel};
use speclab::spectral::oracle_profile;

fn main() -> speclab::Result<()> {
    let model = ProductModel::from_spec(PrimeSpec::square_free(vec![5, 11, 13])?, None)?;
    let (group, rotation) = truncate(&model, 3)?;
    let r = rotation.permutation()?;
    let profile = oracle_profile(&r)?;
    for q in [2u64, 3, 7] {
        let psi = multiplier_for(&model, q, 3)?;
        psi.verify_automorphism()?;
        psi.verify_conjugation(&rotation, q)?;
        let same = oracle_profile(&r.pow(q as i64))? == profile;
        println!(
            "q = {q}: coefficients {:?} on {:?}, Ψ⁻¹RΨ = R^q, equal profiles: {same}",
            psi.coefficients(),
            group.moduli()
        );
    }
    match multiplier_for(&model, 5, 3) {
        Ok(_) => println!("q = 5 unexpectedly invertible"),
        Err(e) => println!("q = 5: {e}"),
    }
    Ok(())
}
