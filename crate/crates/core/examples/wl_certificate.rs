//! Weak-limit chain certificates on products of truncated models.

use speclab::arithmetic::ArithmeticProgression;
use speclab::models::ProductModel;
use speclab::spectral::{check_rigidity, check_wl, wl_progressions};

fn main() -> speclab::Result<()> {
    let models = vec![
        ProductModel::from_u64_moduli(&[7, 11])?,
        ProductModel::from_u64_moduli(&[13, 17])?,
        ProductModel::from_u64_moduli(&[19, 23])?,
    ];
    let primes = [2, 3, 5];
    let progressions = wl_progressions(&models, &primes, 1)?;
    let cert = check_wl(&models, &primes, &progressions, 1)?;
    for stage in &cert.stages {
        println!(
            "stage {}: n ∈ {}, limit {}, {} indices checked, holds = {}",
            stage.stage,
            stage.progression,
            stage.limit,
            stage.verdicts.len(),
            stage.holds
        );
    }

    // Powers along the wrong progression are not rigid.
    let rigid = check_rigidity(&models[0], &ArithmeticProgression::new(1u32, 7u32), 1)?;
    println!("R_1^n → I along 1 mod 7: {}", rigid.holds());
    let rigid = check_rigidity(&models[0], &ArithmeticProgression::multiples_of(7u32), 1)?;
    println!("R_1^n → I along 0 mod 7: {}", rigid.holds());
    Ok(())
}
