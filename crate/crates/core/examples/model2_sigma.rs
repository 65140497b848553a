//! Model 2: R = F ∘ (U_1 ⊗ … ⊗ U_p) on Y^p, its commuting family S_j and
//! the identity S_1 ⋯ S_p = R^p.

use speclab::models::{build_model2, sigma_family, FiniteAbelianGroup, GroupRotation};
use speclab::spectral::oracle_profile;

fn main() -> speclab::Result<()> {
    let group = FiniteAbelianGroup::new(vec![3, 5])?;
    let bases = vec![
        GroupRotation::new(group.clone(), vec![1, 1])?,
        GroupRotation::new(group.clone(), vec![1, 2])?,
        GroupRotation::new(group, vec![2, 3])?,
    ];
    let system = build_model2(&bases)?;
    let sigmas = sigma_family(&system)?;
    println!(
        "p = {}, |X| = {}, {} commuting S_j with S_1⋯S_p = R^p",
        system.p(),
        system.r().len(),
        sigmas.len()
    );

    let r = oracle_profile(system.r())?;
    let rp = oracle_profile(&system.r().pow(system.p() as i64))?;
    println!("mm(R) = {}, mm(R^p) = {}", r.mm(), rp.mm());
    system.gp_action()?;
    println!("(S = R∘F⁻¹, Φ = F) satisfies the G_p relations");
    Ok(())
}
