//! Normal forms in G_p and a concrete permutation action that respects them.

use speclab::models::{gp_reduce, parse_word, GpAction};
use speclab::Permutation;

fn main() -> speclab::Result<()> {
    let p = 3;
    for text in ["fff", "sfsFSfSF", "fsFsFSfS", "ssfSSF"] {
        let w = parse_word(text)?;
        println!("{text:<10} ↦ {}", gp_reduce(p, &w));
    }

    let base = Permutation::from_fn(4, |x| (x + 1) % 4)?;
    let action = GpAction::cyclic_extension(p, &base)?;
    let w = parse_word("sfSFsffS")?;
    let g = gp_reduce(p, &w);
    assert_eq!(action.evaluate(&g), action.evaluate_word(&w));
    assert_eq!(gp_reduce(p, &g.to_word()), g);
    println!(
        "on {} points the action agrees with the normal form {}",
        action.s().len(),
        g
    );
    Ok(())
}
