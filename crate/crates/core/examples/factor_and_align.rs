//! Factor integers against a prime set and solve the alignment
//! congruence `a·n = b·ñ + 1` that drives the weak-limit chains.

use num_bigint::BigUint;
use speclab::arithmetic::{
    factor_against, refine_progression, solve_alignment, ArithmeticProgression, PrimeSpec,
};

fn main() -> speclab::Result<()> {
    let spec = PrimeSpec::square_free(vec![2, 3, 5])?;
    for n in [1u64, 6, 7, 30, 360, 1001] {
        let f = factor_against(&BigUint::from(n), &spec)?;
        println!("{n:>5} = {:?} · {}", f.hits, f.residual);
    }

    let (a, b) = (BigUint::from(2u32), BigUint::from(3u32));
    let sol = solve_alignment(&a, &b)?;
    println!(
        "\n2n = 3ñ + 1 along n ∈ {} (n ≥ {})",
        sol.progression(),
        sol.n_min()
    );
    for n in sol.progression().iter().take(4) {
        println!("  n = {n}, ñ = {}", sol.companion(&n)?);
    }

    // Combine with rigidity of a model of order 35.
    let refined = refine_progression(
        sol.progression(),
        &ArithmeticProgression::multiples_of(35u32),
    );
    println!("refined against multiples of 35: {refined}");
    let clash = refine_progression(
        &ArithmeticProgression::new(1u32, 4u32),
        &ArithmeticProgression::new(0u32, 2u32),
    );
    println!("1 mod 4 ∩ 0 mod 2 = {clash}");
    Ok(())
}
