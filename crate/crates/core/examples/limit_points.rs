//! Distinct values of hm(R^n)/n: every prime outside the set contributes
//! its own limit point 1/q.

use speclab::arithmetic::{is_prime, PrimeSpec};
use speclab::spectral::ratio_scan;

fn main() -> speclab::Result<()> {
    let spec = PrimeSpec::square_free(vec![2, 3, 5])?;
    let points = ratio_scan(&spec, 10_000)?;
    println!(
        "{} distinct values of hm(R^n)/n for n ≤ 10000",
        points.len()
    );
    for lp in points.iter().rev().take(12) {
        println!("  {:>6} first at n = {}", lp.value.to_string(), lp.witness);
    }
    let missing: Vec<u64> = (7..=97)
        .filter(|&q| is_prime(q))
        .filter(|&q| {
            !points
                .iter()
                .any(|lp| *lp.value.numer() == 1 && *lp.value.denom() == q)
        })
        .collect();
    println!("primes q ≤ 97 outside P without 1/q: {missing:?}");
    Ok(())
}
