//! Prime-power models where hm(R^n) = n up to a prime target and then
//! drops to 1, with and without the cyclic factor of the target itself.

use speclab::arithmetic::PrimeSpec;
use speclab::spectral::{hm_prime_powers_u64, prime_power_comparison};

fn main() -> speclab::Result<()> {
    let scaled = PrimeSpec::uniform(vec![2, 3, 5, 7, 11, 13], 4)?;
    let values: Vec<u64> = (1..=17)
        .map(|n| hm_prime_powers_u64(n, &scaled))
        .collect::<speclab::Result<_>>()?;
    println!("hm(R^n), n = 1..17: {values:?}");

    for (target, exponent) in [(17, 4), (2011, 10)] {
        let c = prime_power_comparison(target, exponent)?;
        println!("\ntarget {target}, exponent {exponent}:");
        for (name, cfg) in [
            ("with Z_target", &c.with_target),
            ("without", &c.without_target),
        ] {
            println!(
                "  {name:<14} {} primes, hm(R^n) = n below target: {}, hm(R^{target}) = {}",
                cfg.spec.len(),
                cfg.prefix_ok(),
                cfg.hm_at_target
            );
        }
        println!("  configurations disagree: {}", c.discrepancy());
    }
    Ok(())
}
