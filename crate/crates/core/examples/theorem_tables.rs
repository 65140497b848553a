//! Maximal spectral multiplicities and multiplicity sets of powers as
//! functions of which primes of the set divide the power.

use num_bigint::BigUint;
use speclab::arithmetic::PrimeSpec;
use speclab::spectral::{
    hm_prime_powers, mm_theorem4, multiplicity_set_theorem5, theorem4_example,
};

fn main() -> speclab::Result<()> {
    let spec = PrimeSpec::square_free(vec![2, 3, 5])?;
    println!("{:>4} {:>4} {:>4}  set", "N", "mm", "hm");
    for n in [1u64, 2, 6, 7, 10, 30, 31, 60, 210] {
        let big = BigUint::from(n);
        let set: Vec<String> = multiplicity_set_theorem5(&big, &spec)?
            .iter()
            .map(|v| v.to_string())
            .collect();
        println!(
            "{n:>4} {:>4} {:>4}  {{{}}}",
            mm_theorem4(&big, &spec)?,
            hm_prime_powers(&big, &spec)?,
            set.join(", ")
        );
    }

    // N = p_1⋯p_k + 1 can itself be a prime of the set.
    let spec = PrimeSpec::square_free(vec![2, 3, 7, 43])?;
    for k in 1..=3 {
        let ex = theorem4_example(&spec, k)?;
        println!(
            "k = {k}: N = {}, hypothesis {}, mm = {}, coprime to P: {}",
            ex.n, ex.hypothesis_holds, ex.formula_value, ex.coprime_to_p
        );
    }
    Ok(())
}
