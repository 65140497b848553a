//! Spectral multiplicity profiles of powers of an odometer-like rotation,
//! from the gcd closed form and from cycle counting on the permutation.

use speclab::models::{truncate, ProductModel};
use speclab::spectral::{closed_form_profile, oracle_profile, verify_closed_form_range};

fn main() -> speclab::Result<()> {
    let moduli = [8u64, 3, 25];
    let model = ProductModel::from_u64_moduli(&moduli)?;
    let (_, rotation) = truncate(&model, 3)?;
    let r = rotation.permutation()?;

    println!("{:>3} {:>4} {:>6} {:>10}", "n", "mm", "dim", "eigvals");
    for n in [1u64, 2, 4, 5, 10, 12, 40, 600] {
        let closed = closed_form_profile(&moduli, n)?;
        let oracle = oracle_profile(&r.pow(n as i64))?;
        assert_eq!(closed, oracle);
        println!(
            "{n:>3} {:>4} {:>6} {:>10}",
            closed.mm(),
            closed.dimension(),
            closed.distinct_eigenvalues()
        );
    }

    let mismatches = verify_closed_form_range(&moduli, 100)?;
    println!(
        "closed form vs oracle for n ≤ 100: {} mismatches",
        mismatches.len()
    );
    Ok(())
}
