//! Off-diagonal joinings of a factor, their multi-valued graphs, and the
//! decomposition J*J = (1/n)I + (1 − 1/n)Q.

use speclab::joining::{
    adjoint_decompositions, graph_disjointness, multivalued_graph_check, off_diagonal_joining,
    uniform_average,
};
use speclab::models::GpAction;
use speclab::Permutation;

fn rotation(n: usize, k: usize) -> Permutation {
    Permutation::from_fn(n, |x| (x + k) % n).unwrap()
}

fn main() -> speclab::Result<()> {
    // A rotation commuting with Φ preserves the factor: single-valued.
    let (phi, r) = (rotation(15, 5), rotation(15, 1));
    let g = multivalued_graph_check(&phi, &r, 3)?;
    println!(
        "Z_15, Φ = +5, R = +1: graph {:?}, coincidences {}",
        g.graph,
        g.coincidences.len()
    );

    for p in [2, 3] {
        let action = GpAction::cyclic_extension(p, &rotation(3, 1))?;
        let (phi, r, t) = (action.phi(), action.rotation(), action.t());
        let g = multivalued_graph_check(phi, &r, p)?;
        let nu = off_diagonal_joining(phi, &t, &r)?;
        nu.verify_invariance()?;
        let d = adjoint_decompositions(&nu.markov_operator())?;
        println!(
            "extension p = {p}: {} domain points, distinct images: {}, ν is {}-valued, J*J α = {}, JJ* α = {}",
            g.domain.len(),
            g.all_distinct(),
            nu.valuedness(),
            d.star_j.alpha,
            d.j_star.alpha
        );
    }

    let shifts = [1, 2, 4];
    let perms: Vec<Permutation> = shifts.iter().map(|&k| rotation(7, k)).collect();
    println!(
        "\nZ_7 shifts {shifts:?} disjoint: {}",
        graph_disjointness(&rotation(7, 1), &perms)?.disjoint()
    );
    let j = uniform_average(&perms)?;
    let d = adjoint_decompositions(&j)?;
    println!("J*J = {}·I + … with Q:", d.star_j.alpha);
    print!("{}", d.star_j.remainder.expect("α < 1").dump());
    Ok(())
}
