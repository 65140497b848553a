use num_bigint::BigInt;
use num_rational::BigRational;

use super::matrix::RationalMatrix;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Canonical fundamental domain of a free action of `Φ` with `Φ^p = id`:
/// the least point of each orbit, ascending. Every orbit must have exactly
/// `p` points.
pub fn fundamental_domain(phi: &Permutation, p: usize) -> Result<Vec<usize>> {
    if !phi.pow(p as i64).is_identity() {
        return Err(Error::NoFundamentalDomain(format!("Φ^{p} ≠ id")));
    }
    let mut domain = Vec::new();
    for cycle in phi.cycles() {
        if cycle.len() != p {
            return Err(Error::NoFundamentalDomain(format!(
                "Φ-orbit of {} has {} points, expected {p}",
                cycle[0],
                cycle.len()
            )));
        }
        domain.push(cycle[0]);
    }
    Ok(domain)
}

/// Map every point to the index (within `domain`) of its orbit representative.
fn orbit_index(phi: &Permutation) -> (Vec<usize>, Vec<usize>) {
    let mut index = vec![usize::MAX; phi.len()];
    let mut reps = Vec::new();
    for cycle in phi.cycles() {
        for &x in &cycle {
            index[x] = reps.len();
        }
        reps.push(cycle[0]);
    }
    (reps, index)
}

/// The self-joining of the factor `X/Φ` carried by a permutation `R`
/// commuting with the factor's transformation `T`:
/// `ν(A × B) = μ(A ∩ R⁻¹B)` for `Φ`-invariant `A`, `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoiningMatrix {
    /// Orbit representatives, one per factor point.
    pub domain: Vec<usize>,
    /// `weights[(a, b)] = ν(a × b)`; rows and columns sum to `1/|domain|`.
    pub weights: RationalMatrix,
    /// The factor transformation `T̃` as a permutation of domain indices.
    pub factor_map: Permutation,
}

impl JoiningMatrix {
    /// The Markov operator `J = |D|·ν`, doubly stochastic.
    pub fn markov_operator(&self) -> RationalMatrix {
        self.weights
            .scale(&BigRational::from_integer(BigInt::from(self.domain.len())))
    }

    /// The largest number of points any fibre of the joining is spread over.
    pub fn valuedness(&self) -> usize {
        (0..self.domain.len())
            .map(|a| self.weights.row_support(a))
            .max()
            .unwrap_or(0)
    }

    /// `ν(T̃a × T̃b) = ν(a × b)` for all factor points.
    pub fn verify_invariance(&self) -> Result<()> {
        let n = self.domain.len();
        for a in 0..n {
            for b in 0..n {
                let (ta, tb) = (self.factor_map.apply(a), self.factor_map.apply(b));
                if self.weights[(ta, tb)] != self.weights[(a, b)] {
                    return Err(Error::IdentityFailed(format!(
                        "ν(T̃a × T̃b) ≠ ν(a × b) at a = {}, b = {}",
                        self.domain[a], self.domain[b]
                    )));
                }
            }
        }
        Ok(())
    }
}

pub fn off_diagonal_joining(
    phi: &Permutation,
    t: &Permutation,
    r: &Permutation,
) -> Result<JoiningMatrix> {
    let size = phi.len();
    if t.len() != size || r.len() != size {
        return Err(Error::Mismatch("Φ, T and R act on different spaces".into()));
    }
    if !t.commutes_with(phi) {
        return Err(Error::NotCommuting(
            "T does not preserve the Φ-invariant sets".into(),
        ));
    }
    if !r.commutes_with(t) {
        return Err(Error::NotCommuting("R does not commute with T".into()));
    }
    let (domain, index) = orbit_index(phi);
    let mut weights = RationalMatrix::zeros(domain.len())?;
    let atom = BigRational::new(BigInt::from(1), BigInt::from(size));
    for x in 0..size {
        weights[(index[x], index[r.apply(x)])] += &atom;
    }
    let factor_map = Permutation::from_images(domain.iter().map(|&a| index[t.apply(a)]).collect())?;
    let marginal = BigRational::new(BigInt::from(1), BigInt::from(domain.len()));
    weights.check_marginals(&marginal)?;
    Ok(JoiningMatrix {
        domain,
        weights,
        factor_map,
    })
}

/// `x ↦ (Φ^{n_1(x)}R x, …, Φ^{n_p(x)}RΦ^{p−1} x) ∈ D^p` over a fundamental
/// domain `D`, with the coincidences found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiValuedGraph {
    pub domain: Vec<usize>,
    /// `graph[i]` holds the `p` image points of `domain[i]`.
    pub graph: Vec<Vec<usize>>,
    /// `(x, j, k)`: the `j`-th and `k`-th images of `x` coincide.
    pub coincidences: Vec<(usize, usize, usize)>,
}

impl MultiValuedGraph {
    pub fn all_distinct(&self) -> bool {
        self.coincidences.is_empty()
    }
}

pub fn multivalued_graph_check(
    phi: &Permutation,
    r: &Permutation,
    p: usize,
) -> Result<MultiValuedGraph> {
    if phi.len() != r.len() {
        return Err(Error::Mismatch("Φ and R act on different spaces".into()));
    }
    let domain = fundamental_domain(phi, p)?;
    let (_, index) = orbit_index(phi);
    let mut graph = Vec::with_capacity(domain.len());
    let mut coincidences = Vec::new();
    for &x in &domain {
        let images: Vec<usize> = (0..p as i64)
            .map(|j| domain[index[r.apply(phi.pow(j).apply(x))]])
            .collect();
        for j in 0..p {
            for k in j + 1..p {
                if images[j] == images[k] {
                    coincidences.push((x, j, k));
                }
            }
        }
        graph.push(images);
    }
    Ok(MultiValuedGraph {
        domain,
        graph,
        coincidences,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointnessVerdict {
    /// `(i, j, witness)` for every pair whose graphs meet at `witness`.
    pub overlaps: Vec<(usize, usize, usize)>,
}

impl DisjointnessVerdict {
    pub fn disjoint(&self) -> bool {
        self.overlaps.is_empty()
    }
}

/// Pairwise graph disjointness of permutations commuting with an ergodic
/// (single-cycle) rotation.
pub fn graph_disjointness(
    rotation: &Permutation,
    perms: &[Permutation],
) -> Result<DisjointnessVerdict> {
    if rotation.cycles().len() != 1 {
        return Err(Error::Mismatch("rotation is not ergodic".into()));
    }
    if let Some(i) = perms.iter().position(|p| !p.commutes_with(rotation)) {
        return Err(Error::NotCommuting(format!(
            "permutation {i} and the rotation"
        )));
    }
    let mut overlaps = Vec::new();
    for i in 0..perms.len() {
        for j in i + 1..perms.len() {
            if let Some(x) = (0..rotation.len()).find(|&x| perms[i].apply(x) == perms[j].apply(x)) {
                overlaps.push((i, j, x));
                // Commuting with an ergodic rotation makes a permutation a
                // power of it, so one shared point forces equality.
                debug_assert_eq!(perms[i], perms[j]);
            }
        }
    }
    Ok(DisjointnessVerdict { overlaps })
}
