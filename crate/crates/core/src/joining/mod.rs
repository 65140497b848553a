//! Self-joinings of factors, multi-valued graphs and Markov operator
//! decompositions, all in exact rational arithmetic.

mod graphs;
mod markov;
mod matrix;

pub use graphs::{
    fundamental_domain, graph_disjointness, multivalued_graph_check, off_diagonal_joining,
    DisjointnessVerdict, JoiningMatrix, MultiValuedGraph,
};
pub use markov::{
    adjoint_decompositions, compose, markov_decompose, AdjointDecompositions, MarkovDecomposition,
};
pub use matrix::{polynomial_operator, uniform_average, RationalMatrix};
