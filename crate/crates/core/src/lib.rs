//! Exact squared analytic torsion of graphs and simplicial complexes.

pub mod canon;
pub mod chain;
pub mod complex;
pub mod constructors;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod serial;
pub mod spectral;
pub mod topology;
pub mod torsion;
pub mod trees;
pub mod wu;

pub use chain::{build_chain, sign, BettiVector, ChainData, GradedChain};
pub use complex::{
    clique_complex, complex_from_facets, dual_graph, parity_simplex_graph, FVector, Parity, Simplex, SimplicialComplex,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use linalg::ExactMatrix;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
