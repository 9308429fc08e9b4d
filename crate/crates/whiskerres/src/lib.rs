//! Exact combinatorics and commutative algebra for cover ideals of whiskered
//! graph families.
//!
//! The crate builds finite simple graphs and their whiskered variants
//! (clique-whiskered, multi-clique-whiskered, clique corona, Cohen-Macaulay
//! chordal and Cameron-Walker decompositions, very well-covered expansions),
//! materializes explicit multigraded free resolutions of the associated cover
//! ideals, and verifies every closed-form invariant against brute-force
//! simplicial oracles computed in exact arithmetic over Q, GF(2) and GF(3).
//!
//! No floating point is used anywhere: Betti numbers, homology dimensions and
//! Hilbert series coefficients are integers and are computed as such.

pub mod bits;
pub mod constructions;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod corpus;
pub mod graph;
pub mod hochster;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod resolution;
pub mod schema;
pub mod simplicial;
pub mod vertex_decomposable;

pub use graph::{CliquePartition, CoverFamily, Graph, GraphError};
pub use hochster::{BettiTable, PoleSeries, TableConvention};
pub use linalg::Field;
pub use simplicial::SimplicialComplex;

/// Version tag stamped on every JSON artifact.
pub const SCHEMA_TAG: &str = "whiskerres/1";
