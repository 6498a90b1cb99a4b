//! Algebraic invariants of graph edge ideals.
//!
//! The crate decides, over an exact coefficient field, whether the quotient by
//! the edge ideal of a simple graph is Cohen-Macaulay or sequentially
//! Cohen-Macaulay, working through Alexander duality, componentwise linearity,
//! and graded Betti numbers computed from upper Koszul simplicial complexes.
//!
//! The main entry points are [`scm::classify`] for a full report on one graph
//! and the `edge-ideals` binary for command-line use.

pub mod cli;
pub mod complex;
pub mod error;
pub mod graph;
pub mod ideal;
mod linalg;
pub mod resolution;
pub mod scm;

pub use complex::{FieldSpec, SimplicialComplex};
pub use error::Error;
pub use graph::Graph;
pub use ideal::{Monomial, MonomialIdeal};
pub use resolution::BettiTable;
pub use scm::Classification;
