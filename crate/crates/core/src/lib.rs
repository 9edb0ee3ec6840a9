//! Exact Schur multiplier dimensions for finite-dimensional Lie algebras
//! over the rationals, together with the classical upper bounds on them and
//! the dimension inequalities for pairs and triples of ideals.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod homology;
pub mod io;
pub mod lie;
pub mod ratlin;
pub mod relative;

pub use homology::multiplier_dim;
pub use lie::{LieAlgebra, StructuralProfile};
pub use ratlin::{Matrix, Rational, Subspace};
