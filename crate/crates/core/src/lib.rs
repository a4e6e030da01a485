//! Gentle algebras `KQ/I` with length-2 monomial relations.
//!
//! Provides exact scalars, sparse vectors and echelon forms, quivers and
//! paths, validation of the gentle conditions, the path basis, the
//! substitution `p^(a,q)`, parallel and cyclic pairs, spanning-tree cycle
//! bases and an exhaustive corpus of small presentations.

pub mod catalog;
pub mod corpus;
pub mod cycles;
pub mod error;
pub mod field;
pub mod gentle;
pub mod linalg;
pub mod pairs;
pub mod quiver;
pub mod sparse;

pub use cycles::{fundamental_cycles, CycleBasis};
pub use error::QuiverError;
pub use field::{Field, Scalar};
pub use gentle::{validate_gentle, validate_named, GentlePresentation, Relation};
pub use pairs::{cyclic_pairs, parallel_pairs, Pair};
pub use quiver::{Arrow, Path, Quiver};
pub use sparse::SparseVector;
