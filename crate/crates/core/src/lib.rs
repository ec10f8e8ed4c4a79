//! Exact decision procedures for separation axioms on finite topological
//! spaces, with exhaustive verification of the implications between them.
//!
//! A [`FiniteSpace`] stores its open sets as bitmask [`PointSet`]s. The
//! axioms are decided pointwise by [`check_axiom`]; [`miner`] enumerates
//! every topology on up to five points to verify the implication
//! [`diagram`] and to find minimal separating examples.

pub mod algebras;
pub mod axioms;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod json;
pub mod miner;
pub mod operators;
pub mod pointset;
pub mod props;
pub mod space;

pub use algebras::{GeneratedAlgebra, SetFamily};
pub use axioms::{check_axiom, classify_point, classify_space, AxiomId, AxiomVector, PointClass};
pub use catalog::{catalog, CatalogEntry};
pub use error::{SpaceError, TopologyDefect};
pub use miner::{MinerError, WitnessReport};
pub use pointset::PointSet;
pub use space::{FiniteSpace, Preorder};
