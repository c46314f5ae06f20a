//! Exact equivariant homology for simplicial complexes, matroids, and
//! geometric lattices.
//!
//! The crate computes reduced rational homology of finite simplicial
//! complexes together with the action a permutation group induces on it,
//! reports the resulting characters exactly (rational or cyclotomic
//! values, never floats), and cross-checks the classical comparison
//! isomorphisms between the independence complex of a dual matroid, the
//! non-spanning complex of the matroid, and the order complex of its
//! lattice of flats.

pub mod character;
pub mod cyclotomic;
pub mod error;
pub mod homology;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod partition;
pub mod perm;
pub mod pipelines;
pub mod simplicial;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use character::Character;
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use homology::{betti, GradedCharacter, Method};
pub use lattice::{FiniteLattice, FlatsLattice};
pub use linalg::{Rat, RationalMatrix};
pub use matroid::Matroid;
pub use partition::Partition;
pub use perm::{FiniteGroup, Permutation};
pub use simplicial::{Face, SimplicialComplex};
pub use verify::ComparisonReport;
