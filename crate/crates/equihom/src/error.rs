//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("group closure exceeded the order cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("label {vertex} outside the ground range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("element {element} does not belong to the face")]
    ElementNotInFace { element: usize },
    #[error("permutation is not a simplicial automorphism")]
    NotAnAutomorphism,
    #[error("ground set too large for subset enumeration (n = {n})")]
    AmbientTooLarge { n: usize },
    #[error("bases violate the exchange axiom: {detail}")]
    ExchangeAxiomViolation { detail: String },
    #[error("a matroid needs at least one basis")]
    EmptyBasisList,
    #[error("matroid is not simple; simplify it first")]
    NotSimple,
    #[error("not a lattice: {detail}")]
    NotALattice { detail: String },
    #[error("the given element set is not a cross-cut")]
    NotACrosscut,
    #[error("elements are not comparable")]
    NotComparable,
    #[error("action does not preserve the order relation")]
    ActionNotOrderPreserving,
    #[error("homology is not concentrated in degree {degree}: betti {betti:?}")]
    HomologyNotConcentrated { degree: i32, betti: Vec<(i32, usize)> },
    #[error("partitions have different sizes: {left} vs {right}")]
    PartitionMismatch { left: usize, right: usize },
    #[error("not a character: {detail}")]
    NotACharacter { detail: String },
    #[error("characters live on different groups")]
    GroupMismatch,
    #[error("subgroup elements are not contained in the group")]
    NotASubgroup,
    #[error("the two methods disagree at degree {degree}, class {class}")]
    MethodDisagreement { degree: i32, class: String },
    #[error("equivariant duality fails at degree {degree}, class {class}")]
    DualityViolation {
        degree: i32,
        class: String,
        report: Box<crate::verify::ComparisonReport>,
    },
    #[error("cross-cut comparison fails at degree {degree}, class {class}")]
    CrosscutTheoremViolation {
        degree: i32,
        class: String,
        report: Box<crate::verify::ComparisonReport>,
    },
    #[error("matroid comparison fails at degree {degree}, class {class}")]
    MainTheoremViolation {
        degree: i32,
        class: String,
        report: Box<crate::verify::ComparisonReport>,
    },
    #[error("arrangement comparison fails at degree {degree}, class {class}")]
    ArrangementTheoremViolation {
        degree: i32,
        class: String,
        report: Box<crate::verify::ComparisonReport>,
    },
}
