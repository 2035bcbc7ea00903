//! Workbench for finite graded commutative algebra.
//!
//! The crate builds finite abelian groups, finite commutative unital rings,
//! gradings of rings and modules by a finite abelian group, and the lattice of
//! graded submodules. On top of that it computes the pseudo weakly prime
//! spectrum of a graded module, materializes its Zariski closed-set family as
//! an explicit finite topological space, and runs a registry of theorem checks
//! by exhaustive enumeration.
//!
//! Everything is exact and deterministic: elements are dense integer codes,
//! substructures are canonical sorted code sets, and every predicate that can
//! fail returns a concrete witness.

pub mod codeset;
pub mod finite_algebra;
pub mod graded;
pub mod instance;
pub mod predicates;
pub mod spectrum;
pub mod topology;
pub mod verify;

pub use codeset::CodeSet;
pub use finite_algebra::{AxiomReport, Code, FiniteAbelianGroup, FiniteCommRing};
pub use graded::{GradedIdeal, GradedModule, GradedRing, GradedSubmodule, HomogeneousElement};
pub use spectrum::Spectrum;
pub use topology::{FiniteTopologySpace, ZariskiSpace};

use thiserror::Error;

/// Errors surfaced by constructions, loaders and analysis entry points.
///
/// Axiom *failures* discovered by the checkers are data ([`AxiomReport`]),
/// not errors; `Error` is for inputs that cannot be processed at all.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size bound exceeded: {what} has {size} elements, bound is {bound}")]
    SizeBound {
        what: &'static str,
        size: u64,
        bound: u64,
    },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("the zero ring is not admitted as a base for graded structures")]
    ZeroRing,

    #[error("subset is not a graded {kind}: {reason}")]
    NotGraded { kind: &'static str, reason: String },

    #[error("ideal must be proper: {0}")]
    NotProper(String),

    #[error("structure axiom violated: {0}")]
    AxiomViolation(String),

    #[error("the spectrum is empty")]
    EmptySpectrum,

    #[error("module is not weakly topological: closed-set family is not union-stable, witness semiprime pair {p} , {q}")]
    NotTopological { p: CodeSet, q: CodeSet },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown instance name: {0}")]
    UnknownName(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
