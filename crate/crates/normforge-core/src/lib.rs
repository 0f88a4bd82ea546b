//! Exact combinatorics of equivariant operads over small finite groups.
//!
//! The library builds finite groups as multiplication tables, enumerates
//! transfer systems on their subgroup lattices, and realizes each transfer
//! system as a suboperad of an operad coinduced from an intersection monoid.
//! Every verdict is exact: rational arithmetic is arbitrary precision,
//! membership checks are full scans, and positive/negative answers carry
//! machine-checkable certificates.
//!
//! Module map:
//! - [`group`]: multiplication-table groups, subgroup lattices, conjugation.
//! - [`perm`]: permutations with operadic partial composition.
//! - [`transfer`]: transfer systems, indexing systems, enumeration, lattice ops.
//! - [`monoid`]: intersection monoids (dyadic words, rational cube embeddings,
//!   fat dyadic points, trivial).
//! - [`coinduced`]: tables `G x [n] -> M` with operad structure, disjointness
//!   predicates, the orbit-labelling constructor, fixed-point decisions.
//! - [`graphs`]: the indexing operad of simple graphs on `G x [n]`, twist
//!   maps, transfer support, the projection from tables to graphs.
//! - [`realize`]: end-to-end realization engine and reference reproductions.
//! - [`suites`]: seeded randomized law suites over the two operads.
//! - [`report`]: JSON certificates for all engine verdicts.
//! - [`dot`]: DOT renderings of Hasse diagrams and index graphs.

pub mod coinduced;
pub mod dot;
pub mod graphs;
pub mod group;
pub mod monoid;
pub mod perm;
pub mod realize;
pub mod report;
pub mod suites;
pub mod transfer;

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("invalid transfer pair: {0}")]
    InvalidTransferPair(String),
    #[error("invalid monoid value: {0}")]
    InvalidMonoidValue(String),
    #[error("trivial monoid has no disjointness witness")]
    TrivialMonoid,
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(String),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
