//! Homological and group-theoretic checks on the ambient manifold.
//!
//! Base groups of circle bundles are free groups with an orientation
//! character per generator; the bundle extension is taken to be split, so
//! the fiber only interacts with the base through the character.

mod abelian;
mod bundle;
mod condition;
mod words;

use thiserror::Error;

pub use abelian::{euler_realizable, FgAbelianGroup};
pub use bundle::{bundle_mul, check_toughandtechnical, BundleGroupElement, TtOutcome, TtWitness};
pub use condition::{
    condition_star, ManifoldDescriptor, ManifoldFlags, Rule, StarOutcome, TorusRecord,
};
pub use words::{alpha_nu, nu_equivalent, Alphabet, NuOutcome, Word, WordPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("element has {found} coordinates, the group has {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid word {0:?}")]
    InvalidWord(String),
    #[error("letter {letter} is outside an alphabet of rank {rank}")]
    RankExceeded { letter: char, rank: usize },
    #[error("elements use different generator alphabets")]
    AlphabetMismatch,
    #[error("the base word of alpha is trivial")]
    TrivialBase,
    #[error("alpha and beta do not commute")]
    NotCommuting,
    #[error("inconsistent descriptor: {0}")]
    InconsistentDescriptor(String),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
}
