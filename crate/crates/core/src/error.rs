use thiserror::Error;

use crate::rootsys::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {label}{rank}; supported: A1-A7, B2-B5, C2-C5, D3-D5, G2")]
    UnsupportedRootSystem { label: String, rank: usize },

    #[error("weight has {got} coordinates, root system has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("operation requires a type A root system")]
    NotTypeA,

    #[error("length condition violated: l(w3) = {l3} but l(w1) + l(w2) = {sum}")]
    LengthMismatch { l3: usize, sum: usize },

    #[error("triple is not admissible: inversion set of w3 is not the disjoint union of those of w1 and w2")]
    InadmissibleTriple,

    #[error("convex hulls are implemented for rank <= 3, got rank {0}")]
    RankTooLarge(usize),

    #[error("operation requires a rank-2 root system, got rank {0}")]
    NotRankTwo(usize),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cache error: {0}")]
    Cache(String),
}
