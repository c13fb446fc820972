use thiserror::Error;

use crate::rootsys::{CartanType, Family};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family:?}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),

    #[error("root coordinates {0:?} mix signs or are zero")]
    MixedSignRoot(Vec<i32>),

    #[error("{0:?} is not a root of the ambient system")]
    NotARoot(Vec<i32>),

    #[error("generator index {letter} out of range 1..={rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    #[error("node {node} out of range 1..={rank}")]
    InvalidNode { node: usize, rank: usize },

    #[error("elements belong to different Weyl groups ({0} vs {1})")]
    MismatchedTypes(CartanType, CartanType),

    #[error("root set is not the inversion set of any element (peeling stalled with {remaining} roots left)")]
    NotAnInversionSet { remaining: usize },

    #[error("one-line notation is only defined for classical types, not {0}")]
    NotClassical(CartanType),

    #[error("invalid one-line notation for {cartan_type}: {reason}")]
    InvalidOneLine { cartan_type: CartanType, reason: String },

    #[error("signed sequence has a zero entry")]
    ZeroEntry,

    #[error("value {0} repeated (absolute values must be distinct)")]
    RepeatedValue(i32),

    #[error("closed-form cell {node} of {cartan_type} disagrees with the unique-reduced-word filter")]
    CellMismatch { cartan_type: CartanType, node: usize },

    #[error("element is not in the translated cell w0*C (not integral minimal)")]
    NotIntegralMinimal,

    #[error("w0*C_{node} has {count} elements of minimal length")]
    NonUniqueMinimum { node: usize, count: usize },

    #[error("lower Bruhat interval exceeds the oracle cap of {cap} elements")]
    OracleBudgetExceeded { cap: usize },

    #[error("{0} subsystem enumeration requires the extended flag")]
    NeedsExtended(CartanType),

    #[error("parse error: {0}")]
    Parse(String),
}
