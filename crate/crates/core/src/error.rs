use thiserror::Error;

/// Errors raised by the library.
///
/// Element witnesses are reported as labels so they can be shown to a user
/// without access to the ground set.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("{what} would have {size} elements, cap is {cap}")]
    SizeOverflow {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("function has {found} values, ground set has {expected} elements")]
    SizeMismatch { expected: usize, found: usize },
    #[error("kind violation: {0}")]
    KindViolation(String),
    #[error("set {index} is not increasing: contains `{below}` but not `{above}`")]
    NotIncreasing {
        index: usize,
        below: String,
        above: String,
    },
    #[error("family does not separate `{0}` from `{1}`")]
    FamilyDoesNotSeparate(String, String),
    #[error("family is not a kind-I separating family: `{0}` vs `{1}` unmet")]
    NotSeparatingFamily(String, String),
    #[error("alpha truncation too coarse: combined family is not a multi-utility")]
    AlphasInsufficient,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
