use thiserror::Error;

/// Errors produced by the toolkit. Everything here is a domain error:
/// arithmetic is exact, so no operation can fail numerically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: &'static str, rank: usize },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight is not dominant")]
    NotDominant,

    #[error("weight is not integral")]
    NotIntegral,

    #[error("representation {label} is not defined for family {family}")]
    RepUnavailable { family: &'static str, label: String },

    #[error("element has a non-integral root eigenvalue; not a coweight-lattice point")]
    NonIntegralEigenvalue,

    #[error("support set I must be a nonempty subset of {{1,..,{rank}}}")]
    EmptySupport { rank: usize },

    #[error("node index {index} out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("element is not of unit-coefficient form \u{3be}_I")]
    NotUnitCoefficients,

    #[error("highest weight is not a representation of the quotient group: pairing with central element {element} is {value}")]
    NotARepresentation { element: String, value: String },

    #[error("element does not lie in the dominant lattice cone of the group")]
    NotInDominantLattice,

    #[error("m^+/m^- are only defined for classical families, not {family}")]
    MPlusMinusUndefined { family: &'static str },

    #[error("standard-representation pairings are non-integral for this element; m^+/m^- undefined")]
    NonIntegralPairings,

    #[error("no inner symmetric space of {family} has odd-root count {count}")]
    UnknownInnerSpace { family: &'static str, count: u64 },

    #[error("target space {target} is not reached by any symmetric canonical element; reachable: {reachable:?}")]
    UnreachableSpace { target: String, reachable: Vec<String> },

    #[error("enumeration box has {size} candidates, above the safety cap")]
    EnumerationTooLarge { size: u128 },

    #[error("representation dimension exceeds u128")]
    DimensionOverflow,

    #[error("subgroup token {token:?} is not valid for this centre; valid tokens: {valid:?}")]
    InvalidSubgroup { token: String, valid: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
