use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entropy undefined on empty set")]
    EmptyEntropy,

    #[error("distance requires non-empty sets")]
    EmptySet,

    #[error("restriction must be a subset")]
    NotSubset,

    #[error("bit sequences must contain at least one bit")]
    EmptyBits,

    #[error("invalid bit character {found:?} at offset {offset}")]
    InvalidBit { offset: usize, found: char },

    /// A mapped set with fewer than two distinct elements.
    #[error(
        "mapped set outside the domain: {cardinality} distinct element(s), at least 2 required"
    )]
    Degenerate { cardinality: usize },

    #[error("set of cardinality {cardinality} where at least 2 are required")]
    CardinalityTooSmall { cardinality: usize },

    #[error("string shorter than window ({len} bits < {window} bits)")]
    ShorterThanWindow { len: usize, window: usize },

    #[error("invalid mapper configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("min cardinality {min_card} exceeds universe size {universe}")]
    UniverseTooSmall { universe: usize, min_card: usize },
}
