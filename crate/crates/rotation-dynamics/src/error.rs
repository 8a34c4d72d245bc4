use thiserror::Error;
use word_core::WordError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("rotation angle must be irrational (b = 0 or d a perfect square makes it rational)")]
    RationalAngle,

    #[error("d = {d} is not square-free")]
    NotSquareFree { d: u64 },

    #[error("d = {d} exceeds the factorization bound {bound}")]
    RadicandTooLarge { d: u64, bound: u64 },

    #[error("denominator c must be nonzero")]
    ZeroDenominator,

    #[error("rotation angle must lie strictly between 0 and 1")]
    AngleOutOfRange,

    #[error("orbit point at iterate {iterate} lands on an arc endpoint")]
    EndpointCollision { iterate: usize },

    #[error("characteristic sets do not partition the circle: {reason}")]
    NotPartition { reason: String },

    #[error("characteristic set for symbol index {symbol} is empty")]
    EmptyCharSet { symbol: u8 },

    #[error("arc endpoints coincide; empty and full-circle arcs are not single arcs")]
    DegenerateArc,

    #[error("word is empty")]
    EmptyWord,

    #[error("symbol index {symbol} is not in the system alphabet")]
    UnknownSymbol { symbol: u8 },

    #[error("grouping omits the length-{n} factor {word}")]
    GroupingMissingFactor { word: String, n: usize },

    #[error("grouping maps {word}, which is not a length-{n} factor of the base coding")]
    GroupingExtraWord { word: String, n: usize },

    #[error("no factor is mapped to the new symbol {symbol}")]
    GroupingNotSurjective { symbol: char },

    #[error("base system is not the two-symbol Sturmian form")]
    NotSturmianBase,

    #[error(transparent)]
    Word(#[from] WordError),
}
