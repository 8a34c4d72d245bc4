use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("horizon {horizon} too small for factor length {needed}")]
    HorizonTooSmall { horizon: usize, needed: usize },

    #[error("horizon {horizon} insufficient for max length {max_n}: need at least {required}")]
    HorizonGuard {
        horizon: usize,
        max_n: usize,
        required: usize,
    },

    #[error("base word not a factor at horizon {horizon}")]
    BaseNotFactor { horizon: usize },

    #[error("length mismatch: |S| = {s_len}, |T| = {t_len}")]
    LengthMismatch { s_len: usize, t_len: usize },

    #[error("S and T must be nonempty")]
    EmptySide,

    #[error("not factor-closed at length {length}: {witness:?} listed but its factor {missing:?} is not")]
    NotFactorClosed {
        length: usize,
        witness: String,
        missing: String,
    },

    #[error("symbol {symbol:?} not in alphabet")]
    SymbolNotInAlphabet { symbol: char },

    #[error(transparent)]
    Source(#[from] SourceError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SourceError {
    #[error("explicit word of length {len} cannot produce a prefix of length {requested}")]
    ExplicitTooShort { len: usize, requested: usize },

    #[error("substitution stalled: iterating from the seed stops growing at length {reached}")]
    SubstitutionStalled { reached: usize },

    #[error("substitution image of symbol index {symbol} is empty (must be non-erasing)")]
    ErasingRule { symbol: u8 },

    #[error("substitution is not prolongable: image of the seed must start with the seed and have length >= 2")]
    NotProlongable,

    #[error("periodic cycle must be nonempty")]
    EmptyCycle,

    #[error("alphabet mismatch between combined sources")]
    AlphabetMismatch,

    #[error("duplicate symbol {symbol:?} in alphabet")]
    DuplicateSymbol { symbol: char },

    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("symbol {symbol:?} not in alphabet")]
    UnknownSymbol { symbol: char },

    #[error("symbol index {index} out of range for alphabet of size {size}")]
    IndexOutOfRange { index: u8, size: usize },
}
