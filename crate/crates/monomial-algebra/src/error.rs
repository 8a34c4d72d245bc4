use thiserror::Error;
use word_core::{SourceError, WordError};

#[derive(Debug, Error)]
pub enum AlgebraError {
    /// An empty obstruction would annihilate the unit and every word.
    #[error("empty word is not a valid obstruction")]
    EmptyObstruction,

    #[error("obstruction symbol index {index} outside alphabet of size {size}")]
    SymbolOutOfRange { index: u8, size: usize },

    #[error(
        "obstruction supply truncated at depth {depth}, but the request needs \
         completeness up to length {needed}"
    )]
    TruncationTooShallow { depth: usize, needed: usize },

    #[error(
        "normal-word frontier at length {at_length} would hold {live_words} words, \
         over the {budget_mb} MB budget"
    )]
    ResourceExceeded {
        at_length: usize,
        live_words: usize,
        budget_mb: u64,
    },

    #[error("table reaches only n = {max_n}; this analysis needs {needed}")]
    TableTooShort { max_n: usize, needed: usize },

    #[error(transparent)]
    Word(#[from] WordError),

    #[error(transparent)]
    Source(#[from] SourceError),
}
