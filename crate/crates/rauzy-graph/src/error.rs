use thiserror::Error;
use word_core::WordError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error(transparent)]
    Word(#[from] WordError),

    #[error("k range invalid: from {from} > to {to}")]
    KRange { from: usize, to: usize },

    #[error("profile with both arcs of length 1 cannot arise")]
    ImpossibleProfile,

    #[error("operation requires a strongly connected fork profile")]
    NotFork,

    #[error("profile ({l}, {r}, {s}) has no representable predecessor under this rule")]
    NoPredecessor { l: usize, r: usize, s: usize },
}
