use monomial_algebra::AlgebraError;
use rauzy_graph::GraphError;
use rotation_dynamics::RotationError;
use word_core::{SourceError, WordError};

/// Every failure folded into the three documented exit classes: bad input
/// (2), a guard tripping at analysis time (3), and states the tool promises
/// cannot happen (4). The classification is done at conversion time so the
/// original message travels along.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("{0}")]
    Guard(String),

    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<SourceError> for CliError {
    fn from(e: SourceError) -> Self {
        match e {
            SourceError::ExplicitTooShort { .. } | SourceError::SubstitutionStalled { .. } => {
                CliError::Guard(e.to_string())
            }
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        match e {
            WordError::HorizonTooSmall { .. }
            | WordError::HorizonGuard { .. }
            | WordError::BaseNotFactor { .. } => CliError::Guard(e.to_string()),
            WordError::Source(s) => s.into(),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Word(w) => w.into(),
            GraphError::KRange { .. } => CliError::Config(e.to_string()),
            _ => CliError::Guard(e.to_string()),
        }
    }
}

impl From<RotationError> for CliError {
    fn from(e: RotationError) -> Self {
        match e {
            RotationError::EndpointCollision { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::TruncationTooShallow { .. }
            | AlgebraError::ResourceExceeded { .. }
            | AlgebraError::TableTooShort { .. } => CliError::Guard(e.to_string()),
            AlgebraError::Word(w) => w.into(),
            AlgebraError::Source(s) => s.into(),
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(format!("io: {e}"))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Config(format!("json: {e}"))
    }
}
