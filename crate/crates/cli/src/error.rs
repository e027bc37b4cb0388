use sigcalc_core::SigError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error at `{path}`: {reason}")]
    Schema { path: String, reason: String },
    #[error("value error at `{path}`: {reason}")]
    Value { path: String, reason: String },
    #[error("outside supported scope: {0}")]
    Scope(String),
    #[error("invalid environment: {0}")]
    Environment(String),
    #[error(transparent)]
    Engine(#[from] SigError),
    #[error("cross-checks failed: {}", .0.join(", "))]
    ChecksFailed(Vec<String>),
}

impl CliError {
    /// Process exit status for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema { .. } | CliError::Value { .. } | CliError::Environment(_) => 2,
            CliError::Scope(_) => 3,
            CliError::ChecksFailed(_) => 6,
            CliError::Io { .. } => 1,
            CliError::Engine(e) => match e.root_cause() {
                SigError::InvalidSpec(_)
                | SigError::InvalidType { .. }
                | SigError::NotARoot(_)
                | SigError::NotASubsystem(_)
                | SigError::NotAHomomorphism(_) => 2,
                SigError::NonSplitHorizontal | SigError::NotSolvable | SigError::NotInMaxTorus => 3,
                SigError::ZeroWeight { .. } => 4,
                SigError::NotFree { .. } | SigError::DimensionCollapse { .. } => 5,
                _ => 1,
            },
        }
    }
}
