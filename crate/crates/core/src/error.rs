use thiserror::Error;

/// Errors raised by the signature engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigError {
    #[error("unsupported root system type {family}{rank}")]
    InvalidType { family: String, rank: usize },
    #[error("vector {0:?} is not a root of the system")]
    NotARoot(Vec<i64>),
    #[error("generators do not close to a root subsystem: {0}")]
    NotASubsystem(String),
    #[error("Weyl group exceeds the enumeration cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("subgroup is not closed under composition inside the ambient Weyl group")]
    NotASubgroup,
    #[error("ordered bases do not span the same subspace")]
    NotSameSpan,
    #[error("embedding is not a Lie algebra homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("orbit directions are linearly dependent ({rank} of {expected}); the action is not free here")]
    DimensionCollapse { rank: usize, expected: usize },
    #[error("twist equation has no solution inside the subgroup algebra")]
    NotSolvable,
    #[error("twisted circle generator is not diagonal")]
    NotInMaxTorus,
    #[error("found {found} fixed points but {expected} were expected")]
    IncompleteEnumeration { found: usize, expected: usize },
    #[error("horizontal space is not a sum of coordinate root spaces")]
    NonSplitHorizontal,
    #[error("isotropy weight on V_{{{j}{k}}} vanishes; choose a generic circle")]
    ZeroWeight { j: usize, k: usize },
    #[error("maximal torus of the subgroup does not act freely (permutation {permutation:?})")]
    NotFree { permutation: Vec<usize> },
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("fixed point #{index} ({rep}): {source}")]
    AtFixedPoint {
        index: usize,
        rep: String,
        source: Box<SigError>,
    },
}

impl SigError {
    /// Strips any fixed-point context and returns the underlying error.
    pub fn root_cause(&self) -> &SigError {
        match self {
            SigError::AtFixedPoint { source, .. } => source.root_cause(),
            other => other,
        }
    }

    pub(crate) fn at(self, index: usize, rep: String) -> SigError {
        SigError::AtFixedPoint {
            index,
            rep,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, SigError>;
