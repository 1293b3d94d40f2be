use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simple type {label}: {reason}")]
    InvalidType { label: String, reason: String },

    #[error("cannot parse simple type from {0:?}")]
    TypeParse(String),

    #[error("weight {0} is not dominant integral")]
    NotDominantIntegral(String),

    #[error("weight has {found} coordinates, root system has rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("characters belong to different root systems ({0} vs {1})")]
    MismatchedRootSystems(String, String),

    #[error("malformed character: {0}")]
    MalformedCharacter(String),

    #[error("character is not irreducible: {0}")]
    Reducible(String),

    #[error("assumption A violated: {label} has odd rank {rank}")]
    OddRank { label: String, rank: usize },

    #[error("torus coordinate {0} is zero")]
    ZeroTorusCoordinate(usize),

    #[error("matrix is not nilpotent within {0} steps")]
    NotNilpotent(usize),

    #[error("automorphism extension inconsistent on root pair ({0}, {1})")]
    ExtensionInconsistency(String, String),

    #[error("not a diagram automorphism of {0}")]
    NotADiagramAutomorphism(String),

    #[error("unsupported element: {0}")]
    UnsupportedElement(String),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("dimension {0} exceeds the supported integer range")]
    Overflow(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
