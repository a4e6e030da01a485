use thiserror::Error;

/// Reasons a quiver with relations is rejected or an operation is refused.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex '{0}'")]
    DuplicateVertex(String),
    #[error("duplicate arrow '{0}'")]
    DuplicateArrow(String),
    #[error("arrow '{arrow}' refers to unknown vertex '{vertex}'")]
    UnknownVertex { arrow: String, vertex: String },
    #[error("unknown arrow '{0}'")]
    UnknownArrow(String),
    #[error("the quiver has no vertices")]
    EmptyQuiver,
    #[error("the underlying graph of the quiver is not connected")]
    DisconnectedQuiver,
    #[error("relation [{first}, {second}] is not composable: target of '{first}' is not the source of '{second}'")]
    NonComposableRelation { first: String, second: String },
    #[error("relation [{first}, {second}] is listed twice")]
    DuplicateRelation { first: String, second: String },
    #[error("vertex '{vertex}' has {incoming} incoming and {outgoing} outgoing arrows (at most 2 each)")]
    TooManyArrowsAtVertex { vertex: String, incoming: usize, outgoing: usize },
    #[error("arrow '{arrow}' has an ambiguous continuation: {detail}")]
    AmbiguousContinuation { arrow: String, detail: String },
    #[error("the path basis is infinite: relation-free oriented cycle {cycle}")]
    InfinitePathBasis { cycle: String },
    #[error("'{arrow}' and '{path}' are not parallel")]
    NotParallel { arrow: String, path: String },
}

impl QuiverError {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            QuiverError::DuplicateVertex(_) => "DuplicateVertex",
            QuiverError::DuplicateArrow(_) => "DuplicateArrow",
            QuiverError::UnknownVertex { .. } => "UnknownVertex",
            QuiverError::UnknownArrow(_) => "UnknownArrow",
            QuiverError::EmptyQuiver => "EmptyQuiver",
            QuiverError::DisconnectedQuiver => "DisconnectedQuiver",
            QuiverError::NonComposableRelation { .. } => "NonComposableRelation",
            QuiverError::DuplicateRelation { .. } => "DuplicateRelation",
            QuiverError::TooManyArrowsAtVertex { .. } => "TooManyArrowsAtVertex",
            QuiverError::AmbiguousContinuation { .. } => "AmbiguousContinuation",
            QuiverError::InfinitePathBasis { .. } => "InfinitePathBasis",
            QuiverError::NotParallel { .. } => "NotParallel",
        }
    }
}
