use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("edge with head `{head}` has an empty body")]
    EmptyBody { head: String },
    #[error("head `{head}` occurs in its own body")]
    HeadInBody { head: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("not a bipartition of the vertex set: {0}")]
    NotABipartition(String),
    #[error("not a split: {0}")]
    NotASplit(String),
    #[error("at least two vertices are required, found {0}")]
    TooFewVertices(usize),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("inconsistent tree: {0}")]
    InconsistentTree(String),
    #[error("ground set has {size} vertices, limit is {limit}")]
    GroundSetTooLarge { size: usize, limit: usize },
    #[error("instance has {size} vertices, oracle limit is {limit}")]
    InstanceTooLarge { size: usize, limit: usize },
    #[error("ground sets overlap")]
    OverlappingGrounds,
    #[error("values are defined over different vertex universes")]
    UniverseMismatch,
    #[error("set is not a member of the closure system")]
    NotAMember,
    #[error("not a closure system: {0}")]
    NotAClosureSystem(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
