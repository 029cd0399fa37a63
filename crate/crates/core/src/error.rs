use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "unknown Cartan type `{0}` (expected a letter among A, B, C, D, F, G followed by a rank)"
    )]
    UnknownType(String),
    #[error("inadmissible Cartan datum {letter}{rank}")]
    Inadmissible { letter: char, rank: usize },
    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("elements belong to different groups")]
    MixedGroups,
    #[error("malformed word `{0}`")]
    MalformedWord(String),
    #[error("index {index} is not a simple reflection of a rank {rank} group")]
    NotSimple { index: usize, rank: usize },
    #[error("no unit/counit solves the triangle identities for {0}")]
    AdjunctionSolve(&'static str),
    #[error("block catalog self-check failed: {0}")]
    CatalogCheck(String),
    #[error("{0}")]
    WrongCategory(&'static str),
    #[error("unknown module `{0}`")]
    UnknownModule(String),
}

pub type Result<T> = std::result::Result<T, Error>;
