use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("tile family must contain height 1 and only heights from {{1, 2, 3}}, got {0:?}")]
    InvalidFamily(Vec<u8>),
    #[error("board heights {0:?} are not weakly increasing")]
    NotFerrers(Vec<u32>),
    #[error("{0} requires the Fibonacci tile family")]
    UnsupportedFamily(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("invalid placement pair: {0}")]
    InvalidPair(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
