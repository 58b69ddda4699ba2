use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid codeword: {0}")]
    InvalidCodeword(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("graph does not belong to this explosion neighbourhood: {0}")]
    DescriptorMismatch(String),

    #[error("invalid exploded graph: {0}")]
    InvalidExplosion(String),

    #[error("enumeration of {required} objects exceeds the cap of {cap}")]
    CapExceeded { required: String, cap: u64 },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
