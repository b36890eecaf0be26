use thiserror::Error;

/// Errors raised anywhere in the pipeline, from enumeration to the report layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure exceeded the enumeration bound of {bound} elements")]
    BoundExceeded { bound: usize },
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup order and index are not coprime")]
    NotCoprime,
    #[error("complement search exhausted without success")]
    SearchExhausted,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("action does not define a homomorphism: {0}")]
    ActionNotHomomorphism(String),
    #[error("module has {factors} factors but the acting group has {maximal} maximal subgroups")]
    FactorCountMismatch { factors: usize, maximal: usize },
    #[error("eigenspace splitting stopped with a subspace of dimension {dim}")]
    SplittingIncomplete { dim: usize },
    #[error("lifted multiplicities are inconsistent: {0}")]
    LiftInconsistent(String),
    #[error("not a normal Hall subgroup with complement: {0}")]
    NotHallPair(String),
    #[error("parse error at line {line}, column {column}: expected one of {}", expected.join(", "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
    },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    /// Short machine-readable tag used in JSON diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::InvalidGenerator(_) => "InvalidGenerator",
            Error::NotNormal => "NotNormal",
            Error::NotCoprime => "NotCoprime",
            Error::SearchExhausted => "SearchExhausted",
            Error::BadParams(_) => "BadParams",
            Error::ActionNotHomomorphism(_) => "ActionNotHomomorphism",
            Error::FactorCountMismatch { .. } => "FactorCountMismatch",
            Error::SplittingIncomplete { .. } => "SplittingIncomplete",
            Error::LiftInconsistent(_) => "LiftInconsistent",
            Error::NotHallPair(_) => "NotHallPair",
            Error::Parse { .. } => "ParseError",
            Error::Io(_) => "Io",
            Error::Config(_) => "Config",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
