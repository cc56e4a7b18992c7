use thiserror::Error;

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition {partition} does not fit the {rows}x{cols} box")]
    NotInBox { partition: Partition, rows: usize, cols: usize },

    #[error("realization in {numvars} variables is unfaithful for degree {degree}")]
    UnfaithfulRealization { numvars: usize, degree: usize },

    #[error("polynomial is not symmetric in the realized variables")]
    NonSymmetric,

    #[error("polynomial involves variable {0} outside the expected families")]
    ForeignVariable(String),

    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("series constant term is not 1")]
    NonUnitSeries,

    #[error("series component {index} is not homogeneous of degree {index}")]
    InhomogeneousComponent { index: usize },

    #[error("rank {rank} exceeds truncation {truncation}")]
    RankExceedsTruncation { rank: usize, truncation: usize },

    #[error("series has no rank metadata")]
    MissingRank,

    #[error("degree overflow: need truncation at least {needed}, got {truncation}")]
    DegreeOverflow { needed: usize, truncation: usize },

    #[error("jet dimension mismatch: {0}")]
    JetMismatch(String),

    #[error("invalid jet: {0}")]
    InvalidJet(String),

    #[error("linear part is not invertible")]
    NotDiffeomorphism,

    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),

    #[error("invalid Grassmannian Gr({n},{ambient})")]
    InvalidGrassmannian { n: usize, ambient: usize },

    #[error("no second-size polynomial available for {0}")]
    NoSecondSize(String),

    #[error("catalogue line {line}: {message}")]
    Catalogue { line: usize, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable tag used in JSON diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::NotInBox { .. } => "NotInBox",
            Error::UnfaithfulRealization { .. } => "UnfaithfulRealization",
            Error::NonSymmetric => "NonSymmetric",
            Error::ForeignVariable(_) => "ForeignVariable",
            Error::TruncationMismatch { .. } => "TruncationMismatch",
            Error::NonUnitSeries => "NonUnitSeries",
            Error::InhomogeneousComponent { .. } => "InhomogeneousComponent",
            Error::RankExceedsTruncation { .. } => "RankExceedsTruncation",
            Error::MissingRank => "MissingRank",
            Error::DegreeOverflow { .. } => "DegreeOverflow",
            Error::JetMismatch(_) => "JetMismatch",
            Error::InvalidJet(_) => "InvalidJet",
            Error::NotDiffeomorphism => "NotDiffeomorphism",
            Error::NonIntegral(_) => "NonIntegral",
            Error::InvalidGrassmannian { .. } => "InvalidGrassmannian",
            Error::NoSecondSize(_) => "NoSecondSize",
            Error::Catalogue { .. } => "Catalogue",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
