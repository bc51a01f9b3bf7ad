use thiserror::Error;

/// Errors raised when an input violates the contract of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("array dimensions must be at least 1x1, got {n}x{m}")]
    EmptyArray { n: usize, m: usize },

    #[error("ragged rows: expected {expected} columns, row {row} has {found}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("negative mass {value} at box ({i}, {j})")]
    NegativeMass { i: usize, j: usize, value: String },

    #[error("height mismatch: {left} rows vs {right} rows")]
    HeightMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("function is not supermodular at box ({i}, {j})")]
    NotSupermodular { i: usize, j: usize },

    #[error("corner function is not zero on the axes at ({i}, {j})")]
    NonZeroAxis { i: usize, j: usize },

    #[error("not a partition: {0}")]
    NotPartition(String),

    #[error("array is not {direction}-tight")]
    NotTight { direction: char },

    #[error("function is not discrete concave: {0}")]
    NotDiscreteConcave(String),

    #[error("invalid pair: {0}")]
    InvalidPair(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("non-integer mass where an integer array is required")]
    NonInteger,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case identifier of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyArray { .. } => "empty_array",
            Error::RaggedRows { .. } => "ragged_rows",
            Error::NegativeMass { .. } => "negative_mass",
            Error::HeightMismatch { .. } => "height_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::NotSupermodular { .. } => "not_supermodular",
            Error::NonZeroAxis { .. } => "non_zero_axis",
            Error::NotPartition(_) => "not_partition",
            Error::NotTight { .. } => "not_tight",
            Error::NotDiscreteConcave(_) => "not_discrete_concave",
            Error::InvalidPair(_) => "invalid_pair",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::Inconsistent(_) => "inconsistent",
            Error::NonInteger => "non_integer",
            Error::InvalidTableau(_) => "invalid_tableau",
            Error::Parse(_) => "parse",
        }
    }
}
