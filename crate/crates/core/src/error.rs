use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell ({row}, {col}) lies outside the Ferrers diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("series inverse requires constant term 1, found {0}")]
    NonUnitConstant(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation is not defined for the {0} class")]
    UnsupportedClass(&'static str),

    #[error("independent computations disagree: {0}")]
    Inconsistent(String),

    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),
}
