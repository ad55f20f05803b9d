use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("derivative needs truncation order >= 1")]
    OrderTooLow,
    #[error("invalid hypergeometric parameters: {0}")]
    InvalidParams(String),
    #[error("moment sequence has zero leading term")]
    ZeroLeadingMoment,
    #[error("not enough moments: need {needed}, got {got}")]
    TooFewMoments { needed: usize, got: usize },
    #[error("Laguerre reduction failed: coefficient of x^{degree} is {value}, expected 0")]
    ReductionFailure { degree: usize, value: Rat },
    #[error("continued fraction pivot alpha_{0} vanishes identically")]
    DegeneratePivot(usize),
    #[error("cannot fix leading-coefficient normalization: {0}")]
    NormalizationAmbiguous(String),
    #[error("bad bracket: sign at lo is {lo_sign}, sign at hi is {hi_sign}")]
    BadBracket { lo_sign: i8, hi_sign: i8 },
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
