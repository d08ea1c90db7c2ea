use thiserror::Error;

use crate::circle::CircleError;
use crate::expr::{EvalError, ParseError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Circle(#[from] CircleError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("invalid base system: {0}")]
    InvalidBase(String),
    #[error("invalid fibre family: {0}")]
    InvalidFamily(String),
    #[error("invalid lift: {0}")]
    InvalidLift(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("at base point {omega}: {source}")]
    AtBasePoint { omega: f64, source: Box<Error> },
    #[error("estimate carries no convergence trace")]
    MissingTrace,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
