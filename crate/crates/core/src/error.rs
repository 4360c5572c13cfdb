use thiserror::Error;

/// Errors raised by the numerical routines and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{what} did not converge within {max_iter} iterations")]
    NonConvergence { what: &'static str, max_iter: usize },

    #[error("{0} is not representable (overflow)")]
    Overflow(&'static str),

    #[error("{0} is not representable (underflow)")]
    Underflow(&'static str),

    #[error("Möbius map is singular at ({re}, {im})")]
    Singular { re: f64, im: f64 },

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        name,
        value,
        expected,
    }
}
