// `!(x > 0.0)` style guards also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod grid;
pub mod ineq;
pub mod metrics;
pub mod report;
pub mod specfun;
pub mod suite;

pub use error::{Error, Result};
