//! Exact combinatorics and linear algebra for Delta-Springer modules.

pub mod cli;
pub mod delta;
pub mod error;
pub mod partition;
pub mod poly;
pub mod report;
pub mod specht;
pub mod suites;
pub mod symfunc;
pub mod tableau;
pub mod word;

pub use error::{Error, Result};
