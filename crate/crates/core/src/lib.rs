//! Permutations, matchings and fillings of partition shapes: statistics,
//! bijections, noncommutative generating series and exhaustive checks.

pub mod bijections;
pub mod error;
pub mod genfunc;
pub mod ncseries;
pub mod objects;
pub mod oracle;
pub mod poly;
pub mod posset;
pub mod statistics;

pub use error::{Error, Result};
pub use objects::*;
pub use posset::PosSet;
