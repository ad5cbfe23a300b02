//! Exhaustive enumeration and the equidistribution checks built on it.

pub mod checks;
pub mod distribution;
pub mod enumerate;
pub mod stats;
pub mod sums;

pub use checks::{check_conjecture, check_theorem, CheckReport, Status, TheoremId};
pub use distribution::{distribution, Distribution};
pub use enumerate::{Family, MAX_N};
