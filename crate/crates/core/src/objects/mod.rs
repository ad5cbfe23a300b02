pub mod filling;
pub mod matching;
pub mod permutation;

pub use filling::{Filling, FillingPredicates, PartitionShape};
pub use matching::{Endpoint, MarkedMatching, Matching};
pub use permutation::{BarredPermutation, HattedPermutation, Permutation};
