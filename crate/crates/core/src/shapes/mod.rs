//! Partitions, integer sequences, permutations, skew shapes and set-valued
//! tableaux.

mod intseq;
pub(crate) mod parse;
mod partition;
mod perm;
mod skew;
mod tableau;

pub use intseq::IntSeq;
pub use partition::Partition;
pub use perm::Permutation;
pub use skew::{SkewShape, StripKind};
pub use tableau::{enumerate_svt, SetValuedTableau, WordContent};

pub(crate) use tableau::SvtSearch;
