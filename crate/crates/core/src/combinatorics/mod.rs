//! Partitions, compositions, set partitions and the types that index the algebras.

mod btype;
mod partition;
mod permutation;
mod set_composition;
mod set_partition;

pub use btype::BType;
pub use partition::{Composition, Partition};
pub use permutation::Permutation;
pub use set_composition::{LabelledComposition, MarkedComposition, SetComposition};
pub use set_partition::{bell, enumerate_set_partitions, moebius, SetPartition, SetPartitions};
