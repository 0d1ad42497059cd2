use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{Partition, SetPartition};
use crate::error::{CsfError, Result};

/// The pair `(λ, b)` indexing the bases of UBCSym.
///
/// Ordered by `b`, then by `λ` lexicographically; this is the display order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BType {
    pub lambda: Partition,
    pub b: u32,
}

impl BType {
    pub fn new(lambda: Partition, b: u32) -> Result<Self> {
        if b == 0 {
            return Err(CsfError::Invalid("b must be at least 1".into()));
        }
        Ok(BType { lambda, b })
    }

    /// Shorthand for tests and literals: `bt(&[2, 1], 2)`.
    pub fn of(lambda: &[u32], b: u32) -> Self {
        BType::new(Partition::from_parts(lambda.to_vec()), b).expect("b >= 1")
    }

    pub fn degree(&self) -> usize {
        self.lambda.size() as usize + self.b as usize
    }

    /// Number of blocks, `ℓ(λ) + 1`.
    pub fn num_blocks(&self) -> usize {
        self.lambda.len() + 1
    }

    /// `λ ∪ (b)`
    pub fn full_partition(&self) -> Partition {
        self.lambda.with_part(self.b)
    }

    /// `λ! b!`
    pub fn factorial(&self) -> BigInt {
        self.full_partition().factorial()
    }

    /// Canonical lift: `λ`-blocks of consecutive integers in decreasing size,
    /// then the `b`-block ending at `d`.
    pub fn representative(&self) -> SetPartition {
        let mut labels = Vec::with_capacity(self.degree());
        for (i, &p) in self.lambda.parts().iter().enumerate() {
            labels.extend(std::iter::repeat(i).take(p as usize));
        }
        labels.extend(std::iter::repeat(self.lambda.len()).take(self.b as usize));
        SetPartition::from_labels(&labels)
    }

    /// Every `BType` of degree `d`, in display order.
    pub fn all(d: usize) -> Vec<BType> {
        let mut out = Vec::new();
        for b in 1..=d as u32 {
            for lambda in Partition::all(d as u32 - b) {
                out.push(BType { lambda, b });
            }
        }
        out.sort();
        out
    }
}

impl Ord for BType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.b
            .cmp(&other.b)
            .then_with(|| self.lambda.parts().cmp(other.lambda.parts()))
    }
}

impl PartialOrd for BType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lambda, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(BType::of(&[2, 1], 2).to_string(), "((2,1),2)");
        assert_eq!(BType::of(&[], 3).to_string(), "(∅,3)");
    }

    #[test]
    fn counts_match_partition_sums() {
        for d in 1..=10usize {
            let expected: u64 = (1..=d as u32).map(|b| Partition::count(d as u32 - b)).sum();
            assert_eq!(BType::all(d).len() as u64, expected);
        }
    }

    #[test]
    fn representative_has_its_type() {
        for d in 1..=8 {
            for t in BType::all(d) {
                assert_eq!(t.representative().type_of(), t);
            }
        }
        assert_eq!(BType::of(&[2, 1], 2).representative().to_string(), "12/3/45");
    }

    #[test]
    fn display_order() {
        let mut v = vec![
            BType::of(&[], 6),
            BType::of(&[5], 1),
            BType::of(&[2, 2], 2),
            BType::of(&[4, 1], 1),
            BType::of(&[4], 2),
            BType::of(&[3, 1], 2),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            s,
            ["((4,1),1)", "((5),1)", "((2,2),2)", "((3,1),2)", "((4),2)", "(∅,6)"]
        );
    }
}
