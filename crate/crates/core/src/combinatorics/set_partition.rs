use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::{BType, Partition, Permutation};
use crate::error::{CsfError, Result};
use crate::limits;
use crate::rational::connected_sign_count;

/// A set partition of `[d]`, stored as a restricted growth string: entry
/// `i-1` is the index of the block containing `i`, blocks numbered in order
/// of their minimum element. Two set partitions are equal iff their vectors are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    labels: Vec<u8>,
}

impl SetPartition {
    /// Canonicalizes an arbitrary block labelling (any values, equal value = same block).
    pub fn from_labels<T: Eq + Copy>(raw: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let labels = raw
            .iter()
            .map(|x| match seen.iter().position(|y| y == x) {
                Some(p) => p as u8,
                None => {
                    seen.push(*x);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        SetPartition { labels }
    }

    /// Builds from explicit 1-indexed blocks, which must partition `[d]`.
    pub fn from_blocks(d: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut raw = vec![usize::MAX; d];
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(CsfError::Invalid("empty block".into()));
            }
            for &x in block {
                if x == 0 || x > d {
                    return Err(CsfError::Invalid(format!("element {x} outside [{d}]")));
                }
                if raw[x - 1] != usize::MAX {
                    return Err(CsfError::Invalid(format!("element {x} in two blocks")));
                }
                raw[x - 1] = bi;
            }
        }
        if let Some(i) = raw.iter().position(|&r| r == usize::MAX) {
            return Err(CsfError::Invalid(format!("element {} not covered", i + 1)));
        }
        Ok(SetPartition::from_labels(&raw))
    }

    /// The partition of `[d]` into singletons.
    pub fn discrete(d: usize) -> Self {
        SetPartition {
            labels: (0..d as u8).collect(),
        }
    }

    /// The one-block partition of `[d]`.
    pub fn single_block(d: usize) -> Self {
        SetPartition { labels: vec![0; d] }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// `ℓ(π)`
    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks as sorted 1-indexed element lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(i + 1);
        }
        out
    }

    /// Index of the block containing `i` (1-indexed element).
    pub fn block_of(&self, i: usize) -> usize {
        self.labels[i - 1] as usize
    }

    pub fn block_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.num_blocks()];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// `λ(π)`
    pub fn lambda(&self) -> Partition {
        Partition::from_parts(self.block_sizes())
    }

    /// `π! = λ(π)!`
    pub fn factorial(&self) -> BigInt {
        self.lambda().factorial()
    }

    /// `type(π) = (λ, b)`: `b` is the size of the block containing `d`.
    pub fn type_of(&self) -> BType {
        let d = self.degree();
        assert!(d > 0, "type of the empty set partition");
        let sizes = self.block_sizes();
        let last = self.labels[d - 1] as usize;
        let b = sizes[last];
        let rest: Vec<u32> = sizes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != last)
            .map(|(_, &s)| s)
            .collect();
        BType::new(Partition::from_parts(rest), b).expect("b >= 1")
    }

    /// Slash product `π | σ`: blocks of `σ` shifted by `|π|`.
    pub fn slash(&self, other: &SetPartition) -> SetPartition {
        let offset = self.num_blocks() as u8;
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|&l| l + offset));
        SetPartition { labels }
    }

    /// `δ(π)`: relabel every element `i` as `δ(i)`.
    pub fn permute(&self, delta: &Permutation) -> Result<SetPartition> {
        if delta.len() != self.degree() {
            return Err(CsfError::DegreeMismatch {
                expected: self.degree(),
                found: delta.len(),
            });
        }
        let mut raw = vec![0u8; self.degree()];
        for (i, &l) in self.labels.iter().enumerate() {
            raw[delta.apply(i + 1) - 1] = l;
        }
        Ok(SetPartition::from_labels(&raw))
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        if self.degree() != other.degree() {
            return false;
        }
        let mut image: Vec<Option<u8>> = vec![None; self.num_blocks()];
        for (&s, &o) in self.labels.iter().zip(&other.labels) {
            match image[s as usize] {
                None => image[s as usize] = Some(o),
                Some(x) if x != o => return false,
                _ => {}
            }
        }
        true
    }

    /// Adds element `d+1` to the block containing `j`.
    pub fn induct_at(&self, j: usize) -> SetPartition {
        let mut labels = self.labels.clone();
        labels.push(self.labels[j - 1]);
        SetPartition { labels }
    }

    /// Merges blocks according to `grouping`, a set partition of the block indices.
    pub fn merge_blocks(&self, grouping: &SetPartition) -> SetPartition {
        debug_assert_eq!(grouping.degree(), self.num_blocks());
        let raw: Vec<u8> = self
            .labels
            .iter()
            .map(|&l| grouping.labels[l as usize])
            .collect();
        SetPartition::from_labels(&raw)
    }

    /// Every set partition `σ ≥ π` (coarser or equal), with the grouping of
    /// `π`'s blocks that produced it.
    pub fn coarsenings(&self) -> impl Iterator<Item = (SetPartition, SetPartition)> + '_ {
        SetPartitions::unchecked(self.num_blocks()).map(move |g| (self.merge_blocks(&g), g))
    }

    /// Coefficient of `p_π` in `e_{[d]}`-style expansions: `∏_B (−1)^{|B|−1}(|B|−1)!`,
    /// which is `μ(0̂, π)`.
    pub fn mu_from_bottom(&self) -> BigInt {
        self.block_sizes()
            .iter()
            .fold(BigInt::one(), |acc, &s| acc * connected_sign_count(s))
    }
}

/// Möbius function `μ(σ, τ)` of the refinement lattice, for `σ ≤ τ`.
pub fn moebius(sigma: &SetPartition, tau: &SetPartition) -> Result<BigInt> {
    if !sigma.refines(tau) {
        return Err(CsfError::NotRefinement {
            sigma: sigma.to_string(),
            tau: tau.to_string(),
        });
    }
    // k_B = number of σ-blocks inside each τ-block
    let mut per_block = vec![0u32; tau.num_blocks()];
    let mut counted = vec![false; sigma.num_blocks()];
    for (&s, &t) in sigma.labels.iter().zip(&tau.labels) {
        if !counted[s as usize] {
            counted[s as usize] = true;
            per_block[t as usize] += 1;
        }
    }
    Ok(per_block
        .iter()
        .fold(BigInt::one(), |acc, &k| acc * connected_sign_count(k)))
}

/// Streams every set partition of `[d]` in lexicographic order of restricted
/// growth strings.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    labels: Vec<u8>,
    // prefix_max[i] = max(labels[0..=i])
    prefix_max: Vec<u8>,
    done: bool,
}

impl SetPartitions {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(CsfError::Invalid("set partitions of [0]".into()));
        }
        limits::check("set partition degree", d, limits::set_partition_degree())?;
        Ok(Self::unchecked(d))
    }

    pub(crate) fn unchecked(d: usize) -> Self {
        SetPartitions {
            labels: vec![0; d],
            prefix_max: vec![0; d],
            done: d == 0,
        }
    }

    fn advance(&mut self) {
        let d = self.labels.len();
        for i in (1..d).rev() {
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for k in i + 1..d {
                    self.labels[k] = 0;
                    self.prefix_max[k] = self.prefix_max[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for SetPartitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let out = SetPartition {
            labels: self.labels.clone(),
        };
        self.advance();
        Some(out)
    }
}

/// Streams the set partitions of `[d]`, rejecting `d` above the configured cap.
pub fn enumerate_set_partitions(d: usize) -> Result<SetPartitions> {
    SetPartitions::new(d)
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let v = *next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() >= 10 { "," } else { "" };
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        write!(f, "{}", blocks.join("/"))
    }
}

impl FromStr for SetPartition {
    type Err = CsfError;

    /// Parses `1/24/35`; elements are single digits unless separated by commas.
    fn from_str(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<usize>> = s
            .split('/')
            .map(|b| {
                let b = b.trim();
                if b.contains(',') {
                    b.split(',')
                        .map(|x| x.trim().parse::<usize>().map_err(|e| CsfError::Parse(e.to_string())))
                        .collect::<Result<Vec<_>>>()
                } else {
                    b.chars()
                        .map(|c| {
                            c.to_digit(10)
                                .map(|v| v as usize)
                                .ok_or_else(|| CsfError::Parse(format!("bad element `{c}` in `{s}`")))
                        })
                        .collect()
                }
            })
            .collect::<Result<_>>()?;
        let d = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::from_blocks(d, &blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = sp("1/24/35");
        assert_eq!(p.to_string(), "1/24/35");
        assert_eq!(p.degree(), 5);
        assert_eq!(sp("24/1/35"), p);
    }

    #[test]
    fn type_examples() {
        assert_eq!(sp("1/24/35").type_of().to_string(), "((2,1),2)");
        assert_eq!(sp("123").type_of().to_string(), "(∅,3)");
        assert_eq!(sp("1/2/3").type_of().to_string(), "((1,1),1)");
    }

    #[test]
    fn slash_examples() {
        assert_eq!(sp("12").slash(&sp("1/2")), sp("12/3/4"));
        assert_eq!(sp("1").slash(&sp("12")), sp("1/23"));
    }

    #[test]
    fn permute_examples() {
        let swap = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(sp("12/3").permute(&swap).unwrap(), sp("12/3"));
        let rev = Permutation::new(vec![3, 2, 1]).unwrap();
        assert_eq!(sp("12/3").permute(&rev).unwrap(), sp("1/23"));
        assert!(sp("12/3").permute(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(&sp("1/2/3"), &sp("123")).unwrap(), BigInt::from(2));
        assert_eq!(moebius(&sp("1/2"), &sp("12")).unwrap(), BigInt::from(-1));
        let p = sp("13/2/4");
        assert_eq!(moebius(&p, &p).unwrap(), BigInt::from(1));
        assert!(moebius(&sp("12/3"), &sp("13/2")).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_set_partitions(1).unwrap().count(), 1);
        assert_eq!(enumerate_set_partitions(3).unwrap().count(), 5);
        for d in 1..=8 {
            assert_eq!(enumerate_set_partitions(d).unwrap().count() as u64, bell(d));
        }
        assert!(enumerate_set_partitions(limits::set_partition_degree() + 1).is_err());
    }

    #[test]
    fn enumeration_is_canonical_and_distinct() {
        let all: Vec<_> = enumerate_set_partitions(6).unwrap().collect();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
        for p in &all {
            assert_eq!(&SetPartition::from_labels(p.labels()), p);
        }
    }

    #[test]
    fn coarsenings_of_discrete_are_everything() {
        let n = SetPartition::discrete(4).coarsenings().count();
        assert_eq!(n as u64, bell(4));
        for (c, _) in sp("12/3/4").coarsenings() {
            assert!(sp("12/3/4").refines(&c));
        }
    }
}
