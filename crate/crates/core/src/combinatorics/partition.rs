use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};
use crate::rational::factorial;

/// An integer partition, parts weakly decreasing. The empty partition is `∅`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(CsfError::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CsfError::Invalid(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the given (positive) parts into a partition; zero parts are dropped.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ! = λ_1! ⋯ λ_ℓ!`
    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, &p| acc * factorial(p))
    }

    /// `λ ∪ μ`
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts(parts)
    }

    /// `λ ∪ (k)`, with `λ ∪ (0) = λ`.
    pub fn with_part(&self, k: u32) -> Partition {
        if k == 0 {
            return self.clone();
        }
        let pos = self.0.iter().position(|&p| p < k).unwrap_or(self.0.len());
        let mut parts = self.0.clone();
        parts.insert(pos, k);
        Partition(parts)
    }

    /// Multiplicity of each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Number of partitions of `n`.
    pub fn count(n: u32) -> u64 {
        let n = n as usize;
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for k in 1..=n {
            for m in k..=n {
                p[m] += p[m - k];
            }
        }
        p[n]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An integer composition: an ordered list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(CsfError::Invalid(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `set(α) = {α_1, α_1+α_2, …}` ⊆ [d−1].
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0usize;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`]: the composition of `d` cut at `set`.
    pub fn from_descent_set(d: usize, set: &[usize]) -> Result<Self> {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0usize;
        for &s in set {
            if s <= prev || s >= d {
                return Err(CsfError::Invalid(format!(
                    "descent set {set:?} is not a strictly increasing subset of [{}]",
                    d.saturating_sub(1)
                )));
            }
            parts.push((s - prev) as u32);
            prev = s;
        }
        if d > prev {
            parts.push((d - prev) as u32);
        }
        Ok(Composition(parts))
    }

    /// All compositions of `d`, one per subset of [d−1].
    pub fn all(d: usize) -> Vec<Composition> {
        if d == 0 {
            return vec![Composition(Vec::new())];
        }
        (0u64..(1u64 << (d - 1)))
            .map(|mask| {
                let set: Vec<usize> = (1..d).filter(|&j| mask >> (j - 1) & 1 == 1).collect();
                Composition::from_descent_set(d, &set).expect("valid mask")
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
