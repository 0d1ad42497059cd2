use std::fmt;

use crate::error::{CsfError, Result};

/// A permutation of `[d]` in one-line notation, values 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let d = one_line.len();
        let mut seen = vec![false; d + 1];
        for &v in &one_line {
            if v == 0 || v > d || seen[v] {
                return Err(CsfError::InvalidPermutation(format!("{one_line:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((1..=d).collect())
    }

    /// The permutation exchanging `i` and `d+1−i`.
    pub fn reversal(d: usize) -> Self {
        Permutation((1..=d).rev().collect())
    }

    /// Transposition of `a` and `b` in `S_d`.
    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (1..=d).collect();
        v.swap(a - 1, b - 1);
        Permutation(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `δ(i)` for `i ∈ [d]`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&v| self.0[v - 1]).collect())
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.apply(i) == i
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() >= 10 { "," } else { "" };
        let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", s.join(sep))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::new(vec![2, 3, 1]).unwrap();
        let b = Permutation::new(vec![1, 3, 2]).unwrap();
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(3));
        // (a∘b)(1) = a(b(1)) = a(1) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&b).apply(2), 1);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }
}
