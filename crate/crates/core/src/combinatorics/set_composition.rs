use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Composition, Permutation, SetPartition};
use crate::error::{CsfError, Result};

/// An ordered list of disjoint nonempty blocks covering `[d]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetComposition {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetComposition {
    pub fn new(degree: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; degree + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(CsfError::Invalid("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > degree || seen[x] {
                    return Err(CsfError::Invalid(format!(
                        "element {x} repeated or outside [{degree}]"
                    )));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(CsfError::Invalid("blocks do not cover [d]".into()));
        }
        Ok(SetComposition { degree, blocks })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `ℓ(Φ)`
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `α(Φ)`
    pub fn composition(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len() as u32).collect()).expect("nonempty")
    }

    /// `Φ̃`: forget the block order.
    pub fn underlying(&self) -> SetPartition {
        SetPartition::from_blocks(self.degree, &self.blocks).expect("valid blocks")
    }

    /// `type(Φ)`: `α(Φ)` with the block containing `d` marked.
    pub fn type_of(&self) -> MarkedComposition {
        let marked = self
            .blocks
            .iter()
            .position(|b| b.contains(&self.degree))
            .expect("d is covered");
        MarkedComposition::new(self.composition(), marked).expect("index in range")
    }

    /// Every ordering of the blocks of `pi`.
    pub fn orderings(pi: &SetPartition) -> Vec<SetComposition> {
        let blocks = pi.blocks();
        let mut out = Vec::new();
        let mut used = vec![false; blocks.len()];
        let mut cur = Vec::with_capacity(blocks.len());
        fn rec(
            blocks: &[Vec<usize>],
            used: &mut [bool],
            cur: &mut Vec<Vec<usize>>,
            d: usize,
            out: &mut Vec<SetComposition>,
        ) {
            if cur.len() == blocks.len() {
                out.push(SetComposition {
                    degree: d,
                    blocks: cur.clone(),
                });
                return;
            }
            for i in 0..blocks.len() {
                if !used[i] {
                    used[i] = true;
                    cur.push(blocks[i].clone());
                    rec(blocks, used, cur, d, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(&blocks, &mut used, &mut cur, pi.degree(), &mut out);
        out
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree >= 10 { "," } else { "" };
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

/// A composition with one distinguished part, written `α̂`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedComposition {
    alpha: Composition,
    marked: usize,
}

impl MarkedComposition {
    pub fn new(alpha: Composition, marked: usize) -> Result<Self> {
        if marked >= alpha.len() {
            return Err(CsfError::Invalid(format!(
                "marked index {marked} outside composition {alpha}"
            )));
        }
        Ok(MarkedComposition { alpha, marked })
    }

    pub fn from_parts(parts: Vec<u32>, marked: usize) -> Result<Self> {
        MarkedComposition::new(Composition::new(parts)?, marked)
    }

    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    pub fn parts(&self) -> &[u32] {
        self.alpha.parts()
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    pub fn marked_part(&self) -> u32 {
        self.alpha.parts()[self.marked]
    }

    pub fn degree(&self) -> usize {
        self.alpha.size() as usize
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    /// Every marked composition of `d`.
    pub fn all(d: usize) -> Vec<MarkedComposition> {
        let mut out = Vec::new();
        for alpha in Composition::all(d) {
            for marked in 0..alpha.len() {
                out.push(MarkedComposition {
                    alpha: alpha.clone(),
                    marked,
                });
            }
        }
        out.sort();
        out
    }
}

impl Ord for MarkedComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alpha
            .len()
            .cmp(&other.alpha.len())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.marked.cmp(&other.marked))
    }
}

impl PartialOrd for MarkedComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.alpha.parts().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if i == self.marked {
                write!(f, "{p}\u{302}")?;
            } else {
                write!(f, "{p}")?;
            }
        }
        write!(f, ")")
    }
}

/// A pair `(δ, α)` of a permutation and a composition of the same size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledComposition {
    pub delta: Permutation,
    pub alpha: Composition,
}

impl LabelledComposition {
    pub fn new(delta: Permutation, alpha: Composition) -> Result<Self> {
        if delta.len() != alpha.size() as usize {
            return Err(CsfError::DegreeMismatch {
                expected: delta.len(),
                found: alpha.size() as usize,
            });
        }
        Ok(LabelledComposition { delta, alpha })
    }

    /// The set composition whose blocks are consecutive runs of `δ` cut by `α`.
    pub fn set_composition(&self) -> SetComposition {
        let mut blocks = Vec::with_capacity(self.alpha.len());
        let mut pos = 0;
        for &p in self.alpha.parts() {
            blocks.push(self.delta.one_line()[pos..pos + p as usize].to_vec());
            pos += p as usize;
        }
        SetComposition::new(self.delta.len(), blocks).expect("permutation blocks")
    }
}

impl fmt::Display for LabelledComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta, self.alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_marks_block_of_d() {
        let phi = SetComposition::new(3, vec![vec![3], vec![1, 2]]).unwrap();
        assert_eq!(phi.type_of(), MarkedComposition::from_parts(vec![1, 2], 0).unwrap());
        assert_eq!(phi.type_of().to_string(), "(1\u{302},2)");
        assert_eq!(phi.underlying(), "12/3".parse().unwrap());
    }

    #[test]
    fn orderings_count() {
        let pi: SetPartition = "1/24/35".parse().unwrap();
        assert_eq!(SetComposition::orderings(&pi).len(), 6);
    }

    #[test]
    fn marked_composition_counts() {
        // sum_k C(d-1,k-1) k = (d+1) 2^(d-2)
        for d in 2..=7usize {
            assert_eq!(MarkedComposition::all(d).len(), (d + 1) << (d - 2));
        }
        assert!(MarkedComposition::from_parts(vec![1, 1], 2).is_err());
    }

    #[test]
    fn labelled_composition_blocks() {
        let lc = LabelledComposition::new(
            Permutation::new(vec![2, 1, 3]).unwrap(),
            Composition::new(vec![1, 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(lc.set_composition().to_string(), "2|13");
    }
}
