//! Labelled posets, their linear extensions and P-partition expansions.

use std::fmt;

use num_traits::One;
use rayon::prelude::*;

use super::{QBasis, UBCQSymElement};
use crate::algebra::Linear;
use crate::combinatorics::{
    Composition, LabelledComposition, MarkedComposition, Permutation, SetComposition, SetPartitions,
};
use crate::error::{CsfError, Result};
use crate::graphs::AcyclicOrientation;
use crate::limits;
use crate::rational::Q;

/// A strict partial order on `[d]`, stored as up-set bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabelledPoset {
    d: usize,
    /// bit `j−1` of `up[i−1]` is set iff `i <_P j`
    up: Vec<u64>,
}

impl LabelledPoset {
    /// The transitive closure of `relations`, each `(a, b)` meaning `a <_P b`.
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(d: usize, relations: I) -> Result<Self> {
        limits::check("poset size", d, limits::poset_size())?;
        let mut up = vec![0u64; d];
        for (a, b) in relations {
            if a == 0 || b == 0 || a > d || b > d {
                return Err(CsfError::Invalid(format!("relation {a} < {b} outside [{d}]")));
            }
            up[a - 1] |= 1 << (b - 1);
        }
        // Warshall on bitmasks
        for k in 0..d {
            for i in 0..d {
                if up[i] >> k & 1 == 1 {
                    up[i] |= up[k];
                }
            }
        }
        if (0..d).any(|i| up[i] >> i & 1 == 1) {
            return Err(CsfError::Invalid("relations contain a cycle".into()));
        }
        Ok(LabelledPoset { d, up })
    }

    /// `u <_P v` whenever the orientation has an arc `u → v`.
    pub fn from_orientation(o: &AcyclicOrientation) -> Result<Self> {
        LabelledPoset::new(o.graph().n(), o.arcs())
    }

    pub fn size(&self) -> usize {
        self.d
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.up[a - 1] >> (b - 1) & 1 == 1
    }

    pub fn num_relations(&self) -> usize {
        self.up.iter().map(|m| m.count_ones() as usize).sum()
    }

    fn down_masks(&self) -> Vec<u64> {
        let mut down = vec![0u64; self.d];
        for i in 0..self.d {
            for j in 0..self.d {
                if self.up[i] >> j & 1 == 1 {
                    down[j] |= 1 << i;
                }
            }
        }
        down
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (1..=self.d).filter(|&i| self.up[i - 1] == 0).collect()
    }

    /// `δ(P)`: element `i` becomes `δ(i)`.
    pub fn relabel(&self, delta: &Permutation) -> Result<Self> {
        if delta.len() != self.d {
            return Err(CsfError::DegreeMismatch {
                expected: self.d,
                found: delta.len(),
            });
        }
        let rel = self.relations();
        LabelledPoset::new(self.d, rel.into_iter().map(|(a, b)| (delta.apply(a), delta.apply(b))))
    }

    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.d {
            for j in 1..=self.d {
                if self.less(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Whether the one-line word `w` lists `[d]` in an order extending `<_P`.
    pub fn is_linear_extension(&self, w: &Permutation) -> bool {
        if w.len() != self.d {
            return false;
        }
        let mut pos = vec![0; self.d + 1];
        for (p, &x) in w.one_line().iter().enumerate() {
            pos[x] = p;
        }
        self.relations().into_iter().all(|(a, b)| pos[a] < pos[b])
    }

    /// Every linear extension, as the word `i_1 ⋯ i_d` with `i_1 <_w ⋯ <_w i_d`.
    pub fn linear_extensions(&self) -> Result<Vec<Permutation>> {
        limits::check("poset size", self.d, limits::poset_size())?;
        let down = self.down_masks();
        let d = self.d;
        let firsts: Vec<usize> = (0..d).filter(|&i| down[i] == 0).collect();
        let chunks: Vec<Vec<Vec<usize>>> = firsts
            .par_iter()
            .map(|&f| {
                let mut out = Vec::new();
                let mut word = vec![f + 1];
                extend(&down, d, 1 << f, &mut word, &mut out);
                out
            })
            .collect();
        Ok(chunks
            .into_iter()
            .flatten()
            .map(|w| Permutation::new(w).expect("word lists [d]"))
            .collect())
    }
}

fn extend(down: &[u64], d: usize, placed: u64, word: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if word.len() == d {
        out.push(word.clone());
        return;
    }
    for i in 0..d {
        if placed >> i & 1 == 0 && down[i] & !placed == 0 {
            word.push(i + 1);
            extend(down, d, placed | 1 << i, word, out);
            word.pop();
        }
    }
}

impl fmt::Debug for LabelledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(d={}, {:?})", self.d, self.relations())
    }
}

/// `α^s_w`: cut between positions `j, j+1` exactly when `i_j <_s i_{j+1}`.
fn composition_of(w: &Permutation, rank_s: &[usize]) -> Composition {
    let word = w.one_line();
    let set: Vec<usize> = (1..word.len())
        .filter(|&j| rank_s[word[j - 1]] < rank_s[word[j]])
        .collect();
    Composition::from_descent_set(word.len(), &set).expect("positions in range")
}

fn ranks(s: &Permutation) -> Vec<usize> {
    let mut rank = vec![0; s.len() + 1];
    for (p, &x) in s.one_line().iter().enumerate() {
        rank[x] = p;
    }
    rank
}

/// `Y_P = Σ_w F_{(δ_w, α^s_w)}`, one term per linear extension `w`.
pub fn f_expansion(p: &LabelledPoset, s: &Permutation) -> Result<Vec<LabelledComposition>> {
    if !p.is_linear_extension(s) {
        return Err(CsfError::NotLinearExtension(s.to_string()));
    }
    let rank = ranks(s);
    p.linear_extensions()?
        .into_iter()
        .map(|w| {
            let alpha = composition_of(&w, &rank);
            LabelledComposition::new(w, alpha)
        })
        .collect()
}

/// A linear extension `s` with `i >_s d` exactly when `i >_P d`: everything not
/// above `d` in increasing-label topological order, then `d`, then the up-set of `d`.
pub fn centred_extension(p: &LabelledPoset) -> Permutation {
    let d = p.size();
    let above = p.up[d - 1];
    let down = p.down_masks();
    let mut word = Vec::with_capacity(d);
    let mut placed = 0u64;
    let groups = [!above & !(1 << (d - 1)) & mask(d), 1 << (d - 1), above];
    for group in groups {
        while placed & group != group {
            let next = (0..d)
                .find(|&i| group >> i & 1 == 1 && placed >> i & 1 == 0 && down[i] & !placed == 0)
                .expect("a poset always has a minimal unplaced element");
            placed |= 1 << next;
            word.push(next + 1);
        }
    }
    Permutation::new(word).expect("word lists [d]")
}

fn mask(d: usize) -> u64 {
    if d == 64 {
        u64::MAX
    } else {
        (1 << d) - 1
    }
}

/// `y_P` in the `Q`-basis.
///
/// Relabels `P` by the `ε` fixing `d` that makes `s` read `1, …, p−1, d, p, …, d−1`,
/// then counts extensions `w` of `ε(P)` by `α^{ε(s)}_w` and the part starting with `d`.
pub fn q_expansion(p: &LabelledPoset) -> Result<UBCQSymElement> {
    let d = p.size();
    if d == 0 {
        return Err(CsfError::Invalid("empty poset".into()));
    }
    let s = centred_extension(p);
    let pos_d = s.one_line().iter().position(|&x| x == d).expect("d listed") + 1;
    let mut eps = vec![0; d + 1];
    for (i, &x) in s.one_line().iter().enumerate() {
        let i = i + 1;
        eps[x] = match i.cmp(&pos_d) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => d,
            std::cmp::Ordering::Greater => i - 1,
        };
    }
    let eps = Permutation::new(eps[1..].to_vec())?;
    let ep = p.relabel(&eps)?;
    let es = Permutation::new(s.one_line().iter().map(|&x| eps.apply(x)).collect())?;
    let rank = ranks(&es);
    let mut terms = Linear::new();
    for w in ep.linear_extensions()? {
        let alpha = composition_of(&w, &rank);
        let at = w.one_line().iter().position(|&x| x == d).expect("d listed");
        let mut start = 0;
        let mut marked = None;
        for (k, &part) in alpha.parts().iter().enumerate() {
            if start == at {
                marked = Some(k);
            }
            start += part as usize;
        }
        let marked = marked.ok_or_else(|| {
            CsfError::Invalid(format!("extension {w} does not start a part with {d}"))
        })?;
        terms.add_term(MarkedComposition::new(alpha, marked)?, Q::one());
    }
    Ok(UBCQSymElement {
        degree: d,
        basis: QBasis::Q,
        terms,
    })
}

/// `y_P` in the `M`-basis, directly: `M_{type(Φ)}` for every set composition `Φ`
/// whose block order strictly increases along `<_P`.
pub fn m_expansion(p: &LabelledPoset) -> Result<UBCQSymElement> {
    let d = p.size();
    limits::check("set partition degree", d, limits::set_partition_degree())?;
    let relations = p.relations();
    let mut terms = Linear::new();
    for pi in SetPartitions::unchecked(d) {
        for phi in SetComposition::orderings(&pi) {
            let mut rank = vec![0; d + 1];
            for (k, block) in phi.blocks().iter().enumerate() {
                for &x in block {
                    rank[x] = k;
                }
            }
            if relations.iter().all(|&(a, b)| rank[a] < rank[b]) {
                terms.add_term(phi.type_of(), Q::one());
            }
        }
    }
    Ok(UBCQSymElement {
        degree: d,
        basis: QBasis::M,
        terms,
    })
}
