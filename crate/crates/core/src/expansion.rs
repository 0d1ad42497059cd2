//! The signed subgraph expansion `Σ_{S ⊆ E} (−1)^{|S|} f(π(S))`, where `π(S)` is
//! the partition of the vertices into connected components of `(V, S)`.
//!
//! Edges are decided in order with a rollback union-find. When `prune` is set,
//! an edge whose endpoints are already joined ends the branch: including or
//! excluding it yields identical component partitions with opposite signs, so
//! the whole subtree sums to zero.

use std::collections::HashMap;
use std::hash::Hash;

use crate::combinatorics::{BType, Partition, SetPartition};
use crate::error::Result;
use crate::limits;

/// Union-find over at most 64 vertices, union by size, no path compression.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<u8>,
    size: Vec<u8>,
    history: Vec<(u8, u8)>,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u8).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    /// Starts with the blocks of `pi` already joined; vertices past `pi.degree()` are singletons.
    pub fn from_set_partition(pi: &SetPartition, n: usize) -> Self {
        let mut d = Dsu::new(n);
        for block in pi.blocks() {
            for w in block.windows(2) {
                d.union(w[0] - 1, w[1] - 1);
            }
        }
        d.history.clear();
        d
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u8;
        self.size[ra] += self.size[rb];
        self.history.push((rb as u8, ra as u8));
        true
    }

    pub fn rollback(&mut self) {
        let (child, root) = self.history.pop().expect("nothing to roll back");
        self.parent[child as usize] = child;
        self.size[root as usize] -= self.size[child as usize];
    }

    fn root_sizes(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .filter(|&(v, &p)| p as usize == v)
            .map(|(v, _)| (v, self.size[v] as u32))
    }

    pub fn set_partition(&self) -> SetPartition {
        let roots: Vec<usize> = (0..self.parent.len()).map(|v| self.find(v)).collect();
        SetPartition::from_labels(&roots)
    }

    pub fn partition(&self) -> Partition {
        Partition::from_parts(self.root_sizes().map(|(_, s)| s).collect())
    }

    /// `type(π)` with respect to the last vertex.
    pub fn btype(&self) -> BType {
        let last = self.find(self.parent.len() - 1);
        let mut b = 0;
        let mut rest = Vec::new();
        for (r, s) in self.root_sizes() {
            if r == last {
                b = s;
            } else {
                rest.push(s);
            }
        }
        BType {
            lambda: Partition::from_parts(rest),
            b,
        }
    }
}

const SPLIT_DEPTH: usize = 8;
const PARALLEL_MIN_EDGES: usize = 14;

pub(crate) fn expand<K, F>(
    n: usize,
    edges: &[(usize, usize)],
    prune: bool,
    key: &F,
) -> Result<HashMap<K, i64>>
where
    K: Hash + Eq + Send,
    F: Fn(&Dsu) -> K + Sync,
{
    expand_from(Dsu::new(n), edges, prune, key)
}

/// [`expand`] over `edges` starting from the state `init` instead of the discrete partition.
pub(crate) fn expand_from<K, F>(
    init: Dsu,
    edges: &[(usize, usize)],
    prune: bool,
    key: &F,
) -> Result<HashMap<K, i64>>
where
    K: Hash + Eq + Send,
    F: Fn(&Dsu) -> K + Sync,
{
    limits::check("edge count", edges.len(), limits::max_edges())?;
    let e0: Vec<(usize, usize)> = edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let depth = if edges.len() >= PARALLEL_MIN_EDGES { SPLIT_DEPTH } else { 0 };
    let mut out = par_go(0, init, 1, depth, &e0, prune, key);
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn par_go<K, F>(
    k: usize,
    mut dsu: Dsu,
    sign: i64,
    depth: usize,
    edges: &[(usize, usize)],
    prune: bool,
    key: &F,
) -> HashMap<K, i64>
where
    K: Hash + Eq + Send,
    F: Fn(&Dsu) -> K + Sync,
{
    if depth == 0 || k == edges.len() {
        let mut out = HashMap::new();
        go(k, &mut dsu, sign, edges, prune, key, &mut out);
        return out;
    }
    let (u, v) = edges[k];
    let joined = dsu.find(u) == dsu.find(v);
    if joined && prune {
        return HashMap::new();
    }
    let mut with = dsu.clone();
    with.union(u, v);
    let (mut a, b) = rayon::join(
        || par_go(k + 1, dsu, sign, depth - 1, edges, prune, key),
        || par_go(k + 1, with, -sign, depth - 1, edges, prune, key),
    );
    for (kk, c) in b {
        *a.entry(kk).or_insert(0) += c;
    }
    a.retain(|_, c| *c != 0);
    a
}

fn go<K, F>(
    k: usize,
    dsu: &mut Dsu,
    sign: i64,
    edges: &[(usize, usize)],
    prune: bool,
    key: &F,
    out: &mut HashMap<K, i64>,
) where
    K: Hash + Eq,
    F: Fn(&Dsu) -> K,
{
    if k == edges.len() {
        *out.entry(key(dsu)).or_insert(0) += sign;
        return;
    }
    let (u, v) = edges[k];
    if dsu.union(u, v) {
        go(k + 1, dsu, -sign, edges, prune, key, out);
        dsu.rollback();
        go(k + 1, dsu, sign, edges, prune, key, out);
    } else if !prune {
        go(k + 1, dsu, -sign, edges, prune, key, out);
        go(k + 1, dsu, sign, edges, prune, key, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pruned_matches_literal() {
        // K_4 plus a pendant vertex
        let edges = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)];
        let mut a = expand(5, &edges, false, &|d: &Dsu| d.set_partition()).unwrap();
        let mut b = expand(5, &edges, true, &|d: &Dsu| d.set_partition()).unwrap();
        a.retain(|_, c| *c != 0);
        b.retain(|_, c| *c != 0);
        assert_eq!(a, b);
    }

    #[test]
    fn parallel_split_matches_sequential() {
        let mut edges = Vec::new();
        for i in 1..=6 {
            for j in i + 1..=6 {
                edges.push((i, j));
            }
        }
        assert!(edges.len() >= PARALLEL_MIN_EDGES);
        let par = expand(6, &edges, true, &|d: &Dsu| d.btype()).unwrap();
        let mut seq = HashMap::new();
        let e0: Vec<_> = edges.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        go(0, &mut Dsu::new(6), 1, &e0, true, &|d: &Dsu| d.btype(), &mut seq);
        seq.retain(|_, c| *c != 0);
        let mut par = par;
        par.retain(|_, c| *c != 0);
        assert_eq!(par, seq);
    }

    #[test]
    fn rollback_restores() {
        let mut d = Dsu::new(3);
        d.union(0, 1);
        d.union(1, 2);
        d.rollback();
        assert_eq!(d.set_partition(), "12/3".parse().unwrap());
    }
}
