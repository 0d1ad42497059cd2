use std::fmt;

use crate::combinatorics::{Permutation, SetPartition};
use crate::error::{CsfError, Result};
use crate::limits::HARD_MAX_VERTICES;

/// A simple graph on the vertex set `[n]`, `1 ≤ n ≤ 64`.
///
/// Edges are kept sorted as pairs `(i, j)` with `i < j`; adjacency is mirrored
/// in one bitmask per vertex (bit `k` stands for vertex `k+1`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl LabelledGraph {
    /// Builds a graph from 1-indexed edges. Pairs may be given in either order;
    /// loops and repeated edges are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(CsfError::Invalid("a graph needs at least one vertex".into()));
        }
        if n > HARD_MAX_VERTICES {
            return Err(CsfError::CapExceeded {
                what: "vertex count",
                requested: n,
                cap: HARD_MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == j || i == 0 || j > n {
                return Err(CsfError::InvalidEdge(a, b));
            }
            if adj[i - 1] >> (j - 1) & 1 == 1 {
                return Err(CsfError::Invalid(format!("edge {i}{j} listed twice")));
            }
            adj[i - 1] |= 1 << (j - 1);
            adj[j - 1] |= 1 << (i - 1);
            list.push((i, j));
        }
        list.sort_unstable();
        Ok(LabelledGraph { n, edges: list, adj })
    }

    /// Builds from adjacency masks; duplicates are impossible by construction.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for i in 0..n {
            let mut above = adj[i] >> (i + 1) << (i + 1);
            while above != 0 {
                let j = above.trailing_zeros() as usize;
                edges.push((i + 1, j + 1));
                above &= above - 1;
            }
        }
        LabelledGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Result<Self> {
        LabelledGraph::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && v >= 1 && u <= self.n && v <= self.n && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    /// Neighbour bitmask of `v` (1-indexed vertex, bit `k` is vertex `k+1`).
    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// `N(v)` in increasing order.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        mask_to_vertices(self.adj[v - 1])
    }

    /// `N[v]` as a bitmask.
    pub fn closed_nbhd_mask(&self, v: usize) -> u64 {
        self.adj[v - 1] | 1 << (v - 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(CsfError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || self.has_edge(u, v) {
            return Err(CsfError::InvalidEdge(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
        Ok(LabelledGraph::from_adjacency(adj))
    }

    /// `G ∖ uv`
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(CsfError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        adj[u - 1] &= !(1 << (v - 1));
        adj[v - 1] &= !(1 << (u - 1));
        Ok(LabelledGraph::from_adjacency(adj))
    }

    /// Identifies `v` into `u` along the edge `uv`; vertices above `v` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Self> {
        if !self.has_edge(u, v) {
            return Err(CsfError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut adj = self.adj.clone();
        let merged = (adj[u - 1] | adj[v - 1]) & !(1 << (u - 1)) & !(1 << (v - 1));
        for w in mask_to_vertices(merged) {
            adj[w - 1] = adj[w - 1] & !(1 << (v - 1)) | 1 << (u - 1);
        }
        adj[u - 1] = merged;
        adj[v - 1] = 0;
        Ok(LabelledGraph::from_adjacency(drop_vertex(&adj, v)))
    }

    /// `G / jd`: identify `j` with the last vertex `d`, keeping the label `j`.
    pub fn contract_to_j(&self, j: usize) -> Result<Self> {
        self.check_vertex(j)?;
        self.contract_edge(j, self.n)
    }

    /// `G − v`, remaining vertices relabelled in order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(CsfError::Invalid("cannot delete the only vertex".into()));
        }
        Ok(LabelledGraph::from_adjacency(drop_vertex(&self.adj, v)))
    }

    /// `δ(G)`: vertex `i` becomes `δ(i)`.
    pub fn relabel(&self, delta: &Permutation) -> Result<Self> {
        if delta.len() != self.n {
            return Err(CsfError::DegreeMismatch {
                expected: self.n,
                found: delta.len(),
            });
        }
        LabelledGraph::new(
            self.n,
            self.edges
                .iter()
                .map(|&(i, j)| (delta.apply(i), delta.apply(j))),
        )
    }

    /// The permutation moving `v` to `n` and keeping the other vertices in order.
    pub fn last_vertex_permutation(n: usize, v: usize) -> Permutation {
        let one_line = (1..=n)
            .map(|i| match i.cmp(&v) {
                std::cmp::Ordering::Less => i,
                std::cmp::Ordering::Equal => n,
                std::cmp::Ordering::Greater => i - 1,
            })
            .collect();
        Permutation::new(one_line).expect("bijection")
    }

    /// Relabels so that `v` is last and the other vertices keep their order.
    pub fn move_to_last(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        self.relabel(&LabelledGraph::last_vertex_permutation(self.n, v))
    }

    /// `G^r`: `i ↦ n+1−i`.
    pub fn reverse(&self) -> Self {
        self.relabel(&Permutation::reversal(self.n))
            .expect("same degree")
    }

    /// `G | H`
    pub fn disjoint_union(&self, other: &LabelledGraph) -> Result<Self> {
        let off = self.n;
        LabelledGraph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(i, j)| (i + off, j + off))),
        )
    }

    /// `G + H`: vertex `|G|` of `G` is identified with vertex 1 of `H`.
    pub fn concatenate(&self, other: &LabelledGraph) -> Result<Self> {
        let off = self.n - 1;
        LabelledGraph::new(
            self.n + other.n - 1,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(i, j)| (i + off, j + off))),
        )
    }

    /// Connected components of `(V, edges[i] for i in mask)`, as a set partition.
    pub fn components_of_edge_subset(&self, mask: u64) -> SetPartition {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut m = mask;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            let (i, j) = self.edges[e];
            let (a, b) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
            m &= m - 1;
        }
        let roots: Vec<usize> = (0..self.n).map(|x| find(&mut parent, x)).collect();
        SetPartition::from_labels(&roots)
    }

    /// Connected components as a set partition of `[n]`.
    pub fn components(&self) -> SetPartition {
        let all = if self.edges.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.edges.len()) - 1
        };
        self.components_of_edge_subset(all)
    }

    pub fn is_connected(&self) -> bool {
        connected_within(&self.adj, full_mask(self.n))
    }

    /// Whether deleting `v` disconnects its component.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let comp = self.component_mask(v);
        let rest = comp & !(1 << (v - 1));
        rest != 0 && !connected_within(&self.adj, rest)
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.is_cut_vertex(v)).collect()
    }

    fn component_mask(&self, v: usize) -> u64 {
        let mut seen = 1u64 << (v - 1);
        let mut frontier = seen;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[x] & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Whether the graph is a path (in some labelling).
    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && (1..=self.n).all(|v| self.degree(v) <= 2)
    }

    /// Whether `mask` spans a clique.
    pub fn is_clique(&self, mask: u64) -> bool {
        mask_to_vertices(mask)
            .iter()
            .all(|&u| self.adj[u - 1] & mask == mask & !(1 << (u - 1)))
    }

    /// The first missing edge inside `N(v)`, if any.
    pub fn nbhd_non_edge(&self, v: usize) -> Option<(usize, usize)> {
        let nb = self.neighbours(v);
        for (a, &u) in nb.iter().enumerate() {
            for &w in &nb[a + 1..] {
                if !self.has_edge(u, w) {
                    return Some((u, w));
                }
            }
        }
        None
    }

    /// `m_i = max({i} ∪ {j > i : ij ∈ E})`, when the graph is unit interval.
    pub fn m_sequence(&self) -> Option<Vec<usize>> {
        let m: Vec<usize> = (1..=self.n)
            .map(|i| {
                let above = self.adj[i - 1] >> i;
                if above == 0 {
                    i
                } else {
                    i + 64 - above.leading_zeros() as usize
                }
            })
            .collect();
        if m.windows(2).any(|w| w[0] > w[1]) {
            return None;
        }
        // edges must be exactly {ij : i < j ≤ m_i}
        let count: usize = m.iter().enumerate().map(|(i, &mi)| mi - (i + 1)).sum();
        (count == self.edges.len()).then_some(m)
    }

    /// `w_j = min({j} ∪ {i < j : ij ∈ E})`, when the graph is unit interval.
    pub fn w_sequence(&self) -> Option<Vec<usize>> {
        self.m_sequence()?;
        Some(
            (1..=self.n)
                .map(|j| {
                    let below = self.adj[j - 1] & ((1u64 << (j - 1)) - 1);
                    if below == 0 {
                        j
                    } else {
                        below.trailing_zeros() as usize + 1
                    }
                })
                .collect(),
        )
    }

    /// Whether `ij ∈ E` and `i ≤ v < w ≤ j` force `vw ∈ E`.
    pub fn is_unit_interval(&self) -> bool {
        self.m_sequence().is_some()
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_vertices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

fn connected_within(adj: &[u64], within: u64) -> bool {
    if within == 0 {
        return true;
    }
    let start = within.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let x = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[x] & within & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == within
}

// removes vertex v (1-indexed) from adjacency masks, shifting higher bits down
fn drop_vertex(adj: &[u64], v: usize) -> Vec<u64> {
    let low = (1u64 << (v - 1)) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(i, _)| i != v - 1)
        .map(|(_, &m)| (m & low) | (m >> v << (v - 1)))
        .collect()
}

impl fmt::Debug for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}, {:?})", self.n, self.edges)
    }
}

impl fmt::Display for LabelledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.edges.iter().map(|(i, j)| format!("{i}-{j}")).collect();
        write!(f, "n={} [{}]", self.n, e.join(" "))
    }
}
