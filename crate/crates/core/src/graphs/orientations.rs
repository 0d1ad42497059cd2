//! Acyclic orientations and their sinks.

use std::collections::BTreeMap;

use super::graph::mask_to_vertices;
use super::LabelledGraph;
use crate::error::{CsfError, Result};
use crate::limits;

/// An acyclic orientation of a graph. `forward[e]` says edge `(i, j)`, `i < j`,
/// is directed `i → j`; otherwise `j → i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AcyclicOrientation {
    graph: LabelledGraph,
    forward: Vec<bool>,
}

impl AcyclicOrientation {
    /// Checks acyclicity before accepting `forward`.
    pub fn new(graph: LabelledGraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != graph.num_edges() {
            return Err(CsfError::DegreeMismatch {
                expected: graph.num_edges(),
                found: forward.len(),
            });
        }
        let o = AcyclicOrientation { graph, forward };
        let n = o.graph.n();
        let mut indeg: Vec<usize> = (1..=n).map(|v| (o.in_mask(v)).count_ones() as usize).collect();
        let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v - 1] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for w in mask_to_vertices(o.out_mask(u)) {
                indeg[w - 1] -= 1;
                if indeg[w - 1] == 0 {
                    stack.push(w);
                }
            }
        }
        if seen != n {
            return Err(CsfError::Invalid("orientation has a directed cycle".into()));
        }
        Ok(o)
    }

    pub fn graph(&self) -> &LabelledGraph {
        &self.graph
    }

    pub fn forward(&self) -> &[bool] {
        &self.forward
    }

    /// Directed edges `(tail, head)`.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.forward)
            .map(|(&(i, j), &f)| if f { (i, j) } else { (j, i) })
    }

    /// Heads of arcs leaving `v`, as a bitmask.
    pub fn out_mask(&self, v: usize) -> u64 {
        self.arcs()
            .filter(|&(t, _)| t == v)
            .fold(0, |m, (_, h)| m | 1 << (h - 1))
    }

    fn in_mask(&self, v: usize) -> u64 {
        self.arcs()
            .filter(|&(_, h)| h == v)
            .fold(0, |m, (t, _)| m | 1 << (t - 1))
    }

    /// Vertices without outgoing arcs.
    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = 0u64;
        for (t, _) in self.arcs() {
            has_out |= 1 << (t - 1);
        }
        (1..=self.graph.n()).filter(|&v| has_out >> (v - 1) & 1 == 0).collect()
    }
}

fn edge_cap(g: &LabelledGraph) -> Result<()> {
    limits::check("edge count", g.num_edges(), limits::max_edges())
}

/// Calls `f(forward, sink_mask)` once per acyclic orientation of `g`.
///
/// Backtracks over edges in order, keeping the descendant set of every vertex
/// so a new arc `u → v` is rejected as soon as `u` is reachable from `v`.
pub fn visit_acyclic_orientations<F>(g: &LabelledGraph, mut f: F) -> Result<()>
where
    F: FnMut(&[bool], u64),
{
    edge_cap(g)?;
    let n = g.n();
    let edges = g.edges();
    let mut forward = vec![false; edges.len()];
    let reach = vec![0u64; n];
    fn rec<F: FnMut(&[bool], u64)>(
        k: usize,
        edges: &[(usize, usize)],
        reach: &[u64],
        has_out: u64,
        forward: &mut [bool],
        n: usize,
        f: &mut F,
    ) {
        if k == edges.len() {
            f(forward, super::graph::full_mask(n) & !has_out);
            return;
        }
        let (i, j) = (edges[k].0 - 1, edges[k].1 - 1);
        for (dir, (t, h)) in [(true, (i, j)), (false, (j, i))] {
            if reach[h] >> t & 1 == 1 {
                continue;
            }
            let mut next = reach.to_vec();
            let gained = reach[h] | 1 << h;
            for (x, r) in next.iter_mut().enumerate() {
                if x == t || *r >> t & 1 == 1 {
                    *r |= gained;
                }
            }
            forward[k] = dir;
            rec(k + 1, edges, &next, has_out | 1 << t, forward, n, f);
        }
    }
    rec(0, edges, &reach, 0, &mut forward, n, &mut f);
    Ok(())
}

/// Every acyclic orientation of `g`, in a fixed order.
pub fn enumerate_acyclic_orientations(g: &LabelledGraph) -> Result<Vec<AcyclicOrientation>> {
    let mut out = Vec::new();
    visit_acyclic_orientations(g, |fw, _| {
        out.push(AcyclicOrientation {
            graph: g.clone(),
            forward: fw.to_vec(),
        })
    })?;
    Ok(out)
}

pub fn count_acyclic_orientations(g: &LabelledGraph) -> Result<u64> {
    let mut c = 0;
    visit_acyclic_orientations(g, |_, _| c += 1)?;
    Ok(c)
}

/// `j ↦ sink(G, j)`; zero entries omitted.
pub fn sink_counts(g: &LabelledGraph) -> Result<BTreeMap<usize, u64>> {
    let mut t = BTreeMap::new();
    visit_acyclic_orientations(g, |_, sinks| {
        *t.entry(sinks.count_ones() as usize).or_insert(0) += 1;
    })?;
    Ok(t)
}

/// `j ↦ sink_v(G, j)`: orientations with `j` sinks, one of them `v`.
pub fn sink_counts_at(g: &LabelledGraph, v: usize) -> Result<BTreeMap<usize, u64>> {
    if v == 0 || v > g.n() {
        return Err(CsfError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut t = BTreeMap::new();
    visit_acyclic_orientations(g, |_, sinks| {
        if sinks >> (v - 1) & 1 == 1 {
            *t.entry(sinks.count_ones() as usize).or_insert(0) += 1;
        }
    })?;
    Ok(t)
}

/// `j ↦` number of acyclic orientations of `G − v` with `j` sinks, none in `N(v)`.
/// Requires `N(v)` to be a clique.
pub fn sink_counts_avoiding(g: &LabelledGraph, v: usize) -> Result<BTreeMap<usize, u64>> {
    if v == 0 || v > g.n() {
        return Err(CsfError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if let Some((u, w)) = g.nbhd_non_edge(v) {
        return Err(CsfError::NotClique { vertex: v, u, w });
    }
    if g.n() == 1 {
        // the empty graph has one orientation, with no sinks
        return Ok(BTreeMap::from([(0, 1)]));
    }
    let h = g.delete_vertex(v)?;
    // N(v) in the labels of G − v
    let nb = g.adj_mask(v);
    let low = (1u64 << (v - 1)) - 1;
    let nb_h = (nb & low) | (nb >> v << (v - 1));
    let mut t = BTreeMap::new();
    visit_acyclic_orientations(&h, |_, sinks| {
        if sinks & nb_h == 0 {
            *t.entry(sinks.count_ones() as usize).or_insert(0) += 1;
        }
    })?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete, cycle, path};

    #[test]
    fn orientation_counts() {
        assert_eq!(count_acyclic_orientations(&path(4).unwrap()).unwrap(), 8);
        assert_eq!(count_acyclic_orientations(&complete(3).unwrap()).unwrap(), 6);
        assert_eq!(count_acyclic_orientations(&cycle(4).unwrap()).unwrap(), 14);
        assert_eq!(count_acyclic_orientations(&complete(5).unwrap()).unwrap(), 120);
    }

    #[test]
    fn enumerated_orientations_are_acyclic_and_distinct() {
        let g = cycle(5).unwrap();
        let all = enumerate_acyclic_orientations(&g).unwrap();
        assert_eq!(all.len(), 30);
        for o in &all {
            assert!(AcyclicOrientation::new(g.clone(), o.forward().to_vec()).is_ok());
        }
        let mut fw: Vec<_> = all.iter().map(|o| o.forward().to_vec()).collect();
        fw.sort();
        fw.dedup();
        assert_eq!(fw.len(), 30);
        assert!(AcyclicOrientation::new(complete(3).unwrap(), vec![true, false, true]).is_err());
    }

    #[test]
    fn path_sinks_at_end() {
        let t = sink_counts_at(&path(4).unwrap(), 4).unwrap();
        assert_eq!(t.get(&2), Some(&3));
        assert_eq!(t.get(&1), Some(&1));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn complete_graph_has_one_sink() {
        let t = sink_counts_at(&complete(4).unwrap(), 2).unwrap();
        assert_eq!(t, BTreeMap::from([(1, 6)]));
    }

    #[test]
    fn avoiding_requires_clique() {
        let e = sink_counts_avoiding(&path(3).unwrap(), 2).unwrap_err();
        assert!(matches!(e, CsfError::NotClique { vertex: 2, u: 1, w: 3 }));
        // G = P_4, v = 4: orientations of P_3 with no sink at 3
        let t = sink_counts_avoiding(&path(4).unwrap(), 4).unwrap();
        assert_eq!(t, BTreeMap::from([(1, 2)]));
    }
}
