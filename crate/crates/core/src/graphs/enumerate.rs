//! Small-graph enumerators for the exhaustive checks: connected graphs up to
//! isomorphism, trees up to isomorphism, and seeded random connected graphs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LabelledGraph;
use crate::error::{CsfError, Result};

/// Largest `n` accepted by [`connected_graph_classes`].
pub const MAX_CLASS_VERTICES: usize = 7;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> LabelledGraph {
    LabelledGraph::new(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e),
    )
    .expect("valid pairs")
}

/// Lexicographic successor of a permutation of `0..n`; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// One connected graph on `[n]` per isomorphism class; each representative
/// is the class member with the smallest edge mask.
pub fn connected_graph_classes(n: usize) -> Result<Vec<LabelledGraph>> {
    if n == 0 || n > MAX_CLASS_VERTICES {
        return Err(CsfError::CapExceeded {
            what: "vertex count for isomorphism classes",
            requested: n,
            cap: MAX_CLASS_VERTICES,
        });
    }
    let pairs = pairs(n);
    let m = pairs.len();
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i - 1][j - 1] = k;
        index[j - 1][i - 1] = k;
    }
    let mut seen = vec![false; 1usize << m];
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        if seen[mask as usize] {
            continue;
        }
        let g = graph_from_mask(n, &pairs, mask);
        if !g.is_connected() {
            continue;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let mut image = 0u64;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << index[perm[i - 1]][perm[j - 1]];
                }
            }
            seen[image as usize] = true;
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out.push(g);
    }
    Ok(out)
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| ahu(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical string of an unrooted tree, rooted at its centre(s).
fn tree_code(g: &LabelledGraph) -> String {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (1..=n).map(|v| g.neighbours(v).iter().map(|w| w - 1).collect()).collect();
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            deg[l] = 0;
            for &w in &adj[l] {
                if deg[w] > 0 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    leaves
        .iter()
        .map(|&c| ahu(&adj, c, usize::MAX))
        .min()
        .expect("a centre exists")
}

fn tree_from_pruefer(n: usize, code: &[usize]) -> LabelledGraph {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf + 1, c + 1));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0] + 1, rest[1] + 1));
    LabelledGraph::new(n, edges).expect("tree edges")
}

/// One tree on `[n]` per isomorphism class, first found in Prüfer order.
pub fn tree_classes(n: usize) -> Result<Vec<LabelledGraph>> {
    if n == 0 || n > 10 {
        return Err(CsfError::CapExceeded {
            what: "vertex count for tree classes",
            requested: n,
            cap: 10,
        });
    }
    if n == 1 {
        return Ok(vec![LabelledGraph::empty(1)?]);
    }
    if n == 2 {
        return Ok(vec![LabelledGraph::new(2, [(1, 2)])?]);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut code = vec![0usize; n - 2];
    loop {
        let t = tree_from_pruefer(n, &code);
        if seen.insert(tree_code(&t)) {
            out.push(t);
        }
        // odometer over [n]^{n-2}
        let mut k = code.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            code[k] += 1;
            if code[k] < n {
                break;
            }
            code[k] = 0;
        }
    }
}

/// `count` connected labelled graphs on `[n]`, each edge present with probability ½,
/// rejection-sampled from a seeded ChaCha stream.
pub fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Result<Vec<LabelledGraph>> {
    let pairs = pairs(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mask: u64 = pairs
            .iter()
            .enumerate()
            .fold(0, |m, (k, _)| if rng.gen_bool(0.5) { m | 1 << k } else { m });
        let g = graph_from_mask(n, &pairs, mask);
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graph_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| tree_classes(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = random_connected_graphs(6, 20, 7).unwrap();
        let b = random_connected_graphs(6, 20, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.is_connected() && g.n() == 6));
    }
}
