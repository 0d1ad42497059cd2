//! Arithmetic progressions of graphs and their builders.

use std::collections::BTreeMap;

use serde::Serialize;

use super::y_of;
use crate::algebra::Linear;
use crate::error::{CsfError, Result};
use crate::graphs::families::{self, canonical_name};
use crate::graphs::LabelledGraph;
use crate::rational::Q;
use crate::sym::x_of;

/// Which function of each graph must progress.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `y_G` in UBCSym, centred at the last vertex.
    Centred,
    /// `X_G` in Sym.
    Commutative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub length: usize,
    pub mode: Mode,
    pub holds: bool,
    /// Smallest `j` with `f(G_j) ≠ ((k−j)/k) f(G_0) + (j/k) f(G_k)`.
    pub first_failure: Option<usize>,
}

fn first_failure<K: Ord + Clone>(vals: &[Linear<K>]) -> Option<usize> {
    let k = vals.len() - 1;
    let kq = Q::from_integer(k.into());
    (1..k).find(|&j| {
        let a = Q::from_integer((k - j).into()) / &kq;
        let b = Q::from_integer(j.into()) / &kq;
        let mut rhs = vals[0].scaled(&a);
        rhs.add_scaled(&vals[k], &b);
        rhs != vals[j]
    })
}

/// Checks that `f(G_0), …, f(G_k)` is an arithmetic progression, in the `p`-basis.
pub fn verify_progression(graphs: &[LabelledGraph], mode: Mode) -> Result<ProgressionReport> {
    if graphs.len() < 2 {
        return Err(CsfError::Invalid("a progression needs at least two graphs".into()));
    }
    let n = graphs[0].n();
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(CsfError::DegreeMismatch {
            expected: n,
            found: g.n(),
        });
    }
    let failure = match mode {
        Mode::Centred => {
            let vals = graphs
                .iter()
                .map(|g| Ok(y_of(g)?.terms))
                .collect::<Result<Vec<_>>>()?;
            first_failure(&vals)
        }
        Mode::Commutative => {
            let vals = graphs
                .iter()
                .map(|g| Ok(x_of(g)?.terms))
                .collect::<Result<Vec<_>>>()?;
            first_failure(&vals)
        }
    };
    Ok(ProgressionReport {
        length: graphs.len(),
        mode,
        holds: failure.is_none(),
        first_failure: failure,
    })
}

/// `G_0 = G`, `G_j = G_{j−1} + v_j w`, given `N[v_1] = ⋯ = N[v_k]` and `w` adjacent to no `v_j`.
pub fn closed_neighbourhood_progression(
    g: &LabelledGraph,
    vs: &[usize],
    w: usize,
) -> Result<Vec<LabelledGraph>> {
    for &v in vs.iter().chain([&w]) {
        if v == 0 || v > g.n() {
            return Err(CsfError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    let Some(&v1) = vs.first() else {
        return Err(CsfError::Invalid("no vertices to join".into()));
    };
    let mut seen = vec![w];
    for &v in vs {
        if seen.contains(&v) {
            return Err(CsfError::Invalid(format!("vertex {v} repeated")));
        }
        seen.push(v);
        if g.closed_nbhd_mask(v) != g.closed_nbhd_mask(v1) {
            return Err(CsfError::Invalid(format!(
                "N[{v}] differs from N[{v1}]"
            )));
        }
        if g.has_edge(v, w) {
            return Err(CsfError::Invalid(format!("{w} is adjacent to {v}")));
        }
    }
    let mut out = vec![g.clone()];
    for &v in vs {
        let next = out.last().expect("nonempty").add_edge(v, w)?;
        out.push(next);
    }
    Ok(out)
}

fn seqs(g: &LabelledGraph) -> Result<(Vec<usize>, Vec<usize>)> {
    match (g.m_sequence(), g.w_sequence()) {
        (Some(m), Some(w)) => Ok((m, w)),
        _ => Err(CsfError::Invalid("graph is not a labelled unit interval graph".into())),
    }
}

fn equal_pairs(m: &[usize], w: &[usize], range: impl Iterator<Item = usize>) -> bool {
    let pairs: Vec<(usize, usize)> = range.map(|b| (w[b - 1], m[b - 1])).collect();
    pairs.windows(2).all(|p| p[0] == p[1])
}

/// Forward growth at `i`: `G_j = G + {ib : m_i+1 ≤ b ≤ m_i+j}`.
///
/// Requires `i < |G|`, `m_i+1 ≤ m_{i+1}` and equal `(w_b, m_b)` for
/// `m_i+1 ≤ b ≤ m_i+k`. With `centred`, additionally `m_i+k < |G|`.
pub fn forward_progression(
    g: &LabelledGraph,
    i: usize,
    k: usize,
    centred: bool,
) -> Result<Vec<LabelledGraph>> {
    let (m, w) = seqs(g)?;
    let n = g.n();
    let bad = |why: &str| Err(CsfError::Invalid(format!("forward progression at {i}: {why}")));
    if i == 0 || i >= n || k == 0 {
        return bad("requires 1 <= i < |G| and k >= 1");
    }
    let mi = m[i - 1];
    if mi + 1 > m[i] {
        return bad("requires m_i + 1 <= m_{i+1}");
    }
    if mi + k > n || (centred && mi + k >= n) {
        return bad("range m_i+1..m_i+k leaves the graph");
    }
    if !equal_pairs(&m, &w, mi + 1..=mi + k) {
        return bad("the pairs (w_b, m_b) differ");
    }
    let mut out = vec![g.clone()];
    for b in mi + 1..=mi + k {
        let next = out.last().expect("nonempty").add_edge(i, b)?;
        out.push(next);
    }
    Ok(out)
}

/// Backward growth at `i`: `G_j = G + {bi : w_i−1 ≥ b ≥ w_i−j}`.
///
/// Requires `i > 1`, `w_i−1 ≥ w_{i−1}` and equal `(w_b, m_b)` for `w_i−k ≤ b ≤ w_i−1`.
pub fn backward_progression(g: &LabelledGraph, i: usize, k: usize) -> Result<Vec<LabelledGraph>> {
    let (m, w) = seqs(g)?;
    let n = g.n();
    let bad = |why: &str| Err(CsfError::Invalid(format!("backward progression at {i}: {why}")));
    if i <= 1 || i > n || k == 0 {
        return bad("requires 1 < i <= |G| and k >= 1");
    }
    let wi = w[i - 1];
    if wi < w[i - 2] + 1 {
        return bad("requires w_i - 1 >= w_{i-1}");
    }
    if k >= wi {
        return bad("range w_i-k..w_i-1 leaves the graph");
    }
    if !equal_pairs(&m, &w, wi - k..wi) {
        return bad("the pairs (w_b, m_b) differ");
    }
    let mut out = vec![g.clone()];
    for b in (wi - k..wi).rev() {
        let next = out.last().expect("nonempty").add_edge(b, i)?;
        out.push(next);
    }
    Ok(out)
}

/// A named progression of family members.
#[derive(Clone, Debug)]
pub struct Progression {
    pub graphs: Vec<LabelledGraph>,
    pub mode: Mode,
}

/// Family names with a built-in progression.
pub const PROGRESSION_FAMILIES: &[(&str, &str)] = &[
    ("gamma", "m n"),
    ("ice-cream", "n"),
    ("snowy-twin-peaks", "n"),
    ("wl", "m n"),
];

/// The progression through the members of a family:
///
/// - `gamma`: `Γ^{(m−1)}_{m,n}, …, Γ^{(1)}_{m,n}`, in Sym;
/// - `ice-cream`: `IC^{(n)}_{n+1}, …, IC^{(1)}_{n+1}`;
/// - `snowy-twin-peaks`: `STP^1_{n+1}, …, STP^{n−2}_{n+1}, IC^{(2)}_{n+1}`;
/// - `wl` (`n ≥ 1`): `WL^{(m−2)}_{m,n}, …, WL^{(1)}_{m,n}, WL^{(m−2)}_{m+1,n−1}`.
pub fn family_progression(name: &str, params: &BTreeMap<String, String>) -> Result<Progression> {
    let canon = canonical_name(name).ok_or_else(|| CsfError::UnknownFamily(name.to_string()))?;
    let get = |key: &str| -> Result<usize> {
        let raw = params.get(key).ok_or_else(|| {
            CsfError::Invalid(format!("progression `{canon}` needs parameter `{key}`"))
        })?;
        raw.trim().parse::<usize>().map_err(|_| {
            CsfError::Invalid(format!("parameter `{key}` = `{raw}` is not a nonnegative integer"))
        })
    };
    match canon {
        "gamma" => {
            let (m, n) = (get("m")?, get("n")?);
            families::gamma(m, n, 1)?;
            let graphs = (1..m)
                .rev()
                .map(|k| families::gamma(m, n, k))
                .collect::<Result<_>>()?;
            Ok(Progression {
                graphs,
                mode: Mode::Commutative,
            })
        }
        "ice-cream" => {
            let n = get("n")?;
            families::ice_cream(n, 1)?;
            let graphs = (1..=n)
                .rev()
                .map(|k| families::ice_cream(n, k))
                .collect::<Result<_>>()?;
            Ok(Progression {
                graphs,
                mode: Mode::Centred,
            })
        }
        "snowy-twin-peaks" => {
            let n = get("n")?;
            families::snowy_twin_peaks(n, 1)?;
            let mut graphs = (1..=n - 2)
                .map(|k| families::snowy_twin_peaks(n, k))
                .collect::<Result<Vec<_>>>()?;
            graphs.push(families::ice_cream(n, 2)?);
            Ok(Progression {
                graphs,
                mode: Mode::Centred,
            })
        }
        "wl" => {
            let (m, n) = (get("m")?, get("n")?);
            if n == 0 {
                return Err(CsfError::ParamOutOfRange {
                    family: "wl progression".into(),
                    bound: "n >= 1".into(),
                });
            }
            families::wide_lollipop(m, n, 1)?;
            let mut graphs = (1..=m - 2)
                .rev()
                .map(|k| families::wide_lollipop(m, n, k))
                .collect::<Result<Vec<_>>>()?;
            graphs.push(families::wide_lollipop(m + 1, n - 1, m - 2)?);
            Ok(Progression {
                graphs,
                mode: Mode::Centred,
            })
        }
        other => Err(CsfError::Invalid(format!("family `{other}` has no built-in progression"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::*;

    fn params(kv: &[(&str, usize)]) -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    }

    fn k6_with_pendants() -> LabelledGraph {
        let mut edges = Vec::new();
        for i in 1..=6 {
            for j in i + 1..=6 {
                edges.push((i, j));
            }
        }
        edges.extend([(6, 7), (9, 1), (5, 8)]);
        LabelledGraph::new(9, edges).unwrap()
    }

    #[test]
    fn nine_vertex_progression() {
        let gs = closed_neighbourhood_progression(&k6_with_pendants(), &[2, 3, 4], 9).unwrap();
        let counts: Vec<usize> = gs.iter().map(|g| g.num_edges()).collect();
        assert_eq!(counts, vec![18, 19, 20, 21]);
        let r = verify_progression(&gs, Mode::Commutative).unwrap();
        assert!(r.holds);
        assert!(closed_neighbourhood_progression(&k6_with_pendants(), &[2, 7], 9).is_err());
        assert!(closed_neighbourhood_progression(&k6_with_pendants(), &[2, 3], 1).is_err());
    }

    #[test]
    fn length_two_always_holds() {
        let gs = vec![path(4).unwrap(), cycle(4).unwrap()];
        assert!(verify_progression(&gs, Mode::Centred).unwrap().holds);
        let bad = vec![path(4).unwrap(), cycle(4).unwrap(), complete(4).unwrap()];
        let r = verify_progression(&bad, Mode::Commutative).unwrap();
        assert_eq!(r.first_failure, Some(1));
        assert!(verify_progression(&[path(3).unwrap(), path(4).unwrap()], Mode::Centred).is_err());
    }

    #[test]
    fn family_endpoints() {
        for m in 3..=6 {
            for n in 1..=3 {
                let p = family_progression("gamma", &params(&[("m", m), ("n", n)])).unwrap();
                let head = complete(1).unwrap().disjoint_union(&lollipop(m - 1, n).unwrap()).unwrap();
                assert_eq!(p.graphs[0], head);
                assert_eq!(*p.graphs.last().unwrap(), melting_lollipop(m, n, 1).unwrap());
                assert_eq!(forward_progression(&p.graphs[0], 1, m - 2, false).unwrap(), p.graphs);
            }
        }
        for n in 2..=6 {
            let p = family_progression("ice-cream", &params(&[("n", n)])).unwrap();
            let head = complete(n).unwrap().disjoint_union(&complete(1).unwrap()).unwrap();
            assert_eq!(p.graphs[0], head);
            assert_eq!(*p.graphs.last().unwrap(), twin_peaks(n).unwrap());
            assert_eq!(backward_progression(&p.graphs[0], n + 1, n - 1).unwrap(), p.graphs);
        }
        for n in 3..=6 {
            let p = family_progression("snowy-twin-peaks", &params(&[("n", n)])).unwrap();
            assert_eq!(p.graphs[0], complete(2).unwrap().concatenate(&twin_peaks(n - 1).unwrap()).unwrap());
            assert_eq!(forward_progression(&p.graphs[0], 1, n - 2, true).unwrap(), p.graphs);
        }
        for m in 4..=6 {
            for n in 1..=3 {
                let p = family_progression("wl", &params(&[("m", m), ("n", n)])).unwrap();
                let head = complete(m - 1).unwrap().concatenate(&triangular_ladder(n + 2).unwrap()).unwrap();
                assert_eq!(p.graphs[0], head);
            }
            let p = family_progression("wl", &params(&[("m", m), ("n", 1)])).unwrap();
            let tail = &p.graphs[p.graphs.len() - 2];
            assert_eq!(*tail, snowy_twin_peaks(m, 2).unwrap().reverse());
        }
    }

    #[test]
    fn family_progressions_hold() {
        for m in 3..=6 {
            for n in 1..=3 {
                let p = family_progression("gamma", &params(&[("m", m), ("n", n)])).unwrap();
                assert!(verify_progression(&p.graphs, p.mode).unwrap().holds, "gamma {m} {n}");
            }
        }
        for n in 2..=6 {
            let p = family_progression("ice-cream", &params(&[("n", n)])).unwrap();
            assert!(verify_progression(&p.graphs, p.mode).unwrap().holds);
        }
        for n in 3..=6 {
            let p = family_progression("snowy-twin-peaks", &params(&[("n", n)])).unwrap();
            assert!(verify_progression(&p.graphs, p.mode).unwrap().holds);
        }
        for (m, n) in [(4, 1), (5, 1), (5, 2), (6, 1), (4, 3)] {
            let p = family_progression("wl", &params(&[("m", m), ("n", n)])).unwrap();
            assert!(verify_progression(&p.graphs, p.mode).unwrap().holds, "wl {m} {n}");
        }
    }

    #[test]
    fn builder_hypotheses() {
        let g = path(4).unwrap();
        assert!(forward_progression(&g, 4, 1, false).is_err());
        assert!(backward_progression(&g, 1, 1).is_err());
        assert!(forward_progression(&cycle(5).unwrap(), 1, 1, false).is_err());
        assert!(family_progression("path", &params(&[("d", 3)])).is_err());
        assert!(family_progression("wl", &params(&[("m", 5), ("n", 0)])).is_err());
    }
}
