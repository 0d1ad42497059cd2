//! Batch verification suites. Each suite enumerates instances, checks them in
//! parallel and reports failures in instance order.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Basis;
use crate::combinatorics::BType;
use crate::error::{CsfError, Result};
use crate::graphs::families::{complete, kayak, twin_peaks};
use crate::graphs::{
    connected_graph_classes, enumerate_acyclic_orientations, enumerate_unit_interval_graphs,
    graph_to_json, random_connected_graphs, sink_counts, sink_counts_at, sink_counts_avoiding,
    tree_classes, LabelledGraph,
};
use crate::ncsym::{self, NCSymElement};
use crate::rational::{fmt_q, is_nonneg_integer, Q};
use crate::sym::x_of;
use crate::ubcqsym::{phi_q, q_expansion, LabelledPoset};
use crate::ubcsym::progression::{family_progression, verify_progression};
use crate::ubcsym::{
    append_complete, append_complete_inducted, append_graph, induct, phi, proj_ubc,
    sink_avoiding_from_coeffs, theta, y_centred, y_centred_dc, y_of, SinkPolynomial, UBCSymElement,
};

/// Suite names with a one-line description.
pub const SUITES: &[(&str, &str)] = &[
    ("sinks", "phi(y_{G:v}) against sink counts at v, connected graphs"),
    ("stanley", "e-length sums of X_G against sink counts, connected graphs"),
    ("sinks-avoiding", "b = 1 coefficients against sinks avoiding N(last), unit interval graphs"),
    ("theta", "theta(y_{G:v}) = X_{G-v}, connected graphs"),
    ("conjecture-e", "(e)-positivity of y_{G:last}, unit interval graphs"),
    ("trees", "(e)-positive trees are paths centred at an endpoint"),
    ("cut-vertex", "no graph is (e)-positive at a cut vertex"),
    ("progression", "family progressions hold"),
    ("kayak", "X of kayak paddles is e-positive"),
    ("q-positivity", "Q-positivity and the phi rule for orientation posets"),
    ("oracle-coherence", "subgraph expansion, deletion-contraction and the NCSym oracle agree"),
    ("induction", "e-basis induction rule against NCSym induction"),
    ("append", "closed forms for appending K_n and TP_{n+1}"),
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Largest instance size; each suite has its own default.
    pub max_n: Option<usize>,
    /// Random labelled graphs added at `n = max_n` once `max_n ≥ 6`.
    pub samples: usize,
    pub seed: u64,
    pub fail_fast: bool,
    /// Restricts `progression` to one family.
    pub family: Option<String>,
    pub params: BTreeMap<String, String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: None,
            samples: 500,
            seed: 1,
            fail_fast: false,
            family: None,
            params: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub instance: Value,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    pub fn summary(&self) -> String {
        format!("suite={} checked={} failed={}", self.suite, self.checked, self.failed)
    }
}

/// Connected graphs: one per isomorphism class for `n ≤ min(max_n, 6)`, plus
/// `samples` seeded random labelled graphs on `max_n` vertices when `max_n ≥ 6`.
pub fn connected_graphs(max_n: usize, samples: usize, seed: u64) -> Result<Vec<LabelledGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n.min(6) {
        out.extend(connected_graph_classes(n)?);
    }
    if max_n >= 6 && samples > 0 {
        out.extend(random_connected_graphs(max_n, samples, seed)?);
    }
    Ok(out)
}

fn unit_interval_graphs(max_n: usize) -> Result<Vec<LabelledGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_unit_interval_graphs(n)?);
    }
    Ok(out)
}

fn with_vertices(graphs: Vec<LabelledGraph>) -> Vec<(LabelledGraph, usize)> {
    graphs
        .into_iter()
        .flat_map(|g| (1..=g.n()).map(move |v| (g.clone(), v)))
        .collect()
}

fn at(g: &LabelledGraph, v: usize) -> Value {
    json!({ "graph": graph_to_json(g), "vertex": v })
}

fn fail(instance: Value, detail: String) -> Option<Failure> {
    Some(Failure { instance, detail })
}

fn run<T: Sync>(
    suite: &str,
    items: &[T],
    fail_fast: bool,
    check: impl Fn(&T) -> Result<Option<Failure>> + Sync,
) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        suite: suite.to_string(),
        checked: 0,
        failed: 0,
        failures: Vec::new(),
    };
    let chunk = if fail_fast { 64 } else { items.len().max(1) };
    for block in items.chunks(chunk) {
        let results: Vec<Result<Option<Failure>>> = block.par_iter().map(&check).collect();
        for r in results {
            report.checked += 1;
            if let Some(f) = r? {
                report.failed += 1;
                report.failures.push(f);
                if fail_fast {
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn counts_text(c: &BTreeMap<usize, u64>) -> String {
    format!("{c:?}")
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let n_or = |d: usize| cfg.max_n.unwrap_or(d);
    let ff = cfg.fail_fast;
    match name {
        "sinks" => {
            let items = with_vertices(connected_graphs(n_or(6), cfg.samples, cfg.seed)?);
            run(name, &items, ff, |(g, v)| {
                let got = phi(&y_centred(g, *v)?)?;
                let want = sink_counts_at(g, *v)?;
                Ok(if got.matches_counts(&want) {
                    None
                } else {
                    fail(at(g, *v), format!("phi = {} but sink counts {}", got, counts_text(&want)))
                })
            })
        }
        "stanley" => {
            let items = connected_graphs(n_or(6), cfg.samples, cfg.seed)?;
            run(name, &items, ff, |g| {
                let sums = x_of(g)?.e_length_sums()?;
                let want = sink_counts(g)?;
                let got: BTreeMap<usize, Q> = sums.into_iter().collect();
                let want_q: BTreeMap<usize, Q> = want
                    .iter()
                    .map(|(&j, &c)| (j, Q::from_integer(c.into())))
                    .collect();
                Ok(if got == want_q {
                    None
                } else {
                    fail(json!({ "graph": graph_to_json(g) }), format!("e-length sums {} but sink counts {}", fmt_map(&got), counts_text(&want)))
                })
            })
        }
        "sinks-avoiding" => {
            let items = unit_interval_graphs(n_or(6))?;
            run(name, &items, ff, |g| {
                let d = g.n();
                let got = sink_avoiding_from_coeffs(&y_centred(g, d)?)?;
                let want = sink_counts_avoiding(g, d)?;
                let want_q: BTreeMap<usize, Q> = want
                    .iter()
                    .map(|(&j, &c)| (j, Q::from_integer(c.into())))
                    .collect();
                Ok(if got == want_q {
                    None
                } else {
                    fail(at(g, d), format!("coefficients {} but counts {}", fmt_map(&got), counts_text(&want)))
                })
            })
        }
        "theta" => {
            let graphs = connected_graphs(n_or(6), cfg.samples, cfg.seed)?
                .into_iter()
                .filter(|g| g.n() >= 2)
                .collect();
            let items = with_vertices(graphs);
            run(name, &items, ff, |(g, v)| {
                let got = theta(&y_centred(g, *v)?)?;
                let want = x_of(&g.delete_vertex(*v)?)?.to_basis(Basis::P)?;
                Ok(if got == want {
                    None
                } else {
                    fail(at(g, *v), format!("theta = {got} but X = {want}"))
                })
            })
        }
        "conjecture-e" => {
            let items = unit_interval_graphs(n_or(7))?;
            run(name, &items, ff, |g| {
                let (ok, witness) = y_centred_dc(g, g.n())?.is_e_positive()?;
                Ok(match witness {
                    Some((t, c)) if !ok => fail(at(g, g.n()), format!("coefficient of e{t} is {}", fmt_q(&c))),
                    _ => None,
                })
            })
        }
        "trees" => {
            let mut trees = Vec::new();
            for n in 1..=n_or(8) {
                trees.extend(tree_classes(n)?);
            }
            let items = with_vertices(trees);
            run(name, &items, ff, |(t, v)| {
                let (pos, _) = y_centred(t, *v)?.is_e_positive()?;
                let expect = t.is_path_graph() && t.degree(*v) <= 1;
                Ok(if pos == expect {
                    None
                } else {
                    fail(at(t, *v), format!("(e)-positive = {pos}, expected {expect}"))
                })
            })
        }
        "cut-vertex" => {
            let items: Vec<(LabelledGraph, usize)> = connected_graphs(n_or(6), cfg.samples, cfg.seed)?
                .into_iter()
                .flat_map(|g| g.cut_vertices().into_iter().map(move |v| (g.clone(), v)))
                .collect();
            run(name, &items, ff, |(g, v)| {
                let (pos, _) = y_centred(g, *v)?.is_e_positive()?;
                Ok(if pos {
                    fail(at(g, *v), "(e)-positive at a cut vertex".into())
                } else {
                    None
                })
            })
        }
        "progression" => {
            let items = progression_instances(cfg)?;
            run(name, &items, ff, |(family, params)| {
                let p = family_progression(family, params)?;
                let r = verify_progression(&p.graphs, p.mode)?;
                Ok(if r.holds {
                    None
                } else {
                    fail(
                        json!({ "family": family, "params": params }),
                        format!("difference changes after graph {}", r.first_failure.unwrap_or(0)),
                    )
                })
            })
        }
        "kayak" => {
            let mut items = Vec::new();
            for m in 3..=4 {
                for n in 3..=4 {
                    for l in 0..=2 {
                        items.push((m, l, n));
                    }
                }
            }
            run(name, &items, ff, |&(m, l, n)| {
                let g = kayak(m, l, n)?;
                let (pos, witness) = x_of(&g)?.e_positivity()?;
                Ok(if pos {
                    None
                } else {
                    fail(json!({ "m": m, "l": l, "n": n }), format!("negative term {witness:?}"))
                })
            })
        }
        "q-positivity" => {
            let graphs = connected_graphs(n_or(5), 0, cfg.seed)?;
            let mut posets = Vec::new();
            for g in &graphs {
                for o in enumerate_acyclic_orientations(g)? {
                    posets.push(LabelledPoset::from_orientation(&o)?);
                }
            }
            run(name, &posets, ff, |p| {
                let q = q_expansion(p)?;
                if let Some((a, c)) = q.terms.iter().find(|(_, c)| !is_nonneg_integer(c)) {
                    return Ok(fail(json!({ "relations": p.relations() }), format!("coefficient of Q{a} is {}", fmt_q(c))));
                }
                let got = phi_q(&q)?;
                let max = p.maximal_elements();
                let mut want = SinkPolynomial::new();
                if max.contains(&p.size()) {
                    want.add_term(max.len(), Q::from_integer(1.into()));
                }
                Ok(if got == want {
                    None
                } else {
                    fail(json!({ "relations": p.relations() }), format!("phi_q = {got}, expected {want}"))
                })
            })
        }
        "oracle-coherence" => {
            let items = with_vertices(unit_interval_graphs(n_or(6))?);
            run(name, &items, ff, |(g, v)| {
                let native = y_centred(g, *v)?;
                let dc = y_centred_dc(g, *v)?;
                let oracle = proj_ubc(&ncsym::y_of(&g.move_to_last(*v)?)?);
                Ok(if native == dc && native == oracle {
                    None
                } else {
                    fail(at(g, *v), format!("native {native}, deletion-contraction {dc}, oracle {oracle}"))
                })
            })
        }
        "induction" => {
            let mut items = Vec::new();
            for d in 1..=n_or(6) {
                items.extend(BType::all(d));
            }
            run(name, &items, ff, |t| {
                let got = induct(&UBCSymElement::basis_element(Basis::E, t.clone()));
                let lifted = NCSymElement::basis_element(Basis::E, t.representative());
                let want = proj_ubc(&lifted.induct()?);
                Ok(if got == want {
                    None
                } else {
                    fail(json!({ "type": t.to_string() }), format!("rule {got}, oracle {want}"))
                })
            })
        }
        "append" => append_suite(n_or(4), ff),
        other => Err(CsfError::Invalid(format!("unknown suite `{other}`"))),
    }
}

fn fmt_map(m: &BTreeMap<usize, Q>) -> String {
    let parts: Vec<String> = m.iter().map(|(j, c)| format!("{j}: {}", fmt_q(c))).collect();
    format!("{{{}}}", parts.join(", "))
}

fn progression_instances(cfg: &SuiteConfig) -> Result<Vec<(String, BTreeMap<String, String>)>> {
    if let Some(f) = &cfg.family {
        return Ok(vec![(f.clone(), cfg.params.clone())]);
    }
    let p = |kv: &[(&str, usize)]| -> BTreeMap<String, String> {
        kv.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
    };
    let mut out = Vec::new();
    for m in 3..=6 {
        for n in 1..=3 {
            out.push(("gamma".to_string(), p(&[("m", m), ("n", n)])));
        }
    }
    for n in 2..=6 {
        out.push(("ice-cream".to_string(), p(&[("n", n)])));
    }
    for n in 3..=6 {
        out.push(("snowy-twin-peaks".to_string(), p(&[("n", n)])));
    }
    for (m, n) in [(4, 1), (4, 2), (4, 3), (5, 1), (5, 2), (6, 1)] {
        out.push(("wl".to_string(), p(&[("m", m), ("n", n)])));
    }
    Ok(out)
}

/// Appending `K_n` and `TP_{n+1}` to unit interval graphs on at most `max_base` vertices.
fn append_suite(max_base: usize, fail_fast: bool) -> Result<SuiteReport> {
    let mut items = Vec::new();
    for g in unit_interval_graphs(max_base)? {
        for n in 1..=4 {
            items.push((Some(g.clone()), None, n));
        }
    }
    for d in 1..=4 {
        for t in BType::all(d) {
            for n in 2..=5 {
                items.push((None, Some(t.clone()), n));
            }
        }
    }
    run("append", &items, fail_fast, |(g, t, n)| match (g, t) {
        (Some(g), _) => {
            let d = g.n();
            let y = y_of(g)?;
            let joined = g.concatenate(&complete(*n)?)?;
            let direct = y_of(&joined)?.to_basis(Basis::E)?;
            let direct_ind = induct(&y_centred(&joined, d)?).to_basis(Basis::E)?;
            let closed = append_complete(&y, *n as u32)?;
            let closed_ind = append_complete_inducted(&y, *n as u32)?;
            Ok(if closed == direct && closed_ind == direct_ind {
                None
            } else {
                fail(json!({ "graph": graph_to_json(g), "n": n }), format!("closed {closed} / {closed_ind}, direct {direct} / {direct_ind}"))
            })
        }
        (None, Some(t)) => {
            let x = UBCSymElement::basis_element(Basis::E, t.clone());
            let img = append_graph(&x, &twin_peaks(*n)?)?;
            let (pos, witness) = img.is_e_positive()?;
            Ok(if pos {
                None
            } else {
                fail(json!({ "type": t.to_string(), "n": n }), format!("negative term {witness:?}"))
            })
        }
        _ => unreachable!("each instance carries a graph or a type"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize) -> SuiteConfig {
        SuiteConfig {
            max_n: Some(n),
            samples: 0,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn every_suite_passes_small() {
        for (name, _) in SUITES {
            let n = match *name {
                "trees" => 6,
                "append" => 3,
                _ => 4,
            };
            let r = run_suite(name, &small(n)).unwrap();
            assert!(r.passed(), "{}: {:?}", r.summary(), r.failures.first());
            assert!(r.checked > 0, "{name}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn summary_format() {
        let r = run_suite("kayak", &SuiteConfig::default()).unwrap();
        assert_eq!(r.summary(), "suite=kayak checked=12 failed=0");
    }

    #[test]
    fn fail_fast_stops_at_first() {
        let items: Vec<usize> = (0..200).collect();
        let r = run("t", &items, true, |&i| Ok(if i % 70 == 69 { fail(json!(i), String::new()) } else { None })).unwrap();
        assert_eq!((r.checked, r.failed), (70, 1));
        let r = run("t", &items, false, |&i| Ok(if i % 70 == 69 { fail(json!(i), String::new()) } else { None })).unwrap();
        assert_eq!((r.checked, r.failed), (200, 2));
    }
}
