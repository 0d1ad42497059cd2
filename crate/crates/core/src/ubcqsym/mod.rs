//! UBCQSym: the quotient of NCQSym identifying set compositions of the same type.
//!
//! Elements are keyed by [`MarkedComposition`] in the `M` or `Q` basis.

mod poset;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::{format_terms, Basis, Linear};
use crate::combinatorics::{BType, Composition, MarkedComposition};
use crate::error::{CsfError, Result};
use crate::rational::{binomial, factorial, Q};
use crate::ubcsym::{SinkPolynomial, UBCSymElement};

pub use poset::{centred_extension, f_expansion, m_expansion, q_expansion, LabelledPoset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QBasis {
    M,
    Q,
}

impl fmt::Display for QBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QBasis::M => "M",
            QBasis::Q => "Q",
        })
    }
}

impl std::str::FromStr for QBasis {
    type Err = CsfError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(QBasis::M),
            "Q" => Ok(QBasis::Q),
            _ => Err(CsfError::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UBCQSymElement {
    pub degree: usize,
    pub basis: QBasis,
    pub terms: Linear<MarkedComposition>,
}

impl UBCQSymElement {
    pub fn zero(degree: usize, basis: QBasis) -> Self {
        UBCQSymElement {
            degree,
            basis,
            terms: Linear::new(),
        }
    }

    pub fn basis_element(basis: QBasis, a: MarkedComposition) -> Self {
        UBCQSymElement {
            degree: a.degree(),
            basis,
            terms: Linear::single(a, Q::one()),
        }
    }

    pub fn from_terms(degree: usize, basis: QBasis, terms: Linear<MarkedComposition>) -> Result<Self> {
        if let Some(a) = terms.keys().find(|a| a.degree() != degree) {
            return Err(CsfError::DegreeMismatch {
                expected: degree,
                found: a.degree(),
            });
        }
        Ok(UBCQSymElement {
            degree,
            basis,
            terms,
        })
    }

    pub fn coeff(&self, a: &MarkedComposition) -> Q {
        self.terms.get(a)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn to_basis(&self, target: QBasis) -> UBCQSymElement {
        let terms = match (self.basis, target) {
            (QBasis::M, QBasis::Q) => m_to_q(&self.terms),
            (QBasis::Q, QBasis::M) => self.terms.apply(q_in_m),
            _ => self.terms.clone(),
        };
        UBCQSymElement {
            degree: self.degree,
            basis: target,
            terms,
        }
    }

    pub fn add(&self, other: &UBCQSymElement) -> Result<UBCQSymElement> {
        if self.degree != other.degree {
            return Err(CsfError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(UBCQSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: &self.terms + &other.to_basis(self.basis).terms,
        })
    }

    pub fn scaled(&self, q: &Q) -> UBCQSymElement {
        UBCQSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.scaled(q),
        }
    }
}

impl fmt::Display for UBCQSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.basis.to_string(), &self.terms)
    }
}

/// Every composition refining `alpha`: each part split into consecutive pieces.
fn refinements(alpha: &Composition) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = vec![Vec::new()];
    for &part in alpha.parts() {
        let pieces = Composition::all(part as usize);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(c.parts());
                    v
                })
            })
            .collect();
    }
    out
}

/// `Q_{α̂} = Σ_β M_{β̂}` over refinements `β` of `α`, marking the part of `β`
/// that starts where the marked part of `α` starts.
fn q_in_m(a: &MarkedComposition) -> Linear<MarkedComposition> {
    let start: u32 = a.parts()[..a.marked()].iter().sum();
    refinements(a.alpha())
        .into_iter()
        .map(|beta| {
            let mut acc = 0;
            let marked = beta
                .iter()
                .position(|&p| {
                    let hit = acc == start;
                    acc += p;
                    hit
                })
                .expect("refinement keeps part starts");
            (MarkedComposition::from_parts(beta, marked).expect("valid"), Q::one())
        })
        .collect()
}

/// Inverse of [`q_in_m`]: `Q_{α̂}` has `M_{α̂}` as its only term with `ℓ(α)` parts,
/// and all others have more, so eliminate from the fewest parts upward.
fn m_to_q(x: &Linear<MarkedComposition>) -> Linear<MarkedComposition> {
    let mut rest = x.clone();
    let mut out = Linear::new();
    while let Some(lead) = rest.keys().min().cloned() {
        let a = rest.get(&lead);
        rest.add_scaled(&q_in_m(&lead), &-a.clone());
        out.add_term(lead, a);
    }
    out
}

/// `Q_{(1^{d−k}, k̂)} ↦ t(t−1)^{k−1}`, every other `Q_{α̂}` to 0.
pub fn phi_q(x: &UBCQSymElement) -> Result<SinkPolynomial> {
    if x.basis != QBasis::Q {
        return Err(CsfError::WrongBasis {
            op: "phi_q",
            basis: x.basis.to_string(),
        });
    }
    let mut out = SinkPolynomial::new();
    for (a, c) in &x.terms {
        let parts = a.parts();
        let last = parts.len() - 1;
        if a.marked() != last || parts[..last].iter().any(|&p| p != 1) {
            continue;
        }
        for (power, coeff) in falling_t(parts[last]) {
            out.add_term(power, c * coeff);
        }
    }
    Ok(out)
}

/// `t(t−1)^{k−1}` as `(power, coefficient)` pairs.
fn falling_t(k: u32) -> Vec<(usize, Q)> {
    (0..k)
        .map(|i| {
            let mut c = binomial(u64::from(k - 1), u64::from(i));
            if (k - 1 - i) % 2 == 1 {
                c = -c;
            }
            (i as usize + 1, Q::from_integer(c))
        })
        .collect()
}

/// `m_{(λ,b)} ↦ Σ_Φ M_{type(Φ)}` over orderings `Φ` of the blocks of a representative.
///
/// Orderings with the same size sequence are counted together: each distinct
/// arrangement of `λ` arises `Π m_i!` times, and the `b`-block may sit in any slot.
pub fn embed_ubcsym(x: &UBCSymElement) -> Result<UBCQSymElement> {
    if x.basis != Basis::M {
        return Err(CsfError::WrongBasis {
            op: "embed_ubcsym",
            basis: x.basis.to_string(),
        });
    }
    let mut terms = Linear::new();
    for (t, c) in &x.terms {
        terms.add_scaled(&embed_basis(t), c);
    }
    Ok(UBCQSymElement {
        degree: x.degree,
        basis: QBasis::M,
        terms,
    })
}

fn embed_basis(t: &BType) -> Linear<MarkedComposition> {
    let weight: BigInt = t
        .lambda
        .multiplicities()
        .iter()
        .map(|&(_, m)| factorial(m as u32))
        .product();
    let weight = Q::from_integer(weight);
    let mut out = Linear::new();
    for seq in distinct_arrangements(t.lambda.parts()) {
        for slot in 0..=seq.len() {
            let mut parts = seq.clone();
            parts.insert(slot, t.b);
            out.add_term(
                MarkedComposition::from_parts(parts, slot).expect("positive parts"),
                weight.clone(),
            );
        }
    }
    out
}

fn distinct_arrangements(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut used = vec![false; sorted.len()];
    let mut cur = Vec::with_capacity(sorted.len());
    arrange(&sorted, &mut used, &mut cur, &mut out);
    out
}

fn arrange(sorted: &[u32], used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == sorted.len() {
        out.push(cur.clone());
        return;
    }
    for i in 0..sorted.len() {
        if used[i] || (i > 0 && sorted[i] == sorted[i - 1] && !used[i - 1]) {
            continue;
        }
        used[i] = true;
        cur.push(sorted[i]);
        arrange(sorted, used, cur, out);
        cur.pop();
        used[i] = false;
    }
}

/// Whether every coefficient is a nonnegative integer; otherwise the most negative term.
pub fn is_q_positive(x: &UBCQSymElement) -> (bool, Option<(MarkedComposition, Q)>) {
    let q = x.to_basis(QBasis::Q);
    match q.terms.iter().find(|(_, c)| c.is_negative() || !c.is_integer()) {
        None => (true, None),
        Some((a, c)) => (false, Some((a.clone(), c.clone()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{LabelledComposition, Permutation, SetComposition, SetPartitions};
    use crate::graphs::{
        enumerate_acyclic_orientations, enumerate_unit_interval_graphs, random_connected_graphs,
        LabelledGraph,
    };
    use crate::rational::int;
    use crate::ubcsym::{phi, y_centred};
    use num_traits::Zero;
    use std::collections::BTreeMap;

    fn mc(parts: &[u32], marked: usize) -> MarkedComposition {
        MarkedComposition::from_parts(parts.to_vec(), marked).unwrap()
    }

    #[test]
    fn q_in_m_small() {
        let q = q_in_m(&mc(&[2, 1], 1));
        let expect: Linear<MarkedComposition> =
            [(mc(&[2, 1], 1), int(1)), (mc(&[1, 1, 1], 2), int(1))].into_iter().collect();
        assert_eq!(q, expect);
        let q = q_in_m(&mc(&[1, 2], 1));
        assert_eq!(q.get(&mc(&[1, 1, 1], 1)), int(1));
        assert_eq!(q.len(), 2);
    }

    /// `Q_Φ = F_{(Φ_1^r, …, Φ_ℓ^r)}` expanded in NCQSym, then projected.
    fn q_oracle(phi: &SetComposition) -> Linear<MarkedComposition> {
        let order: Vec<usize> = phi.blocks().iter().flat_map(|b| b.iter().rev().copied()).collect();
        let t = LabelledComposition::new(Permutation::new(order).unwrap(), phi.composition()).unwrap();
        f_in_m(&t).iter().map(|psi| (psi.type_of(), int(1))).collect()
    }

    #[test]
    fn q_in_m_matches_set_composition_oracle() {
        for d in 1..=5 {
            for pi in SetPartitions::unchecked(d) {
                for phi in SetComposition::orderings(&pi) {
                    assert_eq!(q_in_m(&phi.type_of()), q_oracle(&phi), "{phi}");
                }
            }
        }
    }

    #[test]
    fn round_trip() {
        for d in 1..=6 {
            for a in MarkedComposition::all(d) {
                let x = UBCQSymElement::basis_element(QBasis::M, a);
                assert_eq!(x.to_basis(QBasis::Q).to_basis(QBasis::M), x);
            }
        }
    }

    #[test]
    fn phi_q_rule() {
        let t = |k| phi_q(&UBCQSymElement::basis_element(QBasis::Q, mc(&[1, k], 1))).unwrap();
        assert_eq!(t(1).to_string(), "t");
        assert_eq!(t(2).to_string(), "t^2 - t");
        let other = UBCQSymElement::basis_element(QBasis::Q, mc(&[2, 1], 0));
        assert!(phi_q(&other).unwrap().terms().is_empty());
        assert!(phi_q(&UBCQSymElement::zero(2, QBasis::M)).is_err());
    }

    #[test]
    fn binomial_identity() {
        // Σ_k C(j−1,k−1) t(t−1)^{k−1} = t^j
        for d in 1..=8u32 {
            for j in 1..=d {
                let mut sum = SinkPolynomial::new();
                for k in 1..=j {
                    let c = Q::from_integer(binomial(u64::from(j - 1), u64::from(k - 1)));
                    for (p, q) in falling_t(k) {
                        sum.add_term(p, &c * q);
                    }
                }
                let expect: SinkPolynomial = [(j as usize, int(1))].into_iter().collect();
                assert_eq!(sum, expect, "j={j}");
            }
        }
    }

    fn orientation_posets(g: &LabelledGraph) -> Vec<LabelledPoset> {
        enumerate_acyclic_orientations(g)
            .unwrap()
            .iter()
            .map(|o| LabelledPoset::from_orientation(o).unwrap())
            .collect()
    }

    fn small_graphs(max: usize) -> Vec<LabelledGraph> {
        let mut out = Vec::new();
        for n in 1..=max {
            out.extend(enumerate_unit_interval_graphs(n).unwrap());
        }
        out.extend(random_connected_graphs(max, 10, 3).unwrap());
        out
    }

    #[test]
    fn phi_q_counts_maximal_elements() {
        for g in small_graphs(5) {
            let d = g.n();
            for p in orientation_posets(&g) {
                let got = phi_q(&q_expansion(&p).unwrap()).unwrap();
                let max = p.maximal_elements();
                let expect: SinkPolynomial = if max.contains(&d) {
                    [(max.len(), int(1))].into_iter().collect()
                } else {
                    SinkPolynomial::new()
                };
                assert_eq!(got, expect, "{p:?}");
            }
        }
    }

    #[test]
    fn sum_over_orientations_is_embedding() {
        for g in small_graphs(4) {
            let d = g.n();
            let y = y_centred(&g, d).unwrap().to_basis(Basis::M).unwrap();
            let mut sum = UBCQSymElement::zero(d, QBasis::M);
            for p in orientation_posets(&g) {
                sum = sum.add(&m_expansion(&p).unwrap()).unwrap();
            }
            assert_eq!(embed_ubcsym(&y).unwrap(), sum);
        }
    }

    #[test]
    fn phi_consistency() {
        for g in small_graphs(5) {
            let d = g.n();
            let y = y_centred(&g, d).unwrap().to_basis(Basis::E).unwrap();
            let mut sum = SinkPolynomial::new();
            for p in orientation_posets(&g) {
                for (k, c) in phi_q(&q_expansion(&p).unwrap()).unwrap().terms() {
                    sum.add_term(*k, c.clone());
                }
            }
            assert_eq!(phi(&y).unwrap(), sum);
        }
    }

    #[test]
    fn embed_small() {
        let m1 = UBCSymElement::basis_element(Basis::M, BType::of(&[], 1));
        assert_eq!(embed_ubcsym(&m1).unwrap().to_string(), "M(1\u{302})");
        let m2 = UBCSymElement::basis_element(Basis::M, BType::of(&[1], 1));
        let expect: Linear<MarkedComposition> =
            [(mc(&[1, 1], 0), int(1)), (mc(&[1, 1], 1), int(1))].into_iter().collect();
        assert_eq!(embed_ubcsym(&m2).unwrap().terms, expect);
        assert!(embed_ubcsym(&UBCSymElement::zero(1, Basis::E)).is_err());
    }

    #[test]
    fn embed_matches_representative_orderings() {
        for d in 1..=6 {
            for t in BType::all(d) {
                let oracle: Linear<MarkedComposition> = SetComposition::orderings(&t.representative())
                    .iter()
                    .map(|phi| (phi.type_of(), int(1)))
                    .collect();
                assert_eq!(embed_basis(&t), oracle, "{t}");
                // leading term: λ in order with the b-block last
                let parts: Vec<u32> = t.lambda.parts().iter().copied().chain([t.b]).collect();
                let lead = mc(&parts, parts.len() - 1);
                assert!(!oracle.get(&lead).is_zero());
            }
        }
    }

    fn rank(rows: Vec<Vec<Q>>) -> usize {
        let mut rows = rows;
        let cols = rows.first().map_or(0, |r| r.len());
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r][c].clone();
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = &rows[i][c] / &pivot;
                    for k in c..cols {
                        let v = &rows[r][k] * &f;
                        rows[i][k] -= v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn embed_is_injective() {
        for d in 1..=5 {
            let cols = MarkedComposition::all(d);
            let rows: Vec<Vec<Q>> = BType::all(d)
                .into_iter()
                .map(|t| {
                    let e = embed_basis(&t);
                    cols.iter().map(|a| e.get(a)).collect()
                })
                .collect();
            assert_eq!(rank(rows), BType::all(d).len(), "d={d}");
        }
    }

    /// `F_{(δ,α)}` in the `M`-basis of NCQSym: runs of `δ` cut at a superset of `set(α)`.
    fn f_in_m(t: &LabelledComposition) -> Vec<SetComposition> {
        let d = t.delta.len();
        let order = t.delta.one_line();
        let cuts = t.alpha.descent_set();
        let mut out = Vec::new();
        for mask in 0u32..1 << (d - 1) {
            if cuts.iter().any(|&c| mask >> (c - 1) & 1 == 0) {
                continue;
            }
            let mut blocks = vec![vec![order[0]]];
            for j in 1..d {
                if mask >> (j - 1) & 1 == 1 {
                    blocks.push(Vec::new());
                }
                blocks.last_mut().unwrap().push(order[j]);
            }
            out.push(SetComposition::new(d, blocks).unwrap());
        }
        out
    }

    #[test]
    fn y_p_independent_of_s() {
        let sum = |terms: Vec<LabelledComposition>| {
            let mut out: BTreeMap<SetComposition, i64> = BTreeMap::new();
            for t in &terms {
                for phi in f_in_m(t) {
                    *out.entry(phi).or_insert(0) += 1;
                }
            }
            out
        };
        for g in small_graphs(4) {
            for p in orientation_posets(&g) {
                let exts = p.linear_extensions().unwrap();
                let first = sum(f_expansion(&p, &exts[0]).unwrap());
                assert!(first.values().all(|&c| c == 1));
                for s in &exts[1..] {
                    assert_eq!(sum(f_expansion(&p, s).unwrap()), first, "{p:?}");
                }
            }
        }
    }
}
