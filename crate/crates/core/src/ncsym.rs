//! NCSym at small degree, keyed by set partitions. This is the brute-force
//! reference that every UBCSym computation is checked against.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::algebra::{format_terms, Basis, Linear};
use crate::combinatorics::{moebius, Permutation, SetPartition, SetPartitions};
use crate::error::{CsfError, Result};
use crate::expansion::{expand, Dsu};
use crate::graphs::LabelledGraph;
use crate::limits;
use crate::rational::Q;
use crate::sym::SymElement;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSymElement {
    pub degree: usize,
    pub basis: Basis,
    pub terms: Linear<SetPartition>,
}

fn check_degree(d: usize) -> Result<()> {
    limits::check("NCSym degree", d, limits::ncsym_degree())
}

impl NCSymElement {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        NCSymElement {
            degree,
            basis,
            terms: Linear::new(),
        }
    }

    pub fn basis_element(basis: Basis, pi: SetPartition) -> Self {
        NCSymElement {
            degree: pi.degree(),
            basis,
            terms: Linear::single(pi, Q::one()),
        }
    }

    pub fn coeff(&self, pi: &SetPartition) -> Q {
        self.terms.get(pi)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn to_basis(&self, target: Basis) -> Result<NCSymElement> {
        if self.basis == target {
            return Ok(self.clone());
        }
        check_degree(self.degree)?;
        let p = match self.basis {
            Basis::P => self.terms.clone(),
            Basis::E => self.terms.apply(|pi| e_in_p(pi).as_ref().clone()),
            Basis::M => self.terms.apply(m_in_p),
        };
        let terms = match target {
            Basis::P => p,
            Basis::E => p_to_e(&p),
            Basis::M => p.apply(p_in_m),
        };
        Ok(NCSymElement {
            degree: self.degree,
            basis: target,
            terms,
        })
    }

    pub fn add(&self, other: &NCSymElement) -> Result<NCSymElement> {
        if self.degree != other.degree {
            return Err(CsfError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let rhs = other.to_basis(self.basis)?;
        Ok(NCSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: &self.terms + &rhs.terms,
        })
    }

    pub fn sub(&self, other: &NCSymElement) -> Result<NCSymElement> {
        self.add(&other.scaled(&-Q::one()))
    }

    pub fn scaled(&self, q: &Q) -> NCSymElement {
        NCSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.scaled(q),
        }
    }

    /// Product via `e_π e_σ = e_{π|σ}` and `p_π p_σ = p_{π|σ}`; `m`-inputs go through `p`.
    pub fn multiply(&self, other: &NCSymElement) -> Result<NCSymElement> {
        let (lhs, work) = match self.basis {
            Basis::M => (self.to_basis(Basis::P)?, Basis::P),
            b => (self.clone(), b),
        };
        let rhs = other.to_basis(work)?;
        let mut terms = Linear::new();
        for (a, ca) in &lhs.terms {
            for (b, cb) in &rhs.terms {
                terms.add_term(a.slash(b), ca * cb);
            }
        }
        NCSymElement {
            degree: self.degree + other.degree,
            basis: work,
            terms,
        }
        .to_basis(self.basis)
    }

    /// `δ ∘ x`, relabelling every key.
    pub fn act(&self, delta: &Permutation) -> Result<NCSymElement> {
        if delta.len() != self.degree {
            return Err(CsfError::DegreeMismatch {
                expected: self.degree,
                found: delta.len(),
            });
        }
        Ok(NCSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: self
                .terms
                .map_keys(|pi| pi.permute(delta).expect("degree checked")),
        })
    }

    /// `x ↑`: duplicates the last variable of every monomial.
    pub fn induct(&self) -> Result<NCSymElement> {
        self.induct_j(self.degree)
    }

    /// `x ↑_j^{d+1}`: on `p` and `m`, adds `d+1` to the block of `j`.
    /// An `e`-input is converted to `p` and back.
    pub fn induct_j(&self, j: usize) -> Result<NCSymElement> {
        if j == 0 || j > self.degree {
            return Err(CsfError::VertexOutOfRange {
                vertex: j,
                n: self.degree,
            });
        }
        let src = match self.basis {
            Basis::E => self.to_basis(Basis::P)?,
            _ => self.clone(),
        };
        let out = NCSymElement {
            degree: self.degree + 1,
            basis: src.basis,
            terms: src.terms.map_keys(|pi| pi.induct_at(j)),
        };
        out.to_basis(self.basis)
    }

    /// `ρ`: `e_π ↦ π! e_{λ(π)}`, `p_π ↦ p_{λ(π)}`.
    pub fn rho(&self) -> Result<SymElement> {
        let terms = match self.basis {
            Basis::E => self
                .terms
                .apply(|pi| Linear::single(pi.lambda(), Q::from_integer(pi.factorial()))),
            Basis::P => self.terms.map_keys(|pi| pi.lambda()),
            Basis::M => {
                return Err(CsfError::WrongBasis {
                    op: "rho",
                    basis: "m".into(),
                })
            }
        };
        Ok(SymElement {
            degree: self.degree,
            basis: self.basis,
            terms,
        })
    }
}

impl fmt::Display for NCSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keyed: Linear<Braced> = self.terms.map_keys(|k| Braced(k.clone()));
        format_terms(f, &self.basis.to_string(), &keyed)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Braced(SetPartition);

impl fmt::Display for Braced {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0)
    }
}

/// Every `σ ≤ π`.
pub fn refinements(pi: &SetPartition) -> Vec<SetPartition> {
    let blocks = pi.blocks();
    let mut out = Vec::new();
    let mut labels = vec![(0usize, 0u8); pi.degree()];
    fn rec(
        b: usize,
        blocks: &[Vec<usize>],
        labels: &mut Vec<(usize, u8)>,
        out: &mut Vec<SetPartition>,
    ) {
        if b == blocks.len() {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        for sub in SetPartitions::unchecked(blocks[b].len()) {
            for (&x, &l) in blocks[b].iter().zip(sub.labels()) {
                labels[x - 1] = (b, l);
            }
            rec(b + 1, blocks, labels, out);
        }
    }
    rec(0, &blocks, &mut labels, &mut out);
    out
}

type Cache = Mutex<HashMap<SetPartition, Arc<Linear<SetPartition>>>>;

/// `e_π = Σ_{σ ≤ π} μ(0̂, σ) p_σ`, memoized.
pub fn e_in_p(pi: &SetPartition) -> Arc<Linear<SetPartition>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache poisoned").get(pi) {
        return v.clone();
    }
    let col: Linear<SetPartition> = refinements(pi)
        .into_iter()
        .map(|s| {
            let c = Q::from_integer(s.mu_from_bottom());
            (s, c)
        })
        .collect();
    let v = Arc::new(col);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(pi.clone(), v.clone());
    v
}

/// Triangular solve: the `p_π`-coefficient of `e_π` is `μ(0̂, π) ≠ 0` and every
/// other term of `e_π` has more blocks, so eliminate from the fewest blocks up.
fn p_to_e(x: &Linear<SetPartition>) -> Linear<SetPartition> {
    let mut rest = x.clone();
    let mut out = Linear::new();
    while let Some(lead) = rest
        .keys()
        .min_by(|a, b| a.num_blocks().cmp(&b.num_blocks()).then(a.cmp(b)))
        .cloned()
    {
        let col = e_in_p(&lead);
        let a = rest.get(&lead) / col.get(&lead);
        rest.add_scaled(&col, &-a.clone());
        out.add_term(lead, a);
    }
    out
}

/// `p_π = Σ_{σ ≥ π} m_σ`
fn p_in_m(pi: &SetPartition) -> Linear<SetPartition> {
    pi.coarsenings().map(|(s, _)| (s, Q::one())).collect()
}

/// `m_π = Σ_{σ ≥ π} μ(π, σ) p_σ`
fn m_in_p(pi: &SetPartition) -> Linear<SetPartition> {
    pi.coarsenings()
        .map(|(s, _)| {
            let c = Q::from_integer(moebius(pi, &s).expect("coarsening"));
            (s, c)
        })
        .collect()
}

/// `Y_G = Σ_{S ⊆ E} (−1)^{|S|} p_{π(S)}`, enumerating every edge subset.
pub fn y_of(g: &LabelledGraph) -> Result<NCSymElement> {
    let counts = expand(g.n(), g.edges(), false, &|d: &Dsu| d.set_partition())?;
    Ok(NCSymElement {
        degree: g.n(),
        basis: Basis::P,
        terms: counts
            .into_iter()
            .map(|(k, c)| (k, Q::from_integer(c.into())))
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{block_graph, complete, path};
    use crate::rational::{frac, int};

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn y_k2() {
        let y = y_of(&complete(2).unwrap()).unwrap();
        let expect: Linear<SetPartition> = [(sp("1/2"), int(1)), (sp("12"), int(-1))].into_iter().collect();
        assert_eq!(y.terms, expect);
        let e = NCSymElement::basis_element(Basis::E, sp("12")).to_basis(Basis::P).unwrap();
        assert_eq!(e.terms, expect);
    }

    #[test]
    fn y_p3_in_e() {
        let y = y_of(&path(3).unwrap()).unwrap().to_basis(Basis::E).unwrap();
        let expect: Linear<SetPartition> = [
            (sp("12/3"), frac(1, 2)),
            (sp("13/2"), frac(-1, 2)),
            (sp("1/23"), frac(1, 2)),
            (sp("123"), frac(1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(y.terms, expect);
        assert!(!y.terms.is_nonnegative());
    }

    #[test]
    fn block_graph_is_e_basis_element() {
        for d in 1..=5 {
            for pi in SetPartitions::unchecked(d) {
                let y = y_of(&block_graph(&pi).unwrap()).unwrap().to_basis(Basis::E).unwrap();
                assert_eq!(y.terms, Linear::single(pi, int(1)));
            }
        }
    }

    #[test]
    fn p_to_m_examples() {
        let m = NCSymElement::basis_element(Basis::P, sp("12")).to_basis(Basis::M).unwrap();
        assert_eq!(m.terms, Linear::single(sp("12"), int(1)));
        let m = NCSymElement::basis_element(Basis::P, sp("1/2")).to_basis(Basis::M).unwrap();
        let expect: Linear<SetPartition> = [(sp("1/2"), int(1)), (sp("12"), int(1))].into_iter().collect();
        assert_eq!(m.terms, expect);
    }

    #[test]
    fn induction_example() {
        let x = NCSymElement::basis_element(Basis::P, sp("1/2")).induct().unwrap();
        assert_eq!(x.terms, Linear::single(sp("1/23"), int(1)));
        assert_eq!(x.degree, 3);
    }

    #[test]
    fn rho_examples() {
        let r = NCSymElement::basis_element(Basis::E, sp("13/2")).rho().unwrap();
        assert_eq!(r.terms, Linear::single(crate::combinatorics::Partition::from_parts(vec![2, 1]), int(2)));
        let r = NCSymElement::basis_element(Basis::P, sp("1/24/35")).rho().unwrap();
        assert_eq!(r.terms, Linear::single(crate::combinatorics::Partition::from_parts(vec![2, 2, 1]), int(1)));
        assert!(NCSymElement::basis_element(Basis::M, sp("1")).rho().is_err());
    }

    #[test]
    fn degree_cap() {
        let pi = SetPartition::discrete(limits::ncsym_degree() + 1);
        assert!(NCSymElement::basis_element(Basis::E, pi).to_basis(Basis::P).unwrap_err().is_cap());
    }
}
