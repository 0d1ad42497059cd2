//! Linear maps out of UBCSym.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::UBCSymElement;
use crate::algebra::{Basis, Linear};
use crate::combinatorics::{BType, Partition, SetPartition};
use crate::error::{CsfError, Result};
use crate::expansion::{expand_from, Dsu};
use crate::graphs::LabelledGraph;
use crate::rational::{factorial, fmt_q, is_nonneg_integer, Q};
use crate::sym::SymElement;

/// `Σ_j c_j t^j`
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SinkPolynomial(BTreeMap<usize, Q>);

impl SinkPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, j: usize, c: Q) {
        let e = self.0.entry(j).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&j);
        }
    }

    pub fn coeff(&self, j: usize) -> Q {
        self.0.get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> &BTreeMap<usize, Q> {
        &self.0
    }

    pub fn is_nonnegative_integral(&self) -> bool {
        self.0.values().all(is_nonneg_integer)
    }

    /// Compares against a table of counts, such as the output of `sink_counts_at`.
    pub fn matches_counts(&self, counts: &BTreeMap<usize, u64>) -> bool {
        let other: SinkPolynomial = counts
            .iter()
            .map(|(&j, &c)| (j, Q::from_integer(c.into())))
            .collect();
        *self == other
    }
}

impl FromIterator<(usize, Q)> for SinkPolynomial {
    fn from_iter<I: IntoIterator<Item = (usize, Q)>>(iter: I) -> Self {
        let mut p = SinkPolynomial::new();
        for (j, c) in iter {
            p.add_term(j, c);
        }
        p
    }
}

impl fmt::Display for SinkPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (&j, c)) in self.0.iter().rev().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            if !unit || j == 0 {
                write!(f, "{}", fmt_q(&abs))?;
            }
            match j {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{j}")?,
            }
        }
        Ok(())
    }
}

fn with_part(lambda: &Partition, k: u32) -> Partition {
    if k == 0 {
        lambda.clone()
    } else {
        lambda.with_part(k)
    }
}

fn bt(lambda: Partition, b: u32) -> BType {
    BType { lambda, b }
}

/// `x↑`. On `e`-keys `e_{(λ,b)}↑ = (1/b)e_{(λ∪(b),1)} − (1/b)e_{(λ,b+1)}`; on
/// `p`- and `m`-keys the last block grows by one.
pub fn induct(x: &UBCSymElement) -> UBCSymElement {
    let terms = match x.basis {
        Basis::E => x.terms.apply(|t| {
            let inv = Q::new(BigInt::one(), t.b.into());
            let mut out = Linear::new();
            out.add_term(bt(t.full_partition(), 1), inv.clone());
            out.add_term(bt(t.lambda.clone(), t.b + 1), -inv);
            out
        }),
        Basis::P | Basis::M => x.terms.map_keys(|t| bt(t.lambda.clone(), t.b + 1)),
    };
    UBCSymElement {
        degree: x.degree + 1,
        basis: x.basis,
        terms,
    }
}

/// `(n−1)!(b−1)! / ((n−i−1)!(b+i)!)`
fn kn_weight(n: u32, b: u32, i: u32) -> Q {
    Q::new(
        factorial(n - 1) * factorial(b - 1),
        factorial(n - i - 1) * factorial(b + i),
    )
}

/// `y_G ↦ y_{G+K_n}`, via the closed form on `e`-keys. The result is in the `e`-basis.
pub fn append_complete(x: &UBCSymElement, n: u32) -> Result<UBCSymElement> {
    if n == 0 {
        return Err(CsfError::Invalid("complete graph order must be positive".into()));
    }
    let e = x.to_basis(Basis::E)?;
    if n == 1 {
        return Ok(e);
    }
    let n = n - 1;
    let terms = e.terms.apply(|t| {
        let b = t.b;
        let mut out = Linear::new();
        for i in 0..n {
            let w = kn_weight(n, b, i);
            let first = Q::from_integer(BigInt::from(i64::from(b) - i64::from(n) + i64::from(i)));
            out.add_term(bt(t.lambda.with_part(b + i), n - i), &w * first);
            out.add_term(
                bt(with_part(&t.lambda, n - i - 1), b + i + 1),
                &w * Q::from_integer((i + 1).into()),
            );
        }
        out
    });
    Ok(UBCSymElement {
        degree: x.degree + n as usize,
        basis: Basis::E,
        terms,
    })
}

/// `y_G ↦ y_{G+K_n : |G|}↑`, via the closed form on `e`-keys.
pub fn append_complete_inducted(x: &UBCSymElement, n: u32) -> Result<UBCSymElement> {
    if n == 0 {
        return Err(CsfError::Invalid("complete graph order must be positive".into()));
    }
    let e = x.to_basis(Basis::E)?;
    let terms = e.terms.apply(|t| {
        let b = t.b;
        let mut out = Linear::new();
        for i in 0..n {
            let w = kn_weight(n, b, i);
            out.add_term(bt(t.lambda.with_part(b + i), n - i), w.clone());
            out.add_term(bt(with_part(&t.lambda, n - i - 1), b + i + 1), -w);
        }
        out
    });
    Ok(UBCSymElement {
        degree: x.degree + n as usize,
        basis: Basis::E,
        terms,
    })
}

/// `T̄_H`: `y_G ↦ y_{G+H}`, computed on `p`-keys through the canonical lift.
pub fn append_graph(x: &UBCSymElement, h: &LabelledGraph) -> Result<UBCSymElement> {
    append_graph_with_lift(x, h, &BType::representative)
}

/// [`append_graph`] with a caller-chosen lift of each type to a set partition.
pub fn append_graph_with_lift(
    x: &UBCSymElement,
    h: &LabelledGraph,
    lift: &dyn Fn(&BType) -> SetPartition,
) -> Result<UBCSymElement> {
    let p = x.to_basis(Basis::P)?;
    let d = x.degree;
    let n = d + h.n() - 1;
    let edges: Vec<(usize, usize)> = h
        .edges()
        .iter()
        .map(|&(i, j)| (i + d - 1, j + d - 1))
        .collect();
    let terms = p.terms.try_apply(|t| {
        let pi = lift(t);
        if pi.type_of() != *t {
            return Err(CsfError::Invalid(format!("lift {pi} does not have type {t}")));
        }
        let counts = expand_from(Dsu::from_set_partition(&pi, n), &edges, true, &|u: &Dsu| {
            u.btype()
        })?;
        Ok(counts
            .into_iter()
            .map(|(k, c)| (k, Q::from_integer(c.into())))
            .collect())
    })?;
    Ok(UBCSymElement {
        degree: n,
        basis: Basis::P,
        terms,
    })
}

/// `projSym`: `e_{(λ,b)} ↦ λ!b! e_{λ∪(b)}`, `p_{(λ,b)} ↦ p_{λ∪(b)}`.
pub fn proj_sym(x: &UBCSymElement) -> Result<SymElement> {
    let terms = match x.basis {
        Basis::E => x
            .terms
            .apply(|t| Linear::single(t.full_partition(), Q::from_integer(t.factorial()))),
        Basis::P => x.terms.map_keys(|t| t.full_partition()),
        Basis::M => {
            return Err(CsfError::WrongBasis {
                op: "proj_sym",
                basis: "m".into(),
            })
        }
    };
    Ok(SymElement {
        degree: x.degree,
        basis: x.basis,
        terms,
    })
}

/// `ϑ`, by the `p`-rule: `p_{(λ,1)} ↦ p_λ`, other keys vanish. Result in the `p`-basis.
pub fn theta(x: &UBCSymElement) -> Result<SymElement> {
    let p = x.to_basis(Basis::P)?;
    let mut terms = Linear::new();
    for (t, c) in &p.terms {
        if t.b == 1 {
            terms.add_term(t.lambda.clone(), c.clone());
        }
    }
    Ok(SymElement {
        degree: x.degree.saturating_sub(1),
        basis: Basis::P,
        terms,
    })
}

/// `ϑ`, by the `e`-rule: `e_{(λ,b)} ↦ λ!(b−1)! e_{λ∪(b−1)}`. Result in the `e`-basis.
pub fn theta_e_rule(x: &UBCSymElement) -> Result<SymElement> {
    let e = x.to_basis(Basis::E)?;
    let terms = e.terms.apply(|t| {
        let c = t.lambda.factorial() * factorial(t.b - 1);
        Linear::single(with_part(&t.lambda, t.b - 1), Q::from_integer(c))
    });
    Ok(SymElement {
        degree: x.degree.saturating_sub(1),
        basis: Basis::E,
        terms,
    })
}

/// `φ(e_{(λ,b)}) = λ!(b−1)! t^{ℓ(λ)+1}`
pub fn phi(x: &UBCSymElement) -> Result<SinkPolynomial> {
    let e = x.to_basis(Basis::E)?;
    Ok(e.terms
        .iter()
        .map(|(t, c)| {
            let w = Q::from_integer(t.lambda.factorial() * factorial(t.b - 1));
            (t.lambda.len() + 1, c * w)
        })
        .collect())
}

/// `j ↦ Σ_{b=1, ℓ(λ)=j} c_{(λ,1)} λ!` over the `e`-expansion.
pub fn sink_avoiding_from_coeffs(x: &UBCSymElement) -> Result<BTreeMap<usize, Q>> {
    let e = x.to_basis(Basis::E)?;
    let mut out: BTreeMap<usize, Q> = BTreeMap::new();
    for (t, c) in &e.terms {
        if t.b == 1 {
            *out.entry(t.lambda.len()).or_insert_with(Q::zero) += c * Q::from_integer(t.lambda.factorial());
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}
