//! Sym, the commutative symmetric functions, in the `e`- and `p`-bases.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{format_terms, Basis, Linear};
use crate::combinatorics::Partition;
use crate::error::{CsfError, Result};
use crate::expansion::{expand, Dsu};
use crate::graphs::LabelledGraph;
use crate::rational::{factorial, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    pub degree: usize,
    pub basis: Basis,
    pub terms: Linear<Partition>,
}

impl SymElement {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymElement {
            degree,
            basis,
            terms: Linear::new(),
        }
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        SymElement {
            degree: lambda.size() as usize,
            basis,
            terms: Linear::single(lambda, Q::one()),
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check_basis(&self) -> Result<()> {
        if self.basis == Basis::M {
            return Err(CsfError::WrongBasis {
                op: "sym",
                basis: "m".into(),
            });
        }
        Ok(())
    }

    pub fn to_basis(&self, target: Basis) -> Result<SymElement> {
        self.check_basis()?;
        if target == Basis::M {
            return Err(CsfError::WrongBasis {
                op: "sym change of basis",
                basis: "m".into(),
            });
        }
        let terms = match (self.basis, target) {
            (a, b) if a == b => self.terms.clone(),
            (Basis::E, Basis::P) => self.terms.apply(|l| e_in_p(l).as_ref().clone()),
            (Basis::P, Basis::E) => p_to_e(&self.terms),
            _ => unreachable!(),
        };
        Ok(SymElement {
            degree: self.degree,
            basis: target,
            terms,
        })
    }

    /// Product; `e_λ e_μ = e_{λ∪μ}` and `p_λ p_μ = p_{λ∪μ}`.
    pub fn multiply(&self, other: &SymElement) -> Result<SymElement> {
        self.check_basis()?;
        let rhs = other.to_basis(self.basis)?;
        let mut terms = Linear::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                terms.add_term(a.union(b), ca * cb);
            }
        }
        Ok(SymElement {
            degree: self.degree + other.degree,
            basis: self.basis,
            terms,
        })
    }

    pub fn add(&self, other: &SymElement) -> Result<SymElement> {
        if self.degree != other.degree {
            return Err(CsfError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let rhs = other.to_basis(self.basis)?;
        Ok(SymElement {
            degree: self.degree,
            basis: self.basis,
            terms: &self.terms + &rhs.terms,
        })
    }

    pub fn scaled(&self, q: &Q) -> SymElement {
        SymElement {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.scaled(q),
        }
    }

    /// Whether all `e`-coefficients are nonnegative; on failure, the most negative term.
    pub fn e_positivity(&self) -> Result<(bool, Option<(Partition, Q)>)> {
        let e = self.to_basis(Basis::E)?;
        match e.terms.most_negative() {
            None => Ok((true, None)),
            Some((k, c)) => Ok((false, Some((k.clone(), c.clone())))),
        }
    }

    /// `j ↦ Σ_{ℓ(λ)=j} c_λ` over the `e`-expansion.
    pub fn e_length_sums(&self) -> Result<HashMap<usize, Q>> {
        let e = self.to_basis(Basis::E)?;
        let mut out: HashMap<usize, Q> = HashMap::new();
        for (l, c) in &e.terms {
            *out.entry(l.len()).or_default() += c;
        }
        out.retain(|_, c| !num_traits::Zero::is_zero(c));
        Ok(out)
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.basis.to_string(), &self.terms)
    }
}

/// `z_μ = Π_i i^{m_i} m_i!`
pub fn z(mu: &Partition) -> BigInt {
    mu.multiplicities()
        .iter()
        .fold(BigInt::one(), |acc, &(part, mult)| {
            acc * BigInt::from(part).pow(mult as u32) * factorial(mult as u32)
        })
}

fn e_n_in_p(n: u32) -> Linear<Partition> {
    Partition::all(n)
        .into_iter()
        .map(|mu| {
            let sign = if (n as usize - mu.len()) % 2 == 0 { 1 } else { -1 };
            let c = Q::new(BigInt::from(sign), z(&mu));
            (mu, c)
        })
        .collect()
}

type Cache = Mutex<HashMap<Partition, Arc<Linear<Partition>>>>;

fn e_in_p(lambda: &Partition) -> Arc<Linear<Partition>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache poisoned").get(lambda) {
        return v.clone();
    }
    let mut acc: Linear<Partition> = Linear::single(Partition::empty(), Q::one());
    for &part in lambda.parts() {
        let en = e_n_in_p(part);
        let mut next = Linear::new();
        for (a, ca) in &acc {
            for (b, cb) in &en {
                next.add_term(a.union(b), ca * cb);
            }
        }
        acc = next;
    }
    let v = Arc::new(acc);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(lambda.clone(), v.clone());
    v
}

/// `e_λ = Π (−1)^{λ_i−1}/λ_i · p_λ + (terms with more parts)`, so eliminate
/// from the fewest parts upward.
fn p_to_e(x: &Linear<Partition>) -> Linear<Partition> {
    let mut rest = x.clone();
    let mut out = Linear::new();
    while let Some(lead) = rest.keys().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).cloned() {
        let col = e_in_p(&lead);
        let a = rest.get(&lead) / col.get(&lead);
        rest.add_scaled(&col, &-a.clone());
        out.add_term(lead, a);
    }
    out
}

/// `X_G = Σ_{S ⊆ E} (−1)^{|S|} p_{λ(S)}`, in the `p`-basis.
pub fn x_of(g: &LabelledGraph) -> Result<SymElement> {
    let counts = expand(g.n(), g.edges(), true, &|d: &Dsu| d.partition())?;
    Ok(SymElement {
        degree: g.n(),
        basis: Basis::P,
        terms: counts
            .into_iter()
            .map(|(k, c)| (k, Q::from_integer(c.into())))
            .collect(),
    })
}

/// Whether `X_G` is `e`-positive.
pub fn is_e_positive_x(g: &LabelledGraph) -> Result<bool> {
    Ok(x_of(g)?.e_positivity()?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete, path};
    use crate::rational::{frac, int};

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn small_x() {
        let x1 = x_of(&complete(1).unwrap()).unwrap();
        assert_eq!(x1.terms, Linear::single(p(&[1]), int(1)));
        let x2 = x_of(&complete(2).unwrap()).unwrap();
        let expect: Linear<Partition> = [(p(&[1, 1]), int(1)), (p(&[2]), int(-1))].into_iter().collect();
        assert_eq!(x2.terms, expect);
    }

    #[test]
    fn e2_in_p() {
        // e_2 = (p_11 - p_2)/2
        let e = e_in_p(&p(&[2]));
        assert_eq!(e.get(&p(&[1, 1])), frac(1, 2));
        assert_eq!(e.get(&p(&[2])), frac(-1, 2));
    }

    #[test]
    fn complete_graph_is_n_factorial_e_n() {
        for n in 1..=6 {
            let x = x_of(&complete(n).unwrap()).unwrap().to_basis(Basis::E).unwrap();
            let nf = Q::from_integer(factorial(n as u32));
            assert_eq!(x.terms, Linear::single(p(&[n as u32]), nf));
        }
    }

    #[test]
    fn round_trip() {
        let x = x_of(&path(5).unwrap()).unwrap();
        let back = x.to_basis(Basis::E).unwrap().to_basis(Basis::P).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn path_p3() {
        // X_{P_3} = e_{21} + 3 e_3
        let x = x_of(&path(3).unwrap()).unwrap().to_basis(Basis::E).unwrap();
        let expect: Linear<Partition> = [(p(&[2, 1]), int(1)), (p(&[3]), int(3))].into_iter().collect();
        assert_eq!(x.terms, expect);
    }
}
