//! UBCSym: the quotient of NCSym identifying set partitions of the same type.
//!
//! Elements are keyed by [`BType`] in one of the bases `e`, `p` or `m`.

mod bases;
mod engine;
mod maps;
pub mod progression;

use std::fmt;

use num_traits::One;

use crate::algebra::{format_terms, Basis, Linear};
use crate::combinatorics::BType;
use crate::error::{CsfError, Result};
use crate::ncsym::NCSymElement;
use crate::rational::Q;

pub use bases::y_complete;
pub use engine::{y_centred, y_centred_dc, y_of};
pub use maps::{
    append_complete, append_complete_inducted, append_graph, append_graph_with_lift, induct,
    phi, proj_sym, sink_avoiding_from_coeffs, theta, theta_e_rule, SinkPolynomial,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UBCSymElement {
    pub degree: usize,
    pub basis: Basis,
    pub terms: Linear<BType>,
}

impl UBCSymElement {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        UBCSymElement {
            degree,
            basis,
            terms: Linear::new(),
        }
    }

    pub fn basis_element(basis: Basis, t: BType) -> Self {
        UBCSymElement {
            degree: t.degree(),
            basis,
            terms: Linear::single(t, Q::one()),
        }
    }

    /// Builds an element, checking that every key has degree `degree`.
    pub fn from_terms(degree: usize, basis: Basis, terms: Linear<BType>) -> Result<Self> {
        if let Some(t) = terms.keys().find(|t| t.degree() != degree) {
            return Err(CsfError::DegreeMismatch {
                expected: degree,
                found: t.degree(),
            });
        }
        Ok(UBCSymElement {
            degree,
            basis,
            terms,
        })
    }

    pub fn coeff(&self, t: &BType) -> Q {
        self.terms.get(t)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn to_basis(&self, target: Basis) -> Result<UBCSymElement> {
        if self.basis == target {
            return Ok(self.clone());
        }
        let p = match self.basis {
            Basis::P => self.terms.clone(),
            Basis::E => self.terms.apply(|t| bases::e_in_p(t).as_ref().clone()),
            Basis::M => bases::m_to_p(&self.terms),
        };
        let terms = match target {
            Basis::P => p,
            Basis::E => bases::p_to_e(&p),
            Basis::M => p.apply(bases::p_in_m),
        };
        Ok(UBCSymElement {
            degree: self.degree,
            basis: target,
            terms,
        })
    }

    pub fn add(&self, other: &UBCSymElement) -> Result<UBCSymElement> {
        if self.degree != other.degree {
            return Err(CsfError::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let rhs = other.to_basis(self.basis)?;
        Ok(UBCSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: &self.terms + &rhs.terms,
        })
    }

    pub fn sub(&self, other: &UBCSymElement) -> Result<UBCSymElement> {
        self.add(&other.scaled(&-Q::one()))
    }

    pub fn scaled(&self, q: &Q) -> UBCSymElement {
        UBCSymElement {
            degree: self.degree,
            basis: self.basis,
            terms: self.terms.scaled(q),
        }
    }

    /// `(λ,b)·(μ,c) = (λ∪(b)∪μ, c)` on `e`- and `p`-keys; `m` goes through `p`.
    pub fn multiply(&self, other: &UBCSymElement) -> Result<UBCSymElement> {
        let work = if self.basis == Basis::M { Basis::P } else { self.basis };
        let lhs = self.to_basis(work)?;
        let rhs = other.to_basis(work)?;
        let terms = bases::product(&lhs.terms, &rhs.terms);
        UBCSymElement {
            degree: self.degree + other.degree,
            basis: work,
            terms,
        }
        .to_basis(self.basis)
    }

    /// Whether every `e`-coefficient is nonnegative; otherwise the most negative term.
    pub fn is_e_positive(&self) -> Result<(bool, Option<(BType, Q)>)> {
        let e = self.to_basis(Basis::E)?;
        Ok(match e.terms.most_negative() {
            None => (true, None),
            Some((k, c)) => (false, Some((k.clone(), c.clone()))),
        })
    }
}

impl fmt::Display for UBCSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.basis.to_string(), &self.terms)
    }
}

/// `projUBC`: accumulates NCSym coefficients by the type of their key.
pub fn proj_ubc(x: &NCSymElement) -> UBCSymElement {
    UBCSymElement {
        degree: x.degree,
        basis: x.basis,
        terms: x.terms.map_keys(|pi| pi.type_of()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{SetPartition, SetPartitions};
    use crate::graphs::families::path;
    use crate::ncsym::y_of as ncsym_y;
    use crate::rational::{frac, int};

    #[test]
    fn proj_ubc_of_p3() {
        let y = proj_ubc(&ncsym_y(&path(3).unwrap()).unwrap().to_basis(Basis::E).unwrap());
        let expect: Linear<BType> = [(BType::of(&[2], 1), frac(1, 2)), (BType::of(&[], 3), frac(1, 2))]
            .into_iter()
            .collect();
        assert_eq!(y.terms, expect);
        let a: SetPartition = "13/2".parse().unwrap();
        let b: SetPartition = "1/23".parse().unwrap();
        assert_eq!(a.type_of(), b.type_of());
        assert!(proj_ubc(&NCSymElement::zero(3, Basis::E)).is_zero());
    }

    #[test]
    fn basis_changes_match_the_oracle() {
        for d in 1..=5 {
            for pi in SetPartitions::unchecked(d) {
                for from in [Basis::E, Basis::P, Basis::M] {
                    let x = NCSymElement::basis_element(from, pi.clone());
                    for to in [Basis::E, Basis::P, Basis::M] {
                        let via_oracle = proj_ubc(&x.to_basis(to).unwrap());
                        let native = proj_ubc(&x).to_basis(to).unwrap();
                        assert_eq!(via_oracle, native, "{pi} {from}->{to}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let x = UBCSymElement::basis_element(Basis::E, BType::of(&[], 2));
        let y = UBCSymElement::basis_element(Basis::E, BType::of(&[], 1));
        assert_eq!(x.multiply(&y).unwrap().terms, Linear::single(BType::of(&[2], 1), int(1)));
        let m = UBCSymElement::basis_element(Basis::M, BType::of(&[1], 1));
        let prod = m.multiply(&m).unwrap();
        assert_eq!(prod.basis, Basis::M);
        let a: SetPartition = "1/2".parse().unwrap();
        let oracle = NCSymElement::basis_element(Basis::M, a.clone())
            .multiply(&NCSymElement::basis_element(Basis::M, a))
            .unwrap();
        assert_eq!(proj_ubc(&oracle), prod);
    }

    #[test]
    fn positivity_witness() {
        let x = UBCSymElement::from_terms(
            2,
            Basis::E,
            [(BType::of(&[1], 1), int(1)), (BType::of(&[], 2), frac(-1, 3))].into_iter().collect(),
        )
        .unwrap();
        assert_eq!(x.is_e_positive().unwrap(), (false, Some((BType::of(&[], 2), frac(-1, 3)))));
        assert_eq!(UBCSymElement::zero(3, Basis::E).is_e_positive().unwrap(), (true, None));
        assert!(UBCSymElement::from_terms(3, Basis::E, Linear::single(BType::of(&[1], 1), int(1))).is_err());
    }
}
