//! Element JSON. Coefficients are exact, as decimal numerator/denominator strings.
//!
//! ```json
//! {"degree": 3, "basis": "e", "terms": [{"lambda": [2], "b": 1, "num": "1", "den": "2"}]}
//! {"degree": 3, "basis": "e", "terms": [{"lambda": [2, 1], "num": "1", "den": "1"}]}
//! {"degree": 2, "basis": "Q", "terms": [{"alpha": [1, 1], "marked": 1, "num": "1", "den": "1"}]}
//! ```
//!
//! The first shape is UBCSym, the second Sym, the third UBCQSym. Terms are
//! listed in key order.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Basis, Linear};
use crate::combinatorics::{BType, MarkedComposition, Partition};
use crate::error::{CsfError, Result};
use crate::rational::{from_parts, to_parts, Q};
use crate::sym::SymElement;
use crate::ubcqsym::{QBasis, UBCQSymElement};
use crate::ubcsym::UBCSymElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson<T> {
    pub degree: usize,
    pub basis: String,
    pub terms: Vec<T>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BTypeTerm {
    pub lambda: Vec<u32>,
    pub b: u32,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTerm {
    pub lambda: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedTerm {
    pub alpha: Vec<u32>,
    pub marked: usize,
    pub num: String,
    pub den: String,
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<ElementJson<T>> {
    serde_json::from_str(text).map_err(|e| CsfError::Parse(e.to_string()))
}

fn to_value<T: Serialize>(x: &ElementJson<T>) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn check_degree(degree: usize, found: usize) -> Result<()> {
    if degree != found {
        return Err(CsfError::DegreeMismatch {
            expected: degree,
            found,
        });
    }
    Ok(())
}

pub fn ubcsym_to_json(x: &UBCSymElement) -> Value {
    to_value(&ElementJson {
        degree: x.degree,
        basis: x.basis.to_string(),
        terms: x
            .terms
            .iter()
            .map(|(t, c)| {
                let (num, den) = to_parts(c);
                BTypeTerm {
                    lambda: t.lambda.parts().to_vec(),
                    b: t.b,
                    num,
                    den,
                }
            })
            .collect(),
    })
}

pub fn ubcsym_from_json(text: &str) -> Result<UBCSymElement> {
    let raw: ElementJson<BTypeTerm> = parse(text)?;
    let basis: Basis = raw.basis.parse()?;
    let mut terms = Linear::new();
    for t in raw.terms {
        let key = BType::new(Partition::new(t.lambda)?, t.b)?;
        check_degree(raw.degree, key.degree())?;
        terms.add_term(key, from_parts(&t.num, &t.den)?);
    }
    UBCSymElement::from_terms(raw.degree, basis, terms)
}

pub fn sym_to_json(x: &SymElement) -> Value {
    to_value(&ElementJson {
        degree: x.degree,
        basis: x.basis.to_string(),
        terms: x
            .terms
            .iter()
            .map(|(l, c)| {
                let (num, den) = to_parts(c);
                PartitionTerm {
                    lambda: l.parts().to_vec(),
                    num,
                    den,
                }
            })
            .collect(),
    })
}

pub fn sym_from_json(text: &str) -> Result<SymElement> {
    let raw: ElementJson<PartitionTerm> = parse(text)?;
    let basis: Basis = raw.basis.parse()?;
    let mut terms: Linear<Partition> = Linear::new();
    for t in raw.terms {
        let key = Partition::new(t.lambda)?;
        check_degree(raw.degree, key.size() as usize)?;
        terms.add_term(key, from_parts(&t.num, &t.den)?);
    }
    Ok(SymElement {
        degree: raw.degree,
        basis,
        terms,
    })
}

pub fn ubcqsym_to_json(x: &UBCQSymElement) -> Value {
    to_value(&ElementJson {
        degree: x.degree,
        basis: x.basis.to_string(),
        terms: x
            .terms
            .iter()
            .map(|(a, c)| {
                let (num, den) = to_parts(c);
                MarkedTerm {
                    alpha: a.parts().to_vec(),
                    marked: a.marked(),
                    num,
                    den,
                }
            })
            .collect(),
    })
}

pub fn ubcqsym_from_json(text: &str) -> Result<UBCQSymElement> {
    let raw: ElementJson<MarkedTerm> = parse(text)?;
    let basis: QBasis = raw.basis.parse()?;
    let mut terms: Linear<MarkedComposition> = Linear::new();
    for t in raw.terms {
        terms.add_term(MarkedComposition::from_parts(t.alpha, t.marked)?, from_parts(&t.num, &t.den)?);
    }
    UBCQSymElement::from_terms(raw.degree, basis, terms)
}

/// Coefficients as exact strings, for callers that only need to print.
pub fn q_to_json(q: &Q) -> Value {
    let (num, den) = to_parts(q);
    serde_json::json!({ "num": num, "den": den })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::path;
    use crate::ubcqsym::{q_expansion, LabelledPoset};
    use crate::ubcsym::y_centred;

    #[test]
    fn ubcsym_round_trip() {
        let y = y_centred(&path(3).unwrap(), 3).unwrap().to_basis(Basis::E).unwrap();
        let v = ubcsym_to_json(&y);
        assert_eq!(
            v.to_string(),
            r#"{"basis":"e","degree":3,"terms":[{"b":1,"den":"2","lambda":[2],"num":"1"},{"b":3,"den":"2","lambda":[],"num":"1"}]}"#
        );
        assert_eq!(ubcsym_from_json(&v.to_string()).unwrap(), y);
        for b in [Basis::P, Basis::M] {
            let z = y.to_basis(b).unwrap();
            assert_eq!(ubcsym_from_json(&ubcsym_to_json(&z).to_string()).unwrap(), z);
        }
    }

    #[test]
    fn sym_round_trip() {
        let x = crate::sym::x_of(&path(4).unwrap()).unwrap().to_basis(Basis::E).unwrap();
        assert_eq!(sym_from_json(&sym_to_json(&x).to_string()).unwrap(), x);
    }

    #[test]
    fn ubcqsym_round_trip() {
        let p = LabelledPoset::new(3, [(1, 3), (2, 3)]).unwrap();
        let q = q_expansion(&p).unwrap();
        assert_eq!(ubcqsym_from_json(&ubcqsym_to_json(&q).to_string()).unwrap(), q);
    }

    #[test]
    fn rejects_bad_input() {
        let wrong_degree = r#"{"degree":2,"basis":"e","terms":[{"lambda":[2],"b":1,"num":"1","den":"1"}]}"#;
        assert!(ubcsym_from_json(wrong_degree).is_err());
        let bad_basis = r#"{"degree":1,"basis":"x","terms":[]}"#;
        assert!(ubcsym_from_json(bad_basis).is_err());
        let zero_den = r#"{"degree":1,"basis":"p","terms":[{"lambda":[],"b":1,"num":"1","den":"0"}]}"#;
        assert!(ubcsym_from_json(zero_den).is_err());
        let bad_mark = r#"{"degree":1,"basis":"M","terms":[{"alpha":[1],"marked":1,"num":"1","den":"1"}]}"#;
        assert!(ubcqsym_from_json(bad_mark).is_err());
    }
}
