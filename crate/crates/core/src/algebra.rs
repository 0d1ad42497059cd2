//! Sparse linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CsfError, Result};
use crate::rational::Q;

/// Basis tag shared by Sym, NCSym and UBCSym elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    E,
    P,
    M,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::E => "e",
            Basis::P => "p",
            Basis::M => "m",
        })
    }
}

impl std::str::FromStr for Basis {
    type Err = CsfError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Basis::E),
            "p" => Ok(Basis::P),
            "m" => Ok(Basis::M),
            other => Err(CsfError::Parse(format!("unknown basis `{other}`"))),
        }
    }
}

/// A finitely supported map `K → Q`; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Linear<K: Ord>(BTreeMap<K, Q>);

impl<K: Ord> Default for Linear<K> {
    fn default() -> Self {
        Linear(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Linear<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Q) -> Self {
        let mut l = Self::new();
        l.add_term(key, coeff);
        l
    }

    pub fn add_term(&mut self, key: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.0.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale · other`
    pub fn add_scaled(&mut self, other: &Linear<K>, scale: &Q) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.0 {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scaled(&self, scale: &Q) -> Self {
        if scale.is_zero() {
            return Self::new();
        }
        Linear(self.0.iter().map(|(k, c)| (k.clone(), c * scale)).collect())
    }

    pub fn get(&self, key: &K) -> Q {
        self.0.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn remove(&mut self, key: &K) -> Option<Q> {
        self.0.remove(key)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Q> {
        self.0.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Q> {
        self.0.keys()
    }

    /// Re-keys every term, merging collisions.
    pub fn map_keys<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> Linear<L> {
        let mut out = Linear::new();
        for (k, c) in &self.0 {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Applies a linear map given on basis elements.
    pub fn apply<L: Ord + Clone, F: FnMut(&K) -> Linear<L>>(&self, mut f: F) -> Linear<L> {
        let mut out = Linear::new();
        for (k, c) in &self.0 {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Same as [`Linear::apply`] with a fallible image.
    pub fn try_apply<L: Ord + Clone, F: FnMut(&K) -> Result<Linear<L>>>(
        &self,
        mut f: F,
    ) -> Result<Linear<L>> {
        let mut out = Linear::new();
        for (k, c) in &self.0 {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// The term with the most negative coefficient, if any is negative.
    pub fn most_negative(&self) -> Option<(&K, &Q)> {
        self.0
            .iter()
            .filter(|(_, c)| c.is_negative())
            .min_by(|a, b| a.1.cmp(b.1))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|c| !c.is_negative())
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for Linear<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut l = Linear::new();
        for (k, c) in iter {
            l.add_term(k, c);
        }
        l
    }
}

impl<'a, K: Ord> IntoIterator for &'a Linear<K> {
    type Item = (&'a K, &'a Q);
    type IntoIter = btree_map::Iter<'a, K, Q>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<K: Ord + Clone> Add for &Linear<K> {
    type Output = Linear<K>;

    fn add(self, rhs: &Linear<K>) -> Linear<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::from_integer(1.into()));
        out
    }
}

impl<K: Ord + Clone> Sub for &Linear<K> {
    type Output = Linear<K>;

    fn sub(self, rhs: &Linear<K>) -> Linear<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::from_integer((-1).into()));
        out
    }
}

impl<K: Ord + Clone> Neg for &Linear<K> {
    type Output = Linear<K>;

    fn neg(self) -> Linear<K> {
        self.scaled(&Q::from_integer((-1).into()))
    }
}

/// Renders `c₁·b_{k₁} + c₂·b_{k₂} + …` with keys formatted by `Display`.
pub(crate) fn format_terms<K: Ord + Clone + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    basis: &str,
    terms: &Linear<K>,
) -> fmt::Result {
    if terms.is_zero() {
        return write!(f, "0");
    }
    for (i, (k, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        if abs != Q::from_integer(1u32.into()) {
            write!(f, "{}*", crate::rational::fmt_q(&abs))?;
        }
        write!(f, "{basis}{k}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn zeros_are_dropped() {
        let mut l: Linear<u32> = Linear::new();
        l.add_term(1, int(2));
        l.add_term(1, int(-2));
        l.add_term(2, int(0));
        assert!(l.is_zero());
    }

    #[test]
    fn arithmetic() {
        let a: Linear<u32> = [(1, frac(1, 2)), (2, int(3))].into_iter().collect();
        let b: Linear<u32> = [(1, frac(1, 2)), (3, int(-1))].into_iter().collect();
        let s = &a + &b;
        assert_eq!(s.get(&1), int(1));
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(b.most_negative(), Some((&3, &int(-1))));
        assert!(a.is_nonnegative());
    }
}
