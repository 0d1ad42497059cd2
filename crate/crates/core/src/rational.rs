//! Exact rational helpers shared by every algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{CsfError, Result};

/// Coefficient type of every algebra element.
pub type Q = BigRational;

pub fn int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `(-1)^(k-1) (k-1)!`, the signed count of connected spanning subgraphs of `K_k`.
pub fn connected_sign_count(k: u32) -> BigInt {
    debug_assert!(k >= 1);
    let f = factorial(k - 1);
    if (k - 1) % 2 == 0 {
        f
    } else {
        -f
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Renders `q` as `a` or `a/b`.
pub fn fmt_q(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Numerator and denominator as decimal strings, denominator positive.
pub fn to_parts(q: &Q) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

pub fn from_parts(num: &str, den: &str) -> Result<Q> {
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| CsfError::Parse(format!("bad numerator `{num}`")))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| CsfError::Parse(format!("bad denominator `{den}`")))?;
    if d.is_zero() {
        return Err(CsfError::Parse("zero denominator".into()));
    }
    Ok(Q::new(n, d))
}

pub fn is_nonneg_integer(q: &Q) -> bool {
    q.is_integer() && !q.is_negative()
}
