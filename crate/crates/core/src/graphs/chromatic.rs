//! The chromatic polynomial by memoized deletion-contraction over the integers.

use std::collections::HashMap;

use super::LabelledGraph;

/// Coefficients of `P(G, x)`, constant term first.
pub fn chromatic_polynomial(g: &LabelledGraph) -> Vec<i128> {
    let mut memo = HashMap::new();
    rec(g, &mut memo)
}

fn rec(g: &LabelledGraph, memo: &mut HashMap<LabelledGraph, Vec<i128>>) -> Vec<i128> {
    if let Some(p) = memo.get(g) {
        return p.clone();
    }
    let out = match g.edges().last() {
        None => {
            let mut p = vec![0; g.n() + 1];
            p[g.n()] = 1;
            p
        }
        Some(&(u, v)) => {
            let del = rec(&g.delete_edge(u, v).expect("edge present"), memo);
            let con = rec(&g.contract_edge(u, v).expect("edge present"), memo);
            del.iter()
                .enumerate()
                .map(|(k, &a)| a - con.get(k).copied().unwrap_or(0))
                .collect()
        }
    };
    memo.insert(g.clone(), out.clone());
    out
}

pub fn evaluate(poly: &[i128], x: i128) -> i128 {
    poly.iter().rev().fold(0, |acc, &c| acc * x + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete, cycle, path};

    #[test]
    fn known_polynomials() {
        // x(x-1)(x-2)
        assert_eq!(chromatic_polynomial(&complete(3).unwrap()), vec![0, 2, -3, 1]);
        // trees: x(x-1)^{n-1}
        assert_eq!(chromatic_polynomial(&path(3).unwrap()), vec![0, 1, -2, 1]);
        // (x-1)^4 + (x-1)
        let c4 = chromatic_polynomial(&cycle(4).unwrap());
        for x in 0..6 {
            assert_eq!(evaluate(&c4, x), (x - 1).pow(4) + (x - 1));
        }
    }
}
