//! Two independent computations of `y_{G:v}`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::One;

use super::UBCSymElement;
use crate::algebra::{Basis, Linear};
use crate::combinatorics::BType;
use crate::error::{CsfError, Result};
use crate::expansion::{expand, Dsu};
use crate::graphs::LabelledGraph;
use crate::limits;
use crate::rational::Q;

/// `y_G`, centred at the last vertex: `Σ_{S ⊆ E} (−1)^{|S|} p_{type(π(S))}`.
pub fn y_of(g: &LabelledGraph) -> Result<UBCSymElement> {
    let counts = expand(g.n(), g.edges(), true, &|d: &Dsu| d.btype())?;
    Ok(UBCSymElement {
        degree: g.n(),
        basis: Basis::P,
        terms: counts
            .into_iter()
            .map(|(k, c)| (k, Q::from_integer(c.into())))
            .collect(),
    })
}

fn check_vertex(g: &LabelledGraph, v: usize) -> Result<()> {
    if v == 0 || v > g.n() {
        return Err(CsfError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// `y_{G:v}` in the `p`-basis, by subgraph expansion.
pub fn y_centred(g: &LabelledGraph, v: usize) -> Result<UBCSymElement> {
    check_vertex(g, v)?;
    y_of(&g.move_to_last(v)?)
}

type Memo = Mutex<HashMap<LabelledGraph, Linear<BType>>>;

/// `y_{G:v}` in the `p`-basis, by deletion-contraction.
///
/// With `d` the last vertex and `j` its smallest neighbour,
/// `y_G = y_{G∖jd} − (y_{G/jd : j})↑`; an isolated `d` splits off as `p_{(∅,1)}`.
pub fn y_centred_dc(g: &LabelledGraph, v: usize) -> Result<UBCSymElement> {
    check_vertex(g, v)?;
    limits::check("edge count", g.num_edges(), limits::max_edges())?;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    let h = g.move_to_last(v)?;
    Ok(UBCSymElement {
        degree: g.n(),
        basis: Basis::P,
        terms: dc(&h, memo)?,
    })
}

fn dc(h: &LabelledGraph, memo: &Memo) -> Result<Linear<BType>> {
    if let Some(v) = memo.lock().expect("memo poisoned").get(h) {
        return Ok(v.clone());
    }
    let d = h.n();
    let out = match h.neighbours(d).first() {
        None if d == 1 => Linear::single(BType::of(&[], 1), Q::one()),
        None => {
            let rest = dc(&h.delete_vertex(d)?, memo)?;
            rest.map_keys(|t| BType {
                lambda: t.full_partition(),
                b: 1,
            })
        }
        Some(&j) => {
            let deleted = dc(&h.delete_edge(j, d)?, memo)?;
            let contracted = h.contract_to_j(j)?.move_to_last(j)?;
            let inducted = dc(&contracted, memo)?.map_keys(|t| BType {
                lambda: t.lambda.clone(),
                b: t.b + 1,
            });
            &deleted - &inducted
        }
    };
    memo.lock()
        .expect("memo poisoned")
        .insert(h.clone(), out.clone());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{complete_blocks, path};
    use crate::graphs::{enumerate_unit_interval_graphs, random_connected_graphs};
    use crate::ncsym;
    use crate::rational::frac;
    use crate::ubcsym::proj_ubc;

    fn square_with_pendants() -> LabelledGraph {
        LabelledGraph::new(6, [(1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 3)]).unwrap()
    }

    #[test]
    fn p4_and_p3() {
        let y = y_centred(&path(4).unwrap(), 4).unwrap().to_basis(Basis::E).unwrap();
        let expect: Linear<BType> = [
            (BType::of(&[3], 1), frac(1, 3)),
            (BType::of(&[2], 2), frac(1, 2)),
            (BType::of(&[], 4), frac(1, 6)),
        ]
        .into_iter()
        .collect();
        assert_eq!(y.terms, expect);
        let y3 = y_centred(&path(3).unwrap(), 3).unwrap().to_basis(Basis::E).unwrap();
        assert_eq!(y3.to_string(), "1/2*e((2),1) + 1/2*e(∅,3)");
    }

    #[test]
    fn six_vertex_example() {
        let y = y_centred(&square_with_pendants(), 5).unwrap().to_basis(Basis::E).unwrap();
        let expect: Linear<BType> = [
            (BType::of(&[4, 1], 1), frac(1, 12)),
            (BType::of(&[5], 1), frac(1, 60)),
            (BType::of(&[2, 2], 2), frac(1, 4)),
            (BType::of(&[3, 1], 2), frac(1, 6)),
            (BType::of(&[4], 2), frac(1, 24)),
            (BType::of(&[1, 1], 4), frac(1, 6)),
            (BType::of(&[2], 4), frac(1, 12)),
            (BType::of(&[1], 5), frac(1, 6)),
            (BType::of(&[], 6), frac(1, 40)),
        ]
        .into_iter()
        .collect();
        assert_eq!(y.terms, expect);
    }

    #[test]
    fn block_graphs_give_e_basis() {
        for t in BType::all(6) {
            let parts: Vec<u32> = t.lambda.parts().iter().copied().chain([t.b]).collect();
            let g = complete_blocks(&parts).unwrap();
            let y = y_of(&g).unwrap().to_basis(Basis::E).unwrap();
            assert_eq!(y.terms, Linear::single(t, Q::one()));
        }
    }

    #[test]
    fn engines_agree_with_oracle() {
        for n in 1..=5 {
            for g in enumerate_unit_interval_graphs(n).unwrap() {
                for v in 1..=n {
                    let native = y_centred(&g, v).unwrap();
                    let dc = y_centred_dc(&g, v).unwrap();
                    let oracle = proj_ubc(&ncsym::y_of(&g.move_to_last(v).unwrap()).unwrap());
                    assert_eq!(native, dc);
                    assert_eq!(native, oracle);
                }
            }
        }
        for g in random_connected_graphs(6, 20, 7).unwrap() {
            assert_eq!(y_centred(&g, 2).unwrap(), y_centred_dc(&g, 2).unwrap());
        }
    }

    #[test]
    fn vertex_out_of_range() {
        let g = path(3).unwrap();
        assert!(matches!(y_centred(&g, 0), Err(CsfError::VertexOutOfRange { .. })));
        assert!(y_centred_dc(&g, 4).is_err());
    }
}
