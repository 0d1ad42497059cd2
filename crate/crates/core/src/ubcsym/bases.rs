//! Transitions between the `e`, `p` and `m` bases of UBCSym.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::Linear;
use crate::combinatorics::{BType, Partition};
use crate::rational::{binomial, connected_sign_count, factorial, Q};

/// `(λ,b)·(μ,c) = (λ∪(b)∪μ, c)`, extended bilinearly.
pub(super) fn product(x: &Linear<BType>, y: &Linear<BType>) -> Linear<BType> {
    let mut out = Linear::new();
    for (s, cs) in x {
        for (t, ct) in y {
            let key = BType {
                lambda: s.full_partition().union(&t.lambda),
                b: t.b,
            };
            out.add_term(key, cs * ct);
        }
    }
    out
}

/// `y_{K_k}` in the `p`-basis. The coefficient of `p_{(μ,c)}` is the number of
/// set partitions of `[k]` of that type times `Π_blocks (−1)^{s−1}(s−1)!`.
pub fn y_complete(k: u32) -> Linear<BType> {
    let mut out = Linear::new();
    for c in 1..=k {
        for mu in Partition::all(k - c) {
            let mut count = binomial(u64::from(k - 1), u64::from(c - 1)) * factorial(k - c);
            let mut denom = BigInt::one();
            for &(part, mult) in &mu.multiplicities() {
                denom *= factorial(part).pow(mult as u32) * factorial(mult as u32);
            }
            count /= denom;
            let sign: BigInt = mu
                .parts()
                .iter()
                .chain(std::iter::once(&c))
                .map(|&s| connected_sign_count(s))
                .product();
            out.add_term(BType { lambda: mu, b: c }, Q::from_integer(count * sign));
        }
    }
    out
}

type Cache = Mutex<HashMap<BType, Arc<Linear<BType>>>>;

/// `e_{(λ,b)} = y_{K_{λ_1}|⋯|K_b}` in the `p`-basis, memoized.
pub(super) fn e_in_p(t: &BType) -> Arc<Linear<BType>> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache poisoned").get(t) {
        return v.clone();
    }
    let mut acc = y_complete(t.b);
    for &part in t.lambda.parts().iter().rev() {
        acc = product(&y_complete(part), &acc);
    }
    let v = Arc::new(acc);
    cache
        .lock()
        .expect("cache poisoned")
        .insert(t.clone(), v.clone());
    v
}

/// Inverse of [`e_in_p`]: the column of `e_t` has `p_t` as its only term
/// with `ℓ(λ)+1` blocks and all others have more, so eliminate upward.
pub(super) fn p_to_e(x: &Linear<BType>) -> Linear<BType> {
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

/// `p_t = Σ m_{type(σ)}` over coarsenings `σ` of a lift of `t`.
///
/// Coarsenings are groupings of the blocks. Blocks are added one at a time,
/// either to the group holding the `b`-block, to an existing group (of which
/// there are `mult(s)` of size `s`), or as a new group.
pub(super) fn p_in_m(t: &BType) -> Linear<BType> {
    let mut states: BTreeMap<(Vec<u32>, u32), BigInt> = BTreeMap::new();
    states.insert((Vec::new(), t.b), BigInt::one());
    for &part in t.lambda.parts() {
        let mut next: BTreeMap<(Vec<u32>, u32), BigInt> = BTreeMap::new();
        for ((groups, bsize), w) in states {
            *next.entry((groups.clone(), bsize + part)).or_default() += &w;
            let mut seen = Vec::new();
            for (i, &s) in groups.iter().enumerate() {
                if seen.contains(&s) {
                    continue;
                }
                seen.push(s);
                let mult = groups.iter().filter(|&&g| g == s).count();
                let mut g = groups.clone();
                g[i] += part;
                g.sort_unstable_by(|a, b| b.cmp(a));
                *next.entry((g, bsize)).or_default() += &w * BigInt::from(mult);
            }
            let mut g = groups;
            g.push(part);
            g.sort_unstable_by(|a, b| b.cmp(a));
            *next.entry((g, bsize)).or_default() += w;
        }
        states = next;
    }
    states
        .into_iter()
        .map(|((groups, b), w)| {
            (
                BType {
                    lambda: Partition::from_parts(groups),
                    b,
                },
                Q::from_integer(w),
            )
        })
        .collect()
}

/// Inverse of [`p_in_m`], unitriangular with respect to the number of blocks.
pub(super) fn m_to_p(x: &Linear<BType>) -> Linear<BType> {
    let mut rest = x.clone();
    let mut out = Linear::new();
    while let Some(lead) = rest
        .keys()
        .max_by(|a, b| a.num_blocks().cmp(&b.num_blocks()).then(a.cmp(b)))
        .cloned()
    {
        let a = rest.get(&lead);
        rest.add_scaled(&p_in_m(&lead), &-a.clone());
        out.add_term(lead, a);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SetPartitions;
    use crate::graphs::families::complete_blocks;
    use crate::rational::int;

    #[test]
    fn e_columns_match_native_expansion() {
        for d in 1..=7 {
            for t in BType::all(d) {
                let parts: Vec<u32> = t.lambda.parts().iter().copied().chain([t.b]).collect();
                let g = complete_blocks(&parts).unwrap();
                let native = crate::ubcsym::y_of(&g).unwrap();
                assert_eq!(native.terms, *e_in_p(&t), "{t}");
            }
        }
    }

    #[test]
    fn y_complete_counts_set_partitions() {
        // projection of e_{[k]} = Σ_σ μ(0̂,σ) p_σ
        for k in 1..=7u32 {
            let col = y_complete(k);
            let oracle: Linear<BType> = SetPartitions::unchecked(k as usize)
                .map(|s| (s.type_of(), Q::from_integer(s.mu_from_bottom())))
                .collect();
            assert_eq!(col, oracle);
        }
    }

    #[test]
    fn p_in_m_matches_coarsenings() {
        for d in 1..=7 {
            for t in BType::all(d) {
                let oracle: Linear<BType> = t
                    .representative()
                    .coarsenings()
                    .map(|(s, _)| (s.type_of(), int(1)))
                    .collect();
                assert_eq!(p_in_m(&t), oracle, "{t}");
            }
        }
    }

    #[test]
    fn round_trips() {
        for t in BType::all(6) {
            let x = Linear::single(t.clone(), int(1));
            assert_eq!(m_to_p(&x.apply(p_in_m)), x);
            assert_eq!(p_to_e(&e_in_p(&t)), x);
        }
    }
}
