//! Constructors for every named graph family.

use std::collections::BTreeMap;

use super::{LabelledGraph, UnitIntervalSeq};
use crate::combinatorics::SetPartition;
use crate::error::{CsfError, Result};

fn out_of_range(family: &str, bound: &str) -> CsfError {
    CsfError::ParamOutOfRange {
        family: family.to_string(),
        bound: bound.to_string(),
    }
}

fn require(ok: bool, family: &str, bound: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(out_of_range(family, bound))
    }
}

/// `P_d`
pub fn path(d: usize) -> Result<LabelledGraph> {
    require(d >= 1, "path", "d >= 1")?;
    LabelledGraph::new(d, (1..d).map(|i| (i, i + 1)))
}

/// `C_d`, with edges `i(i+1)` and `1d`.
pub fn cycle(d: usize) -> Result<LabelledGraph> {
    require(d >= 3, "cycle", "d >= 3")?;
    LabelledGraph::new(d, (1..d).map(|i| (i, i + 1)).chain([(1, d)]))
}

/// `K_d`
pub fn complete(d: usize) -> Result<LabelledGraph> {
    require(d >= 1, "complete", "d >= 1")?;
    UnitIntervalSeq::M(vec![d; d]).to_graph()
}

/// `K_π`: a clique on each block of `π`.
pub fn block_graph(pi: &SetPartition) -> Result<LabelledGraph> {
    let mut edges = Vec::new();
    for block in pi.blocks() {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                edges.push((i, j));
            }
        }
    }
    LabelledGraph::new(pi.degree(), edges)
}

/// `K_{λ_1} | ⋯ | K_{λ_ℓ} | K_b`, the block graph of the canonical lift of `(λ, b)`.
pub fn complete_blocks(parts: &[u32]) -> Result<LabelledGraph> {
    let mut g: Option<LabelledGraph> = None;
    for &p in parts {
        let k = complete(p as usize)?;
        g = Some(match g {
            None => k,
            Some(h) => h.disjoint_union(&k)?,
        });
    }
    g.ok_or_else(|| CsfError::Invalid("no blocks".into()))
}

/// `L_{m,n}`: `w_i = 1` for `i ≤ m`, `w_i = i − 1` after.
pub fn lollipop(m: usize, n: usize) -> Result<LabelledGraph> {
    require(m >= 1, "lollipop", "m >= 1")?;
    require(n >= 1, "lollipop", "n >= 1")?;
    let w = (1..=m + n).map(|i| if i <= m { 1 } else { i - 1 }).collect();
    UnitIntervalSeq::W(w).to_graph()
}

/// Type I melting lollipop `L^{(k)}_{m,n}`: `L_{m,n}` without the edges from `m` to `1, …, k`.
pub fn melting_lollipop(m: usize, n: usize, k: usize) -> Result<LabelledGraph> {
    require(m >= 1, "melting-lollipop", "m >= 1")?;
    require(n >= 1, "melting-lollipop", "n >= 1")?;
    require(k < m, "melting-lollipop", "0 <= k <= m-1")?;
    let mut g = lollipop(m, n)?;
    for i in 1..=k {
        g = g.delete_edge(i, m)?;
    }
    Ok(g)
}

/// Type II melting lollipop `Γ^{(k)}_{m,n}`: `K_m` without the edges from 1 to
/// `m−k+1, …, m`, concatenated with `P_{n+1}`.
pub fn gamma(m: usize, n: usize, k: usize) -> Result<LabelledGraph> {
    require(m >= 3, "gamma", "m >= 3")?;
    require(n >= 1, "gamma", "n >= 1")?;
    require((1..m).contains(&k), "gamma", "1 <= k <= m-1")?;
    let mut head = complete(m)?;
    for j in m - k + 1..=m {
        head = head.delete_edge(1, j)?;
    }
    head.concatenate(&path(n + 1)?)
}

/// Twin peaks `TP_{n+1}`: `K_{n+1}` without the edge `1(n+1)`.
pub fn twin_peaks(n: usize) -> Result<LabelledGraph> {
    require(n >= 2, "twin-peaks", "n >= 2")?;
    complete(n + 1)?.delete_edge(1, n + 1)
}

/// Melting ice cream scoop `IC^{(k)}_{n+1}`: `K_{n+1}` without the edges from `n+1` to `1, …, k`.
pub fn ice_cream(n: usize, k: usize) -> Result<LabelledGraph> {
    require(n >= 2, "ice-cream", "n >= 2")?;
    require((1..=n).contains(&k), "ice-cream", "1 <= k <= n")?;
    let mut g = complete(n + 1)?;
    for i in 1..=k {
        g = g.delete_edge(i, n + 1)?;
    }
    Ok(g)
}

/// Snowy twin peaks `STP^k_{n+1}`: `m = (k+1, n, n+1, …, n+1)`.
pub fn snowy_twin_peaks(n: usize, k: usize) -> Result<LabelledGraph> {
    require(n >= 3, "snowy-twin-peaks", "n >= 3")?;
    require((1..=n - 2).contains(&k), "snowy-twin-peaks", "1 <= k <= n-2")?;
    let m = (1..=n + 1)
        .map(|i| match i {
            1 => k + 1,
            2 => n,
            _ => n + 1,
        })
        .collect();
    UnitIntervalSeq::M(m).to_graph()
}

/// Wide melting lollipop `WL^{(k)}_{m,n}`: `w = (1^{m−1}, k+1, m−1, m, …, m+n−2)`.
pub fn wide_lollipop(m: usize, n: usize, k: usize) -> Result<LabelledGraph> {
    require(m >= 4, "wl", "m >= 4")?;
    require((1..=m - 2).contains(&k), "wl", "1 <= k <= m-2")?;
    let w = (1..=m + n)
        .map(|i| match i.cmp(&m) {
            std::cmp::Ordering::Less => 1,
            std::cmp::Ordering::Equal => k + 1,
            std::cmp::Ordering::Greater => i - 2,
        })
        .collect();
    UnitIntervalSeq::W(w).to_graph()
}

/// Triangular ladder `TL_n`: `m_i = min(i+2, n)`.
pub fn triangular_ladder(n: usize) -> Result<LabelledGraph> {
    require(n >= 1, "triangular-ladder", "n >= 1")?;
    UnitIntervalSeq::M((1..=n).map(|i| (i + 2).min(n)).collect()).to_graph()
}

/// Kayak paddle `KP_{m,ℓ−1,n} = C_m + P_{ℓ+1} + C_n`.
pub fn kayak(m: usize, l: usize, n: usize) -> Result<LabelledGraph> {
    require(m >= 3, "kayak", "m >= 3")?;
    require(n >= 3, "kayak", "n >= 3")?;
    cycle(m)?.concatenate(&path(l + 1)?)?.concatenate(&cycle(n)?)
}

/// Names accepted by [`family`], with their parameters.
pub const FAMILY_NAMES: &[(&str, &str)] = &[
    ("path", "d"),
    ("cycle", "d"),
    ("complete", "d"),
    ("block", "pi"),
    ("lollipop", "m n"),
    ("melting-lollipop", "m n k"),
    ("gamma", "m n k"),
    ("twin-peaks", "n"),
    ("ice-cream", "n k"),
    ("snowy-twin-peaks", "n k"),
    ("wl", "m n k"),
    ("triangular-ladder", "n"),
    ("kayak", "m l n"),
];

pub(crate) fn canonical_name(name: &str) -> Option<&'static str> {
    let lower = name.to_ascii_lowercase().replace('_', "-");
    let alias = match lower.as_str() {
        "p" => "path",
        "c" => "cycle",
        "k" => "complete",
        "k-pi" | "kpi" => "block",
        "l" => "lollipop",
        "melting-lollipop-i" | "type-i" => "melting-lollipop",
        "melting-lollipop-ii" | "type-ii" => "gamma",
        "tp" => "twin-peaks",
        "ic" => "ice-cream",
        "stp" => "snowy-twin-peaks",
        "wide-lollipop" | "wide-melting-lollipop" => "wl",
        "tl" => "triangular-ladder",
        "kp" | "kayak-paddle" => "kayak",
        other => other,
    };
    FAMILY_NAMES.iter().map(|(n, _)| *n).find(|n| *n == alias)
}

/// Builds a family member from string parameters, e.g. `("wl", {m:5, n:2, k:1})`.
pub fn family(name: &str, params: &BTreeMap<String, String>) -> Result<LabelledGraph> {
    let canon = canonical_name(name).ok_or_else(|| CsfError::UnknownFamily(name.to_string()))?;
    let get = |key: &str| -> Result<usize> {
        let raw = params.get(key).ok_or_else(|| {
            CsfError::Invalid(format!("family `{canon}` needs parameter `{key}`"))
        })?;
        raw.trim().parse::<usize>().map_err(|_| {
            CsfError::Invalid(format!("parameter `{key}` = `{raw}` is not a nonnegative integer"))
        })
    };
    match canon {
        "path" => path(get("d")?),
        "cycle" => cycle(get("d")?),
        "complete" => complete(get("d")?),
        "block" => {
            let raw = params
                .get("pi")
                .ok_or_else(|| CsfError::Invalid("family `block` needs parameter `pi`".into()))?;
            block_graph(&raw.parse()?)
        }
        "lollipop" => lollipop(get("m")?, get("n")?),
        "melting-lollipop" => melting_lollipop(get("m")?, get("n")?, get("k")?),
        "gamma" => gamma(get("m")?, get("n")?, get("k")?),
        "twin-peaks" => twin_peaks(get("n")?),
        "ice-cream" => ice_cream(get("n")?, get("k")?),
        "snowy-twin-peaks" => snowy_twin_peaks(get("n")?, get("k")?),
        "wl" => wide_lollipop(get("m")?, get("n")?, get("k")?),
        "triangular-ladder" => triangular_ladder(get("n")?),
        "kayak" => kayak(get("m")?, get("l")?, get("n")?),
        _ => unreachable!("canonical names are exhaustive"),
    }
}
