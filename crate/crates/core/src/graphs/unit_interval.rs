use serde::{Deserialize, Serialize};

use super::LabelledGraph;
use crate::error::{CsfError, Result};
use crate::limits;

/// The two sequence descriptions of a labelled unit interval graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitIntervalSeq {
    /// Weakly increasing, `i ≤ m_i ≤ n`, `m_n = n`; edge `ij` iff `i < j ≤ m_i`.
    M(Vec<usize>),
    /// Weakly increasing, `1 ≤ w_i ≤ i`, `w_1 = 1`; edge `ij` iff `w_j ≤ i < j`.
    W(Vec<usize>),
}

impl UnitIntervalSeq {
    pub fn validate(&self) -> Result<()> {
        let bad = |kind, index: usize, reason: String| CsfError::InvalidSequence {
            kind,
            index: index + 1,
            reason,
        };
        match self {
            UnitIntervalSeq::M(m) => {
                let n = m.len();
                if n == 0 {
                    return Err(CsfError::Invalid("empty m-sequence".into()));
                }
                for (k, &mi) in m.iter().enumerate() {
                    if mi < k + 1 || mi > n {
                        return Err(bad("m", k, format!("m_{} = {mi} not in [{}, {n}]", k + 1, k + 1)));
                    }
                    if k > 0 && mi < m[k - 1] {
                        return Err(bad("m", k, "sequence decreases".into()));
                    }
                }
                Ok(())
            }
            UnitIntervalSeq::W(w) => {
                if w.is_empty() {
                    return Err(CsfError::Invalid("empty w-sequence".into()));
                }
                for (k, &wi) in w.iter().enumerate() {
                    if wi == 0 || wi > k + 1 {
                        return Err(bad("w", k, format!("w_{} = {wi} not in [1, {}]", k + 1, k + 1)));
                    }
                    if k > 0 && wi < w[k - 1] {
                        return Err(bad("w", k, "sequence decreases".into()));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn to_graph(&self) -> Result<LabelledGraph> {
        self.validate()?;
        match self {
            UnitIntervalSeq::M(m) => LabelledGraph::new(
                m.len(),
                m.iter()
                    .enumerate()
                    .flat_map(|(k, &mi)| (k + 2..=mi).map(move |j| (k + 1, j))),
            ),
            UnitIntervalSeq::W(w) => LabelledGraph::new(
                w.len(),
                w.iter()
                    .enumerate()
                    .flat_map(|(k, &wj)| (wj..k + 1).map(move |i| (i, k + 1))),
            ),
        }
    }
}

pub fn from_unit_interval(seq: &UnitIntervalSeq) -> Result<LabelledGraph> {
    seq.to_graph()
}

/// Streams every labelled unit interval graph on `[n]`, one per m-sequence,
/// in lexicographic order of the sequence.
#[derive(Clone, Debug)]
pub struct UnitIntervalGraphs {
    m: Vec<usize>,
    done: bool,
}

impl UnitIntervalGraphs {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(CsfError::Invalid("unit interval graphs on zero vertices".into()));
        }
        limits::check("unit interval vertex count", n, limits::unit_interval_n())?;
        Ok(UnitIntervalGraphs {
            m: (1..=n).collect(),
            done: false,
        })
    }
}

impl Iterator for UnitIntervalGraphs {
    type Item = LabelledGraph;

    fn next(&mut self) -> Option<LabelledGraph> {
        if self.done {
            return None;
        }
        let g = UnitIntervalSeq::M(self.m.clone())
            .to_graph()
            .expect("enumerated sequences are valid");
        let n = self.m.len();
        match (0..n.saturating_sub(1)).rev().find(|&k| self.m[k] < n) {
            Some(k) => {
                self.m[k] += 1;
                for j in k + 1..n {
                    self.m[j] = self.m[k].max(j + 1);
                }
            }
            None => self.done = true,
        }
        Some(g)
    }
}

pub fn enumerate_unit_interval_graphs(n: usize) -> Result<UnitIntervalGraphs> {
    UnitIntervalGraphs::new(n)
}

pub fn catalan(n: u64) -> u64 {
    let mut c = 1u64;
    for k in 0..n {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
