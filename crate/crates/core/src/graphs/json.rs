//! Graph JSON. Vertices are 1-indexed. Three input shapes are accepted:
//!
//! ```json
//! {"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}
//! {"unit_interval": {"m": [3, 4, 4, 4]}}
//! {"unit_interval": {"w": [1, 1, 1, 2]}}
//! {"family": {"name": "wl", "params": {"m": 5, "n": 2, "k": 1}}}
//! ```
//!
//! Output is always the first shape, edges sorted with `i < j`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{family, LabelledGraph, UnitIntervalSeq};
use crate::error::{CsfError, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyJson {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSpec {
    EdgeList(EdgeListJson),
    UnitInterval { unit_interval: UnitIntervalSeq },
    Family { family: FamilyJson },
}

impl GraphSpec {
    pub fn build(&self) -> Result<LabelledGraph> {
        match self {
            GraphSpec::EdgeList(e) => LabelledGraph::new(e.n, e.edges.iter().map(|&[i, j]| (i, j))),
            GraphSpec::UnitInterval { unit_interval } => unit_interval.to_graph(),
            GraphSpec::Family { family: f } => {
                let params = f
                    .params
                    .iter()
                    .map(|(k, v)| {
                        let s = match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        };
                        (k.clone(), s)
                    })
                    .collect();
                family(&f.name, &params)
            }
        }
    }
}

pub fn graph_from_json(text: &str) -> Result<LabelledGraph> {
    let spec: GraphSpec = serde_json::from_str(text).map_err(|e| CsfError::Parse(e.to_string()))?;
    spec.build()
}

pub fn graph_to_json(g: &LabelledGraph) -> Value {
    serde_json::to_value(EdgeListJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(i, j)| [i, j]).collect(),
    })
    .expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{path, wide_lollipop};

    #[test]
    fn all_shapes_parse() {
        let p4 = path(4).unwrap();
        assert_eq!(graph_from_json(r#"{"n":4,"edges":[[1,2],[3,2],[3,4]]}"#).unwrap(), p4);
        assert_eq!(graph_from_json(r#"{"unit_interval":{"m":[2,3,4,4]}}"#).unwrap(), p4);
        assert_eq!(graph_from_json(r#"{"unit_interval":{"w":[1,1,2,3]}}"#).unwrap(), p4);
        assert_eq!(
            graph_from_json(r#"{"family":{"name":"wl","params":{"m":5,"n":2,"k":1}}}"#).unwrap(),
            wide_lollipop(5, 2, 1).unwrap()
        );
        assert!(graph_from_json(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
        assert!(graph_from_json("[").is_err());
    }

    #[test]
    fn round_trip() {
        let g = wide_lollipop(5, 2, 1).unwrap();
        let text = graph_to_json(&g).to_string();
        assert_eq!(graph_from_json(&text).unwrap(), g);
    }
}
