//! Labelled graphs on `[n]`, the named families, surgery, and acyclic orientations.

mod chromatic;
mod enumerate;
pub mod families;
mod graph;
mod json;
mod orientations;
mod unit_interval;

pub use chromatic::{chromatic_polynomial, evaluate as evaluate_polynomial};
pub use enumerate::{connected_graph_classes, random_connected_graphs, tree_classes, MAX_CLASS_VERTICES};
pub use families::{family, FAMILY_NAMES};
pub use graph::LabelledGraph;
pub use json::{graph_from_json, graph_to_json, EdgeListJson, FamilyJson, GraphSpec};
pub use orientations::{
    count_acyclic_orientations, enumerate_acyclic_orientations, sink_counts, sink_counts_at,
    sink_counts_avoiding, visit_acyclic_orientations, AcyclicOrientation,
};
pub use unit_interval::{
    catalan, enumerate_unit_interval_graphs, from_unit_interval, UnitIntervalGraphs, UnitIntervalSeq,
};
