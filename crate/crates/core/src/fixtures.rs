//! Small named graphs used throughout the docs, tests and examples.

use crate::graph::LabeledGraph;

fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> LabeledGraph {
    LabeledGraph::from_strs(vertices, edges).expect("fixture is well formed")
}

/// One vertex with loops `0` and `1`: the full 2-shift.
pub fn full1() -> LabeledGraph {
    build(&["v"], &[("v", "0", "v"), ("v", "1", "v")])
}

/// A reducible, follower-separated presentation whose terminal component
/// ([`h_fig1`]) presents the same shift.
pub fn fig1() -> LabeledGraph {
    build(
        &["q1", "q2", "q3"],
        &[
            ("q1", "0", "q1"),
            ("q1", "1", "q2"),
            ("q2", "1", "q2"),
            ("q2", "0", "q3"),
            ("q3", "0", "q2"),
        ],
    )
}

/// The subgraph of [`fig1`] induced by `q2` and `q3`.
pub fn h_fig1() -> LabeledGraph {
    build(
        &["q2", "q3"],
        &[("q2", "1", "q2"), ("q2", "0", "q3"), ("q3", "0", "q2")],
    )
}

/// Golden mean shift: no two consecutive `1`s.
pub fn gm() -> LabeledGraph {
    build(&["A", "B"], &[("A", "0", "A"), ("A", "1", "B"), ("B", "0", "A")])
}

/// Even shift: `1`s separated by an even number of `0`s.
pub fn ev() -> LabeledGraph {
    build(&["A", "B"], &[("A", "1", "A"), ("A", "0", "B"), ("B", "0", "A")])
}

/// A 2-cycle on one label; has no synchronizing word.
pub fn p2() -> LabeledGraph {
    build(&["A", "B"], &[("A", "a", "B"), ("B", "a", "A")])
}

/// The golden mean shift with vertex `A` split into two follower-equivalent copies.
pub fn dup_gm() -> LabeledGraph {
    build(
        &["A", "A'", "B"],
        &[
            ("A", "0", "A'"),
            ("A'", "0", "A"),
            ("A", "1", "B"),
            ("A'", "1", "B"),
            ("B", "0", "A"),
        ],
    )
}
