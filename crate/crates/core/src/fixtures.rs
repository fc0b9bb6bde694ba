//! Small named graphs used as test corpus and CLI fixtures.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeClass, Graph, VertexLabel};

fn plain(order: usize) -> Vec<VertexLabel> {
    (1..=order).map(VertexLabel::Plain).collect()
}

/// The cycle `C_k` on vertices `w1 … wk`.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidParameter {
            name: "k",
            value: k as i64,
            reason: "a cycle needs at least 3 vertices",
        });
    }
    let edges: Vec<_> = (0..k)
        .map(|i| (i, (i + 1) % k, EdgeClass::Generic))
        .collect();
    Graph::new(plain(k), &edges)
}

pub fn complete4() -> Result<Graph> {
    let mut edges = Vec::new();
    for x in 0..4 {
        for y in x + 1..4 {
            edges.push((x, y, EdgeClass::Generic));
        }
    }
    Graph::new(plain(4), &edges)
}

pub fn k33() -> Result<Graph> {
    let mut edges = Vec::new();
    for x in 0..3 {
        for y in 3..6 {
            edges.push((x, y, EdgeClass::Generic));
        }
    }
    Graph::new(plain(6), &edges)
}

/// Petersen graph: outer 5-cycle `u1 … u5`, spokes `u_i v_i`, and the inner
/// pentagram `v_i v_{i+2}`.
pub fn petersen() -> Result<Graph> {
    let mut labels: Vec<_> = (1..=5).map(VertexLabel::Outer).collect();
    labels.extend((1..=5).map(VertexLabel::Inner));
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5, EdgeClass::OuterEdge));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5, EdgeClass::InnerEdge));
    }
    for i in 0..5 {
        edges.push((i, 5 + i, EdgeClass::Spoke));
    }
    Graph::new(labels, &edges)
}
