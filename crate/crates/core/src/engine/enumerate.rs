use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, PerfectMatching};

struct Frame {
    vertex: usize,
    next: usize,
    chosen: Option<usize>,
}

/// Iterator over every perfect matching of a graph, each exactly once.
///
/// Backtracks on the lowest-index uncovered vertex and tries its incident
/// edges in edge-index order, so the stream order is fixed by the graph.
pub struct PerfectMatchings<'g> {
    graph: &'g Graph,
    covered: Vec<bool>,
    frames: Vec<Frame>,
    descend: bool,
    done: bool,
}

impl<'g> PerfectMatchings<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        if graph.order() % 2 != 0 {
            return Err(Error::OddOrder(graph.order()));
        }
        Ok(PerfectMatchings {
            graph,
            covered: vec![false; graph.order()],
            frames: Vec::new(),
            descend: true,
            done: false,
        })
    }

    /// Only the matchings that contain `first`, which must be incident with
    /// vertex 0. Concatenating the streams for every edge of
    /// [`first_branches`] gives the full stream in the same order.
    pub fn with_first_edge(graph: &'g Graph, first: usize) -> Result<Self> {
        let mut it = PerfectMatchings::new(graph)?;
        if first >= graph.size() {
            return Err(Error::EdgeOutOfRange {
                index: first,
                len: graph.size(),
            });
        }
        if !graph.edge(first).touches(0) {
            return Err(Error::InvalidParameter {
                name: "first",
                value: first as i64,
                reason: "branch edge must be incident with vertex 0",
            });
        }
        let (x, y) = graph.edge(first).endpoints;
        it.covered[x] = true;
        it.covered[y] = true;
        it.frames.push(Frame {
            vertex: 0,
            next: usize::MAX,
            chosen: Some(first),
        });
        Ok(it)
    }

    fn current(&self) -> PerfectMatching {
        let mut set = self.graph.empty_set();
        for f in &self.frames {
            if let Some(e) = f.chosen {
                set.insert(e);
            }
        }
        PerfectMatching::new_unchecked(set)
    }
}

impl Iterator for PerfectMatchings<'_> {
    type Item = PerfectMatching;

    fn next(&mut self) -> Option<PerfectMatching> {
        let g = self.graph;
        loop {
            if self.done {
                return None;
            }
            if self.descend {
                let hint = self.frames.last().map_or(0, |f| f.vertex);
                match (hint..g.order()).find(|&v| !self.covered[v]) {
                    None => {
                        self.descend = false;
                        if self.frames.is_empty() {
                            self.done = true;
                        }
                        return Some(self.current());
                    }
                    Some(v) => self.frames.push(Frame {
                        vertex: v,
                        next: 0,
                        chosen: None,
                    }),
                }
            }
            let Some(top) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            if let Some(e) = top.chosen.take() {
                let (x, y) = g.edge(e).endpoints;
                self.covered[x] = false;
                self.covered[y] = false;
            }
            let inc = g.incident(top.vertex);
            let mut advanced = false;
            while top.next < inc.len() {
                let e = inc[top.next];
                top.next += 1;
                let w = g.edge(e).other(top.vertex);
                if !self.covered[w] {
                    self.covered[top.vertex] = true;
                    self.covered[w] = true;
                    top.chosen = Some(e);
                    advanced = true;
                    break;
                }
            }
            if advanced {
                self.descend = true;
            } else {
                self.frames.pop();
                self.descend = false;
            }
        }
    }
}

pub fn enumerate_perfect_matchings(g: &Graph) -> Result<PerfectMatchings<'_>> {
    PerfectMatchings::new(g)
}

/// The edges at vertex 0 in index order: the first branching decision of the
/// enumeration, used to split the stream between workers.
pub fn first_branches(g: &Graph) -> Vec<usize> {
    if g.order() == 0 {
        return Vec::new();
    }
    g.incident(0).to_vec()
}
