//! Immutable labeled simple graphs, perfect matchings and 2-factors.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

/// Largest edge count a [`Graph`] accepts.
pub const MAX_EDGES: usize = 4096;

/// Role tag of a vertex. Indices are 1-based, as in `u_1 … u_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexLabel {
    Outer(usize),
    Inner(usize),
    /// Vertex of a graph without an outer/inner structure.
    Plain(usize),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Outer(i) => write!(f, "u{i}"),
            VertexLabel::Inner(i) => write!(f, "v{i}"),
            VertexLabel::Plain(i) => write!(f, "w{i}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeClass {
    OuterEdge,
    InnerEdge,
    Spoke,
    Generic,
}

impl EdgeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeClass::OuterEdge => "outer",
            EdgeClass::InnerEdge => "inner",
            EdgeClass::Spoke => "spoke",
            EdgeClass::Generic => "generic",
        }
    }
}

/// An undirected edge; `endpoints.0 < endpoints.1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub endpoints: (usize, usize),
    pub class: EdgeClass,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.endpoints.0 == v {
            self.endpoints.1
        } else {
            self.endpoints.0
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.endpoints.0 == v || self.endpoints.1 == v
    }
}

/// A connected simple graph whose vertices and edges are densely indexed.
///
/// Incidence lists are sorted by edge index. The graph never changes after
/// construction and can be shared freely between threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
    by_label: BTreeMap<VertexLabel, usize>,
}

impl Graph {
    /// Builds a graph from vertex labels and an edge list. Edge `k` of the
    /// result is the `k`-th entry of `edges`.
    pub fn new(labels: Vec<VertexLabel>, edges: &[(usize, usize, EdgeClass)]) -> Result<Graph> {
        let order = labels.len();
        if edges.len() > MAX_EDGES {
            return Err(Error::TooManyEdges(edges.len()));
        }
        let mut by_label = BTreeMap::new();
        for (v, label) in labels.iter().enumerate() {
            if by_label.insert(*label, v).is_some() {
                return Err(Error::DuplicateLabel);
            }
        }
        let mut seen = BTreeSet::new();
        let mut stored = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); order];
        for (k, &(x, y, class)) in edges.iter().enumerate() {
            for v in [x, y] {
                if v >= order {
                    return Err(Error::VertexOutOfRange {
                        index: v,
                        len: order,
                    });
                }
            }
            if x == y {
                return Err(Error::Loop(x));
            }
            let endpoints = (x.min(y), x.max(y));
            if !seen.insert(endpoints) {
                return Err(Error::DuplicateEdge(endpoints.0, endpoints.1));
            }
            stored.push(Edge { endpoints, class });
            incidence[x].push(k);
            incidence[y].push(k);
        }
        let graph = Graph {
            labels,
            edges: stored,
            incidence,
            by_label,
        };
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(graph)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn label(&self, v: usize) -> VertexLabel {
        self.labels[v]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertex(&self, label: VertexLabel) -> Option<usize> {
        self.by_label.get(&label).copied()
    }

    pub fn edge_between(&self, x: usize, y: usize) -> Option<usize> {
        self.incidence
            .get(x)?
            .iter()
            .copied()
            .find(|&e| self.edges[e].other(x) == y)
    }

    pub fn edge_by_labels(&self, x: VertexLabel, y: VertexLabel) -> Option<usize> {
        self.edge_between(self.vertex(x)?, self.vertex(y)?)
    }

    /// Labels of the endpoints of `e`, lower vertex index first.
    pub fn edge_labels(&self, e: usize) -> (VertexLabel, VertexLabel) {
        let (x, y) = self.edges[e].endpoints;
        (self.labels[x], self.labels[y])
    }

    pub fn empty_set(&self) -> EdgeSet {
        EdgeSet::new(self.size())
    }

    pub fn edge_set<I: IntoIterator<Item = usize>>(&self, edges: I) -> Result<EdgeSet> {
        EdgeSet::from_edges(self.size(), edges)
    }

    pub fn is_cubic(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() == 3)
    }

    pub fn require_cubic(&self) -> Result<()> {
        match self.incidence.iter().position(|inc| inc.len() != 3) {
            None => Ok(()),
            Some(vertex) => Err(Error::UnsupportedDegree {
                vertex,
                degree: self.incidence[vertex].len(),
            }),
        }
    }

    pub(crate) fn check_universe(&self, set: &EdgeSet) -> Result<()> {
        if set.universe() != self.size() {
            return Err(Error::UniverseMismatch {
                expected: self.size(),
                found: set.universe(),
            });
        }
        Ok(())
    }

    /// Number of edges of `set` incident with `v`.
    pub fn degree_in(&self, set: &EdgeSet, v: usize) -> usize {
        self.incidence[v].iter().filter(|&&e| set.contains(e)).count()
    }

    fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &e in &self.incidence[x] {
                let y = self.edges[e].other(x);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.order()
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.order() {
            let mut dist = vec![usize::MAX; self.order()];
            let mut via = vec![usize::MAX; self.order()];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &e in &self.incidence[x] {
                    if e == via[x] {
                        continue;
                    }
                    let y = self.edges[e].other(x);
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        via[y] = e;
                        queue.push_back(y);
                    } else {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Image of `set` under the vertex permutation `perm`, or `None` if some
    /// image pair is not an edge (i.e. `perm` is not an automorphism on `set`).
    pub fn map_edges(&self, perm: &[usize], set: &EdgeSet) -> Option<EdgeSet> {
        let mut out = self.empty_set();
        for e in set.iter() {
            let (x, y) = self.edges[e].endpoints;
            out.insert(self.edge_between(perm[x], perm[y])?);
        }
        Some(out)
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.order()
            && self
                .map_edges(perm, &EdgeSet::full(self.size()))
                .is_some_and(|image| image.len() == self.size())
    }
}

/// A set of edges covering every vertex exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching {
    edges: EdgeSet,
}

impl PerfectMatching {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<PerfectMatching> {
        if validate_perfect_matching(g, &edges)? {
            Ok(PerfectMatching { edges })
        } else {
            Err(Error::NotPerfectMatching)
        }
    }

    pub fn from_edges<I: IntoIterator<Item = usize>>(g: &Graph, edges: I) -> Result<Self> {
        PerfectMatching::new(g, g.edge_set(edges)?)
    }

    pub(crate) fn new_unchecked(edges: EdgeSet) -> PerfectMatching {
        PerfectMatching { edges }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn into_edge_set(self) -> EdgeSet {
        self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter()
    }

    /// The edge of the matching covering `v`.
    pub fn edge_at(&self, g: &Graph, v: usize) -> usize {
        g.incident(v)
            .iter()
            .copied()
            .find(|&e| self.edges.contains(e))
            .expect("perfect matching covers every vertex")
    }
}

/// A cycle given as its vertex sequence; the closing edge is implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub vertices: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edge indices around the cycle, starting with the edge leaving
    /// `vertices[0]`.
    pub fn edge_indices(&self, g: &Graph) -> Vec<usize> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| {
                g.edge_between(self.vertices[i], self.vertices[(i + 1) % k])
                    .expect("consecutive cycle vertices are adjacent")
            })
            .collect()
    }
}

/// A spanning 2-regular edge set with its cycles in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoFactor {
    pub edges: EdgeSet,
    pub cycles: Vec<Cycle>,
}

impl TwoFactor {
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.cycles.len() == 1
    }

    pub fn all_even(&self) -> bool {
        self.cycles.iter().all(|c| c.len() % 2 == 0)
    }
}

pub fn validate_perfect_matching(g: &Graph, m: &EdgeSet) -> Result<bool> {
    g.check_universe(m)?;
    let mut covered = vec![false; g.order()];
    for e in m.iter() {
        let (x, y) = g.edge(e).endpoints;
        if covered[x] || covered[y] {
            return Ok(false);
        }
        covered[x] = true;
        covered[y] = true;
    }
    Ok(covered.into_iter().all(|c| c))
}

/// Splits a spanning 2-regular edge set into cycles.
///
/// Each cycle starts at its smallest vertex and continues towards the smaller
/// of that vertex's two neighbours; cycles are sorted by
/// `(length, smallest vertex)`.
pub fn cycle_decomposition(g: &Graph, f: &EdgeSet) -> Result<Vec<Cycle>> {
    g.check_universe(f)?;
    let mut nbrs = vec![[usize::MAX; 2]; g.order()];
    for v in 0..g.order() {
        let mut k = 0;
        for &e in g.incident(v) {
            if f.contains(e) {
                if k == 2 {
                    return Err(Error::MalformedFactor {
                        vertex: v,
                        degree: g.degree_in(f, v),
                    });
                }
                nbrs[v][k] = g.edge(e).other(v);
                k += 1;
            }
        }
        if k != 2 {
            return Err(Error::MalformedFactor {
                vertex: v,
                degree: k,
            });
        }
    }
    let mut seen = vec![false; g.order()];
    let mut cycles = Vec::new();
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        let mut vertices = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = nbrs[start][0].min(nbrs[start][1]);
        while cur != start {
            seen[cur] = true;
            vertices.push(cur);
            let next = if nbrs[cur][0] == prev {
                nbrs[cur][1]
            } else {
                nbrs[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cycles.push(Cycle { vertices });
    }
    // Starts are visited in increasing order, so a stable sort by length
    // leaves ties ordered by smallest vertex.
    cycles.sort_by_key(Cycle::len);
    Ok(cycles)
}

/// `E(g) \ m` with its cycle decomposition. In a cubic graph this is always a
/// 2-factor.
pub fn complement_two_factor(g: &Graph, m: &PerfectMatching) -> Result<TwoFactor> {
    g.require_cubic()?;
    g.check_universe(m.edges())?;
    if !validate_perfect_matching(g, m.edges())? {
        return Err(Error::NotPerfectMatching);
    }
    let edges = m.edges().complement();
    let cycles = cycle_decomposition(g, &edges)?;
    Ok(TwoFactor { edges, cycles })
}

/// True iff `m` and `n` are disjoint and `m ∪ n` is a single cycle through
/// every vertex.
pub fn is_hamiltonian_union(g: &Graph, m: &PerfectMatching, n: &PerfectMatching) -> Result<bool> {
    for p in [m, n] {
        if !validate_perfect_matching(g, p.edges())? {
            return Err(Error::NotPerfectMatching);
        }
    }
    if !m.edges().is_disjoint(n.edges()) {
        return Ok(false);
    }
    let cycles = cycle_decomposition(g, &m.edges().union(n.edges()))?;
    Ok(cycles.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn c4() -> Graph {
        fixtures::cycle(4).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_disconnection() {
        let labels = |k| (1..=k).map(VertexLabel::Plain).collect::<Vec<_>>();
        let g = EdgeClass::Generic;
        assert_eq!(Graph::new(labels(2), &[(0, 0, g)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::new(labels(2), &[(0, 1, g), (1, 0, g)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::new(labels(4), &[(0, 1, g), (2, 3, g)]),
            Err(Error::Disconnected)
        );
        assert!(matches!(
            Graph::new(labels(2), &[(0, 2, g)]),
            Err(Error::VertexOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn edge_cap() {
        let n = 4097;
        let labels = (1..=n + 1).map(VertexLabel::Plain).collect();
        let edges: Vec<_> = (0..n).map(|i| (i, i + 1, EdgeClass::Generic)).collect();
        assert_eq!(Graph::new(labels, &edges), Err(Error::TooManyEdges(4097)));
    }

    #[test]
    fn matching_validation_on_cycle() {
        let g = c4();
        assert!(validate_perfect_matching(&g, &g.edge_set([0, 2]).unwrap()).unwrap());
        assert!(!validate_perfect_matching(&g, &g.edge_set([0, 1]).unwrap()).unwrap());
        assert!(!validate_perfect_matching(&g, &g.edge_set([0]).unwrap()).unwrap());
        assert!(matches!(
            validate_perfect_matching(&g, &EdgeSet::new(5)),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn decomposition_rejects_non_factor() {
        let g = fixtures::complete4().unwrap();
        let err = cycle_decomposition(&g, &g.edge_set([0, 1, 2]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::MalformedFactor { .. }));
    }

    #[test]
    fn decomposition_is_canonical() {
        let g = c4();
        let cycles = cycle_decomposition(&g, &EdgeSet::full(4)).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices, [0, 1, 2, 3]);
    }

    #[test]
    fn complement_requires_cubic() {
        let g = c4();
        let m = PerfectMatching::from_edges(&g, [0, 2]).unwrap();
        assert!(matches!(
            complement_two_factor(&g, &m),
            Err(Error::UnsupportedDegree { .. })
        ));
    }

    #[test]
    fn union_with_itself_is_not_hamiltonian() {
        let g = c4();
        let m = PerfectMatching::from_edges(&g, [0, 2]).unwrap();
        let n = PerfectMatching::from_edges(&g, [1, 3]).unwrap();
        assert!(!is_hamiltonian_union(&g, &m, &m).unwrap());
        assert!(is_hamiltonian_union(&g, &m, &n).unwrap());
    }

    #[test]
    fn girth_of_fixtures() {
        assert_eq!(fixtures::complete4().unwrap().girth(), Some(3));
        assert_eq!(fixtures::k33().unwrap().girth(), Some(4));
        assert_eq!(fixtures::petersen().unwrap().girth(), Some(5));
        assert_eq!(c4().girth(), Some(4));
    }
}
