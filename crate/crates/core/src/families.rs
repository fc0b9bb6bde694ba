//! The prism family `P_n` and the crossed-prism family `CP_n`.
//!
//! Vertex `u_i` of either family has index `i - 1`; `v_i` follows the outer
//! vertices. Edges are numbered outer edges first, then inner edges, then
//! spokes, so edge sets are reproducible across runs.
//!
//! `CP_n` is a ring of `2n` C4-poles `T_1 … T_2n`, with
//! `T_j = {u_{2j-1}, u_{2j}, v_{2j-1}, v_{2j}}`. Inside a pole the corners are
//! `z1 = u_{2j-1}` (upper left), `z2 = u_{2j}` (upper right),
//! `z3 = v_{2j}` (lower left) and `z4 = v_{2j-1}` (lower right), and the
//! internal 4-cycle is `z1 z2 z3 z4`. Semiedge `e_k` is the external edge at
//! `z_k`. The right semiedges of `T_j` are joined to the left semiedges of
//! `T_{j+1}`; the principal cut `X = {a, b, c, d}` is the pair of joins
//! `T_n | T_{n+1}` (edges `d`, `c`) and `T_2n | T_1` (edges `a`, `b`).

use alloc::vec::Vec;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{EdgeClass, Graph, PerfectMatching, VertexLabel};

#[derive(Clone, Debug)]
pub struct PrismGraph {
    n: usize,
    graph: Graph,
}

impl PrismGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Vertex index of `u_i`, 1-based `i`.
    pub fn u(&self, i: usize) -> usize {
        i - 1
    }

    pub fn v(&self, i: usize) -> usize {
        self.n + i - 1
    }

    /// Edge `u_i u_{i+1}` (indices mod n).
    pub fn outer_edge(&self, i: usize) -> usize {
        i - 1
    }

    /// Edge `v_i v_{i+1}` (indices mod n).
    pub fn inner_edge(&self, i: usize) -> usize {
        self.n + i - 1
    }

    /// Edge `u_i v_i`.
    pub fn spoke(&self, i: usize) -> usize {
        2 * self.n + i - 1
    }
}

pub fn build_prism(n: usize) -> Result<PrismGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            reason: "prism graphs need n >= 3",
        });
    }
    let mut labels: Vec<_> = (1..=n).map(VertexLabel::Outer).collect();
    labels.extend((1..=n).map(VertexLabel::Inner));
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n, EdgeClass::OuterEdge));
    }
    for i in 0..n {
        edges.push((n + i, n + (i + 1) % n, EdgeClass::InnerEdge));
    }
    for i in 0..n {
        edges.push((i, n + i, EdgeClass::Spoke));
    }
    Ok(PrismGraph {
        n,
        graph: Graph::new(labels, &edges)?,
    })
}

/// One of the four edges of the principal cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutEdge {
    A,
    B,
    C,
    D,
}

impl CutEdge {
    pub const ALL: [CutEdge; 4] = [CutEdge::A, CutEdge::B, CutEdge::C, CutEdge::D];

    pub fn as_char(self) -> char {
        match self {
            CutEdge::A => 'a',
            CutEdge::B => 'b',
            CutEdge::C => 'c',
            CutEdge::D => 'd',
        }
    }
}

/// Edge indices of `a = u1 u_4n`, `b = v2 v_{4n-1}`, `c = v_{2n-1} v_{2n+2}`
/// and `d = u_2n u_{2n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrincipalCut {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl PrincipalCut {
    pub fn edges(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn get(&self, which: CutEdge) -> usize {
        match which {
            CutEdge::A => self.a,
            CutEdge::B => self.b,
            CutEdge::C => self.c,
            CutEdge::D => self.d,
        }
    }

    pub fn which(&self, e: usize) -> Option<CutEdge> {
        CutEdge::ALL.into_iter().find(|&w| self.get(w) == e)
    }
}

/// The `j`-th C4-pole of a crossed prism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C4PoleView {
    pub j: usize,
    /// `z1 … z4`.
    pub vertices: [usize; 4],
    /// `z1z2, z2z3, z3z4, z4z1`.
    pub internal_edges: [usize; 4],
    /// `e1 … e4`: external edges at `z1 … z4`.
    pub semiedges: [usize; 4],
}

impl C4PoleView {
    /// The two parallel edges `u_{2j-1}u_{2j}` and `v_{2j-1}v_{2j}`.
    pub fn parallel_pair(&self) -> [usize; 2] {
        [self.internal_edges[0], self.internal_edges[2]]
    }

    /// The two spokes `u_{2j-1}v_{2j-1}` and `u_{2j}v_{2j}`.
    pub fn spoke_pair(&self) -> [usize; 2] {
        [self.internal_edges[3], self.internal_edges[1]]
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Which semiedges (`e1 … e4`) lie in `set`.
    pub fn semiedges_in(&self, set: &EdgeSet) -> [bool; 4] {
        self.semiedges.map(|e| set.contains(e))
    }
}

/// How a perfect matching covers the four vertices of one pole.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoleCover {
    /// Both spokes of the pole.
    Spokes,
    /// Both parallel edges of the pole.
    Parallel,
    /// One internal edge (`z_k z_{k+1}` given by its position 0..4) and two
    /// semiedges.
    OneInternal(usize),
    /// All four semiedges.
    Semiedges,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainSide {
    /// Poles `T_1 … T_n`.
    Right,
    /// Poles `T_{n+1} … T_2n`.
    Left,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryClass {
    Symmetric,
    Asymmetric,
}

#[derive(Clone, Debug)]
pub struct CrossedPrismGraph {
    n: usize,
    graph: Graph,
    cut: PrincipalCut,
    poles: Vec<C4PoleView>,
}

pub fn build_crossed_prism(n: usize) -> Result<CrossedPrismGraph> {
    if n < 1 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            reason: "crossed prism graphs need n >= 1",
        });
    }
    let len = 4 * n;
    let u = |i: usize| i - 1;
    let v = |i: usize| len + i - 1;
    let mut labels: Vec<_> = (1..=len).map(VertexLabel::Outer).collect();
    labels.extend((1..=len).map(VertexLabel::Inner));

    let mut edges = Vec::with_capacity(12 * n);
    for i in 1..=len {
        edges.push((u(i), u(i % len + 1), EdgeClass::OuterEdge));
    }
    for i in 1..=2 * n {
        edges.push((v(2 * i - 1), v(2 * i), EdgeClass::InnerEdge));
    }
    for i in 1..2 * n {
        edges.push((v(2 * i - 1), v(2 * i + 2), EdgeClass::InnerEdge));
    }
    edges.push((v(len - 1), v(2), EdgeClass::InnerEdge));
    for i in 1..=len {
        edges.push((u(i), v(i), EdgeClass::Spoke));
    }
    let graph = Graph::new(labels, &edges)?;

    let cut = PrincipalCut {
        a: len - 1,
        b: 8 * n - 1,
        c: 6 * n + n - 1,
        d: 2 * n - 1,
    };
    debug_assert_eq!(graph.edge_between(u(1), u(len)), Some(cut.a));
    debug_assert_eq!(graph.edge_between(v(2), v(len - 1)), Some(cut.b));
    debug_assert_eq!(graph.edge_between(v(2 * n - 1), v(2 * n + 2)), Some(cut.c));
    debug_assert_eq!(graph.edge_between(u(2 * n), u(2 * n + 1)), Some(cut.d));

    let poles = (1..=2 * n)
        .map(|j| {
            let z = [u(2 * j - 1), u(2 * j), v(2 * j), v(2 * j - 1)];
            let internal_edges = [0, 1, 2, 3].map(|k| {
                graph
                    .edge_between(z[k], z[(k + 1) % 4])
                    .expect("pole corners form a 4-cycle")
            });
            let semiedges = z.map(|x| {
                graph
                    .incident(x)
                    .iter()
                    .copied()
                    .find(|e| !internal_edges.contains(e))
                    .expect("every pole corner has one external edge")
            });
            C4PoleView {
                j,
                vertices: z,
                internal_edges,
                semiedges,
            }
        })
        .collect();

    let cp = CrossedPrismGraph {
        n,
        graph,
        cut,
        poles,
    };
    let inner = cp.edges_of_class(EdgeClass::InnerEdge);
    debug_assert!(crate::graph::cycle_decomposition(&cp.graph, &inner.union(&cp.edges_of_class(EdgeClass::OuterEdge)))
        .map(|c| c.len() == 2 && c[0].len() == len && c[1].len() == len)
        .unwrap_or(false));
    Ok(cp)
}

impl CrossedPrismGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cut(&self) -> &PrincipalCut {
        &self.cut
    }

    pub fn cut_set(&self) -> EdgeSet {
        EdgeSet::from_edges(self.graph.size(), self.cut.edges()).expect("cut edges are in range")
    }

    pub fn pole_count(&self) -> usize {
        2 * self.n
    }

    pub fn u(&self, i: usize) -> usize {
        i - 1
    }

    pub fn v(&self, i: usize) -> usize {
        4 * self.n + i - 1
    }

    pub fn edges_of_class(&self, class: EdgeClass) -> EdgeSet {
        let g = &self.graph;
        let mut set = g.empty_set();
        for (k, e) in g.edges().iter().enumerate() {
            if e.class == class {
                set.insert(k);
            }
        }
        set
    }

    pub fn pole(&self, j: usize) -> Result<&C4PoleView> {
        if j == 0 || j > 2 * self.n {
            return Err(Error::InvalidParameter {
                name: "j",
                value: j as i64,
                reason: "pole index must lie in 1..=2n",
            });
        }
        Ok(&self.poles[j - 1])
    }

    pub fn poles(&self) -> &[C4PoleView] {
        &self.poles
    }

    /// Index `j` of the pole containing vertex `x`.
    pub fn pole_of_vertex(&self, x: usize) -> usize {
        (x % (4 * self.n)) / 2 + 1
    }

    pub fn side_of_pole(&self, j: usize) -> ChainSide {
        if j <= self.n {
            ChainSide::Right
        } else {
            ChainSide::Left
        }
    }

    /// Every edge joining two distinct poles.
    pub fn external_edges(&self) -> EdgeSet {
        let mut set = self.graph.empty_set();
        for p in &self.poles {
            for e in p.semiedges {
                set.insert(e);
            }
        }
        set
    }

    pub fn cut_members(&self, m: &EdgeSet) -> Vec<CutEdge> {
        CutEdge::ALL
            .into_iter()
            .filter(|&w| m.contains(self.cut.get(w)))
            .collect()
    }

    /// `|m ∩ X|`.
    pub fn cut_size(&self, m: &EdgeSet) -> usize {
        self.cut.edges().iter().filter(|&&e| m.contains(e)).count()
    }

    /// `|m ∩ δT_j|`.
    pub fn semiedge_count(&self, m: &EdgeSet, j: usize) -> Result<usize> {
        Ok(self
            .pole(j)?
            .semiedges_in(m)
            .iter()
            .filter(|&&b| b)
            .count())
    }

    pub fn pole_cover(&self, m: &PerfectMatching, j: usize) -> Result<PoleCover> {
        let pole = self.pole(j)?;
        let hits: Vec<usize> = (0..4)
            .filter(|&k| m.contains(pole.internal_edges[k]))
            .collect();
        Ok(match hits.as_slice() {
            [] => PoleCover::Semiedges,
            [k] => PoleCover::OneInternal(*k),
            [0, 2] => PoleCover::Parallel,
            [1, 3] => PoleCover::Spokes,
            _ => return Err(Error::NotPerfectMatching),
        })
    }

    /// The perfect matching with `|M ∩ X| = 4`: every pole-joining edge.
    pub fn all_cut_matching(&self) -> PerfectMatching {
        PerfectMatching::new_unchecked(self.external_edges())
    }

    /// Starting poles `j` of the 2-chains `(T_j, T_{j+1})` on `side`.
    pub fn two_chains(&self, side: ChainSide) -> Vec<usize> {
        let offset = match side {
            ChainSide::Right => 0,
            ChainSide::Left => self.n,
        };
        (0..self.n / 2).map(|k| offset + 2 * k + 1).collect()
    }

    /// The automorphism exchanging the outer and inner cycles, as a vertex
    /// permutation. It sends pole `T_p` to `T_{2n+1-p}` corner by corner
    /// (`u` and `v` swapped) and exchanges `a ↔ b` and `c ↔ d`.
    pub fn outer_inner_swap(&self) -> Vec<usize> {
        let len = 4 * self.n;
        let mut perm = alloc::vec![0; 2 * len];
        for p in 1..=2 * self.n {
            let q = 2 * self.n + 1 - p;
            for (src, dst) in [(2 * p - 1, 2 * q - 1), (2 * p, 2 * q)] {
                perm[self.u(src)] = self.v(dst);
                perm[self.v(src)] = self.u(dst);
            }
        }
        perm
    }
}

/// Symmetry class of the 2-chain `(T_j, T_{j+1})` with respect to `m`.
///
/// Requires `m ∩ X = ∅`, so that every pole is covered by its spokes or by
/// its parallel edges; the chain is symmetric iff both poles are covered the
/// same way.
pub fn classify_two_chain(
    cp: &CrossedPrismGraph,
    m: &PerfectMatching,
    j: usize,
) -> Result<SymmetryClass> {
    let n = cp.n();
    if n < 2 {
        return Err(Error::UnsupportedParameter {
            name: "n",
            value: n as i64,
            reason: "2-chains need n >= 2",
        });
    }
    if j % 2 == 0 || j == n || j + 1 > 2 * n {
        return Err(Error::InvalidParameter {
            name: "j",
            value: j as i64,
            reason: "a 2-chain starts at an odd pole and stays on one side of the cut",
        });
    }
    if cp.cut_size(m.edges()) != 0 {
        return Err(Error::UndefinedClassification);
    }
    let first = cp.pole_cover(m, j)?;
    let second = cp.pole_cover(m, j + 1)?;
    match (first, second) {
        (PoleCover::Spokes, PoleCover::Spokes) | (PoleCover::Parallel, PoleCover::Parallel) => {
            Ok(SymmetryClass::Symmetric)
        }
        (PoleCover::Spokes | PoleCover::Parallel, PoleCover::Spokes | PoleCover::Parallel) => {
            Ok(SymmetryClass::Asymmetric)
        }
        // Unreachable for a perfect matching avoiding X, by cut parity.
        _ => Err(Error::UndefinedClassification),
    }
}

/// Product of `±1` over the 2-chains of one side: `-1` iff the side has an
/// odd number of asymmetric 2-chains.
pub fn phi_product(cp: &CrossedPrismGraph, m: &PerfectMatching, side: ChainSide) -> Result<i8> {
    if cp.n() % 2 != 0 {
        return Err(Error::UnsupportedParameter {
            name: "n",
            value: cp.n() as i64,
            reason: "2-chain products are defined for even n",
        });
    }
    let mut phi = 1i8;
    for j in cp.two_chains(side) {
        if classify_two_chain(cp, m, j)? == SymmetryClass::Asymmetric {
            phi = -phi;
        }
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_decomposition;

    fn label_pair(g: &Graph, e: usize) -> (VertexLabel, VertexLabel) {
        g.edge_labels(e)
    }

    #[test]
    fn prism_sizes() {
        for (n, order, size) in [(3, 6, 9), (4, 8, 12), (8, 16, 24)] {
            let p = build_prism(n).unwrap();
            assert_eq!((p.graph().order(), p.graph().size()), (order, size));
            assert!(p.graph().is_cubic());
        }
        assert!(matches!(build_prism(2), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn prism_without_spokes_is_two_n_cycles() {
        for n in 3..=9 {
            let p = build_prism(n).unwrap();
            let g = p.graph();
            let spokes = g.edge_set((1..=n).map(|i| p.spoke(i))).unwrap();
            let cycles = cycle_decomposition(g, &spokes.complement()).unwrap();
            assert_eq!(cycles.iter().map(|c| c.len()).collect::<Vec<_>>(), [n, n]);
        }
    }

    #[test]
    fn crossed_prism_sizes() {
        for n in 1..=5 {
            let cp = build_crossed_prism(n).unwrap();
            assert_eq!(cp.graph().order(), 8 * n);
            assert_eq!(cp.graph().size(), 12 * n);
            assert!(cp.graph().is_cubic());
        }
        assert!(matches!(
            build_crossed_prism(0),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn crossed_prism_inner_edges_form_one_cycle() {
        for n in 1..=5 {
            let cp = build_crossed_prism(n).unwrap();
            let g = cp.graph();
            let spokes = cp.edges_of_class(EdgeClass::Spoke);
            let lens: Vec<_> = cycle_decomposition(g, &spokes.complement())
                .unwrap()
                .iter()
                .map(|c| c.len())
                .collect();
            assert_eq!(lens, [4 * n, 4 * n]);
        }
    }

    #[test]
    fn cut_edges_at_n2() {
        let cp = build_crossed_prism(2).unwrap();
        let g = cp.graph();
        let c = cp.cut();
        use VertexLabel::{Inner as V, Outer as U};
        assert_eq!(label_pair(g, c.a), (U(1), U(8)));
        assert_eq!(label_pair(g, c.b), (V(2), V(7)));
        assert_eq!(label_pair(g, c.c), (V(3), V(6)));
        assert_eq!(label_pair(g, c.d), (U(4), U(5)));
    }

    #[test]
    fn pole_views_at_n2() {
        use VertexLabel::{Inner as V, Outer as U};
        let cp = build_crossed_prism(2).unwrap();
        let g = cp.graph();
        let t1 = cp.pole(1).unwrap();
        assert_eq!(t1.vertices.map(|x| g.label(x)), [U(1), U(2), V(2), V(1)]);
        let semis: Vec<_> = t1.semiedges.iter().map(|&e| label_pair(g, e)).collect();
        assert_eq!(semis, [(U(1), U(8)), (U(2), U(3)), (V(2), V(7)), (V(1), V(4))]);
        let t3 = cp.pole(3).unwrap();
        let mut vs: Vec<_> = t3.vertices.map(|x| g.label(x)).to_vec();
        vs.sort();
        assert_eq!(vs, [U(5), U(6), V(5), V(6)]);
        assert!(cp.pole(0).is_err());
        assert!(cp.pole(5).is_err());
        // Left semiedges of T_1 are exactly a and b.
        assert_eq!([t1.semiedges[0], t1.semiedges[2]], [cp.cut().a, cp.cut().b]);
    }

    #[test]
    fn pole_boundaries_are_cuts() {
        for n in 1..=4 {
            let cp = build_crossed_prism(n).unwrap();
            let g = cp.graph();
            for p in cp.poles() {
                for (k, &e) in p.semiedges.iter().enumerate() {
                    let (x, y) = g.edge(e).endpoints;
                    assert!(p.contains_vertex(x) != p.contains_vertex(y));
                    assert!(g.edge(e).touches(p.vertices[k]));
                }
                // The right semiedges of T_j are the left semiedges of T_{j+1}.
                let next = cp.pole(p.j % (2 * n) + 1).unwrap();
                assert_eq!(p.semiedges[1], next.semiedges[0]);
                assert_eq!(p.semiedges[3], next.semiedges[2]);
            }
        }
    }

    #[test]
    fn outer_inner_swap_is_an_automorphism() {
        for n in 1..=5 {
            let cp = build_crossed_prism(n).unwrap();
            let perm = cp.outer_inner_swap();
            assert!(cp.graph().is_automorphism(&perm));
            let g = cp.graph();
            let c = cp.cut();
            let image = |e| g.map_edges(&perm, &g.edge_set([e]).unwrap()).unwrap();
            assert_eq!(image(c.a), g.edge_set([c.b]).unwrap());
            assert_eq!(image(c.d), g.edge_set([c.c]).unwrap());
        }
    }

    #[test]
    fn two_chain_starts() {
        let cp = build_crossed_prism(4).unwrap();
        assert_eq!(cp.two_chains(ChainSide::Right), [1, 3]);
        assert_eq!(cp.two_chains(ChainSide::Left), [5, 7]);
    }

    fn cut0_matching(cp: &CrossedPrismGraph, spokes: &[bool]) -> PerfectMatching {
        let mut edges = Vec::new();
        for (p, &s) in cp.poles().iter().zip(spokes) {
            edges.extend(if s { p.spoke_pair() } else { p.parallel_pair() });
        }
        PerfectMatching::from_edges(cp.graph(), edges).unwrap()
    }

    #[test]
    fn classification_and_phi() {
        let cp = build_crossed_prism(4).unwrap();
        let all_spokes = cut0_matching(&cp, &[true; 8]);
        for j in [1, 3, 5, 7] {
            assert_eq!(classify_two_chain(&cp, &all_spokes, j).unwrap(), SymmetryClass::Symmetric);
        }
        assert_eq!(phi_product(&cp, &all_spokes, ChainSide::Right).unwrap(), 1);

        let all_parallel = cut0_matching(&cp, &[false; 8]);
        assert_eq!(classify_two_chain(&cp, &all_parallel, 1).unwrap(), SymmetryClass::Symmetric);

        let one_asym = cut0_matching(&cp, &[true, false, true, true, true, true, true, true]);
        assert_eq!(classify_two_chain(&cp, &one_asym, 1).unwrap(), SymmetryClass::Asymmetric);
        assert_eq!(phi_product(&cp, &one_asym, ChainSide::Right).unwrap(), -1);
        assert_eq!(phi_product(&cp, &one_asym, ChainSide::Left).unwrap(), 1);

        let two_asym = cut0_matching(&cp, &[true, false, false, true, true, true, true, true]);
        assert_eq!(phi_product(&cp, &two_asym, ChainSide::Right).unwrap(), 1);
    }

    #[test]
    fn classification_errors() {
        let cp = build_crossed_prism(2).unwrap();
        let all_cut = cp.all_cut_matching();
        assert_eq!(classify_two_chain(&cp, &all_cut, 1), Err(Error::UndefinedClassification));
        let m = cut0_matching(&cp, &[true; 4]);
        assert!(matches!(classify_two_chain(&cp, &m, 2), Err(Error::InvalidParameter { .. })));
        assert!(matches!(classify_two_chain(&cp, &m, 5), Err(Error::InvalidParameter { .. })));

        let cp1 = build_crossed_prism(1).unwrap();
        let m1 = cut0_matching(&cp1, &[true; 2]);
        assert!(matches!(classify_two_chain(&cp1, &m1, 1), Err(Error::UnsupportedParameter { .. })));

        let cp3 = build_crossed_prism(3).unwrap();
        let m3 = cut0_matching(&cp3, &[true; 6]);
        assert!(matches!(phi_product(&cp3, &m3, ChainSide::Right), Err(Error::UnsupportedParameter { .. })));
        // T_3 | T_4 straddles the cut when n = 3.
        assert!(matches!(classify_two_chain(&cp3, &m3, 3), Err(Error::InvalidParameter { .. })));
        assert_eq!(classify_two_chain(&cp3, &m3, 5).unwrap(), SymmetryClass::Symmetric);
    }

    #[test]
    fn classification_is_invariant_under_swap() {
        let cp = build_crossed_prism(4).unwrap();
        let g = cp.graph();
        let perm = cp.outer_inner_swap();
        for mask in 0u32..256 {
            let pattern: Vec<bool> = (0..8).map(|k| mask >> k & 1 == 1).collect();
            let m = cut0_matching(&cp, &pattern);
            let image = PerfectMatching::new(g, g.map_edges(&perm, m.edges()).unwrap()).unwrap();
            for j in [1, 3, 5, 7] {
                assert_eq!(
                    classify_two_chain(&cp, &m, j).unwrap(),
                    classify_two_chain(&cp, &image, 2 * cp.n() - j).unwrap()
                );
            }
        }
    }
}
