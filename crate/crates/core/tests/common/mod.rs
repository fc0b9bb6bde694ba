//! Reference implementations that share no code with the library: graphs are
//! rebuilt from their vertex-label definitions and every search is a plain
//! bitmask recursion.
#![allow(dead_code)]

use pmh_core::{Graph, PerfectMatching, VertexLabel};

pub use VertexLabel::{Inner as V, Outer as U};

pub fn prism_definition(n: usize) -> Vec<(VertexLabel, VertexLabel)> {
    let next = |i: usize| i % n + 1;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push((U(i), U(next(i))));
        out.push((V(i), V(next(i))));
        out.push((U(i), V(i)));
    }
    out
}

pub fn crossed_prism_definition(n: usize) -> Vec<(VertexLabel, VertexLabel)> {
    let mut out = Vec::new();
    for i in 1..=4 * n {
        out.push((U(i), U(i % (4 * n) + 1)));
        out.push((U(i), V(i)));
    }
    for i in 1..=2 * n {
        out.push((V(2 * i - 1), V(2 * i)));
    }
    for i in 1..2 * n {
        out.push((V(2 * i - 1), V(2 * i + 2)));
    }
    out.push((V(4 * n - 1), V(2)));
    out
}

/// Library edge indices of a label-pair list; panics on a missing edge.
pub fn edge_indices(g: &Graph, pairs: &[(VertexLabel, VertexLabel)]) -> Vec<usize> {
    pairs
        .iter()
        .map(|&(x, y)| {
            g.edge_by_labels(x, y)
                .unwrap_or_else(|| panic!("missing edge {x}{y}"))
        })
        .collect()
}

pub fn endpoints(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().iter().map(|e| e.endpoints).collect()
}

/// Every perfect matching of the edge list, as sorted edge-index lists.
pub fn oracle_matchings(order: usize, edges: &[(usize, usize)], allowed: &[bool]) -> Vec<Vec<usize>> {
    assert!(order <= 64);
    fn rec(
        order: usize,
        edges: &[(usize, usize)],
        allowed: &[bool],
        covered: u64,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let full = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
        if covered == full {
            let mut m = chosen.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        let v = (!covered).trailing_zeros() as usize;
        for (e, &(x, y)) in edges.iter().enumerate() {
            if !allowed[e] || (x != v && y != v) {
                continue;
            }
            let w = if x == v { y } else { x };
            if covered >> w & 1 == 1 {
                continue;
            }
            chosen.push(e);
            rec(order, edges, allowed, covered | 1 << v | 1 << w, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    rec(order, edges, allowed, 0, &mut Vec::new(), &mut out);
    out
}

pub fn all_matchings(g: &Graph) -> Vec<Vec<usize>> {
    oracle_matchings(g.order(), &endpoints(g), &vec![true; g.size()])
}

/// The edges form one cycle through every vertex.
pub fn oracle_hamiltonian(order: usize, edges: &[(usize, usize)], chosen: &[usize]) -> bool {
    if chosen.len() != order {
        return false;
    }
    let mut adj = vec![Vec::new(); order];
    for &e in chosen {
        let (x, y) = edges[e];
        adj[x].push(y);
        adj[y].push(x);
    }
    if adj.iter().any(|a| a.len() != 2) {
        return false;
    }
    let (mut prev, mut cur, mut steps) = (0, adj[0][0], 1);
    while cur != 0 {
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
        steps += 1;
    }
    steps == order
}

/// Whether some perfect matching avoiding `m` closes it into a Hamiltonian
/// cycle, by listing every matching of `E \ m`.
pub fn oracle_extends(g: &Graph, m: &[usize]) -> bool {
    let edges = endpoints(g);
    let mut allowed = vec![true; g.size()];
    for &e in m {
        allowed[e] = false;
    }
    oracle_matchings(g.order(), &edges, &allowed).into_iter().any(|n| {
        let union: Vec<usize> = m.iter().chain(&n).copied().collect();
        oracle_hamiltonian(g.order(), &edges, &union)
    })
}

pub fn as_vec(m: &PerfectMatching) -> Vec<usize> {
    m.iter().collect()
}

pub fn matching(g: &Graph, edges: &[usize]) -> PerfectMatching {
    PerfectMatching::from_edges(g, edges.iter().copied()).unwrap()
}

pub fn labelled(g: &Graph, pairs: &[(VertexLabel, VertexLabel)]) -> PerfectMatching {
    matching(g, &edge_indices(g, pairs))
}
