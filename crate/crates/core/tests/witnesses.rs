mod common;

use common::*;
use pmh_core::constructive::{
    consecutive_spokes, expected_consecutive_spokes, witness_crossed_prism_odd, witness_obstruction,
    witness_prism,
};
use pmh_core::engine::{check_pmh, find_extension};
use pmh_core::families::{build_crossed_prism, build_prism};
use pmh_core::{complement_two_factor, PerfectMatching, VertexLabel};

#[test]
fn prism_witnesses_do_not_extend() {
    for n in [6, 8, 10, 12] {
        let p = build_prism(n).unwrap();
        let g = p.graph();
        let w = witness_prism(&p).unwrap();
        assert_eq!(find_extension(g, &w).unwrap(), None, "P_{n}");
        assert!(!oracle_extends(g, &as_vec(&w)), "P_{n}");
        assert_eq!(Some(consecutive_spokes(&p, &w)), expected_consecutive_spokes(n));
    }
}

#[test]
fn prism_witness_index_rule() {
    for n in (6..=20).step_by(2) {
        let p = build_prism(n).unwrap();
        let w = witness_prism(&p).unwrap();
        let pairs = (n - 1) / 3;
        for i in 1..=n {
            let starts_pair = i % 3 == 0 && i / 3 <= pairs;
            let ends_pair = i % 3 == 1 && i > 1 && (i - 1) / 3 <= pairs;
            assert_eq!(w.contains(p.spoke(i)), !(starts_pair || ends_pair), "P_{n} i={i}");
            assert_eq!(w.contains(p.outer_edge(i)), starts_pair, "P_{n} i={i}");
            assert_eq!(w.contains(p.inner_edge(i)), starts_pair, "P_{n} i={i}");
        }
        assert!(find_extension(p.graph(), &w).unwrap().is_none(), "P_{n}");
    }
}

#[test]
fn odd_prisms_have_an_odd_two_factor() {
    for n in [3, 5, 7] {
        let p = build_prism(n).unwrap();
        let g = p.graph();
        let spokes = PerfectMatching::from_edges(g, (1..=n).map(|i| p.spoke(i))).unwrap();
        let f = complement_two_factor(g, &spokes).unwrap();
        assert_eq!(f.lengths(), [n, n]);
        assert!(!f.all_even());
        assert!(!check_pmh(g).unwrap().is_pmh, "P_{n}");
    }
}

/// Spokes on the complement cycle through indices `≡ 0, 1 (mod 4)`, outer and
/// inner edges on the one through `≡ 2, 3`.
fn mixed_extension(n: usize) -> Vec<(VertexLabel, VertexLabel)> {
    let mut out = Vec::new();
    for i in 1..=4 * n {
        if i % 4 == 0 || i % 4 == 1 {
            out.push((U(i), V(i)));
        }
    }
    for k in 0..n {
        out.push((U(4 * k + 2), U(4 * k + 3)));
        let far = if k + 1 == n { 2 } else { 4 * k + 6 };
        out.push((V(4 * k + 3), V(far)));
    }
    out
}

#[test]
fn parallel_pair_matching_census() {
    for n in [1, 3, 5, 7] {
        let cp = build_crossed_prism(n).unwrap();
        let g = cp.graph();
        let w = witness_crossed_prism_odd(&cp).unwrap();
        let mut factors = witness_obstruction(&cp, &w).unwrap();
        factors.sort();
        let mut want = vec![vec![4; 2 * n], vec![4 * n, 4 * n], vec![8 * n], vec![8 * n]];
        want.sort();
        assert_eq!(factors, want, "CP_{n}");

        let n_edges = labelled(g, &mixed_extension(n));
        assert!(n_edges.edges().is_disjoint(w.edges()));
        let union: Vec<usize> = w.iter().chain(n_edges.iter()).collect();
        assert!(oracle_hamiltonian(g.order(), &endpoints(g), &union), "CP_{n}");
        assert!(find_extension(g, &w).unwrap().is_some(), "CP_{n}");
    }
}

#[test]
fn small_odd_crossed_prisms_are_pmh() {
    for n in [1, 3] {
        let cp = build_crossed_prism(n).unwrap();
        let g = cp.graph();
        let v = check_pmh(g).unwrap();
        let all = all_matchings(g);
        assert_eq!(v.stats.matchings, all.len() as u64);
        assert!(all.iter().all(|m| oracle_extends(g, m)), "CP_{n}");
        assert!(v.is_pmh, "CP_{n}");
        assert_eq!(v.witness, None);
    }
}

#[test]
fn crossed_prism_matching_counts() {
    for n in 1..=4 {
        let g = build_crossed_prism(n).unwrap().graph().clone();
        assert_eq!(all_matchings(&g).len(), (1usize << (2 * n + 1)) + 1, "CP_{n}");
    }
}

#[test]
fn parallel_pair_matching_needs_odd_n() {
    assert!(witness_crossed_prism_odd(&build_crossed_prism(2).unwrap()).is_err());
    assert!(witness_prism(&build_prism(4).unwrap()).is_err());
}
