mod common;

use std::collections::BTreeSet;

use common::*;
use pmh_core::families::{build_crossed_prism, CrossedPrismGraph, CutEdge};
use pmh_core::VertexLabel;

type Pair = (VertexLabel, VertexLabel);

fn cut_by_labels(n: usize) -> [Pair; 4] {
    [
        (U(1), U(4 * n)),
        (V(2), V(4 * n - 1)),
        (V(2 * n - 1), V(2 * n + 2)),
        (U(2 * n), U(2 * n + 1)),
    ]
}

/// Left and right semiedges of `T_j`, written out from the edge definition.
fn sides_by_labels(n: usize, j: usize) -> ([Pair; 2], [Pair; 2]) {
    let wrap = |i: usize| (i + 4 * n - 1) % (4 * n) + 1;
    let left_inner = if j == 1 {
        (V(2), V(4 * n - 1))
    } else {
        (V(2 * j - 3), V(2 * j))
    };
    let right_inner = if j == 2 * n {
        (V(4 * n - 1), V(2))
    } else {
        (V(2 * j - 1), V(2 * j + 2))
    };
    (
        [(U(wrap(2 * j - 2)), U(2 * j - 1)), left_inner],
        [(U(2 * j), U(wrap(2 * j + 1))), right_inner],
    )
}

fn pole_boundary(cp: &CrossedPrismGraph, j: usize) -> BTreeSet<usize> {
    let g = cp.graph();
    let inside: BTreeSet<usize> = [U(2 * j - 1), U(2 * j), V(2 * j - 1), V(2 * j)]
        .iter()
        .map(|&l| g.vertex(l).unwrap())
        .collect();
    endpoints(g)
        .iter()
        .enumerate()
        .filter(|(_, (x, y))| inside.contains(x) != inside.contains(y))
        .map(|(e, _)| e)
        .collect()
}

#[test]
fn boundaries_match_label_formulas() {
    for n in 1..=4 {
        let cp = build_crossed_prism(n).unwrap();
        let g = cp.graph();
        let cut = edge_indices(g, &cut_by_labels(n));
        assert_eq!(cp.cut().edges().to_vec(), cut, "CP_{n}");
        for j in 1..=2 * n {
            let pole = cp.pole(j).unwrap();
            let boundary = pole_boundary(&cp, j);
            assert_eq!(boundary.len(), 4);
            let semis: BTreeSet<usize> = pole.semiedges.iter().copied().collect();
            assert_eq!(semis, boundary, "CP_{n} T_{j}");
            let (left, right) = sides_by_labels(n, j);
            let e = pole.semiedges;
            assert_eq!(edge_indices(g, &left), [e[0], e[2]], "left of T_{j}");
            assert_eq!(edge_indices(g, &right), [e[1], e[3]], "right of T_{j}");
        }
    }
}

struct Tally {
    by_cut: [u64; 5],
    cut2_pairs: BTreeSet<String>,
    violations: u64,
}

fn tally(n: usize) -> Tally {
    let cp = build_crossed_prism(n).unwrap();
    let g = cp.graph();
    let cut: Vec<usize> = edge_indices(g, &cut_by_labels(n));
    let boundaries: Vec<BTreeSet<usize>> = (1..=2 * n).map(|j| pole_boundary(&cp, j)).collect();
    let sides: Vec<_> = (1..=2 * n)
        .map(|j| {
            let (l, r) = sides_by_labels(n, j);
            (edge_indices(g, &l), edge_indices(g, &r))
        })
        .collect();
    let mut t = Tally {
        by_cut: [0; 5],
        cut2_pairs: BTreeSet::new(),
        violations: 0,
    };
    for m in all_matchings(g) {
        let k = cut.iter().filter(|e| m.binary_search(e).is_ok()).count();
        t.by_cut[k] += 1;
        for b in &boundaries {
            if b.iter().filter(|e| m.binary_search(e).is_ok()).count() != k {
                t.violations += 1;
            }
        }
        let pm = matching(g, &m);
        assert_eq!(cp.cut_size(pm.edges()), k);
        if k == 2 {
            let names: String = cp.cut_members(pm.edges()).iter().map(|c| c.as_char()).collect();
            t.cut2_pairs.insert(names);
            for (l, r) in &sides {
                let left = l.iter().filter(|e| m.binary_search(e).is_ok()).count();
                let right = r.iter().filter(|e| m.binary_search(e).is_ok()).count();
                if (left, right) != (1, 1) {
                    t.violations += 1;
                }
            }
        }
    }
    t
}

#[test]
fn cut_parity_holds_for_every_matching() {
    for n in 1..=3 {
        let t = tally(n);
        assert_eq!(t.violations, 0, "CP_{n}");
        assert_eq!(t.by_cut[1] + t.by_cut[3], 0, "CP_{n}");
        assert_eq!(t.by_cut[4], 1, "the all-cut matching is unique in CP_{n}");
        let allowed: BTreeSet<String> = ["ad", "ac", "bc", "bd"].map(String::from).into();
        // Stored in cut order a, b, c, d.
        let found: BTreeSet<String> = t
            .cut2_pairs
            .iter()
            .map(|s| {
                let mut c: Vec<char> = s.chars().collect();
                c.sort();
                c.into_iter().collect()
            })
            .collect();
        assert!(found.is_subset(&allowed), "CP_{n}: {found:?}");
        assert_eq!(found, allowed, "every admissible pair occurs in CP_{n}");
    }
}

#[test]
fn semiedge_pairs_never_on_one_side() {
    for n in 1..=3 {
        let cp = build_crossed_prism(n).unwrap();
        for m in pmh_core::engine::enumerate_perfect_matchings(cp.graph()).unwrap() {
            if cp.cut_size(m.edges()) != 2 {
                continue;
            }
            for pole in cp.poles() {
                let s = pole.semiedges_in(m.edges());
                let pair: Vec<usize> = (0..4).filter(|&k| s[k]).map(|k| k + 1).collect();
                assert!(
                    [[1, 2], [3, 4], [1, 4], [2, 3]].iter().any(|p| p[..] == pair[..]),
                    "CP_{n} T_{}: {pair:?}",
                    pole.j
                );
            }
        }
    }
}

#[test]
fn all_cut_matching_is_the_four_cut_case() {
    for n in 1..=3 {
        let cp = build_crossed_prism(n).unwrap();
        let m = cp.all_cut_matching();
        assert_eq!(cp.cut_size(m.edges()), 4);
        assert_eq!(cp.cut_members(m.edges()), CutEdge::ALL.to_vec());
        assert!(pmh_core::validate_perfect_matching(cp.graph(), m.edges()).unwrap());
    }
}
