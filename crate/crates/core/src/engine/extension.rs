use alloc::vec;
use alloc::vec::Vec;

use super::enumerate::{first_branches, PerfectMatchings};
use crate::error::{Error, Result};
use crate::graph::{complement_two_factor, cycle_decomposition, Graph, PerfectMatching, TwoFactor};

/// Cooperative cancellation for long searches. `examined` counts the
/// matchings processed so far by the caller's search.
pub trait Interrupt {
    fn should_stop(&self, examined: u64) -> bool;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NoInterrupt;

impl Interrupt for NoInterrupt {
    fn should_stop(&self, _examined: u64) -> bool {
        false
    }
}

impl<F: Fn(u64) -> bool> Interrupt for F {
    fn should_stop(&self, examined: u64) -> bool {
        self(examined)
    }
}

/// The two alternating perfect matchings of each even cycle.
fn alternations(g: &Graph, factor: &TwoFactor) -> Option<Vec<[Vec<(usize, usize, usize)>; 2]>> {
    let mut out = Vec::with_capacity(factor.cycles.len());
    for cycle in &factor.cycles {
        if cycle.len() % 2 != 0 {
            return None;
        }
        let k = cycle.len();
        let mut classes = [Vec::new(), Vec::new()];
        for i in 0..k {
            let (x, y) = (cycle.vertices[i], cycle.vertices[(i + 1) % k]);
            let e = g.edge_between(x, y).expect("cycle edges exist");
            classes[i % 2].push((e, x, y));
        }
        out.push(classes);
    }
    Some(out)
}

/// Path bookkeeping for `M ∪ N` while `N` is built edge by edge: `end[x]` is
/// the other end of the path with endpoint `x`.
struct Paths {
    end: Vec<usize>,
    added: usize,
    target: usize,
}

impl Paths {
    fn new(g: &Graph, m: &PerfectMatching) -> Paths {
        let mut end = vec![0; g.order()];
        for e in m.iter() {
            let (x, y) = g.edge(e).endpoints;
            end[x] = y;
            end[y] = x;
        }
        Paths {
            end,
            added: 0,
            target: g.order() / 2,
        }
    }

    /// Adds edge `xy`; fails if it would close a cycle that is not the final,
    /// spanning one. On success returns the undo record.
    fn join(&mut self, x: usize, y: usize) -> Option<(usize, usize)> {
        if self.end[x] == y {
            if self.added + 1 == self.target {
                self.added += 1;
                return Some((usize::MAX, usize::MAX));
            }
            return None;
        }
        let (a, b) = (self.end[x], self.end[y]);
        self.end[a] = b;
        self.end[b] = a;
        self.added += 1;
        Some((a, b))
    }

    fn undo(&mut self, x: usize, y: usize, record: (usize, usize)) {
        self.added -= 1;
        if record.0 != usize::MAX {
            self.end[record.0] = x;
            self.end[record.1] = y;
        }
    }
}

fn search(
    alts: &[[Vec<(usize, usize, usize)>; 2]],
    depth: usize,
    paths: &mut Paths,
    chosen: &mut Vec<u8>,
) -> bool {
    if depth == alts.len() {
        return true;
    }
    for option in 0..2u8 {
        let class = &alts[depth][option as usize];
        let mut undo = Vec::with_capacity(class.len());
        let mut ok = true;
        for &(_, x, y) in class {
            match paths.join(x, y) {
                Some(r) => undo.push((x, y, r)),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            chosen.push(option);
            if search(alts, depth + 1, paths, chosen) {
                return true;
            }
            chosen.pop();
        }
        for (x, y, r) in undo.into_iter().rev() {
            paths.undo(x, y, r);
        }
    }
    false
}

/// A perfect matching `N` disjoint from `m` with `m ∪ N` Hamiltonian, if one
/// exists.
///
/// In a cubic graph `N` must lie in the complement 2-factor of `m`, and must
/// alternate along each of its cycles, so the search picks one of the two
/// alternations per cycle and prunes as soon as a short cycle closes.
pub fn find_extension(g: &Graph, m: &PerfectMatching) -> Result<Option<PerfectMatching>> {
    let factor = complement_two_factor(g, m)?;
    let Some(alts) = alternations(g, &factor) else {
        return Ok(None);
    };
    let mut paths = Paths::new(g, m);
    let mut chosen = Vec::with_capacity(alts.len());
    if g.order() == 0 || !search(&alts, 0, &mut paths, &mut chosen) {
        return Ok(None);
    }
    let mut n = g.empty_set();
    for (cycle, &option) in alts.iter().zip(&chosen) {
        for &(e, _, _) in &cycle[option as usize] {
            n.insert(e);
        }
    }
    Ok(Some(PerfectMatching::new_unchecked(n)))
}

/// Every 2-factor of a cubic graph that contains `m`, i.e. `m ∪ N` for each
/// perfect matching `N` inside the complement of `m`.
pub fn two_factors_containing(g: &Graph, m: &PerfectMatching) -> Result<Vec<TwoFactor>> {
    let factor = complement_two_factor(g, m)?;
    let Some(alts) = alternations(g, &factor) else {
        return Ok(Vec::new());
    };
    if alts.len() > 20 {
        return Err(Error::UnsupportedParameter {
            name: "cycles",
            value: alts.len() as i64,
            reason: "too many complement cycles to list every 2-factor",
        });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << alts.len()) {
        let mut edges = m.edges().clone();
        for (k, cycle) in alts.iter().enumerate() {
            for &(e, _, _) in &cycle[(mask >> k & 1) as usize] {
                edges.insert(e);
            }
        }
        let cycles = cycle_decomposition(g, &edges)?;
        out.push(TwoFactor { edges, cycles });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PmhStats {
    /// Perfect matchings examined.
    pub matchings: u64,
    /// Of those, how many have no extension.
    pub non_extendable: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmhVerdict {
    pub is_pmh: bool,
    /// First matching in enumeration order without an extension.
    pub witness: Option<PerfectMatching>,
    pub stats: PmhStats,
}

impl PmhVerdict {
    fn empty() -> PmhVerdict {
        PmhVerdict {
            is_pmh: true,
            witness: None,
            stats: PmhStats::default(),
        }
    }

    /// Combines the verdicts of two consecutive slices of the enumeration
    /// stream, `self` first. Associative, so per-branch results can be folded
    /// in branch order regardless of which worker produced them.
    pub fn merge(self, later: PmhVerdict) -> PmhVerdict {
        PmhVerdict {
            is_pmh: self.is_pmh && later.is_pmh,
            witness: self.witness.or(later.witness),
            stats: PmhStats {
                matchings: self.stats.matchings + later.stats.matchings,
                non_extendable: self.stats.non_extendable + later.stats.non_extendable,
            },
        }
    }
}

fn check_stream<I: Interrupt + ?Sized>(
    g: &Graph,
    stream: PerfectMatchings<'_>,
    interrupt: &I,
) -> Result<PmhVerdict> {
    let mut verdict = PmhVerdict::empty();
    for m in stream {
        if interrupt.should_stop(verdict.stats.matchings) {
            return Err(Error::Interrupted {
                examined: verdict.stats.matchings,
            });
        }
        verdict.stats.matchings += 1;
        if find_extension(g, &m)?.is_none() {
            verdict.stats.non_extendable += 1;
            verdict.is_pmh = false;
            if verdict.witness.is_none() {
                verdict.witness = Some(m);
            }
        }
    }
    Ok(verdict)
}

fn require_pmh_input(g: &Graph) -> Result<()> {
    g.require_cubic()?;
    if g.order() % 2 != 0 {
        return Err(Error::OddOrder(g.order()));
    }
    Ok(())
}

/// Verdict for the slice of matchings containing `first` (an edge at vertex 0).
pub fn check_pmh_branch<I: Interrupt + ?Sized>(
    g: &Graph,
    first: usize,
    interrupt: &I,
) -> Result<PmhVerdict> {
    require_pmh_input(g)?;
    check_stream(g, PerfectMatchings::with_first_edge(g, first)?, interrupt)
}

pub fn check_pmh_with<I: Interrupt + ?Sized>(g: &Graph, interrupt: &I) -> Result<PmhVerdict> {
    require_pmh_input(g)?;
    let mut verdict = PmhVerdict::empty();
    for first in first_branches(g) {
        let part = check_pmh_branch(g, first, &|k: u64| {
            interrupt.should_stop(verdict.stats.matchings + k)
        })?;
        verdict = verdict.merge(part);
    }
    Ok(verdict)
}

/// Decides the PMH property by running [`find_extension`] on every perfect
/// matching. A graph without perfect matchings is reported as PMH
/// (vacuously) with zero matchings examined.
pub fn check_pmh(g: &Graph) -> Result<PmhVerdict> {
    check_pmh_with(g, &NoInterrupt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_crossed_prism, build_prism};
    use crate::fixtures;
    use crate::graph::is_hamiltonian_union;

    #[test]
    fn spoke_matching_of_cube_extends() {
        let p = build_prism(4).unwrap();
        let g = p.graph();
        let spokes = PerfectMatching::from_edges(g, (1..=4).map(|i| p.spoke(i))).unwrap();
        let n = find_extension(g, &spokes).unwrap().unwrap();
        assert!(is_hamiltonian_union(g, &spokes, &n).unwrap());
    }

    #[test]
    fn odd_complement_cycle_has_no_extension() {
        let p = build_prism(5).unwrap();
        let g = p.graph();
        let spokes = PerfectMatching::from_edges(g, (1..=5).map(|i| p.spoke(i))).unwrap();
        assert_eq!(find_extension(g, &spokes).unwrap(), None);
    }

    #[test]
    fn cube_is_pmh_and_p7_is_not() {
        let v = check_pmh(build_prism(4).unwrap().graph()).unwrap();
        assert!(v.is_pmh);
        assert_eq!(v.stats.matchings, 9);
        assert_eq!(v.witness, None);
        let v = check_pmh(build_prism(7).unwrap().graph()).unwrap();
        assert!(!v.is_pmh);
        let w = v.witness.unwrap();
        assert_eq!(find_extension(build_prism(7).unwrap().graph(), &w).unwrap(), None);
    }

    #[test]
    fn interrupt_stops_the_search() {
        let g = build_crossed_prism(2).unwrap().graph().clone();
        let err = check_pmh_with(&g, &|k: u64| k >= 5).unwrap_err();
        assert_eq!(err, Error::Interrupted { examined: 5 });
    }

    #[test]
    fn merge_is_associative() {
        let g = build_prism(6).unwrap().graph().clone();
        let parts: Vec<_> = first_branches(&g)
            .into_iter()
            .map(|e| check_pmh_branch(&g, e, &NoInterrupt).unwrap())
            .collect();
        let left = parts[0].clone().merge(parts[1].clone()).merge(parts[2].clone());
        let right = parts[0].clone().merge(parts[1].clone().merge(parts[2].clone()));
        assert_eq!(left, right);
        assert_eq!(left, check_pmh(&g).unwrap());
    }

    #[test]
    fn non_cubic_input_is_rejected() {
        let g = fixtures::cycle(4).unwrap();
        assert!(matches!(check_pmh(&g), Err(Error::UnsupportedDegree { .. })));
    }
}
