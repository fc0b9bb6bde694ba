use alloc::vec;
use alloc::vec::Vec;

use super::enumerate::PerfectMatchings;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{complement_two_factor, cycle_decomposition, Graph, PerfectMatching, TwoFactor};

const NONE: u8 = u8::MAX;

fn allowed(g: &Graph, colours: &[u8], e: usize) -> [bool; 3] {
    let mut ok = [true; 3];
    let (x, y) = g.edge(e).endpoints;
    for v in [x, y] {
        for &f in g.incident(v) {
            if f != e && colours[f] != NONE {
                ok[colours[f] as usize] = false;
            }
        }
    }
    ok
}

fn colour_rec(g: &Graph, colours: &mut [u8]) -> bool {
    // Most constrained uncoloured edge first.
    let mut pick = None;
    let mut best = 4;
    for e in 0..g.size() {
        if colours[e] != NONE {
            continue;
        }
        let free = allowed(g, colours, e).iter().filter(|&&b| b).count();
        if free < best {
            best = free;
            pick = Some(e);
            if free == 0 {
                break;
            }
        }
    }
    let Some(e) = pick else {
        return true;
    };
    let ok = allowed(g, colours, e);
    for c in 0..3u8 {
        if ok[c as usize] {
            colours[e] = c;
            if colour_rec(g, colours) {
                return true;
            }
        }
    }
    colours[e] = NONE;
    false
}

/// A proper 3-edge-colouring extending `precoloured` (edge, colour in 0..3),
/// found by backtracking, or `None`.
pub fn three_edge_colouring(g: &Graph, precoloured: &[(usize, u8)]) -> Result<Option<Vec<u8>>> {
    let mut colours = vec![NONE; g.size()];
    for &(e, c) in precoloured {
        if e >= g.size() {
            return Err(Error::EdgeOutOfRange {
                index: e,
                len: g.size(),
            });
        }
        if c >= 3 {
            return Err(Error::InvalidParameter {
                name: "colour",
                value: c as i64,
                reason: "colours are 0, 1 and 2",
            });
        }
        colours[e] = c;
    }
    for e in 0..g.size() {
        if colours[e] != NONE && !allowed(g, &colours, e)[colours[e] as usize] {
            return Ok(None);
        }
    }
    Ok(colour_rec(g, &mut colours).then_some(colours))
}

/// `m` is one colour class of a proper 3-edge-colouring: search route.
pub fn extends_by_colouring(g: &Graph, m: &PerfectMatching) -> Result<bool> {
    g.require_cubic()?;
    let fixed: Vec<_> = m.iter().map(|e| (e, 0)).collect();
    Ok(three_edge_colouring(g, &fixed)?.is_some())
}

/// `m` is one colour class of a proper 3-edge-colouring: parity route (the
/// complement 2-factor has only even cycles).
pub fn extends_by_parity(g: &Graph, m: &PerfectMatching) -> Result<bool> {
    Ok(complement_two_factor(g, m)?.all_even())
}

/// Whether `m` extends to a 3-edge-colouring. Both routes are computed and
/// must agree.
pub fn extends_to_3ec(g: &Graph, m: &PerfectMatching) -> Result<bool> {
    let parity = extends_by_parity(g, m)?;
    let search = extends_by_colouring(g, m)?;
    assert_eq!(parity, search, "3-edge-colouring routes disagree");
    Ok(parity)
}

fn two_factor_rec(
    g: &Graph,
    e: usize,
    degree: &mut [u8],
    remaining: &mut [u8],
    chosen: &mut EdgeSet,
    out: &mut Vec<TwoFactor>,
) -> Result<()> {
    if e == g.size() {
        if degree.iter().all(|&d| d == 2) {
            let cycles = cycle_decomposition(g, chosen)?;
            out.push(TwoFactor {
                edges: chosen.clone(),
                cycles,
            });
        }
        return Ok(());
    }
    let (x, y) = g.edge(e).endpoints;
    remaining[x] -= 1;
    remaining[y] -= 1;
    if degree[x] < 2 && degree[y] < 2 {
        degree[x] += 1;
        degree[y] += 1;
        chosen.insert(e);
        two_factor_rec(g, e + 1, degree, remaining, chosen, out)?;
        chosen.remove(e);
        degree[x] -= 1;
        degree[y] -= 1;
    }
    if degree[x] + remaining[x] >= 2 && degree[y] + remaining[y] >= 2 {
        two_factor_rec(g, e + 1, degree, remaining, chosen, out)?;
    }
    remaining[x] += 1;
    remaining[y] += 1;
    Ok(())
}

/// Every spanning 2-regular subgraph, by include/exclude over edges with
/// degree pruning. Independent of perfect-matching enumeration.
pub fn two_factors(g: &Graph) -> Result<Vec<TwoFactor>> {
    let mut degree = vec![0u8; g.order()];
    let mut remaining: Vec<u8> = (0..g.order())
        .map(|v| g.degree(v).min(u8::MAX as usize) as u8)
        .collect();
    let mut chosen = g.empty_set();
    let mut out = Vec::new();
    two_factor_rec(g, 0, &mut degree, &mut remaining, &mut chosen, &mut out)?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct E2fVerdict {
    /// Every perfect matching is a colour class of some 3-edge-colouring.
    pub every_pm_extends: bool,
    /// Every 2-factor has only even cycles.
    pub all_two_factors_even: bool,
    pub matchings: u64,
    pub two_factors: u64,
    /// The graph has no perfect matching, so both sides hold trivially.
    pub vacuous: bool,
}

impl E2fVerdict {
    pub fn sides_agree(&self) -> bool {
        self.every_pm_extends == self.all_two_factors_even
    }
}

/// Computes both sides of the equivalence between "every perfect matching
/// extends to a 3-edge-colouring" and "every 2-factor has only even cycles"
/// independently: the first by colouring search over enumerated matchings,
/// the second by direct 2-factor enumeration.
pub fn proposition_e2f_check(g: &Graph) -> Result<E2fVerdict> {
    g.require_cubic()?;
    let mut every_pm_extends = true;
    let mut matchings = 0;
    for m in PerfectMatchings::new(g)? {
        matchings += 1;
        if !extends_by_colouring(g, &m)? {
            every_pm_extends = false;
        }
    }
    let factors = two_factors(g)?;
    let all_two_factors_even = factors.iter().all(TwoFactor::all_even);
    Ok(E2fVerdict {
        every_pm_extends,
        all_two_factors_even,
        matchings,
        two_factors: factors.len() as u64,
        vacuous: matchings == 0,
    })
}
