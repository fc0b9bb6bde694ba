//! Explicit constructions: the matching of `P_n` (even `n >= 6`) with no
//! Hamiltonian extension, the parallel-pair matching of `CP_n` (odd `n`)
//! together with its 2-factor census, and the case-split extension algorithm
//! for `CP_n` with even `n`.
//!
//! Every construction is verified before it is returned.

use alloc::vec::Vec;

use crate::engine::{find_extension, two_factors_containing};
use crate::error::{Error, Result};
use crate::families::{phi_product, ChainSide, CrossedPrismGraph, PoleCover, PrismGraph, SymmetryClass};
use crate::graph::{cycle_decomposition, PerfectMatching};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subcase {
    /// `|M ∩ X| = 2`: end edges of the per-pole paths.
    Cut2Complementary,
    /// `|M ∩ X| = 4`: the fixed matching with spokes in `T_1`.
    Cut4Explicit,
    /// `M ∩ X = ∅`, both sides with an even number of asymmetric 2-chains.
    Cut0BothEven,
    /// `M ∩ X = ∅`, exactly one side with an odd number.
    Cut0OneOdd,
    /// The structural construction failed verification and exhaustive
    /// search supplied the extension.
    FallbackSearch,
}

impl Subcase {
    pub fn as_str(self) -> &'static str {
        match self {
            Subcase::Cut2Complementary => "Cut2Complementary",
            Subcase::Cut4Explicit => "Cut4Explicit",
            Subcase::Cut0BothEven => "Cut0BothEven",
            Subcase::Cut0OneOdd => "Cut0OneOdd",
            Subcase::FallbackSearch => "FallbackSearch",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseTrace {
    pub cut_size: usize,
    pub subcase: Subcase,
    /// Set only when `cut_size == 0`.
    pub phi_right: Option<i8>,
    pub phi_left: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    pub extension: PerfectMatching,
    pub trace: CaseTrace,
    /// Vertices of `M ∪ extension` in cycle order, starting at `u1`.
    pub hamiltonian_cycle: Vec<usize>,
}

/// The Hamiltonian vertex order of `m ∪ n`, or `None` if the union is not a
/// single spanning cycle.
fn verified_cycle(cp: &CrossedPrismGraph, m: &PerfectMatching, n: &PerfectMatching) -> Result<Option<Vec<usize>>> {
    let g = cp.graph();
    if !m.edges().is_disjoint(n.edges()) || !crate::graph::validate_perfect_matching(g, n.edges())? {
        return Ok(None);
    }
    let mut cycles = cycle_decomposition(g, &m.edges().union(n.edges()))?;
    if cycles.len() != 1 {
        return Ok(None);
    }
    Ok(Some(cycles.pop().expect("one cycle").vertices))
}

fn finish(
    cp: &CrossedPrismGraph,
    m: &PerfectMatching,
    extension: PerfectMatching,
    trace: CaseTrace,
) -> Result<Option<ExtensionResult>> {
    Ok(verified_cycle(cp, m, &extension)?.map(|hamiltonian_cycle| ExtensionResult {
        extension,
        trace,
        hamiltonian_cycle,
    }))
}

fn fallback(cp: &CrossedPrismGraph, m: &PerfectMatching, mut trace: CaseTrace) -> Result<ExtensionResult> {
    trace.subcase = Subcase::FallbackSearch;
    let extension = find_extension(cp.graph(), m)?.ok_or(Error::NoExtension)?;
    finish(cp, m, extension, trace)?.ok_or(Error::NoExtension)
}

fn check_matching(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<()> {
    if m.edges().universe() != cp.graph().size() {
        return Err(Error::UniverseMismatch {
            expected: cp.graph().size(),
            found: m.edges().universe(),
        });
    }
    if !crate::graph::validate_perfect_matching(cp.graph(), m.edges())? {
        return Err(Error::NotPerfectMatching);
    }
    Ok(())
}

fn check_cut(cp: &CrossedPrismGraph, m: &PerfectMatching, expected: usize) -> Result<()> {
    check_matching(cp, m)?;
    let found = cp.cut_size(m.edges());
    if found != expected {
        return Err(Error::WrongCase { expected, found });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Prism witness

/// The matching of `P_n` (even `n >= 6`) with no Hamiltonian extension:
/// parallel pairs `u_{3k}u_{3k+1}, v_{3k}v_{3k+1}` for `k = 1 … ⌊(n-1)/3⌋`
/// and the spoke at every other index.
pub fn witness_prism(p: &PrismGraph) -> Result<PerfectMatching> {
    let n = p.n();
    if n % 2 != 0 || n < 6 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            reason: "the prism witness needs even n >= 6",
        });
    }
    let mut paired = alloc::vec![false; n + 1];
    let mut edges = Vec::with_capacity(n);
    for k in 1..=(n - 1) / 3 {
        let i = 3 * k;
        edges.push(p.outer_edge(i));
        edges.push(p.inner_edge(i));
        paired[i] = true;
        paired[i + 1] = true;
    }
    edges.extend((1..=n).filter(|&i| !paired[i]).map(|i| p.spoke(i)));
    PerfectMatching::from_edges(p.graph(), edges)
}

/// Length of the longest cyclic run of consecutive spokes `u_i v_i` in `m`.
pub fn consecutive_spokes(p: &PrismGraph, m: &PerfectMatching) -> usize {
    let n = p.n();
    let has = |i: usize| m.contains(p.spoke((i - 1) % n + 1));
    if (1..=n).all(has) {
        return n;
    }
    let mut best = 0;
    for start in 1..=n {
        if has(start) && !has((start + n - 2) % n + 1) {
            let run = (0..n).take_while(|&k| has(start + k)).count();
            best = best.max(run);
        }
    }
    best
}

/// Consecutive-spoke count the witness shows for each residue of `n` mod 6.
pub fn expected_consecutive_spokes(n: usize) -> Option<usize> {
    match n % 6 {
        0 => Some(4),
        2 => Some(3),
        4 => Some(2),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Odd crossed prism witness

/// `⋃ {u_{2i-1}u_{2i}, v_{2i-1}v_{2i}}`: the parallel pair of every pole,
/// the candidate obstruction for odd `n`.
///
/// Its complement is two `4n`-cycles, one through the indices `≡ 0, 1 (mod 4)`
/// and one through `≡ 2, 3`. Choosing the spokes on one and the outer/inner
/// edges on the other closes a Hamiltonian cycle, so with this edge set the
/// matching does extend; [`witness_obstruction`] lists the four 2-factors.
pub fn witness_crossed_prism_odd(cp: &CrossedPrismGraph) -> Result<PerfectMatching> {
    if cp.n() % 2 == 0 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: cp.n() as i64,
            reason: "the parallel-pair matching is only a witness for odd n",
        });
    }
    PerfectMatching::from_edges(cp.graph(), cp.poles().iter().flat_map(|p| p.parallel_pair()))
}

/// Cycle lengths of every 2-factor containing `m`. `m` is an obstruction iff
/// no entry is a single cycle.
pub fn witness_obstruction(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<Vec<Vec<usize>>> {
    Ok(two_factors_containing(cp.graph(), m)?
        .into_iter()
        .map(|f| f.lengths())
        .collect())
}

// ---------------------------------------------------------------------------
// |M ∩ X| = 2

/// The matching `N` that takes both end edges of every path
/// `P_j = E(T_j) \ m`. Each `P_j` is a path with three edges because `m`
/// meets every pole in exactly one internal edge.
fn path_end_edges(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<PerfectMatching> {
    let mut n = cp.graph().empty_set();
    for pole in cp.poles() {
        let k = match cp.pole_cover(m, pole.j)? {
            PoleCover::OneInternal(k) => k,
            _ => return Err(Error::WrongCase { expected: 2, found: cp.cut_size(m.edges()) }),
        };
        // m ∋ z_k z_{k+1}; the path is z_{k+1} z_{k+2} z_{k+3} z_k.
        n.insert(pole.internal_edges[(k + 1) % 4]);
        n.insert(pole.internal_edges[(k + 3) % 4]);
    }
    PerfectMatching::new(cp.graph(), n)
}

/// For `|m ∩ X| = 2`: `E \ (m ∪ N)`, the partner matching whose complement
/// 2-factor is the Hamiltonian cycle `m ∪ N`. It meets `X` in the two cut
/// edges that `m` avoids.
pub fn cut2_partner(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<PerfectMatching> {
    check_cut(cp, m, 2)?;
    let n = path_end_edges(cp, m)?;
    PerfectMatching::new(cp.graph(), m.edges().union(n.edges()).complement())
}

/// Extension for `|m ∩ X| = 2`: the path end-edge matching `N`.
pub fn extend_cut2(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<ExtensionResult> {
    check_cut(cp, m, 2)?;
    let trace = CaseTrace {
        cut_size: 2,
        subcase: Subcase::Cut2Complementary,
        phi_right: None,
        phi_left: None,
    };
    let n = path_end_edges(cp, m)?;
    match finish(cp, m, n, trace)? {
        Some(r) => Ok(r),
        None => fallback(cp, m, trace),
    }
}

// ---------------------------------------------------------------------------
// |M ∩ X| = 4

/// `{u1v1, u2v2} ∪ ⋃_{j>=2} {u_{2j-1}u_{2j}, v_{2j-1}v_{2j}}`.
pub fn cut4_partner(cp: &CrossedPrismGraph) -> PerfectMatching {
    let poles = cp.poles();
    let edges = poles[0]
        .spoke_pair()
        .into_iter()
        .chain(poles[1..].iter().flat_map(|p| p.parallel_pair()));
    PerfectMatching::from_edges(cp.graph(), edges).expect("cut-4 partner is a perfect matching")
}

pub fn extend_cut4(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<ExtensionResult> {
    check_cut(cp, m, 4)?;
    // Cut parity forces every pole to use all four semiedges.
    debug_assert_eq!(m, &cp.all_cut_matching());
    let trace = CaseTrace {
        cut_size: 4,
        subcase: Subcase::Cut4Explicit,
        phi_right: None,
        phi_left: None,
    };
    match finish(cp, m, cut4_partner(cp), trace)? {
        Some(r) => Ok(r),
        None => fallback(cp, m, trace),
    }
}

// ---------------------------------------------------------------------------
// M ∩ X = ∅

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rail {
    Upper,
    Lower,
}

fn pole_kind(cp: &CrossedPrismGraph, m: &PerfectMatching, j: usize) -> Result<bool> {
    match cp.pole_cover(m, j)? {
        PoleCover::Spokes => Ok(true),
        PoleCover::Parallel => Ok(false),
        _ => Err(Error::WrongCase {
            expected: 0,
            found: cp.cut_size(m.edges()),
        }),
    }
}

/// Hamiltonian path of one pole that alternates `m` with non-`m` edges,
/// entering at the left corner on `rail` and leaving at a right corner.
/// Spoke-covered poles keep the rail, parallel-covered poles switch it.
fn traverse_pole(z: [usize; 4], spokes: bool, rail: Rail, out: &mut Vec<usize>) -> Rail {
    let [z1, z2, z3, z4] = z;
    let (order, exit) = match (spokes, rail) {
        (true, Rail::Upper) => ([z1, z4, z3, z2], Rail::Upper),
        (true, Rail::Lower) => ([z3, z2, z1, z4], Rail::Lower),
        (false, Rail::Upper) => ([z1, z2, z3, z4], Rail::Lower),
        (false, Rail::Lower) => ([z3, z4, z1, z2], Rail::Upper),
    };
    out.extend(order);
    exit
}

/// Walks the 2-chains of one side, starting on `rail` at the first pole.
/// Symmetric 2-chains keep the rail and asymmetric ones switch it.
fn rail_walk(
    cp: &CrossedPrismGraph,
    m: &PerfectMatching,
    side: ChainSide,
    mut rail: Rail,
    out: &mut Vec<usize>,
) -> Result<Rail> {
    for j in cp.two_chains(side) {
        let class = crate::families::classify_two_chain(cp, m, j)?;
        let entry = rail;
        for pole in [j, j + 1] {
            let z = cp.pole(pole)?.vertices;
            rail = traverse_pole(z, pole_kind(cp, m, pole)?, rail, out);
        }
        debug_assert_eq!(
            rail == entry,
            class == SymmetryClass::Symmetric,
            "2-chain rail rule"
        );
    }
    Ok(rail)
}

/// Both sides even: a path from `u1` to `u_2n` through the right poles and one
/// from `u_{2n+1}` to `u_4n` through the left poles, closed by `d` and `a`.
fn both_even_extension(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<Option<PerfectMatching>> {
    let mut cycle = Vec::with_capacity(cp.graph().order());
    if rail_walk(cp, m, ChainSide::Right, Rail::Upper, &mut cycle)? != Rail::Upper {
        return Ok(None);
    }
    if rail_walk(cp, m, ChainSide::Left, Rail::Upper, &mut cycle)? != Rail::Upper {
        return Ok(None);
    }
    let g = cp.graph();
    let mut n = g.empty_set();
    let k = cycle.len();
    for i in 0..k {
        let Some(e) = g.edge_between(cycle[i], cycle[(i + 1) % k]) else {
            return Ok(None);
        };
        if !m.contains(e) {
            n.insert(e);
        }
    }
    Ok(PerfectMatching::new(g, n).ok())
}

/// In `m ∪ (all pole-joining edges)`, the strand entering the first pole of a
/// side on `rail`: two vertices per pole, switching rail at spoke-covered
/// poles. Returns the vertices and the exit rail.
fn strand(cp: &CrossedPrismGraph, m: &PerfectMatching, side: ChainSide, mut rail: Rail) -> Result<(Vec<usize>, Rail)> {
    let first = match side {
        ChainSide::Right => 1,
        ChainSide::Left => cp.n() + 1,
    };
    let mut out = Vec::with_capacity(2 * cp.n());
    for j in first..first + cp.n() {
        let [z1, z2, z3, z4] = cp.pole(j)?.vertices;
        let spokes = pole_kind(cp, m, j)?;
        let (pair, exit) = match (spokes, rail) {
            (true, Rail::Upper) => ([z1, z4], Rail::Lower),
            (true, Rail::Lower) => ([z3, z2], Rail::Upper),
            (false, Rail::Upper) => ([z1, z2], Rail::Upper),
            (false, Rail::Lower) => ([z3, z4], Rail::Lower),
        };
        out.extend(pair);
        rail = exit;
    }
    Ok((out, rail))
}

/// Concatenates the four strands `R1, R2` (right, from `u1` and `v2`) and
/// `L1, L2` (left, from `v_{2n+2}` and `u_{2n+1}`) through the cut edges,
/// starting at `u1`: a right strand leaving on the upper rail continues over
/// `d`, on the lower rail over `c`; a left strand continues over `a` or `b`.
/// Returns the vertex sequence once it is back at `u1`.
fn assemble_strands(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<Vec<usize>> {
    let mut cycle = Vec::with_capacity(cp.graph().order());
    let mut side = ChainSide::Right;
    let mut rail = Rail::Upper;
    loop {
        let (vertices, exit) = strand(cp, m, side, rail)?;
        cycle.extend(vertices);
        side = match side {
            ChainSide::Right => ChainSide::Left,
            ChainSide::Left => ChainSide::Right,
        };
        rail = exit;
        if side == ChainSide::Right && rail == Rail::Upper {
            return Ok(cycle);
        }
        if cycle.len() >= cp.graph().order() {
            return Ok(cycle);
        }
    }
}

pub fn extend_cut0(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<ExtensionResult> {
    check_cut(cp, m, 0)?;
    let phi_right = phi_product(cp, m, ChainSide::Right)?;
    let phi_left = phi_product(cp, m, ChainSide::Left)?;
    let mut trace = CaseTrace {
        cut_size: 0,
        subcase: Subcase::Cut0BothEven,
        phi_right: Some(phi_right),
        phi_left: Some(phi_left),
    };
    let attempt = if phi_right == 1 && phi_left == 1 {
        both_even_extension(cp, m)?
    } else {
        trace.subcase = Subcase::Cut0OneOdd;
        let cycle = assemble_strands(cp, m)?;
        (cycle.len() == cp.graph().order()).then(|| cp.all_cut_matching())
    };
    if let Some(n) = attempt {
        if let Some(r) = finish(cp, m, n, trace)? {
            return Ok(r);
        }
    }
    fallback(cp, m, trace)
}

/// Extension of any perfect matching of `CP_n`, `n` even, dispatched on
/// `|m ∩ X|`.
pub fn extend_crossed_prism(cp: &CrossedPrismGraph, m: &PerfectMatching) -> Result<ExtensionResult> {
    if cp.n() % 2 != 0 {
        return Err(Error::TheoremScope { n: cp.n() });
    }
    check_matching(cp, m)?;
    match cp.cut_size(m.edges()) {
        0 => extend_cut0(cp, m),
        2 => extend_cut2(cp, m),
        4 => extend_cut4(cp, m),
        found => Err(Error::WrongCase { expected: 0, found }),
    }
}
