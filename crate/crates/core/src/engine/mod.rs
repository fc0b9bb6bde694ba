//! Exhaustive enumeration and decision procedures.
//!
//! Everything here is brute force on purpose: the constructive module is
//! checked against these results.

mod colouring;
mod enumerate;
mod extension;

pub use colouring::{
    extends_by_colouring, extends_by_parity, extends_to_3ec, proposition_e2f_check,
    three_edge_colouring, two_factors, E2fVerdict,
};
pub use enumerate::{enumerate_perfect_matchings, first_branches, PerfectMatchings};
pub use extension::{
    check_pmh, check_pmh_branch, check_pmh_with, find_extension, two_factors_containing,
    Interrupt, NoInterrupt, PmhStats, PmhVerdict,
};
