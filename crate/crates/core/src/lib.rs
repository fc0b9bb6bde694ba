//! Prism and crossed-prism graphs, perfect matchings, and the
//! Perfect-Matching-Hamiltonian (PMH) property.
//!
//! A graph is PMH when every perfect matching `M` has a disjoint perfect
//! matching `N` such that `M ∪ N` is a Hamiltonian cycle. This crate builds
//! the prism family `P_n` and the crossed-prism family `CP_n`, decides the
//! property by exhaustive search, and carries the explicit constructions
//! (non-PMH witnesses and the case-split extension for even `CP_n`), each of
//! which is re-verified before it is returned.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod constructive;
pub mod edgeset;
pub mod engine;
mod error;
pub mod families;
pub mod fixtures;
pub mod graph;

pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use graph::{
    complement_two_factor, cycle_decomposition, is_hamiltonian_union, validate_perfect_matching,
    Cycle, Edge, EdgeClass, Graph, PerfectMatching, TwoFactor, VertexLabel,
};
