//! Command-line front end for `pmh-core`: instance construction by family
//! name, edge-list parsing, DOT export, JSON-lines/CSV reports and a
//! deterministic worker pool.

pub mod commands;
pub mod dot;
pub mod family;
pub mod labels;
pub mod parallel;
pub mod report;
