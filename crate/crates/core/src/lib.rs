//! Interval edge colorings of graphs.
//!
//! An interval `t`-coloring is a proper edge coloring with colors `1..=t`,
//! all of them used, such that the colors at every vertex are consecutive
//! integers. This crate builds graph families whose largest interval
//! coloring meets or nearly meets the diameter bounds
//! `(d + 1)(Δ - 1) + 1` and, for bipartite graphs, `d(Δ - 1) + 1`, checks
//! colorings against the definition, and searches for colorings exactly on
//! small graphs.

pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod exec;
pub mod graph;
pub mod solver;
mod text;

pub use coloring::{Color, EdgeColoring};
pub use exec::Exec;
pub use graph::Graph;
pub use text::ParseError;
