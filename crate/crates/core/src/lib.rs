//! Exact solver for the load coloring problem.
//!
//! A 2-coloring of a graph's vertices makes an edge *red* when both endpoints
//! are red and *blue* when both are blue. The load coloring problem asks for a
//! coloring maximizing `mu = min(#red edges, #blue edges)`; the parameterized
//! decision version asks whether `mu(G) >= k`.
//!
//! The solver is fixed-parameter tractable in `k`:
//!
//! 1. [`kernel`] shrinks the instance to at most `7k` vertices (or answers Yes
//!    outright by the size bound) using two answer-preserving reduction rules.
//! 2. [`treedecomp`] either finds a Yes-coloring directly or constructs a tree
//!    decomposition of width at most `2k`.
//! 3. [`dp`] runs a dynamic program over a nice form of that decomposition and
//!    reconstructs a witness coloring for Yes answers.
//!
//! The [`oracle`] module provides a brute-force reference implementation, and
//! [`accept`] bundles the self-check suite the `lcp accept` subcommand runs.

pub mod accept;
pub mod dp;
pub mod gen;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod treedecomp;

pub use accept::{run_acceptance, AcceptConfig, AcceptReport};
pub use dp::{
    optimize_klcp, solve_decision, solve_klcp, solve_optimize, DecidedBy, SolveResult, SolveStats,
};
pub use graph::{evaluate_coloring, Color, Graph, LoadProfile, TwoColoring, Vertex};
pub use io::{emit_graph, emit_td, parse_graph, parse_td, ParseError, ResultRecord};

#[cfg(test)]
pub(crate) mod testutil;
