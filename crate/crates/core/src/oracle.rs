//! Brute-force reference solver.
//!
//! Enumerates every 2-coloring and reports the best `mu`. The solver proper is
//! tested against this module on everything small enough to enumerate, so the
//! code here favors obviousness over cleverness — the only concessions are a
//! color-swap symmetry (vertex 1 is pinned red, halving the space) and a
//! gray-code walk so each step flips a single vertex and updates the edge
//! counts incrementally.

use thiserror::Error;

use crate::graph::{Color, Graph, TwoColoring, Vertex};

/// Largest `n` the oracle accepts by default: 2^25 colorings is around a
/// minute of work, which is as much as a test suite should spend on one call.
pub const DEFAULT_CAP: usize = 26;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices; brute force is capped at {cap} (raise the cap to force it)")]
    TooLarge { n: usize, cap: usize },
}

/// Exact `mu(g)` and a coloring attaining it, by exhaustive search.
pub fn brute_force_mu(g: &Graph) -> Result<(usize, TwoColoring), OracleError> {
    brute_force_mu_capped(g, DEFAULT_CAP)
}

/// [`brute_force_mu`] with an explicit vertex cap.
pub fn brute_force_mu_capped(g: &Graph, cap: usize) -> Result<(usize, TwoColoring), OracleError> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let n = verts.len();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    if n == 0 {
        return Ok((0, TwoColoring::new()));
    }

    // Adjacency as bitmasks over the vertex indices 0..n.
    let index_of = |v: Vertex| verts.binary_search(&v).unwrap();
    let mut adj = vec![0u64; n];
    for (u, v) in g.edges() {
        let (i, j) = (index_of(u), index_of(v));
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }

    // Start with only vertex 0 red. Bits 1..n then walk a gray code, so each
    // iteration flips exactly one vertex between the color classes.
    let mut red_mask: u64 = 1;
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };
    let blue_mask = !red_mask & full;
    let mut red_edges: u64 = 0;
    let mut blue_edges: u64 = (0..n)
        .filter(|&i| blue_mask >> i & 1 == 1)
        .map(|i| (adj[i] & blue_mask).count_ones() as u64)
        .sum::<u64>()
        / 2;

    let mut best = red_edges.min(blue_edges);
    let mut best_mask = red_mask;
    let steps: u64 = 1u64 << (n - 1);
    for i in 1..steps {
        // Gray code: step i flips bit (trailing zeros of i) + 1; bit 0 stays red.
        let j = i.trailing_zeros() as usize + 1;
        let bit = 1u64 << j;
        let red_nbrs = (adj[j] & red_mask).count_ones() as u64;
        let blue_nbrs = (adj[j] & !red_mask & full).count_ones() as u64;
        if red_mask & bit == 0 {
            // blue -> red
            red_mask |= bit;
            red_edges += red_nbrs;
            blue_edges -= blue_nbrs;
        } else {
            // red -> blue
            red_mask &= !bit;
            red_edges -= red_nbrs;
            blue_edges += blue_nbrs;
        }
        let mu = red_edges.min(blue_edges);
        if mu > best {
            best = mu;
            best_mask = red_mask;
        }
    }

    let mut f = TwoColoring::new();
    for (i, &v) in verts.iter().enumerate() {
        let c = if best_mask >> i & 1 == 1 { Color::Red } else { Color::Blue };
        f.set(v, c);
    }
    debug_assert_eq!(
        crate::graph::evaluate_coloring(g, &f).unwrap().mu,
        best as usize
    );
    Ok((best as usize, f))
}
