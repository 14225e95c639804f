//! Proptest strategies shared by the unit tests.

use proptest::prelude::*;

use crate::graph::{Color, Graph, TwoColoring, Vertex};

/// Random graph on up to `max_n` labeled vertices (ids `1..=n`) with at most
/// `max_m` edges. Isolated vertices are kept, so `n` is exact.
pub(crate) fn arb_graph(max_n: u32, max_m: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(u32, u32)> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len().min(max_m);
        proptest::sample::subsequence(pairs, 0..=len).prop_map(move |es| {
            let mut g = Graph::from_edges(es);
            for v in 1..=n {
                g.add_vertex(Vertex(v));
            }
            g
        })
    })
}

/// Total coloring of `g` derived from a bitmask (bit i colors the i-th
/// vertex in id order red).
pub(crate) fn coloring_from_mask(g: &Graph, mask: u64) -> TwoColoring {
    let mut f = TwoColoring::new();
    for (i, v) in g.vertices().enumerate() {
        let c = if mask >> (i % 64) & 1 == 1 { Color::Red } else { Color::Blue };
        f.set(v, c);
    }
    f
}
