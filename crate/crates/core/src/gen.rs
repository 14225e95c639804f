//! Deterministic instance generators for tests, benchmarks, and the CLI.
//!
//! Every family is reproducible: the structured families are functions of
//! their parameters alone, and `random_gnm` draws from a ChaCha stream seeded
//! by the caller, so a `(params, seed)` pair always yields the same graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("path needs at least 1 vertex")]
    EmptyPath,
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("grid needs positive dimensions, got {rows}x{cols}")]
    BadGrid { rows: usize, cols: usize },
    #[error("cliques need at least 1 vertex each")]
    EmptyClique,
    #[error("random-gnm with n={n} admits at most {max} edges, requested {m}")]
    TooManyEdges { n: usize, m: usize, max: usize },
}

/// Generator families exposed through `lcp gen --family`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    RandomGnm { n: usize, m: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { leaves: usize },
    DoubleStar { left: usize, right: usize },
    DisjointCliques { count: usize, size: usize },
    Grid { rows: usize, cols: usize },
}

/// Dispatches to the family constructors; `seed` only affects `RandomGnm`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph, GenError> {
    match *family {
        Family::RandomGnm { n, m } => random_gnm(n, m, seed),
        Family::Path { n } => path(n),
        Family::Cycle { n } => cycle(n),
        Family::Star { leaves } => star(leaves),
        Family::DoubleStar { left, right } => double_star(left, right),
        Family::DisjointCliques { count, size } => disjoint_cliques(count, size),
        Family::Grid { rows, cols } => grid(rows, cols),
    }
}

/// Path on vertices `1..=n`.
pub fn path(n: usize) -> Result<Graph, GenError> {
    if n == 0 {
        return Err(GenError::EmptyPath);
    }
    let mut g = Graph::new();
    g.add_vertex(Vertex(1));
    for v in 2..=n as u32 {
        g.add_edge(Vertex(v - 1), Vertex(v));
    }
    Ok(g)
}

/// Cycle on vertices `1..=n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::CycleTooSmall(n));
    }
    let mut g = path(n)?;
    g.add_edge(Vertex(n as u32), Vertex(1));
    Ok(g)
}

/// Star with center 1 and the given number of leaves (`2..=leaves+1`).
pub fn star(leaves: usize) -> Result<Graph, GenError> {
    let mut g = Graph::new();
    g.add_vertex(Vertex(1));
    for v in 2..=(leaves + 1) as u32 {
        g.add_edge(Vertex(1), Vertex(v));
    }
    Ok(g)
}

/// Two adjacent hubs 1 and 2 with `left` pendants on 1 and `right` on 2.
pub fn double_star(left: usize, right: usize) -> Result<Graph, GenError> {
    let mut g = Graph::new();
    g.add_edge(Vertex(1), Vertex(2));
    let mut next = 3u32;
    for _ in 0..left {
        g.add_edge(Vertex(1), Vertex(next));
        next += 1;
    }
    for _ in 0..right {
        g.add_edge(Vertex(2), Vertex(next));
        next += 1;
    }
    Ok(g)
}

/// Complete graph on vertices `1..=n`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new();
    for v in 1..=n as u32 {
        g.add_vertex(Vertex(v));
        for u in 1..v {
            g.add_edge(Vertex(u), Vertex(v));
        }
    }
    g
}

/// `count` disjoint copies of the complete graph on `size` vertices,
/// numbered consecutively.
pub fn disjoint_cliques(count: usize, size: usize) -> Result<Graph, GenError> {
    if size == 0 {
        return Err(GenError::EmptyClique);
    }
    let mut g = Graph::new();
    for c in 0..count {
        let base = (c * size) as u32;
        for i in 1..=size as u32 {
            g.add_vertex(Vertex(base + i));
            for j in 1..i {
                g.add_edge(Vertex(base + j), Vertex(base + i));
            }
        }
    }
    Ok(g)
}

/// `rows x cols` grid graph, vertices numbered row-major from 1.
pub fn grid(rows: usize, cols: usize) -> Result<Graph, GenError> {
    if rows == 0 || cols == 0 {
        return Err(GenError::BadGrid { rows, cols });
    }
    let id = |r: usize, c: usize| Vertex((r * cols + c + 1) as u32);
    let mut g = Graph::new();
    for r in 0..rows {
        for c in 0..cols {
            g.add_vertex(id(r, c));
            if c + 1 < cols {
                g.add_edge(id(r, c), id(r, c + 1));
            }
            if r + 1 < rows {
                g.add_edge(id(r, c), id(r + 1, c));
            }
        }
    }
    Ok(g)
}

/// Uniform random graph with exactly `n` vertices and `m` edges.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    let max = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max {
        return Err(GenError::TooManyEdges { n, m, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new();
    for v in 1..=n as u32 {
        g.add_vertex(Vertex(v));
    }
    while g.m() < m {
        let u = rng.random_range(1..=n as u32);
        let v = rng.random_range(1..=n as u32);
        if u != v {
            g.add_edge(Vertex(u.min(v)), Vertex(u.max(v)));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_shape() {
        let g = path(6).unwrap();
        assert_eq!((g.n(), g.m()), (6, 5));
        assert_eq!(g.degree(Vertex(1)), 1);
        assert_eq!(g.degree(Vertex(3)), 2);
    }

    #[test]
    fn two_cliques_shape() {
        let g = disjoint_cliques(2, 4).unwrap();
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!(!g.has_edge(Vertex(4), Vertex(5)));
    }

    #[test]
    fn gnm_is_deterministic_per_seed() {
        let a = random_gnm(10, 15, 7).unwrap();
        let b = random_gnm(10, 15, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.n(), a.m()), (10, 15));
    }

    #[test]
    fn gnm_rejects_impossible_density() {
        assert_eq!(
            random_gnm(4, 7, 0),
            Err(GenError::TooManyEdges { n: 4, m: 7, max: 6 })
        );
    }

    #[test]
    fn grid_shape() {
        let g = grid(2, 3).unwrap();
        assert_eq!((g.n(), g.m()), (6, 7));
    }

    #[test]
    fn star_and_double_star_shape() {
        let s = star(5).unwrap();
        assert_eq!((s.n(), s.m()), (6, 5));
        assert_eq!(s.degree(Vertex(1)), 5);
        let d = double_star(4, 4).unwrap();
        assert_eq!((d.n(), d.m()), (10, 9));
        assert_eq!(d.degree(Vertex(1)), 5);
        assert_eq!(d.degree(Vertex(2)), 5);
    }

    #[test]
    fn degenerate_families() {
        assert_eq!(path(1).unwrap().n(), 1);
        assert_eq!(star(0).unwrap().n(), 1);
        assert_eq!(cycle(2), Err(GenError::CycleTooSmall(2)));
        assert_eq!(disjoint_cliques(0, 3).unwrap().n(), 0);
    }
}
