//! Graph representation and two-coloring arithmetic.
//!
//! Everything downstream (kernelization, decompositions, the dynamic program)
//! works over [`Graph`], so the representation stays deliberately plain: a
//! sorted adjacency map with stable vertex ids. Ids survive deletion
//! untouched, which lets reduction traces and witness colorings refer back to
//! the caller's vertex names.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A vertex id. Opaque to the algorithms and stable across subgraph
/// operations; file I/O uses 1-based ids but nothing here requires that.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex(pub u32);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One of the two vertex colors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),
    #[error("vertex {0} has no color assigned")]
    Uncolored(Vertex),
}

/// Simple undirected graph: no self-loops, no parallel edges.
///
/// Values are immutable in spirit: algorithms build new graphs rather than
/// mutating shared ones, so a `&Graph` is safe to read from any thread.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn new() -> Graph {
        Graph::default()
    }

    /// Builds a graph from `(u, v)` pairs, creating endpoints as needed.
    /// Duplicate pairs are ignored.
    pub fn from_edges<I: IntoIterator<Item = (u32, u32)>>(edges: I) -> Graph {
        let mut g = Graph::new();
        for (u, v) in edges {
            g.add_edge(Vertex(u), Vertex(v));
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    /// Inserts an isolated vertex; returns false if it was already present.
    pub fn add_vertex(&mut self, v: Vertex) -> bool {
        if self.adj.contains_key(&v) {
            false
        } else {
            self.adj.insert(v, BTreeSet::new());
            true
        }
    }

    /// Inserts an edge, creating endpoints as needed; returns false if the
    /// edge was already present. Self-loops are a caller bug.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        let inserted = self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        if inserted {
            self.m += 1;
        }
        inserted
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Neighbors of `v` in ascending order; empty if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|ns| ns.iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, |ns| ns.len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|ns| ns.len()).max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.adj
            .iter()
            .filter(|(_, ns)| ns.is_empty())
            .map(|(&v, _)| v)
            .collect()
    }

    /// Number of neighbors of `v` inside `x`.
    pub fn deg_in_set(&self, v: Vertex, x: &BTreeSet<Vertex>) -> Result<usize, GraphError> {
        match self.adj.get(&v) {
            None => Err(GraphError::MissingVertex(v)),
            Some(ns) => Ok(ns.iter().filter(|u| x.contains(u)).count()),
        }
    }

    /// Number of edges with both endpoints in `x`.
    pub fn edges_within(&self, x: &BTreeSet<Vertex>) -> usize {
        x.iter()
            .map(|&v| self.neighbors(v).filter(|&u| v < u && x.contains(&u)).count())
            .sum()
    }

    /// Induced subgraph on `V \ s`; surviving ids are unchanged and deleting
    /// absent vertices is a no-op.
    pub fn delete_vertices(&self, s: &BTreeSet<Vertex>) -> Graph {
        let mut out = Graph::new();
        for (&v, ns) in &self.adj {
            if s.contains(&v) {
                continue;
            }
            out.adj.insert(v, BTreeSet::new());
            for &u in ns {
                if !s.contains(&u) {
                    out.adj.get_mut(&v).unwrap().insert(u);
                    if v < u {
                        out.m += 1;
                    }
                }
            }
        }
        out
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = vec![v];
            seen.insert(v);
            while let Some(u) = queue.pop() {
                comp.insert(u);
                for w in self.neighbors(u) {
                    if seen.insert(w) {
                        queue.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}; ", self.n(), self.m())?;
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "{})", edges.join(" "))
    }
}

/// Total red/blue assignment, built incrementally and checked for totality
/// when evaluated against a concrete graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoColoring {
    assignment: BTreeMap<Vertex, Color>,
}

impl TwoColoring {
    pub fn new() -> TwoColoring {
        TwoColoring::default()
    }

    pub fn from_sets<R, B>(red: R, blue: B) -> TwoColoring
    where
        R: IntoIterator<Item = Vertex>,
        B: IntoIterator<Item = Vertex>,
    {
        let mut f = TwoColoring::new();
        for v in red {
            f.set(v, Color::Red);
        }
        for v in blue {
            f.set(v, Color::Blue);
        }
        f
    }

    /// Colors every vertex of `g` with `c`.
    pub fn uniform(g: &Graph, c: Color) -> TwoColoring {
        let mut f = TwoColoring::new();
        for v in g.vertices() {
            f.set(v, c);
        }
        f
    }

    pub fn set(&mut self, v: Vertex, c: Color) {
        self.assignment.insert(v, c);
    }

    pub fn get(&self, v: Vertex) -> Option<Color> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Color)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    /// Vertices colored red, ascending.
    pub fn red_vertices(&self) -> Vec<Vertex> {
        self.of_color(Color::Red)
    }

    /// Vertices colored blue, ascending.
    pub fn blue_vertices(&self) -> Vec<Vertex> {
        self.of_color(Color::Blue)
    }

    fn of_color(&self, c: Color) -> Vec<Vertex> {
        self.assignment
            .iter()
            .filter(|(_, &x)| x == c)
            .map(|(&v, _)| v)
            .collect()
    }

    /// The coloring with every color flipped.
    pub fn swapped(&self) -> TwoColoring {
        TwoColoring {
            assignment: self
                .assignment
                .iter()
                .map(|(&v, &c)| (v, c.flipped()))
                .collect(),
        }
    }
}

/// Edge counts of a coloring. `mu` is what the solver maximizes; `lambda`
/// is the complementary load (`lambda = m - mu`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoadProfile {
    /// Edges with both endpoints red.
    pub red_edges: usize,
    /// Edges with both endpoints blue.
    pub blue_edges: usize,
    /// Edges with at least one red endpoint.
    pub red_load: usize,
    /// Edges with at least one blue endpoint.
    pub blue_load: usize,
    /// `min(red_edges, blue_edges)`.
    pub mu: usize,
    /// `max(red_load, blue_load)`.
    pub lambda: usize,
}

/// Counts the red/blue/bichromatic edges of `f` on `g`.
///
/// `f` must color every vertex of `g`; the first uncolored vertex is reported
/// otherwise.
pub fn evaluate_coloring(g: &Graph, f: &TwoColoring) -> Result<LoadProfile, GraphError> {
    for v in g.vertices() {
        if f.get(v).is_none() {
            return Err(GraphError::Uncolored(v));
        }
    }
    let mut red_edges = 0;
    let mut blue_edges = 0;
    for (u, v) in g.edges() {
        match (f.get(u).unwrap(), f.get(v).unwrap()) {
            (Color::Red, Color::Red) => red_edges += 1,
            (Color::Blue, Color::Blue) => blue_edges += 1,
            _ => {}
        }
    }
    let m = g.m();
    Ok(LoadProfile {
        red_edges,
        blue_edges,
        red_load: m - blue_edges,
        blue_load: m - red_edges,
        mu: red_edges.min(blue_edges),
        lambda: (m - blue_edges).max(m - red_edges),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn evaluate_k2_both_red() {
        let g = Graph::from_edges([(1, 2)]);
        let f = TwoColoring::from_sets([Vertex(1), Vertex(2)], []);
        let p = evaluate_coloring(&g, &f).unwrap();
        assert_eq!(p.red_edges, 1);
        assert_eq!(p.blue_edges, 0);
        assert_eq!(p.mu, 0);
    }

    #[test]
    fn evaluate_c6_split_in_halves() {
        let g = gen::cycle(6).unwrap();
        let f = TwoColoring::from_sets(
            [Vertex(1), Vertex(2), Vertex(3)],
            [Vertex(4), Vertex(5), Vertex(6)],
        );
        let p = evaluate_coloring(&g, &f).unwrap();
        assert_eq!(
            p,
            LoadProfile {
                red_edges: 2,
                blue_edges: 2,
                red_load: 4,
                blue_load: 4,
                mu: 2,
                lambda: 4,
            }
        );
    }

    #[test]
    fn evaluate_p3_one_red_endpoint() {
        // a-b-c with only a red: edge ab is bichromatic, bc is blue.
        let g = Graph::from_edges([(1, 2), (2, 3)]);
        let f = TwoColoring::from_sets([Vertex(1)], [Vertex(2), Vertex(3)]);
        let p = evaluate_coloring(&g, &f).unwrap();
        assert_eq!(p.red_edges, 0);
        assert_eq!(p.blue_edges, 1);
        assert_eq!(p.mu, 0);
    }

    #[test]
    fn evaluate_rejects_partial_coloring() {
        let g = Graph::from_edges([(1, 2)]);
        let f = TwoColoring::from_sets([Vertex(1)], []);
        assert_eq!(evaluate_coloring(&g, &f), Err(GraphError::Uncolored(Vertex(2))));
    }

    #[test]
    fn deg_in_set_star_center_sees_all_leaves() {
        let g = gen::star(5).unwrap();
        let leaves: BTreeSet<Vertex> = (2..=6).map(Vertex).collect();
        assert_eq!(g.deg_in_set(Vertex(1), &leaves).unwrap(), 5);
    }

    #[test]
    fn deg_in_set_ignores_self() {
        let g = gen::complete(4);
        let x: BTreeSet<Vertex> = [Vertex(2)].into();
        assert_eq!(g.deg_in_set(Vertex(2), &x).unwrap(), 0);
    }

    #[test]
    fn deg_in_set_p4_interior() {
        // a-b-c-d: b has one neighbor in {a, d}.
        let g = gen::path(4).unwrap();
        let x: BTreeSet<Vertex> = [Vertex(1), Vertex(4)].into();
        assert_eq!(g.deg_in_set(Vertex(2), &x).unwrap(), 1);
    }

    #[test]
    fn deg_in_set_missing_vertex_errors() {
        let g = gen::path(3).unwrap();
        assert_eq!(
            g.deg_in_set(Vertex(9), &BTreeSet::new()),
            Err(GraphError::MissingVertex(Vertex(9)))
        );
    }

    #[test]
    fn delete_one_vertex_of_k4_leaves_k3() {
        let g = gen::complete(4);
        let h = g.delete_vertices(&[Vertex(4)].into());
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
    }

    #[test]
    fn delete_interior_of_p4_leaves_isolated_endpoints() {
        let g = gen::path(4).unwrap();
        let h = g.delete_vertices(&[Vertex(2), Vertex(3)].into());
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 0);
        assert!(h.has_vertex(Vertex(1)) && h.has_vertex(Vertex(4)));
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = gen::cycle(5).unwrap();
        assert_eq!(g.delete_vertices(&BTreeSet::new()), g);
    }

    #[test]
    fn components_of_disjoint_cliques() {
        let g = gen::disjoint_cliques(2, 4).unwrap();
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0], (1..=4).map(Vertex).collect());
        assert_eq!(comps[1], (5..=8).map(Vertex).collect());
    }

    #[test]
    fn add_edge_reports_duplicates() {
        let mut g = Graph::new();
        assert!(g.add_edge(Vertex(1), Vertex(2)));
        assert!(!g.add_edge(Vertex(2), Vertex(1)));
        assert_eq!(g.m(), 1);
    }

    #[test]
    #[should_panic(expected = "self-loop")]
    fn add_edge_rejects_self_loop() {
        let mut g = Graph::new();
        g.add_edge(Vertex(1), Vertex(1));
    }

    proptest! {
        #[test]
        fn lambda_complements_mu(g in arb_graph(10, 30), reds in prop::collection::vec(any::<bool>(), 10)) {
            let mut f = TwoColoring::new();
            for (i, v) in g.vertices().enumerate() {
                f.set(v, if reds[i % reds.len()] { Color::Red } else { Color::Blue });
            }
            let p = evaluate_coloring(&g, &f).unwrap();
            prop_assert_eq!(p.lambda, g.m() - p.mu);
            prop_assert_eq!(p.red_load, g.m() - p.blue_edges);
            prop_assert_eq!(p.blue_load, g.m() - p.red_edges);
            // red + blue + bichromatic partitions the edge set
            prop_assert!(p.red_edges + p.blue_edges <= g.m());
        }

        #[test]
        fn mu_is_swap_invariant(g in arb_graph(10, 30), reds in prop::collection::vec(any::<bool>(), 10)) {
            let mut f = TwoColoring::new();
            for (i, v) in g.vertices().enumerate() {
                f.set(v, if reds[i % reds.len()] { Color::Red } else { Color::Blue });
            }
            let p = evaluate_coloring(&g, &f).unwrap();
            let q = evaluate_coloring(&g, &f.swapped()).unwrap();
            prop_assert_eq!(p.mu, q.mu);
            prop_assert_eq!(p.red_edges, q.blue_edges);
        }

        #[test]
        fn delete_removes_exactly_incident_edges(g in arb_graph(10, 30), pick in any::<u64>()) {
            let verts: Vec<Vertex> = g.vertices().collect();
            let s: BTreeSet<Vertex> = verts
                .iter()
                .enumerate()
                .filter(|(i, _)| pick & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            let h = g.delete_vertices(&s);
            let incident = g
                .edges()
                .filter(|&(u, v)| s.contains(&u) || s.contains(&v))
                .count();
            prop_assert_eq!(h.m(), g.m() - incident);
            prop_assert_eq!(h.n(), g.n() - s.iter().filter(|v| g.has_vertex(**v)).count());
        }
    }
}
