//! Kernelization and constructive fast-path witnesses.
//!
//! Two answer-preserving reduction rules shrink an instance of the decision
//! problem "is `mu(G) >= k`":
//!
//! * isolated vertices are deleted (they touch no edge), and
//! * when more than `k` degree-1 vertices share the same neighbor, the
//!   surplus is deleted.
//!
//! A graph reduced under both rules that still has more than `7k` vertices is
//! always a Yes-instance, so [`decide_by_size`] settles large instances
//! immediately. The remaining operations build explicit Yes-colorings where
//! cheap structural conditions hold: [`high_degree_witness`] needs two
//! high-degree vertices, [`matching_witness`] a large enough vertex count
//! relative to `k` and the maximum degree.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{evaluate_coloring, Graph, TwoColoring, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("k must be at least 1 (k = 0 is a trivial Yes and never reaches the rules)")]
    KZero,
}

/// Reasons [`matching_witness`] refuses to run; each names the violated
/// hypothesis of the construction.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("graph has an isolated vertex ({0})")]
    IsolatedVertex(Vertex),
    #[error("maximum degree is {0}, need at least 2")]
    DegreeTooSmall(usize),
    #[error("graph has {n} vertices, need at least {required} ({condition})")]
    TooFewVertices {
        n: usize,
        required: usize,
        condition: &'static str,
    },
}

/// One vertex removal performed during kernelization, in execution order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionEvent {
    /// Vertex had degree 0.
    Isolated(Vertex),
    /// Vertex had degree 1 with `hub` as its only neighbor, and more than
    /// `k` such vertices shared that hub.
    Pendant { pendant: Vertex, hub: Vertex },
}

/// Removal log of a kernelization run. Replaying `events` in order against
/// the input graph reproduces `final_graph`; witness colorings found on the
/// kernel are lifted back by walking the log in reverse.
#[derive(Clone, Debug)]
pub struct KernelTrace {
    pub events: Vec<ReductionEvent>,
    pub final_graph: Graph,
}

impl KernelTrace {
    pub fn removed_isolated(&self) -> Vec<Vertex> {
        self.events
            .iter()
            .filter_map(|e| match e {
                ReductionEvent::Isolated(v) => Some(*v),
                _ => None,
            })
            .collect()
    }

    pub fn removed_pendants(&self) -> Vec<(Vertex, Vertex)> {
        self.events
            .iter()
            .filter_map(|e| match e {
                ReductionEvent::Pendant { pendant, hub } => Some((*pendant, *hub)),
                _ => None,
            })
            .collect()
    }
}

/// Deletes every degree-0 vertex. `mu` is unchanged: no edge is touched.
pub fn remove_isolated(g: &Graph) -> (Graph, Vec<Vertex>) {
    let isolated = g.isolated_vertices();
    let removed: BTreeSet<Vertex> = isolated.iter().copied().collect();
    (g.delete_vertices(&removed), isolated)
}

/// Caps every vertex's pendant neighborhood at `k`, repeating until stable.
///
/// Sound in both directions for "mu >= k": putting a deleted pendant back
/// with the color opposite its hub adds only a bichromatic edge, and
/// conversely any coloring of the larger graph can be repaired after the
/// deletion — the hub keeps at least `k` other pendants, so recoloring one of
/// them replaces a lost monochromatic pendant edge without disturbing the
/// other color class.
pub fn trim_pendants(g: &Graph, k: usize) -> Result<(Graph, Vec<(Vertex, Vertex)>), KernelError> {
    if k == 0 {
        return Err(KernelError::KZero);
    }
    let mut g = g.clone();
    let mut removed = Vec::new();
    loop {
        let mut fired = false;
        for x in g.vertex_set() {
            if !g.has_vertex(x) {
                continue; // removed as a pendant earlier in this pass
            }
            let pendants: Vec<Vertex> = g
                .neighbors(x)
                .filter(|&s| g.degree(s) == 1)
                .collect();
            if pendants.len() > k {
                // keep the k lowest-id pendants for determinism
                let excess: BTreeSet<Vertex> = pendants[k..].iter().copied().collect();
                g = g.delete_vertices(&excess);
                removed.extend(excess.iter().map(|&s| (s, x)));
                fired = true;
            }
        }
        if !fired {
            return Ok((g, removed));
        }
    }
}

/// Runs both rules to a joint fixpoint and returns the reduced graph with
/// its removal log.
pub fn kernelize(g: &Graph, k: usize) -> Result<(Graph, KernelTrace), KernelError> {
    if k == 0 {
        return Err(KernelError::KZero);
    }
    let mut cur = g.clone();
    let mut events = Vec::new();
    loop {
        let before = cur.n();
        let (g1, isolated) = remove_isolated(&cur);
        events.extend(isolated.into_iter().map(ReductionEvent::Isolated));
        let (g2, pendants) = trim_pendants(&g1, k)?;
        events.extend(
            pendants
                .into_iter()
                .map(|(pendant, hub)| ReductionEvent::Pendant { pendant, hub }),
        );
        cur = g2;
        if cur.n() == before {
            break;
        }
    }
    let trace = KernelTrace {
        events,
        final_graph: cur.clone(),
    };
    Ok((cur, trace))
}

/// Size-bound verdict on a reduced graph: more than `7k` vertices means Yes.
/// False means undecided, not No.
pub fn decide_by_size(reduced: &Graph, k: usize) -> bool {
    reduced.n() > 7 * k
}

/// A matching together with the unmatched remainder `Y`.
#[derive(Clone, Debug)]
pub struct Matching {
    /// Pairwise disjoint edges, each as `(u, v)` with `u < v`.
    pub edges: Vec<(Vertex, Vertex)>,
    /// Vertices not covered by `edges`.
    pub unmatched: BTreeSet<Vertex>,
}

impl Matching {
    /// Number of edges from the endpoints of `e` into the unmatched set.
    pub fn deg_y(&self, g: &Graph, e: (Vertex, Vertex)) -> usize {
        g.neighbors(e.0).filter(|w| self.unmatched.contains(w)).count()
            + g.neighbors(e.1).filter(|w| self.unmatched.contains(w)).count()
    }
}

/// Maximal matching with no length-3 augmenting path.
///
/// Greedy over sorted edges, then repeatedly: for a matching edge `u-v` with
/// unmatched neighbors `y` of `u` and `y' != y` of `v`, swap `{uv}` for
/// `{yu, vy'}`. Each swap grows the matching, so this terminates; maximality
/// survives because matched vertices never become unmatched. Full optimality
/// is not needed anywhere — only these two properties are.
pub fn find_matching(g: &Graph) -> Matching {
    let mut partner: std::collections::BTreeMap<Vertex, Vertex> = Default::default();
    for (u, v) in g.edges() {
        if !partner.contains_key(&u) && !partner.contains_key(&v) {
            partner.insert(u, v);
            partner.insert(v, u);
        }
    }
    loop {
        let snapshot: Vec<(Vertex, Vertex)> = partner
            .iter()
            .filter(|(v, u)| v < u)
            .map(|(&v, &u)| (v, u))
            .collect();
        let mut improved = false;
        for (u, v) in snapshot {
            if partner.get(&u) != Some(&v) {
                continue; // re-partnered by an earlier swap in this pass
            }
            let free = |w: &Vertex| !partner.contains_key(w);
            let pick = g.neighbors(u).filter(free).find_map(|y| {
                g.neighbors(v).filter(free).find(|&y2| y2 != y).map(|y2| (y, y2))
            });
            if let Some((y, y2)) = pick {
                partner.insert(y, u);
                partner.insert(u, y);
                partner.insert(v, y2);
                partner.insert(y2, v);
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    let edges = partner
        .iter()
        .filter(|(v, u)| v < u)
        .map(|(&v, &u)| (v, u))
        .collect();
    let unmatched = g.vertices().filter(|v| !partner.contains_key(v)).collect();
    Matching { edges, unmatched }
}

/// Yes-witness from a matching, valid whenever the graph is large relative
/// to `k` and its maximum degree.
///
/// Requires: no isolated vertices, max degree >= 2, `n >= 5k`, and
/// `n >= 4k + max_degree`. With `2k` matching edges the first `k` go red and
/// the next `k` blue. Otherwise the unmatched set `Y` is large and
/// independent, every `y in Y` has matched neighbors, and a minimal matching
/// subset `M'` whose endpoints see at least `k - |M'|` unmatched vertices
/// exists; coloring `M'` plus its `Y`-neighbors red puts `k` edges in red
/// while the rest of the matching and the remaining `Y`-edges keep `k` in
/// blue. The profile of the returned coloring is asserted, so a violated
/// hypothesis can never escape silently.
pub fn matching_witness(g: &Graph, k: usize) -> Result<TwoColoring, WitnessError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(WitnessError::IsolatedVertex(v));
    }
    let delta = g.max_degree();
    if delta < 2 {
        return Err(WitnessError::DegreeTooSmall(delta));
    }
    let n = g.n();
    if n < 5 * k {
        return Err(WitnessError::TooFewVertices {
            n,
            required: 5 * k,
            condition: "n >= 5k",
        });
    }
    if n < 4 * k + delta {
        return Err(WitnessError::TooFewVertices {
            n,
            required: 4 * k + delta,
            condition: "n >= 4k + max degree",
        });
    }

    let matching = find_matching(g);
    let red: BTreeSet<Vertex> = if matching.edges.len() >= 2 * k {
        matching.edges[..k]
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect()
    } else {
        // Grow M' by descending deg_Y until its endpoints reach k - |M'|
        // unmatched vertices, then prune to a minimal such subset.
        let mut edges = matching.edges.clone();
        edges.sort_by_key(|&e| Reverse(matching.deg_y(g, e)));
        let mut chosen: Vec<(Vertex, Vertex)> = Vec::new();
        let mut sum = 0;
        for e in edges {
            if sum + chosen.len() >= k {
                break;
            }
            sum += matching.deg_y(g, e);
            chosen.push(e);
        }
        assert!(
            sum + chosen.len() >= k,
            "matching too small for the witness construction; hypotheses violated?"
        );
        loop {
            let mut dropped = false;
            for i in (0..chosen.len()).rev() {
                let d = matching.deg_y(g, chosen[i]);
                if sum - d + chosen.len() - 1 >= k {
                    sum -= d;
                    chosen.remove(i);
                    dropped = true;
                    break;
                }
            }
            if !dropped {
                break;
            }
        }
        let mut red: BTreeSet<Vertex> = chosen.iter().flat_map(|&(u, v)| [u, v]).collect();
        for &(u, v) in &chosen {
            for w in g.neighbors(u).chain(g.neighbors(v)) {
                if matching.unmatched.contains(&w) {
                    red.insert(w);
                }
            }
        }
        red
    };

    let blue = g.vertices().filter(|v| !red.contains(v));
    let f = TwoColoring::from_sets(red.iter().copied(), blue);
    let p = evaluate_coloring(g, &f).expect("witness coloring is total by construction");
    assert!(
        p.red_edges >= k && p.blue_edges >= k,
        "matching witness missed its bound: {p:?} for k={k}"
    );
    Ok(f)
}

/// Yes-witness from two high-degree vertices: if distinct `x`, `y` exist with
/// `deg(x) > 2k` and `deg(y) > k`, color `y` and `k` of its non-`x` neighbors
/// red, then `x` and `k` of its still-uncolored neighbors blue (the rest
/// blue too). Red keeps the `k` edges at `y`, blue the `k` at `x`. Returns
/// nothing when no such pair exists.
pub fn high_degree_witness(g: &Graph, k: usize) -> Option<TwoColoring> {
    let best_of = |exclude: Option<Vertex>| {
        g.vertices()
            .filter(|&v| Some(v) != exclude)
            .max_by_key(|&v| (g.degree(v), Reverse(v)))
    };
    let x = best_of(None)?;
    if g.degree(x) <= 2 * k {
        return None;
    }
    let y = best_of(Some(x))?;
    if g.degree(y) <= k {
        return None;
    }

    let mut red: BTreeSet<Vertex> = [y].into();
    red.extend(g.neighbors(y).filter(|&w| w != x).take(k));
    debug_assert_eq!(red.len(), k + 1);
    // x is never red, and deg(x) > 2k leaves it at least k non-red neighbors,
    // so the all-else-blue coloring below closes k blue edges at x.
    debug_assert!(g.neighbors(x).filter(|w| !red.contains(w)).count() >= k);

    let blue = g.vertices().filter(|v| !red.contains(v));
    let f = TwoColoring::from_sets(red.iter().copied(), blue);
    let p = evaluate_coloring(g, &f).expect("witness coloring is total by construction");
    assert!(
        p.red_edges >= k && p.blue_edges >= k,
        "high-degree witness missed its bound: {p:?} for k={k}"
    );
    Some(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::brute_force_mu;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn k3_plus_isolated(extra: u32) -> Graph {
        let mut g = gen::complete(3);
        for v in 0..extra {
            g.add_vertex(Vertex(10 + v));
        }
        g
    }

    #[test]
    fn rule_removes_isolated_vertices() {
        let (h, removed) = remove_isolated(&k3_plus_isolated(2));
        assert_eq!((h.n(), h.m()), (3, 3));
        assert_eq!(removed.len(), 2);
    }

    #[test]
    fn rule_empties_edgeless_graph() {
        let mut g = Graph::new();
        for v in 1..=5 {
            g.add_vertex(Vertex(v));
        }
        let (h, removed) = remove_isolated(&g);
        assert_eq!(h.n(), 0);
        assert_eq!(removed.len(), 5);
    }

    #[test]
    fn rule_keeps_cycle_untouched() {
        let g = gen::cycle(6).unwrap();
        let (h, removed) = remove_isolated(&g);
        assert_eq!(h, g);
        assert!(removed.is_empty());
    }

    #[test]
    fn pendants_capped_at_k() {
        let g = gen::star(5).unwrap();
        let (h, removed) = trim_pendants(&g, 3).unwrap();
        assert_eq!((h.n(), h.m()), (4, 3)); // star with 3 leaves
        assert_eq!(removed.len(), 2);
        let (mu_g, _) = brute_force_mu(&g).unwrap();
        let (mu_h, _) = brute_force_mu(&h).unwrap();
        assert_eq!(mu_g, 0);
        assert_eq!(mu_h, 0);
    }

    #[test]
    fn path_has_no_excess_pendants() {
        let g = gen::path(20).unwrap();
        let (h, removed) = trim_pendants(&g, 1).unwrap();
        assert_eq!(h, g);
        assert!(removed.is_empty());
    }

    #[test]
    fn double_star_trims_both_hubs() {
        let g = gen::double_star(4, 4).unwrap();
        let (h, removed) = trim_pendants(&g, 2).unwrap();
        assert_eq!(removed.len(), 4);
        assert_eq!(h.degree(Vertex(1)), 3); // hub 2 plus two pendants
        assert_eq!(h.degree(Vertex(2)), 3);
        // mu itself drops from 4 to 2 here; the rule only promises to
        // preserve the answer to "mu >= k", which it does
        let (mu_g, _) = brute_force_mu(&g).unwrap();
        let (mu_h, _) = brute_force_mu(&h).unwrap();
        assert_eq!(mu_g >= 2, mu_h >= 2);
        assert!(mu_h >= 2);
    }

    #[test]
    fn rules_reject_k_zero() {
        assert_eq!(trim_pendants(&gen::star(2).unwrap(), 0), Err(KernelError::KZero));
        assert!(kernelize(&gen::star(2).unwrap(), 0).is_err());
    }

    #[test]
    fn kernelize_small_clique_with_clutter() {
        let (h, trace) = kernelize(&k3_plus_isolated(2), 1).unwrap();
        assert_eq!((h.n(), h.m()), (3, 3));
        assert_eq!(trace.removed_isolated().len(), 2);
        assert!(trace.removed_pendants().is_empty());
    }

    #[test]
    fn kernelize_giant_star() {
        // star mu is 0 at any size (every edge meets the center), so the
        // kernel must be a No-instance for k=2 as well
        let g = gen::star(100).unwrap();
        let (h, trace) = kernelize(&g, 2).unwrap();
        assert_eq!((h.n(), h.m()), (3, 2));
        assert_eq!(trace.removed_pendants().len(), 98);
        let (mu_h, _) = brute_force_mu(&h).unwrap();
        assert_eq!(mu_h, 0);
    }

    #[test]
    fn kernelize_replay_matches_final_graph() {
        let g = gen::double_star(6, 3).unwrap();
        let (h, trace) = kernelize(&g, 2).unwrap();
        let mut replay = g.clone();
        for e in &trace.events {
            let v = match e {
                ReductionEvent::Isolated(v) => *v,
                ReductionEvent::Pendant { pendant, hub } => {
                    assert_eq!(replay.degree(*pendant), 1);
                    assert_eq!(replay.neighbors(*pendant).next(), Some(*hub));
                    *pendant
                }
            };
            replay = replay.delete_vertices(&[v].into());
        }
        assert_eq!(replay, h);
        assert_eq!(replay, trace.final_graph);
    }

    #[test]
    fn size_verdict_thresholds() {
        assert!(decide_by_size(&gen::path(20).unwrap(), 1)); // 20 > 7
        assert!(!decide_by_size(&gen::cycle(6).unwrap(), 2)); // 6 <= 14
        // perfect matching on 8 vertices: 8 > 7
        let g = Graph::from_edges([(1, 2), (3, 4), (5, 6), (7, 8)]);
        assert!(decide_by_size(&g, 1));
    }

    #[test]
    fn matching_on_path_is_maximum() {
        let g = gen::path(4).unwrap();
        let m = find_matching(&g);
        assert_eq!(m.edges, vec![(Vertex(1), Vertex(2)), (Vertex(3), Vertex(4))]);
        assert!(m.unmatched.is_empty());
    }

    #[test]
    fn matching_swaps_length_three_path() {
        // sorted-edge greedy grabs 1-2 first, stranding 3 and 4 on the path
        // 3-1-2-4; the swap must recover both.
        let g = Graph::from_edges([(1, 2), (1, 3), (2, 4)]);
        let m = find_matching(&g);
        assert_eq!(m.edges.len(), 2);
        assert!(m.unmatched.is_empty());
    }

    #[test]
    fn matching_on_triangle_and_empty() {
        let m = find_matching(&gen::complete(3));
        assert_eq!(m.edges.len(), 1);
        assert_eq!(m.unmatched.len(), 1);
        let mut edgeless = Graph::new();
        edgeless.add_vertex(Vertex(1));
        let m = find_matching(&edgeless);
        assert!(m.edges.is_empty());
        assert_eq!(m.unmatched.len(), 1);
    }

    fn assert_matching_invariants(g: &Graph, m: &Matching) {
        for &(u, v) in &m.edges {
            assert!(g.has_edge(u, v));
        }
        let mut covered = BTreeSet::new();
        for &(u, v) in &m.edges {
            assert!(covered.insert(u) && covered.insert(v), "edges overlap");
        }
        // maximal: no edge joins two unmatched vertices
        for (u, v) in g.edges() {
            assert!(
                covered.contains(&u) || covered.contains(&v),
                "edge {u}-{v} joins two unmatched vertices"
            );
        }
        // no length-3 augmenting path
        for &(u, v) in &m.edges {
            for y in g.neighbors(u).filter(|w| m.unmatched.contains(w)) {
                for y2 in g.neighbors(v).filter(|w| m.unmatched.contains(w)) {
                    assert!(y == y2, "augmenting path {y}-{u}-{v}-{y2} survived");
                }
            }
        }
        // endpoint degree into Y stays small
        let delta = g.max_degree();
        for &e in &m.edges {
            assert!(m.deg_y(g, e) <= delta.saturating_sub(1).max(2));
        }
    }

    #[test]
    fn matching_witness_on_long_path() {
        let g = gen::path(10).unwrap();
        let f = matching_witness(&g, 2).unwrap();
        let p = evaluate_coloring(&g, &f).unwrap();
        assert!(p.red_edges >= 2 && p.blue_edges >= 2);
    }

    #[test]
    fn matching_witness_on_disjoint_paths() {
        let mut g = gen::path(4).unwrap();
        for base in [4u32, 8] {
            for i in 1..4 {
                g.add_edge(Vertex(base + i), Vertex(base + i + 1));
            }
        }
        assert_eq!((g.n(), g.m()), (12, 9));
        let f = matching_witness(&g, 2).unwrap();
        let p = evaluate_coloring(&g, &f).unwrap();
        assert!(p.red_edges >= 2 && p.blue_edges >= 2);
    }

    #[test]
    fn matching_witness_names_failed_hypothesis() {
        let g = gen::path(10).unwrap();
        assert_eq!(
            matching_witness(&g, 3),
            Err(WitnessError::TooFewVertices {
                n: 10,
                required: 15,
                condition: "n >= 5k",
            })
        );
        let mut with_isolated = g.clone();
        with_isolated.add_vertex(Vertex(99));
        assert!(matches!(
            matching_witness(&with_isolated, 2),
            Err(WitnessError::IsolatedVertex(Vertex(99)))
        ));
        let k2 = gen::path(2).unwrap();
        assert_eq!(matching_witness(&k2, 0), Err(WitnessError::DegreeTooSmall(1)));
    }

    #[test]
    fn matching_witness_across_sparse_families() {
        // deterministic sweep where the hypotheses are known to hold
        let mut cases: Vec<(Graph, usize)> = Vec::new();
        for n in [10usize, 12, 15, 20] {
            cases.push((gen::path(n).unwrap(), 2));
            cases.push((gen::cycle(n).unwrap(), 2));
        }
        cases.push((gen::path(20).unwrap(), 3));
        cases.push((gen::grid(2, 6).unwrap(), 2));
        for (g, k) in cases {
            let delta = g.max_degree();
            assert!(delta >= 2 && g.n() >= 5 * k && g.n() >= 4 * k + delta);
            let f = matching_witness(&g, k).unwrap();
            assert!(evaluate_coloring(&g, &f).unwrap().mu >= k, "failed on {g:?} k={k}");
        }
    }

    #[test]
    fn high_degree_witness_on_double_star() {
        let g = gen::double_star(4, 4).unwrap(); // hubs have degree 5
        let f = high_degree_witness(&g, 2).unwrap();
        let p = evaluate_coloring(&g, &f).unwrap();
        assert!(p.red_edges >= 2 && p.blue_edges >= 2);
    }

    #[test]
    fn high_degree_witness_needs_the_pair() {
        assert!(high_degree_witness(&gen::cycle(6).unwrap(), 1).is_none());
        assert!(high_degree_witness(&gen::star(10).unwrap(), 1).is_none());
    }

    proptest! {
        #[test]
        fn kernel_preserves_the_answer(g in arb_graph(12, 24), k in 1usize..=3) {
            let (kernel, _) = kernelize(&g, k).unwrap();
            let (mu_g, _) = brute_force_mu(&g).unwrap();
            let (mu_kernel, _) = brute_force_mu(&kernel).unwrap();
            prop_assert_eq!(mu_g >= k, mu_kernel >= k);
        }

        #[test]
        fn no_instances_shrink_below_7k(g in arb_graph(14, 30), k in 1usize..=2) {
            let (kernel, _) = kernelize(&g, k).unwrap();
            let (mu_kernel, _) = brute_force_mu(&kernel).unwrap();
            if mu_kernel < k {
                prop_assert!(kernel.n() <= 7 * k);
            }
        }

        #[test]
        fn matching_invariants_hold(g in arb_graph(12, 30)) {
            let m = find_matching(&g);
            assert_matching_invariants(&g, &m);
        }

        #[test]
        fn matching_witness_meets_bound_when_hypotheses_hold(g in arb_graph(14, 20), k in 1usize..=2) {
            let (g, _) = remove_isolated(&g);
            if g.max_degree() >= 2 && g.n() >= 5 * k && g.n() >= 4 * k + g.max_degree() {
                // the assert inside matching_witness is the property
                let f = matching_witness(&g, k).unwrap();
                prop_assert!(evaluate_coloring(&g, &f).unwrap().mu >= k);
            }
        }

        #[test]
        fn high_degree_witness_meets_bound(g in arb_graph(12, 40), k in 1usize..=3) {
            if let Some(f) = high_degree_witness(&g, k) {
                prop_assert!(evaluate_coloring(&g, &f).unwrap().mu >= k);
            }
        }
    }
}
