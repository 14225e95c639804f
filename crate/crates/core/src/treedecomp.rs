//! Tree decompositions: validation, nice form, and the width-`2k` constructor.
//!
//! A tree decomposition assigns a vertex bag to every node of a tree such
//! that (1) the bags cover all vertices, (2) every edge lies inside some bag,
//! and (3) each vertex's bags form a connected subtree. Width is the largest
//! bag size minus one.
//!
//! [`make_nice`] rewrites any valid decomposition into the rooted four-kind
//! form the dynamic program consumes (leaf / introduce / forget / join)
//! without changing the width and with at most `4n` nodes. The node bound
//! needs care: splicing introduce/forget chains onto an arbitrary tree can
//! blow up quadratically, so the conversion first *smooths* the
//! decomposition — discard bags contained in a neighbor, pad every bag to
//! the maximum size, and subdivide until adjacent bags differ by exactly one
//! vertex each way. A smooth decomposition has exactly `n - W + 1` nodes
//! (`W` = common bag size), and binarizing plus splicing that costs at most
//! a factor four.
//!
//! [`bounded_width_or_coloring`] implements the decision-stage workhorse:
//! grow a connected set `X` until it captures `k` edges; either the rest of
//! the graph still has `k` edges (then `X` red / rest blue is a Yes-witness)
//! or gluing `X` into per-component bags of `G - X` gives width at most `2k`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{evaluate_coloring, Graph, TwoColoring, Vertex};

/// Identifier of a decomposition node.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TdError {
    #[error("k must be at least 1")]
    KZero,
    #[error("decomposition has no bags")]
    Empty,
    #[error("invalid tree decomposition: {0}")]
    Invalid(ValidationReport),
}

/// An unrooted-in-spirit tree of bags (a root is carried for rooted
/// consumers; validity never depends on it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: BTreeMap<NodeId, BTreeSet<Vertex>>,
    /// Tree edges, normalized to `(lo, hi)`.
    tree: BTreeSet<(NodeId, NodeId)>,
    root: NodeId,
}

impl TreeDecomposition {
    pub fn new<B, V, E>(bags: B, tree: E, root: NodeId) -> TreeDecomposition
    where
        B: IntoIterator<Item = (NodeId, V)>,
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = (NodeId, NodeId)>,
    {
        TreeDecomposition {
            bags: bags
                .into_iter()
                .map(|(id, vs)| (id, vs.into_iter().collect()))
                .collect(),
            tree: tree
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect(),
            root,
        }
    }

    /// Single-bag decomposition holding all of `g` (plus nothing else).
    pub fn single_bag(g: &Graph) -> TreeDecomposition {
        TreeDecomposition::new([(NodeId(1), g.vertex_set())], [], NodeId(1))
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.bags.keys().copied()
    }

    pub fn bag(&self, id: NodeId) -> Option<&BTreeSet<Vertex>> {
        self.bags.get(&id)
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.tree.iter().copied()
    }

    pub fn neighbors(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.tree.iter().filter_map(move |&(a, b)| {
            if a == id {
                Some(b)
            } else if b == id {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Max bag size minus one; an all-empty-bags decomposition reports 0.
    pub fn width(&self) -> Result<usize, TdError> {
        if self.bags.is_empty() {
            return Err(TdError::Empty);
        }
        Ok(self
            .bags
            .values()
            .map(|b| b.len())
            .max()
            .unwrap()
            .saturating_sub(1))
    }
}

/// One violated decomposition property, with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoBags,
    RootMissing(NodeId),
    EdgeEndpointMissing(NodeId),
    SelfLoopEdge(NodeId),
    TreeDisconnected { unreached: NodeId },
    TreeHasCycle { nodes: usize, edges: usize },
    UncoveredVertex(Vertex),
    ForeignVertex { node: NodeId, vertex: Vertex },
    UncoveredEdge(Vertex, Vertex),
    DisconnectedOccurrences { vertex: Vertex, reached: NodeId, unreached: NodeId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoBags => write!(f, "decomposition has no bags"),
            Violation::RootMissing(r) => write!(f, "root {r} is not a bag"),
            Violation::EdgeEndpointMissing(n) => {
                write!(f, "tree edge endpoint {n} is not a bag")
            }
            Violation::SelfLoopEdge(n) => write!(f, "tree edge {n}-{n} is a self-loop"),
            Violation::TreeDisconnected { unreached } => {
                write!(f, "tree is disconnected (node {unreached} unreachable)")
            }
            Violation::TreeHasCycle { nodes, edges } => {
                write!(f, "tree has a cycle ({nodes} nodes, {edges} edges)")
            }
            Violation::UncoveredVertex(v) => write!(f, "vertex {v} appears in no bag"),
            Violation::ForeignVertex { node, vertex } => {
                write!(f, "bag {node} contains {vertex}, which is not a graph vertex")
            }
            Violation::UncoveredEdge(u, v) => {
                write!(f, "edge {u}-{v} is inside no bag")
            }
            Violation::DisconnectedOccurrences { vertex, reached, unreached } => write!(
                f,
                "bags containing {vertex} are disconnected (node {unreached} is cut off from {reached})"
            ),
        }
    }
}

/// Everything [`validate`] found wrong; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", msgs.join("; "))
    }
}

/// Checks the three decomposition properties plus tree-shape sanity and
/// reports every violation found. Invalidity is data, not an error.
pub fn validate(g: &Graph, td: &TreeDecomposition) -> ValidationReport {
    let mut report = ValidationReport::default();
    if td.bags.is_empty() {
        report.violations.push(Violation::NoBags);
        return report;
    }
    if !td.bags.contains_key(&td.root) {
        report.violations.push(Violation::RootMissing(td.root));
    }
    for &(a, b) in &td.tree {
        if a == b {
            report.violations.push(Violation::SelfLoopEdge(a));
        }
        for n in [a, b] {
            if !td.bags.contains_key(&n) {
                report.violations.push(Violation::EdgeEndpointMissing(n));
            }
        }
    }

    // connectivity + acyclicity over the declared bag set
    let start = *td.bags.keys().next().unwrap();
    let mut seen: BTreeSet<NodeId> = [start].into();
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for j in td.neighbors(i) {
            if td.bags.contains_key(&j) && seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    if let Some(&unreached) = td.bags.keys().find(|n| !seen.contains(n)) {
        report
            .violations
            .push(Violation::TreeDisconnected { unreached });
    } else if td.tree.len() + 1 != td.bags.len() {
        report.violations.push(Violation::TreeHasCycle {
            nodes: td.bags.len(),
            edges: td.tree.len(),
        });
    }

    // property 1: bags cover exactly the vertex set
    let mut occurrences: BTreeMap<Vertex, Vec<NodeId>> = BTreeMap::new();
    for (&id, bag) in &td.bags {
        for &v in bag {
            occurrences.entry(v).or_default().push(id);
            if !g.has_vertex(v) {
                report
                    .violations
                    .push(Violation::ForeignVertex { node: id, vertex: v });
            }
        }
    }
    for v in g.vertices() {
        if !occurrences.contains_key(&v) {
            report.violations.push(Violation::UncoveredVertex(v));
        }
    }

    // property 2: every edge inside some bag
    for (u, v) in g.edges() {
        let covered = td
            .bags
            .values()
            .any(|bag| bag.contains(&u) && bag.contains(&v));
        if !covered {
            report.violations.push(Violation::UncoveredEdge(u, v));
        }
    }

    // property 3: per-vertex occurrences form a subtree
    for (&v, nodes) in &occurrences {
        let members: BTreeSet<NodeId> = nodes.iter().copied().collect();
        let start = nodes[0];
        let mut seen: BTreeSet<NodeId> = [start].into();
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for j in td.neighbors(i) {
                if members.contains(&j) && seen.insert(j) {
                    queue.push_back(j);
                }
            }
        }
        if let Some(&unreached) = members.iter().find(|n| !seen.contains(n)) {
            report.violations.push(Violation::DisconnectedOccurrences {
                vertex: v,
                reached: start,
                unreached,
            });
        }
    }
    report
}

/// Role of a node in a nice decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// No children; arbitrary bag.
    Leaf,
    /// One child; bag = child bag plus this vertex.
    Introduce(Vertex),
    /// One child; bag = child bag minus this vertex.
    Forget(Vertex),
    /// Two children with bags identical to this one.
    Join,
}

/// A rooted decomposition whose every node is one of the four
/// [`NodeKind`]s. Construct via [`make_nice`].
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    td: TreeDecomposition,
    kinds: BTreeMap<NodeId, NodeKind>,
    children: BTreeMap<NodeId, Vec<NodeId>>,
}

impl NiceTreeDecomposition {
    pub fn as_td(&self) -> &TreeDecomposition {
        &self.td
    }

    pub fn root(&self) -> NodeId {
        self.td.root()
    }

    pub fn node_count(&self) -> usize {
        self.td.node_count()
    }

    pub fn width(&self) -> Result<usize, TdError> {
        self.td.width()
    }

    pub fn bag(&self, id: NodeId) -> &BTreeSet<Vertex> {
        self.td.bag(id).expect("node ids are internal and always resolve")
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.kinds[&id]
    }

    pub fn children(&self, id: NodeId) -> &[NodeId] {
        self.children.get(&id).map_or(&[], |c| c.as_slice())
    }

    /// Nodes in an order where children precede parents.
    pub fn postorder(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.node_count());
        let mut stack = vec![self.root()];
        while let Some(i) = stack.pop() {
            order.push(i);
            stack.extend(self.children(i).iter().copied());
        }
        order.reverse();
        order
    }

    /// Re-derives every node's structural condition from the stored tree and
    /// bags; `Err` names the first node whose shape does not match its kind.
    pub fn verify_kinds(&self) -> Result<(), String> {
        let mut seen = 0usize;
        for (&id, &kind) in &self.kinds {
            seen += 1;
            let bag = self.bag(id);
            let children = self.children(id);
            let fail = |why: &str| Err(format!("node {id} ({kind:?}): {why}"));
            match kind {
                NodeKind::Leaf => {
                    if !children.is_empty() {
                        return fail("leaf with children");
                    }
                }
                NodeKind::Introduce(v) => {
                    let [c] = children else {
                        return fail("introduce without exactly one child");
                    };
                    let child = self.bag(*c);
                    if child.contains(&v) || !bag.contains(&v) {
                        return fail("introduced vertex misplaced");
                    }
                    let expect: BTreeSet<Vertex> =
                        child.iter().copied().chain([v]).collect();
                    if *bag != expect {
                        return fail("bag is not child bag plus introduced vertex");
                    }
                }
                NodeKind::Forget(v) => {
                    let [c] = children else {
                        return fail("forget without exactly one child");
                    };
                    let child = self.bag(*c);
                    if !child.contains(&v) || bag.contains(&v) {
                        return fail("forgotten vertex misplaced");
                    }
                    let expect: BTreeSet<Vertex> =
                        child.iter().copied().filter(|&w| w != v).collect();
                    if *bag != expect {
                        return fail("bag is not child bag minus forgotten vertex");
                    }
                }
                NodeKind::Join => {
                    let [h, j] = children else {
                        return fail("join without exactly two children");
                    };
                    if self.bag(*h) != bag || self.bag(*j) != bag {
                        return fail("join children bags differ from the join bag");
                    }
                }
            }
        }
        if seen != self.td.node_count() {
            return Err("kind map does not cover every node".into());
        }
        Ok(())
    }
}

/// Internal: mutable bag-tree used by the smoothing passes of `make_nice`.
struct BagForest {
    bags: BTreeMap<NodeId, BTreeSet<Vertex>>,
    adj: BTreeMap<NodeId, BTreeSet<NodeId>>,
}

impl BagForest {
    fn from_td(td: &TreeDecomposition) -> BagForest {
        let mut adj: BTreeMap<NodeId, BTreeSet<NodeId>> =
            td.nodes().map(|n| (n, BTreeSet::new())).collect();
        for (a, b) in td.tree_edges() {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        BagForest {
            bags: td.bags.clone(),
            adj,
        }
    }

    /// Removes `node`, splicing its other neighbors onto `into`.
    fn contract(&mut self, node: NodeId, into: NodeId) {
        let nbrs = self.adj.remove(&node).unwrap();
        self.bags.remove(&node);
        for n in nbrs {
            if n != into {
                self.adj.get_mut(&n).unwrap().remove(&node);
                self.adj.get_mut(&n).unwrap().insert(into);
                self.adj.get_mut(&into).unwrap().insert(n);
            }
        }
        self.adj.get_mut(&into).unwrap().remove(&node);
    }

    /// Discards bags contained in an adjacent bag until none remain (or one
    /// node is left). Afterwards adjacent bags are incomparable, so every
    /// tree edge has nonempty differences in both directions.
    fn prune_contained(&mut self) {
        'outer: loop {
            if self.bags.len() <= 1 {
                return;
            }
            let ids: Vec<NodeId> = self.bags.keys().copied().collect();
            for i in ids {
                let nbrs: Vec<NodeId> = self.adj[&i].iter().copied().collect();
                for j in nbrs {
                    if self.bags[&i].is_subset(&self.bags[&j]) {
                        self.contract(i, j);
                        continue 'outer;
                    }
                }
            }
            return;
        }
    }

    /// Pads every bag to exactly `w` vertices by pulling elements across
    /// tree edges, contracting bags that become redundant. Keeps adjacent
    /// bags incomparable and never grows a bag past `w`.
    fn pad_to_uniform(&mut self, w: usize) {
        loop {
            let Some((&i, _)) = self.bags.iter().find(|(_, b)| b.len() < w) else {
                return;
            };
            let j = *self.adj[&i]
                .iter()
                .next()
                .expect("a lone bag already has the maximum size");
            let &v = self.bags[&j]
                .difference(&self.bags[&i])
                .next()
                .expect("adjacent bags stay incomparable while padding");
            self.bags.get_mut(&i).unwrap().insert(v);
            // i may have swallowed j (or another neighbor) whole
            loop {
                let nbrs: Vec<NodeId> = self.adj[&i].iter().copied().collect();
                let swallowed = nbrs
                    .into_iter()
                    .find(|x| self.bags[x].is_subset(&self.bags[&i]));
                match swallowed {
                    Some(x) if self.bags.len() > 1 => self.contract(x, i),
                    _ => break,
                }
            }
        }
    }

    /// Subdivides tree edges until adjacent bags differ by exactly one
    /// vertex in each direction. Requires uniform bag sizes.
    fn subdivide_to_smooth(&mut self, next_id: &mut u32) {
        loop {
            let edge = self.bags.keys().find_map(|&i| {
                self.adj[&i]
                    .iter()
                    .find(|&&j| self.bags[&i].difference(&self.bags[&j]).count() > 1)
                    .map(|&j| (i, j))
            });
            let Some((i, j)) = edge else { return };
            // replace one i-side vertex with one j-side vertex
            let &drop = self.bags[&i].difference(&self.bags[&j]).last().unwrap();
            let &add = self.bags[&j].difference(&self.bags[&i]).next().unwrap();
            let mut mid: BTreeSet<Vertex> = self.bags[&i].clone();
            mid.remove(&drop);
            mid.insert(add);
            let m = NodeId(*next_id);
            *next_id += 1;
            self.bags.insert(m, mid);
            self.adj.get_mut(&i).unwrap().remove(&j);
            self.adj.get_mut(&j).unwrap().remove(&i);
            self.adj.entry(m).or_default().extend([i, j]);
            self.adj.get_mut(&i).unwrap().insert(m);
            self.adj.get_mut(&j).unwrap().insert(m);
        }
    }
}

/// Builder for the final nice tree.
struct NiceBuilder {
    bags: BTreeMap<NodeId, BTreeSet<Vertex>>,
    kinds: BTreeMap<NodeId, NodeKind>,
    children: BTreeMap<NodeId, Vec<NodeId>>,
    next: u32,
}

impl NiceBuilder {
    fn new() -> NiceBuilder {
        NiceBuilder {
            bags: BTreeMap::new(),
            kinds: BTreeMap::new(),
            children: BTreeMap::new(),
            next: 1,
        }
    }

    fn add(&mut self, bag: BTreeSet<Vertex>, kind: NodeKind, children: Vec<NodeId>) -> NodeId {
        let id = NodeId(self.next);
        self.next += 1;
        self.bags.insert(id, bag);
        self.kinds.insert(id, kind);
        self.children.insert(id, children);
        id
    }

    fn finish(self, root: NodeId) -> NiceTreeDecomposition {
        let tree: BTreeSet<(NodeId, NodeId)> = self
            .children
            .iter()
            .flat_map(|(&p, cs)| cs.iter().map(move |&c| (p.min(c), p.max(c))))
            .collect();
        NiceTreeDecomposition {
            td: TreeDecomposition {
                bags: self.bags,
                tree,
                root,
            },
            kinds: self.kinds,
            children: self.children,
        }
    }
}

/// Converts a valid decomposition into nice form: same width, at most `4n`
/// nodes (`max(4n, 4)` when `n <= 1`).
pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTreeDecomposition, TdError> {
    let report = validate(g, td);
    if !report.is_valid() {
        return Err(TdError::Invalid(report));
    }

    let mut builder = NiceBuilder::new();
    if g.n() == 0 {
        let root = builder.add(BTreeSet::new(), NodeKind::Leaf, vec![]);
        return Ok(builder.finish(root));
    }

    // smooth the decomposition: uniform bag size, adjacent bags differing
    // by exactly one vertex each way
    let mut forest = BagForest::from_td(td);
    forest.prune_contained();
    let w = forest.bags.values().map(|b| b.len()).max().unwrap();
    forest.pad_to_uniform(w);
    let mut next_id = forest.bags.keys().map(|n| n.0).max().unwrap() + 1;
    forest.subdivide_to_smooth(&mut next_id);
    debug_assert_eq!(
        forest.bags.len(),
        g.n() - w + 1,
        "a smooth decomposition has exactly n - W + 1 nodes"
    );

    // orient from the lowest-id node and emit children-before-parents
    let root = *forest.bags.keys().next().unwrap();
    let mut order = vec![root];
    let mut parent: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut idx = 0;
    while idx < order.len() {
        let i = order[idx];
        idx += 1;
        for &j in &forest.adj[&i] {
            if j != root && !parent.contains_key(&j) {
                parent.insert(j, i);
                order.push(j);
            }
        }
    }

    // sub_root[i] = root of the nice subtree equivalent to i's subtree,
    // with bag exactly forest.bags[i]
    let mut sub_root: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    for &i in order.iter().rev() {
        let bag_i = forest.bags[&i].clone();
        let kids: Vec<NodeId> = forest.adj[&i]
            .iter()
            .copied()
            .filter(|c| parent.get(c) == Some(&i))
            .collect();
        if kids.is_empty() {
            let leaf = builder.add(bag_i, NodeKind::Leaf, vec![]);
            sub_root.insert(i, leaf);
            continue;
        }
        // per child: forget its private vertex, then introduce ours
        let mut arms = Vec::with_capacity(kids.len());
        for c in kids {
            let bag_c = &forest.bags[&c];
            let &gone = bag_c.difference(&bag_i).next().unwrap();
            let &new = bag_i.difference(bag_c).next().unwrap();
            let mid: BTreeSet<Vertex> = bag_c.iter().copied().filter(|&v| v != gone).collect();
            let f = builder.add(mid, NodeKind::Forget(gone), vec![sub_root[&c]]);
            let intro = builder.add(bag_i.clone(), NodeKind::Introduce(new), vec![f]);
            arms.push(intro);
        }
        // fold multiple arms with joins
        let mut top = arms.pop().unwrap();
        while let Some(arm) = arms.pop() {
            top = builder.add(bag_i.clone(), NodeKind::Join, vec![arm, top]);
        }
        sub_root.insert(i, top);
    }

    let nice = builder.finish(sub_root[&root]);
    debug_assert!(nice.verify_kinds().is_ok());
    debug_assert!(validate(g, nice.as_td()).is_valid());
    Ok(nice)
}

/// Result of the decision-stage construction: either a Yes-witness or a
/// decomposition of width at most `2k` to run the dynamic program on.
#[derive(Clone, Debug)]
pub enum WidthOrColoring {
    Decomposition(TreeDecomposition),
    Coloring(TwoColoring),
}

/// Either finds a coloring with at least `k` red and `k` blue edges, or
/// constructs a tree decomposition of width at most `2k`.
///
/// If every component has fewer than `k` edges the component bags themselves
/// form a decomposition of width at most `k-1`. Otherwise grow a connected
/// set `X` (breadth-first from the lowest vertex of a component with the
/// most edges) until `G[X]` has `k` edges; minimality of the growth keeps
/// `|X| <= k+1`. If at least `k` edges survive outside `X`, coloring `X` red
/// and the rest blue is a witness. If not, the components of `G - X` are
/// tiny (fewer than `k` edges, hence at most `k` vertices each) and gluing
/// `X` onto each component bag gives width at most `2k`.
pub fn bounded_width_or_coloring(g: &Graph, k: usize) -> Result<WidthOrColoring, TdError> {
    if k == 0 {
        return Err(TdError::KZero);
    }
    if g.n() == 0 {
        return Ok(WidthOrColoring::Decomposition(TreeDecomposition::single_bag(g)));
    }

    let components = g.components();
    let edge_counts: Vec<usize> = components.iter().map(|c| g.edges_within(c)).collect();
    if edge_counts.iter().all(|&e| e <= k - 1) {
        // one bag per component, strung into a path
        let bags = components
            .iter()
            .enumerate()
            .map(|(i, c)| (NodeId(i as u32 + 1), c.iter().copied()));
        let edges = (1..components.len()).map(|i| (NodeId(i as u32), NodeId(i as u32 + 1)));
        let td = TreeDecomposition::new(bags, edges, NodeId(1));
        debug_assert!(td.width().unwrap() <= k - 1);
        return Ok(WidthOrColoring::Decomposition(td));
    }

    // grow X breadth-first inside a component with the most edges
    let richest = edge_counts
        .iter()
        .enumerate()
        .max_by_key(|&(i, &e)| (e, std::cmp::Reverse(i)))
        .map(|(i, _)| i)
        .unwrap();
    let start = *components[richest].iter().next().unwrap();
    let mut x: BTreeSet<Vertex> = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    let mut enqueued: BTreeSet<Vertex> = [start].into();
    while g.edges_within(&x) < k {
        let v = queue
            .pop_front()
            .expect("component has at least k edges, so growth reaches them");
        x.insert(v);
        for u in g.neighbors(v) {
            if enqueued.insert(u) {
                queue.push_back(u);
            }
        }
    }
    debug_assert!(x.len() <= k + 1, "each added vertex closes at least one edge");

    let rest: BTreeSet<Vertex> = g.vertices().filter(|v| !x.contains(v)).collect();
    if g.edges_within(&rest) >= k {
        let f = TwoColoring::from_sets(x.iter().copied(), rest.iter().copied());
        let p = evaluate_coloring(g, &f).expect("coloring is total by construction");
        assert!(p.red_edges >= k && p.blue_edges >= k);
        return Ok(WidthOrColoring::Coloring(f));
    }

    // G - X is sparse: each of its components fits in a bag alongside X
    let remainder = g.delete_vertices(&x);
    let mut bags: Vec<BTreeSet<Vertex>> = remainder
        .components()
        .into_iter()
        .map(|c| c.union(&x).copied().collect())
        .collect();
    if bags.is_empty() {
        bags.push(x.clone()); // X swallowed the whole graph
    }
    let ids = |i: usize| NodeId(i as u32 + 1);
    let td = TreeDecomposition::new(
        bags.into_iter().enumerate().map(|(i, b)| (ids(i), b)),
        (1..remainder.components().len().max(1)).map(|i| (ids(i - 1), ids(i))),
        NodeId(1),
    );
    debug_assert!(validate(g, &td).is_valid());
    debug_assert!(td.width().unwrap() <= 2 * k);
    Ok(WidthOrColoring::Decomposition(td))
}

/// Tree decomposition from an elimination order: process vertices in the
/// given order, bag each vertex with its not-yet-eliminated neighbors, make
/// those neighbors a clique, and hang the bag off the bag of its earliest
/// surviving neighbor. Always valid; width depends on the order. Used to
/// manufacture varied decompositions for self-checks.
pub fn elimination_decomposition(g: &Graph, order: &[Vertex]) -> TreeDecomposition {
    assert_eq!(order.len(), g.n(), "order must list every vertex once");
    if g.n() == 0 {
        return TreeDecomposition::new([(NodeId(1), BTreeSet::new())], [], NodeId(1));
    }
    let rank: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut fill: BTreeMap<Vertex, BTreeSet<Vertex>> = g
        .vertices()
        .map(|v| (v, g.neighbors(v).collect()))
        .collect();
    let mut bags: Vec<(NodeId, BTreeSet<Vertex>)> = Vec::with_capacity(g.n());
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let nbrs: Vec<Vertex> = fill[&v]
            .iter()
            .copied()
            .filter(|u| rank[u] > i)
            .collect();
        let mut bag: BTreeSet<Vertex> = nbrs.iter().copied().collect();
        bag.insert(v);
        bags.push((NodeId(i as u32 + 1), bag));
        // clique-ify the surviving neighborhood
        for (ai, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[ai + 1..] {
                fill.get_mut(&a).unwrap().insert(b);
                fill.get_mut(&b).unwrap().insert(a);
            }
        }
        for &u in &nbrs {
            fill.get_mut(&u).unwrap().remove(&v);
        }
        // parent: earliest-eliminated surviving neighbor, else next bag
        let parent = nbrs
            .iter()
            .map(|u| rank[u])
            .min()
            .unwrap_or(i + 1);
        if parent < g.n() {
            edges.push((NodeId(i as u32 + 1), NodeId(parent as u32 + 1)));
        }
    }
    TreeDecomposition::new(bags, edges, NodeId(g.n() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p4_path_decomposition() -> TreeDecomposition {
        TreeDecomposition::new(
            [
                (NodeId(1), vec![Vertex(1), Vertex(2)]),
                (NodeId(2), vec![Vertex(2), Vertex(3)]),
                (NodeId(3), vec![Vertex(3), Vertex(4)]),
            ],
            [(NodeId(1), NodeId(2)), (NodeId(2), NodeId(3))],
            NodeId(1),
        )
    }

    #[test]
    fn single_bag_is_always_valid() {
        let g = gen::complete(5);
        let td = TreeDecomposition::single_bag(&g);
        assert!(validate(&g, &td).is_valid());
        assert_eq!(td.width().unwrap(), 4);
    }

    #[test]
    fn textbook_path_decomposition_is_valid() {
        let g = gen::path(4).unwrap();
        let td = p4_path_decomposition();
        assert!(validate(&g, &td).is_valid());
        assert_eq!(td.width().unwrap(), 1);
    }

    #[test]
    fn missing_edges_are_reported() {
        let g = gen::cycle(4).unwrap();
        let td = TreeDecomposition::new(
            [
                (NodeId(1), vec![Vertex(1), Vertex(2)]),
                (NodeId(2), vec![Vertex(3), Vertex(4)]),
            ],
            [(NodeId(1), NodeId(2))],
            NodeId(1),
        );
        let report = validate(&g, &td);
        assert_eq!(
            report.violations,
            vec![
                Violation::UncoveredEdge(Vertex(1), Vertex(4)),
                Violation::UncoveredEdge(Vertex(2), Vertex(3)),
            ]
        );
    }

    #[test]
    fn disconnected_occurrences_are_reported() {
        let g = gen::path(3).unwrap();
        // vertex 1 appears in two bags with a 1-free bag between them
        let td = TreeDecomposition::new(
            [
                (NodeId(1), vec![Vertex(1), Vertex(2)]),
                (NodeId(2), vec![Vertex(2), Vertex(3)]),
                (NodeId(3), vec![Vertex(1), Vertex(3)]),
            ],
            [(NodeId(1), NodeId(2)), (NodeId(2), NodeId(3))],
            NodeId(1),
        );
        let report = validate(&g, &td);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DisconnectedOccurrences { vertex: Vertex(1), .. })));
    }

    #[test]
    fn width_examples() {
        let g = gen::complete(5);
        assert_eq!(TreeDecomposition::single_bag(&g).width().unwrap(), 4);
        assert_eq!(p4_path_decomposition().width().unwrap(), 1);
        let mixed = TreeDecomposition::new(
            [
                (NodeId(1), vec![Vertex(1)]),
                (NodeId(2), vec![Vertex(1), Vertex(2), Vertex(3)]),
                (NodeId(3), vec![Vertex(2), Vertex(3)]),
            ],
            [(NodeId(1), NodeId(2)), (NodeId(2), NodeId(3))],
            NodeId(1),
        );
        assert_eq!(mixed.width().unwrap(), 2);
        let empty = TreeDecomposition::new(
            std::iter::empty::<(NodeId, Vec<Vertex>)>(),
            [],
            NodeId(1),
        );
        assert_eq!(empty.width(), Err(TdError::Empty));
    }

    #[test]
    fn make_nice_on_k2_single_bag() {
        let g = gen::path(2).unwrap();
        let nice = make_nice(&g, &TreeDecomposition::single_bag(&g)).unwrap();
        assert_eq!(nice.width().unwrap(), 1);
        assert!(nice.node_count() <= 8);
        nice.verify_kinds().unwrap();
        assert!(validate(&g, nice.as_td()).is_valid());
    }

    #[test]
    fn make_nice_on_p4_path_decomposition() {
        let g = gen::path(4).unwrap();
        let nice = make_nice(&g, &p4_path_decomposition()).unwrap();
        assert_eq!(nice.width().unwrap(), 1);
        assert!(nice.node_count() <= 16);
        nice.verify_kinds().unwrap();
        assert!(validate(&g, nice.as_td()).is_valid());
    }

    #[test]
    fn make_nice_rejects_invalid_input() {
        let g = gen::cycle(4).unwrap();
        let td = TreeDecomposition::new(
            [(NodeId(1), vec![Vertex(1), Vertex(2)])],
            [],
            NodeId(1),
        );
        match make_nice(&g, &td) {
            Err(TdError::Invalid(report)) => assert!(!report.is_valid()),
            other => panic!("expected invalid-decomposition error, got {other:?}"),
        }
    }

    #[test]
    fn make_nice_handles_the_empty_graph() {
        let g = Graph::new();
        let nice = make_nice(&g, &TreeDecomposition::single_bag(&g)).unwrap();
        assert_eq!(nice.node_count(), 1);
        assert!(matches!(nice.kind(nice.root()), NodeKind::Leaf));
    }

    #[test]
    fn smooth_node_count_is_tight_on_stars() {
        // a star decomposition around a big clique bag used to blow up the
        // naive conversion; the smooth pass must keep it linear
        let mut g = gen::complete(6);
        for p in 0..12u32 {
            g.add_edge(Vertex(1 + p % 6), Vertex(100 + p));
        }
        let mut bags = vec![(NodeId(1), g.vertex_set())];
        bags[0].1 = (1..=6).map(Vertex).collect();
        let mut edges = Vec::new();
        for p in 0..12u32 {
            bags.push((
                NodeId(2 + p),
                [Vertex(1 + p % 6), Vertex(100 + p)].into_iter().collect(),
            ));
            edges.push((NodeId(1), NodeId(2 + p)));
        }
        let td = TreeDecomposition::new(
            bags.into_iter().map(|(i, b)| (i, b.into_iter().collect::<Vec<_>>())),
            edges,
            NodeId(1),
        );
        assert!(validate(&g, &td).is_valid());
        let nice = make_nice(&g, &td).unwrap();
        assert_eq!(nice.width().unwrap(), td.width().unwrap());
        assert!(nice.node_count() <= 4 * g.n());
        nice.verify_kinds().unwrap();
    }

    #[test]
    fn width_constructor_colors_two_cliques() {
        let g = gen::disjoint_cliques(2, 4).unwrap();
        match bounded_width_or_coloring(&g, 3).unwrap() {
            WidthOrColoring::Coloring(f) => {
                let p = evaluate_coloring(&g, &f).unwrap();
                assert!(p.red_edges >= 3 && p.blue_edges >= 3);
            }
            WidthOrColoring::Decomposition(_) => panic!("expected a coloring"),
        }
    }

    #[test]
    fn width_constructor_decomposes_stars() {
        let g = gen::star(10).unwrap();
        match bounded_width_or_coloring(&g, 2).unwrap() {
            WidthOrColoring::Decomposition(td) => {
                assert!(validate(&g, &td).is_valid());
                assert!(td.width().unwrap() <= 4);
            }
            WidthOrColoring::Coloring(_) => panic!("a star has no blue edges to offer"),
        }
    }

    #[test]
    fn width_constructor_handles_sparse_components() {
        let g = gen::disjoint_cliques(2, 3).unwrap();
        match bounded_width_or_coloring(&g, 4).unwrap() {
            WidthOrColoring::Decomposition(td) => {
                assert!(validate(&g, &td).is_valid());
                assert_eq!(td.width().unwrap(), 2); // <= k-1 = 3
            }
            WidthOrColoring::Coloring(_) => panic!("only 3 edges per component"),
        }
    }

    #[test]
    fn width_constructor_rejects_k_zero() {
        assert_eq!(
            bounded_width_or_coloring(&gen::path(3).unwrap(), 0).unwrap_err(),
            TdError::KZero
        );
    }

    #[test]
    fn width_constructor_is_deterministic() {
        let g = gen::random_gnm(20, 30, 5).unwrap();
        let a = bounded_width_or_coloring(&g, 3).unwrap();
        let b = bounded_width_or_coloring(&g, 3).unwrap();
        match (a, b) {
            (WidthOrColoring::Coloring(x), WidthOrColoring::Coloring(y)) => assert_eq!(x, y),
            (WidthOrColoring::Decomposition(x), WidthOrColoring::Decomposition(y)) => {
                assert_eq!(x, y)
            }
            _ => panic!("variant choice must be deterministic"),
        }
    }

    /// Oblivious re-implementation of the three properties, for cross-checking
    /// `validate`. Property 3 extracts each vertex's occurrence subtree
    /// explicitly and counts its components.
    fn slow_is_valid(g: &Graph, td: &TreeDecomposition) -> bool {
        if td.node_count() == 0 || !td.bags.contains_key(&td.root) {
            return false;
        }
        // tree shape
        let nodes: Vec<NodeId> = td.nodes().collect();
        if td.tree.len() + 1 != nodes.len() {
            return false;
        }
        if td
            .tree
            .iter()
            .any(|&(a, b)| a == b || !td.bags.contains_key(&a) || !td.bags.contains_key(&b))
        {
            return false;
        }
        let reach = |members: &BTreeSet<NodeId>, start: NodeId| -> usize {
            let mut seen: BTreeSet<NodeId> = [start].into();
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in td.neighbors(i) {
                    if members.contains(&j) && seen.insert(j) {
                        stack.push(j);
                    }
                }
            }
            seen.len()
        };
        let all: BTreeSet<NodeId> = nodes.iter().copied().collect();
        if reach(&all, nodes[0]) != nodes.len() {
            return false;
        }
        // properties 1 and 2
        let union: BTreeSet<Vertex> = td.bags.values().flatten().copied().collect();
        if union != g.vertex_set() {
            return false;
        }
        if !g.edges().all(|(u, v)| {
            td.bags
                .values()
                .any(|b| b.contains(&u) && b.contains(&v))
        }) {
            return false;
        }
        // property 3 by subtree extraction
        for v in g.vertices() {
            let members: BTreeSet<NodeId> = td
                .bags
                .iter()
                .filter(|(_, b)| b.contains(&v))
                .map(|(&i, _)| i)
                .collect();
            let start = *members.iter().next().unwrap();
            if reach(&members, start) != members.len() {
                return false;
            }
        }
        true
    }

    fn random_td(g: &Graph, seed: u64) -> TreeDecomposition {
        let mut order: Vec<Vertex> = g.vertices().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
        elimination_decomposition(g, &order)
    }

    proptest! {
        #[test]
        fn elimination_decompositions_are_valid(g in arb_graph(12, 30), seed in 0u64..500) {
            let td = random_td(&g, seed);
            prop_assert!(validate(&g, &td).is_valid());
        }

        #[test]
        fn validators_agree(g in arb_graph(8, 16), seed in 0u64..500, tweak in 0u8..4, pick in 0usize..64) {
            let mut td = random_td(&g, seed);
            // randomly corrupt the decomposition half the time
            if g.n() > 0 && tweak < 2 {
                let ids: Vec<NodeId> = td.nodes().collect();
                let id = ids[pick % ids.len()];
                let bag = td.bags.get_mut(&id).unwrap();
                let verts: Vec<Vertex> = g.vertices().collect();
                let v = verts[pick % verts.len()];
                if tweak == 0 {
                    bag.remove(&v);
                } else {
                    bag.insert(v);
                }
            }
            prop_assert_eq!(validate(&g, &td).is_valid(), slow_is_valid(&g, &td));
        }

        #[test]
        fn make_nice_preserves_width_within_4n(g in arb_graph(14, 40), seed in 0u64..500) {
            let td = random_td(&g, seed);
            let nice = make_nice(&g, &td).unwrap();
            prop_assert_eq!(nice.width().unwrap(), td.width().unwrap());
            prop_assert!(nice.node_count() <= (4 * g.n()).max(4));
            prop_assert!(validate(&g, nice.as_td()).is_valid());
            nice.verify_kinds().unwrap();
        }

        #[test]
        fn width_constructor_meets_its_bound(g in arb_graph(20, 50), k in 1usize..=5) {
            match bounded_width_or_coloring(&g, k).unwrap() {
                WidthOrColoring::Coloring(f) => {
                    let p = evaluate_coloring(&g, &f).unwrap();
                    prop_assert!(p.red_edges >= k && p.blue_edges >= k);
                }
                WidthOrColoring::Decomposition(td) => {
                    prop_assert!(validate(&g, &td).is_valid());
                    prop_assert!(td.width().unwrap() <= 2 * k);
                }
            }
        }
    }
}
