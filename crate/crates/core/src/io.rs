//! Text formats: `p lcp` graph files, `s td` decomposition files, and the
//! solver's result records.
//!
//! Graphs use a PACE-style header `p lcp <n> <m>` followed by `e <u> <v>`
//! lines with 1-indexed endpoints; decompositions use `s td <bags>
//! <max-bag-size> <n>` with `b <id> <vertices…>` bag lines and bare `<i>
//! <j>` tree edges. `c` lines are comments. Emitters write a canonical form
//! (sorted edges, ascending bag contents, ids renumbered to be contiguous),
//! on which parse/emit round-trips are byte-identical.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::dp::{DecidedBy, SolveResult, SolveStats};
use crate::graph::{evaluate_coloring, Graph, TwoColoring, Vertex};
use crate::treedecomp::{NodeId, TreeDecomposition};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing '{0}' header")]
    MissingHeader(&'static str),
    #[error("line {line}: expected '{expected}', got '{text}'")]
    BadHeader {
        line: usize,
        expected: &'static str,
        text: String,
    },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: cannot parse '{text}'")]
    Malformed { line: usize, text: String },
    #[error("line {line}: content before the header")]
    BeforeHeader { line: usize },
    #[error("line {line}: vertex {id} out of range 1..={max}")]
    VertexOutOfRange { line: usize, id: u64, max: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: u32 },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("header declared {declared} edges but found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("line {line}: bag id {id} out of range 1..={max}")]
    BagOutOfRange { line: usize, id: u64, max: usize },
    #[error("line {line}: duplicate bag {id}")]
    DuplicateBag { line: usize, id: u32 },
    #[error("header declared {declared} bags but only {found} were defined")]
    BagCountMismatch { declared: usize, found: usize },
    #[error("line {line}: bag {id} has {size} vertices, over the declared maximum {max}")]
    BagTooLarge {
        line: usize,
        id: u32,
        size: usize,
        max: usize,
    },
}

fn parse_id(tok: &str, line: usize, text: &str) -> Result<u64, ParseError> {
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        text: text.to_string(),
    })
}

fn check_vertex(id: u64, n: usize, line: usize) -> Result<Vertex, ParseError> {
    if id == 0 || id > n as u64 {
        return Err(ParseError::VertexOutOfRange { line, id, max: n });
    }
    Ok(Vertex(id as u32))
}

/// Parses a `p lcp` graph file. Vertices are exactly `1..=n`; edge count,
/// ranges, self-loops, and duplicates are all enforced with line numbers.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut g = Graph::new();
    let mut found = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "p" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if toks.len() != 4 || toks[1] != "lcp" {
                    return Err(ParseError::BadHeader {
                        line,
                        expected: "p lcp <n> <m>",
                        text: trimmed.to_string(),
                    });
                }
                let n = parse_id(toks[2], line, trimmed)? as usize;
                let m = parse_id(toks[3], line, trimmed)? as usize;
                for v in 1..=n {
                    g.add_vertex(Vertex(v as u32));
                }
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(ParseError::BeforeHeader { line });
                };
                if toks.len() != 3 {
                    return Err(ParseError::Malformed {
                        line,
                        text: trimmed.to_string(),
                    });
                }
                let u = check_vertex(parse_id(toks[1], line, trimmed)?, n, line)?;
                let v = check_vertex(parse_id(toks[2], line, trimmed)?, n, line)?;
                if u == v {
                    return Err(ParseError::SelfLoop { line, v: u.0 });
                }
                if !g.add_edge(u, v) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: u.0.min(v.0),
                        v: u.0.max(v.0),
                    });
                }
                found += 1;
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    text: trimmed.to_string(),
                })
            }
        }
    }
    let Some((_, m)) = header else {
        return Err(ParseError::MissingHeader("p lcp <n> <m>"));
    };
    if found != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found,
        });
    }
    Ok(g)
}

/// Renumbering of arbitrary vertex ids onto `1..=n`, ascending.
fn relabeling(g: &Graph) -> (BTreeMap<Vertex, u32>, bool) {
    let map: BTreeMap<Vertex, u32> = g
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, i as u32 + 1))
        .collect();
    let contiguous = map.iter().all(|(v, &new)| v.0 == new);
    (map, contiguous)
}

/// Emits the canonical `p lcp` form: header, then edges ascending. Graphs
/// whose vertex ids are not exactly `1..=n` are renumbered, with the mapping
/// recorded in comment lines.
pub fn emit_graph(g: &Graph) -> String {
    let (map, contiguous) = relabeling(g);
    let mut out = String::new();
    writeln!(out, "p lcp {} {}", g.n(), g.m()).unwrap();
    if !contiguous {
        for (old, new) in &map {
            writeln!(out, "c vertex {new} was {old}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = (map[&u], map[&v]);
        writeln!(out, "e {} {}", a.min(b), a.max(b)).unwrap();
    }
    out
}

/// Parses an `s td` decomposition file. Bag ids are `1..=bags`; the root is
/// fixed at bag 1 (the format carries none). Tree-shape and coverage
/// problems are left to `validate` — this only enforces the file contract.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: BTreeMap<NodeId, Vec<Vertex>> = BTreeMap::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed == "c" || trimmed.starts_with("c ") {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "s" => {
                if header.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if toks.len() != 5 || toks[1] != "td" {
                    return Err(ParseError::BadHeader {
                        line,
                        expected: "s td <bags> <max-bag-size> <n>",
                        text: trimmed.to_string(),
                    });
                }
                let b = parse_id(toks[2], line, trimmed)? as usize;
                let w = parse_id(toks[3], line, trimmed)? as usize;
                let n = parse_id(toks[4], line, trimmed)? as usize;
                header = Some((b, w, n));
            }
            "b" => {
                let Some((count, max_size, n)) = header else {
                    return Err(ParseError::BeforeHeader { line });
                };
                if toks.len() < 2 {
                    return Err(ParseError::Malformed {
                        line,
                        text: trimmed.to_string(),
                    });
                }
                let id = parse_id(toks[1], line, trimmed)?;
                if id == 0 || id > count as u64 {
                    return Err(ParseError::BagOutOfRange {
                        line,
                        id,
                        max: count,
                    });
                }
                let id = NodeId(id as u32);
                let mut content = Vec::with_capacity(toks.len() - 2);
                for tok in &toks[2..] {
                    content.push(check_vertex(parse_id(tok, line, trimmed)?, n, line)?);
                }
                if content.len() > max_size {
                    return Err(ParseError::BagTooLarge {
                        line,
                        id: id.0,
                        size: content.len(),
                        max: max_size,
                    });
                }
                if bags.insert(id, content).is_some() {
                    return Err(ParseError::DuplicateBag { line, id: id.0 });
                }
            }
            _ => {
                let Some((count, _, _)) = header else {
                    return Err(ParseError::BeforeHeader { line });
                };
                if toks.len() != 2 {
                    return Err(ParseError::Malformed {
                        line,
                        text: trimmed.to_string(),
                    });
                }
                let mut pair = [NodeId(0); 2];
                for (slot, tok) in pair.iter_mut().zip(&toks) {
                    let id = parse_id(tok, line, trimmed)?;
                    if id == 0 || id > count as u64 {
                        return Err(ParseError::BagOutOfRange {
                            line,
                            id,
                            max: count,
                        });
                    }
                    *slot = NodeId(id as u32);
                }
                edges.push((pair[0], pair[1]));
            }
        }
    }
    let Some((count, _, _)) = header else {
        return Err(ParseError::MissingHeader("s td <bags> <max-bag-size> <n>"));
    };
    if bags.len() != count {
        return Err(ParseError::BagCountMismatch {
            declared: count,
            found: bags.len(),
        });
    }
    Ok(TreeDecomposition::new(bags, edges, NodeId(1)))
}

/// Emits the canonical `s td` form: bags ascending by id (renumbered to be
/// contiguous if needed), contents ascending, tree edges sorted.
pub fn emit_td(td: &TreeDecomposition) -> String {
    let map: BTreeMap<NodeId, u32> = td
        .nodes()
        .enumerate()
        .map(|(i, id)| (id, i as u32 + 1))
        .collect();
    let contiguous = map.iter().all(|(old, &new)| old.0 == new);
    let width_plus = td.nodes().map(|i| td.bag(i).unwrap().len()).max().unwrap_or(0);
    let n = td
        .nodes()
        .flat_map(|i| td.bag(i).unwrap().iter())
        .map(|v| v.0 as usize)
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    writeln!(out, "s td {} {} {}", map.len(), width_plus, n).unwrap();
    if !contiguous {
        for (old, new) in &map {
            writeln!(out, "c bag {new} was {old}").unwrap();
        }
    }
    for (old, new) in &map {
        write!(out, "b {new}").unwrap();
        for v in td.bag(*old).unwrap() {
            write!(out, " {v}").unwrap();
        }
        writeln!(out).unwrap();
    }
    let mut edges: Vec<(u32, u32)> = td
        .tree_edges()
        .map(|(a, b)| {
            let (x, y) = (map[&a], map[&b]);
            (x.min(y), x.max(y))
        })
        .collect();
    edges.sort_unstable();
    for (a, b) in edges {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

/// Everything one solver invocation reports, in a renderable shape.
#[derive(Clone, Debug)]
pub struct ResultRecord {
    pub verdict: bool,
    pub k: Option<usize>,
    pub mu: Option<usize>,
    /// Red and blue vertex lists of the witness, when one exists.
    pub witness: Option<(Vec<u32>, Vec<u32>)>,
    pub red_edges: Option<usize>,
    pub blue_edges: Option<usize>,
    pub decided_by: Option<DecidedBy>,
    /// Extra key-value pairs (stats); keys must not collide with the fixed ones.
    pub extras: Vec<(String, String)>,
}

fn witness_lists(g: &Graph, f: &TwoColoring) -> ((Vec<u32>, Vec<u32>), usize, usize) {
    let profile = evaluate_coloring(g, f).expect("witnesses are total colorings");
    let red = f.red_vertices().into_iter().map(|v| v.0).collect();
    let blue = f.blue_vertices().into_iter().map(|v| v.0).collect();
    ((red, blue), profile.red_edges, profile.blue_edges)
}

fn stats_extras(stats: &SolveStats) -> Vec<(String, String)> {
    let mut extras = vec![
        ("kernel_vertices".into(), stats.kernel_vertices.to_string()),
        ("kernel_edges".into(), stats.kernel_edges.to_string()),
        ("removed_isolated".into(), stats.removed_isolated.to_string()),
        ("removed_pendants".into(), stats.removed_pendants.to_string()),
        ("dp_nodes".into(), stats.dp_nodes.to_string()),
        ("table_entries".into(), stats.table_entries.to_string()),
    ];
    if let Some(w) = stats.dp_width {
        extras.push(("dp_width".into(), w.to_string()));
    }
    for (phase, t) in &stats.phases {
        extras.push((format!("phase_{phase}_us"), t.as_micros().to_string()));
    }
    extras
}

impl ResultRecord {
    pub fn from_decision(g: &Graph, result: &SolveResult) -> ResultRecord {
        let (witness, red_edges, blue_edges) = match &result.witness {
            Some(f) => {
                let (lists, r, b) = witness_lists(g, f);
                (Some(lists), Some(r), Some(b))
            }
            None => (None, None, None),
        };
        ResultRecord {
            verdict: result.verdict,
            k: Some(result.k),
            mu: None,
            witness,
            red_edges,
            blue_edges,
            decided_by: Some(result.decided_by),
            extras: stats_extras(&result.stats),
        }
    }

    pub fn from_optimization(g: &Graph, mu: usize, coloring: &TwoColoring) -> ResultRecord {
        let (lists, red_edges, blue_edges) = witness_lists(g, coloring);
        ResultRecord {
            verdict: true,
            k: None,
            mu: Some(mu),
            witness: Some(lists),
            red_edges: Some(red_edges),
            blue_edges: Some(blue_edges),
            decided_by: None,
            extras: Vec::new(),
        }
    }

    fn pairs(&self) -> Vec<(String, String)> {
        let mut out = vec![(
            "verdict".to_string(),
            if self.verdict { "yes" } else { "no" }.to_string(),
        )];
        let mut push_opt = |key: &str, val: Option<String>| {
            if let Some(v) = val {
                out.push((key.to_string(), v));
            }
        };
        push_opt("k", self.k.map(|k| k.to_string()));
        push_opt("mu", self.mu.map(|m| m.to_string()));
        let join = |xs: &[u32]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        push_opt("red_vertices", self.witness.as_ref().map(|(r, _)| join(r)));
        push_opt("blue_vertices", self.witness.as_ref().map(|(_, b)| join(b)));
        push_opt("red_edges", self.red_edges.map(|x| x.to_string()));
        push_opt("blue_edges", self.blue_edges.map(|x| x.to_string()));
        push_opt("decided_by", self.decided_by.map(|d| d.to_string()));
        let mut out = out;
        out.extend(self.extras.iter().cloned());
        out
    }

    /// Human-oriented block: `key: value` per line.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for (key, value) in self.pairs() {
            writeln!(s, "{key}: {value}").unwrap();
        }
        s
    }

    /// Machine-oriented block: `key=value` per line, fixed key names.
    pub fn render_kv(&self) -> String {
        let mut s = String::new();
        for (key, value) in self.pairs() {
            writeln!(s, "{key}={value}").unwrap();
        }
        s
    }
}
