//! Mixed graphs: undirected edges plus arcs on a common vertex set.
//!
//! Vertices are 0-based in memory and 1-based in the text format. A graph is
//! simple: no loops, and each unordered vertex pair carries at most one
//! edge or arc.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate underlying pair {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex label {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("requires at least {required} vertices, graph has {n}")]
    TooFewVertices { required: usize, n: usize },
}

/// A finite simple mixed graph.
///
/// `undirected` holds pairs with the smaller endpoint first; `arcs` holds
/// `(tail, head)`. Both lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    undirected: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

/// Which kind of connection joins an unordered vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    Undirected(usize, usize),
    Arc { tail: usize, head: usize },
}

impl Edge {
    fn endpoints(self) -> (usize, usize) {
        match self {
            Edge::Undirected(a, b) => (a, b),
            Edge::Arc { tail, head } => (tail, head),
        }
    }

    fn key(self) -> (usize, usize) {
        let (a, b) = self.endpoints();
        (a.min(b), a.max(b))
    }
}

impl MixedGraph {
    /// Builds a graph from 0-based edge lists, enforcing simplicity.
    pub fn new(
        n: usize,
        undirected: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let edges = undirected
            .into_iter()
            .map(|(a, b)| Edge::Undirected(a, b))
            .chain(
                arcs.into_iter()
                    .map(|(tail, head)| Edge::Arc { tail, head }),
            );
        let mut builder = GraphBuilder::new(n)?;
        for e in edges {
            builder.add(e)?;
        }
        Ok(builder.finish())
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        GraphBuilder::new(n).map(GraphBuilder::finish)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn undirected(&self) -> &[(usize, usize)] {
        &self.undirected
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Number of edges of the underlying graph.
    pub fn edge_count(&self) -> usize {
        self.undirected.len() + self.arcs.len()
    }

    /// All connections, ordered by underlying pair.
    pub fn edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self
            .undirected
            .iter()
            .map(|&(a, b)| Edge::Undirected(a, b))
            .chain(
                self.arcs
                    .iter()
                    .map(|&(tail, head)| Edge::Arc { tail, head }),
            )
            .collect();
        all.sort_by_key(|e| e.key());
        all
    }

    pub fn stats(&self) -> GraphStats {
        graph_stats(self)
    }

    /// Canonical text form; `parse_graph` inverts it exactly.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for e in self.edges() {
            match e {
                Edge::Undirected(a, b) => out.push_str(&format!("{} -- {}\n", a + 1, b + 1)),
                Edge::Arc { tail, head } => {
                    out.push_str(&format!("{} -> {}\n", tail + 1, head + 1))
                }
            }
        }
        out
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for MixedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph(s)
    }
}

struct GraphBuilder {
    n: usize,
    seen: HashSet<(usize, usize)>,
    undirected: Vec<(usize, usize)>,
    arcs: Vec<(usize, usize)>,
}

impl GraphBuilder {
    fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        Ok(Self {
            n,
            seen: HashSet::new(),
            undirected: Vec::new(),
            arcs: Vec::new(),
        })
    }

    fn add(&mut self, e: Edge) -> Result<(), GraphError> {
        let (a, b) = e.endpoints();
        for v in [a, b] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v + 1,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a + 1));
        }
        let key = e.key();
        if !self.seen.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0 + 1, key.1 + 1));
        }
        match e {
            Edge::Undirected(..) => self.undirected.push(key),
            Edge::Arc { tail, head } => self.arcs.push((tail, head)),
        }
        Ok(())
    }

    fn finish(mut self) -> MixedGraph {
        self.undirected.sort_unstable();
        self.arcs.sort_unstable();
        MixedGraph {
            n: self.n,
            undirected: self.undirected,
            arcs: self.arcs,
        }
    }
}

/// Parses the edge-list format: the first content line is `n`, then one
/// `i -- j` or `i -> j` per line. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<MixedGraph, GraphError> {
    let mut builder: Option<GraphBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(b) = builder.as_mut() else {
            let n: usize = content.parse().map_err(|_| GraphError::Syntax {
                line,
                message: format!("expected vertex count, found `{content}`"),
            })?;
            builder = Some(GraphBuilder::new(n).map_err(|e| at_line(line, e))?);
            continue;
        };
        let edge = parse_edge_line(content, line)?;
        b.add(edge).map_err(|e| at_line(line, e))?;
    }
    builder
        .map(GraphBuilder::finish)
        .ok_or_else(|| GraphError::Syntax {
            line: text.lines().count().max(1),
            message: "missing vertex count".into(),
        })
}

fn at_line(line: usize, e: GraphError) -> GraphError {
    GraphError::AtLine {
        line,
        source: Box::new(e),
    }
}

fn parse_edge_line(content: &str, line: usize) -> Result<Edge, GraphError> {
    let syntax = |message: String| GraphError::Syntax { line, message };
    let tokens: Vec<&str> = content.split_whitespace().collect();
    let (lhs, op, rhs) = match tokens.as_slice() {
        [l, op, r] => (*l, *op, *r),
        // Also accept the compact forms `1->2` and `1--2`.
        [one] => {
            let op = if one.contains("->") { "->" } else { "--" };
            match one.split_once(op) {
                Some((l, r)) => (l, op, r),
                None => return Err(syntax(format!("cannot parse edge `{content}`"))),
            }
        }
        _ => return Err(syntax(format!("cannot parse edge `{content}`"))),
    };
    let label = |tok: &str| -> Result<usize, GraphError> {
        let v: usize = tok
            .parse()
            .map_err(|_| syntax(format!("invalid vertex label `{tok}`")))?;
        if v == 0 {
            return Err(syntax("vertex labels start at 1".into()));
        }
        Ok(v - 1)
    };
    let (a, b) = (label(lhs)?, label(rhs)?);
    match op {
        "--" => Ok(Edge::Undirected(a, b)),
        "->" => Ok(Edge::Arc { tail: a, head: b }),
        other => Err(syntax(format!("unknown edge operator `{other}`"))),
    }
}

/// Degree statistics of the underlying graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub arcs: usize,
    pub undirected: usize,
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    /// First Zagreb index, the sum of squared degrees.
    pub zagreb: u64,
}

impl GraphStats {
    pub fn average_degree(&self) -> f64 {
        2.0 * self.m as f64 / self.n as f64
    }
}

pub fn graph_stats(g: &MixedGraph) -> GraphStats {
    let mut degrees = vec![0usize; g.n];
    for &(a, b) in g.undirected.iter().chain(g.arcs.iter()) {
        degrees[a] += 1;
        degrees[b] += 1;
    }
    let zagreb = degrees.iter().map(|&d| (d * d) as u64).sum();
    GraphStats {
        n: g.n,
        m: g.edge_count(),
        arcs: g.arcs.len(),
        undirected: g.undirected.len(),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        degrees,
        zagreb,
    }
}

/// Degree-based lower bound on the first Zagreb index, for `n >= 3`:
///
/// `4m²/n + (Δ-δ)²/2 + 2n/(n-2) · (2m/n - (Δ+δ)/2)²`
pub fn zagreb_lower_bound(stats: &GraphStats) -> Result<f64, GraphError> {
    if stats.n < 3 {
        return Err(GraphError::TooFewVertices {
            required: 3,
            n: stats.n,
        });
    }
    let n = stats.n as f64;
    let m = stats.m as f64;
    let big = stats.max_degree as f64;
    let small = stats.min_degree as f64;
    let centre = 2.0 * m / n - (big + small) / 2.0;
    Ok(4.0 * m * m / n + 0.5 * (big - small).powi(2) + 2.0 * n / (n - 2.0) * centre * centre)
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidProbability(p))
    }
}

/// Random mixed graph from a seeded ChaCha8 stream.
///
/// Each unordered pair is kept with probability `edge_prob`; a kept pair
/// becomes an arc with probability `orient_prob`, pointing either way with
/// equal chance, and is undirected otherwise.
pub fn random_mixed_graph(
    n: usize,
    edge_prob: f64,
    orient_prob: f64,
    seed: u64,
) -> Result<MixedGraph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_mixed_graph_with(n, edge_prob, orient_prob, &mut rng)
}

pub fn random_mixed_graph_with<R: Rng + ?Sized>(
    n: usize,
    edge_prob: f64,
    orient_prob: f64,
    rng: &mut R,
) -> Result<MixedGraph, GraphError> {
    check_probability(edge_prob)?;
    check_probability(orient_prob)?;
    let mut builder = GraphBuilder::new(n)?;
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.random::<f64>() >= edge_prob {
                continue;
            }
            let edge = if rng.random::<f64>() < orient_prob {
                if rng.random::<bool>() {
                    Edge::Arc { tail: a, head: b }
                } else {
                    Edge::Arc { tail: b, head: a }
                }
            } else {
                Edge::Undirected(a, b)
            };
            builder.add(edge)?;
        }
    }
    Ok(builder.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2_arc() -> MixedGraph {
        parse_graph("2\n1 -> 2").unwrap()
    }

    fn c3_cyclic() -> MixedGraph {
        parse_graph("3\n1 -> 2\n2 -> 3\n3 -> 1").unwrap()
    }

    fn star() -> MixedGraph {
        parse_graph("4\n1 -- 2\n1 -- 3\n1 -- 4").unwrap()
    }

    #[test]
    fn parses_single_arc() {
        let g = p2_arc();
        assert_eq!(g.n(), 2);
        assert_eq!(g.arcs(), &[(0, 1)]);
        assert!(g.undirected().is_empty());
    }

    #[test]
    fn parses_cyclic_triangle() {
        let g = c3_cyclic();
        assert_eq!(g.arcs(), &[(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn rejects_duplicate_underlying_pair() {
        let err = parse_graph("2\n1 -- 2\n2 -> 1").unwrap_err();
        match err {
            GraphError::AtLine { line, source } => {
                assert_eq!(line, 3);
                assert_eq!(*source, GraphError::DuplicateEdge(1, 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_loops_and_bad_labels() {
        assert!(matches!(
            parse_graph("3\n2 -- 2"),
            Err(GraphError::AtLine { line: 2, .. })
        ));
        let err = parse_graph("3\n1 -> 4").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
        assert!(matches!(
            parse_graph("3\n1 => 2"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("# nothing\n\n"),
            Err(GraphError::Syntax { .. })
        ));
        assert!(matches!(
            parse_graph("x"),
            Err(GraphError::Syntax { line: 1, .. })
        ));
        assert!(parse_graph("0").is_err());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# header\n\n3 # vertices\n1 -- 2 # edge\n\n3->1\n").unwrap();
        assert_eq!(g.undirected(), &[(0, 1)]);
        assert_eq!(g.arcs(), &[(2, 0)]);
    }

    #[test]
    fn stats_of_small_graphs() {
        let s = p2_arc().stats();
        assert_eq!((s.n, s.m, s.arcs, s.undirected), (2, 1, 1, 0));
        assert_eq!(s.degrees, vec![1, 1]);
        assert_eq!((s.max_degree, s.min_degree, s.zagreb), (1, 1, 2));

        let s = c3_cyclic().stats();
        assert_eq!((s.n, s.m, s.arcs, s.undirected), (3, 3, 3, 0));
        assert_eq!(s.degrees, vec![2, 2, 2]);
        assert_eq!((s.max_degree, s.min_degree, s.zagreb), (2, 2, 12));

        let s = star().stats();
        assert_eq!((s.n, s.m, s.arcs, s.undirected), (4, 3, 0, 3));
        assert_eq!(s.degrees, vec![3, 1, 1, 1]);
        assert_eq!((s.max_degree, s.min_degree, s.zagreb), (3, 1, 12));
    }

    #[test]
    fn zagreb_bound_equality_cases() {
        assert_eq!(zagreb_lower_bound(&star().stats()).unwrap(), 12.0);
        assert_eq!(zagreb_lower_bound(&c3_cyclic().stats()).unwrap(), 12.0);
        assert_eq!(
            zagreb_lower_bound(&p2_arc().stats()),
            Err(GraphError::TooFewVertices { required: 3, n: 2 })
        );
    }

    #[test]
    fn random_extremes() {
        let g = random_mixed_graph(5, 0.0, 0.5, 99).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = random_mixed_graph(4, 1.0, 0.0, 3).unwrap();
        assert_eq!(g.undirected().len(), 6);
        assert!(g.arcs().is_empty());
        let g = random_mixed_graph(4, 1.0, 1.0, 3).unwrap();
        assert_eq!(g.arcs().len(), 6);
        assert_eq!(
            random_mixed_graph(3, 1.5, 0.0, 0),
            Err(GraphError::InvalidProbability(1.5))
        );
        assert!(random_mixed_graph(3, 0.5, -0.1, 0).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_mixed_graph(10, 0.3, 0.5, 42).unwrap();
        let b = random_mixed_graph(10, 0.3, 0.5, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_text() {
        let g = parse_graph("3\n3 -- 1\n2 -> 1").unwrap();
        assert_eq!(g.to_text(), "3\n2 -> 1\n1 -- 3\n");
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }
}
