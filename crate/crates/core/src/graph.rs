//! Simple undirected graphs with an explicit vertex count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("invalid family: {0}")]
    Family(String),
}

/// A simple graph on vertices `0..n`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v` in a sorted set,
/// so iteration order is deterministic. Neighbor lists are kept alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, edges: BTreeSet::new(), adjacency: vec![Vec::new(); n] }
    }

    /// Build from an edge iterator. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge_at(u, v, 0)?;
        }
        Ok(g)
    }

    fn add_edge_at(&mut self, u: usize, v: usize, line: usize) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { line, vertex: x, n: self.n });
            }
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Ok(false);
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        Ok(true)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence(self.adjacency.iter().map(Vec::len).collect())
    }

    /// Number of degree-zero vertices.
    pub fn isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|a| a.is_empty()).count()
    }

    /// Encode as a graph6 string (short or long size header, no `>>graph6<<` prefix).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::new();
        if n < 63 {
            out.push(63 + n as u8);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(63 + ((n >> shift) & 0x3f) as u8);
            }
        } else {
            out.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(63 + ((n >> shift) & 0x3f) as u8);
            }
        }
        let mut chunk = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                chunk = (chunk << 1) | u8::from(self.has_edge(i, j));
                filled += 1;
                if filled == 6 {
                    out.push(63 + chunk);
                    chunk = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(63 + (chunk << (6 - filled)));
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Edge-list text in the same format [`parse_edge_list`] reads.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Degree of every vertex, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Degrees sorted in nonincreasing order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

/// Parse the `n <count>` + `u v` edge-list format. `#` starts a comment,
/// blank lines are skipped, CRLF is accepted.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match graph.as_mut() {
            None => {
                let n = match fields.as_slice() {
                    ["n", count] => count.parse::<usize>().map_err(|e| GraphError::Malformed {
                        line: line_no,
                        message: format!("bad vertex count `{count}`: {e}"),
                    })?,
                    _ => return Err(GraphError::MissingHeader),
                };
                graph = Some(Graph::empty(n));
            }
            Some(g) => {
                let [u, v] = fields.as_slice() else {
                    return Err(GraphError::Malformed {
                        line: line_no,
                        message: format!("expected `u v`, got `{line}`"),
                    });
                };
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|e| GraphError::Malformed {
                        line: line_no,
                        message: format!("bad vertex label `{s}`: {e}"),
                    })
                };
                g.add_edge_at(parse(u)?, parse(v)?, line_no)?;
            }
        }
    }
    graph.ok_or(GraphError::MissingHeader)
}

/// Decode one graph6 record. A leading `>>graph6<<` marker and trailing
/// whitespace are tolerated.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, GraphError> {
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let end = bytes
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(0, |p| p + 1);
    let bytes = &bytes[..end];
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(GraphError::Graph6(format!("byte {bad:#04x} outside 63..=126")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(GraphError::Graph6("truncated size header".into()));
        }
        (bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | six(b)), &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(GraphError::Graph6("truncated size header".into()));
        }
        (bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | six(b)), &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() != needed {
        return Err(GraphError::Graph6(format!(
            "expected {needed} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = six(body[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge_at(i, j, 0)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// The graph families available as constructors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// Star with the given number of leaves.
    Star(usize),
    /// Two adjacent centers carrying `a` and `b` pendant leaves.
    DoubleStar(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph, GraphError> {
        let fail = |m: &str| Err(GraphError::Family(m.to_string()));
        let g = match self {
            Family::Complete(n) => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?
            }
            Family::Path(n) => {
                if n == 0 {
                    return fail("path needs at least one vertex");
                }
                Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))?
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return fail("cycle needs at least three vertices");
                }
                Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))?
            }
            Family::Star(leaves) => Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))?,
            Family::DoubleStar(a, b) => {
                // centers 0 and 1; leaves 2..2+a on 0, then b leaves on 1
                let edges = std::iter::once((0, 1))
                    .chain((0..a).map(|i| (0, 2 + i)))
                    .chain((0..b).map(|i| (1, 2 + a + i)));
                Graph::from_edges(a + b + 2, edges)?
            }
        };
        Ok(g)
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// `complete:4`, `path:5`, `cycle:6`, `star:3`, `double-star:1,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: String| GraphError::Family(m);
        let (name, params) = s.split_once(':').ok_or_else(|| err(format!("`{s}`: expected name:params")))?;
        let nums = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(format!("`{s}`: {e}")))?;
        let one = |nums: &[usize]| match nums {
            [x] => Ok(*x),
            _ => Err(err(format!("`{name}` takes exactly one parameter"))),
        };
        match name {
            "complete" | "K" => Ok(Family::Complete(one(&nums)?)),
            "path" | "P" => Ok(Family::Path(one(&nums)?)),
            "cycle" | "C" => Ok(Family::Cycle(one(&nums)?)),
            "star" => Ok(Family::Star(one(&nums)?)),
            "double-star" | "double_star" => match nums.as_slice() {
                [a, b] => Ok(Family::DoubleStar(*a, *b)),
                _ => Err(err("`double-star` takes two parameters a,b".into())),
            },
            other => Err(err(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::DoubleStar(a, b) => write!(f, "double-star:{a},{b}"),
        }
    }
}

/// Convenience wrapper around [`Family::build`].
pub fn make_family(family: Family) -> Result<Graph, GraphError> {
    family.build()
}

/// G(n, 1/2): every pair becomes an edge independently with probability 1/2.
pub fn random_graph<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(0.5) {
                g.add_edge_at(u, v, 0).expect("u < v < n");
            }
        }
    }
    g
}
