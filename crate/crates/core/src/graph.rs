//! Simple undirected graphs on the vertex set `1..=n`.
//!
//! Every public interface speaks 1-based labels. The interchange format is a
//! plain edge list: a header line `n m` followed by `m` lines `u v`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::csr::Csr;
use crate::error::{Error, Result};

/// An immutable simple graph on `[n]`.
///
/// Edges are stored normalised (`u < v`) and sorted, so two graphs with the
/// same edge set compare equal regardless of how they were built.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // row v for v in 1..=n, sorted; row 0 is empty
    adj: Csr,
}

impl LabeledGraph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            check_edge(n, u, v).map_err(Error::InvalidGraph)?;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {} {}", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Edgeless graph on `[n]`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|v| (v, v + 1)))
    }

    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        // sorted edges give sorted rows: in row x, every (u, x) with u < x
        // precedes every (x, v)
        let adj = Csr::from_entries(n + 1, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]));
        Self { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.row(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_len(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        self.edges.binary_search(&(a, b)).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> VertexPartition {
        let mut seen = vec![false; self.n + 1];
        let mut parts = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut part = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in self.adj.row(u) {
                    if !seen[w] {
                        seen[w] = true;
                        part.push(w);
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        VertexPartition { parts }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The subgraph induced on `vertices` (sorted, distinct), relabelled
    /// order-preservingly onto `1..=vertices.len()`.
    pub fn induced_relabeled(&self, vertices: &[usize]) -> LabeledGraph {
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i + 1;
        }
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != 0 && index[v] != 0)
            .map(|&(u, v)| {
                let (a, b) = (index[u], index[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        Self::from_sorted(vertices.len(), edges)
    }

    /// Canonical edge-list text: header `n m`, then one sorted edge per line.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

fn check_edge(n: usize, u: usize, v: usize) -> std::result::Result<(), String> {
    if u == v {
        return Err(format!("self-loop at vertex {u}"));
    }
    if u == 0 || v == 0 || u > n || v > n {
        return Err(format!("endpoint out of range 1..={n} in edge {u} {v}"));
    }
    Ok(())
}

/// Parses the edge-list format. Errors name the 1-based line they occur on.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line `n m`".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            message: "vertex count must be positive".into(),
        });
    }

    let mut edges = BTreeSet::new();
    let mut last_line = header_line;
    for (line, body) in lines.by_ref() {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, body)?;
        check_edge(n, u, v).map_err(|message| Error::Parse { line, message })?;
        if !edges.insert((u.min(v), u.max(v))) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
        last_line = line;
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Ok(LabeledGraph::from_sorted(n, edges.into_iter().collect()))
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got {body:?}"),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {s:?}"),
        })
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

/// A partition of `[n]` into nonempty, pairwise disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn into_parts(self) -> Vec<Vec<usize>> {
        self.parts
    }
}
