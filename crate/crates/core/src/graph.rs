//! Finite simple connected graphs with stably indexed edges.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple connected graph.
///
/// Edge `i` is the `i`-th pair given at construction; indices are never
/// reordered, so every exponent vector in the crate is indexed by them.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    lookup: HashMap<(usize, usize), usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(value: GraphJson) -> Result<Self> {
        Graph::new(value.n, value.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl Graph {
    /// Builds and validates a graph on vertices `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            lookup: HashMap::new(),
        };
        for (u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            let key = (u.min(v), u.max(v));
            if key.1 >= n {
                return Err(Error::InvalidParameters(format!(
                    "vertex {} out of range for {n} vertices",
                    key.1
                )));
            }
            if g.lookup.contains_key(&key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            let idx = g.edges.len();
            g.lookup.insert(key, idx);
            g.edges.push(key);
            g.adj[u].push((v, idx));
            g.adj[v].push((u, idx));
        }
        if g.edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`, smaller vertex first.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge index)` pairs incident to `v`.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup.get(&(u.min(v), u.max(v))).copied()
    }

    /// The endpoint of `e` that is not `v`, if `v` lies on `e`.
    pub fn other_end(&self, e: usize, v: usize) -> Option<usize> {
        let (a, b) = self.edges[e];
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(w, _) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Vertex–edge incidence matrix (rows are vertices).
    pub fn incidence_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.edges.len()]; self.n];
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            a[u][j] = 1;
            a[v][j] = 1;
        }
        a
    }

    /// Degree vector `A·x` of an exponent vector over the edges.
    ///
    /// Sums are taken in `u64`; with `u32` exponents and fewer than 2^31
    /// edges they cannot overflow.
    pub fn vertex_degrees(&self, exponents: &[u32]) -> Vec<u64> {
        let mut d = vec![0u64; self.n];
        for (j, &x) in exponents.iter().enumerate() {
            if x > 0 {
                let (u, v) = self.edges[j];
                d[u] += u64::from(x);
                d[v] += u64::from(x);
            }
        }
        d
    }

    /// Stable textual form: one `u v` line per edge in index order.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            // validation errors surface through serde as custom messages
            Error::Json(e.to_string())
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Parses the edge-list format: one `u v` pair per line, `#` starts a
/// comment, blank lines are ignored. Vertices are `0..=max seen`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_vertex = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let malformed = || Error::MalformedLine {
            line: lineno + 1,
            text: raw.to_string(),
        };
        let mut parts = line.split_whitespace();
        let u: usize = parts.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
        let v: usize = parts.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
        if parts.next().is_some() {
            return Err(malformed());
        }
        max_vertex = Some(max_vertex.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    Graph::new(n, edges)
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Graph::from_json(s)
        } else {
            parse_graph(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_c4() {
        let g = parse_graph("0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edge(3), (0, 3));
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("# square\n0 1 # first\n\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn rejects_loop() {
        assert_eq!(parse_graph("0 1\n1 2\n2 0\n0 0"), Err(Error::LoopEdge(0)));
    }

    #[test]
    fn rejects_duplicate() {
        assert_eq!(parse_graph("0 1\n1 2\n2 0\n1 0"), Err(Error::DuplicateEdge(0, 1)));
    }

    #[test]
    fn rejects_disconnected() {
        assert_eq!(parse_graph("0 1\n1 2\n2 0\n3 4\n4 5\n5 3"), Err(Error::Disconnected));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(
            parse_graph("0 1\n1 x\n"),
            Err(Error::MalformedLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("0 1 2\n"),
            Err(Error::MalformedLine { line: 1, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = parse_graph("0 1\n1 2\n2 0").unwrap();
        let text = g.to_json();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#);
        assert_eq!(Graph::from_json(&text).unwrap(), g);
        assert_eq!(text.parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn json_isolated_vertex_is_disconnected() {
        let err = Graph::from_json(r#"{"n":4,"edges":[[0,1],[1,2],[2,0]]}"#).unwrap_err();
        assert!(matches!(err, Error::Json(msg) if msg.contains("disconnected")));
    }
}
