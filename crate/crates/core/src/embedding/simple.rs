use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{BipartiteGraph, Dart};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimpleGraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} out of range for {2} vertices")]
    IndexOutOfRange(usize, usize, usize),
}

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted, so dart `2e` leaves the
/// smaller endpoint. A bipartite graph converted with
/// [`SimpleGraph::from_bipartite`] keeps its edge and dart numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, SimpleGraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (x, y) in edges {
            if x >= n || y >= n {
                return Err(SimpleGraphError::IndexOutOfRange(x, y, n));
            }
            if x == y {
                return Err(SimpleGraphError::Loop(x));
            }
            let e = (x.min(y), x.max(y));
            if !seen.insert(e) {
                return Err(SimpleGraphError::DuplicateEdge(e.0, e.1));
            }
            list.push(e);
        }
        list.sort_unstable();
        Ok(SimpleGraph { n, edges: list })
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SimpleGraph::new(n, edges).expect("complete graph is simple")
    }

    pub fn from_bipartite(g: &BipartiteGraph) -> Self {
        let p = g.p();
        SimpleGraph {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| (u, p + v)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn tail(&self, d: Dart) -> usize {
        let (u, v) = self.edges[d.edge()];
        if d.is_forward() {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.reverse())
    }

    /// The dart from `u` to `v`.
    pub fn dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.edge_index(u, v).map(|e| Dart::new(e, u < v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn darts_by_tail(&self) -> Vec<Vec<Dart>> {
        let mut out = vec![Vec::new(); self.n];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            out[u].push(Dart::new(e, true));
            out[v].push(Dart::new(e, false));
        }
        out
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Component count and per-vertex labels, numbered by first vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }
}
