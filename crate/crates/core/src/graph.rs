//! Bipartite graphs, darts and rotation systems.
//!
//! Vertices are indexed densely per part. Where a single index space is
//! needed (rotations, component labels) part A comes first: `A(u)` has global
//! id `u` and `B(v)` has global id `p + v`.
//!
//! Edge `e` contributes darts `2e` (tail in A) and `2e + 1` (tail in B).
//! Rotations list the darts leaving a vertex in clockwise order.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::pair::BiregularPair;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge A{u}-B{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge A{u}-B{v} out of range for parts of size {p} and {q}")]
    IndexOutOfRange { u: usize, v: usize, p: usize, q: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("rotation covers {got} vertices, graph has {expected}")]
    VertexCount { expected: usize, got: usize },
    #[error("rotation at {vertex} has length {got}, degree is {expected}")]
    RotationLength {
        vertex: Vertex,
        expected: usize,
        got: usize,
    },
    #[error("dart {dart} listed at {vertex} but leaves {tail}")]
    WrongTail {
        dart: usize,
        vertex: Vertex,
        tail: Vertex,
    },
    #[error("dart {0} listed more than once")]
    RepeatedDart(usize),
    #[error("{from} lists {to} but they are not adjacent")]
    NotAdjacent { from: Vertex, to: Vertex },
    #[error("{from} lists {to} but {to} does not list {from}")]
    Asymmetric { from: Vertex, to: Vertex },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    A(usize),
    B(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::A(u) => write!(f, "A{u}"),
            Vertex::B(v) => write!(f, "B{v}"),
        }
    }
}

/// A directed half of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(usize);

impl Dart {
    pub fn new(edge: usize, from_a: bool) -> Self {
        Dart(2 * edge + usize::from(!from_a))
    }

    pub fn from_id(id: usize) -> Self {
        Dart(id)
    }

    pub fn id(self) -> usize {
        self.0
    }

    pub fn edge(self) -> usize {
        self.0 / 2
    }

    /// True when the dart leaves the lower-numbered endpoint of its edge
    /// (the A endpoint in a bipartite graph).
    pub fn is_forward(self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn reverse(self) -> Self {
        Dart(self.0 ^ 1)
    }
}

/// A simple bipartite graph with parts of size `p` (A) and `q` (B).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    p: usize,
    q: usize,
    /// Sorted, duplicate free.
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        p: usize,
        q: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= p || v >= q {
                return Err(GraphError::IndexOutOfRange { u, v, p, q });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(BipartiteGraph { p, q, edges: list })
    }

    pub fn empty(p: usize, q: usize) -> Self {
        BipartiteGraph {
            p,
            q,
            edges: Vec::new(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn vertex_count(&self) -> usize {
        self.p + self.q
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u, v)).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn vertex_id(&self, vertex: Vertex) -> usize {
        match vertex {
            Vertex::A(u) => u,
            Vertex::B(v) => self.p + v,
        }
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        if id < self.p {
            Vertex::A(id)
        } else {
            Vertex::B(id - self.p)
        }
    }

    pub fn tail(&self, dart: Dart) -> Vertex {
        let (u, v) = self.edges[dart.edge()];
        if dart.is_forward() {
            Vertex::A(u)
        } else {
            Vertex::B(v)
        }
    }

    pub fn head(&self, dart: Dart) -> Vertex {
        self.tail(dart.reverse())
    }

    /// Dart from `from` to `to`, if the two vertices are adjacent.
    pub fn dart_between(&self, from: Vertex, to: Vertex) -> Option<Dart> {
        match (from, to) {
            (Vertex::A(u), Vertex::B(v)) => self.edge_index(u, v).map(|e| Dart::new(e, true)),
            (Vertex::B(v), Vertex::A(u)) => self.edge_index(u, v).map(|e| Dart::new(e, false)),
            _ => None,
        }
    }

    /// Degree lists of part A and part B in index order.
    pub fn degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut da = vec![0; self.p];
        let mut db = vec![0; self.q];
        for &(u, v) in &self.edges {
            da[u] += 1;
            db[v] += 1;
        }
        (da, db)
    }

    pub fn degree(&self, vertex: Vertex) -> usize {
        match vertex {
            Vertex::A(u) => self.edges.iter().filter(|e| e.0 == u).count(),
            Vertex::B(v) => self.edges.iter().filter(|e| e.1 == v).count(),
        }
    }

    /// Darts leaving each vertex, indexed by global id, in edge order.
    pub fn darts_by_tail(&self) -> Vec<Vec<Dart>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            out[u].push(Dart::new(e, true));
            out[self.p + v].push(Dart::new(e, false));
        }
        out
    }

    /// Whether the graph realizes `pair` in either orientation.
    pub fn is_biregular(&self, pair: &BiregularPair) -> bool {
        let (da, db) = self.degrees();
        let fits = |p: u64, a: u64, q: u64, b: u64| {
            self.p as u64 == p
                && self.q as u64 == q
                && da.iter().all(|&d| d as u64 == a)
                && db.iter().all(|&d| d as u64 == b)
        };
        fits(pair.p(), pair.a(), pair.q(), pair.b()) || fits(pair.q(), pair.b(), pair.p(), pair.a())
    }

    /// Connected component label of every vertex (global ids), labels
    /// numbered by first occurrence.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(u, v) in &self.edges {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, self.p + v));
            if ru != rv {
                parent[ru.max(rv)] = ru.min(rv);
            }
        }
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for x in 0..n {
            let root = find(&mut parent, x);
            if label[root] == usize::MAX {
                label[root] = count;
                count += 1;
            }
            label[x] = label[root];
        }
        (count, label)
    }

    pub fn components(&self) -> usize {
        self.component_labels().0
    }

    pub fn is_connected(&self) -> bool {
        self.components() <= 1
    }
}

/// A bipartite graph together with a rotation system.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EmbeddedGraph {
    graph: BipartiteGraph,
    rotation: Vec<Vec<Dart>>,
}

impl EmbeddedGraph {
    pub fn new(graph: BipartiteGraph, rotation: Vec<Vec<Dart>>) -> Result<Self, EmbeddingError> {
        let n = graph.vertex_count();
        if rotation.len() != n {
            return Err(EmbeddingError::VertexCount {
                expected: n,
                got: rotation.len(),
            });
        }
        let by_tail = graph.darts_by_tail();
        let mut seen = vec![false; graph.dart_count()];
        for (id, darts) in rotation.iter().enumerate() {
            let vertex = graph.vertex(id);
            if darts.len() != by_tail[id].len() {
                return Err(EmbeddingError::RotationLength {
                    vertex,
                    expected: by_tail[id].len(),
                    got: darts.len(),
                });
            }
            for &d in darts {
                if d.id() >= seen.len() || graph.tail(d) != vertex {
                    return Err(EmbeddingError::WrongTail {
                        dart: d.id(),
                        vertex,
                        tail: if d.id() < seen.len() {
                            graph.tail(d)
                        } else {
                            vertex
                        },
                    });
                }
                if std::mem::replace(&mut seen[d.id()], true) {
                    return Err(EmbeddingError::RepeatedDart(d.id()));
                }
            }
        }
        Ok(EmbeddedGraph { graph, rotation })
    }

    /// Embeds `graph` from neighbor orders: `a_rot[u]` lists the B
    /// neighbors of `A(u)` clockwise, `b_rot[v]` the A neighbors of `B(v)`.
    pub fn from_neighbors(
        graph: BipartiteGraph,
        a_rot: &[Vec<usize>],
        b_rot: &[Vec<usize>],
    ) -> Result<Self, EmbeddingError> {
        if a_rot.len() != graph.p() || b_rot.len() != graph.q() {
            return Err(EmbeddingError::VertexCount {
                expected: graph.vertex_count(),
                got: a_rot.len() + b_rot.len(),
            });
        }
        let mut rotation = Vec::with_capacity(graph.vertex_count());
        for (u, nbrs) in a_rot.iter().enumerate() {
            rotation.push(
                nbrs.iter()
                    .map(|&v| {
                        graph
                            .dart_between(Vertex::A(u), Vertex::B(v))
                            .ok_or(EmbeddingError::NotAdjacent {
                                from: Vertex::A(u),
                                to: Vertex::B(v),
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        for (v, nbrs) in b_rot.iter().enumerate() {
            rotation.push(
                nbrs.iter()
                    .map(|&u| {
                        graph
                            .dart_between(Vertex::B(v), Vertex::A(u))
                            .ok_or(EmbeddingError::NotAdjacent {
                                from: Vertex::B(v),
                                to: Vertex::A(u),
                            })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        EmbeddedGraph::new(graph, rotation)
    }

    /// Builds graph and embedding together from neighbor orders. The edge
    /// set is read off `a_rot` and must be mirrored exactly by `b_rot`.
    pub fn from_rotation_lists(
        a_rot: &[Vec<usize>],
        b_rot: &[Vec<usize>],
    ) -> Result<Self, EmbeddingError> {
        let (p, q) = (a_rot.len(), b_rot.len());
        let edges = a_rot
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().map(move |&v| (u, v)));
        let graph = BipartiteGraph::new(p, q, edges)?;
        let mut b_count = 0;
        for (v, nbrs) in b_rot.iter().enumerate() {
            for &u in nbrs {
                if u >= p || !graph.has_edge(u, v) {
                    return Err(EmbeddingError::Asymmetric {
                        from: Vertex::B(v),
                        to: Vertex::A(u),
                    });
                }
                b_count += 1;
            }
        }
        if b_count != graph.edge_count() {
            let (_, db) = graph.degrees();
            let v = (0..q).find(|&v| b_rot[v].len() != db[v]).unwrap_or(0);
            return Err(EmbeddingError::RotationLength {
                vertex: Vertex::B(v),
                expected: db[v],
                got: b_rot[v].len(),
            });
        }
        EmbeddedGraph::from_neighbors(graph, a_rot, b_rot)
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<Dart>] {
        &self.rotation
    }

    pub fn rotation_at(&self, vertex: Vertex) -> &[Dart] {
        &self.rotation[self.graph.vertex_id(vertex)]
    }

    /// Clockwise neighbor order at every vertex, split by part.
    pub fn neighbor_rotation(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let index = |d: Dart| match self.graph.head(d) {
            Vertex::A(i) | Vertex::B(i) => i,
        };
        let (a, b) = self.rotation.split_at(self.graph.p());
        (
            a.iter().map(|r| r.iter().map(|&d| index(d)).collect()).collect(),
            b.iter().map(|r| r.iter().map(|&d| index(d)).collect()).collect(),
        )
    }

    /// `next[d]` is the dart following `d` clockwise around its tail.
    pub fn successors(&self) -> Vec<Dart> {
        let mut next = vec![Dart(0); self.graph.dart_count()];
        for darts in &self.rotation {
            for (i, &d) in darts.iter().enumerate() {
                next[d.id()] = darts[(i + 1) % darts.len()];
            }
        }
        next
    }

    /// The same graph with every cyclic order reversed.
    pub fn mirrored(&self) -> Self {
        EmbeddedGraph {
            graph: self.graph.clone(),
            rotation: self
                .rotation
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    pub fn components(&self) -> usize {
        self.graph.components()
    }

    pub fn into_graph(self) -> BipartiteGraph {
        self.graph
    }
}

/// Places `second` beside `first`, shifting its indices past those of
/// `first` in each part.
pub fn disjoint_union(first: &EmbeddedGraph, second: &EmbeddedGraph) -> EmbeddedGraph {
    let (p1, q1) = (first.graph.p(), first.graph.q());
    let (mut a_rot, mut b_rot) = first.neighbor_rotation();
    let (a2, b2) = second.neighbor_rotation();
    a_rot.extend(a2.into_iter().map(|r| r.into_iter().map(|v| v + q1).collect()));
    b_rot.extend(b2.into_iter().map(|r| r.into_iter().map(|u| u + p1).collect()));
    EmbeddedGraph::from_rotation_lists(&a_rot, &b_rot)
        .expect("union of two valid embeddings is valid")
}
