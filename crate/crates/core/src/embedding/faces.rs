use serde::Serialize;

use crate::graph::{Dart, EmbeddedGraph};

use super::simple::SimpleGraph;

/// Face boundaries traced from a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<Dart>>,
    face_component: Vec<usize>,
    per_component: Vec<usize>,
}

impl FaceSet {
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Component label of each face, aligned with [`FaceSet::faces`].
    pub fn face_component(&self) -> &[usize] {
        &self.face_component
    }

    /// Number of traced faces in each connected component. An isolated
    /// vertex has no darts and therefore no traced face.
    pub fn per_component(&self) -> &[usize] {
        &self.per_component
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentGenus {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub components: Vec<ComponentGenus>,
    /// Every component has genus 0.
    pub plane: bool,
}

impl GenusReport {
    pub fn total_faces(&self) -> usize {
        self.components.iter().map(|c| c.faces).sum()
    }
}

/// Cycles of the face permutation: the dart after `d` is the clockwise
/// successor of `reverse(d)` around the head of `d`.
pub(crate) fn face_cycles(next: &[Dart]) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; next.len()];
    let mut faces = Vec::new();
    for start in 0..next.len() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = Dart::from_id(start);
        while !seen[d.id()] {
            seen[d.id()] = true;
            face.push(d);
            d = next[d.reverse().id()];
        }
        faces.push(face);
    }
    faces
}

/// Number of face cycles, reusing `stamp` as scratch space.
pub(crate) fn count_faces(next: &[Dart], stamp: &mut [u32], round: u32) -> usize {
    let mut faces = 0;
    for start in 0..next.len() {
        if stamp[start] == round {
            continue;
        }
        faces += 1;
        let mut d = start;
        while stamp[d] != round {
            stamp[d] = round;
            d = next[d ^ 1].id();
        }
    }
    faces
}

fn build_faceset(
    next: &[Dart],
    labels: &(usize, Vec<usize>),
    tail: impl Fn(Dart) -> usize,
) -> FaceSet {
    let faces = face_cycles(next);
    let face_component: Vec<usize> = faces.iter().map(|f| labels.1[tail(f[0])]).collect();
    let mut per_component = vec![0; labels.0];
    for &c in &face_component {
        per_component[c] += 1;
    }
    FaceSet {
        faces,
        face_component,
        per_component,
    }
}

fn report(
    labels: &(usize, Vec<usize>),
    edge_tails: impl Iterator<Item = usize>,
    faces: &FaceSet,
) -> GenusReport {
    let (count, label) = labels;
    let mut comps = vec![
        ComponentGenus {
            vertices: 0,
            edges: 0,
            faces: 0,
            genus: 0
        };
        *count
    ];
    for &l in label {
        comps[l].vertices += 1;
    }
    for t in edge_tails {
        comps[label[t]].edges += 1;
    }
    for (c, &f) in faces.per_component().iter().enumerate() {
        comps[c].faces = f;
    }
    for c in &mut comps {
        // the sphere around an isolated vertex is a single face
        if c.edges == 0 {
            c.faces = 1;
        }
        let euler = 2 + c.edges as i64 - c.vertices as i64 - c.faces as i64;
        debug_assert!(euler >= 0 && euler % 2 == 0, "bad Euler characteristic {c:?}");
        c.genus = (euler / 2) as usize;
    }
    let plane = comps.iter().all(|c| c.genus == 0);
    GenusReport {
        components: comps,
        plane,
    }
}

pub fn trace_faces(g: &EmbeddedGraph) -> FaceSet {
    let graph = g.graph();
    build_faceset(&g.successors(), &graph.component_labels(), |d| {
        graph.vertex_id(graph.tail(d))
    })
}

pub fn genus(g: &EmbeddedGraph) -> GenusReport {
    let graph = g.graph();
    let labels = graph.component_labels();
    let faces = build_faceset(&g.successors(), &labels, |d| graph.vertex_id(graph.tail(d)));
    report(&labels, graph.edges().iter().map(|e| e.0), &faces)
}

/// Successor table for a rotation on a [`SimpleGraph`].
pub(crate) fn successors(g: &SimpleGraph, rotation: &[Vec<Dart>]) -> Vec<Dart> {
    let mut next = vec![Dart::from_id(0); 2 * g.edge_count()];
    for darts in rotation {
        for (i, &d) in darts.iter().enumerate() {
            next[d.id()] = darts[(i + 1) % darts.len()];
        }
    }
    next
}

pub fn trace_rotation_faces(g: &SimpleGraph, rotation: &[Vec<Dart>]) -> FaceSet {
    build_faceset(&successors(g, rotation), &g.component_labels(), |d| g.tail(d))
}

pub fn rotation_genus(g: &SimpleGraph, rotation: &[Vec<Dart>]) -> GenusReport {
    let labels = g.component_labels();
    let faces = build_faceset(&successors(g, rotation), &labels, |d| g.tail(d));
    report(&labels, g.edges().iter().map(|e| e.0), &faces)
}

/// Checks that `rotation` lists every dart of `g` exactly once, at its tail.
pub fn is_rotation_of(g: &SimpleGraph, rotation: &[Vec<Dart>]) -> bool {
    if rotation.len() != g.vertex_count() {
        return false;
    }
    let mut seen = vec![false; 2 * g.edge_count()];
    for (v, darts) in rotation.iter().enumerate() {
        for &d in darts {
            if d.id() >= seen.len() || g.tail(d) != v || std::mem::replace(&mut seen[d.id()], true) {
                return false;
            }
        }
    }
    seen.into_iter().all(|s| s)
}
