//! Local rewrites that keep an embedding plane: the seven-vertex expansion
//! of a degree-3 vertex and the two-edge reconnection across components.

use crate::embedding::{genus, trace_faces};
use crate::graph::{EmbeddedGraph, Vertex};

use super::ConstructError;

/// Replaces the degree-3 vertex `w` by a seven-vertex gadget drawn inside a
/// small disk around it, growing a `(3^p | 3^p)` realization to
/// `(3^{p+3} | 3^{p+3})`.
///
/// With `w`'s clockwise neighbors `n1, n2, n3`, the gadget has `t, s, u1,
/// u2` in `w`'s part and `r1, r2, z` in the other part. `t` keeps `w`'s
/// index and its edge to `n1`; `u1` and `u2` take over the edges to `n2`
/// and `n3`. New vertices are appended to their parts in the order
/// `s, u1, u2` and `r1, r2, z`.
pub fn expand_vertex(g: &EmbeddedGraph, w: Vertex) -> Result<EmbeddedGraph, ConstructError> {
    let graph = g.graph();
    let in_range = match w {
        Vertex::A(u) => u < graph.p(),
        Vertex::B(v) => v < graph.q(),
    };
    if !in_range {
        return Err(ConstructError::BadParameter(format!("vertex {w} does not exist")));
    }
    let degree = graph.degree(w);
    if degree != 3 {
        return Err(ConstructError::BadDegree { vertex: w, degree });
    }
    if !genus(g).plane {
        return Err(ConstructError::NotPlaneInput);
    }

    let (mut a_rot, mut b_rot) = g.neighbor_rotation();
    let (own, other, x) = match w {
        Vertex::A(u) => (&mut a_rot, &mut b_rot, u),
        Vertex::B(v) => (&mut b_rot, &mut a_rot, v),
    };
    let [n1, n2, n3] = [own[x][0], own[x][1], own[x][2]];
    let t = x;
    let (s, u1, u2) = (own.len(), own.len() + 1, own.len() + 2);
    let (r1, r2, z) = (other.len(), other.len() + 1, other.len() + 2);

    let replace = |list: &mut Vec<usize>, with: usize| {
        let slot = list.iter_mut().find(|y| **y == x).expect("neighbor lists w");
        *slot = with;
    };
    replace(&mut other[n2], u1);
    replace(&mut other[n3], u2);

    own[t] = vec![r1, r2, n1];
    own.push(vec![z, r2, r1]);
    own.push(vec![n2, z, r1]);
    own.push(vec![z, n3, r2]);
    other.push(vec![u1, s, t]);
    other.push(vec![s, u2, t]);
    other.push(vec![u2, s, u1]);

    let out = EmbeddedGraph::from_rotation_lists(&a_rot, &b_rot)
        .expect("gadget rotation is consistent");
    debug_assert!(genus(&out).plane);
    Ok(out)
}

/// For each edge, whether removing it disconnects its component. Only
/// meaningful for plane embeddings, where an edge is a bridge exactly when
/// both of its darts lie on the same face.
pub fn bridges(g: &EmbeddedGraph) -> Vec<bool> {
    let mut face_of = vec![0; g.graph().dart_count()];
    for (i, face) in trace_faces(g).faces().iter().enumerate() {
        for d in face {
            face_of[d.id()] = i;
        }
    }
    (0..g.graph().edge_count())
        .map(|e| face_of[2 * e] == face_of[2 * e + 1])
        .collect()
}

/// Swaps the B endpoints of `e1 = (x1, y1)` and `e2 = (x2, y2)`, two edges
/// given as `(A index, B index)` in different components: the result has
/// `(x1, y2)` and `(x2, y1)` instead, each in the rotational slots of the
/// edge it replaces.
///
/// Both components must be plane. In a plane component every edge borders
/// a face that can be taken as the outer one, so this is the only
/// precondition on the position of the edges. The component count drops
/// by one unless both edges are bridges.
pub fn reconnect(
    g: &EmbeddedGraph,
    e1: (usize, usize),
    e2: (usize, usize),
) -> Result<EmbeddedGraph, ConstructError> {
    let graph = g.graph();
    for (u, v) in [e1, e2] {
        if u >= graph.p() || v >= graph.q() || !graph.has_edge(u, v) {
            return Err(ConstructError::EdgeMissing { u, v });
        }
    }
    let ((x1, y1), (x2, y2)) = (e1, e2);
    let (_, labels) = graph.component_labels();
    let component = |u: usize| labels[graph.vertex_id(Vertex::A(u))];
    if component(x1) == component(x2) {
        return Err(ConstructError::SameComponent);
    }
    for (u, v) in [(x1, y2), (x2, y1)] {
        if graph.has_edge(u, v) {
            return Err(ConstructError::WouldDuplicate { u, v });
        }
    }
    let report = genus(g);
    for c in [component(x1), component(x2)] {
        if report.components[c].genus != 0 {
            return Err(ConstructError::NotOnOuterFace);
        }
    }

    let (mut a_rot, mut b_rot) = g.neighbor_rotation();
    let swap = |list: &mut Vec<usize>, from: usize, to: usize| {
        let slot = list.iter_mut().find(|y| **y == from).expect("edge endpoint");
        *slot = to;
    };
    swap(&mut a_rot[x1], y1, y2);
    swap(&mut a_rot[x2], y2, y1);
    swap(&mut b_rot[y1], x1, x2);
    swap(&mut b_rot[y2], x2, x1);
    let out = EmbeddedGraph::from_rotation_lists(&a_rot, &b_rot)
        .expect("reconnection keeps the rotation consistent");
    debug_assert!(genus(&out).plane);
    Ok(out)
}
