//! Test-side reference checks written against neighbor lists only, so they
//! share no code with the library's face tracer or verifier.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use bireg_core::graph::EmbeddedGraph;

/// Vertex ids: A(u) = u, B(v) = p + v.
pub struct Map {
    pub p: usize,
    pub rot: Vec<Vec<usize>>,
}

pub fn map_of(g: &EmbeddedGraph) -> Map {
    let (a_rot, b_rot) = g.neighbor_rotation();
    let p = a_rot.len();
    let mut rot: Vec<Vec<usize>> = a_rot.iter().map(|r| r.iter().map(|v| p + v).collect()).collect();
    rot.extend(b_rot.iter().cloned());
    Map { p, rot }
}

/// Connected components over the neighbor lists, by depth-first search.
pub fn components(rot: &[Vec<usize>]) -> Vec<usize> {
    let mut label = vec![usize::MAX; rot.len()];
    let mut next = 0;
    for s in 0..rot.len() {
        if label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = next;
        while let Some(v) = stack.pop() {
            for &w in &rot[v] {
                if label[w] == usize::MAX {
                    label[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Faces of a rotation system given as clockwise neighbor lists: after the
/// directed edge (u, v) comes (v, w) with w the clockwise successor of u
/// around v. Returns each face as its sequence of directed edges.
pub fn faces(rot: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
    for (v, nbrs) in rot.iter().enumerate() {
        for (i, &w) in nbrs.iter().enumerate() {
            pos.insert((v, w), i);
        }
    }
    let mut used = BTreeSet::new();
    let mut out = Vec::new();
    for (v, nbrs) in rot.iter().enumerate() {
        for &w in nbrs {
            if used.contains(&(v, w)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut x, mut y) = (v, w);
            while used.insert((x, y)) {
                face.push((x, y));
                let i = pos[&(y, x)];
                let z = rot[y][(i + 1) % rot[y].len()];
                (x, y) = (y, z);
            }
            out.push(face);
        }
    }
    out
}

/// Genus of each connected component, from `V - E + F = 2 - 2g`.
pub fn genera(rot: &[Vec<usize>]) -> Vec<i64> {
    let label = components(rot);
    let k = label.iter().copied().max().map_or(0, |m| m + 1);
    let mut v = vec![0i64; k];
    let mut e2 = vec![0i64; k];
    let mut f = vec![0i64; k];
    for (x, nbrs) in rot.iter().enumerate() {
        v[label[x]] += 1;
        e2[label[x]] += nbrs.len() as i64;
    }
    for face in faces(rot) {
        f[label[face[0].0]] += 1;
    }
    (0..k)
        .map(|c| {
            // an isolated vertex is a sphere with one face
            let faces = if e2[c] == 0 { 1 } else { f[c] };
            (2 - v[c] + e2[c] / 2 - faces) / 2
        })
        .collect()
}

pub fn is_plane(rot: &[Vec<usize>]) -> bool {
    genera(rot).iter().all(|&g| g == 0)
}

/// Simple, bipartite with A before B, and symmetric.
pub fn well_formed(m: &Map) -> bool {
    let mut seen = BTreeSet::new();
    for (x, nbrs) in m.rot.iter().enumerate() {
        for &y in nbrs {
            let crosses = (x < m.p) != (y < m.p);
            if !crosses || y >= m.rot.len() || !seen.insert((x, y)) {
                return false;
            }
        }
    }
    seen.iter().all(|&(x, y)| seen.contains(&(y, x)))
}

/// Everything the acceptance sweep demands of a realization of
/// `(a^p | b^q)`, recomputed from scratch.
pub fn certify(g: &EmbeddedGraph, a: u64, p: u64, b: u64, q: u64) -> Result<(), String> {
    let m = map_of(g);
    if !well_formed(&m) {
        return Err("not a simple bipartite rotation system".into());
    }
    if (m.p as u64, (m.rot.len() - m.p) as u64) != (p, q) {
        return Err(format!("part sizes {} and {}", m.p, m.rot.len() - m.p));
    }
    if m.rot[..m.p].iter().any(|r| r.len() as u64 != a) || m.rot[m.p..].iter().any(|r| r.len() as u64 != b) {
        return Err("degrees do not match".into());
    }
    let edges: u64 = m.rot[..m.p].iter().map(|r| r.len() as u64).sum();
    if edges != a * p || edges != b * q {
        return Err(format!("edge count {edges}"));
    }
    if p + q >= 3 && edges + 4 > 2 * (p + q) {
        return Err("Euler bound violated".into());
    }
    if !is_plane(&m.rot) {
        return Err(format!("genera {:?}", genera(&m.rot)));
    }
    Ok(())
}
