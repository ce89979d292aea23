//! Planarity testing by path addition (Demoucron, Malgrange and Pertuiset).
//!
//! Each biconnected block is embedded separately: start from a cycle, then
//! repeatedly pick a fragment (bridge) of the block relative to the embedded
//! part, prefer one that fits in a single face, and route a path through it
//! across that face. A fragment with no admissible face proves the block
//! non-planar. Block embeddings are glued at cut vertices by concatenating
//! their cyclic orders, which keeps every component on the sphere.

use std::collections::VecDeque;

use crate::graph::Dart;

use super::simple::SimpleGraph;

/// A genus-0 rotation system for `g`, or `None` if `g` is not planar.
pub fn planar_rotation(g: &SimpleGraph) -> Option<Vec<Vec<Dart>>> {
    let n = g.vertex_count();
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = g.edges()[block[0]];
            order[u].push(v);
            order[v].push(u);
            continue;
        }
        for (v, cyclic) in embed_block(g, &block)? {
            order[v].extend(cyclic);
        }
    }
    let rotation = order
        .iter()
        .enumerate()
        .map(|(u, nbrs)| {
            nbrs.iter()
                .map(|&v| g.dart(u, v).expect("neighbor from edge list"))
                .collect()
        })
        .collect();
    Some(rotation)
}

/// Edge sets of the biconnected blocks (bridges are singleton blocks).
pub(crate) fn biconnected_blocks(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        incident[u].push((v, e));
        incident[v].push((u, e));
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, edge used to enter it, next incident index)
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, via, ref mut idx)) = frames.last_mut() {
            if *idx < incident[v].len() {
                let (w, e) = incident[v][*idx];
                *idx += 1;
                if e == via {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(parent, _, _)) = frames.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == via {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block with at least two edges. Returns the
/// clockwise neighbor order of each block vertex.
fn embed_block(g: &SimpleGraph, block: &[usize]) -> Option<Vec<(usize, Vec<usize>)>> {
    // local numbering
    let mut global: Vec<usize> = block
        .iter()
        .flat_map(|&e| {
            let (u, v) = g.edges()[e];
            [u, v]
        })
        .collect();
    global.sort_unstable();
    global.dedup();
    let local = |x: usize| global.binary_search(&x).expect("block vertex");
    let n = global.len();
    let edges: Vec<(usize, usize)> = block
        .iter()
        .map(|&e| {
            let (u, v) = g.edges()[e];
            (local(u), local(v))
        })
        .collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }

    let mut in_h = vec![false; n];
    let mut edge_in_h = vec![false; edges.len()];
    let mut embedded_edges = 0;

    let cycle = find_cycle(&adj);
    for i in 0..cycle.len() {
        let (x, y) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[x] = true;
        let e = adj[x].iter().find(|&&(w, _)| w == y).expect("cycle edge").1;
        edge_in_h[e] = true;
        embedded_edges += 1;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded_edges < edges.len() {
        let fragments = fragments(&adj, &edges, &in_h, &edge_in_h);
        let membership: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut m = vec![false; n];
                for &x in f {
                    m[x] = true;
                }
                m
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|&a| membership[f][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("at least one fragment while edges remain");
        let path = fragment_path(&adj, &fragments[fi], &in_h);
        for w in path.windows(2) {
            let e = adj[w[0]].iter().find(|&&(x, _)| x == w[1]).expect("path edge").1;
            edge_in_h[e] = true;
            embedded_edges += 1;
        }
        for &x in &path {
            in_h[x] = true;
        }
        let face = faces.swap_remove(face_index);
        let (first, second) = split_face(&face, &path);
        faces.push(first);
        faces.push(second);
    }

    // successor at v of u is w whenever u -> v -> w is a face step
    let mut next: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            next[v].push((u, w));
        }
    }
    let mut result = Vec::with_capacity(n);
    for v in 0..n {
        let succ = &next[v];
        let start = succ[0].0;
        let mut cyclic = vec![global[start]];
        let mut cur = start;
        loop {
            cur = succ.iter().find(|&&(u, _)| u == cur).expect("successor").1;
            if cur == start {
                break;
            }
            cyclic.push(global[cur]);
        }
        debug_assert_eq!(cyclic.len(), adj[v].len());
        result.push((global[v], cyclic));
    }
    Some(result)
}

fn find_cycle(adj: &[Vec<(usize, usize)>]) -> Vec<usize> {
    // BFS tree from vertex 0; any non-tree edge closes a cycle through the
    // lowest common ancestor of its endpoints.
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    let mut closing = None;
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adj[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                via[w] = e;
                queue.push_back(w);
            } else if e != via[v] && closing.is_none() {
                closing = Some((v, w));
            }
        }
    }
    let (mut x, mut y) = closing.expect("a biconnected block with two or more edges has a cycle");
    let mut left = vec![x];
    let mut right = vec![y];
    while x != y {
        if depth[x] >= depth[y] {
            x = parent[x];
            left.push(x);
        } else {
            y = parent[y];
            right.push(y);
        }
    }
    // left ends at the ancestor; right ends there too
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

struct Fragment {
    /// Embedded vertices the fragment touches.
    attachments: Vec<usize>,
    /// Unembedded vertices inside the fragment (empty for a chord).
    interior: Vec<usize>,
}

fn fragments(
    adj: &[Vec<(usize, usize)>],
    edges: &[(usize, usize)],
    in_h: &[bool],
    edge_in_h: &[bool],
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if !edge_in_h[e] && in_h[u] && in_h[v] {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
            });
        }
    }
    let n = adj.len();
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < interior.len() {
            let x = interior[i];
            i += 1;
            for &(y, _) in &adj[x] {
                if in_h[y] {
                    attachments.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    interior.push(y);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment {
            attachments,
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &[Vec<(usize, usize)>], frag: &Fragment, in_h: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &(x, _) in &adj[start] {
        if !in_h[x] && frag.interior.contains(&x) && parent[x] == usize::MAX {
            parent[x] = start;
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &(y, _) in &adj[x] {
            if in_h[y] {
                if y != start {
                    let mut path = vec![y, x];
                    let mut cur = x;
                    while parent[cur] != start {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.push(start);
                    path.reverse();
                    return path;
                }
            } else if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Splits an oriented face cycle along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], path[path.len() - 1]);
    let ia = face.iter().position(|&x| x == a).expect("path start on face");
    let ib = face.iter().position(|&x| x == b).expect("path end on face");
    let k = face.len();
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(face[i]);
            if i == to {
                break;
            }
            i = (i + 1) % k;
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    // a ... b along the face, then back to a through the path
    let mut first = walk(ia, ib);
    first.extend(interior.iter().rev());
    // b ... a along the face, then back to b through the path
    let mut second = walk(ib, ia);
    second.extend(interior.iter());
    (first, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::faces::{is_rotation_of, rotation_genus};

    fn check_planar(g: &SimpleGraph) -> bool {
        match planar_rotation(g) {
            Some(rot) => {
                assert!(is_rotation_of(g, &rot));
                assert!(rotation_genus(g, &rot).plane);
                true
            }
            None => false,
        }
    }

    #[test]
    fn small_complete_graphs() {
        assert!(check_planar(&SimpleGraph::complete(3)));
        assert!(check_planar(&SimpleGraph::complete(4)));
        assert!(!check_planar(&SimpleGraph::complete(5)));
    }

    #[test]
    fn k33_is_not_planar() {
        let g = SimpleGraph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(!check_planar(&g));
    }

    #[test]
    fn blocks_of_bowtie_and_path() {
        // two triangles sharing vertex 2, plus pendant edge 4-5
        let g = SimpleGraph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5)]).unwrap();
        let mut blocks = biconnected_blocks(&g);
        blocks.sort();
        assert_eq!(blocks.len(), 3);
        assert!(check_planar(&g));
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let g = SimpleGraph::new(5, SimpleGraph::complete(5).edges().iter().copied().filter(|&e| e != (3, 4)))
            .unwrap();
        assert!(check_planar(&g));
    }

    #[test]
    fn petersen_is_not_planar() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = SimpleGraph::new(10, outer.chain(spokes).chain(inner)).unwrap();
        assert!(!check_planar(&g));
    }

    #[test]
    fn empty_and_edgeless() {
        assert!(check_planar(&SimpleGraph::new(0, []).unwrap()));
        assert!(check_planar(&SimpleGraph::new(3, []).unwrap()));
    }
}
