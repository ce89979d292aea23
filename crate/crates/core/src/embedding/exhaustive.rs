use std::ops::ControlFlow;

use itertools::Itertools;
use thiserror::Error;

use crate::graph::Dart;

use super::faces::{count_faces, face_cycles};
use super::simple::SimpleGraph;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("{required} rotation systems exceed the budget of {budget}")]
pub struct BudgetExceeded {
    pub required: u128,
    pub budget: u64,
}

/// Number of rotation systems of `g`, `Π (deg(v) - 1)!`, saturating.
pub fn rotation_count(g: &SimpleGraph) -> u128 {
    g.degrees()
        .into_iter()
        .map(|d| (1..d.max(1) as u128).product::<u128>())
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// One rotation system visited by [`for_each_rotation`].
pub struct RotationView<'a> {
    graph: &'a SimpleGraph,
    next: &'a [Dart],
    faces: usize,
    components: usize,
    isolated: usize,
    index: u64,
}

impl RotationView<'_> {
    /// Position of this rotation system in the enumeration order.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn face_count(&self) -> usize {
        self.faces
    }

    /// Euler characteristic summed over components equals `2·components`.
    pub fn is_plane(&self) -> bool {
        let chi = self.graph.vertex_count() as i64 - self.graph.edge_count() as i64
            + (self.faces + self.isolated) as i64;
        chi == 2 * self.components as i64
    }

    pub fn faces(&self) -> Vec<Vec<Dart>> {
        face_cycles(self.next)
    }

    pub fn rotation(&self) -> Vec<Vec<Dart>> {
        let mut rot = vec![Vec::new(); self.graph.vertex_count()];
        for (v, darts) in self.graph.darts_by_tail().into_iter().enumerate() {
            if let Some(&first) = darts.first() {
                let mut d = first;
                loop {
                    rot[v].push(d);
                    d = self.next[d.id()];
                    if d == first {
                        break;
                    }
                }
            }
        }
        rot
    }
}

/// Visits every rotation system of `g` in a fixed odometer order.
///
/// With `mirror_quotient`, the first vertex of degree at least 3 only takes
/// one order from each mirror pair, which halves the work and loses nothing
/// for genus questions since reversing every cyclic order preserves genus.
pub fn for_each_rotation(
    g: &SimpleGraph,
    budget: u64,
    mirror_quotient: bool,
    mut visit: impl FnMut(&RotationView<'_>) -> ControlFlow<()>,
) -> Result<(), BudgetExceeded> {
    let required = rotation_count(g);
    if required > budget as u128 {
        return Err(BudgetExceeded { required, budget });
    }
    let by_tail = g.darts_by_tail();
    let quotient_vertex = if mirror_quotient {
        by_tail.iter().position(|d| d.len() >= 3)
    } else {
        None
    };
    // cyclic orders per vertex, first dart fixed
    let choices: Vec<Vec<Vec<Dart>>> = by_tail
        .iter()
        .enumerate()
        .map(|(v, darts)| match darts.split_first() {
            None => vec![Vec::new()],
            Some((&first, rest)) => rest
                .iter()
                .copied()
                .permutations(rest.len())
                .filter(|perm| {
                    Some(v) != quotient_vertex || perm.first() < perm.last()
                })
                .map(|perm| std::iter::once(first).chain(perm).collect())
                .collect(),
        })
        .collect();

    let (components, labels) = g.component_labels();
    let mut has_edge = vec![false; g.vertex_count()];
    for &(u, v) in g.edges() {
        has_edge[labels[u]] = true;
        has_edge[labels[v]] = true;
    }
    let isolated = has_edge[..components].iter().filter(|&&h| !h).count();

    let mut next = vec![Dart::from_id(0); 2 * g.edge_count()];
    let apply = |next: &mut Vec<Dart>, order: &[Dart]| {
        for (i, &d) in order.iter().enumerate() {
            next[d.id()] = order[(i + 1) % order.len()];
        }
    };
    let mut odometer = vec![0usize; choices.len()];
    for opts in &choices {
        apply(&mut next, &opts[0]);
    }
    let mut stamp = vec![0u32; next.len()];
    let mut round = 0u32;
    let mut index = 0u64;
    loop {
        round = round.wrapping_add(1);
        if round == 0 {
            stamp.iter_mut().for_each(|s| *s = 0);
            round = 1;
        }
        let faces = count_faces(&next, &mut stamp, round);
        let view = RotationView {
            graph: g,
            next: &next,
            faces,
            components,
            isolated,
            index,
        };
        if visit(&view).is_break() {
            return Ok(());
        }
        index += 1;
        // advance the odometer, last vertex fastest
        let mut v = choices.len();
        loop {
            if v == 0 {
                return Ok(());
            }
            v -= 1;
            odometer[v] += 1;
            if odometer[v] < choices[v].len() {
                apply(&mut next, &choices[v][odometer[v]]);
                break;
            }
            odometer[v] = 0;
            apply(&mut next, &choices[v][0]);
        }
    }
}

/// First genus-0 rotation system in enumeration order, if any.
pub fn exhaustive_rotation(
    g: &SimpleGraph,
    budget: u64,
) -> Result<Option<Vec<Vec<Dart>>>, BudgetExceeded> {
    let mut found = None;
    for_each_rotation(g, budget, true, |view| {
        if view.is_plane() {
            found = Some(view.rotation());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}
