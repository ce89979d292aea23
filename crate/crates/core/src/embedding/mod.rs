//! Face tracing, genus, and two independent planarity procedures.
//!
//! Rotations list outgoing darts clockwise. A face is traced by repeatedly
//! stepping from dart `d` to the clockwise successor of `reverse(d)` around
//! the head of `d`.

mod exhaustive;
mod faces;
mod planarity;
mod simple;

pub use exhaustive::{
    exhaustive_rotation, for_each_rotation, rotation_count, BudgetExceeded, RotationView,
};
pub use faces::{
    genus, is_rotation_of, rotation_genus, trace_faces, trace_rotation_faces, ComponentGenus,
    FaceSet, GenusReport,
};
pub use planarity::planar_rotation;
pub use simple::{SimpleGraph, SimpleGraphError};

use crate::graph::{BipartiteGraph, EmbeddedGraph};

/// Embeds `g` on the sphere if it is planar. The witness is re-checked by
/// face tracing before it is returned.
pub fn test_planarity(g: &BipartiteGraph) -> Option<EmbeddedGraph> {
    let simple = SimpleGraph::from_bipartite(g);
    let rotation = planar_rotation(&simple)?;
    let embedded = EmbeddedGraph::new(g.clone(), rotation).expect("planarity witness covers all darts");
    assert!(genus(&embedded).plane, "planarity witness is not plane");
    Some(embedded)
}

/// Exhaustive counterpart of [`test_planarity`]: tries every rotation
/// system, up to mirror symmetry, until one has genus 0.
pub fn exhaustive_planarity(
    g: &BipartiteGraph,
    budget: u64,
) -> Result<Option<EmbeddedGraph>, BudgetExceeded> {
    let simple = SimpleGraph::from_bipartite(g);
    Ok(exhaustive_rotation(&simple, budget)?.map(|rotation| {
        EmbeddedGraph::new(g.clone(), rotation).expect("enumerated rotation covers all darts")
    }))
}
