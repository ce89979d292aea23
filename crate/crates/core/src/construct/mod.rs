//! Explicit plane realizations for every planar pair.

mod families;
mod fixtures;
mod surgery;
mod template;

use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

use crate::classify::{classify, FamilyTag};
use crate::graph::{EmbeddedGraph, Vertex};
use crate::pair::BiregularPair;
use crate::verify::verify_embedded;

pub use families::{
    k2b_stack, prism, sector34, sector35_even, sector35_even_with, sector35_odd, sector35_odd_with,
    star_forest, theta_cycle,
};
pub use fixtures::{FixtureName, Fixtures, SECTOR35_FILE};
pub use surgery::{bridges, expand_vertex, reconnect};
pub use template::{SectorTemplate, Slot, TemplateError, TEMPLATE_HEADER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("{0} is not planar graphic")]
    NotPlanar(BiregularPair),
    #[error("{0} has degree-1 vertices and more than one star; no realization is connected")]
    CannotConnect(BiregularPair),
    #[error("the prism needs an even p, got {0}")]
    OddP(u64),
    #[error("r = {0} is too small: the sector construction needs r >= 2")]
    RTooSmall(u64),
    #[error("r = {0} is not covered by this construction")]
    BadR(u64),
    #[error("{0}")]
    BadParameter(String),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    BadDegree { vertex: Vertex, degree: usize },
    #[error("input embedding is not plane")]
    NotPlaneInput,
    #[error("edge A{u}-B{v} is not in the graph")]
    EdgeMissing { u: usize, v: usize },
    #[error("the two edges lie in the same component")]
    SameComponent,
    #[error("edge A{u}-B{v} already exists")]
    WouldDuplicate { u: usize, v: usize },
    #[error("an edge does not lie on the outer face of a plane component")]
    NotOnOuterFace,
    #[error("fixture file {} not found", .0.display())]
    FixtureMissing(PathBuf),
    #[error("fixture {name} failed verification: {reason}")]
    FixtureInvalid { name: String, reason: String },
    #[error(transparent)]
    Template(#[from] TemplateError),
    #[error("construction for {pair} failed verification: {reason}")]
    VerificationFailed { pair: BiregularPair, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub pair: BiregularPair,
    pub family: FamilyTag,
    pub graph: EmbeddedGraph,
    pub connected: bool,
    /// Vertex expansions plus reconnections performed.
    pub surgeries_applied: usize,
}

#[derive(Serialize)]
struct ReportSummary<'a> {
    pair: &'a BiregularPair,
    family: &'a FamilyTag,
    vertices: usize,
    edges: usize,
    components: usize,
    connected: bool,
    surgeries_applied: usize,
}

impl ConstructionReport {
    /// Serializable summary without the graph itself.
    pub fn summary(&self) -> impl Serialize + '_ {
        ReportSummary {
            pair: &self.pair,
            family: &self.family,
            vertices: self.graph.graph().vertex_count(),
            edges: self.graph.graph().edge_count(),
            components: self.graph.components(),
            connected: self.connected,
            surgeries_applied: self.surgeries_applied,
        }
    }
}

pub fn construct(pair: &BiregularPair, connect: bool) -> Result<ConstructionReport, ConstructError> {
    construct_with(pair, connect, Fixtures::embedded())
}

pub fn construct_with(
    pair: &BiregularPair,
    connect: bool,
    fixtures: &Fixtures,
) -> Result<ConstructionReport, ConstructError> {
    let verdict = classify(pair);
    let family = match verdict.family {
        Some(family) if verdict.planar => family,
        _ => return Err(ConstructError::NotPlanar(*pair)),
    };
    if connect && pair.a() == 1 && pair.q() >= 2 {
        return Err(ConstructError::CannotConnect(*pair));
    }

    let mut surgeries = 0;
    let mut graph = match family {
        FamilyTag::Stars { b, q } => star_forest(b, q)?,
        FamilyTag::K2bStack { b, r } => k2b_stack(b, r)?,
        FamilyTag::ThetaCycle { r, q } => theta_cycle(r, q)?,
        FamilyTag::Cubic { p } if p % 2 == 0 => prism(p)?,
        FamilyTag::Cubic { p } => {
            surgeries += 1;
            expand_vertex(&prism(p - 3)?, Vertex::A(0))?
        }
        FamilyTag::Sector34 { r } => sector34(r)?,
        FamilyTag::Sector35 { r } if r % 2 == 0 => sector35_even_with(r, fixtures)?,
        FamilyTag::Sector35 { r } => sector35_odd_with(r, fixtures)?,
    };
    if connect {
        while let Some((e1, e2)) = reconnect_candidates(&graph) {
            graph = reconnect(&graph, e1, e2)?;
            surgeries += 1;
        }
    }

    let check = verify_embedded(&graph, Some(pair));
    if !check.passed() {
        return Err(ConstructError::VerificationFailed {
            pair: *pair,
            reason: check.failures().join(", "),
        });
    }
    Ok(ConstructionReport {
        pair: *pair,
        family,
        connected: graph.graph().is_connected(),
        graph,
        surgeries_applied: surgeries,
    })
}

/// The smallest non-bridge edge of each of the first two components, if
/// the graph has two components that both contain a cycle.
fn reconnect_candidates(g: &EmbeddedGraph) -> Option<((usize, usize), (usize, usize))> {
    let graph = g.graph();
    let (count, labels) = graph.component_labels();
    if count < 2 {
        return None;
    }
    let bridge = bridges(g);
    let mut picks: Vec<Option<(usize, usize)>> = vec![None; count];
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        let c = labels[graph.vertex_id(Vertex::A(u))];
        if !bridge[e] && picks[c].is_none() {
            picks[c] = Some((u, v));
        }
    }
    let mut found = picks.into_iter().flatten();
    Some((found.next()?, found.next()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::genus;

    fn pair(a: u64, p: u64, b: u64, q: u64) -> BiregularPair {
        BiregularPair::new(a, p, b, q).unwrap()
    }

    #[test]
    fn cube() {
        let report = construct(&pair(3, 4, 3, 4), true).unwrap();
        let g = report.graph.graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        assert_eq!(genus(&report.graph).total_faces(), 6);
        assert!(report.connected);
        assert_eq!(report.surgeries_applied, 0);
    }

    #[test]
    fn refusals() {
        assert!(matches!(construct(&pair(3, 5, 3, 5), false), Err(ConstructError::NotPlanar(_))));
        assert!(matches!(construct(&pair(3, 25, 5, 15), true), Err(ConstructError::NotPlanar(_))));
        assert!(matches!(construct(&pair(3, 4, 4, 3), false), Err(ConstructError::NotPlanar(_))));
        assert!(matches!(construct(&pair(1, 6, 3, 2), true), Err(ConstructError::CannotConnect(_))));
        assert!(construct(&pair(1, 3, 3, 1), true).unwrap().connected);
    }

    #[test]
    fn odd_cubic_uses_expansion() {
        let report = construct(&pair(3, 7, 3, 7), false).unwrap();
        assert_eq!(report.surgeries_applied, 1);
        assert_eq!(report.family, FamilyTag::Cubic { p: 7 });
    }

    #[test]
    fn connect_merges_components() {
        let report = construct(&pair(2, 8, 4, 4), true).unwrap();
        assert!(report.connected);
        assert_eq!(report.surgeries_applied, 1);

        let report = construct(&pair(3, 55, 5, 33), true).unwrap();
        assert!(report.connected);
        let loose = construct(&pair(3, 55, 5, 33), false).unwrap();
        assert!(!loose.connected);
        assert_eq!(loose.graph.components(), 2);
    }

    #[test]
    fn deterministic() {
        let p = pair(3, 12, 4, 9);
        assert_eq!(construct(&p, true).unwrap(), construct(&p, true).unwrap());
    }
}
