//! Independent checks on a claimed realization.

use std::collections::HashSet;

use serde::Serialize;

use crate::embedding::{genus, GenusReport};
use crate::graph::EmbeddedGraph;
use crate::pair::BiregularPair;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    /// No repeated edge, re-derived from the rotation lists.
    pub simple: bool,
    /// Degrees match the expected pair; `None` when no pair was given.
    pub biregular: Option<bool>,
    /// `m = a·p = b·q <= 2(p+q) - 4` (or `p + q < 3`); `None` without a pair.
    pub edge_bound: Option<bool>,
    pub genus: GenusReport,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.simple
            && self.biregular.unwrap_or(true)
            && self.edge_bound.unwrap_or(true)
            && self.genus.plane
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.simple {
            out.push("not simple");
        }
        if self.biregular == Some(false) {
            out.push("degrees do not match");
        }
        if self.edge_bound == Some(false) {
            out.push("edge count violates the Euler bound");
        }
        if !self.genus.plane {
            out.push("embedding is not plane");
        }
        out
    }
}

pub fn verify_embedded(g: &EmbeddedGraph, pair: Option<&BiregularPair>) -> Verification {
    let graph = g.graph();
    let (a_rot, _) = g.neighbor_rotation();
    let mut seen = HashSet::new();
    let simple = a_rot
        .iter()
        .enumerate()
        .all(|(u, nbrs)| nbrs.iter().all(|&v| seen.insert((u, v))))
        && seen.len() == graph.edge_count();

    let biregular = pair.map(|pr| graph.is_biregular(pr));
    let edge_bound = pair.map(|pr| {
        let m = graph.edge_count() as u64;
        let n = pr.vertex_count();
        pr.edge_count() == Some(m) && (n < 3 || m + 4 <= 2 * n)
    });
    Verification {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        components: graph.components(),
        simple,
        biregular,
        edge_bound,
        genus: genus(g),
    }
}
