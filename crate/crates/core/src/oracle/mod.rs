//! Exhaustive checks behind the classifier's verdicts.
//!
//! Everything here is deterministic given its arguments: enumeration runs
//! in a fixed order and random sampling takes an explicit seed.

mod enumerate;

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::classify::{eulerian_family, is_eulerian};
use crate::construct::{construct, construct_with, ConstructError, Fixtures};
use crate::embedding::{exhaustive_planarity, for_each_rotation, test_planarity, SimpleGraph};
use crate::pair::BiregularPair;
use crate::verify::verify_embedded;

pub use enumerate::{
    count_matrices, count_realizations, enumerate_realizations, shuffled_realizations,
    EnumerateError, Realizations, UNLIMITED_CELLS,
};

/// Rotation budget for exhaustive planarity on small realizations.
pub const EXHAUSTIVE_BUDGET: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlanarityCensus {
    pub pair: BiregularPair,
    /// Realizations produced by the enumerator.
    pub total: u64,
    /// Realizations counted independently via complements.
    pub complement_count: u128,
    pub planar_count: u64,
    /// Realizations on which the two planarity procedures disagree.
    pub disagreements: u64,
}

impl PlanarityCensus {
    pub fn consistent(&self) -> bool {
        self.total as u128 == self.complement_count && self.disagreements == 0
    }
}

/// Enumerates every realization of a small square pair `(a^n | a^n)` and
/// decides planarity of each with both procedures. The enumeration count is
/// cross-checked against the number of complement matrices, whose line
/// sums are `n - a`.
pub fn planarity_census(pair: &BiregularPair) -> Result<PlanarityCensus, EnumerateError> {
    let (n, a) = (pair.p() as usize, pair.a() as usize);
    let complement_count = if pair.p() == pair.q() && pair.a() == pair.b() {
        count_matrices(n, n - a, &vec![n - a; n])
    } else {
        count_realizations(pair)
    };
    let mut census = PlanarityCensus {
        pair: *pair,
        total: 0,
        complement_count,
        planar_count: 0,
        disagreements: 0,
    };
    for g in enumerate_realizations(pair, None)? {
        census.total += 1;
        let fast = test_planarity(&g).is_some();
        let slow = exhaustive_planarity(&g, EXHAUSTIVE_BUDGET)
            .expect("small realizations fit the budget")
            .is_some();
        census.planar_count += u64::from(fast && slow);
        census.disagreements += u64::from(fast != slow);
    }
    Ok(census)
}

/// All labeled realizations of `(3^5 | 3^5)`; none is planar.
pub fn verify_exception_3535() -> PlanarityCensus {
    planarity_census(&BiregularPair::new(3, 5, 3, 5).expect("valid pair")).expect("25 cells")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangulationReport {
    pub graphs_checked: usize,
    pub rotations_checked: u64,
    pub plane_embeddings: u64,
    /// Plane embeddings with `V = 5, E = 9, F = 6`, all faces triangles.
    pub triangulations: u64,
    /// Triangulations with a face through all three degree-4 vertices.
    pub admissible_embeddings: u64,
    /// Plane embeddings violating Euler's formula (must be 0).
    pub euler_violations: u64,
}

/// Every labeled simple graph on five vertices with degrees
/// `(4, 4, 4, 3, 3)` in some order, i.e. each `K_5` minus one edge.
pub fn graphs_4_4_4_3_3() -> Vec<SimpleGraph> {
    let all = SimpleGraph::complete(5).edges().to_vec();
    (0u32..1 << all.len())
        .filter_map(|mask| {
            let edges: Vec<_> = (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
            let g = SimpleGraph::new(5, edges).expect("subset of K_5");
            let mut degrees = g.degrees();
            degrees.sort_unstable();
            (degrees == [3, 3, 4, 4, 4]).then_some(g)
        })
        .collect()
}

/// Searches every rotation system of every `(4,4,4,3,3)` graph for a plane
/// triangulation in which the three degree-4 vertices share a face. That
/// face would be where two more degree-3 vertices go; there is none.
pub fn verify_no_triangulation_4332() -> TriangulationReport {
    let graphs = graphs_4_4_4_3_3();
    let mut report = TriangulationReport {
        graphs_checked: graphs.len(),
        rotations_checked: 0,
        plane_embeddings: 0,
        triangulations: 0,
        admissible_embeddings: 0,
        euler_violations: 0,
    };
    for g in &graphs {
        let degrees = g.degrees();
        let heavy: Vec<usize> = (0..5).filter(|&v| degrees[v] == 4).collect();
        for_each_rotation(g, EXHAUSTIVE_BUDGET, false, |view| {
            report.rotations_checked += 1;
            if !view.is_plane() {
                return ControlFlow::Continue(());
            }
            report.plane_embeddings += 1;
            let faces = view.faces();
            if (g.vertex_count(), g.edge_count(), faces.len()) != (5, 9, 6) {
                report.euler_violations += 1;
            }
            if faces.iter().all(|f| f.len() == 3) {
                report.triangulations += 1;
                let on_one_face = faces.iter().any(|f| {
                    let around: HashSet<usize> = f.iter().map(|&d| g.tail(d)).collect();
                    heavy.iter().all(|v| around.contains(v))
                });
                report.admissible_embeddings += u64::from(on_one_face);
            }
            ControlFlow::Continue(())
        })
        .expect("864 rotations per graph");
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifierReport {
    pub a_max: u64,
    pub q_max: u64,
    pub pairs_checked: u64,
    pub eulerian_pairs: u64,
    /// First pair where the inequality and the family list disagree.
    pub mismatch: Option<BiregularPair>,
    pub constructed: u64,
    /// First planar pair whose construction failed, with the reason.
    pub construction_failure: Option<(BiregularPair, String)>,
}

impl ClassifierReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.construction_failure.is_none()
    }
}

/// Largest `p + q` for which [`verify_classifier`] also builds and checks a
/// realization.
pub const CONSTRUCT_SPOT_LIMIT: u64 = 60;

/// Checks the inequality-based Eulerian test against the family list on
/// every balanced pair with `a <= b <= a_max` and `q <= q_max` (`p = bq/a`
/// follows), and constructs every planar pair with `p + q <= 60`.
pub fn verify_classifier(a_max: u64, q_max: u64) -> ClassifierReport {
    verify_classifier_with(a_max, q_max, is_eulerian)
}

/// [`verify_classifier`] against a substitute Eulerian test, so that the
/// check itself can be shown to catch a wrong predicate.
pub fn verify_classifier_with(
    a_max: u64,
    q_max: u64,
    eulerian: impl Fn(&BiregularPair) -> bool,
) -> ClassifierReport {
    let mut report = ClassifierReport {
        a_max,
        q_max,
        pairs_checked: 0,
        eulerian_pairs: 0,
        mismatch: None,
        constructed: 0,
        construction_failure: None,
    };
    for a in 1..=a_max {
        for b in a..=a_max {
            for q in 1..=q_max {
                if (b * q) % a != 0 {
                    continue;
                }
                let pair = BiregularPair::new(a, b * q / a, b, q).expect("small pair");
                report.pairs_checked += 1;
                let e = eulerian(&pair);
                report.eulerian_pairs += u64::from(e);
                if e != eulerian_family(&pair).is_some() && report.mismatch.is_none() {
                    report.mismatch = Some(pair);
                }
                if pair.p() + pair.q() <= CONSTRUCT_SPOT_LIMIT && report.construction_failure.is_none() {
                    match construct(&pair, false) {
                        Ok(_) => report.constructed += 1,
                        Err(ConstructError::NotPlanar(_)) => {}
                        Err(err) => report.construction_failure = Some((pair, err.to_string())),
                    }
                }
            }
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub pair: BiregularPair,
    pub seed: u64,
    pub samples: u64,
    pub distinct: u64,
    pub planar_found: u64,
    pub note: &'static str,
}

pub const SAMPLE_NOTE: &str =
    "smoke check only: random realizations found non-planar; this is not a proof of non-planarity";

/// `samples` seeded random realizations of `pair`; sample `i` is the first
/// matrix of a shuffled enumeration seeded by `(seed, i)`.
pub fn sample_realizations(
    pair: &BiregularPair,
    samples: u64,
    seed: u64,
) -> Result<Vec<crate::graph::BipartiteGraph>, EnumerateError> {
    (0..samples)
        .map(|i| {
            let sub = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i);
            Ok(shuffled_realizations(pair, Some(1), sub)?.next())
        })
        .filter_map(Result::transpose)
        .collect()
}

/// Random realizations of `(3^25 | 5^15)` tested for planarity.
pub fn sample_nonplanarity_3_25_5_15(samples: u64, seed: u64) -> SampleReport {
    let pair = BiregularPair::new(3, 25, 5, 15).expect("valid pair");
    let graphs = sample_realizations(&pair, samples, seed).expect("balanced pair");
    let distinct = graphs.iter().collect::<HashSet<_>>().len() as u64;
    let planar_found = graphs.iter().filter(|g| test_planarity(g).is_some()).count() as u64;
    SampleReport {
        pair,
        seed,
        samples,
        distinct,
        planar_found,
        note: SAMPLE_NOTE,
    }
}

/// Family members covered by the construction sweep: stars with
/// `b, q <= 8`, stacks with `b <= 8, r <= 6`, theta cycles with
/// `q in {3,5,7,9}, r <= 6`, cubic `4 <= p <= 50` (bar 5), `(3^{4r}|4^{3r})`
/// for `2 <= r <= 25`, and `(3^{5r}|5^{3r})` for even `4 <= r <= 24` and
/// `r in {7, 9, 11, 13}`.
pub fn sweep_pairs() -> Vec<BiregularPair> {
    let pair = |a, p, b, q| BiregularPair::new(a, p, b, q).expect("small pair");
    let mut out = Vec::new();
    out.extend((1..=8).flat_map(|b| (1..=8).map(move |q| (b, q))).map(|(b, q)| pair(1, b * q, b, q)));
    out.extend((2..=8).flat_map(|b| (1..=6).map(move |r| (b, r))).map(|(b, r)| pair(2, b * r, b, 2 * r)));
    out.extend([3, 5, 7, 9].into_iter().flat_map(|q| (1..=6).map(move |r| (q, r))).map(|(q, r)| pair(2, q * r, 2 * r, q)));
    out.extend((4..=50).filter(|&p| p != 5).map(|p| pair(3, p, 3, p)));
    out.extend((2..=25).map(|r| pair(3, 4 * r, 4, 3 * r)));
    out.extend((4..=24).step_by(2).chain([7, 9, 11, 13]).map(|r| pair(3, 5 * r, 5, 3 * r)));
    out
}

/// Builds `pair` (and, when possible, a connected variant) from `fixtures`
/// and re-verifies the result from scratch.
pub fn check_construction(pair: &BiregularPair, fixtures: &Fixtures) -> Result<(), String> {
    let variants: &[bool] = if pair.a() == 1 && pair.q() >= 2 { &[false] } else { &[false, true] };
    for &connect in variants {
        let report = construct_with(pair, connect, fixtures).map_err(|e| e.to_string())?;
        let check = verify_embedded(&report.graph, Some(pair));
        if !check.passed() {
            return Err(format!("{pair}: {}", check.failures().join(", ")));
        }
        if connect && check.components != 1 {
            return Err(format!("{pair}: connection left {} components", check.components));
        }
    }
    Ok(())
}
