//! Worked examples across modules, checked through the public API.

mod common;

use bireg_core::classify::{classify, eulerian_family, is_eulerian, Exception, FamilyTag};
use bireg_core::construct::{
    construct, expand_vertex, k2b_stack, prism, reconnect, sector34, sector35_even, sector35_odd,
    star_forest, theta_cycle, ConstructError, FixtureName, Fixtures,
};
use bireg_core::embedding::{exhaustive_planarity, genus, test_planarity, BudgetExceeded};
use bireg_core::graph::{disjoint_union, BipartiteGraph, EmbeddedGraph, Vertex};
use bireg_core::oracle::{enumerate_realizations, verify_exception_3535, EnumerateError};
use bireg_core::pair::BiregularPair;

fn pair(a: u64, p: u64, b: u64, q: u64) -> BiregularPair {
    BiregularPair::new(a, p, b, q).unwrap()
}

fn faces(g: &EmbeddedGraph) -> usize {
    genus(g).total_faces()
}

#[test]
fn classifier_examples() {
    assert!(is_eulerian(&pair(1, 1, 1, 1)));
    assert!(!is_eulerian(&pair(3, 4, 4, 3)));
    assert!(is_eulerian(&pair(3, 20, 5, 12)));
    assert_eq!(eulerian_family(&pair(2, 3, 2, 3)), Some(FamilyTag::ThetaCycle { r: 1, q: 3 }));
    assert_eq!(eulerian_family(&pair(2, 2, 2, 2)), Some(FamilyTag::K2bStack { b: 2, r: 1 }));
    assert_eq!(eulerian_family(&pair(1, 3, 1, 3)), Some(FamilyTag::Stars { b: 1, q: 3 }));
    assert_eq!(classify(&pair(3, 5, 3, 5)).exception, Some(Exception::Ex3535));
    let stars = classify(&pair(1, 6, 3, 2));
    assert!(stars.planar);
    assert_eq!(stars.family, Some(FamilyTag::Stars { b: 3, q: 2 }));
}

#[test]
fn star_forest_is_disconnected() {
    let report = construct(&pair(1, 6, 3, 2), false).unwrap();
    assert_eq!(report.graph.components(), 2);
    assert!(!report.connected);
}

#[test]
fn family_builders() {
    let g = star_forest(3, 2).unwrap();
    assert_eq!((g.graph().vertex_count(), g.graph().edge_count()), (8, 6));
    assert_eq!(faces(&k2b_stack(3, 1).unwrap()), 3);
    let theta = theta_cycle(2, 3).unwrap();
    assert_eq!((theta.graph().vertex_count(), theta.graph().edge_count(), theta.components()), (9, 12, 1));
    // the 6-cycle: two faces
    assert_eq!(faces(&theta_cycle(1, 3).unwrap()), 2);
    assert_eq!(faces(&prism(6).unwrap()), 8);
    assert_eq!(faces(&sector34(2).unwrap()), 12);
    assert_eq!(faces(&sector35_even(4).unwrap()), 30);
    let cube = prism(4).unwrap();
    assert!(cube.graph().is_biregular(&pair(3, 4, 3, 4)));
    assert_eq!(cube.graph().degrees(), (vec![3; 4], vec![3; 4]));
}

#[test]
fn builder_guards() {
    assert_eq!(prism(5), Err(ConstructError::OddP(5)));
    assert_eq!(sector34(1), Err(ConstructError::RTooSmall(1)));
    assert_eq!(sector35_even(5), Err(ConstructError::BadR(5)));
    assert_eq!(sector35_odd(5), Err(ConstructError::BadR(5)));
    assert_eq!(construct(&pair(1, 6, 3, 2), true).unwrap_err(), ConstructError::CannotConnect(pair(1, 6, 3, 2)));
    assert_eq!(construct(&pair(3, 5, 3, 5), true).unwrap_err(), ConstructError::NotPlanar(pair(3, 5, 3, 5)));
}

#[test]
fn unions() {
    let edge = EmbeddedGraph::from_rotation_lists(&[vec![0]], &[vec![0]]).unwrap();
    let two = disjoint_union(&edge, &edge);
    assert_eq!((two.graph().edge_count(), two.components()), (2, 2));

    let r7 = Fixtures::embedded().load(FixtureName::R7).unwrap();
    let big = disjoint_union(&r7, &sector35_even(4).unwrap());
    assert_eq!((big.graph().p(), big.graph().q(), big.graph().edge_count()), (55, 33, 165));

    let empty = EmbeddedGraph::from_rotation_lists(&[], &[]).unwrap();
    let square = EmbeddedGraph::from_rotation_lists(&[vec![0, 1], vec![1, 0]], &[vec![1, 0], vec![0, 1]]).unwrap();
    assert_eq!(disjoint_union(&empty, &square), square);
}

#[test]
fn expansion_chain() {
    let cube = prism(4).unwrap();
    let once = expand_vertex(&cube, Vertex::A(0)).unwrap();
    assert_eq!(common::certify(&once, 3, 7, 3, 7), Ok(()));
    assert_eq!(genus(&once).components[0].genus, 0);
    let twice = expand_vertex(&once, Vertex::A(0)).unwrap();
    assert_eq!(common::certify(&twice, 3, 10, 3, 10), Ok(()));
    let nine = expand_vertex(&prism(6).unwrap(), Vertex::B(3)).unwrap();
    assert_eq!(common::certify(&nine, 3, 9, 3, 9), Ok(()));
}

#[test]
fn reconnect_squares_into_one() {
    let square = EmbeddedGraph::from_rotation_lists(&[vec![0, 1], vec![1, 0]], &[vec![1, 0], vec![0, 1]]).unwrap();
    let two = disjoint_union(&square, &square);
    let one = reconnect(&two, (1, 1), (3, 2)).unwrap();
    assert_eq!(one.components(), 1);
    assert!(one.graph().degrees().0.iter().all(|&d| d == 2));
    assert_eq!(reconnect(&two, (0, 0), (1, 0)), Err(ConstructError::SameComponent));
}

#[test]
fn reconnect_two_stars() {
    // every edge of a star is a bridge: swapping leaves keeps two components
    let stars = star_forest(3, 2).unwrap();
    let out = reconnect(&stars, (1, 0), (4, 1)).unwrap();
    assert_eq!(out.components(), 2);
    assert!(!out.graph().is_connected());
}

#[test]
fn connect_flag() {
    let report = construct(&pair(3, 4, 3, 4), true).unwrap();
    assert_eq!((report.graph.graph().vertex_count(), report.graph.graph().edge_count()), (8, 12));
    assert_eq!(faces(&report.graph), 6);
    let big = construct(&pair(3, 55, 5, 33), true).unwrap();
    assert!(big.connected);
    assert_eq!(common::certify(&big.graph, 3, 55, 5, 33), Ok(()));
}

#[test]
fn planarity_procedures() {
    let square = BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
    assert!(exhaustive_planarity(&square, 1).unwrap().is_some());
    let k44 = BipartiteGraph::new(4, 4, (0..4).flat_map(|u| (0..4).map(move |v| (u, v)))).unwrap();
    assert!(matches!(exhaustive_planarity(&k44, 10), Err(BudgetExceeded { .. })));
    let k33 = BipartiteGraph::new(3, 3, (0..3).flat_map(|u| (0..3).map(move |v| (u, v)))).unwrap();
    assert!(test_planarity(&k33).is_none());
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_realizations(&pair(2, 2, 2, 2), None).unwrap().count(), 1);
    assert_eq!(enumerate_realizations(&pair(1, 3, 3, 1), None).unwrap().count(), 1);
    assert!(matches!(
        enumerate_realizations(&pair(3, 25, 5, 15), None),
        Err(EnumerateError::TooLarge { .. })
    ));
}

#[test]
fn every_3535_realization_is_nonplanar() {
    let census = verify_exception_3535();
    assert_eq!(census.total, 2040);
    assert_eq!(census.complement_count, 2040);
    assert_eq!(census.planar_count, 0);
    assert_eq!(census.disagreements, 0);
}
