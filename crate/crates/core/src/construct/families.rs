//! One builder per family. Every builder emits its rotation system
//! analytically (or from a verified template) with a deterministic labeling.

use crate::graph::{disjoint_union, EmbeddedGraph};

use super::fixtures::{FixtureName, Fixtures};
use super::template::SectorTemplate;
use super::ConstructError;

fn build(a_rot: &[Vec<usize>], b_rot: &[Vec<usize>]) -> EmbeddedGraph {
    EmbeddedGraph::from_rotation_lists(a_rot, b_rot).expect("builder emits a consistent rotation system")
}

fn to_index(value: u64, what: &str) -> Result<usize, ConstructError> {
    usize::try_from(value).map_err(|_| ConstructError::BadParameter(format!("{what}={value} is too large")))
}

/// `q` disjoint stars `K_{1,b}`. Center `B(c)` has leaves `A(c·b + j)` in
/// increasing order.
pub fn star_forest(b: u64, q: u64) -> Result<EmbeddedGraph, ConstructError> {
    if b == 0 || q == 0 {
        return Err(ConstructError::BadParameter("star forest needs b, q >= 1".into()));
    }
    let (b, q) = (to_index(b, "b")?, to_index(q, "q")?);
    let a_rot: Vec<Vec<usize>> = (0..b * q).map(|u| vec![u / b]).collect();
    let b_rot: Vec<Vec<usize>> = (0..q).map(|c| (c * b..(c + 1) * b).collect()).collect();
    Ok(build(&a_rot, &b_rot))
}

/// `r` disjoint copies of `K_{2,b}`. Copy `c` has hubs `B(2c)`, `B(2c+1)`
/// and middles `A(c·b + j)`; the hubs list the middles in opposite orders,
/// so consecutive middles bound a quadrilateral.
pub fn k2b_stack(b: u64, r: u64) -> Result<EmbeddedGraph, ConstructError> {
    if b < 2 || r == 0 {
        return Err(ConstructError::BadParameter("K_{2,b} stack needs b >= 2, r >= 1".into()));
    }
    let (b, r) = (to_index(b, "b")?, to_index(r, "r")?);
    let a_rot: Vec<Vec<usize>> = (0..b * r).map(|u| vec![2 * (u / b), 2 * (u / b) + 1]).collect();
    let mut b_rot = Vec::with_capacity(2 * r);
    for c in 0..r {
        b_rot.push((c * b..(c + 1) * b).rev().collect());
        b_rot.push((c * b..(c + 1) * b).collect());
    }
    Ok(build(&a_rot, &b_rot))
}

/// `q` copies of `K_{2,r}` glued into a ring: hub `B(i)` is shared by
/// copies `i - 1` and `i`. Middle `A(i·r + k)` joins `B(i)` to `B(i+1)`.
pub fn theta_cycle(r: u64, q: u64) -> Result<EmbeddedGraph, ConstructError> {
    if r == 0 || q < 3 || q.is_multiple_of(2) {
        return Err(ConstructError::BadParameter("theta cycle needs r >= 1 and odd q >= 3".into()));
    }
    let (r, q) = (to_index(r, "r")?, to_index(q, "q")?);
    let a_rot: Vec<Vec<usize>> = (0..q * r).map(|u| vec![u / r, (u / r + 1) % q]).collect();
    let b_rot: Vec<Vec<usize>> = (0..q)
        .map(|i| {
            let prev = (i + q - 1) % q;
            (0..r)
                .rev()
                .map(|k| prev * r + k)
                .chain((0..r).map(|k| i * r + k))
                .collect()
        })
        .collect();
    Ok(build(&a_rot, &b_rot))
}

/// The `p`-prism for even `p`. With outer cycle `o_k`, inner cycle `i_k`
/// and rungs `o_k i_k`, part A holds `o_k` for even `k` and `i_k` for odd
/// `k` (both as `A(k)`); part B holds the rest as `B(k)`. Each vertex `k`
/// is adjacent to `k-1`, `k`, `k+1` of the other part.
pub fn prism(p: u64) -> Result<EmbeddedGraph, ConstructError> {
    if p % 2 == 1 {
        return Err(ConstructError::OddP(p));
    }
    if p < 4 {
        return Err(ConstructError::BadParameter(format!("prism needs p >= 4, got {p}")));
    }
    let p = to_index(p, "p")?;
    let around = |k: usize, order: [usize; 3]| order.map(|d| (k + p + d - 1) % p).to_vec();
    // offsets 0, 1, 2 stand for k-1, k, k+1
    let a_rot: Vec<Vec<usize>> = (0..p)
        .map(|k| around(k, if k % 2 == 0 { [0, 1, 2] } else { [0, 2, 1] }))
        .collect();
    let b_rot: Vec<Vec<usize>> = (0..p)
        .map(|k| around(k, if k % 2 == 0 { [0, 2, 1] } else { [0, 1, 2] }))
        .collect();
    Ok(build(&a_rot, &b_rot))
}

/// One sector of the `(3^{4r} | 4^{3r})` annulus: four degree-3 roles and
/// three degree-4 roles.
fn sector34_template() -> SectorTemplate {
    SectorTemplate::new(
        vec![
            vec![(1, -1), (0, 0), (1, 0)],
            vec![(2, -1), (2, 0), (0, 0)],
            vec![(2, 0), (0, 1), (1, 0)],
            vec![(2, 0), (1, 0), (0, 0)],
        ],
        vec![
            vec![(2, -1), (1, 0), (3, 0), (0, 0)],
            vec![(3, 0), (2, 0), (0, 1), (0, 0)],
            vec![(1, 1), (2, 0), (3, 0), (1, 0)],
        ],
    )
}

/// `r` glued sectors realizing `(3^{4r} | 4^{3r})`.
pub fn sector34(r: u64) -> Result<EmbeddedGraph, ConstructError> {
    if r < 2 {
        return Err(ConstructError::RTooSmall(r));
    }
    let r = to_index(r, "r")?;
    Ok(sector34_template().instantiate(r)?)
}

/// `(3^{5r} | 5^{3r})` for even `r >= 4`: `r/2` copies of the shipped
/// two-fold sector template.
pub fn sector35_even(r: u64) -> Result<EmbeddedGraph, ConstructError> {
    sector35_even_with(r, Fixtures::embedded())
}

pub fn sector35_even_with(r: u64, fixtures: &Fixtures) -> Result<EmbeddedGraph, ConstructError> {
    if r < 4 || r % 2 == 1 {
        return Err(ConstructError::BadR(r));
    }
    let sectors = to_index(r / 2, "r")?;
    Ok(fixtures.sector35_template()?.instantiate(sectors)?)
}

/// `(3^{5r} | 5^{3r})` for odd `r >= 7`: the shipped drawings for 7 and 9,
/// and the r = 7 drawing beside the even construction for `r - 7` above.
pub fn sector35_odd(r: u64) -> Result<EmbeddedGraph, ConstructError> {
    sector35_odd_with(r, Fixtures::embedded())
}

pub fn sector35_odd_with(r: u64, fixtures: &Fixtures) -> Result<EmbeddedGraph, ConstructError> {
    match r {
        7 => fixtures.load(FixtureName::R7),
        9 => fixtures.load(FixtureName::R9),
        r if r >= 11 && r % 2 == 1 => {
            let base = fixtures.load(FixtureName::R7)?;
            let rest = sector35_even_with(r - 7, fixtures)?;
            Ok(disjoint_union(&base, &rest))
        }
        _ => Err(ConstructError::BadR(r)),
    }
}
