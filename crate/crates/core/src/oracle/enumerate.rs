//! Labeled realizations of a biregular pair as 0/1 biadjacency matrices.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::BipartiteGraph;
use crate::pair::BiregularPair;

/// Largest `p·q` enumerated without an explicit limit.
pub const UNLIMITED_CELLS: u64 = 64;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("{pair} has {cells} matrix cells; pass a limit to enumerate more than {max}", max = UNLIMITED_CELLS)]
    TooLarge { pair: BiregularPair, cells: u64 },
    #[error("{0} is not balanced (a·p != b·q)")]
    Unbalanced(BiregularPair),
}

/// Whether `rows` more rows, each with `a` ones, can exactly fill columns
/// with the remaining capacities `caps` (Gale–Ryser).
fn fillable(caps: &[usize], rows: usize, a: usize) -> bool {
    let mut sorted = caps.to_vec();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.iter().sum::<usize>() != rows * a {
        return false;
    }
    let mut prefix = 0;
    for (k, c) in sorted.iter().enumerate() {
        prefix += c;
        if prefix > rows * a.min(k + 1) {
            return false;
        }
    }
    true
}

/// Streams every realization once. Rows are filled top to bottom; each row
/// takes its `a` columns as a combination in lexicographic order, and a
/// partial matrix is only extended while the rest stays fillable, so the
/// search never dead-ends.
pub struct Realizations {
    p: usize,
    q: usize,
    a: usize,
    caps: Vec<usize>,
    /// Column order per row (identity unless shuffled).
    order: Vec<Vec<usize>>,
    /// Chosen positions into `order[row]`, strictly increasing.
    chosen: Vec<Option<Vec<usize>>>,
    depth: usize,
    remaining: Option<u64>,
    done: bool,
    rng: Option<ChaCha8Rng>,
}

pub fn enumerate_realizations(
    pair: &BiregularPair,
    limit: Option<u64>,
) -> Result<Realizations, EnumerateError> {
    let cells = pair.p().saturating_mul(pair.q());
    if limit.is_none() && cells > UNLIMITED_CELLS {
        return Err(EnumerateError::TooLarge { pair: *pair, cells });
    }
    Realizations::start(pair, limit, None)
}

/// Like [`enumerate_realizations`] but each row scans its columns in a
/// fresh random order drawn from `seed`, so the first few matrices form a
/// reproducible random sample. There is no size guard.
pub fn shuffled_realizations(
    pair: &BiregularPair,
    limit: Option<u64>,
    seed: u64,
) -> Result<Realizations, EnumerateError> {
    Realizations::start(pair, limit, Some(ChaCha8Rng::seed_from_u64(seed)))
}

impl Realizations {
    fn start(pair: &BiregularPair, limit: Option<u64>, rng: Option<ChaCha8Rng>) -> Result<Self, EnumerateError> {
        if !pair.is_balanced() {
            return Err(EnumerateError::Unbalanced(*pair));
        }
        let too_large = |_| EnumerateError::TooLarge {
            pair: *pair,
            cells: pair.p().saturating_mul(pair.q()),
        };
        let p = usize::try_from(pair.p()).map_err(too_large)?;
        let q = usize::try_from(pair.q()).map_err(too_large)?;
        let a = pair.a() as usize;
        let b = pair.b() as usize;
        let caps = vec![b; q];
        let done = limit == Some(0) || !fillable(&caps, p, a);
        let mut out = Realizations {
            p,
            q,
            a,
            caps,
            order: vec![(0..q).collect(); p],
            chosen: vec![None; p],
            depth: 0,
            remaining: limit,
            done,
            rng,
        };
        out.reshuffle(0);
        Ok(out)
    }

    fn reshuffle(&mut self, row: usize) {
        if let (Some(rng), Some(order)) = (self.rng.as_mut(), self.order.get_mut(row)) {
            order.shuffle(rng);
        }
    }

    fn columns(&self, row: usize, positions: &[usize]) -> Vec<usize> {
        positions.iter().map(|&i| self.order[row][i]).collect()
    }

    /// Next combination of `a` positions out of `q` after `current`.
    fn next_combination(&self, current: Option<Vec<usize>>) -> Option<Vec<usize>> {
        let (a, q) = (self.a, self.q);
        let Some(mut c) = current else {
            return (a <= q).then(|| (0..a).collect());
        };
        let mut i = a;
        while i > 0 {
            i -= 1;
            if c[i] < q - a + i {
                c[i] += 1;
                for j in i + 1..a {
                    c[j] = c[j - 1] + 1;
                }
                return Some(c);
            }
        }
        None
    }

    /// Moves row `row` to its next admissible choice, updating capacities.
    fn step(&mut self, row: usize) -> bool {
        let mut current = self.chosen[row].take();
        if let Some(prev) = &current {
            for col in self.columns(row, prev) {
                self.caps[col] += 1;
            }
        }
        let rows_after = self.p - row - 1;
        while let Some(next) = self.next_combination(current) {
            let cols = self.columns(row, &next);
            if cols.iter().all(|&c| self.caps[c] > 0) {
                for &c in &cols {
                    self.caps[c] -= 1;
                }
                if fillable(&self.caps, rows_after, self.a) {
                    self.chosen[row] = Some(next);
                    return true;
                }
                for &c in &cols {
                    self.caps[c] += 1;
                }
            }
            current = Some(next);
        }
        false
    }

    fn emit(&self) -> BipartiteGraph {
        let edges = (0..self.p).flat_map(|u| {
            let positions = self.chosen[u].as_deref().expect("complete matrix");
            self.columns(u, positions).into_iter().map(move |v| (u, v))
        });
        BipartiteGraph::new(self.p, self.q, edges).expect("rows pick distinct columns")
    }
}

impl Iterator for Realizations {
    type Item = BipartiteGraph;

    fn next(&mut self) -> Option<BipartiteGraph> {
        if self.done {
            return None;
        }
        loop {
            let row = self.depth;
            if self.step(row) {
                if row + 1 == self.p {
                    if let Some(left) = self.remaining.as_mut() {
                        *left -= 1;
                        self.done = *left == 0;
                    }
                    return Some(self.emit());
                }
                self.depth += 1;
                self.reshuffle(row + 1);
            } else if row == 0 {
                self.done = true;
                return None;
            } else {
                self.depth -= 1;
            }
        }
    }
}

/// Number of 0/1 matrices with `rows` rows summing to `a` and `caps.len()`
/// columns summing to the given capacities, by dynamic programming over the
/// histogram of remaining column capacities. Shares no code with the
/// enumerator and serves as its independent check.
pub fn count_matrices(rows: usize, a: usize, caps: &[usize]) -> u128 {
    let top = caps.iter().copied().max().unwrap_or(0);
    let mut histogram = vec![0usize; top + 1];
    for &c in caps {
        histogram[c] += 1;
    }
    let mut memo = HashMap::new();
    count_rows(rows, a, histogram, &mut memo)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn count_rows(
    rows: usize,
    a: usize,
    histogram: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), u128>,
) -> u128 {
    if rows == 0 {
        return u128::from(histogram.iter().skip(1).all(|&n| n == 0));
    }
    if let Some(&hit) = memo.get(&(rows, histogram.clone())) {
        return hit;
    }
    // choose how many columns of each capacity level c >= 1 receive a one
    let mut total = 0;
    let mut take = vec![0usize; histogram.len()];
    #[allow(clippy::too_many_arguments)]
    fn spread(
        level: usize,
        left: usize,
        rows: usize,
        a: usize,
        histogram: &[usize],
        take: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u128>,
        total: &mut u128,
    ) {
        if level == histogram.len() {
            if left != 0 {
                return;
            }
            let mut ways = 1u128;
            let mut next = histogram.to_vec();
            for c in 1..histogram.len() {
                ways *= binomial(histogram[c], take[c]);
                next[c] -= take[c];
                next[c - 1] += take[c];
            }
            *total += ways * count_rows(rows - 1, a, next, memo);
            return;
        }
        if level == 0 {
            return spread(1, left, rows, a, histogram, take, memo, total);
        }
        for t in 0..=histogram[level].min(left) {
            take[level] = t;
            spread(level + 1, left - t, rows, a, histogram, take, memo, total);
        }
        take[level] = 0;
    }
    spread(0, a, rows, a, &histogram, &mut take, memo, &mut total);
    memo.insert((rows, histogram), total);
    total
}

/// [`count_matrices`] for a pair: rows are part A.
pub fn count_realizations(pair: &BiregularPair) -> u128 {
    if !pair.is_balanced() {
        return 0;
    }
    count_matrices(pair.p() as usize, pair.a() as usize, &vec![pair.b() as usize; pair.q() as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, p: u64, b: u64, q: u64) -> BiregularPair {
        BiregularPair::new(a, p, b, q).unwrap()
    }

    fn count(a: u64, p: u64, b: u64, q: u64) -> usize {
        enumerate_realizations(&pair(a, p, b, q), None).unwrap().count()
    }

    #[test]
    fn forced_cases() {
        let all: Vec<_> = enumerate_realizations(&pair(2, 2, 2, 2), None).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].edge_count(), 4);
        assert_eq!(count(1, 3, 3, 1), 1);
        // 3×2 with row sums 2 leaves no choice
        assert_eq!(count(2, 3, 3, 2), 1);
        assert_eq!(count_realizations(&pair(2, 3, 3, 2)), 1);
    }

    #[test]
    fn lexicographic_and_distinct() {
        let all: Vec<_> = enumerate_realizations(&pair(2, 4, 2, 4), None)
            .unwrap()
            .map(|g| g.edges().to_vec())
            .collect();
        assert_eq!(all.len(), 90);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn enumeration_matches_dp() {
        for (a, p, b, q) in [(2, 4, 2, 4), (2, 6, 3, 4), (3, 4, 3, 4), (1, 4, 2, 2), (2, 5, 2, 5)] {
            assert_eq!(count(a, p, b, q) as u128, count_realizations(&pair(a, p, b, q)), "({a},{p},{b},{q})");
        }
    }

    #[test]
    fn complement_count_for_3535() {
        // complements of (3^5|3^5) realizations have all line sums 2
        assert_eq!(count_matrices(5, 2, &[2; 5]), 2040);
        // known values of the line-sum-2 square count: 1, 6, 90, 2040, 67950
        let known = [1u128, 6, 90, 2040, 67950];
        for (n, &v) in (2..=6).zip(&known) {
            assert_eq!(count_matrices(n, 2, &vec![2; n]), v);
        }
    }

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate_realizations(&pair(3, 25, 5, 15), None),
            Err(EnumerateError::TooLarge { .. })
        ));
        assert_eq!(enumerate_realizations(&pair(3, 25, 5, 15), Some(3)).unwrap().count(), 3);
        assert!(matches!(
            enumerate_realizations(&pair(2, 3, 2, 2), None),
            Err(EnumerateError::Unbalanced(_))
        ));
        // balanced but unrealizable: a column would need more rows than exist
        assert_eq!(count(1, 2, 2, 1), 1);
        assert_eq!(count(3, 2, 3, 2), 0);
    }

    #[test]
    fn shuffled_is_seeded() {
        let sample = |seed| -> Vec<BipartiteGraph> {
            shuffled_realizations(&pair(3, 25, 5, 15), Some(1), seed)
                .unwrap()
                .collect()
        };
        assert_eq!(sample(7), sample(7));
        assert_ne!(sample(7), sample(8));
        assert!(sample(7)[0].is_biregular(&pair(3, 25, 5, 15)));
    }
}
