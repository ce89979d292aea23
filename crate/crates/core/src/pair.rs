use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("degrees and part sizes must be positive, got ({a},{p},{b},{q})")]
    NonPositive { a: u64, p: u64, b: u64, q: u64 },
    #[error("arithmetic overflow on ({a},{p},{b},{q})")]
    Overflow { a: u64, p: u64, b: u64, q: u64 },
}

/// A pair of constant degree sequences `(a^p | b^q)`: `p` vertices of degree
/// `a` on one side and `q` vertices of degree `b` on the other.
///
/// Always stored with `a <= b`; [`BiregularPair::new`] swaps the parts when
/// needed. All products and sums used downstream are checked at construction,
/// so accessors never overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BiregularPair {
    a: u64,
    p: u64,
    b: u64,
    q: u64,
}

impl BiregularPair {
    pub fn new(a: u64, p: u64, b: u64, q: u64) -> Result<Self, PairError> {
        if a == 0 || p == 0 || b == 0 || q == 0 {
            return Err(PairError::NonPositive { a, p, b, q });
        }
        let overflow = PairError::Overflow { a, p, b, q };
        a.checked_mul(p).ok_or(overflow.clone())?;
        b.checked_mul(q).ok_or(overflow.clone())?;
        p.checked_add(q)
            .and_then(|s| s.checked_mul(2))
            .ok_or(overflow)?;
        Ok(if a <= b {
            BiregularPair { a, p, b, q }
        } else {
            BiregularPair {
                a: b,
                p: q,
                b: a,
                q: p,
            }
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Sum of the part-A sequence.
    pub fn sum_a(&self) -> u64 {
        self.a * self.p
    }

    /// Sum of the part-B sequence.
    pub fn sum_b(&self) -> u64 {
        self.b * self.q
    }

    pub fn is_balanced(&self) -> bool {
        self.sum_a() == self.sum_b()
    }

    /// Edge count `m = a·p`, available only when both sequence sums agree.
    pub fn edge_count(&self) -> Option<u64> {
        self.is_balanced().then(|| self.sum_a())
    }

    pub fn vertex_count(&self) -> u64 {
        self.p + self.q
    }
}

impl fmt::Display for BiregularPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}^{} | {}^{})", self.a, self.p, self.b, self.q)
    }
}
