//! Eulerian test, family characterization and planarity verdict for
//! biregular pairs.

use std::fmt;

use serde::Serialize;

use crate::pair::BiregularPair;

/// The six families of Eulerian pairs, with the parameters that generate them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family")]
pub enum FamilyTag {
    /// `(1^{bq} | b^q)`
    Stars { b: u64, q: u64 },
    /// `(2^{br} | b^{2r})`, `r >= 1`
    K2bStack { b: u64, r: u64 },
    /// `(2^{qr} | (2r)^q)`, `q >= 3` odd
    ThetaCycle { r: u64, q: u64 },
    /// `(3^p | 3^p)`, `p >= 4`
    Cubic { p: u64 },
    /// `(3^{4r} | 4^{3r})`, `r >= 2`
    Sector34 { r: u64 },
    /// `(3^{5r} | 5^{3r})`, `r >= 4`
    Sector35 { r: u64 },
}

impl FamilyTag {
    /// The pair generated by the tag's parameters, as `(a, p, b, q)`.
    pub fn expand(&self) -> (u64, u64, u64, u64) {
        match *self {
            FamilyTag::Stars { b, q } => (1, b * q, b, q),
            FamilyTag::K2bStack { b, r } => (2, b * r, b, 2 * r),
            FamilyTag::ThetaCycle { r, q } => (2, q * r, 2 * r, q),
            FamilyTag::Cubic { p } => (3, p, 3, p),
            FamilyTag::Sector34 { r } => (3, 4 * r, 4, 3 * r),
            FamilyTag::Sector35 { r } => (3, 5 * r, 5, 3 * r),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Stars { b, q } => write!(f, "Stars(b={b}, q={q})"),
            FamilyTag::K2bStack { b, r } => write!(f, "K2bStack(b={b}, r={r})"),
            FamilyTag::ThetaCycle { r, q } => write!(f, "ThetaCycle(r={r}, q={q})"),
            FamilyTag::Cubic { p } => write!(f, "Cubic(p={p})"),
            FamilyTag::Sector34 { r } => write!(f, "Sector34(r={r})"),
            FamilyTag::Sector35 { r } => write!(f, "Sector35(r={r})"),
        }
    }
}

/// The two Eulerian pairs that have no planar realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Exception {
    /// `(3^5 | 3^5)`
    Ex3535,
    /// `(3^25 | 5^15)`
    Ex3_25_5_15,
}

impl fmt::Display for Exception {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exception::Ex3535 => write!(f, "(3^5 | 3^5)"),
            Exception::Ex3_25_5_15 => write!(f, "(3^25 | 5^15)"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub pair: BiregularPair,
    pub eulerian: bool,
    pub family: Option<FamilyTag>,
    pub planar: bool,
    pub exception: Option<Exception>,
}

/// Equal sums, `q >= a`, and the bipartite Euler bound `m <= 2(p+q) - 4`
/// (vacuous when `p + q < 3`).
pub fn is_eulerian(pair: &BiregularPair) -> bool {
    let Some(m) = pair.edge_count() else {
        return false;
    };
    let n = pair.vertex_count();
    pair.q() >= pair.a() && (n < 3 || m + 4 <= 2 * n)
}

/// The family a pair belongs to, first match in the order Stars, K2bStack,
/// ThetaCycle, Cubic, Sector34, Sector35.
pub fn eulerian_family(pair: &BiregularPair) -> Option<FamilyTag> {
    let (a, p, b, q) = (pair.a(), pair.p(), pair.b(), pair.q());
    let tag = match a {
        1 if p == b * q => FamilyTag::Stars { b, q },
        2 if q % 2 == 0 && p == b * (q / 2) => FamilyTag::K2bStack { b, r: q / 2 },
        2 if q >= 3 && q % 2 == 1 && b % 2 == 0 && p == q * (b / 2) => {
            FamilyTag::ThetaCycle { r: b / 2, q }
        }
        3 if b == 3 && p == q && p >= 4 => FamilyTag::Cubic { p },
        3 if b == 4 && p % 4 == 0 && q * 4 == p * 3 && p / 4 >= 2 => {
            FamilyTag::Sector34 { r: p / 4 }
        }
        3 if b == 5 && p % 5 == 0 && q * 5 == p * 3 && p / 5 >= 4 => {
            FamilyTag::Sector35 { r: p / 5 }
        }
        _ => return None,
    };
    Some(tag)
}

pub fn exception(pair: &BiregularPair) -> Option<Exception> {
    match (pair.a(), pair.p(), pair.b(), pair.q()) {
        (3, 5, 3, 5) => Some(Exception::Ex3535),
        (3, 25, 5, 15) => Some(Exception::Ex3_25_5_15),
        _ => None,
    }
}

pub fn classify(pair: &BiregularPair) -> Classification {
    let eulerian = is_eulerian(pair);
    let exception = if eulerian { exception(pair) } else { None };
    Classification {
        pair: *pair,
        eulerian,
        family: eulerian_family(pair),
        planar: eulerian && exception.is_none(),
        exception,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, p: u64, b: u64, q: u64) -> BiregularPair {
        BiregularPair::new(a, p, b, q).unwrap()
    }

    #[test]
    fn eulerian_examples() {
        assert!(is_eulerian(&pair(1, 1, 1, 1)));
        // m = 12 > 2·7 - 4
        assert!(!is_eulerian(&pair(3, 4, 4, 3)));
        // m = 60 = 2·32 - 4
        assert!(is_eulerian(&pair(3, 20, 5, 12)));
    }

    #[test]
    fn family_examples() {
        assert_eq!(eulerian_family(&pair(2, 3, 2, 3)), Some(FamilyTag::ThetaCycle { r: 1, q: 3 }));
        assert_eq!(eulerian_family(&pair(3, 5, 3, 5)), Some(FamilyTag::Cubic { p: 5 }));
        assert_eq!(eulerian_family(&pair(3, 8, 4, 6)), Some(FamilyTag::Sector34 { r: 2 }));
        assert_eq!(eulerian_family(&pair(2, 2, 2, 2)), Some(FamilyTag::K2bStack { b: 2, r: 1 }));
        assert_eq!(eulerian_family(&pair(1, 3, 1, 3)), Some(FamilyTag::Stars { b: 1, q: 3 }));
        assert_eq!(eulerian_family(&pair(3, 4, 4, 3)), None);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&pair(3, 5, 3, 5));
        assert!(c.eulerian && !c.planar);
        assert_eq!(c.exception, Some(Exception::Ex3535));

        let c = classify(&pair(3, 25, 5, 15));
        assert!(c.eulerian && !c.planar);
        assert_eq!(c.exception, Some(Exception::Ex3_25_5_15));

        let c = classify(&pair(1, 6, 3, 2));
        assert!(c.eulerian && c.planar);
        assert_eq!(c.family, Some(FamilyTag::Stars { b: 3, q: 2 }));
        assert_eq!(c.exception, None);
    }

    #[test]
    fn orientation_does_not_matter() {
        assert_eq!(classify(&pair(4, 6, 3, 8)), classify(&pair(3, 8, 4, 6)));
    }

    #[test]
    fn unbalanced_is_not_eulerian() {
        let c = classify(&pair(3, 8, 4, 5));
        assert!(!c.eulerian && !c.planar && c.family.is_none());
    }
}
