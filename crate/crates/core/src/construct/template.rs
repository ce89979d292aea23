//! Rotationally symmetric sector layouts.
//!
//! A template describes one sector of an annulus: a few vertex roles per
//! part and, for each role, its clockwise neighbor list. A neighbor may live
//! in an adjacent sector, written with a signed sector offset (`B2+1`).
//! Gluing `k` copies around the annulus gives a plane embedding.

use thiserror::Error;

use crate::graph::{EmbeddedGraph, EmbeddingError};

pub const TEMPLATE_HEADER: &str = "biregular-sector-template v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TemplateError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0} sectors are too few for this template")]
    TooFewSectors(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

/// A neighbor slot: role index in the opposite part plus sector offset.
pub type Slot = (usize, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorTemplate {
    a_rot: Vec<Vec<Slot>>,
    b_rot: Vec<Vec<Slot>>,
}

impl SectorTemplate {
    pub fn new(a_rot: Vec<Vec<Slot>>, b_rot: Vec<Vec<Slot>>) -> Self {
        SectorTemplate { a_rot, b_rot }
    }

    pub fn a_roles(&self) -> usize {
        self.a_rot.len()
    }

    pub fn b_roles(&self) -> usize {
        self.b_rot.len()
    }

    /// Glues `sectors` copies. Vertex `role` of sector `s` gets index
    /// `s·roles + role` in its part.
    pub fn instantiate(&self, sectors: usize) -> Result<EmbeddedGraph, TemplateError> {
        if sectors == 0 {
            return Err(TemplateError::TooFewSectors(0));
        }
        let k = sectors as i64;
        let expand = |rot: &[Vec<Slot>], other_roles: usize| -> Vec<Vec<usize>> {
            (0..sectors)
                .flat_map(|s| {
                    rot.iter().map(move |slots| {
                        slots
                            .iter()
                            .map(|&(role, off)| {
                                let sector = (s as i64 + off).rem_euclid(k) as usize;
                                sector * other_roles + role
                            })
                            .collect()
                    })
                })
                .collect()
        };
        let a = expand(&self.a_rot, self.b_roles());
        let b = expand(&self.b_rot, self.a_roles());
        EmbeddedGraph::from_rotation_lists(&a, &b).map_err(|e| match e {
            EmbeddingError::Graph(_) => TemplateError::TooFewSectors(sectors),
            other => TemplateError::Embedding(other),
        })
    }

    pub fn parse(text: &str) -> Result<Self, TemplateError> {
        let syntax = |line: usize, message: String| TemplateError::Syntax { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        match lines.next() {
            Some((_, h)) if h == TEMPLATE_HEADER => {}
            Some((n, h)) => return Err(syntax(n, format!("expected `{TEMPLATE_HEADER}`, got `{h}`"))),
            None => return Err(syntax(1, "empty template".into())),
        }
        let (n, sizes) = lines.next().ok_or_else(|| syntax(2, "missing size line".into()))?;
        let mut a_roles = None;
        let mut b_roles = None;
        for token in sizes.split_whitespace() {
            match token.split_once('=') {
                Some(("a", v)) => a_roles = v.parse::<usize>().ok(),
                Some(("b", v)) => b_roles = v.parse::<usize>().ok(),
                _ => return Err(syntax(n, format!("unexpected `{token}`"))),
            }
        }
        let (Some(a_roles), Some(b_roles)) = (a_roles, b_roles) else {
            return Err(syntax(n, "size line needs a=<roles> b=<roles>".into()));
        };
        match lines.next() {
            Some((_, "rotations:")) => {}
            Some((n, other)) => return Err(syntax(n, format!("expected `rotations:`, got `{other}`"))),
            None => return Err(syntax(n + 1, "missing rotations".into())),
        }
        let mut a_rot = vec![None; a_roles];
        let mut b_rot = vec![None; b_roles];
        for (n, line) in lines {
            let (label, list) = line
                .split_once(':')
                .ok_or_else(|| syntax(n, format!("expected `<role>: <slots>`, got `{line}`")))?;
            let (part, role) = parse_slot(label.trim()).ok_or_else(|| syntax(n, format!("bad role `{label}`")))?;
            if role.1 != 0 {
                return Err(syntax(n, format!("role `{label}` cannot carry an offset")));
            }
            let (table, bound, other, other_bound) = match part {
                'A' => (&mut a_rot, a_roles, 'B', b_roles),
                _ => (&mut b_rot, b_roles, 'A', a_roles),
            };
            if role.0 >= bound {
                return Err(syntax(n, format!("role `{label}` out of range")));
            }
            let mut slots = Vec::new();
            for token in list.split_whitespace() {
                match parse_slot(token) {
                    Some((p, slot)) if p == other && slot.0 < other_bound => slots.push(slot),
                    _ => return Err(syntax(n, format!("bad neighbor `{token}`"))),
                }
            }
            if table[role.0].replace(slots).is_some() {
                return Err(syntax(n, format!("role `{label}` given twice")));
            }
        }
        let finish = |t: Vec<Option<Vec<Slot>>>, part: char| {
            t.into_iter()
                .enumerate()
                .map(|(i, r)| r.ok_or_else(|| syntax(0, format!("missing rotation for {part}{i}"))))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(SectorTemplate {
            a_rot: finish(a_rot, 'A')?,
            b_rot: finish(b_rot, 'B')?,
        })
    }
}

/// `A3`, `B2+1`, `A0-1` -> part letter and slot.
fn parse_slot(token: &str) -> Option<(char, Slot)> {
    let part = token.chars().next().filter(|c| *c == 'A' || *c == 'B')?;
    let rest = &token[1..];
    let split = rest.find(['+', '-']).unwrap_or(rest.len());
    let role = rest[..split].parse().ok()?;
    let offset = if split == rest.len() {
        0
    } else {
        rest[split..].parse().ok()?
    };
    Some((part, (role, offset)))
}
