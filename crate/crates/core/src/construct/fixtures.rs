//! Shipped drawings: the r = 7 and r = 9 realizations of
//! `(3^{5r} | 5^{3r})` and the sector template for even r.
//!
//! Copies compiled into the library are used by default; a directory may be
//! substituted (the CLI honors `BIREG_FIXTURES`). Every load is verified, so
//! a mis-transcribed file is rejected instead of producing a bad realization.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use crate::embedding::test_planarity;
use crate::format::parse_document;
use crate::graph::EmbeddedGraph;
use crate::pair::BiregularPair;
use crate::verify::verify_embedded;

use super::template::SectorTemplate;
use super::ConstructError;

const R7: &str = include_str!("../../../../fixtures/r7.edgelist");
const R9: &str = include_str!("../../../../fixtures/r9.edgelist");
const SECTOR35: &str = include_str!("../../../../fixtures/sector35.template");

pub const SECTOR35_FILE: &str = "sector35.template";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixtureName {
    R7,
    R9,
}

impl FixtureName {
    pub const ALL: [FixtureName; 2] = [FixtureName::R7, FixtureName::R9];

    pub fn file_name(self) -> &'static str {
        match self {
            FixtureName::R7 => "r7.edgelist",
            FixtureName::R9 => "r9.edgelist",
        }
    }

    pub fn r(self) -> u64 {
        match self {
            FixtureName::R7 => 7,
            FixtureName::R9 => 9,
        }
    }

    pub fn pair(self) -> BiregularPair {
        let r = self.r();
        BiregularPair::new(3, 5 * r, 5, 3 * r).expect("small pair")
    }

    fn embedded_text(self) -> &'static str {
        match self {
            FixtureName::R7 => R7,
            FixtureName::R9 => R9,
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.r())
    }
}

#[derive(Debug, Clone)]
enum Source {
    Embedded,
    Dir(PathBuf),
}

/// A fixture source with per-file caching of verified results.
#[derive(Debug)]
pub struct Fixtures {
    source: Source,
    drawings: [OnceLock<Result<EmbeddedGraph, ConstructError>>; 2],
    template: OnceLock<Result<SectorTemplate, ConstructError>>,
}

impl Fixtures {
    fn with_source(source: Source) -> Self {
        Fixtures {
            source,
            drawings: [OnceLock::new(), OnceLock::new()],
            template: OnceLock::new(),
        }
    }

    /// The copies compiled into the library, shared process-wide.
    pub fn embedded() -> &'static Fixtures {
        static EMBEDDED: OnceLock<Fixtures> = OnceLock::new();
        EMBEDDED.get_or_init(Fixtures::default)
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        Fixtures::with_source(Source::Dir(dir.as_ref().to_path_buf()))
    }

    fn read(&self, file: &str, embedded: &'static str) -> Result<String, ConstructError> {
        match &self.source {
            Source::Embedded => Ok(embedded.to_string()),
            Source::Dir(dir) => {
                let path = dir.join(file);
                std::fs::read_to_string(&path).map_err(|_| ConstructError::FixtureMissing(path))
            }
        }
    }

    pub fn load(&self, name: FixtureName) -> Result<EmbeddedGraph, ConstructError> {
        let slot = &self.drawings[name as usize];
        slot.get_or_init(|| {
            let text = self.read(name.file_name(), name.embedded_text())?;
            load_drawing(name, &text)
        })
        .clone()
    }

    pub fn sector35_template(&self) -> Result<SectorTemplate, ConstructError> {
        self.template
            .get_or_init(|| {
                let text = self.read(SECTOR35_FILE, SECTOR35)?;
                load_template(&text)
            })
            .clone()
    }
}

impl Default for Fixtures {
    /// The copies compiled into the library.
    fn default() -> Self {
        Fixtures::with_source(Source::Embedded)
    }
}

fn invalid(name: impl fmt::Display, reason: impl Into<String>) -> ConstructError {
    ConstructError::FixtureInvalid {
        name: name.to_string(),
        reason: reason.into(),
    }
}

fn load_drawing(name: FixtureName, text: &str) -> Result<EmbeddedGraph, ConstructError> {
    let doc = parse_document(text).map_err(|e| invalid(name, e.to_string()))?;
    let embedded = match doc.embedding {
        Some(e) => e,
        None => test_planarity(&doc.graph).ok_or_else(|| invalid(name, "graph is not planar"))?,
    };
    let check = verify_embedded(&embedded, Some(&name.pair()));
    if !check.passed() {
        return Err(invalid(name, check.failures().join(", ")));
    }
    Ok(embedded)
}

fn load_template(text: &str) -> Result<SectorTemplate, ConstructError> {
    let template = SectorTemplate::parse(text).map_err(|e| invalid(SECTOR35_FILE, e.to_string()))?;
    if template.a_roles() != 10 || template.b_roles() != 6 {
        return Err(invalid(SECTOR35_FILE, "expected 10 A roles and 6 B roles"));
    }
    // two sectors give the smallest member, r = 4
    let sample = template
        .instantiate(2)
        .map_err(|e| invalid(SECTOR35_FILE, e.to_string()))?;
    let pair = BiregularPair::new(3, 20, 5, 12).expect("small pair");
    let check = verify_embedded(&sample, Some(&pair));
    if !check.passed() {
        return Err(invalid(SECTOR35_FILE, check.failures().join(", ")));
    }
    Ok(template)
}
