//! `bireg`: classify, construct, verify and enumerate realizations of
//! bipartite biregular pairs.
//!
//! Exit codes: 0 success (or planar), 1 failure (or Eulerian but not
//! planar), 2 not Eulerian, 64 usage, 65 unreadable input, 74 I/O.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bireg_core::classify::classify;
use bireg_core::construct::{construct_with, ConstructError, FixtureName, Fixtures};
use bireg_core::embedding::test_planarity;
use bireg_core::format::{parse_document, write_dot, write_edgelist, write_embedding, ParseError};
use bireg_core::oracle::{
    check_construction, count_realizations, enumerate_realizations, shuffled_realizations, sweep_pairs,
    verify_classifier, verify_exception_3535, verify_no_triangulation_4332, EnumerateError,
};
use bireg_core::pair::BiregularPair;
use bireg_core::verify::verify_embedded;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "bireg", version, about = "Planar realizations of bipartite biregular pairs (a^p | b^q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct PairArgs {
    /// Degree of the first part
    a: u64,
    /// Size of the first part
    p: u64,
    /// Degree of the second part
    b: u64,
    /// Size of the second part
    q: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Embedding,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether (a^p | b^q) is Eulerian and planar graphic
    Classify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify a plane realization
    Construct {
        #[command(flatten)]
        pair: PairArgs,
        /// Merge components with reconnection surgery
        #[arg(long)]
        connect: bool,
        /// Write the realization here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "embedding")]
        format: Format,
        #[arg(long)]
        json: bool,
    },
    /// Check an edge-list or embedding file
    Verify {
        file: PathBuf,
        /// Expected pair as a,p,b,q
        #[arg(long, value_parser = parse_expect)]
        expect: Option<BiregularPair>,
        #[arg(long)]
        json: bool,
    },
    /// List labeled realizations, or count them
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        count_only: bool,
        /// Keep only planar realizations
        #[arg(long)]
        planar_only: bool,
        /// Stop after this many realizations
        #[arg(long)]
        limit: Option<u64>,
        /// Scan columns in a random order drawn from this seed
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in consistency checks
    Selftest {
        /// Also run the exhaustive searches
        #[arg(long)]
        deep: bool,
        #[arg(long)]
        json: bool,
    },
}

fn parse_expect(s: &str) -> Result<BiregularPair, String> {
    let values: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()?;
    let [a, p, b, q] = values[..] else {
        return Err("expected four numbers a,p,b,q".into());
    };
    BiregularPair::new(a, p, b, q).map_err(|e| e.to_string())
}

/// A failed command: message for stderr plus exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(EXIT_IO, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

impl PairArgs {
    fn pair(&self) -> Result<BiregularPair, Failure> {
        BiregularPair::new(self.a, self.p, self.b, self.q).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))
    }
}

fn fixtures() -> Fixtures {
    match std::env::var_os("BIREG_FIXTURES") {
        Some(dir) => Fixtures::from_dir(dir),
        None => Fixtures::default(),
    }
}

fn print_json(value: &Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

fn cmd_classify(args: &PairArgs, json: bool) -> Outcome {
    let c = classify(&args.pair()?);
    let code = if c.planar {
        0
    } else if c.eulerian {
        1
    } else {
        2
    };
    if json {
        print_json(&json!(c))?;
        return Ok(code);
    }
    let mut out = io::stdout().lock();
    match (c.eulerian, c.planar, c.exception, c.family) {
        (true, true, _, Some(family)) => writeln!(out, "{}: Eulerian, planar, family {family}", c.pair)?,
        (true, false, Some(ex), _) => writeln!(out, "{}: Eulerian, NOT planar (exception {ex})", c.pair)?,
        _ => writeln!(out, "{}: not Eulerian", c.pair)?,
    }
    Ok(code)
}

fn render(format: Format, g: &bireg_core::graph::EmbeddedGraph) -> String {
    match format {
        Format::Edgelist => write_edgelist(g.graph()),
        Format::Embedding => write_embedding(g),
        Format::Dot => write_dot(g.graph()),
    }
}

fn cmd_construct(args: &PairArgs, connect: bool, out: Option<&Path>, format: Format, json: bool) -> Outcome {
    let pair = args.pair()?;
    let report = match construct_with(&pair, connect, &fixtures()) {
        Ok(report) => report,
        Err(e @ (ConstructError::NotPlanar(_) | ConstructError::CannotConnect(_))) => {
            return Err(Failure::new(1, e.to_string()));
        }
        Err(e @ ConstructError::FixtureMissing(_)) => return Err(Failure::new(EXIT_IO, e.to_string())),
        Err(e) => return Err(Failure::new(1, e.to_string())),
    };
    // construction verifies internally; check once more right before writing
    let check = verify_embedded(&report.graph, Some(&pair));
    if !check.passed() {
        return Err(Failure::new(1, format!("verification failed: {}", check.failures().join(", "))));
    }
    let text = render(format, &report.graph);
    if let Some(path) = out {
        fs::write(path, &text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    }
    if json {
        let mut value = json!({ "report": report.summary(), "verification": check });
        if out.is_none() {
            value["document"] = Value::String(text);
        }
        print_json(&value)?;
    } else if out.is_none() {
        io::stdout().lock().write_all(text.as_bytes())?;
    } else {
        eprintln!(
            "{pair}: {} vertices, {} edges, {} component(s), family {}",
            check.vertices, check.edges, check.components, report.family
        );
    }
    Ok(0)
}

fn cmd_verify(file: &Path, expect: Option<BiregularPair>, json: bool) -> Outcome {
    let text = fs::read_to_string(file).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", file.display())))?;
    let doc = match parse_document(&text) {
        Ok(doc) => doc,
        Err(ParseError::Syntax { line, message }) => {
            return Err(Failure::new(EXIT_DATA, format!("{}:{line}: {message}", file.display())));
        }
        // well-formed text describing an invalid graph: a failed check
        Err(e) => {
            if json {
                print_json(&json!({ "passed": false, "failures": [e.to_string()] }))?;
            } else {
                println!("FAIL: {e}");
            }
            return Ok(1);
        }
    };
    let expected = match (expect, doc.declared_degrees) {
        (Some(pair), _) => Some(pair),
        (None, Some((a, b))) => Some(
            BiregularPair::new(a, doc.graph.p() as u64, b, doc.graph.q() as u64)
                .map_err(|e| Failure::new(EXIT_DATA, e.to_string()))?,
        ),
        (None, None) => None,
    };
    let (embedded, source) = match doc.embedding {
        Some(e) => (Some(e), "rotations from file"),
        None => (test_planarity(&doc.graph), "rotation from planarity test"),
    };
    let mut failures: Vec<String> = Vec::new();
    let verification = match &embedded {
        Some(e) => {
            let v = verify_embedded(e, expected.as_ref());
            failures.extend(v.failures().into_iter().map(String::from));
            Some(v)
        }
        None => {
            failures.push("graph is not planar".into());
            if let Some(pair) = &expected {
                if !doc.graph.is_biregular(pair) {
                    failures.push("degrees do not match".into());
                }
            }
            None
        }
    };
    let passed = failures.is_empty();
    let g = &doc.graph;
    if json {
        print_json(&json!({
            "passed": passed,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "components": g.components(),
            "expected": expected,
            "embedding": source,
            "verification": verification,
            "failures": failures,
        }))?;
    } else {
        let mut out = io::stdout().lock();
        writeln!(out, "{} vertices, {} edges, {} component(s)", g.vertex_count(), g.edge_count(), g.components())?;
        if let Some(pair) = &expected {
            writeln!(out, "expected {pair}")?;
        }
        if let Some(v) = &verification {
            writeln!(out, "{source}: {} faces, plane = {}", v.genus.total_faces(), v.genus.plane)?;
        }
        if passed {
            writeln!(out, "PASS")?;
        } else {
            writeln!(out, "FAIL: {}", failures.join(", "))?;
        }
    }
    Ok(u8::from(!passed))
}

fn cmd_enumerate(
    args: &PairArgs,
    count_only: bool,
    planar_only: bool,
    limit: Option<u64>,
    seed: Option<u64>,
    json: bool,
) -> Outcome {
    let pair = args.pair()?;
    let too_large = |e: EnumerateError| match e {
        EnumerateError::TooLarge { .. } => {
            Failure::new(1, format!("{e}; for example --limit 100 (add --seed N to sample at random)"))
        }
        EnumerateError::Unbalanced(_) => Failure::new(1, e.to_string()),
    };
    let stream = match seed {
        Some(seed) => {
            if limit.is_none() && pair.p().saturating_mul(pair.q()) > bireg_core::oracle::UNLIMITED_CELLS {
                return Err(too_large(EnumerateError::TooLarge {
                    pair,
                    cells: pair.p().saturating_mul(pair.q()),
                }));
            }
            shuffled_realizations(&pair, limit, seed)
        }
        None => enumerate_realizations(&pair, limit),
    }
    .map_err(too_large)?;

    let mut out = io::stdout().lock();
    let (mut total, mut planar) = (0u64, 0u64);
    let mut listed = Vec::new();
    for g in stream {
        total += 1;
        let is_planar = test_planarity(&g).is_some();
        planar += u64::from(is_planar);
        if count_only || (planar_only && !is_planar) {
            continue;
        }
        if json {
            listed.push(json!({ "index": total - 1, "planar": is_planar, "edges": g.edges() }));
        } else {
            writeln!(out, "# realization {} ({})", total - 1, if is_planar { "planar" } else { "not planar" })?;
            out.write_all(write_edgelist(&g).as_bytes())?;
        }
    }
    if json {
        let mut value = json!({ "pair": pair, "total": total, "planar": planar });
        if limit.is_none() && seed.is_none() {
            value["expected_total"] = json!(count_realizations(&pair).to_string());
        }
        if !count_only {
            value["realizations"] = Value::Array(listed);
        }
        drop(out);
        print_json(&value)?;
    } else if count_only {
        writeln!(out, "total={total} planar={planar}")?;
    }
    Ok(0)
}

struct Check {
    name: &'static str,
    result: Result<String, String>,
}

fn run_selftest(deep: bool) -> Vec<Check> {
    let mut checks = Vec::new();

    let report = verify_classifier(12, 2000);
    checks.push(Check {
        name: "classifier",
        result: if report.passed() {
            Ok(format!("{} pairs, {} constructed", report.pairs_checked, report.constructed))
        } else {
            Err(format!("mismatch {:?}, construction {:?}", report.mismatch, report.construction_failure))
        },
    });

    let fixtures = fixtures();
    let fixture_errors: Vec<String> = FixtureName::ALL
        .iter()
        .filter_map(|&name| fixtures.load(name).err().map(|e| e.to_string()))
        .chain(fixtures.sector35_template().err().map(|e| e.to_string()))
        .collect();
    checks.push(Check {
        name: "fixtures",
        result: if fixture_errors.is_empty() {
            Ok("r7, r9 and the sector template verify".into())
        } else {
            Err(fixture_errors.join("; "))
        },
    });

    let pairs = sweep_pairs();
    let failures: Vec<String> = pairs
        .iter()
        .filter_map(|p| check_construction(p, &fixtures).err())
        .collect();
    checks.push(Check {
        name: "construction sweep",
        result: if failures.is_empty() {
            Ok(format!("{} pairs", pairs.len()))
        } else {
            Err(format!("{} failures, first: {}", failures.len(), failures[0]))
        },
    });

    if deep {
        let census = verify_exception_3535();
        checks.push(Check {
            name: "(3^5|3^5) exhaustive",
            result: if census.consistent() && census.total == 2040 && census.planar_count == 0 {
                Ok(format!("total={} planar=0", census.total))
            } else {
                Err(format!("{census:?}"))
            },
        });
        let tri = verify_no_triangulation_4332();
        checks.push(Check {
            name: "(4^3,3^2) triangulation",
            result: if tri.graphs_checked > 0 && tri.admissible_embeddings == 0 && tri.euler_violations == 0 {
                Ok(format!("{} graphs, 0 admissible embeddings", tri.graphs_checked))
            } else {
                Err(format!("{tri:?}"))
            },
        });
    }
    checks
}

fn cmd_selftest(deep: bool, json: bool) -> Outcome {
    let checks = run_selftest(deep);
    let passed = checks.iter().all(|c| c.result.is_ok());
    if json {
        let list: Vec<Value> = checks
            .iter()
            .map(|c| match &c.result {
                Ok(detail) => json!({ "check": c.name, "passed": true, "detail": detail }),
                Err(why) => json!({ "check": c.name, "passed": false, "detail": why }),
            })
            .collect();
        print_json(&json!({ "passed": passed, "checks": list }))?;
    } else {
        let mut out = io::stdout().lock();
        for c in &checks {
            match &c.result {
                Ok(detail) => writeln!(out, "PASS {}: {detail}", c.name)?,
                Err(why) => writeln!(out, "FAIL {}: {why}", c.name)?,
            }
        }
    }
    Ok(u8::from(!passed))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Classify { pair, json } => cmd_classify(&pair, json),
        Command::Construct {
            pair,
            connect,
            out,
            format,
            json,
        } => cmd_construct(&pair, connect, out.as_deref(), format, json),
        Command::Verify { file, expect, json } => cmd_verify(&file, expect, json),
        Command::Enumerate {
            pair,
            count_only,
            planar_only,
            limit,
            seed,
            json,
        } => cmd_enumerate(&pair, count_only, planar_only, limit, seed, json),
        Command::Selftest { deep, json } => cmd_selftest(deep, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("bireg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
