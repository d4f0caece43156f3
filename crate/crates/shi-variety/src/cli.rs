//! Command-line surface: enumeration, verification, vector inspection.
//!
//! Four subcommands. `enumerate` lists the admitted vectors of a type as a
//! table, JSON, or a DOT Hasse diagram. `check` runs the structural
//! verifications and reports witnesses for anything that fails. `vector`
//! evaluates one group element given as a generator word. `act` applies the
//! ⋄-action of a word to an admitted vector.
//!
//! Exit codes: 0 all good, 1 a verified property failed, 2 bad input or an
//! internal integrity trap, 3 a capacity budget refused the request. Data
//! goes to stdout and is byte-deterministic; timings go to stderr.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::components::{
    build_poset, check_cover_geometry, check_lattice, check_semidistributive,
    check_weak_order_interval, enumerate_admitted_bfs, enumerate_admitted_filter, CheckReport,
    ComponentPoset,
};
use crate::phirep::{diamond_action, phi_rep};
use crate::rootsys::{CartanType, RootSystem};
use crate::shi::{lambda_extract, AdmittedVector};
use crate::weyl::element_of_word;
use crate::{Error, Result};

/// Fixed RNG seed: keeps `check --diagram` output byte-identical across runs.
const DIAGRAM_SEED: u64 = 0x51e9_a7c3;

#[derive(Parser, Debug)]
#[command(
    name = "shi-variety",
    about = "Admitted vectors of affine Weyl groups: enumeration, posets, and structural checks",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the admitted vectors of one type, optionally as JSON or DOT.
    Enumerate {
        /// Cartan type letter, A through G
        letter: String,
        /// Rank
        rank: usize,
        /// Enumeration method
        #[arg(value_enum, default_value_t = Method::Bfs)]
        method: Method,
        /// Output format
        #[arg(value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run structural verifications; with no flags, every budget-free check.
    Check {
        /// Cartan type letter, A through G
        letter: String,
        /// Rank
        rank: usize,
        /// Verify that all meets and joins exist uniquely
        #[arg(long)]
        lattice: bool,
        /// Verify both semidistributive laws
        #[arg(long)]
        semidistributive: bool,
        /// Verify cover edges are unit increments realized by reflections
        #[arg(long)]
        covers: bool,
        /// Verify the weak-order interval [e, w_top] against the poset
        #[arg(long)]
        interval: bool,
        /// Verify the commuting diagram on N random element pairs
        #[arg(long, value_name = "N")]
        diagram: Option<usize>,
    },
    /// Shi vector, length, and component of the element of a generator word.
    Vector {
        /// Cartan type letter, A through G
        letter: String,
        /// Rank
        rank: usize,
        /// Word over generator indices 0..=rank, e.g. "0,1,2" or "0 1 2";
        /// empty for the identity
        #[arg(default_value = "")]
        word: String,
    },
    /// Apply the diamond action of a word to an admitted vector.
    Act {
        /// Cartan type letter, A through G
        letter: String,
        /// Rank
        rank: usize,
        /// Word over generator indices 0..=rank
        word: String,
        /// Admitted vector in full canonical coordinates, e.g. "0,0,1"
        lambda: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Bfs,
    Filter,
    Both,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Dot,
}

/// Outcome of one command: finished stdout payload plus the process exit
/// code. Errors are already folded in by [`run`].
#[derive(Debug)]
pub struct CmdResult {
    pub stdout: String,
    pub exit_code: i32,
}

/// Aggregated result of a `check` run.
pub struct RunReport {
    pub command: String,
    pub cartan_type: String,
    pub elements: usize,
    pub checks: Vec<CheckReport>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    /// Deterministic text rendering: canonical check order, sorted
    /// witnesses, no timing.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "type: {}", self.cartan_type);
        let _ = writeln!(s, "elements: {}", self.elements);
        for c in &self.checks {
            if c.passed() {
                let _ = writeln!(s, "check {}: pass ({} examined)", c.name, c.checked);
            } else {
                let _ = writeln!(
                    s,
                    "check {}: FAIL ({} examined, {} violations)",
                    c.name,
                    c.checked,
                    c.witnesses.len()
                );
                for w in &c.witnesses {
                    let _ = writeln!(s, "  witness: {w}");
                }
            }
        }
        s
    }
}

/// Executes a parsed command line; never panics on user input, never writes
/// to stdout itself.
pub fn run(cli: Cli) -> CmdResult {
    let started = Instant::now();
    let outcome = dispatch(&cli.command);
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    match outcome {
        Ok(result) => result,
        Err(e) => {
            eprintln!("error: {e}");
            CmdResult {
                stdout: String::new(),
                exit_code: e.exit_code(),
            }
        }
    }
}

fn dispatch(cmd: &Command) -> Result<CmdResult> {
    match cmd {
        Command::Enumerate {
            letter,
            rank,
            method,
            format,
        } => cmd_enumerate(&parse_type(letter, *rank)?, *method, *format),
        Command::Check {
            letter,
            rank,
            lattice,
            semidistributive,
            covers,
            interval,
            diagram,
        } => {
            let mut flags = CheckFlags {
                lattice: *lattice,
                semidistributive: *semidistributive,
                covers: *covers,
                interval: *interval,
                diagram: *diagram,
            };
            if !flags.any() {
                flags.lattice = true;
                flags.semidistributive = true;
                flags.covers = true;
            }
            cmd_check(&parse_type(letter, *rank)?, &flags)
        }
        Command::Vector { letter, rank, word } => {
            cmd_vector(&parse_type(letter, *rank)?, &parse_word(word)?)
        }
        Command::Act {
            letter,
            rank,
            word,
            lambda,
        } => cmd_act(
            &parse_type(letter, *rank)?,
            &parse_word(word)?,
            &parse_ints(lambda)?,
        ),
    }
}

fn parse_type(letter: &str, rank: usize) -> Result<RootSystem> {
    let mut chars = letter.chars();
    let (Some(c), None) = (chars.next(), chars.next()) else {
        return Err(Error::Input(format!(
            "type letter must be a single character, got {letter:?}"
        )));
    };
    RootSystem::new(CartanType::new(c, rank)?)
}

fn parse_word(word: &str) -> Result<Vec<usize>> {
    word.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Input(format!("bad generator index {t:?} in word")))
        })
        .collect()
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Input(format!("bad integer {t:?} in vector")))
        })
        .collect()
}

fn fmt_tuple(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

/// Which verifications `check` should run.
pub struct CheckFlags {
    pub lattice: bool,
    pub semidistributive: bool,
    pub covers: bool,
    pub interval: bool,
    pub diagram: Option<usize>,
}

impl CheckFlags {
    fn any(&self) -> bool {
        self.lattice
            || self.semidistributive
            || self.covers
            || self.interval
            || self.diagram.is_some()
    }
}

/// Enumerates admitted vectors, cross-checking methods when asked, and
/// renders them in the chosen format.
pub fn cmd_enumerate(rs: &RootSystem, method: Method, format: Format) -> Result<CmdResult> {
    let (elements, note) = match method {
        Method::Bfs => (enumerate_admitted_bfs(rs)?, None),
        Method::Filter => (enumerate_admitted_filter(rs)?, None),
        Method::Both => {
            let bfs = enumerate_admitted_bfs(rs)?;
            let filter = enumerate_admitted_filter(rs)?;
            if bfs != filter {
                return Err(Error::PropertyViolation(format!(
                    "enumeration methods disagree on {}: bfs found {}, filter found {}",
                    rs.cartan_type(),
                    bfs.len(),
                    filter.len()
                )));
            }
            let n = bfs.len();
            (bfs, Some(format!("methods agree: {n} = {n}")))
        }
    };
    let poset = build_poset(rs, elements)?;
    let stdout = match format {
        Format::Table => render_table(rs, &poset, &note),
        Format::Json => render_json(rs, &poset, &[])?,
        Format::Dot => render_dot(rs, &poset),
    };
    Ok(CmdResult {
        stdout,
        exit_code: 0,
    })
}

fn render_table(rs: &RootSystem, poset: &ComponentPoset, note: &Option<String>) -> String {
    let mut s = String::new();
    let order = rs.display_order();
    let names: Vec<String> = order.iter().map(|&i| rs.root_name(i)).collect();
    let _ = writeln!(s, "type: {}", rs.cartan_type());
    let _ = writeln!(s, "roots: {}", names.join(" "));
    for v in poset.elements() {
        let _ = writeln!(s, "{}", fmt_tuple(&v.display_coords(rs)));
    }
    let _ = writeln!(s, "count: {}", poset.len());
    if let Some(n) = note {
        let _ = writeln!(s, "{n}");
    }
    s
}

fn render_json(rs: &RootSystem, poset: &ComponentPoset, checks: &[CheckReport]) -> Result<String> {
    let roots: Vec<Vec<i64>> = rs.positive_roots().to_vec();
    let admitted: Vec<Vec<i64>> = poset
        .elements()
        .iter()
        .map(|v| v.coords().to_vec())
        .collect();
    let covers: Vec<Vec<usize>> = poset.covers().iter().map(|&(a, b)| vec![a, b]).collect();
    let mut check_map = serde_json::Map::new();
    for c in checks {
        check_map.insert(
            c.name.clone(),
            serde_json::json!({
                "checked": c.checked,
                "passed": c.passed(),
                "witnesses": c.witnesses,
            }),
        );
    }
    let value = serde_json::json!({
        "type": rs.cartan_type().letter().to_string(),
        "rank": rs.rank(),
        "roots": roots,
        "admitted": admitted,
        "covers": covers,
        "checks": check_map,
    });
    serde_json::to_string_pretty(&value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Error::Input(format!("serialization failed: {e}")))
}

fn render_dot(rs: &RootSystem, poset: &ComponentPoset) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph admitted {{");
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  node [shape=box];");
    for (i, v) in poset.elements().iter().enumerate() {
        let _ = writeln!(
            s,
            "  n{i} [label=\"{}\"];",
            fmt_tuple(&v.display_coords(rs))
        );
    }
    for &(a, b) in poset.covers() {
        let lo = poset.element(a).coords();
        let hi = poset.element(b).coords();
        let alpha = (0..lo.len())
            .find(|&i| lo[i] != hi[i])
            .map(|i| rs.root_name(i))
            .unwrap_or_default();
        let _ = writeln!(s, "  n{a} -> n{b} [label=\"s_{{{alpha}}}\"];");
    }
    let _ = writeln!(s, "}}");
    s
}

/// Runs the selected structural checks and renders a report; exit code 1
/// when any check reports a witness.
pub fn cmd_check(rs: &RootSystem, flags: &CheckFlags) -> Result<CmdResult> {
    let elements = enumerate_admitted_bfs(rs)?;
    let poset = build_poset(rs, elements)?;
    let mut checks = Vec::new();
    if flags.lattice {
        checks.push(check_lattice(&poset));
    }
    if flags.semidistributive {
        checks.push(check_semidistributive(&poset));
    }
    if flags.covers {
        checks.push(check_cover_geometry(rs, &poset)?);
    }
    if flags.interval {
        checks.push(check_weak_order_interval(rs, &poset)?);
    }
    if let Some(n) = flags.diagram {
        checks.push(check_diagram(rs, n)?);
    }
    let report = RunReport {
        command: format!("check {}", rs.cartan_type()),
        cartan_type: rs.cartan_type().to_string(),
        elements: poset.len(),
        checks,
    };
    let exit_code = i32::from(!report.all_passed());
    Ok(CmdResult {
        stdout: report.render(),
        exit_code,
    })
}

/// Commuting-diagram sampling: F(w)(ι(u)) must equal ι(wu) for random
/// pairs of short elements. Seeded, so reruns examine the same pairs.
pub fn check_diagram(rs: &RootSystem, samples: usize) -> Result<CheckReport> {
    let mut rng = StdRng::seed_from_u64(DIAGRAM_SEED);
    let mut report = CheckReport {
        name: "diagram".into(),
        checked: 0,
        witnesses: Vec::new(),
    };
    for _ in 0..samples {
        let w = random_element(rs, &mut rng, 10)?;
        let u = random_element(rs, &mut rng, 10)?;
        report.checked += 1;
        let lhs = phi_rep(rs, &w)?.apply(&u.shi_vector(rs)?);
        let rhs = w.compose(&u).shi_vector(rs)?;
        if lhs != rhs {
            report.witnesses.push(format!(
                "F(w)(i(u)) = {lhs:?} but i(wu) = {rhs:?} for w = {:?}, u = {:?}",
                w.word(rs)?,
                u.word(rs)?
            ));
        }
    }
    report.witnesses.sort();
    Ok(report)
}

fn random_element(
    rs: &RootSystem,
    rng: &mut StdRng,
    max_len: usize,
) -> Result<crate::weyl::AffineElement> {
    let len = rng.gen_range(0..=max_len);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=rs.rank())).collect();
    element_of_word(rs, &word)
}

/// Evaluates one word: Shi vector, both lengths, component vector.
pub fn cmd_vector(rs: &RootSystem, word: &[usize]) -> Result<CmdResult> {
    let w = element_of_word(rs, word)?;
    let k = w.shi_vector(rs)?;
    let len_shi = w.length_from_shi(rs)?;
    let len_bfs = w.length_bfs(rs, word.len().max(len_shi))?;
    let lambda = lambda_extract(rs, &k)?;
    let mut s = String::new();
    let _ = writeln!(s, "type: {}", rs.cartan_type());
    let _ = writeln!(
        s,
        "word: {}",
        if word.is_empty() {
            "(identity)".to_string()
        } else {
            word.iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    );
    let _ = writeln!(s, "k: {}", fmt_tuple(&k));
    let _ = writeln!(s, "length (coefficient sum): {len_shi}");
    let _ = writeln!(s, "length (cayley bfs): {len_bfs}");
    let _ = writeln!(s, "lambda: {}", fmt_tuple(lambda.coords()));
    Ok(CmdResult {
        stdout: s,
        exit_code: 0,
    })
}

/// Applies w ⋄ λ for a word and a full-coordinate admitted vector.
pub fn cmd_act(rs: &RootSystem, word: &[usize], lambda: &[i64]) -> Result<CmdResult> {
    let v = AdmittedVector::from_full(rs, lambda.to_vec())?;
    let w = element_of_word(rs, word)?;
    let image = diamond_action(rs, &w, &v)?;
    let mut s = String::new();
    let _ = writeln!(s, "type: {}", rs.cartan_type());
    let _ = writeln!(s, "lambda: {}", fmt_tuple(v.coords()));
    let _ = writeln!(s, "result: {}", fmt_tuple(image.coords()));
    Ok(CmdResult {
        stdout: s,
        exit_code: 0,
    })
}
