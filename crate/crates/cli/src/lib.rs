//! Command dispatch for the `drinfeld` binary.

pub mod record;

use std::fmt::Write as _;
use std::sync::Arc;

use assoc_core::arith::fmt_rational;
use assoc_core::at::{c2n, i1, j1, j2, solve_cab, AtSolution};
use assoc_core::error::{AlgebraError, AssocError, MzvError};
use assoc_core::mzv::{shuffle, stuffle, ReductionTable, MAX_TABLE_WEIGHT};
use assoc_core::verify::run_suite;
use assoc_core::{Associators, Composition, Family, RenderStyle, Scalar, Word};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use record::{scalar_terms, OutputRecord, TermRecord};

/// Default reduction-table weight when `ASSOC_MAX_WEIGHT` is unset.
pub const DEFAULT_WEIGHT: u32 = 8;
/// Table weight used by `at solve --extended`.
pub const EXTENDED_WEIGHT: u32 = 11;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "drinfeld", version, about = "Exact coefficients of Drinfeld associators up to y-degree two")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiple zeta values: reduction, products, table checks.
    #[command(subcommand)]
    Mzv(MzvCommand),
    /// Associator coefficients.
    #[command(subcommand)]
    Assoc(AssocCommand),
    /// The Alekseev–Torossian generators and integrals.
    #[command(subcommand)]
    At(AtCommand),
}

#[derive(Debug, Subcommand)]
enum MzvCommand {
    /// Reduce ζ(n₁,…) (depth ≤ 2) to the basis, e.g. `4,2`.
    Reduce { composition: String },
    /// Shuffle product of two words.
    Shuffle { w1: String, w2: String },
    /// Stuffle product of two compositions.
    Stuffle { c1: String, c2: String },
    /// Rebuild the reduction table and compare it with direct summation.
    CheckTable {
        #[arg(long, default_value_t = DEFAULT_WEIGHT)]
        max_weight: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Style {
    TwoPiI,
    PiPower,
}

impl From<Style> for RenderStyle {
    fn from(s: Style) -> RenderStyle {
        match s {
            Style::TwoPiI => RenderStyle::TwoPiI,
            Style::PiPower => RenderStyle::PiPower,
        }
    }
}

#[derive(Debug, Subcommand)]
enum AssocCommand {
    /// Coefficient of one word.
    Coeff {
        #[arg(long, value_parser = parse_family)]
        which: Family,
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum)]
        style: Option<Style>,
    },
    /// Coefficients of every word of y-degree 1 or 2 up to a length.
    Table {
        #[arg(long, value_parser = parse_family)]
        which: Family,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum)]
        style: Option<Style>,
    },
    /// Recompute both theorem values and the exact invariant suite.
    VerifyTheorems,
}

#[derive(Debug, Subcommand)]
enum AtCommand {
    /// Solve for c_{2n} and every c_(α,β) with α+β = 2n−1.
    Solve {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
        /// Use the weight-11 table (needed for n = 4, 5).
        #[arg(long)]
        extended: bool,
    },
    /// Print I1, J1 and J2 for indices up to n.
    Integrals {
        #[arg(long)]
        n: u32,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<MzvError> for Failure {
    fn from(e: MzvError) -> Failure {
        let code = match e {
            MzvError::RankDeficient { .. } | MzvError::BasisRelation { .. } | MzvError::NumericMismatch { .. } => EXIT_MATH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Failure {
        let code = match e {
            AlgebraError::Inhomogeneous { .. } | AlgebraError::NonUnitConstant(_) | AlgebraError::BracketOverflow => EXIT_MATH,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<AssocError> for Failure {
    fn from(e: AssocError) -> Failure {
        match e {
            AssocError::Mzv(e) => e.into(),
            AssocError::Algebra(e) => e.into(),
            AssocError::TableTooSmall { .. } | AssocError::ZeroOrder => Failure::usage(e.to_string()),
            _ => Failure { code: EXIT_MATH, message: e.to_string() },
        }
    }
}

impl From<assoc_core::ParseError> for Failure {
    fn from(e: assoc_core::ParseError) -> Failure {
        Failure::usage(e.to_string())
    }
}

/// Parses the arguments (including the program name) and runs the command.
/// `max_weight_env` is the value of `ASSOC_MAX_WEIGHT`, if set.
pub fn run<I, T>(args: I, max_weight_env: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome { code: EXIT_OK, stdout: text, stderr: String::new() },
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut out = String::new();
    let result = default_weight(max_weight_env).and_then(|w| dispatch(cli.command, w, &mut out));
    match result {
        Ok(code) => Outcome { code, stdout: out, stderr: String::new() },
        Err(f) => Outcome { code: f.code, stdout: out, stderr: format!("error: {}\n", f.message) },
    }
}

fn default_weight(env: Option<&str>) -> Result<u32, Failure> {
    let Some(v) = env else { return Ok(DEFAULT_WEIGHT) };
    match v.trim().parse::<u32>() {
        Ok(w) if (2..=MAX_TABLE_WEIGHT).contains(&w) => Ok(w),
        _ => Err(Failure::usage(format!("ASSOC_MAX_WEIGHT must be an integer in 2..={MAX_TABLE_WEIGHT}, got {v:?}"))),
    }
}

fn table(weight: u32) -> Result<Arc<ReductionTable>, Failure> {
    Ok(ReductionTable::shared(weight)?)
}

fn dispatch(cmd: Command, weight: u32, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        Command::Mzv(c) => mzv(c, weight, out),
        Command::Assoc(c) => assoc(c, weight, out),
        Command::At(c) => at(c, weight, out),
    }
}

fn mzv(cmd: MzvCommand, weight: u32, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        MzvCommand::Reduce { composition } => {
            let c = Composition::parse(&composition)?;
            if c.weight() > MAX_TABLE_WEIGHT {
                return Err(MzvError::WeightOutOfRange { weight: c.weight(), max: MAX_TABLE_WEIGHT }.into());
            }
            let t = table(weight.max(c.weight()))?;
            writeln!(out, "{}", t.reduce(&c)?).unwrap();
        }
        MzvCommand::Shuffle { w1, w2 } => {
            let (u, v) = (Word::parse(&w1)?, Word::parse(&w2)?);
            if u.len() + v.len() > 64 {
                return Err(Failure::usage("product words would exceed 64 letters"));
            }
            writeln!(out, "{}", shuffle(&u, &v)).unwrap();
        }
        MzvCommand::Stuffle { c1, c2 } => {
            let (a, b) = (Composition::parse(&c1)?, Composition::parse(&c2)?);
            writeln!(out, "{}", stuffle(&a, &b)).unwrap();
        }
        MzvCommand::CheckTable { max_weight } => {
            let t = ReductionTable::build_unverified(max_weight)?;
            let deviation = t.verify_numeric(1e-6)?;
            let weights: Vec<String> = t.weights().map(|w| w.to_string()).collect();
            writeln!(out, "weights: {}", weights.join(", ")).unwrap();
            writeln!(out, "entries: {}", t.entries().count()).unwrap();
            writeln!(out, "max deviation: {deviation:.3e}").unwrap();
        }
    }
    Ok(EXIT_OK)
}

fn coefficient(assoc: &Associators, family: Family, w: &Word) -> Result<Scalar, Failure> {
    let max = assoc.table().max_weight();
    if w.len() as u32 > max {
        return Err(Failure::usage(format!("word {w} has length {} beyond the truncation {max}", w.len())));
    }
    Ok(assoc.coeff(family, w)?)
}

fn style_for(value: &Scalar, style: Option<Style>) -> RenderStyle {
    style.map_or_else(|| value.preferred_style(), Into::into)
}

fn assoc(cmd: AssocCommand, weight: u32, out: &mut String) -> Result<i32, Failure> {
    let assoc = Associators::new(table(weight)?);
    match cmd {
        AssocCommand::Coeff { which, word, json, style } => {
            let w = Word::parse(&word)?;
            let value = coefficient(&assoc, which, &w)?;
            let rec = OutputRecord::new(&w.to_string(), which.name(), &value, style_for(&value, style))?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&rec).expect("records serialize")).unwrap();
            } else {
                writeln!(out, "{}", rec.rendered).unwrap();
            }
        }
        AssocCommand::Table { which, max_len, json, style } => {
            if max_len as u32 > weight {
                return Err(Failure::usage(format!("--max-len {max_len} is beyond the truncation {weight}")));
            }
            let mut records = Vec::new();
            for len in 2..=max_len {
                for w in Word::all(len, 2).into_iter().filter(|w| w.y_degree() >= 1) {
                    let value = coefficient(&assoc, which, &w)?;
                    records.push(OutputRecord::new(&w.to_string(), which.name(), &value, style_for(&value, style))?);
                }
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&records).expect("records serialize")).unwrap();
            } else {
                for r in records {
                    writeln!(out, "{}\t{}", r.word, r.rendered).unwrap();
                }
            }
        }
        AssocCommand::VerifyTheorems => {
            let max_len = weight.min(8) as usize;
            let max_n = ((weight.min(7) - 1) / 2).max(1);
            let checks = run_suite(&assoc, max_len, max_n);
            for c in &checks {
                if c.passed {
                    writeln!(out, "PASS {}", c.name).unwrap();
                } else {
                    writeln!(out, "FAIL {}: {}", c.name, c.detail).unwrap();
                }
            }
            for (label, w, f) in [("f", Word::deg2(2, 4, 0), Family::Half), ("f~", Word::deg2(2, 4, 0), Family::At)] {
                if let Ok(v) = assoc.coeff(f, &w) {
                    writeln!(out, "{label}({w}) = {}", v.render_auto()).unwrap();
                }
            }
            if checks.iter().any(|c| !c.passed) {
                return Ok(EXIT_MATH);
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ValueRecord {
    terms: Vec<TermRecord>,
    rendered: String,
}

impl ValueRecord {
    fn new(s: &Scalar) -> ValueRecord {
        ValueRecord { terms: scalar_terms(s), rendered: s.render_auto() }
    }
}

#[derive(Serialize)]
struct CabRecord {
    alpha: u32,
    beta: u32,
    value: ValueRecord,
}

#[derive(Serialize)]
struct SolutionRecord {
    n: u32,
    equations: usize,
    rank: usize,
    c2n: ValueRecord,
    cab: Vec<CabRecord>,
}

fn solution_text(sol: &AtSolution, out: &mut String) {
    writeln!(out, "n = {}", sol.n).unwrap();
    writeln!(out, "equations = {}, unknowns = {}, rank = {}, residual = 0", sol.equations, sol.cab.len(), sol.rank).unwrap();
    writeln!(out, "c_{} = {}", 2 * sol.n, sol.c2n.render_auto()).unwrap();
    for ((a, b), v) in &sol.cab {
        writeln!(out, "c_({a},{b}) = {}", v.render_auto()).unwrap();
    }
}

fn at(cmd: AtCommand, weight: u32, out: &mut String) -> Result<i32, Failure> {
    match cmd {
        AtCommand::Solve { n, json, extended } => {
            if n == 0 {
                return Err(AssocError::ZeroOrder.into());
            }
            let needed = 2 * n + 1;
            let available = if extended { EXTENDED_WEIGHT } else { weight };
            if needed > available || needed == 10 {
                let hint = if extended || needed > EXTENDED_WEIGHT { "" } else { " (try --extended)" };
                return Err(Failure::usage(format!("n = {n} needs a reduction table of weight {needed}, have {available}{hint}")));
            }
            let assoc = Associators::new(table(available)?);
            let sol = solve_cab(n, &assoc)?;
            if json {
                let rec = SolutionRecord {
                    n,
                    equations: sol.equations,
                    rank: sol.rank,
                    c2n: ValueRecord::new(&sol.c2n),
                    cab: sol.cab.iter().map(|(&(alpha, beta), v)| CabRecord { alpha, beta, value: ValueRecord::new(v) }).collect(),
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&rec).expect("records serialize")).unwrap();
            } else {
                solution_text(&sol, out);
            }
        }
        AtCommand::Integrals { n } => {
            if n == 0 || n > 50 {
                return Err(Failure::usage("--n must be between 1 and 50"));
            }
            for k in 1..=n {
                writeln!(out, "I1({k}) = {}", fmt_rational(&i1(k))).unwrap();
                writeln!(out, "J1({k}) = {}", fmt_rational(&j1(k))).unwrap();
            }
            for l in 1..=n {
                for m in 1..=n {
                    writeln!(out, "J2({l},{m}) = {}", fmt_rational(&j2(l, m))).unwrap();
                }
            }
            for k in 1..=n {
                writeln!(out, "c_{} = {}", 2 * k, c2n(k)?.render_auto()).unwrap();
            }
        }
    }
    Ok(EXIT_OK)
}
