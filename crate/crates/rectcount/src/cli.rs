//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a counterexample (or a
//! count mismatch) is found, 2 for usage, parse and guard errors.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rectcount_core::verify::DEFAULT_SEED;
use rectcount_core::{
    bernoulli_row_via, count_direct, count_inclusion_exclusion, BernoulliRoute, Evaluator, IdentityId, Perturbation,
};

use crate::format::{parse_matrix, parse_pattern, SymbolTable};
use crate::report::{render_table, to_json, write_atomic, Report};
use crate::suite::{self, SuiteError, SuiteOptions};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the default random seed.
pub const SEED_ENV: &str = "RECTCOUNT_SEED";

#[derive(Debug, Parser)]
#[command(name = "rectcount", version, about = "Count matching columns and verify binomial identities exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the columns of a matrix equal to a pattern.
    Count {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Run a verification check and report counterexamples.
    #[command(after_help = suite::defaults_help())]
    Verify {
        /// prop2_1, eq7, eq8, eq9, eq10, klee, eq11, eq12, counting, pipeline,
        /// power, alternating, bernoulli, or all
        check: String,
        #[command(flatten)]
        ranges: RangeArgs,
        /// Size bound for counting (random n), pipeline, power, alternating and bernoulli.
        #[arg(long)]
        n_max: Option<usize>,
        /// Random instances for the counting check.
        #[arg(long, default_value_t = suite::COUNTING_SAMPLES)]
        samples: u64,
        /// Random seed; defaults to $RECTCOUNT_SEED, then a built-in constant.
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the report as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Add DELTA to right-hand term TERM of every identity evaluation.
        #[arg(long, value_name = "TERM:DELTA")]
        perturb: Option<PerturbArg>,
    },
    /// Print both sides of an identity for every tuple of a grid.
    Sweep {
        identity: String,
        #[command(flatten)]
        ranges: RangeArgs,
        #[arg(long, value_name = "TERM:DELTA")]
        perturb: Option<PerturbArg>,
    },
    /// Print partial row sums Σ_{i≤m} C(n, i) for m = 0..=upto.
    Bernoulli {
        n: u64,
        #[arg(long)]
        upto: Option<u64>,
        #[arg(long, value_enum, default_value_t = Via::Direct)]
        via: Via,
        /// Free parameter of the eq11 and eq12 routes.
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    InclusionExclusion,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Via {
    Direct,
    Eq11,
    Eq12,
}

/// An inclusive range `a..b`, or a single value `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct RangeArg(i64, i64);

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("invalid integer '{t}'"));
        match s.split_once("..") {
            Some((lo, hi)) => {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                Ok(RangeArg(parse(lo)?, parse(hi)?))
            }
            None => parse(s).map(|v| RangeArg(v, v)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct PerturbArg(Perturbation);

impl FromStr for PerturbArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (term, delta) = s.split_once(':').ok_or("expected TERM:DELTA")?;
        let term = term.parse().map_err(|_| format!("invalid term index '{term}'"))?;
        let delta = delta.parse().map_err(|_| format!("invalid delta '{delta}'"))?;
        Ok(PerturbArg(Perturbation { term, delta }))
    }
}

#[derive(Debug, Args)]
struct RangeArgs {
    #[arg(long, value_name = "RANGE")]
    n: Option<RangeArg>,
    #[arg(long, value_name = "RANGE")]
    k: Option<RangeArg>,
    #[arg(long, value_name = "RANGE")]
    l: Option<RangeArg>,
    #[arg(long, value_name = "RANGE")]
    m: Option<RangeArg>,
    #[arg(long, value_name = "RANGE")]
    m1: Option<RangeArg>,
    #[arg(long, value_name = "RANGE")]
    m2: Option<RangeArg>,
}

impl RangeArgs {
    fn overrides(&self) -> Vec<(String, (i64, i64))> {
        [("n", self.n), ("k", self.k), ("l", self.l), ("m", self.m), ("m1", self.m1), ("m2", self.m2)]
            .into_iter()
            .filter_map(|(name, r)| r.map(|RangeArg(lo, hi)| (name.to_owned(), (lo, hi))))
            .collect()
    }
}

/// A failed invocation: the message goes to stderr, `code` is the exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl fmt::Display) -> Self {
        Failure { code: EXIT_USAGE, message: message.to_string() }
    }
}

impl From<SuiteError> for Failure {
    fn from(e: SuiteError) -> Self {
        Failure::usage(e)
    }
}

impl From<rectcount_core::Error> for Failure {
    fn from(e: rectcount_core::Error) -> Self {
        Failure::usage(e)
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Count { matrix, pattern, method } => cmd_count(&matrix, &pattern, method, out),
        Command::Verify { check, ranges, n_max, samples, seed, json, perturb } => {
            let options = SuiteOptions {
                seed: resolve_seed(seed)?,
                samples,
                n_max,
                ranges: ranges.overrides(),
                perturbation: perturb.map(|p| p.0),
            };
            cmd_verify(&check, &options, json.as_deref(), out)
        }
        Command::Sweep { identity, ranges, perturb } => cmd_sweep(&identity, &ranges, perturb, out),
        Command::Bernoulli { n, upto, via, k } => cmd_bernoulli(n, upto, via, k, out),
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Failure::usage(format!("{SEED_ENV}='{v}' is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: impl fmt::Display) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::usage(format!("writing output: {e}")))
}

fn cmd_count(matrix_path: &Path, pattern_path: &Path, method: Method, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut table = SymbolTable::new();
    let matrix = parse_matrix(&read(matrix_path)?, &mut table)
        .map_err(|e| Failure::usage(format!("{}: {e}", matrix_path.display())))?;
    let pattern = parse_pattern(&read(pattern_path)?, matrix.rows(), &mut table)
        .map_err(|e| Failure::usage(format!("{}: {e}", pattern_path.display())))?;
    match method {
        Method::Direct => emit(out, count_direct(&matrix, &pattern)?)?,
        Method::InclusionExclusion => emit(out, count_inclusion_exclusion(&matrix, &pattern)?)?,
        Method::Both => {
            let direct = count_direct(&matrix, &pattern)?;
            let theorem = count_inclusion_exclusion(&matrix, &pattern)?;
            let verdict = if direct == theorem { "MATCH" } else { "MISMATCH" };
            emit(out, format!("direct={direct} incl-excl={theorem} {verdict}"))?;
            if direct != theorem {
                return Ok(EXIT_COUNTEREXAMPLE);
            }
        }
    }
    Ok(EXIT_PASS)
}

fn cmd_verify(check: &str, options: &SuiteOptions, json: Option<&Path>, out: &mut dyn Write) -> Result<i32, Failure> {
    let reports: Vec<Report> = if check.eq_ignore_ascii_case("all") {
        suite::run_all(options)?
    } else {
        suite::run_check(check.parse()?, options)?
    };
    emit(out, render_table(&reports).trim_end())?;
    if let Some(path) = json {
        let doc = to_json(&reports).map_err(|e| Failure::usage(format!("serializing report: {e}")))?;
        write_atomic(path, &doc).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    }
    Ok(if reports.iter().all(Report::passed) { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_sweep(identity: &str, ranges: &RangeArgs, perturb: Option<PerturbArg>, out: &mut dyn Write) -> Result<i32, Failure> {
    let id: IdentityId = identity.parse().map_err(|_| Failure::usage(format!("unknown identity '{identity}'")))?;
    let grid = suite::identity_grid(id, &ranges.overrides())?;
    let max_param = grid.axes().iter().map(|a| a.hi).max().unwrap_or(0);
    let evaluator = Evaluator::new(2 * max_param.max(0) as usize).with_perturbation(perturb.map(|p| p.0));
    let mut all_hold = true;
    emit(out, format!("{} lhs rhs terms status", id.params().join(" ")))?;
    for values in grid.iter() {
        let sides = evaluator.eval(&id.instantiate(&values)?)?;
        all_hold &= sides.holds();
        let params: Vec<String> = values.iter().map(i64::to_string).collect();
        let status = if sides.holds() { "ok" } else { "FAIL" };
        emit(out, format!("{} {} {} {} {status}", params.join(" "), sides.lhs, sides.rhs, sides.rhs_terms))?;
    }
    Ok(if all_hold { EXIT_PASS } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_bernoulli(n: u64, upto: Option<u64>, via: Via, k: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    let upto = upto.unwrap_or(n);
    if upto > n {
        return Err(Failure::usage(format!("--upto {upto} exceeds n = {n}")));
    }
    let route = match via {
        Via::Direct => BernoulliRoute::Direct,
        Via::Eq11 => BernoulliRoute::Eq11 { k },
        Via::Eq12 => BernoulliRoute::Eq12 { k },
    };
    let row = bernoulli_row_via(route, n, upto)?;
    let row: Vec<String> = row.iter().map(ToString::to_string).collect();
    emit(out, row.join(" "))?;
    Ok(EXIT_PASS)
}
