//! Named verification checks, their default grids, and a parallel runner.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use rectcount_core::verify::{self, Outcome, DEFAULT_SEED};
use rectcount_core::{IdentityId, ParamGrid, Perturbation};
use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Core(#[from] rectcount_core::Error),
    #[error("{0}")]
    Usage(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Identity(IdentityId),
    /// Direct scan against inclusion-exclusion on exhaustive and random matrices.
    Counting,
    /// Bivariate sum over the derived table vs closed formula vs brute force.
    Pipeline,
    /// `ν(c) = 2^{n-k}` and `A(I) = 2^{n-|I|}` on incidence matrices.
    Power,
    /// The alternating subset sum vanishes.
    Alternating,
    /// The Bernoulli-triangle routes agree and do not depend on `k`.
    Bernoulli,
}

impl Check {
    pub fn all() -> Vec<Check> {
        IdentityId::ALL
            .into_iter()
            .map(Check::Identity)
            .chain([Check::Counting, Check::Pipeline, Check::Power, Check::Alternating, Check::Bernoulli])
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Check::Identity(id) => id.name(),
            Check::Counting => "counting",
            Check::Pipeline => "pipeline",
            Check::Power => "power",
            Check::Alternating => "alternating",
            Check::Bernoulli => "bernoulli",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, SuiteError> {
        Check::all()
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| SuiteError::Usage(format!("unknown check '{s}'")))
    }
}

/// Inclusive default ranges per identity parameter.
pub fn default_ranges(id: IdentityId) -> Vec<(i64, i64)> {
    match id {
        IdentityId::Prop2_1 => vec![(0, 64)],
        IdentityId::Eq7 => vec![(0, 16); 5],
        IdentityId::Eq8 | IdentityId::Eq10 => vec![(0, 60); 3],
        IdentityId::Eq9 => vec![(0, 30); 4],
        IdentityId::Klee => vec![(0, 40), (0, 80)],
        IdentityId::Eq11 | IdentityId::Eq12 => vec![(0, 40), (0, 12), (0, 40)],
    }
}

pub const COUNTING_EXHAUSTIVE: (usize, usize) = (3, 3);
pub const COUNTING_RANDOM_M_MAX: usize = 12;
pub const COUNTING_RANDOM_N_MAX: usize = 64;
pub const COUNTING_ALPHABET_MAX: u32 = 4;
pub const COUNTING_SAMPLES: u64 = 1000;
pub const PIPELINE_N_MAX: usize = 10;
pub const ALTERNATING_N_MAX: usize = 20;
pub const BERNOULLI_N_MAX: usize = 30;
pub const BERNOULLI_K_MAX: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: u64,
    /// Replaces the default size bound of the non-identity checks.
    pub n_max: Option<usize>,
    /// Range overrides by parameter name, for single identity checks.
    pub ranges: Vec<(String, (i64, i64))>,
    pub perturbation: Option<Perturbation>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: DEFAULT_SEED, samples: COUNTING_SAMPLES, n_max: None, ranges: Vec::new(), perturbation: None }
    }
}

/// The default grid of `id` with `overrides` applied. Overriding a parameter
/// the identity does not have, or leaving no admissible tuple, is an error.
pub fn identity_grid(id: IdentityId, overrides: &[(String, (i64, i64))]) -> Result<ParamGrid, SuiteError> {
    let mut ranges = default_ranges(id);
    for (name, range) in overrides {
        let pos = id.params().iter().position(|p| p == name).ok_or_else(|| {
            SuiteError::Usage(format!("{id} has no parameter '{name}' (parameters: {})", id.params().join(", ")))
        })?;
        ranges[pos] = *range;
    }
    let grid = ParamGrid::for_identity(id, &ranges)?;
    if grid.is_empty() {
        return Err(SuiteError::Usage(format!("grid {grid} has no admissible tuples")));
    }
    Ok(grid)
}

fn timed(f: impl FnOnce() -> Result<Outcome, rectcount_core::Error>) -> Result<Report, SuiteError> {
    let start = Instant::now();
    let outcome = f()?;
    Ok(Report::from_outcome(outcome, start.elapsed()))
}

/// Sweeps `grid`, one parallel task per value of its first axis.
pub fn run_identity(id: IdentityId, grid: &ParamGrid, perturbation: Option<Perturbation>) -> Result<Report, SuiteError> {
    timed(|| {
        let parts = grid
            .split_first_axis()
            .par_iter()
            .map(|part| verify::verify_identity(id, part, perturbation))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Outcome::merge(id.name(), grid.to_string(), parts))
    })
}

pub fn run_check(check: Check, options: &SuiteOptions) -> Result<Vec<Report>, SuiteError> {
    if !options.ranges.is_empty() && !matches!(check, Check::Identity(_)) {
        return Err(SuiteError::Usage(format!("parameter ranges do not apply to '{check}'")));
    }
    let n_max = |default: usize| options.n_max.unwrap_or(default);
    let reports = match check {
        Check::Identity(id) => vec![run_identity(id, &identity_grid(id, &options.ranges)?, options.perturbation)?],
        Check::Counting => {
            let (m, n) = COUNTING_EXHAUSTIVE;
            let (exhaustive, random) = rayon::join(
                || timed(|| verify::verify_counting_exhaustive(m, n)),
                || {
                    timed(|| {
                        verify::verify_counting_random(
                            COUNTING_RANDOM_M_MAX,
                            n_max(COUNTING_RANDOM_N_MAX),
                            COUNTING_ALPHABET_MAX,
                            options.samples,
                            options.seed,
                        )
                    })
                },
            );
            vec![exhaustive?, random?]
        }
        Check::Pipeline => vec![timed(|| verify::verify_pipeline(n_max(PIPELINE_N_MAX)))?],
        Check::Power => vec![timed(|| verify::verify_power_counts(n_max(PIPELINE_N_MAX)))?],
        Check::Alternating => vec![timed(|| verify::verify_alternating(n_max(ALTERNATING_N_MAX)))?],
        Check::Bernoulli => vec![timed(|| verify::verify_bernoulli(n_max(BERNOULLI_N_MAX), BERNOULLI_K_MAX))?],
    };
    Ok(reports)
}

/// Every check with its defaults, in [`Check::all`] order.
pub fn run_all(options: &SuiteOptions) -> Result<Vec<Report>, SuiteError> {
    if !options.ranges.is_empty() || options.n_max.is_some() {
        return Err(SuiteError::Usage("'all' runs the default grids; range flags are not accepted".into()));
    }
    let per_check = Check::all()
        .par_iter()
        .map(|&c| run_check(c, options))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(per_check.into_iter().flatten().collect())
}

/// Help text describing every default grid.
pub fn defaults_help() -> String {
    let mut out = String::from("Default grids:\n");
    for id in IdentityId::ALL {
        let grid = ParamGrid::for_identity(id, &default_ranges(id)).expect("default ranges are valid");
        out.push_str(&format!("  {:<12} {grid}\n", id.name()));
    }
    let (em, en) = COUNTING_EXHAUSTIVE;
    out.push_str(&format!(
        "  {:<12} exhaustive binary m=1..{em} n=0..{en}; {COUNTING_SAMPLES} random m<={COUNTING_RANDOM_M_MAX} \
         n<={COUNTING_RANDOM_N_MAX} alphabet<={COUNTING_ALPHABET_MAX}\n",
        "counting"
    ));
    out.push_str(&format!("  {:<12} 0<=l<=k<=n<={PIPELINE_N_MAX}, 0<=m1<=m2<=n\n", "pipeline"));
    out.push_str(&format!("  {:<12} incidence matrices n<={PIPELINE_N_MAX}, all I0, c, I\n", "power"));
    out.push_str(&format!("  {:<12} n=1..{ALTERNATING_N_MAX}\n", "alternating"));
    out.push_str(&format!("  {:<12} n<={BERNOULLI_N_MAX}, m<=n, k<={BERNOULLI_K_MAX}\n", "bernoulli"));
    out
}
