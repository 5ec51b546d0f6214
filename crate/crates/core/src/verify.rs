//! Sweeps that check identities and counting equivalences over whole grids.
//!
//! Every sweep runs to completion and collects failures (up to
//! [`MAX_RECORDED_FAILURES`]) instead of stopping at the first one. Results
//! depend only on the inputs and the seed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::binomial::binom;
use crate::counting::{count_binary_bivariate, count_direct, count_inclusion_exclusion, mismatch_profile};
use crate::grid::{Axis, ParamGrid};
use crate::identity::{Evaluator, IdentityId, Perturbation};
use crate::lattice::{
    build_incidence, count_subsets_brute, count_subsets_formula, incidence_rows, theorem_input_table,
    SubsetConstraint,
};
use crate::matrix::{ColumnPattern, RectMatrix, RowSubset, Symbol};
use crate::{Error, Result};

pub const MAX_RECORDED_FAILURES: usize = 100;

/// Default seed for randomized sweeps.
pub const DEFAULT_SEED: u64 = 0x5eed_2010;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub params: Vec<(&'static str, i64)>,
    pub lhs: BigInt,
    pub rhs: BigInt,
    /// Extra context needed to replay the case, e.g. a random matrix.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub check: String,
    pub grid: String,
    pub tuples_checked: u64,
    /// Total number of failing tuples; only the first
    /// [`MAX_RECORDED_FAILURES`] are kept in `failures`.
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub seed: Option<u64>,
}

impl Outcome {
    fn new(check: impl Into<String>, grid: impl Into<String>) -> Self {
        Outcome {
            check: check.into(),
            grid: grid.into(),
            tuples_checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            seed: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.tuples_checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(failure());
            }
        }
    }

    /// Combines the outcomes of disjoint partitions of one sweep. Failures
    /// are ordered by parameter tuple.
    pub fn merge(check: impl Into<String>, grid: impl Into<String>, parts: Vec<Outcome>) -> Outcome {
        let mut out = Outcome::new(check, grid);
        for part in parts {
            out.tuples_checked += part.tuples_checked;
            out.failure_count += part.failure_count;
            out.failures.extend(part.failures);
            out.seed = out.seed.or(part.seed);
        }
        out.failures.sort_by(|a, b| a.params.iter().map(|p| p.1).cmp(b.params.iter().map(|p| p.1)));
        out.failures.truncate(MAX_RECORDED_FAILURES);
        out
    }
}

fn named(grid: &ParamGrid, values: &[i64]) -> Vec<(&'static str, i64)> {
    grid.names().zip(values.iter().copied()).collect()
}

/// Evaluates `id` on every admissible tuple of `grid`.
pub fn verify_identity(id: IdentityId, grid: &ParamGrid, perturbation: Option<Perturbation>) -> Result<Outcome> {
    if !grid.names().eq(id.params().iter().copied()) {
        return Err(Error::Grid("axes do not match the identity's parameters"));
    }
    // Upper arguments never exceed twice the largest parameter (k + i, n + k - i1).
    let max_param = grid.axes().iter().map(|a| a.hi).max().unwrap_or(0).max(0);
    let evaluator = Evaluator::new(2 * max_param as usize).with_perturbation(perturbation);
    let mut outcome = Outcome::new(id.name(), grid.to_string());
    for values in grid.iter() {
        let identity = id.instantiate(&values)?;
        let sides = evaluator.eval(&identity)?;
        outcome.record(sides.holds(), || Failure {
            params: named(grid, &values),
            lhs: sides.lhs.clone(),
            rhs: sides.rhs.clone(),
            detail: None,
        });
    }
    Ok(outcome)
}

fn describe(matrix: &RectMatrix, pattern: &ColumnPattern) -> String {
    let mut rows: Vec<String> = (0..matrix.rows())
        .map(|r| matrix.row(r).iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    rows.push(format!("c={}", pattern.symbols().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")));
    rows.join("; ")
}

fn check_counts(outcome: &mut Outcome, params: Vec<(&'static str, i64)>, matrix: &RectMatrix, pattern: &ColumnPattern) -> Result<()> {
    let direct = count_direct(matrix, pattern)?;
    let theorem = count_inclusion_exclusion(matrix, pattern)?;
    outcome.record(direct == theorem, || Failure {
        params,
        lhs: direct.into(),
        rhs: theorem.into(),
        detail: Some(describe(matrix, pattern)),
    });
    Ok(())
}

/// Direct scan against inclusion-exclusion on every binary matrix with
/// `1 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max` and every binary pattern.
pub fn verify_counting_exhaustive(m_max: usize, n_max: usize) -> Result<Outcome> {
    if m_max * n_max > 16 || m_max > 4 || n_max > 4 {
        return Err(Error::GuardExceeded { what: "exhaustive matrix cells", value: m_max * n_max, limit: 16 });
    }
    let mut outcome = Outcome::new("counting-exhaustive", format!("binary m=1..{m_max} n=0..{n_max}"));
    for m in 1..=m_max {
        for n in 0..=n_max {
            for cells in 0u64..1 << (m * n) {
                let matrix = RectMatrix::from_fn(m, n, |r, c| Symbol::from_bit(cells >> (r * n + c) & 1 == 1));
                for bits in 0u64..1 << m {
                    let params = alloc::vec![("m", m as i64), ("n", n as i64), ("cells", cells as i64), ("c", bits as i64)];
                    check_counts(&mut outcome, params, &matrix, &ColumnPattern::from_bits(bits, m))?;
                }
            }
        }
    }
    Ok(outcome)
}

/// Seeded random instances: `1 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`, alphabet size
/// in `2..=alphabet_max`. Half of the patterns are copies of a column so that
/// nonzero counts are common.
pub fn verify_counting_random(m_max: usize, n_max: usize, alphabet_max: u32, samples: u64, seed: u64) -> Result<Outcome> {
    if m_max > 12 {
        return Err(Error::GuardExceeded { what: "random row count", value: m_max, limit: 12 });
    }
    if m_max == 0 || alphabet_max < 2 {
        return Err(Error::Grid("random sweep needs m_max >= 1 and alphabet_max >= 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut outcome = Outcome::new(
        "counting-random",
        format!("samples={samples} m=1..{m_max} n=0..{n_max} alphabet=2..{alphabet_max}"),
    );
    outcome.seed = Some(seed);
    for sample in 0..samples {
        let m = rng.gen_range(1..=m_max);
        let n = rng.gen_range(0..=n_max);
        let alphabet = rng.gen_range(2..=alphabet_max);
        let matrix = RectMatrix::from_fn(m, n, |_, _| Symbol(rng.gen_range(0..alphabet)));
        let pattern = if n > 0 && rng.gen_bool(0.5) {
            let j = rng.gen_range(0..n);
            ColumnPattern::new(matrix.column(j).collect())
        } else {
            ColumnPattern::new((0..m).map(|_| Symbol(rng.gen_range(0..alphabet))).collect())
        };
        let params = alloc::vec![("sample", sample as i64), ("m", m as i64), ("n", n as i64), ("alphabet", alphabet as i64)];
        check_counts(&mut outcome, params, &matrix, &pattern)?;
    }
    Ok(outcome)
}

pub const PIPELINE_GUARD: usize = 10;

fn pipeline_grid(n_max: i64) -> ParamGrid {
    ParamGrid::new(alloc::vec![
        Axis::new("n", 0, n_max),
        Axis::new("k", 0, n_max),
        Axis::new("l", 0, n_max),
        Axis::new("m1", 0, n_max),
        Axis::new("m2", 0, n_max),
    ])
    .with_le("l", "k")
    .with_le("k", "n")
    .with_le("m1", "m2")
    .with_le("m2", "n")
}

/// For all `0 ≤ l ≤ k ≤ n ≤ n_max` and `0 ≤ m1 ≤ m2 ≤ n`, the bivariate
/// inclusion-exclusion sum over the derived table, the closed formula and
/// brute-force enumeration all count the same subsets.
pub fn verify_pipeline(n_max: usize) -> Result<Outcome> {
    if n_max > PIPELINE_GUARD {
        return Err(Error::GuardExceeded { what: "pipeline ground set", value: n_max, limit: PIPELINE_GUARD });
    }
    let grid = pipeline_grid(n_max as i64);
    let mut outcome = Outcome::new("pipeline", grid.to_string());
    for values in grid.iter() {
        let [n, k, l, m1, m2] = [0, 1, 2, 3, 4].map(|i| values[i] as usize);
        let table = theorem_input_table(n, k, l, m1, m2)?;
        let via_theorem = count_binary_bivariate(&table, l, k)?;
        let constraint = SubsetConstraint::split(n, k, l, m1, m2)?;
        let formula = count_subsets_formula(&constraint);
        let brute = BigInt::from(count_subsets_brute(&constraint)?);
        let ok = via_theorem == formula && formula == brute;
        outcome.record(ok, || Failure {
            params: named(&grid, &values),
            lhs: via_theorem.clone(),
            rhs: formula.clone(),
            detail: Some(format!("brute={brute}")),
        });
    }
    Ok(outcome)
}

/// On the incidence matrix of every `n ≤ n_max`: for each row set `I0`
/// (`|I0| = k`) and each binary pattern `c` on it, the submatrix has exactly
/// `2^{n-k}` columns equal to `c`, and `A(I) = 2^{n-|I|}` for every `I ⊆ I0`.
pub fn verify_power_counts(n_max: usize) -> Result<Outcome> {
    if n_max > PIPELINE_GUARD {
        return Err(Error::GuardExceeded { what: "power-count ground set", value: n_max, limit: PIPELINE_GUARD });
    }
    let mut outcome = Outcome::new("power-counts", format!("n=0..{n_max}, all I0, c, I ⊆ I0"));
    for n in 0..=n_max {
        let incidence = build_incidence(n)?;
        for rows in 0u64..1 << n {
            let sub = incidence_rows(&incidence, rows);
            let k = sub.rows();
            for bits in 0u64..1 << k {
                let pattern = ColumnPattern::from_bits(bits, k);
                let params = || alloc::vec![("n", n as i64), ("I0", rows as i64), ("c", bits as i64)];
                let count = count_direct(&sub, &pattern)?;
                outcome.record(count == 1 << (n - k), || Failure {
                    params: params(),
                    lhs: count.into(),
                    rhs: BigInt::from(1u64 << (n - k)),
                    detail: Some("nu(c)".into()),
                });
                let profile = mismatch_profile(&sub, &pattern)?;
                for subset in RowSubset::full(k).subsets() {
                    let got = profile[subset.bits() as usize];
                    let want = 1usize << (n - subset.len());
                    outcome.record(got == want, || Failure {
                        params: params(),
                        lhs: got.into(),
                        rhs: want.into(),
                        detail: Some(format!("A(I) with I={:#b} (submatrix rows)", subset.bits())),
                    });
                }
            }
        }
    }
    Ok(outcome)
}

/// `Σ_{I ⊆ [n]} (-1)^{|I|}` by enumerating subsets.
pub fn alternating_subset_sum_enumerated(n: usize) -> Result<i64> {
    if n > crate::ENUMERATION_GUARD {
        return Err(Error::GuardExceeded { what: "ground set size", value: n, limit: crate::ENUMERATION_GUARD });
    }
    Ok(RowSubset::full(n).subsets().map(|s| if s.len() % 2 == 0 { 1 } else { -1 }).sum())
}

/// `Σ_{i=0}^{n} (-1)^i C(n, i)`.
pub fn alternating_subset_sum_binomial(n: usize) -> BigInt {
    (0..=n as i64).fold(BigInt::zero(), |acc, i| {
        let c = binom(n as i64, i).expect("n is nonnegative");
        if i % 2 == 0 {
            acc + c
        } else {
            acc - c
        }
    })
}

/// Both alternating sums vanish for `1 ≤ n ≤ n_max`.
pub fn verify_alternating(n_max: usize) -> Result<Outcome> {
    let mut outcome = Outcome::new("alternating", format!("n=1..{n_max}"));
    for n in 1..=n_max {
        let enumerated = alternating_subset_sum_enumerated(n)?;
        let closed = alternating_subset_sum_binomial(n);
        outcome.record(enumerated == 0 && closed.is_zero(), || Failure {
            params: alloc::vec![("n", n as i64)],
            lhs: enumerated.into(),
            rhs: closed.clone(),
            detail: None,
        });
    }
    Ok(outcome)
}

/// For `n ≤ n_max`, `m ≤ n`, `k ≤ k_max`: the two Bernoulli-triangle sums
/// agree with each other, with their `k = 0` values, and with the running
/// sum of the row.
pub fn verify_bernoulli(n_max: usize, k_max: usize) -> Result<Outcome> {
    let grid = ParamGrid::for_identity(IdentityId::Eq11, &[(0, n_max as i64), (0, k_max as i64), (0, n_max as i64)])?;
    let evaluator = Evaluator::new(n_max + k_max);
    let mut outcome = Outcome::new("bernoulli", grid.to_string());
    for values in grid.iter() {
        let (n, m) = (values[0], values[2]);
        let eq11 = evaluator.eval(&IdentityId::Eq11.instantiate(&values)?)?.rhs;
        let eq12 = evaluator.eval(&IdentityId::Eq12.instantiate(&values)?)?.rhs;
        let base = evaluator.eval(&IdentityId::Eq11.instantiate(&[n, 0, m])?)?.rhs;
        let direct = (0..=m).map(|i| binom(n, i)).sum::<Result<BigInt>>()?;
        let ok = eq11 == eq12 && eq11 == base && eq11 == direct;
        outcome.record(ok, || Failure {
            params: named(&grid, &values),
            lhs: eq11.clone(),
            rhs: eq12.clone(),
            detail: Some(format!("k0={base} direct={direct}")),
        });
    }
    Ok(outcome)
}
