//! The subset-incidence matrix of a finite set and constrained subset counts.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::binom;
use crate::counting::BivariateTable;
use crate::matrix::{RectMatrix, Symbol};
use crate::{Error, Result};

/// Largest ground set whose incidence matrix is materialized.
pub const MATERIALIZATION_GUARD: usize = 20;
/// Largest ground set enumerated by [`count_subsets_brute`].
pub const BRUTE_FORCE_GUARD: usize = 24;

/// The `n × 2^n` matrix whose column `s` is the characteristic vector of the
/// subset with label `s`: row `i` holds bit `i` of `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    n: usize,
    matrix: RectMatrix,
}

impl IncidenceMatrix {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &RectMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RectMatrix {
        self.matrix
    }
}

pub fn build_incidence(n: usize) -> Result<IncidenceMatrix> {
    if n > MATERIALIZATION_GUARD {
        return Err(Error::GuardExceeded { what: "ground set size", value: n, limit: MATERIALIZATION_GUARD });
    }
    let matrix = RectMatrix::from_fn(n, 1 << n, |i, s| Symbol::from_bit(s >> i & 1 == 1));
    Ok(IncidenceMatrix { n, matrix })
}

/// Subsets `S` of `{0, …, n-1}` with `contain ⊆ S`, `S ∩ avoid = ∅` and
/// `size_min ≤ |S| ≤ size_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubsetConstraint {
    n: usize,
    contain: u64,
    avoid: u64,
    size_min: usize,
    size_max: usize,
}

impl SubsetConstraint {
    pub fn new(n: usize, contain: u64, avoid: u64, size_min: usize, size_max: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::Constraint("ground set larger than 64 elements"));
        }
        let universe = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        if contain & avoid != 0 {
            return Err(Error::Constraint("contain and avoid overlap"));
        }
        if (contain | avoid) & !universe != 0 {
            return Err(Error::Constraint("element outside the ground set"));
        }
        if size_min > size_max || size_max > n {
            return Err(Error::Constraint("requires size_min <= size_max <= n"));
        }
        Ok(SubsetConstraint { n, contain, avoid, size_min, size_max })
    }

    /// Rows `0..l` required, rows `l..k` forbidden.
    pub fn split(n: usize, k: usize, l: usize, size_min: usize, size_max: usize) -> Result<Self> {
        if l > k || k > n {
            return Err(Error::Constraint("requires l <= k <= n"));
        }
        let low = |bits: usize| if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 };
        Self::new(n, low(l), low(k) & !low(l), size_min, size_max)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn contain(&self) -> u64 {
        self.contain
    }

    pub fn avoid(&self) -> u64 {
        self.avoid
    }

    pub fn size_range(&self) -> (usize, usize) {
        (self.size_min, self.size_max)
    }

    pub fn admits(&self, subset: u64) -> bool {
        let size = subset.count_ones() as usize;
        subset & self.contain == self.contain
            && subset & self.avoid == 0
            && (self.size_min..=self.size_max).contains(&size)
    }
}

pub fn count_subsets_brute(constraint: &SubsetConstraint) -> Result<u64> {
    if constraint.n > BRUTE_FORCE_GUARD {
        return Err(Error::GuardExceeded { what: "ground set size", value: constraint.n, limit: BRUTE_FORCE_GUARD });
    }
    Ok((0..1u64 << constraint.n).filter(|&s| constraint.admits(s)).count() as u64)
}

/// `Σ_{i = size_min - |contain|}^{size_max - |contain|} C(n - |contain| - |avoid|, i)`.
pub fn count_subsets_formula(constraint: &SubsetConstraint) -> BigInt {
    let required = constraint.contain.count_ones() as i64;
    let free = constraint.n as i64 - required - constraint.avoid.count_ones() as i64;
    let lo = (constraint.size_min as i64 - required).max(0);
    let hi = (constraint.size_max as i64 - required).min(free);
    let mut total = BigInt::zero();
    for i in lo..=hi {
        total += binom(free, i).expect("free element count is nonnegative");
    }
    total
}

/// The table `a(i1, i2) = Σ_{i3 = m1 - i2}^{m2 - i2} C(n - i1 - i2, i3)` for
/// `0 ≤ i1 ≤ l`, `0 ≤ i2 ≤ k - l`, where `i1` counts the rows of `I` at which
/// the pattern is 1 and `i2` the rows at which it is 0.
///
/// Feed it to [`count_binary_bivariate`](crate::count_binary_bivariate) with
/// `l` ones out of `k` rows.
pub fn theorem_input_table(n: usize, k: usize, l: usize, m1: usize, m2: usize) -> Result<BivariateTable> {
    if l > k || k > n {
        return Err(Error::Signature { id: "theorem_input_table", reason: "requires l <= k <= n" });
    }
    if m1 > m2 || m2 > n {
        return Err(Error::Signature { id: "theorem_input_table", reason: "requires m1 <= m2 <= n" });
    }
    let mut table = BivariateTable::new();
    for i1 in 0..=l {
        for i2 in 0..=k - l {
            let upper = (n - i1 - i2) as i64;
            let mut value = BigInt::zero();
            for i3 in m1 as i64 - i2 as i64..=m2 as i64 - i2 as i64 {
                value += binom(upper, i3)?;
            }
            table.insert(i1, i2, value);
        }
    }
    Ok(table)
}

/// Rows of the incidence matrix indexed by the members of `rows`, in order.
pub fn incidence_rows(incidence: &IncidenceMatrix, rows: u64) -> RectMatrix {
    let picked: Vec<usize> = (0..incidence.n).filter(|&i| rows >> i & 1 == 1).collect();
    incidence.matrix.select_rows(&picked)
}
