//! Counting the columns of a matrix that equal a target column.
//!
//! [`count_direct`] scans the columns. [`count_inclusion_exclusion`] computes
//! the same number as `Σ_I (-1)^{|I|} A(I)` over all row subsets, and
//! [`count_uniform`] / [`count_binary_bivariate`] are the collapsed forms for
//! when `A(I)` only depends on one or two cardinalities.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binomial::binom;
use crate::bits::BitRow;
use crate::matrix::{ColumnPattern, RectMatrix, RowSubset};
use crate::{Error, Result};

/// Largest row count for which all `2^m` row subsets are enumerated.
pub const ENUMERATION_GUARD: usize = 24;

fn check_subset(matrix: &RectMatrix, subset: RowSubset) -> Result<()> {
    RowSubset::new(subset.bits(), matrix.rows()).map(|_| ())
}

/// `A(I)`: the number of columns `j` with `A[i][j] != c[i]` for every `i ∈ I`.
///
/// `A(∅)` is the column count. Binary matrices go through the packed rows.
pub fn mismatch_count(matrix: &RectMatrix, pattern: &ColumnPattern, subset: RowSubset) -> Result<usize> {
    pattern.check_against(matrix)?;
    check_subset(matrix, subset)?;
    if !matrix.is_binary() {
        return Ok(scan(matrix, pattern, subset));
    }
    let cols = matrix.cols();
    let mut acc = BitRow::ones(cols);
    for r in subset.iter() {
        let row = matrix.packed_row(r).expect("binary matrix has packed rows");
        let c = pattern.get(r);
        if c == crate::Symbol::ONE {
            acc.and_assign(&row.complement());
        } else if c == crate::Symbol::ZERO {
            acc.and_assign(row);
        }
        // Any other symbol differs from every 0/1 entry.
    }
    Ok(acc.count_ones())
}

/// [`mismatch_count`] by an entry-wise scan, ignoring any packed rows.
pub fn mismatch_count_scan(matrix: &RectMatrix, pattern: &ColumnPattern, subset: RowSubset) -> Result<usize> {
    pattern.check_against(matrix)?;
    check_subset(matrix, subset)?;
    Ok(scan(matrix, pattern, subset))
}

fn scan(matrix: &RectMatrix, pattern: &ColumnPattern, subset: RowSubset) -> usize {
    (0..matrix.cols())
        .filter(|&j| subset.iter().all(|i| matrix.get(i, j) != pattern.get(i)))
        .count()
}

/// The number of columns equal to `pattern` entry by entry.
pub fn count_direct(matrix: &RectMatrix, pattern: &ColumnPattern) -> Result<usize> {
    pattern.check_against(matrix)?;
    Ok((0..matrix.cols())
        .filter(|&j| matrix.column(j).zip(pattern.symbols()).all(|(a, &c)| a == c))
        .count())
}

fn guard_rows(matrix: &RectMatrix) -> Result<()> {
    if matrix.rows() > ENUMERATION_GUARD {
        return Err(Error::GuardExceeded { what: "row count", value: matrix.rows(), limit: ENUMERATION_GUARD });
    }
    Ok(())
}

/// Depth-first walk over the row subsets in increasing order of their bit
/// encoding, carrying the AND of the per-row mismatch masks. `visit` receives
/// each subset with its `A(I)`. With `prune_empty`, subtrees whose mask is
/// already empty are not visited: every `A(I)` in them is zero.
struct SubsetWalk<'a, V: FnMut(u64, usize) -> Result<()>> {
    rows: &'a [BitRow],
    visit: V,
    prune_empty: bool,
}

impl<V: FnMut(u64, usize) -> Result<()>> SubsetWalk<'_, V> {
    fn run(&mut self, cols: usize) -> Result<()> {
        let mut scratch = vec![BitRow::zeros(cols); self.rows.len()];
        self.descend(self.rows.len(), 0, &BitRow::ones(cols), &mut scratch)
    }

    fn descend(&mut self, level: usize, chosen: u64, acc: &BitRow, scratch: &mut [BitRow]) -> Result<()> {
        if level == 0 {
            return (self.visit)(chosen, acc.count_ones());
        }
        let row = level - 1;
        let (lower, slot) = scratch.split_at_mut(row);
        self.descend(row, chosen, acc, lower)?;
        let next = &mut slot[0];
        next.assign_and(acc, &self.rows[row]);
        if self.prune_empty && next.words().iter().all(|&w| w == 0) {
            return Ok(());
        }
        self.descend(row, chosen | 1 << row, next, lower)
    }
}

/// `ν(c) = Σ_{I ⊆ [m]} (-1)^{|I|} A(I)`, accumulated in checked `i64`.
pub fn count_inclusion_exclusion(matrix: &RectMatrix, pattern: &ColumnPattern) -> Result<usize> {
    pattern.check_against(matrix)?;
    guard_rows(matrix)?;
    let rows = matrix.mismatch_rows(pattern);
    let mut total: i64 = 0;
    SubsetWalk {
        rows: &rows,
        prune_empty: true,
        visit: |bits: u64, count: usize| {
            let count = i64::try_from(count).map_err(|_| Error::Overflow)?;
            let term = if bits.count_ones().is_multiple_of(2) { count } else { -count };
            total = total.checked_add(term).ok_or(Error::Overflow)?;
            Ok(())
        },
    }
    .run(matrix.cols())?;
    usize::try_from(total).map_err(|_| Error::Overflow)
}

/// `A(I)` for every row subset, indexed by the bit encoding of `I`.
pub fn mismatch_profile(matrix: &RectMatrix, pattern: &ColumnPattern) -> Result<Vec<usize>> {
    pattern.check_against(matrix)?;
    guard_rows(matrix)?;
    let rows = matrix.mismatch_rows(pattern);
    let mut out = vec![0; 1 << matrix.rows()];
    SubsetWalk {
        rows: &rows,
        prune_empty: true,
        visit: |bits: u64, count: usize| {
            out[bits as usize] = count;
            Ok(())
        },
    }
    .run(matrix.cols())?;
    Ok(out)
}

fn signed(odd: bool, v: BigInt) -> BigInt {
    if odd {
        -v
    } else {
        v
    }
}

/// `Σ_{i=0}^{m} (-1)^i C(m, i) a(i)` where `a(i)` is the common value of
/// `A(I)` over subsets of size `i`. `a` must hold `m + 1` values.
pub fn count_uniform(a: &[BigInt], rows: usize) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for i in 0..=rows {
        let value = a.get(i).ok_or(Error::MissingCardinality(i))?;
        total += signed(i % 2 == 1, binom(rows as i64, i as i64)? * value);
    }
    Ok(total)
}

/// Values `A(i1, i2)` keyed by `(|I ∩ I0|, |I \ I0|)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariateTable(BTreeMap<(usize, usize), BigInt>);

impl BivariateTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fills `0 ≤ i1 ≤ max_i1`, `0 ≤ i2 ≤ max_i2` from `f`.
    pub fn from_fn(max_i1: usize, max_i2: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut table = Self::new();
        for i1 in 0..=max_i1 {
            for i2 in 0..=max_i2 {
                table.insert(i1, i2, f(i1, i2));
            }
        }
        table
    }

    pub fn insert(&mut self, i1: usize, i2: usize, value: BigInt) {
        self.0.insert((i1, i2), value);
    }

    pub fn get(&self, i1: usize, i2: usize) -> Option<&BigInt> {
        self.0.get(&(i1, i2))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `Σ_{i1=0}^{k} Σ_{i2=0}^{m-k} (-1)^{i1+i2} C(k, i1) C(m-k, i2) a(i1, i2)`
/// for a binary pattern with `ones` ones among `rows` rows.
pub fn count_binary_bivariate(a: &BivariateTable, ones: usize, rows: usize) -> Result<BigInt> {
    if ones > rows {
        return Err(Error::Signature { id: "bivariate", reason: "requires k <= m" });
    }
    let zeros = rows - ones;
    let mut total = BigInt::zero();
    for i1 in 0..=ones {
        let c1 = binom(ones as i64, i1 as i64)?;
        for i2 in 0..=zeros {
            let value = a.get(i1, i2).ok_or(Error::MissingEntry(i1, i2))?;
            let term = &c1 * binom(zeros as i64, i2 as i64)? * value;
            total += signed((i1 + i2) % 2 == 1, term);
        }
    }
    Ok(total)
}
