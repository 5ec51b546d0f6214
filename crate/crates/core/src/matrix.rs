//! Rectangular matrices over a discrete alphabet, target columns and row subsets.

use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitRow;
use crate::{Error, Result};

/// An opaque alphabet token. `Symbol::ZERO` and `Symbol::ONE` are the binary
/// alphabet; any other value is just another distinct symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Symbol(pub u32);

impl Symbol {
    pub const ZERO: Symbol = Symbol(0);
    pub const ONE: Symbol = Symbol(1);

    pub fn is_binary(self) -> bool {
        self.0 <= 1
    }

    pub fn from_bit(bit: bool) -> Self {
        Symbol(bit as u32)
    }
}

impl From<u32> for Symbol {
    fn from(v: u32) -> Self {
        Symbol(v)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An `m × n` matrix of symbols, stored row-major.
///
/// When every entry is `0` or `1` the rows are also kept bit-packed, bit `j`
/// of packed row `r` being set iff entry `(r, j)` is [`Symbol::ONE`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Symbol>,
    packed: Option<Vec<BitRow>>,
}

impl RectMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Symbol>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape { rows, cols, len: entries.len() });
        }
        let packed = entries.iter().all(|s| s.is_binary()).then(|| pack(rows, cols, &entries));
        Ok(RectMatrix { rows, cols, entries, packed })
    }

    /// Builds a matrix from explicit rows. With no rows the matrix is `0 × 0`.
    pub fn from_rows<R: AsRef<[Symbol]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::RaggedRow { row: i, expected: cols, found: row.len() });
            }
            entries.extend_from_slice(row);
        }
        Self::new(rows.len(), cols, entries)
    }

    /// Binary matrix from rows of `0`/`1` values; any nonzero value is `1`.
    pub fn from_bits<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<Symbol>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&b| Symbol::from_bit(b != 0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Symbol) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self::new(rows, cols, entries).expect("from_fn produces exactly rows * cols entries")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Symbol {
        self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Symbol] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.rows).map(move |r| self.get(r, col))
    }

    pub fn is_binary(&self) -> bool {
        self.packed.is_some()
    }

    pub fn packed_row(&self, row: usize) -> Option<&BitRow> {
        self.packed.as_ref().map(|p| &p[row])
    }

    /// Returns a copy without the packed rows, forcing the entry-wise paths.
    pub fn without_packing(&self) -> Self {
        RectMatrix { packed: None, ..self.clone() }
    }

    /// The submatrix formed by the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            entries.extend_from_slice(self.row(r));
        }
        Self::new(rows.len(), self.cols, entries).expect("row selection keeps the shape")
    }

    /// The matrix whose column `j` is column `order[j]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.cols, "column order must list every column");
        Self::from_fn(self.rows, self.cols, |r, c| self.get(r, order[c]))
    }

    /// For each row `i`, the columns whose entry differs from `pattern[i]`.
    pub(crate) fn mismatch_rows(&self, pattern: &ColumnPattern) -> Vec<BitRow> {
        (0..self.rows)
            .map(|r| {
                let target = pattern.get(r);
                match self.packed_row(r) {
                    Some(bits) if target == Symbol::ONE => bits.complement(),
                    Some(bits) if target == Symbol::ZERO => bits.clone(),
                    Some(_) => BitRow::ones(self.cols),
                    None => {
                        let mut out = BitRow::zeros(self.cols);
                        for (j, &s) in self.row(r).iter().enumerate() {
                            out.set(j, s != target);
                        }
                        out
                    }
                }
            })
            .collect()
    }
}

fn pack(rows: usize, cols: usize, entries: &[Symbol]) -> Vec<BitRow> {
    (0..rows)
        .map(|r| {
            let mut row = BitRow::zeros(cols);
            for (j, &s) in entries[r * cols..(r + 1) * cols].iter().enumerate() {
                row.set(j, s == Symbol::ONE);
            }
            row
        })
        .collect()
}

/// The target column `c = [c_1, …, c_m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColumnPattern(Vec<Symbol>);

impl ColumnPattern {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        ColumnPattern(symbols)
    }

    /// Binary pattern of length `len` whose entry `i` is bit `i` of `bits`.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        ColumnPattern((0..len).map(|i| Symbol::from_bit(bits >> i & 1 == 1)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> Symbol {
        self.0[i]
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub(crate) fn check_against(&self, matrix: &RectMatrix) -> Result<()> {
        if self.len() != matrix.rows() {
            return Err(Error::DimensionMismatch { rows: matrix.rows(), pattern: self.len() });
        }
        Ok(())
    }
}

impl From<Vec<Symbol>> for ColumnPattern {
    fn from(v: Vec<Symbol>) -> Self {
        ColumnPattern(v)
    }
}

/// A subset of the row indices `{0, …, m-1}`, bit `i` marking row `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RowSubset(u64);

impl RowSubset {
    pub const EMPTY: RowSubset = RowSubset(0);

    pub fn new(bits: u64, rows: usize) -> Result<Self> {
        if rows < 64 && bits >> rows != 0 {
            return Err(Error::SubsetOutOfRange { bits, rows });
        }
        Ok(RowSubset(bits))
    }

    pub fn from_rows(rows: impl IntoIterator<Item = usize>) -> Self {
        RowSubset(rows.into_iter().fold(0, |acc, r| acc | 1 << r))
    }

    pub fn full(rows: usize) -> Self {
        RowSubset(if rows >= 64 { u64::MAX } else { (1u64 << rows) - 1 })
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, row: usize) -> bool {
        row < 64 && self.0 >> row & 1 == 1
    }

    pub fn is_subset_of(self, other: RowSubset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Member rows in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        core::iter::from_fn(move || {
            (rest != 0).then(|| {
                let r = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                r
            })
        })
    }

    /// All subsets of `self`, in increasing order of their bit encoding.
    pub fn subsets(self) -> impl Iterator<Item = RowSubset> {
        let full = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            // Standard "next submask in increasing order" step.
            next = (cur != full).then(|| ((cur | !full).wrapping_add(1)) & full);
            Some(RowSubset(cur))
        })
    }
}
