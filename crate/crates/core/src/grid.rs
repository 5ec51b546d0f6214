//! Rectangular integer parameter grids with `a ≤ b` ordering constraints.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::identity::IdentityId;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Axis {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

impl Axis {
    pub fn new(name: &'static str, lo: i64, hi: i64) -> Self {
        Axis { name, lo, hi }
    }
}

/// Admissible tuples are visited in lexicographic order, last axis fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamGrid {
    axes: Vec<Axis>,
    le: Vec<(usize, usize)>,
}

impl ParamGrid {
    pub fn new(axes: Vec<Axis>) -> Self {
        ParamGrid { axes, le: Vec::new() }
    }

    /// Requires `axis a ≤ axis b` (by name).
    pub fn with_le(mut self, a: &str, b: &str) -> Self {
        let pos = |name: &str| {
            self.axes.iter().position(|x| x.name == name).unwrap_or_else(|| panic!("no axis named {name}"))
        };
        let pair = (pos(a), pos(b));
        self.le.push(pair);
        self
    }

    /// A grid over `id`'s parameters carrying its ordering constraints.
    /// `ranges` lists inclusive `(lo, hi)` bounds in parameter order.
    pub fn for_identity(id: IdentityId, ranges: &[(i64, i64)]) -> Result<Self> {
        let names = id.params();
        if ranges.len() != names.len() {
            return Err(Error::Grid("one range per identity parameter is required"));
        }
        if ranges.iter().any(|&(lo, _)| lo < 0) {
            return Err(Error::Grid("identity parameters are nonnegative"));
        }
        let axes = names.iter().zip(ranges).map(|(&name, &(lo, hi))| Axis::new(name, lo, hi)).collect();
        Ok(ParamGrid { axes, le: id.order_constraints().to_vec() })
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.axes.iter().map(|a| a.name)
    }

    pub fn constraints(&self) -> &[(usize, usize)] {
        &self.le
    }

    pub fn admits(&self, tuple: &[i64]) -> bool {
        self.le.iter().all(|&(a, b)| tuple[a] <= tuple[b])
    }

    pub fn iter(&self) -> GridIter<'_> {
        let empty = self.axes.iter().any(|a| a.lo > a.hi);
        GridIter { grid: self, next: (!empty).then(|| self.axes.iter().map(|a| a.lo).collect()) }
    }

    /// Number of admissible tuples.
    pub fn count(&self) -> u64 {
        self.iter().count() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.iter().next().is_none()
    }

    /// One subgrid per value of the first axis, in order. Their tuples
    /// partition this grid's tuples.
    pub fn split_first_axis(&self) -> Vec<ParamGrid> {
        let Some(first) = self.axes.first() else {
            return alloc::vec![self.clone()];
        };
        (first.lo..=first.hi)
            .map(|v| {
                let mut sub = self.clone();
                sub.axes[0].lo = v;
                sub.axes[0].hi = v;
                sub
            })
            .collect()
    }
}

impl fmt::Display for ParamGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, a) in self.axes.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{}={}..{}", a.name, a.lo, a.hi)?;
        }
        for (i, &(a, b)) in self.le.iter().enumerate() {
            out.push_str(if i == 0 { "; " } else { ", " });
            write!(out, "{}<={}", self.axes[a].name, self.axes[b].name)?;
        }
        f.write_str(&out)
    }
}

#[derive(Debug)]
pub struct GridIter<'a> {
    grid: &'a ParamGrid,
    next: Option<Vec<i64>>,
}

impl GridIter<'_> {
    fn advance(&mut self) {
        let Some(cur) = self.next.as_mut() else { return };
        for (i, axis) in self.grid.axes.iter().enumerate().rev() {
            if cur[i] < axis.hi {
                cur[i] += 1;
                return;
            }
            cur[i] = axis.lo;
        }
        self.next = None;
    }
}

impl Iterator for GridIter<'_> {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        loop {
            let cur = self.next.clone()?;
            self.advance();
            if self.grid.admits(&cur) {
                return Some(cur);
            }
        }
    }
}
