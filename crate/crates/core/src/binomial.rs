//! Exact binomial coefficients.
//!
//! `C(n, r)` is defined for every integer `r` and nonnegative `n`, and is zero
//! outside `0 ≤ r ≤ n`. That convention makes summation bounds such as
//! `m1 - l` (possibly negative) or `m + k` (possibly past the row) total
//! without clamping in each evaluator.

use alloc::borrow::Cow;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Result};

/// `C(n, r)` by the multiplicative formula, dividing exactly at every step.
pub fn binom(n: i64, r: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::NegativeUpper(n));
    }
    if r < 0 || r > n {
        return Ok(BigInt::zero());
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 1..=r {
        // acc = C(n - r + i - 1, i - 1) here, so the division is exact.
        acc *= n - r + i;
        acc /= i;
    }
    Ok(acc.into())
}

/// A table of `C(n, r)` for `0 ≤ n ≤ max_n`, falling back to [`binom`] past it.
#[derive(Clone, Debug)]
pub struct Binomials {
    rows: Vec<Vec<BigInt>>,
    zero: BigInt,
}

impl Binomials {
    pub fn new(max_n: usize) -> Self {
        let rows = (0..=max_n as u64)
            .map(|n| {
                let mut row = Vec::with_capacity(n as usize + 1);
                let mut cur = BigUint::one();
                row.push(BigInt::one());
                for r in 1..=n {
                    cur *= n - r + 1;
                    cur /= r;
                    row.push(BigInt::from(cur.clone()));
                }
                row
            })
            .collect();
        Binomials { rows, zero: BigInt::zero() }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn get(&self, n: i64, r: i64) -> Result<Cow<'_, BigInt>> {
        if n < 0 {
            return Err(Error::NegativeUpper(n));
        }
        if r < 0 || r > n {
            return Ok(Cow::Borrowed(&self.zero));
        }
        match self.rows.get(n as usize) {
            Some(row) => Ok(Cow::Borrowed(&row[r as usize])),
            None => binom(n, r).map(Cow::Owned),
        }
    }
}

/// Partial row sums of Pascal's triangle: `[Σ_{i≤m} C(n, i)]` for `m = 0..=upto`.
pub fn bernoulli_row(n: u64, upto: u64) -> Result<Vec<BigInt>> {
    if upto > n {
        return Err(Error::Signature { id: "bernoulli", reason: "requires upto <= n" });
    }
    let mut out = Vec::with_capacity(upto as usize + 1);
    let mut running = BigInt::zero();
    for m in 0..=upto {
        running += binom(n as i64, m as i64)?;
        out.push(running.clone());
    }
    Ok(out)
}
