//! Exact evaluation of both sides of the binomial identities obtained by
//! counting constrained subsets with inclusion-exclusion.
//!
//! Every right-hand side is summed term by term over its index ranges as
//! written, with out-of-range binomials contributing zero. A [`Perturbation`]
//! adds a fixed offset to one right-hand term, which is how the verifiers are
//! shown to notice a single wrong term.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::binomial::Binomials;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `1 = Σ_{i=0}^{k} (-1)^i C(k, i) 2^{k-i}`
    Prop2_1,
    /// Partial sums of `C(n-k, ·)` from a three-fold alternating sum.
    Eq7,
    /// `C(n-k, m-k) = Σ_i (-1)^i C(k, i) C(n-i, m)`
    Eq8,
    /// `C(n-k, m-l) = Σ_{i1,i2} (-1)^{i1+i2} C(l, i1) C(k-l, i2) C(n-i1-i2, m-i2)`
    Eq9,
    /// `C(n-k, m) = Σ_i (-1)^i C(k, i) C(n-i, m-i)`
    Eq10,
    /// `(-1)^k C(k, m-k) = Σ_i (-1)^i C(k, i) C(k+i, m)`
    Klee,
    /// Bernoulli triangle entry, inner index running `0..=m-i1`.
    Eq11,
    /// Bernoulli triangle entry, inner index running `k..=m+k`.
    Eq12,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Prop2_1,
        IdentityId::Eq7,
        IdentityId::Eq8,
        IdentityId::Eq9,
        IdentityId::Eq10,
        IdentityId::Klee,
        IdentityId::Eq11,
        IdentityId::Eq12,
    ];

    /// Lower-case name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Prop2_1 => "prop2_1",
            IdentityId::Eq7 => "eq7",
            IdentityId::Eq8 => "eq8",
            IdentityId::Eq9 => "eq9",
            IdentityId::Eq10 => "eq10",
            IdentityId::Klee => "klee",
            IdentityId::Eq11 => "eq11",
            IdentityId::Eq12 => "eq12",
        }
    }

    /// Parameter names, in the order [`instantiate`](Self::instantiate) expects.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            IdentityId::Prop2_1 => &["k"],
            IdentityId::Eq7 => &["n", "k", "l", "m1", "m2"],
            IdentityId::Eq8 | IdentityId::Eq10 | IdentityId::Eq11 | IdentityId::Eq12 => &["n", "k", "m"],
            IdentityId::Eq9 => &["n", "k", "l", "m"],
            IdentityId::Klee => &["k", "m"],
        }
    }

    /// Pairs `(a, b)` of parameter positions that must satisfy `a ≤ b`.
    pub fn order_constraints(self) -> &'static [(usize, usize)] {
        match self {
            IdentityId::Prop2_1 | IdentityId::Klee => &[],
            // m1 ≤ m2 ≤ n, l ≤ k ≤ n
            IdentityId::Eq7 => &[(3, 4), (4, 0), (2, 1), (1, 0)],
            IdentityId::Eq8 | IdentityId::Eq10 => &[(1, 0)],
            IdentityId::Eq9 => &[(2, 1), (1, 0)],
            IdentityId::Eq11 | IdentityId::Eq12 => &[(2, 0)],
        }
    }

    pub fn instantiate(self, values: &[i64]) -> Result<Identity> {
        if values.len() != self.params().len() {
            return Err(Error::Signature { id: self.name(), reason: "wrong number of parameters" });
        }
        let v = |i: usize| values[i];
        let identity = match self {
            IdentityId::Prop2_1 => Identity::Prop2_1 { k: v(0) },
            IdentityId::Eq7 => Identity::Eq7 { n: v(0), k: v(1), l: v(2), m1: v(3), m2: v(4) },
            IdentityId::Eq8 => Identity::Eq8 { n: v(0), k: v(1), m: v(2) },
            IdentityId::Eq9 => Identity::Eq9 { n: v(0), k: v(1), l: v(2), m: v(3) },
            IdentityId::Eq10 => Identity::Eq10 { n: v(0), k: v(1), m: v(2) },
            IdentityId::Klee => Identity::Klee { k: v(0), m: v(1) },
            IdentityId::Eq11 => Identity::Eq11 { n: v(0), k: v(1), m: v(2) },
            IdentityId::Eq12 => Identity::Eq12 { n: v(0), k: v(1), m: v(2) },
        };
        identity.validate()?;
        Ok(identity)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or(Error::Signature { id: "identity", reason: "unknown identity name" })
    }
}

/// An identity together with concrete parameter values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Prop2_1 { k: i64 },
    Eq7 { n: i64, k: i64, l: i64, m1: i64, m2: i64 },
    Eq8 { n: i64, k: i64, m: i64 },
    Eq9 { n: i64, k: i64, l: i64, m: i64 },
    Eq10 { n: i64, k: i64, m: i64 },
    Klee { k: i64, m: i64 },
    Eq11 { n: i64, k: i64, m: i64 },
    Eq12 { n: i64, k: i64, m: i64 },
}

impl Identity {
    pub fn id(&self) -> IdentityId {
        match self {
            Identity::Prop2_1 { .. } => IdentityId::Prop2_1,
            Identity::Eq7 { .. } => IdentityId::Eq7,
            Identity::Eq8 { .. } => IdentityId::Eq8,
            Identity::Eq9 { .. } => IdentityId::Eq9,
            Identity::Eq10 { .. } => IdentityId::Eq10,
            Identity::Klee { .. } => IdentityId::Klee,
            Identity::Eq11 { .. } => IdentityId::Eq11,
            Identity::Eq12 { .. } => IdentityId::Eq12,
        }
    }

    /// Parameter values in [`IdentityId::params`] order.
    pub fn values(&self) -> Vec<i64> {
        match *self {
            Identity::Prop2_1 { k } => alloc::vec![k],
            Identity::Eq7 { n, k, l, m1, m2 } => alloc::vec![n, k, l, m1, m2],
            Identity::Eq8 { n, k, m }
            | Identity::Eq10 { n, k, m }
            | Identity::Eq11 { n, k, m }
            | Identity::Eq12 { n, k, m } => alloc::vec![n, k, m],
            Identity::Eq9 { n, k, l, m } => alloc::vec![n, k, l, m],
            Identity::Klee { k, m } => alloc::vec![k, m],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let id = self.id();
        let values = self.values();
        if values.iter().any(|&v| v < 0) {
            return Err(Error::Signature { id: id.name(), reason: "parameters must be nonnegative" });
        }
        for &(a, b) in id.order_constraints() {
            if values[a] > values[b] {
                let reason = match (id.params()[a], id.params()[b]) {
                    ("m1", "m2") => "requires m1 <= m2",
                    ("m2", "n") => "requires m2 <= n",
                    ("l", "k") => "requires l <= k",
                    ("k", "n") => "requires k <= n",
                    ("m", "n") => "requires m <= n",
                    _ => "parameter order violated",
                };
                return Err(Error::Signature { id: id.name(), reason });
            }
        }
        Ok(())
    }
}

/// Adds `delta` to right-hand term number `term` (0-based, in summation order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Perturbation {
    pub term: usize,
    pub delta: i64,
}

/// Both sides of an evaluated identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: BigInt,
    pub rhs: BigInt,
    /// Number of terms summed on the right, zero binomials included.
    pub rhs_terms: usize,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

struct Terms {
    total: BigInt,
    count: usize,
    perturbation: Option<Perturbation>,
}

impl Terms {
    fn new(perturbation: Option<Perturbation>) -> Self {
        Terms { total: BigInt::zero(), count: 0, perturbation }
    }

    fn push(&mut self, negative: bool, magnitude: BigInt) {
        if negative {
            self.total -= magnitude;
        } else {
            self.total += magnitude;
        }
        if let Some(p) = self.perturbation {
            if p.term == self.count {
                self.total += p.delta;
            }
        }
        self.count += 1;
    }
}

/// Identity evaluator with a shared table of binomial coefficients.
#[derive(Clone, Debug)]
pub struct Evaluator {
    binomials: Binomials,
    perturbation: Option<Perturbation>,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new(0)
    }
}

impl Evaluator {
    /// Coefficients with upper argument up to `max_n` are tabulated; larger
    /// ones are computed on demand.
    pub fn new(max_n: usize) -> Self {
        Evaluator { binomials: Binomials::new(max_n), perturbation: None }
    }

    pub fn with_perturbation(mut self, perturbation: Option<Perturbation>) -> Self {
        self.perturbation = perturbation;
        self
    }

    pub fn perturbation(&self) -> Option<Perturbation> {
        self.perturbation
    }

    fn c(&self, n: i64, r: i64) -> Result<BigInt> {
        self.binomials.get(n, r).map(|c| c.into_owned())
    }

    pub fn eval(&self, identity: &Identity) -> Result<Sides> {
        identity.validate()?;
        let b = &self.binomials;
        let mut rhs = Terms::new(self.perturbation);
        let lhs = match *identity {
            Identity::Prop2_1 { k } => {
                for i in 0..=k {
                    let term = &*b.get(k, i)? << (k - i) as usize;
                    rhs.push(i % 2 == 1, term);
                }
                BigInt::one()
            }
            Identity::Eq7 { n, k, l, m1, m2 } => {
                for i1 in 0..=l {
                    for i2 in 0..=k - l {
                        let coeff = &*b.get(l, i1)? * &*b.get(k - l, i2)?;
                        for i3 in m1 - i2..=m2 - i2 {
                            rhs.push((i1 + i2) % 2 == 1, &coeff * &*b.get(n - i1 - i2, i3)?);
                        }
                    }
                }
                let mut lhs = BigInt::zero();
                for i in m1 - l..=m2 - l {
                    lhs += &*b.get(n - k, i)?;
                }
                lhs
            }
            Identity::Eq8 { n, k, m } => {
                for i in 0..=k {
                    rhs.push(i % 2 == 1, &*b.get(k, i)? * &*b.get(n - i, m)?);
                }
                self.c(n - k, m - k)?
            }
            Identity::Eq9 { n, k, l, m } => {
                for i1 in 0..=l {
                    for i2 in 0..=k - l {
                        let term = &*b.get(l, i1)? * &*b.get(k - l, i2)? * &*b.get(n - i1 - i2, m - i2)?;
                        rhs.push((i1 + i2) % 2 == 1, term);
                    }
                }
                self.c(n - k, m - l)?
            }
            Identity::Eq10 { n, k, m } => {
                for i in 0..=k {
                    rhs.push(i % 2 == 1, &*b.get(k, i)? * &*b.get(n - i, m - i)?);
                }
                self.c(n - k, m)?
            }
            Identity::Klee { k, m } => {
                for i in 0..=k {
                    rhs.push(i % 2 == 1, &*b.get(k, i)? * &*b.get(k + i, m)?);
                }
                let c = self.c(k, m - k)?;
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            }
            Identity::Eq11 { n, k, m } => {
                for i1 in 0..=k {
                    let coeff = b.get(k, i1)?;
                    for i2 in 0..=m - i1 {
                        rhs.push(i1 % 2 == 1, &*coeff * &*b.get(n + k - i1, i2)?);
                    }
                }
                self.partial_row_sum(n, m)?
            }
            Identity::Eq12 { n, k, m } => {
                for i1 in 0..=k {
                    let coeff = b.get(k, i1)?;
                    for i2 in k..=m + k {
                        rhs.push(i1 % 2 == 1, &*coeff * &*b.get(n + k - i1, i2)?);
                    }
                }
                self.partial_row_sum(n, m)?
            }
        };
        Ok(Sides { lhs, rhs: rhs.total, rhs_terms: rhs.count })
    }

    fn partial_row_sum(&self, n: i64, m: i64) -> Result<BigInt> {
        let mut sum = BigInt::zero();
        for i in 0..=m {
            sum += &*self.binomials.get(n, i)?;
        }
        Ok(sum)
    }
}

/// Evaluates both sides of `identity` exactly.
pub fn eval_identity(identity: &Identity) -> Result<Sides> {
    Evaluator::default().eval(identity)
}

/// How to compute a row of partial binomial sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BernoulliRoute {
    /// Running sums of `C(n, i)`.
    Direct,
    /// Right-hand side of [`IdentityId::Eq11`] with the given `k`.
    Eq11 { k: u64 },
    /// Right-hand side of [`IdentityId::Eq12`] with the given `k`.
    Eq12 { k: u64 },
}

/// `[Σ_{i≤m} C(n, i)]` for `m = 0..=upto`, by the chosen route.
pub fn bernoulli_row_via(route: BernoulliRoute, n: u64, upto: u64) -> Result<Vec<BigInt>> {
    let (k, id) = match route {
        BernoulliRoute::Direct => return crate::binomial::bernoulli_row(n, upto),
        BernoulliRoute::Eq11 { k } => (k, IdentityId::Eq11),
        BernoulliRoute::Eq12 { k } => (k, IdentityId::Eq12),
    };
    if upto > n {
        return Err(Error::Signature { id: "bernoulli", reason: "requires upto <= n" });
    }
    let evaluator = Evaluator::new((n + k) as usize);
    (0..=upto)
        .map(|m| {
            let identity = id.instantiate(&[n as i64, k as i64, m as i64])?;
            evaluator.eval(&identity).map(|s| s.rhs)
        })
        .collect()
}
