//! Exact counting on rectangular areas.
//!
//! The number of columns of a matrix equal to a target column `c` can be
//! obtained by inclusion-exclusion over row subsets `I`:
//!
//! ```text
//! ν(c) = Σ_{I ⊆ [m]} (-1)^{|I|} A(I)
//! ```
//!
//! where `A(I)` counts the columns that disagree with `c` on every row of `I`
//! (and `A(∅) = n`). This crate implements that count next to a direct scan,
//! its specialized uniform and bivariate forms, the subset-incidence matrix
//! used to derive binomial identities from it, and exact evaluators for both
//! sides of each of those identities.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, reports and
//! the command-line front end live in the `rectcount` crate.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod binomial;
pub mod bits;
pub mod counting;
mod error;
pub mod grid;
pub mod identity;
pub mod lattice;
pub mod matrix;
pub mod verify;

pub use binomial::{bernoulli_row, binom, Binomials};
pub use counting::{
    count_binary_bivariate, count_direct, count_inclusion_exclusion, count_uniform,
    mismatch_count, mismatch_count_scan, mismatch_profile, BivariateTable, ENUMERATION_GUARD,
};
pub use error::{Error, Result};
pub use grid::{Axis, ParamGrid};
pub use identity::{bernoulli_row_via, eval_identity, BernoulliRoute, Evaluator, Identity, IdentityId, Perturbation, Sides};
pub use lattice::{
    build_incidence, count_subsets_brute, count_subsets_formula, theorem_input_table,
    IncidenceMatrix, SubsetConstraint,
};
pub use matrix::{ColumnPattern, RectMatrix, RowSubset, Symbol};
pub use num_bigint::BigInt;
