//! File formats, verification reports and the command-line front end for
//! [`rectcount_core`].

pub mod cli;
pub mod format;
pub mod report;
pub mod suite;

pub use rectcount_core as core;
