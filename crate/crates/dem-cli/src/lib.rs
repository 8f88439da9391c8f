//! Reporting and reproduction machinery behind the `demtool` binary.
//!
//! The solver, families, and perturbation analysis all live in `dem-core`;
//! this crate adds the reproduction suites (recomputing every claimed value
//! from scratch) and their TSV/JSON report formats.

pub mod report;
pub mod reproduce;
