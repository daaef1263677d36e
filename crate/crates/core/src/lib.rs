//! Exact-arithmetic toolkit for the compression calculus on rational vectors
//! and for distinct-distance / unit-distance censuses over finite point sets.
//!
//! Everything that feeds an equality or inequality check is computed in
//! arbitrary-precision rational arithmetic; floating point appears only in
//! square roots, bound formulas, and report output.

pub mod census;
pub mod claims;
pub mod compression;
pub mod error;
pub mod estimates;
pub mod generate;
pub mod io;
pub mod rational;
pub mod report;
pub mod vector;

pub use census::{CensusResult, PointSet};
pub use claims::{BoundParams, ClaimVerdict, CorollaryVariant, Violation};
pub use error::Error;
pub use rational::Rational;
pub use report::{BoundReport, ReportRow};
pub use vector::{NaturalVector, RationalVector, Scale};
