//! Desk-scale laboratory for thermodynamic formalism of nonadditive potential
//! sequences on one-sided full shifts.
//!
//! The crate is organized around exact, deterministic computations on
//! cylinders of the full shift on `k` symbols:
//!
//! - [`shift`]: words, eventually periodic points, the Bowen metric,
//!   periodic-orbit and word enumeration, closing-lemma shadowing.
//! - [`potentials`]: locally constant potentials and the
//!   [`potentials::PotentialSequence`] abstraction (Birkhoff, measure-generated,
//!   explicit and combined sequences) with exact cylinder extrema.
//! - [`regularity`]: almost-additivity defects, variation over Bowen balls,
//!   the bounded/unbounded condition battery and physical-equivalence reports.
//! - [`pressure`]: partition-sum pressure, transfer-operator pressure,
//!   Ruelle-Perron-Frobenius equilibria, Gibbs and quasi-Bernoulli constants.
//! - [`cohomology`]: periodic-sum certificates, exact coboundary solving,
//!   Karp mean cycles on de Bruijn graphs, the transfer operator and the
//!   coboundary/kernel/constant decomposition, circle-rotation demos.
//! - [`cocycles`]: positive matrix cocycles, their log-norm sequences,
//!   distortion and periodic-data bound checks.
//! - [`families`]: cylinder measure families (Bernoulli, Markov,
//!   hidden-Markov, explicit tables) and sequence classification.
//! - [`corpus`]: deterministic example corpora shared by tests and the CLI.
//!
//! All computations are pure, deterministic and free of randomness; reductions
//! over word enumerations run in lexicographic order.

pub mod cocycles;
pub mod cohomology;
pub mod corpus;
pub mod families;
pub mod potentials;
pub mod pressure;
pub mod regularity;
pub mod shift;
pub mod trend;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An enumeration would exceed the configured item budget.
    #[error("enumeration budget exceeded for {what}: need {needed} items, budget {budget}")]
    Budget {
        what: &'static str,
        needed: u128,
        budget: u64,
    },
    /// Invalid construction parameters (alphabet size, table shape, ...).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A parse error in one of the text file formats, with file/line context.
    #[error("parse error in {file} line {line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    /// A cylinder weight came out zero or negative.
    #[error("degenerate measure: {0}")]
    DegenerateMeasure(String),
    /// Power iteration failed to converge within the iteration limit.
    #[error("iteration limit reached after {iterations} steps (relative tolerance {tol})")]
    IterationLimit { iterations: usize, tol: f64 },
    /// A linear solve required by a decomposition was singular.
    #[error("decomposition failure: {0}")]
    Decomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Tolerance used for all "exact up to floating point" claims in this crate.
pub const EXACTNESS_TOL: f64 = 1e-9;
