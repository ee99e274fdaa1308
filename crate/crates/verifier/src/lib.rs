//! Empirical verification of the operator-topology claims: enumerate or
//! sample instances, evaluate hypothesis and conclusion per instance, and
//! classify each as confirmed, vacuous, or a counterexample.
//!
//! The flow is [`sweep::run_sweep`] for bulk reports, [`check::evaluate`]
//! for one instance, and [`witness::find_intersection_witness`] for the
//! canonical intersection counterexample. Every counterexample is re-derived
//! through `topoforge_core::naive` before it is reported; the two routes
//! disagreeing is a [`VerifierError::Divergence`], which aborts the run
//! rather than demoting the result.

use thiserror::Error;
use topoforge_core::TopoError;

pub mod check;
pub mod crossval;
pub mod instance;
pub mod pool;
pub mod report;
mod seed;
pub mod sweep;
pub mod theorem;
pub mod verdict;
pub mod witness;

pub use check::{evaluate, CheckOptions};
pub use crossval::cross_validate;
pub use instance::{InstanceData, InstanceDoc, LabeledOperator};
pub use pool::{build_pool, PoolSpec, DEFAULT_SEEDED_EXTRAS, MAX_EXHAUSTIVE_CARRIER};
pub use report::{parse_report, ReportWriter};
pub use sweep::{run_sweep, SweepConfig, DEFAULT_FN_CELL_CAP, MAX_FUNCTION_SWEEP_CARRIER};
pub use theorem::{InstanceShape, TheoremId, ALL_THEOREMS};
pub use verdict::{Classification, Outcome, Summary, Verdict};
pub use witness::{find_intersection_witness, IntersectionWitness};

#[derive(Debug, Error)]
pub enum VerifierError {
    #[error(transparent)]
    Core(#[from] TopoError),

    /// The fast path and the brute-force path computed different truth
    /// values for the same instance. Always a bug in the artifact, never in
    /// the data; surfaced as a hard failure.
    #[error("cross-validation diverged on {key}: {part} is {fast} on the fast path, {naive} on the naive path")]
    Divergence { key: String, part: &'static str, fast: bool, naive: bool },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
