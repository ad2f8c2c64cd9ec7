//! The independent graph `I_G(Z_n)` of the cyclic group `Z_n`: distinct
//! residues are adjacent when their additive orders differ.
//!
//! [`closed_form`] computes invariants from the divisors of `n`, [`oracle`]
//! builds the graph and computes them by brute force, and [`audit`] checks a
//! set of published statements against both.

pub mod audit;
pub mod claims;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod export;
pub mod invariants;
pub mod oracle;
pub mod zn;

pub use audit::{audit_n, render_report, sweep, sweep_parallel, AuditConfig, ReportFormat, Status, SweepReport, TheoremId};
pub use closed_form::{cf_edge_count, cf_invariants};
pub use error::{Error, Result};
pub use invariants::{DegreeSequence, ExtendedLength, InvariantSet};
pub use oracle::{IndependentGraph, OracleLimits};
pub use zn::Modulus;
