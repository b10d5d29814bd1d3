//! Differential-testing harness: input generation, per-lemma campaigns,
//! shrinking, reports, trace rendering, and term generation for the
//! interpreter health suites.

pub mod gen;
pub mod lemmas;
pub mod oracles;
pub mod report;
pub mod termgen;
pub mod traceview;

pub use lemmas::{check_lemma, falsify_lemma, LemmaId, PlantedBug};
pub use report::CheckReport;
pub use traceview::trace_report;
