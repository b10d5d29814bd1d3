//! An executable workbench for higher-type feasible computation: binary
//! words, a simply typed λ-calculus over them, six bounded
//! recursion/iteration primitives, translations realizing the
//! equivalences between them, and a seeded differential-testing harness.

pub mod dsl;
pub mod error;
pub mod harness;
pub mod iterators;
pub mod lambda;
pub mod translations;
pub mod word;

pub use error::{RunError, DEFAULT_CAP};
pub use word::Word;
