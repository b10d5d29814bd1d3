//! The simply typed λ-calculus over words: grammar, parser, printer,
//! type checker, and evaluator.

pub mod ast;
pub mod eval;
pub mod infer;
pub mod parse;
pub mod print;

pub use ast::{Const, Term, Ty};
pub use eval::{evaluate, evaluate_capped, Assignment, Value};
pub use infer::{infer_closed, infer_type, TypeError};
pub use parse::{parse_term, parse_term_with_context, parse_type, ParseError};
pub use print::{print_term, print_type};
