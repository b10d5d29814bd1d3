//! Pretty printer; inverse of the parser up to structural equality.

use std::fmt::Write as _;

use crate::lambda::ast::{Term, Ty};

/// Renders a term in the concrete grammar with minimal parentheses.
pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    go(t, false, &mut out);
    out
}

/// `arg_pos`: the term appears as an application argument and must be
/// wrapped unless it is atomic.
fn go(t: &Term, arg_pos: bool, out: &mut String) {
    match t {
        Term::Var(name) => out.push_str(name),
        Term::Lit(word) => {
            let _ = write!(out, "'{}'", word);
        }
        Term::Const(c) => out.push_str(&c.name()),
        Term::Abs(name, ty, body) => {
            let wrap = arg_pos;
            if wrap {
                out.push('(');
            }
            let _ = write!(out, "\\{}:{}. ", name, print_type(ty));
            go(body, false, out);
            if wrap {
                out.push(')');
            }
        }
        Term::App(fun, arg) => {
            if arg_pos {
                out.push('(');
            }
            // the function side keeps left association without parens
            match **fun {
                Term::Abs(..) => {
                    out.push('(');
                    go(fun, false, out);
                    out.push(')');
                }
                _ => go(fun, false, out),
            }
            out.push(' ');
            go(arg, true, out);
            if arg_pos {
                out.push(')');
            }
        }
    }
}

/// Renders a type; arrows associate to the right.
pub fn print_type(ty: &Ty) -> String {
    ty.to_string()
}
