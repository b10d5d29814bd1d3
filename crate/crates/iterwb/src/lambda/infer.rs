//! One-pass type synthesis.

use std::collections::HashMap;

use crate::lambda::ast::{Term, Ty};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TypeError {
    #[error("unbound variable {0:?}")]
    Unbound(String),
    #[error("type mismatch in application: expected {expected}, found {actual}")]
    Mismatch { expected: Ty, actual: Ty },
    #[error("term of base type W applied as a function (it has type W)")]
    NotAFunction,
}

/// Infers the unique type of `t` in `context`, or fails.
pub fn infer_type(t: &Term, context: &HashMap<String, Ty>) -> Result<Ty, TypeError> {
    match t {
        Term::Var(name) => context
            .get(name)
            .cloned()
            .ok_or_else(|| TypeError::Unbound(name.clone())),
        Term::Lit(_) => Ok(Ty::Word),
        Term::Const(c) => Ok(c.ty()),
        Term::Abs(name, ty, body) => {
            let mut inner = context.clone();
            inner.insert(name.clone(), ty.clone());
            let body_ty = infer_type(body, &inner)?;
            Ok(Ty::arrow(ty.clone(), body_ty))
        }
        Term::App(fun, arg) => {
            let fun_ty = infer_type(fun, context)?;
            let arg_ty = infer_type(arg, context)?;
            match fun_ty {
                Ty::Arrow(dom, cod) => {
                    if *dom == arg_ty {
                        Ok(*cod)
                    } else {
                        Err(TypeError::Mismatch {
                            expected: *dom,
                            actual: arg_ty,
                        })
                    }
                }
                Ty::Word => Err(TypeError::NotAFunction),
            }
        }
    }
}

/// Infers the type of a closed term.
pub fn infer_closed(t: &Term) -> Result<Ty, TypeError> {
    infer_type(t, &HashMap::new())
}
