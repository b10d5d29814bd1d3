//! The set-theoretic value function: terms denote words or total
//! functionals, constants denote the fixed base functions and iteration
//! primitives.

use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{guard_len, RunError, DEFAULT_CAP};
use crate::iterators;
use crate::lambda::ast::{Const, Term};
use crate::word::{self, Word};

/// A semantic functional: a word, or a total map between values.
#[derive(Clone)]
pub enum Value {
    Ground(Word),
    Func(Rc<dyn Fn(Value) -> Result<Value, RunError>>),
}

impl Value {
    pub fn ground(w: Word) -> Value {
        Value::Ground(w)
    }

    pub fn func(f: impl Fn(Value) -> Result<Value, RunError> + 'static) -> Value {
        Value::Func(Rc::new(f))
    }

    pub fn apply(&self, arg: Value) -> Result<Value, RunError> {
        match self {
            Value::Func(f) => f(arg),
            Value::Ground(_) => Err(RunError::NotAFunction),
        }
    }

    pub fn as_word(&self) -> Result<Word, RunError> {
        match self {
            Value::Ground(w) => Ok(w.clone()),
            Value::Func(_) => Err(RunError::NotAFunction),
        }
    }
}

impl std::fmt::Debug for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Ground(w) => write!(f, "Ground({:?})", w),
            Value::Func(_) => write!(f, "Func(..)"),
        }
    }
}

/// A finite map from variable names to values.
pub type Assignment = HashMap<String, Value>;

/// Evaluates a term under an assignment with the default resource cap.
pub fn evaluate(t: &Term, env: &Assignment) -> Result<Value, RunError> {
    evaluate_capped(t, env, DEFAULT_CAP)
}

/// Evaluates with an explicit cap on produced ground words.
pub fn evaluate_capped(t: &Term, env: &Assignment, cap: usize) -> Result<Value, RunError> {
    match t {
        Term::Var(name) => env
            .get(name)
            .cloned()
            .ok_or_else(|| RunError::Unbound(name.clone())),
        Term::Lit(w) => Ok(Value::Ground(w.clone())),
        Term::Const(c) => Ok(const_value(*c, cap)),
        Term::Abs(name, _ty, body) => {
            let name = name.clone();
            let body: Rc<Term> = Rc::new((**body).clone());
            let captured = env.clone();
            Ok(Value::func(move |arg| {
                let mut inner = captured.clone();
                inner.insert(name.clone(), arg);
                evaluate_capped(&body, &inner, cap)
            }))
        }
        Term::App(fun, arg) => {
            // applicative order: the argument is evaluated before application
            let fun_v = evaluate_capped(fun, env, cap)?;
            let arg_v = evaluate_capped(arg, env, cap)?;
            fun_v.apply(arg_v)
        }
    }
}

fn guarded(w: Word, cap: usize) -> Result<Value, RunError> {
    guard_len(w.len(), cap)?;
    Ok(Value::Ground(w))
}

fn ground1(cap: usize, f: impl Fn(&Word) -> Word + 'static) -> Value {
    Value::func(move |a| guarded(f(&a.as_word()?), cap))
}

fn ground2(cap: usize, f: impl Fn(&Word, &Word) -> Word + Clone + 'static) -> Value {
    Value::func(move |a| {
        let a = a.as_word()?;
        let f = f.clone();
        Ok(Value::func(move |b| guarded(f(&a, &b.as_word()?), cap)))
    })
}

fn ground3(cap: usize, f: impl Fn(&Word, &Word, &Word) -> Word + Clone + 'static) -> Value {
    Value::func(move |a| {
        let a = a.as_word()?;
        let f = f.clone();
        Ok(Value::func(move |b| {
            let b = b.as_word()?;
            let a = a.clone();
            let f = f.clone();
            Ok(Value::func(move |c| guarded(f(&a, &b, &c.as_word()?), cap)))
        }))
    })
}

/// Adapts a functional value of type W->W into a step function.
fn step1_of(v: Value, cap: usize) -> impl Fn(&Word) -> Result<Word, RunError> {
    move |t: &Word| {
        let out = v.apply(Value::Ground(t.clone()))?.as_word()?;
        guard_len(out.len(), cap)?;
        Ok(out)
    }
}

/// Adapts a functional value of type W->W->W into a two-argument step.
fn step2_of(v: Value, cap: usize) -> impl Fn(&Word, &Word) -> Result<Word, RunError> {
    move |d: &Word, t: &Word| {
        let out = v
            .apply(Value::Ground(d.clone()))?
            .apply(Value::Ground(t.clone()))?
            .as_word()?;
        guard_len(out.len(), cap)?;
        Ok(out)
    }
}

fn const_value(c: Const, cap: usize) -> Value {
    match c {
        Const::Trunc => ground2(cap, |c, b| word::truncate(c, b)),
        Const::Dropl => ground1(cap, word::drop_last),
        Const::Lmin => ground2(cap, |c, b| word::lmin(c, b)),
        Const::Cond => ground3(cap, |s, x, y| word::cond(s, x, y)),
        Const::App0 => ground1(cap, |w| word::append_sym(w, 0)),
        Const::App1 => ground1(cap, |w| word::append_sym(w, 1)),
        Const::Tup2 => ground2(cap, |a, b| word::tuple_n(&[a.clone(), b.clone()])),
        Const::Tup3 => ground3(cap, |a, b, c| {
            word::tuple_n(&[a.clone(), b.clone(), c.clone()])
        }),
        Const::Pi2(i) => ground1(cap, move |w| word::project_n_i(w, 2, i as usize)),
        Const::Pi3(i) => ground1(cap, move |w| word::project_n_i(w, 3, i as usize)),
        Const::Eq => ground2(cap, |a, b| word::word_eq(a, b)),
        Const::Rec => Value::func(move |phi| {
            Ok(Value::func(move |psi| {
                let phi = phi.clone();
                Ok(Value::func(move |a| {
                    let a = a.as_word()?;
                    let phi = phi.clone();
                    let psi = psi.clone();
                    Ok(Value::func(move |c| {
                        let c = c.as_word()?;
                        let step = step2_of(phi.clone(), cap);
                        let bound = step1_of(psi.clone(), cap);
                        guarded(iterators::rec(&step, &bound, &a, &c)?, cap)
                    }))
                }))
            }))
        }),
        Const::Rec0 => Value::func(move |phi| {
            Ok(Value::func(move |b| {
                let b = b.as_word()?;
                let phi = phi.clone();
                Ok(Value::func(move |a| {
                    let a = a.as_word()?;
                    let b = b.clone();
                    let phi = phi.clone();
                    Ok(Value::func(move |c| {
                        let c = c.as_word()?;
                        let step = step2_of(phi.clone(), cap);
                        guarded(iterators::rec0(&step, &b, &a, &c)?, cap)
                    }))
                }))
            }))
        }),
        Const::Iter | Const::Jter => {
            let is_iter = c == Const::Iter;
            Value::func(move |phi| {
                Ok(Value::func(move |b| {
                    let b = b.as_word()?;
                    let phi = phi.clone();
                    Ok(Value::func(move |a| {
                        let a = a.as_word()?;
                        let b = b.clone();
                        let phi = phi.clone();
                        Ok(Value::func(move |c| {
                            let c = c.as_word()?;
                            let step = step1_of(phi.clone(), cap);
                            let out = if is_iter {
                                iterators::iter(&step, &b, &a, &c)?
                            } else {
                                iterators::jter(&step, &b, &a, &c)?
                            };
                            guarded(out, cap)
                        }))
                    }))
                }))
            })
        }
        Const::IterK(k) | Const::JterK(k) => {
            let is_iter = matches!(c, Const::IterK(_));
            Value::func(move |phi| {
                Ok(Value::func(move |a| {
                    let a = a.as_word()?;
                    let phi = phi.clone();
                    Ok(Value::func(move |c| {
                        let c = c.as_word()?;
                        let step = step1_of(phi.clone(), cap);
                        let out = if is_iter {
                            iterators::iter_k(k as usize, &step, &a, &c)?.0
                        } else {
                            iterators::jter_k(k as usize, &step, &a, &c)?.0
                        };
                        guarded(out, cap)
                    }))
                }))
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::parse::parse_term;
    use crate::word::w;

    fn eval_word(src: &str) -> Word {
        let t = parse_term(src).unwrap();
        evaluate(&t, &Assignment::new())
            .unwrap()
            .as_word()
            .unwrap()
    }

    #[test]
    fn evaluates_worked_examples() {
        assert_eq!(eval_word("(\\t:W. lmin t '01') '1'"), w("1"));
        assert_eq!(eval_word("''"), Word::empty());
    }

    #[test]
    fn variables_look_up_the_assignment() {
        let mut env = Assignment::new();
        env.insert("X".into(), Value::Ground(w("0")));
        let v = evaluate(&Term::var("X"), &env).unwrap();
        assert_eq!(v.as_word().unwrap(), w("0"));
        match evaluate(&Term::var("Y"), &env) {
            Err(RunError::Unbound(name)) => assert_eq!(name, "Y"),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn beta_redex_and_contractum_agree() {
        let redex = eval_word("(\\x:W. app1 (dropl x)) '100'");
        let contractum = eval_word("app1 (dropl '100')");
        assert_eq!(redex, contractum);
        assert_eq!(redex, w("101"));
    }

    #[test]
    fn constants_evaluate_via_word_core() {
        assert_eq!(eval_word("trunc '10110' '011'"), w("101"));
        assert_eq!(eval_word("eq '01' '01'"), w("1"));
        assert_eq!(eval_word("eq '01' '10'"), Word::empty());
        assert_eq!(eval_word("pi2_2 (tup2 '1' '0')"), w("0"));
    }

    #[test]
    fn iteration_constants_match_reference() {
        assert_eq!(eval_word("iter app1 '1111' '' '000'"), w("111"));
        assert_eq!(eval_word("jter app1 '11' '' '000'"), w("111"));
        assert_eq!(eval_word("iterk1 app1 '0' '0000'"), w("01"));
        assert_eq!(eval_word("jterk0 app1 '0' '000'"), w("01"));
        assert_eq!(eval_word("rec (\\d:W.\\t:W. app1 t) (\\d:W. '1111') '' '00'"), w("11"));
        assert_eq!(eval_word("rec0 (\\d:W.\\t:W. app1 t) '1111' '' '00'"), w("11"));
    }

    #[test]
    fn resource_guard_reports_offending_length() {
        let t = parse_term("app1 ''").unwrap();
        let out = evaluate_capped(&t, &Assignment::new(), 0);
        assert_eq!(
            out.unwrap_err(),
            RunError::ResourceExceeded { len: 1, cap: 0 }
        );
    }
}
