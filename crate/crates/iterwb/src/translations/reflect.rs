//! Reflections of the builders into closed λ-terms. Each term abstracts
//! over its supplied primitive (`λPRIM. body`), so the closure discipline
//! is checked by walking the body: it may mention only word base
//! constants, and the whole term must type-check.

use crate::lambda::ast::{Const, Term, Ty};
use crate::word::w;

fn v(x: &str) -> Term {
    Term::var(x)
}

fn k(c: Const) -> Term {
    Term::Const(c)
}

fn ap(f: Term, args: Vec<Term>) -> Term {
    Term::apps(f, args)
}

fn lam(x: &str, ty: Ty, body: Term) -> Term {
    Term::abs(x, ty, body)
}

fn lit(s: &str) -> Term {
    Term::Lit(w(s))
}

fn ty_w() -> Ty {
    Ty::Word
}

fn ty1() -> Ty {
    Ty::arrow(Ty::Word, Ty::Word)
}

fn ty2() -> Ty {
    Ty::arrows(vec![Ty::Word, Ty::Word, Ty::Word])
}

fn rec_ty() -> Ty {
    Ty::arrows(vec![ty2(), ty1(), Ty::Word, Ty::Word, Ty::Word])
}

fn rec0_ty() -> Ty {
    Ty::arrows(vec![ty2(), Ty::Word, Ty::Word, Ty::Word, Ty::Word])
}

fn iter_ty() -> Ty {
    Ty::arrows(vec![ty1(), Ty::Word, Ty::Word, Ty::Word, Ty::Word])
}

fn iterk_ty() -> Ty {
    Ty::arrows(vec![ty1(), Ty::Word, Ty::Word, Ty::Word])
}

fn cond(s: Term, x: Term, y: Term) -> Term {
    ap(k(Const::Cond), vec![s, x, y])
}

fn eq(x: Term, y: Term) -> Term {
    ap(k(Const::Eq), vec![x, y])
}

fn lmin_t(x: Term, y: Term) -> Term {
    ap(k(Const::Lmin), vec![x, y])
}

fn dropl(x: Term) -> Term {
    ap(k(Const::Dropl), vec![x])
}

fn app0(x: Term) -> Term {
    ap(k(Const::App0), vec![x])
}

fn app1(x: Term) -> Term {
    ap(k(Const::App1), vec![x])
}

/// `"1"` iff `|x| < |y|`: the left word is the strict lmin-winner and the
/// words differ (length comparison without unary conversion).
fn lt(x: Term, y: Term) -> Term {
    cond(
        eq(lmin_t(x.clone(), y.clone()), x.clone()),
        cond(eq(x, y), lit(""), lit("1")),
        lit(""),
    )
}

/// `"1"` iff the word's last symbol is 1.
fn ends_in_1(s: Term) -> Term {
    eq(s.clone(), app1(dropl(s)))
}

/// `"1"` iff the word's last symbol is 0.
fn ends_in_0(s: Term) -> Term {
    eq(s.clone(), app0(dropl(s)))
}

/// `Rec` from `Rec0`: the constant bound is the argmax-computed maximum of
/// ψ over initial segments of c, plus one digit.
pub fn rec_from_rec0_term() -> Term {
    let a_gadget = lam(
        "d",
        ty_w(),
        lam(
            "t",
            ty_w(),
            cond(
                eq(
                    lmin_t(ap(v("psi"), vec![v("t")]), ap(v("psi"), vec![v("d")])),
                    ap(v("psi"), vec![v("t")]),
                ),
                cond(
                    eq(ap(v("psi"), vec![v("t")]), ap(v("psi"), vec![v("d")])),
                    v("t"),
                    v("d"),
                ),
                v("t"),
            ),
        ),
    );
    let argmax = ap(v("R0"), vec![a_gadget, v("c"), lit(""), v("c")]);
    let bound = app0(ap(v("psi"), vec![argmax]));
    let step = lam(
        "d",
        ty_w(),
        lam(
            "t",
            ty_w(),
            lmin_t(
                ap(v("phi"), vec![v("d"), v("t")]),
                ap(v("psi"), vec![v("d")]),
            ),
        ),
    );
    lam(
        "R0",
        rec0_ty(),
        lam(
            "phi",
            ty2(),
            lam(
                "psi",
                ty1(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        ap(v("R0"), vec![step, bound, v("a"), v("c")]),
                    ),
                ),
            ),
        ),
    )
}

/// `Iter` from `Rec`: constant bound functional, clamped start.
pub fn iter_from_rec_term() -> Term {
    let step = lam("d", ty_w(), lam("t", ty_w(), ap(v("phi"), vec![v("t")])));
    let bound = lam("d", ty_w(), v("b"));
    lam(
        "R",
        rec_ty(),
        lam(
            "phi",
            ty1(),
            lam(
                "b",
                ty_w(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        ap(
                            v("R"),
                            vec![step, bound, lmin_t(v("a"), v("b")), v("c")],
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// `Rec0'` from `Iter`: pair states ⟨unary step counter, running value⟩;
/// the counter bound `0^{|c|}` is itself produced by an iter run.
pub fn rec0p_from_iter_term() -> Term {
    let pi1 = |t: Term| ap(k(Const::Pi2(1)), vec![t]);
    let pi2 = |t: Term| ap(k(Const::Pi2(2)), vec![t]);
    let tup = |x: Term, y: Term| ap(k(Const::Tup2), vec![x, y]);
    let step = lam(
        "t",
        ty_w(),
        tup(
            app0(pi1(v("t"))),
            lmin_t(
                ap(
                    v("phi"),
                    vec![
                        ap(k(Const::Trunc), vec![v("c"), app0(pi1(v("t")))]),
                        pi2(v("t")),
                    ],
                ),
                v("b"),
            ),
        ),
    );
    // 0^{|c|+1}: one digit wider than any reachable counter, so the pair
    // clamp never engages on a live state
    let zeros = app0(ap(
        v("I"),
        vec![
            lam("t", ty_w(), app0(v("t"))),
            app0(v("c")),
            lit(""),
            v("c"),
        ],
    ));
    lam(
        "I",
        iter_ty(),
        lam(
            "phi",
            ty2(),
            lam(
                "b",
                ty_w(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        pi2(ap(
                            v("I"),
                            vec![
                                step,
                                tup(zeros, v("b")),
                                tup(lit(""), lmin_t(v("a"), v("b"))),
                                v("c"),
                            ],
                        )),
                    ),
                ),
            ),
        ),
    )
}

/// `Rec0` from `Rec0'`: tagged running value so the initial value escapes
/// the start clamp; the bound is widened by two digits.
pub fn rec0_from_rec0p_term() -> Term {
    let step = lam(
        "d",
        ty_w(),
        lam(
            "t",
            ty_w(),
            cond(
                v("t"),
                app1(lmin_t(
                    ap(v("phi"), vec![v("d"), dropl(v("t"))]),
                    v("b"),
                )),
                app1(lmin_t(ap(v("phi"), vec![v("d"), v("a")]), v("b"))),
            ),
        ),
    );
    lam(
        "R0p",
        rec0_ty(),
        lam(
            "phi",
            ty2(),
            lam(
                "b",
                ty_w(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        cond(
                            v("c"),
                            dropl(ap(
                                v("R0p"),
                                vec![step, app0(app0(v("b"))), lit(""), v("c")],
                            )),
                            v("a"),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// `Rec0` from `Iter`, composing the two previous translations.
pub fn rec0_from_iter_term() -> Term {
    lam(
        "I",
        iter_ty(),
        ap(rec0_from_rec0p_term(), vec![ap(rec0p_from_iter_term(), vec![v("I")])]),
    )
}

/// Identity (*): `Iter(φ,b,a,c) = lmin(Jter(φ,b,a,c), b)`.
pub fn iter_from_jter_term() -> Term {
    lam(
        "J",
        iter_ty(),
        lam(
            "phi",
            ty1(),
            lam(
                "b",
                ty_w(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        lmin_t(
                            ap(v("J"), vec![v("phi"), v("b"), v("a"), v("c")]),
                            v("b"),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// Identity (**): `Jter(φ,b,a,c) = φ(Iter(φ,b,a,c≫1))` for nonempty c.
pub fn jter_from_iter_term() -> Term {
    lam(
        "I",
        iter_ty(),
        lam(
            "phi",
            ty1(),
            lam(
                "b",
                ty_w(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        cond(
                            v("c"),
                            ap(
                                v("phi"),
                                vec![ap(
                                    v("I"),
                                    vec![v("phi"), v("b"), v("a"), dropl(v("c"))],
                                )],
                            ),
                            v("a"),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// `Iter_0` from `Iter` with the stop-bit gadget.
pub fn iter0_from_iter_term() -> Term {
    let gadget = lam(
        "s",
        ty_w(),
        cond(
            ends_in_1(v("s")),
            v("s"),
            cond(
                lt(ap(v("phi"), vec![dropl(v("s"))]), app0(v("a"))),
                app0(ap(v("phi"), vec![dropl(v("s"))])),
                app1(dropl(v("s"))),
            ),
        ),
    );
    lam(
        "I",
        iter_ty(),
        lam(
            "phi",
            ty1(),
            lam(
                "a",
                ty_w(),
                lam(
                    "c",
                    ty_w(),
                    dropl(ap(
                        v("I"),
                        vec![gadget, app0(app0(v("a"))), app0(v("a")), v("c")],
                    )),
                ),
            ),
        ),
    )
}

/// `Iter_k` from `Iter`, built by recursion on k. The composite's size
/// grows with k; spot evaluation is practical for small k only.
pub fn iterk_from_iter_term(k: usize) -> Term {
    if k == 0 {
        return iter0_from_iter_term();
    }
    let prev = iterk_from_iter_term(k - 1);
    let base = iter0_from_iter_term();
    // prev(x) as a term, with the primitive and parameters threaded through
    let prev_at = |x: Term| ap(prev.clone(), vec![v("I"), v("phi"), v("a"), x]);
    let machine = lam(
        "s",
        ty_w(),
        cond(
            ends_in_0(v("s")),
            v("s"),
            cond(
                eq(prev_at(dropl(v("s"))), prev_at(app0(dropl(v("s"))))),
                app0(dropl(v("s"))),
                app1(app0(dropl(v("s")))),
            ),
        ),
    );
    let ell = dropl(ap(
        v("I"),
        vec![
            machine,
            app0(app0(app0(v("c")))),
            lit("1"),
            app0(v("c")),
        ],
    ));
    let rest = ap(
        v("I"),
        vec![
            lam("t", ty_w(), dropl(v("t"))),
            app0(v("c")),
            v("c"),
            app0(ell.clone()),
        ],
    );
    let body = cond(
        lt(ell.clone(), v("c")),
        ap(
            base,
            vec![
                v("I"),
                v("phi"),
                ap(v("phi"), vec![prev_at(ell)]),
                rest,
            ],
        ),
        prev_at(v("c")),
    );
    lam(
        "I",
        iter_ty(),
        lam(
            "phi",
            ty1(),
            lam("a", ty_w(), lam("c", ty_w(), body)),
        ),
    )
}

/// `Jter_k` from `Iter_k` (same budget): one φ step on the shortened run.
pub fn jterk_from_iterk_term() -> Term {
    lam(
        "IK",
        iterk_ty(),
        lam(
            "phi",
            ty1(),
            lam(
                "a",
                ty_w(),
                lam(
                    "c",
                    ty_w(),
                    cond(
                        v("c"),
                        ap(
                            v("phi"),
                            vec![ap(v("IK"), vec![v("phi"), v("a"), dropl(v("c"))])],
                        ),
                        v("a"),
                    ),
                ),
            ),
        ),
    )
}

/// `Jter` from any `Jter_k`: the flag-bit step function keeps every query
/// at most |b|+1 symbols long, so no lookahead revisions occur.
pub fn jter_from_jterk_term() -> Term {
    let psi = lam(
        "t",
        ty_w(),
        cond(
            ends_in_1(v("t")),
            app1(lmin_t(ap(v("phi"), vec![dropl(v("t"))]), v("b"))),
            app1(lmin_t(v("a"), v("b"))),
        ),
    );
    lam(
        "JK",
        iterk_ty(),
        lam(
            "phi",
            ty1(),
            lam(
                "b",
                ty_w(),
                lam(
                    "a",
                    ty_w(),
                    lam(
                        "c",
                        ty_w(),
                        cond(
                            v("c"),
                            ap(
                                v("phi"),
                                vec![dropl(ap(v("JK"), vec![psi, app0(v("b")), v("c")]))],
                            ),
                            v("a"),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// All reflected builders with the type their primitive hole must have and
/// the type of the functional the filled term denotes.
pub fn builders(k: usize) -> Vec<(String, Term, Ty, Ty)> {
    vec![
        ("rec-from-rec0".into(), rec_from_rec0_term(), rec0_ty(), rec_ty()),
        ("iter-from-rec".into(), iter_from_rec_term(), rec_ty(), iter_ty()),
        ("rec0p-from-iter".into(), rec0p_from_iter_term(), iter_ty(), rec0_ty()),
        ("rec0-from-rec0p".into(), rec0_from_rec0p_term(), rec0_ty(), rec0_ty()),
        ("rec0-from-iter".into(), rec0_from_iter_term(), iter_ty(), rec0_ty()),
        ("iter-from-jter".into(), iter_from_jter_term(), iter_ty(), iter_ty()),
        ("jter-from-iter".into(), jter_from_iter_term(), iter_ty(), iter_ty()),
        ("iter0-from-iter".into(), iter0_from_iter_term(), iter_ty(), iterk_ty()),
        (
            format!("iterk-from-iter(k={})", k),
            iterk_from_iter_term(k),
            iter_ty(),
            iterk_ty(),
        ),
        ("jterk-from-iterk".into(), jterk_from_iterk_term(), iterk_ty(), iterk_ty()),
        ("jter-from-jterk".into(), jter_from_jterk_term(), iterk_ty(), iter_ty()),
    ]
}

/// Mechanical closure-discipline check: the term is closed, mentions only
/// word base constants (the primitive enters through the λ-hole), and has
/// type `hole -> target`.
pub fn check_discipline(term: &Term, hole: &Ty, target: &Ty) -> Result<(), String> {
    if !term.is_closed() {
        return Err(format!("free variables: {:?}", term.free_vars()));
    }
    for c in term.constants() {
        if !c.is_base() {
            return Err(format!("non-base constant `{}` in builder body", c.name()));
        }
    }
    let ty = crate::lambda::infer::infer_closed(term).map_err(|e| format!("ill-typed: {}", e))?;
    let want = Ty::arrow(hole.clone(), target.clone());
    if ty != want {
        return Err(format!("type mismatch: has {}, wants {}", ty, want));
    }
    Ok(())
}

/// The λ-term a `translate` invocation emits for a lemma identifier.
pub fn term_for(name: &str, k: usize) -> Option<Term> {
    let t = match name {
        "lemma1-rec-rec0" | "rec-from-rec0" => rec_from_rec0_term(),
        "lemma2-iter-jter" | "iter-from-jter" => iter_from_jter_term(),
        "jter-from-iter" => jter_from_iter_term(),
        "lemma4-rec-iter" | "rec0-from-iter" => rec0_from_iter_term(),
        "iter-from-rec" => iter_from_rec_term(),
        "rec0p-from-iter" => rec0p_from_iter_term(),
        "rec0-from-rec0p" => rec0_from_rec0p_term(),
        "lemma7-iter0" | "iter0-from-iter" => iter0_from_iter_term(),
        "lemma8-iterk" | "iterk-from-iter" => iterk_from_iter_term(k),
        "sec4-jterk-iterk" | "jterk-from-iterk" => jterk_from_iterk_term(),
        "sec4-jter-jterk" | "jter-from-jterk" => jter_from_jterk_term(),
        _ => return None,
    };
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::eval::{evaluate, Assignment};
    use crate::word::Word;
    use crate::lambda::parse::parse_term;

    fn run_word(t: &Term) -> Word {
        evaluate(t, &Assignment::new()).unwrap().as_word().unwrap()
    }

    fn plug(builder: Term, prim: Const, args: Vec<Term>) -> Term {
        Term::apps(Term::app(builder, Term::Const(prim)), args)
    }

    #[test]
    fn all_builders_satisfy_the_closure_discipline() {
        for (name, term, hole, target) in builders(2) {
            check_discipline(&term, &hole, &target)
                .unwrap_or_else(|e| panic!("{}: {}", name, e));
        }
    }

    #[test]
    fn reflected_terms_print_and_reparse() {
        for (name, term, _, _) in builders(1) {
            let text = crate::lambda::print::print_term(&term);
            let back = parse_term(&text).unwrap_or_else(|e| panic!("{}: {}", name, e));
            assert_eq!(back, term, "{}", name);
        }
    }

    #[test]
    fn reflected_rec_from_rec0_evaluates() {
        let step = parse_term("\\d:W.\\t:W. app1 t").unwrap();
        let psi = parse_term("\\d:W. '1111'").unwrap();
        let t = plug(
            rec_from_rec0_term(),
            Const::Rec0,
            vec![step, psi, Term::Lit(Word::empty()), Term::Lit(w("00"))],
        );
        assert_eq!(run_word(&t), w("11"));
    }

    #[test]
    fn reflected_iter_from_rec_evaluates() {
        let step = parse_term("\\t:W. app1 t").unwrap();
        let t = plug(
            iter_from_rec_term(),
            Const::Rec,
            vec![step, Term::Lit(w("1111")), Term::Lit(Word::empty()), Term::Lit(w("000"))],
        );
        assert_eq!(run_word(&t), w("111"));
    }

    #[test]
    fn reflected_rec0_from_iter_evaluates() {
        let step = parse_term("\\d:W.\\t:W. app1 t").unwrap();
        let t = plug(
            rec0_from_iter_term(),
            Const::Iter,
            vec![step.clone(), Term::Lit(w("1111")), Term::Lit(Word::empty()), Term::Lit(w("00"))],
        );
        assert_eq!(run_word(&t), w("11"));
        // ε length: the initial value escapes the bound
        let t = plug(
            rec0_from_iter_term(),
            Const::Iter,
            vec![step, Term::Lit(w("1")), Term::Lit(w("0000")), Term::Lit(Word::empty())],
        );
        assert_eq!(run_word(&t), w("0000"));
    }

    #[test]
    fn reflected_bridges_evaluate() {
        let step = parse_term("\\t:W. app1 t").unwrap();
        let t = plug(
            iter_from_jter_term(),
            Const::Jter,
            vec![step.clone(), Term::Lit(w("11")), Term::Lit(Word::empty()), Term::Lit(w("000"))],
        );
        assert_eq!(run_word(&t), w("11"));
        let t = plug(
            jter_from_iter_term(),
            Const::Iter,
            vec![step, Term::Lit(w("11")), Term::Lit(Word::empty()), Term::Lit(w("000"))],
        );
        assert_eq!(run_word(&t), w("111"));
    }

    #[test]
    fn reflected_iter0_evaluates() {
        let step = parse_term("\\t:W. app1 t").unwrap();
        let t = plug(
            iter0_from_iter_term(),
            Const::Iter,
            vec![step, Term::Lit(w("00")), Term::Lit(w("111"))],
        );
        assert_eq!(run_word(&t), w("00"));
    }

    #[test]
    fn reflected_iterk_evaluates_for_small_k() {
        let step = parse_term("\\t:W. app1 t").unwrap();
        let t = plug(
            iterk_from_iter_term(1),
            Const::Iter,
            vec![step, Term::Lit(w("0")), Term::Lit(w("0000"))],
        );
        assert_eq!(run_word(&t), w("01"));
    }

    #[test]
    fn reflected_jterk_and_jter_evaluate() {
        let step = parse_term("\\t:W. app1 t").unwrap();
        let t = plug(
            jterk_from_iterk_term(),
            Const::IterK(1),
            vec![step.clone(), Term::Lit(w("0")), Term::Lit(w("000"))],
        );
        assert_eq!(run_word(&t), w("011"));
        let t = plug(
            jter_from_jterk_term(),
            Const::JterK(0),
            vec![step, Term::Lit(w("11")), Term::Lit(Word::empty()), Term::Lit(w("000"))],
        );
        assert_eq!(run_word(&t), w("111"));
    }
}
