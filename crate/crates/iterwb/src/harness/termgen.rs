//! Seeded generation of well-typed closed λ-terms, for the interpreter
//! health suites (round-trip, type soundness, β/η preservation).

use rand::Rng;

use crate::harness::gen::gen_word;
use crate::lambda::ast::{Const, Term, Ty};

const GROUND_CONSTS: &[Const] = &[
    Const::Trunc,
    Const::Dropl,
    Const::Lmin,
    Const::Cond,
    Const::App0,
    Const::App1,
    Const::Tup2,
    Const::Tup3,
    Const::Pi2(1),
    Const::Pi2(2),
    Const::Pi3(1),
    Const::Pi3(2),
    Const::Pi3(3),
    Const::Eq,
];

pub fn gen_ty(rng: &mut impl Rng, depth: usize) -> Ty {
    if depth == 0 || rng.gen_bool(0.6) {
        Ty::Word
    } else {
        Ty::arrow(gen_ty(rng, depth - 1), gen_ty(rng, depth - 1))
    }
}

/// A closed term of the given type, depth-bounded. Falls back to canonical
/// inhabitants (literals / constant functions) when the budget runs out.
pub fn gen_term(rng: &mut impl Rng, ty: &Ty, depth: usize) -> Term {
    gen_term_in(rng, ty, depth, &mut Vec::new())
}

fn canonical(ty: &Ty, rng: &mut impl Rng) -> Term {
    match ty {
        Ty::Word => Term::Lit(gen_word(rng, 4)),
        Ty::Arrow(dom, cod) => {
            let body = canonical(cod, rng);
            Term::abs("u", (**dom).clone(), body)
        }
    }
}

fn gen_term_in(
    rng: &mut impl Rng,
    ty: &Ty,
    depth: usize,
    env: &mut Vec<(String, Ty)>,
) -> Term {
    if depth == 0 {
        return leaf(rng, ty, env);
    }
    // candidate productions: leaf, abstraction (if arrow), application
    let roll = rng.gen_range(0..10);
    match ty {
        Ty::Arrow(dom, cod) if roll < 5 => {
            let name = format!("x{}", env.len());
            env.push((name.clone(), (**dom).clone()));
            let body = gen_term_in(rng, cod, depth - 1, env);
            env.pop();
            Term::abs(&name, (**dom).clone(), body)
        }
        _ if roll < 8 => {
            // application: pick an argument type and build both sides
            let arg_ty = gen_ty(rng, 1);
            let fun_ty = Ty::arrow(arg_ty.clone(), ty.clone());
            let fun = gen_term_in(rng, &fun_ty, depth - 1, env);
            let arg = gen_term_in(rng, &arg_ty, depth - 1, env);
            Term::app(fun, arg)
        }
        _ => leaf(rng, ty, env),
    }
}

fn leaf(rng: &mut impl Rng, ty: &Ty, env: &mut Vec<(String, Ty)>) -> Term {
    let vars: Vec<&(String, Ty)> = env.iter().filter(|(_, t)| t == ty).collect();
    if !vars.is_empty() && rng.gen_bool(0.5) {
        let (name, _) = vars[rng.gen_range(0..vars.len())];
        return Term::var(name);
    }
    let consts: Vec<Const> = GROUND_CONSTS
        .iter()
        .copied()
        .filter(|c| &c.ty() == ty)
        .collect();
    if !consts.is_empty() && rng.gen_bool(0.5) {
        return Term::Const(consts[rng.gen_range(0..consts.len())]);
    }
    canonical(ty, rng)
}
