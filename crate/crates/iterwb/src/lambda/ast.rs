//! Types and terms of the simply typed λ-calculus over words.

use std::fmt;

use crate::word::Word;

/// Simple types: the base type `W` and arrows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Ty {
    Word,
    Arrow(Box<Ty>, Box<Ty>),
}

impl Ty {
    pub fn arrow(dom: Ty, cod: Ty) -> Ty {
        Ty::Arrow(Box::new(dom), Box::new(cod))
    }

    /// Builds `t1 -> t2 -> ... -> tn` from a nonempty list (right associated).
    pub fn arrows(parts: Vec<Ty>) -> Ty {
        let mut iter = parts.into_iter().rev();
        let mut out = iter.next().expect("arrows needs at least one type");
        for dom in iter {
            out = Ty::arrow(dom, out);
        }
        out
    }

    /// The level of the type: level(W) = 0, and in normal form
    /// `τ₁→…→τ_k→W` the level is 1 + max level of the τᵢ.
    pub fn level(&self) -> usize {
        match self {
            Ty::Word => 0,
            Ty::Arrow(..) => {
                let mut max_dom = 0;
                let mut cur = self;
                while let Ty::Arrow(dom, cod) = cur {
                    max_dom = max_dom.max(dom.level());
                    cur = cod;
                }
                1 + max_dom
            }
        }
    }
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Word => write!(f, "W"),
            Ty::Arrow(dom, cod) => {
                match **dom {
                    Ty::Word => write!(f, "W")?,
                    Ty::Arrow(..) => write!(f, "({})", dom)?,
                }
                write!(f, "->{}", cod)
            }
        }
    }
}

impl fmt::Debug for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The reserved constants of the calculus: every word base function plus
/// the recursion/iteration primitives.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Const {
    Trunc,
    Dropl,
    Lmin,
    Cond,
    App0,
    App1,
    Tup2,
    Tup3,
    Pi2(u8),
    Pi3(u8),
    Eq,
    Rec,
    Rec0,
    Iter,
    Jter,
    IterK(u32),
    JterK(u32),
}

impl Const {
    pub fn name(&self) -> String {
        match self {
            Const::Trunc => "trunc".into(),
            Const::Dropl => "dropl".into(),
            Const::Lmin => "lmin".into(),
            Const::Cond => "cond".into(),
            Const::App0 => "app0".into(),
            Const::App1 => "app1".into(),
            Const::Tup2 => "tup2".into(),
            Const::Tup3 => "tup3".into(),
            Const::Pi2(i) => format!("pi2_{}", i),
            Const::Pi3(i) => format!("pi3_{}", i),
            Const::Eq => "eq".into(),
            Const::Rec => "rec".into(),
            Const::Rec0 => "rec0".into(),
            Const::Iter => "iter".into(),
            Const::Jter => "jter".into(),
            Const::IterK(k) => format!("iterk{}", k),
            Const::JterK(k) => format!("jterk{}", k),
        }
    }

    pub fn from_name(name: &str) -> Option<Const> {
        let c = match name {
            "trunc" => Const::Trunc,
            "dropl" => Const::Dropl,
            "lmin" => Const::Lmin,
            "cond" => Const::Cond,
            "app0" => Const::App0,
            "app1" => Const::App1,
            "tup2" => Const::Tup2,
            "tup3" => Const::Tup3,
            "pi2_1" => Const::Pi2(1),
            "pi2_2" => Const::Pi2(2),
            "pi3_1" => Const::Pi3(1),
            "pi3_2" => Const::Pi3(2),
            "pi3_3" => Const::Pi3(3),
            "eq" => Const::Eq,
            "rec" => Const::Rec,
            "rec0" => Const::Rec0,
            "iter" => Const::Iter,
            "jter" => Const::Jter,
            _ => {
                if let Some(rest) = name.strip_prefix("iterk") {
                    return rest.parse().ok().map(Const::IterK);
                }
                if let Some(rest) = name.strip_prefix("jterk") {
                    return rest.parse().ok().map(Const::JterK);
                }
                return None;
            }
        };
        Some(c)
    }

    /// The declared type of the constant.
    pub fn ty(&self) -> Ty {
        use Ty::Word as W;
        let w1 = Ty::arrow(W, W);
        let w2 = Ty::arrows(vec![W, W, W]);
        match self {
            Const::Dropl | Const::App0 | Const::App1 | Const::Pi2(_) | Const::Pi3(_) => w1,
            Const::Trunc | Const::Lmin | Const::Tup2 | Const::Eq => w2,
            Const::Cond | Const::Tup3 => Ty::arrows(vec![W, W, W, W]),
            // Rec : (W->W->W) -> (W->W) -> W -> W -> W
            Const::Rec => Ty::arrows(vec![w2, w1, W, W, W]),
            // Rec0 : (W->W->W) -> W -> W -> W -> W
            Const::Rec0 => Ty::arrows(vec![w2, W, W, W, W]),
            // Iter, Jter : (W->W) -> W -> W -> W -> W
            Const::Iter | Const::Jter => Ty::arrows(vec![w1, W, W, W, W]),
            // Iter_k, Jter_k : (W->W) -> W -> W -> W
            Const::IterK(_) | Const::JterK(_) => Ty::arrows(vec![w1, W, W, W]),
        }
    }

    /// True for the word base functions (the constants a translation may
    /// always mention, as opposed to the iteration primitives).
    pub fn is_base(&self) -> bool {
        !matches!(
            self,
            Const::Rec | Const::Rec0 | Const::Iter | Const::Jter | Const::IterK(_) | Const::JterK(_)
        )
    }
}

/// λ-terms. Binders carry explicit type annotations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Term {
    Var(String),
    Lit(Word),
    Const(Const),
    Abs(String, Ty, Box<Term>),
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.into())
    }

    pub fn abs(name: &str, ty: Ty, body: Term) -> Term {
        Term::Abs(name.into(), ty, Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// `f a1 a2 ... an` (left associated).
    pub fn apps(fun: Term, args: Vec<Term>) -> Term {
        args.into_iter().fold(fun, Term::app)
    }

    /// The free variables of the term.
    pub fn free_vars(&self) -> Vec<String> {
        fn go(t: &Term, bound: &mut Vec<String>, out: &mut Vec<String>) {
            match t {
                Term::Var(x) => {
                    if !bound.iter().any(|b| b == x) && !out.iter().any(|o| o == x) {
                        out.push(x.clone());
                    }
                }
                Term::Lit(_) | Term::Const(_) => {}
                Term::Abs(x, _, body) => {
                    bound.push(x.clone());
                    go(body, bound, out);
                    bound.pop();
                }
                Term::App(f, a) => {
                    go(f, bound, out);
                    go(a, bound, out);
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Substitutes a closed term for a free variable. The replacement must
    /// be closed, so no capture can occur.
    pub fn subst(&self, name: &str, replacement: &Term) -> Term {
        debug_assert!(replacement.is_closed());
        match self {
            Term::Var(x) if x == name => replacement.clone(),
            Term::Var(_) | Term::Lit(_) | Term::Const(_) => self.clone(),
            Term::Abs(x, ty, body) => {
                if x == name {
                    self.clone()
                } else {
                    Term::Abs(x.clone(), ty.clone(), Box::new(body.subst(name, replacement)))
                }
            }
            Term::App(f, a) => Term::app(f.subst(name, replacement), a.subst(name, replacement)),
        }
    }

    /// Every constant mentioned anywhere in the term.
    pub fn constants(&self) -> Vec<Const> {
        fn go(t: &Term, out: &mut Vec<Const>) {
            match t {
                Term::Const(c) => {
                    if !out.contains(c) {
                        out.push(*c);
                    }
                }
                Term::Abs(_, _, body) => go(body, out),
                Term::App(f, a) => {
                    go(f, out);
                    go(a, out);
                }
                _ => {}
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_normal_form_and_level() {
        let w1 = Ty::arrow(Ty::Word, Ty::Word);
        assert_eq!(Ty::Word.level(), 0);
        assert_eq!(w1.level(), 1);
        assert_eq!(Ty::arrow(w1.clone(), Ty::Word).level(), 2);
        assert_eq!(
            Ty::arrows(vec![Ty::Word, w1.clone(), Ty::Word]).level(),
            2
        );
    }

    #[test]
    fn constant_names_round_trip() {
        let all = [
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
            Const::Pi3(3),
            Const::Eq,
            Const::Rec,
            Const::Rec0,
            Const::Iter,
            Const::Jter,
            Const::IterK(2),
            Const::JterK(0),
        ];
        for c in all {
            assert_eq!(Const::from_name(&c.name()), Some(c));
        }
        assert_eq!(Const::from_name("frobnicate"), None);
    }

    #[test]
    fn free_variable_sets() {
        let t = Term::abs(
            "x",
            Ty::Word,
            Term::app(Term::var("f"), Term::var("x")),
        );
        assert_eq!(t.free_vars(), vec!["f".to_string()]);
        assert!(!t.is_closed());
    }
}
