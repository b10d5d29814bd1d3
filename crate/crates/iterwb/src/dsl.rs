//! A combinator DSL of total, pure step functions. Used by the harness to
//! generate random type-1 arguments for the iteration schemes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{guard_len, RunError, DEFAULT_CAP};
use crate::word::{self, Word};

/// Expression tree over step-function combinators. Every tree denotes a
/// total, deterministic, poly-time `Word -> Word` function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepDsl {
    Id,
    Const(Word),
    App0,
    App1,
    Dropl,
    /// t ↦ tt
    Selfcat,
    TruncTo(Word),
    LminWith(Word),
    /// compose(f, g): f after g
    Compose(Box<StepDsl>, Box<StepDsl>),
    /// if the input is ε apply f, else apply g (both to the input)
    CondEmpty(Box<StepDsl>, Box<StepDsl>),
    /// if |input| > |w| apply f, else g
    IteLonger(Word, Box<StepDsl>, Box<StepDsl>),
}

impl StepDsl {
    pub fn compose(f: StepDsl, g: StepDsl) -> StepDsl {
        StepDsl::Compose(Box::new(f), Box::new(g))
    }

    pub fn cond_empty(f: StepDsl, g: StepDsl) -> StepDsl {
        StepDsl::CondEmpty(Box::new(f), Box::new(g))
    }

    pub fn ite_longer(w: Word, f: StepDsl, g: StepDsl) -> StepDsl {
        StepDsl::IteLonger(w, Box::new(f), Box::new(g))
    }

    pub fn depth(&self) -> usize {
        match self {
            StepDsl::Compose(f, g) | StepDsl::CondEmpty(f, g) => 1 + f.depth().max(g.depth()),
            StepDsl::IteLonger(_, f, g) => 1 + f.depth().max(g.depth()),
            _ => 1,
        }
    }

    /// The denoted function, guarded by `cap`.
    pub fn apply(&self, input: &Word, cap: usize) -> Result<Word, RunError> {
        let out = match self {
            StepDsl::Id => input.clone(),
            StepDsl::Const(w) => w.clone(),
            StepDsl::App0 => word::append_sym(input, 0),
            StepDsl::App1 => word::append_sym(input, 1),
            StepDsl::Dropl => word::drop_last(input),
            StepDsl::Selfcat => {
                let mut out = input.clone();
                for &b in input.bits() {
                    out.push(b);
                }
                out
            }
            StepDsl::TruncTo(w) => word::truncate(input, w),
            StepDsl::LminWith(w) => word::lmin(input, w),
            StepDsl::Compose(f, g) => {
                let mid = g.apply(input, cap)?;
                f.apply(&mid, cap)?
            }
            StepDsl::CondEmpty(f, g) => {
                if input.is_empty() {
                    f.apply(input, cap)?
                } else {
                    g.apply(input, cap)?
                }
            }
            StepDsl::IteLonger(w, f, g) => {
                if input.len() > w.len() {
                    f.apply(input, cap)?
                } else {
                    g.apply(input, cap)?
                }
            }
        };
        guard_len(out.len(), cap)?;
        Ok(out)
    }

    /// A closure suitable as a reference step function.
    pub fn step(&self, cap: usize) -> impl Fn(&Word) -> Result<Word, RunError> + '_ {
        move |t: &Word| self.apply(t, cap)
    }

    /// As [`StepDsl::step`] with the default cap.
    pub fn step_default(&self) -> impl Fn(&Word) -> Result<Word, RunError> + '_ {
        self.step(DEFAULT_CAP)
    }

    /// Structurally smaller trees that a shrinker may try in place of this
    /// one: subtrees, leaf simplifications, and shortened constants.
    pub fn shrink_candidates(&self) -> Vec<StepDsl> {
        let mut out = Vec::new();
        match self {
            StepDsl::Id => {}
            StepDsl::Const(w) if w.is_empty() => out.push(StepDsl::Id),
            StepDsl::Const(w) => {
                out.push(StepDsl::Const(word::drop_last(w)));
                out.push(StepDsl::Id);
            }
            StepDsl::TruncTo(w) | StepDsl::LminWith(w) if !w.is_empty() => {
                let shorter = word::drop_last(w);
                out.push(match self {
                    StepDsl::TruncTo(_) => StepDsl::TruncTo(shorter),
                    _ => StepDsl::LminWith(shorter),
                });
                out.push(StepDsl::Id);
            }
            StepDsl::Compose(f, g) | StepDsl::CondEmpty(f, g) => {
                out.push((**f).clone());
                out.push((**g).clone());
                for fc in f.shrink_candidates() {
                    out.push(match self {
                        StepDsl::Compose(_, g) => StepDsl::compose(fc, (**g).clone()),
                        _ => StepDsl::cond_empty(fc, (**g).clone()),
                    });
                }
                for gc in g.shrink_candidates() {
                    out.push(match self {
                        StepDsl::Compose(f, _) => StepDsl::compose((**f).clone(), gc),
                        _ => StepDsl::cond_empty((**f).clone(), gc),
                    });
                }
            }
            StepDsl::IteLonger(w, f, g) => {
                out.push((**f).clone());
                out.push((**g).clone());
                if !w.is_empty() {
                    out.push(StepDsl::ite_longer(
                        word::drop_last(w),
                        (**f).clone(),
                        (**g).clone(),
                    ));
                }
            }
            _ => out.push(StepDsl::Id),
        }
        out
    }
}

impl fmt::Display for StepDsl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepDsl::Id => write!(f, "id"),
            StepDsl::Const(w) => write!(f, "(const '{}')", w),
            StepDsl::App0 => write!(f, "app0"),
            StepDsl::App1 => write!(f, "app1"),
            StepDsl::Dropl => write!(f, "dropl"),
            StepDsl::Selfcat => write!(f, "selfcat"),
            StepDsl::TruncTo(w) => write!(f, "(trunc_to '{}')", w),
            StepDsl::LminWith(w) => write!(f, "(lmin_with '{}')", w),
            StepDsl::Compose(a, b) => write!(f, "(compose {} {})", a, b),
            StepDsl::CondEmpty(a, b) => write!(f, "(cond_empty {} {})", a, b),
            StepDsl::IteLonger(w, a, b) => write!(f, "(ite_longer '{}' {} {})", w, a, b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad step DSL: {0}")]
pub struct DslParseError(pub String);

#[derive(Debug, Clone, PartialEq)]
enum SexpTok {
    Open,
    Close,
    Ident(String),
    Lit(Word),
}

fn lex_sexp(text: &str) -> Result<Vec<SexpTok>, DslParseError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' => {
                chars.next();
                toks.push(SexpTok::Open);
            }
            ')' => {
                chars.next();
                toks.push(SexpTok::Close);
            }
            '\'' => {
                chars.next();
                let mut lit = Word::empty();
                loop {
                    match chars.next() {
                        Some('\'') => break,
                        Some('0') => lit.push(0),
                        Some('1') => lit.push(1),
                        Some(c) => return Err(DslParseError(format!("invalid literal char {:?}", c))),
                        None => return Err(DslParseError("unterminated literal".into())),
                    }
                }
                toks.push(SexpTok::Lit(lit));
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            c if c.is_ascii_alphanumeric() || c == '_' => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(SexpTok::Ident(name));
            }
            c => return Err(DslParseError(format!("unexpected character {:?}", c))),
        }
    }
    Ok(toks)
}

fn parse_node(toks: &[SexpTok], pos: &mut usize) -> Result<StepDsl, DslParseError> {
    let tok = toks
        .get(*pos)
        .ok_or_else(|| DslParseError("unexpected end of input".into()))?;
    *pos += 1;
    match tok {
        SexpTok::Ident(name) => leaf(name),
        SexpTok::Open => {
            let head = match toks.get(*pos) {
                Some(SexpTok::Ident(name)) => name.clone(),
                _ => return Err(DslParseError("expected a combinator name after '('".into())),
            };
            *pos += 1;
            let node = match head.as_str() {
                "const" | "trunc_to" | "lmin_with" => {
                    let w = expect_lit(toks, pos)?;
                    match head.as_str() {
                        "const" => StepDsl::Const(w),
                        "trunc_to" => StepDsl::TruncTo(w),
                        _ => StepDsl::LminWith(w),
                    }
                }
                "compose" | "cond_empty" => {
                    let f = parse_node(toks, pos)?;
                    let g = parse_node(toks, pos)?;
                    if head == "compose" {
                        StepDsl::compose(f, g)
                    } else {
                        StepDsl::cond_empty(f, g)
                    }
                }
                "ite_longer" => {
                    let w = expect_lit(toks, pos)?;
                    let f = parse_node(toks, pos)?;
                    let g = parse_node(toks, pos)?;
                    StepDsl::ite_longer(w, f, g)
                }
                other => return Err(DslParseError(format!("unknown combinator {:?}", other))),
            };
            match toks.get(*pos) {
                Some(SexpTok::Close) => {
                    *pos += 1;
                    Ok(node)
                }
                _ => Err(DslParseError("expected ')'".into())),
            }
        }
        other => Err(DslParseError(format!("unexpected token {:?}", other))),
    }
}

fn leaf(name: &str) -> Result<StepDsl, DslParseError> {
    match name {
        "id" => Ok(StepDsl::Id),
        "app0" => Ok(StepDsl::App0),
        "app1" => Ok(StepDsl::App1),
        "dropl" => Ok(StepDsl::Dropl),
        "selfcat" => Ok(StepDsl::Selfcat),
        other => Err(DslParseError(format!("unknown combinator {:?}", other))),
    }
}

fn expect_lit(toks: &[SexpTok], pos: &mut usize) -> Result<Word, DslParseError> {
    match toks.get(*pos) {
        Some(SexpTok::Lit(w)) => {
            *pos += 1;
            Ok(w.clone())
        }
        _ => Err(DslParseError("expected a word literal".into())),
    }
}

impl FromStr for StepDsl {
    type Err = DslParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks = lex_sexp(s)?;
        let mut pos = 0;
        let node = parse_node(&toks, &mut pos)?;
        if pos != toks.len() {
            return Err(DslParseError("trailing input".into()));
        }
        Ok(node)
    }
}
