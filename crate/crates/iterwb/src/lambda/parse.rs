//! Parser for the concrete term and type syntax.
//!
//! ```text
//! type    := "W" | type "->" type (right assoc) | "(" type ")"
//! term    := ident | literal | "\" ident ":" type "." term
//!          | term term (left assoc) | "(" term ")"
//! literal := "'" [01]* "'"
//! ```
//!
//! `--` starts a comment running to the end of the line.

use std::collections::HashSet;

use crate::lambda::ast::{Const, Term, Ty};
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Lit(Word),
    Backslash,
    Colon,
    Dot,
    Arrow,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        msg: msg.into(),
    })
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars.next().unwrap();
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut toks = Vec::new();
    let mut lx = Lexer::new(text);
    while let Some(ch) = lx.peek() {
        let (tline, tcol) = (lx.line, lx.col);
        let mut push = |tok: Tok| {
            toks.push(Spanned {
                tok,
                line: tline,
                col: tcol,
            })
        };
        match ch {
            ' ' | '\t' | '\r' | '\n' => {
                lx.bump();
            }
            '-' => {
                lx.bump();
                match lx.peek() {
                    Some('-') => {
                        while let Some(c) = lx.peek() {
                            lx.bump();
                            if c == '\n' {
                                break;
                            }
                        }
                    }
                    Some('>') => {
                        lx.bump();
                        push(Tok::Arrow);
                    }
                    _ => return err(tline, tcol, "expected '->' or '--'"),
                }
            }
            '\\' => {
                lx.bump();
                push(Tok::Backslash);
            }
            ':' => {
                lx.bump();
                push(Tok::Colon);
            }
            '.' => {
                lx.bump();
                push(Tok::Dot);
            }
            '(' => {
                lx.bump();
                push(Tok::LParen);
            }
            ')' => {
                lx.bump();
                push(Tok::RParen);
            }
            '\'' => {
                lx.bump();
                let mut lit = Word::empty();
                loop {
                    match lx.peek() {
                        Some('\'') => {
                            lx.bump();
                            break;
                        }
                        Some('0') => {
                            lx.bump();
                            lit.push(0);
                        }
                        Some('1') => {
                            lx.bump();
                            lit.push(1);
                        }
                        Some(c) => {
                            return err(
                                lx.line,
                                lx.col,
                                format!("invalid symbol {:?} in word literal", c),
                            )
                        }
                        None => return err(lx.line, lx.col, "unterminated word literal"),
                    }
                }
                push(Tok::Lit(lit));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(c) = lx.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(lx.bump());
                    } else {
                        break;
                    }
                }
                push(Tok::Ident(name));
            }
            c => return err(tline, tcol, format!("unexpected character {:?}", c)),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    bound: Vec<String>,
    context: &'a HashSet<String>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos).or_else(|| self.toks.last()) {
            Some(s) => (s.line, s.col),
            None => (1, 1),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(s) if s.tok == tok => Ok(()),
            Some(s) => err(s.line, s.col, format!("expected {}", what)),
            None => err(line, col, format!("expected {}, found end of input", what)),
        }
    }

    fn ty(&mut self) -> Result<Ty, ParseError> {
        let lhs = self.ty_atom()?;
        if let Some(s) = self.peek() {
            if s.tok == Tok::Arrow {
                self.next();
                let rhs = self.ty()?;
                return Ok(Ty::arrow(lhs, rhs));
            }
        }
        Ok(lhs)
    }

    fn ty_atom(&mut self) -> Result<Ty, ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned {
                tok: Tok::Ident(name),
                line,
                col,
            }) => {
                if name == "W" {
                    Ok(Ty::Word)
                } else {
                    err(line, col, format!("unknown type {:?}", name))
                }
            }
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.ty()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(s) => err(s.line, s.col, "expected a type"),
            None => err(line, col, "expected a type, found end of input"),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        // An application chain; a lambda may appear as the final atom.
        let mut out: Option<Term> = None;
        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::Backslash) => {
                    let lam = self.lambda()?;
                    out = Some(match out {
                        None => lam,
                        Some(f) => Term::app(f, lam),
                    });
                    break;
                }
                Some(Tok::Ident(_)) | Some(Tok::Lit(_)) | Some(Tok::LParen) => {
                    let atom = self.atom()?;
                    out = Some(match out {
                        None => atom,
                        Some(f) => Term::app(f, atom),
                    });
                }
                _ => break,
            }
        }
        match out {
            Some(t) => Ok(t),
            None => {
                let (line, col) = self.here();
                err(line, col, "expected a term")
            }
        }
    }

    fn lambda(&mut self) -> Result<Term, ParseError> {
        self.expect(Tok::Backslash, "'\\'")?;
        let (line, col) = self.here();
        let name = match self.next() {
            Some(Spanned {
                tok: Tok::Ident(name),
                line,
                col,
            }) => {
                if Const::from_name(&name).is_some() {
                    return err(line, col, format!("{:?} is a reserved constant name", name));
                }
                name
            }
            _ => return err(line, col, "expected a variable name after '\\'"),
        };
        self.expect(Tok::Colon, "':'")?;
        let ty = self.ty()?;
        self.expect(Tok::Dot, "'.'")?;
        self.bound.push(name.clone());
        let body = self.term()?;
        self.bound.pop();
        Ok(Term::abs(&name, ty, body))
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned {
                tok: Tok::Ident(name),
                line,
                col,
            }) => {
                if let Some(c) = Const::from_name(&name) {
                    Ok(Term::Const(c))
                } else if self.bound.iter().any(|b| *b == name) || self.context.contains(&name) {
                    Ok(Term::var(&name))
                } else {
                    err(
                        line,
                        col,
                        format!("unbound variable {:?} (not a constant and no binder in scope)", name),
                    )
                }
            }
            Some(Spanned {
                tok: Tok::Lit(word),
                ..
            }) => Ok(Term::Lit(word)),
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                let inner = self.term()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Some(s) => err(s.line, s.col, "expected a term"),
            None => err(line, col, "expected a term, found end of input"),
        }
    }
}

/// Parses a closed term (free names must come from `context`).
pub fn parse_term_with_context(text: &str, context: &HashSet<String>) -> Result<Term, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        bound: Vec::new(),
        context,
    };
    let t = p.term()?;
    if let Some(s) = p.peek() {
        return err(s.line, s.col, "trailing input after term");
    }
    Ok(t)
}

/// Parses a term with no free variables allowed.
pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_term_with_context(text, &HashSet::new())
}

/// Parses a type on its own.
pub fn parse_type(text: &str) -> Result<Ty, ParseError> {
    let toks = lex(text)?;
    let empty = HashSet::new();
    let mut p = Parser {
        toks,
        pos: 0,
        bound: Vec::new(),
        context: &empty,
    };
    let t = p.ty()?;
    if let Some(s) = p.peek() {
        return err(s.line, s.col, "trailing input after type");
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn parses_worked_examples() {
        let t = parse_term("\\t:W. lmin t '01'").unwrap();
        assert_eq!(
            t,
            Term::abs(
                "t",
                Ty::Word,
                Term::apps(
                    Term::Const(Const::Lmin),
                    vec![Term::var("t"), Term::Lit(w("01"))]
                )
            )
        );

        assert_eq!(parse_term("''").unwrap(), Term::Lit(Word::empty()));

        let twofold = parse_term("\\f:W->W. \\a:W. f (f a)").unwrap();
        assert_eq!(
            twofold,
            Term::abs(
                "f",
                Ty::arrow(Ty::Word, Ty::Word),
                Term::abs(
                    "a",
                    Ty::Word,
                    Term::app(Term::var("f"), Term::app(Term::var("f"), Term::var("a")))
                )
            )
        );
    }

    #[test]
    fn reports_unbound_variables() {
        let e = parse_term("\\t:W. lmin t x").unwrap_err();
        assert!(e.msg.contains("unbound variable"));
        assert_eq!(e.line, 1);
    }

    #[test]
    fn context_allows_free_names() {
        let mut ctx = HashSet::new();
        ctx.insert("x".to_string());
        assert!(parse_term_with_context("dropl x", &ctx).is_ok());
    }

    #[test]
    fn comments_and_arrow_types() {
        let t = parse_term("-- comment\n\\f:(W->W)->W. f dropl").unwrap();
        match t {
            Term::Abs(_, ty, _) => assert_eq!(ty, Ty::arrow(Ty::arrow(Ty::Word, Ty::Word), Ty::Word)),
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn rejects_bad_literals_and_reserved_binders() {
        assert!(parse_term("'012'").is_err());
        assert!(parse_term("\\lmin:W. lmin").is_err());
        assert!(parse_term("frob").is_err());
    }

    #[test]
    fn iterk_constants_parse() {
        assert_eq!(parse_term("iterk2").unwrap(), Term::Const(Const::IterK(2)));
        assert_eq!(parse_term("jterk0").unwrap(), Term::Const(Const::JterK(0)));
    }
}
