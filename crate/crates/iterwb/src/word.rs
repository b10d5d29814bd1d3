//! Binary words and the type-1 poly-time base functions.
//!
//! A [`Word`] is a finite string over {0,1}; the empty word is written `ε`
//! in documentation and `''` in the concrete syntax.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One symbol of the alphabet.
pub type Sym = u8;

/// A finite binary string. Symbols are stored as the bytes 0 and 1.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Sym>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_bits(bits: Vec<Sym>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Word(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[Sym] {
        &self.0
    }

    pub fn push(&mut self, d: Sym) {
        debug_assert!(d <= 1);
        self.0.push(d);
    }

    pub fn last(&self) -> Option<Sym> {
        self.0.last().copied()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            write!(f, "{}", b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "'{}'", self)
    }
}

/// Error for word literals containing symbols outside {0,1}.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid symbol {0:?} in word literal")]
pub struct BadSymbol(pub char);

impl FromStr for Word {
    type Err = BadSymbol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                other => return Err(BadSymbol(other)),
            }
        }
        Ok(Word(bits))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Convenience constructor used all over the tests: `w("0110")`.
pub fn w(s: &str) -> Word {
    s.parse().expect("word literal")
}

/// `c^{≤|b|}`: the first `min(|b|,|c|)` symbols of `c`.
pub fn truncate(c: &Word, b: &Word) -> Word {
    let n = b.len().min(c.len());
    Word(c.0[..n].to_vec())
}

/// The first `min(n, |c|)` symbols of `c`.
pub fn truncate_len(c: &Word, n: usize) -> Word {
    Word(c.0[..n.min(c.0.len())].to_vec())
}

/// `c ≫ 1`: `c` with its final symbol removed; ε maps to ε.
pub fn drop_last(c: &Word) -> Word {
    let n = c.len().saturating_sub(1);
    Word(c.0[..n].to_vec())
}

/// Length minimum: `c` if `|c| < |b|`, otherwise `b` (ties take `b`).
pub fn lmin(c: &Word, b: &Word) -> Word {
    if c.len() < b.len() {
        c.clone()
    } else {
        b.clone()
    }
}

/// Conditional: `x` when `s` is nonempty, else `y`.
pub fn cond(s: &Word, x: &Word, y: &Word) -> Word {
    if !s.is_empty() {
        x.clone()
    } else {
        y.clone()
    }
}

/// `w` extended by one digit.
pub fn append_sym(word: &Word, d: Sym) -> Word {
    debug_assert!(d <= 1);
    let mut out = word.clone();
    out.push(d);
    out
}

/// The word `d^n`.
pub fn repeat(d: Sym, n: usize) -> Word {
    debug_assert!(d <= 1);
    Word(vec![d; n])
}

/// Word equality as a base function: "1" when the words are equal, ε otherwise.
pub fn word_eq(x: &Word, y: &Word) -> Word {
    if x == y {
        Word(vec![1])
    } else {
        Word::empty()
    }
}

/// Monotone tupling. Each component's symbols are doubled (0↦00, 1↦11) and
/// components are joined by the separator "01", so the encoding has length
/// `2·Σ|aᵢ| + 2(n−1)` and is strictly length-monotone in every component.
///
/// Requires arity ≥ 2.
pub fn tuple_n(components: &[Word]) -> Word {
    assert!(components.len() >= 2, "tuple arity must be at least 2");
    let mut out = Vec::new();
    for (idx, comp) in components.iter().enumerate() {
        if idx > 0 {
            out.push(0);
            out.push(1);
        }
        for &b in &comp.0 {
            out.push(b);
            out.push(b);
        }
    }
    Word(out)
}

/// Inverse of [`tuple_n`]: the `i`-th component (1-based) of an `n`-tuple.
/// Totalized: any word that is not a valid `n`-tuple encoding yields ε.
pub fn project_n_i(word: &Word, n: usize, i: usize) -> Word {
    assert!(n >= 2 && i >= 1 && i <= n, "projection index out of range");
    match decode_tuple(word, n) {
        Some(mut comps) => comps.swap_remove(i - 1),
        None => Word::empty(),
    }
}

fn decode_tuple(word: &Word, n: usize) -> Option<Vec<Word>> {
    if word.len() % 2 != 0 {
        return None;
    }
    let mut comps = vec![Word::empty()];
    for pair in word.0.chunks(2) {
        match (pair[0], pair[1]) {
            (0, 0) => comps.last_mut().unwrap().push(0),
            (1, 1) => comps.last_mut().unwrap().push(1),
            (0, 1) => comps.push(Word::empty()),
            _ => return None,
        }
    }
    if comps.len() == n {
        Some(comps)
    } else {
        None
    }
}
