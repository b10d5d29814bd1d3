//! Reference semantics for the six recursion/iteration primitives, plain
//! iteration, revision-instrumented traces, the unwind count, and the
//! tail-recursive fast schemes.

use serde::{Deserialize, Serialize};

use crate::error::RunError;
use crate::word::{drop_last, lmin, Word};

/// A total step function `Word -> Word`. The error channel only carries
/// resource-guard breaches (and evaluation faults when the step comes from
/// a λ-term).
pub trait StepFn {
    fn call(&self, t: &Word) -> Result<Word, RunError>;
}

impl<F> StepFn for F
where
    F: Fn(&Word) -> Result<Word, RunError>,
{
    fn call(&self, t: &Word) -> Result<Word, RunError> {
        self(t)
    }
}

/// A total two-argument step function, applied as `phi(d, t)` where `d` is
/// the current prefix of the recursion parameter and `t` the previous value.
pub trait StepFn2 {
    fn call(&self, d: &Word, t: &Word) -> Result<Word, RunError>;
}

impl<F> StepFn2 for F
where
    F: Fn(&Word, &Word) -> Result<Word, RunError>,
{
    fn call(&self, d: &Word, t: &Word) -> Result<Word, RunError> {
        self(d, t)
    }
}

/// Which revision notion a trace records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RevisionKind {
    Length,
    Lookahead,
}

/// One oracle call of an instrumented run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCall {
    pub i: usize,
    pub query: Word,
    pub answer: Word,
    pub revision: bool,
}

/// Per-run record of an instrumented iteration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterTrace {
    pub kind: RevisionKind,
    pub budget: usize,
    pub n: usize,
    pub ell: usize,
    pub calls: Vec<TraceCall>,
}

impl IterTrace {
    /// Checks the locally decidable trace invariants against the start word:
    /// call count, revision budget, flag correctness, and the call-1
    /// lookahead exemption. Maximality needs the step function and is
    /// checked separately by re-running with a larger budget.
    pub fn check_invariants(&self, a: &Word) -> Result<(), String> {
        if self.ell != self.calls.len() {
            return Err(format!("ell={} but {} calls recorded", self.ell, self.calls.len()));
        }
        if self.ell > self.n {
            return Err(format!("ell={} exceeds n={}", self.ell, self.n));
        }
        let revisions = self.calls.iter().filter(|c| c.revision).count();
        if revisions > self.budget {
            return Err(format!("{} revisions exceed budget {}", revisions, self.budget));
        }
        match self.kind {
            RevisionKind::Length => {
                let mut baseline = a.len();
                for (idx, call) in self.calls.iter().enumerate() {
                    if call.i != idx + 1 {
                        return Err(format!("call index {} out of order", call.i));
                    }
                    let expect = call.answer.len() > baseline;
                    if call.revision != expect {
                        return Err(format!(
                            "length revision flag on call {} is {}, expected {}",
                            call.i, call.revision, expect
                        ));
                    }
                    baseline = baseline.max(call.answer.len());
                }
            }
            RevisionKind::Lookahead => {
                let mut qmax = 0usize;
                for (idx, call) in self.calls.iter().enumerate() {
                    if call.i != idx + 1 {
                        return Err(format!("call index {} out of order", call.i));
                    }
                    let expect = idx >= 1 && call.query.len() > qmax;
                    if call.revision != expect {
                        return Err(format!(
                            "lookahead revision flag on call {} is {}, expected {}",
                            call.i, call.revision, expect
                        ));
                    }
                    qmax = qmax.max(call.query.len());
                }
            }
        }
        Ok(())
    }
}

/// `φ^n(a)`: plain n-fold iteration. Growth is unchecked here; the guard
/// lives inside the step function.
pub fn iterate(phi: &dyn StepFn, n: usize, a: &Word) -> Result<Word, RunError> {
    let mut t = a.clone();
    for _ in 0..n {
        t = phi.call(&t)?;
    }
    Ok(t)
}

/// The Cook-Urquhart recursor over notation:
/// result(ε) = a, result(c·i) = lmin(φ(c·i, t), ψ(c·i)).
pub fn rec(
    phi: &dyn StepFn2,
    psi: &dyn StepFn,
    a: &Word,
    c: &Word,
) -> Result<Word, RunError> {
    let mut t = a.clone();
    for end in 1..=c.len() {
        let prefix = Word::from_bits(c.bits()[..end].to_vec());
        let step = phi.call(&prefix, &t)?;
        let bound = psi.call(&prefix)?;
        t = lmin(&step, &bound);
    }
    Ok(t)
}

/// The recursor with a constant bounding word.
pub fn rec0(phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
    rec(phi, &|_d: &Word| Ok(b.clone()), a, c)
}

/// As [`rec0`], but the initial value is clamped too: result(ε) = lmin(a,b).
pub fn rec0_prime(phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
    rec0(phi, b, &lmin(a, b), c)
}

/// Output-clamped iteration: `(λt.lmin(φ(t),b))^{|c|}(lmin(a,b))`.
pub fn iter(phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
    let mut t = lmin(a, b);
    for _ in 0..c.len() {
        t = lmin(&phi.call(&t)?, b);
    }
    Ok(t)
}

/// Argument-clamped iteration: `(λt.φ(lmin(t,b)))^{|c|}(a)`. The final
/// answer is not clamped and may exceed `|b|`.
pub fn jter(phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
    let mut t = a.clone();
    for _ in 0..c.len() {
        t = phi.call(&lmin(&t, b))?;
    }
    Ok(t)
}

/// Instrumented [`iter`]: same word result, plus a trace. The budget field
/// of the trace records the number of length revisions observed (the
/// primitive itself has no budget) and ℓ is always `|c|`.
pub fn iter_traced(
    phi: &dyn StepFn,
    b: &Word,
    a: &Word,
    c: &Word,
) -> Result<(Word, IterTrace), RunError> {
    let start = lmin(a, b);
    let mut t = start.clone();
    let mut baseline = start.len();
    let mut calls = Vec::new();
    for i in 1..=c.len() {
        let answer = phi.call(&t)?;
        let revision = answer.len() > baseline;
        baseline = baseline.max(answer.len());
        calls.push(TraceCall {
            i,
            query: t.clone(),
            answer: answer.clone(),
            revision,
        });
        t = lmin(&answer, b);
    }
    let budget = calls.iter().filter(|c| c.revision).count();
    let trace = IterTrace {
        kind: RevisionKind::Length,
        budget,
        n: c.len(),
        ell: c.len(),
        calls,
    };
    Ok((t, trace))
}

/// Instrumented [`jter`]; see [`iter_traced`] for the trace conventions.
pub fn jter_traced(
    phi: &dyn StepFn,
    b: &Word,
    a: &Word,
    c: &Word,
) -> Result<(Word, IterTrace), RunError> {
    let mut t = a.clone();
    let mut qmax = 0usize;
    let mut calls = Vec::new();
    for i in 1..=c.len() {
        let query = lmin(&t, b);
        let revision = i >= 2 && query.len() > qmax;
        qmax = qmax.max(query.len());
        let answer = phi.call(&query)?;
        calls.push(TraceCall {
            i,
            query,
            answer: answer.clone(),
            revision,
        });
        t = answer;
    }
    let budget = calls.iter().filter(|c| c.revision).count();
    let trace = IterTrace {
        kind: RevisionKind::Lookahead,
        budget,
        n: c.len(),
        ell: c.len(),
        calls,
    };
    Ok((t, trace))
}

/// `φ^{|c|}_{!k}(a)`: at most `k` length revisions. A call whose answer
/// would be revision k+1 is un-done: the answer is discarded and ℓ
/// excludes the call.
pub fn iter_k(
    k: usize,
    phi: &dyn StepFn,
    a: &Word,
    c: &Word,
) -> Result<(Word, IterTrace), RunError> {
    let n = c.len();
    let mut t = a.clone();
    let mut baseline = a.len();
    let mut revisions = 0usize;
    let mut calls = Vec::new();
    for i in 1..=n {
        let answer = phi.call(&t)?;
        let revision = answer.len() > baseline;
        if revision {
            if revisions == k {
                break;
            }
            revisions += 1;
            baseline = answer.len();
        }
        calls.push(TraceCall {
            i,
            query: t.clone(),
            answer: answer.clone(),
            revision,
        });
        t = answer;
    }
    let ell = calls.len();
    let trace = IterTrace {
        kind: RevisionKind::Length,
        budget: k,
        n,
        ell,
        calls,
    };
    Ok((t, trace))
}

/// `φ^{|c|}_{?k}(a)`: at most `k` lookahead revisions; the initial call is
/// exempt. A call whose query would be revision k+1 is never issued.
pub fn jter_k(
    k: usize,
    phi: &dyn StepFn,
    a: &Word,
    c: &Word,
) -> Result<(Word, IterTrace), RunError> {
    let n = c.len();
    let mut t = a.clone();
    let mut qmax = 0usize;
    let mut revisions = 0usize;
    let mut calls = Vec::new();
    for i in 1..=n {
        let query = t.clone();
        let revision = i >= 2 && query.len() > qmax;
        if revision {
            if revisions == k {
                break;
            }
            revisions += 1;
        }
        qmax = qmax.max(query.len());
        let answer = phi.call(&query)?;
        calls.push(TraceCall {
            i,
            query,
            answer: answer.clone(),
            revision,
        });
        t = answer;
    }
    let ell = calls.len();
    let trace = IterTrace {
        kind: RevisionKind::Lookahead,
        budget: k,
        n,
        ell,
        calls,
    };
    Ok((t, trace))
}

/// The stabilization point of the unwind decomposition:
/// `min { i | ∀j, i ≤ j ≤ n ⇒ φ^i_{!k}(a) = φ^j_{!k}(a) }`.
pub fn unwind_ell(
    k: usize,
    n: usize,
    phi: &dyn StepFn,
    a: &Word,
) -> Result<usize, RunError> {
    let mut vals = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let c = crate::word::repeat(0, i);
        vals.push(iter_k(k, phi, a, &c)?.0);
    }
    let mut ell = n;
    while ell > 0 && vals[ell - 1] == vals[n] {
        ell -= 1;
    }
    Ok(ell)
}

/// Which reading of the tail-recursive clauses to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastMode {
    /// The clauses verbatim: a sub-iteration restarts with start value
    /// φ(a), which resets the revision baseline to |φ(a)|.
    Literal,
    /// An explicit running baseline `max(|a|, all answers so far)` is
    /// threaded through; extensionally equal to [`iter_k`].
    Threaded,
}

/// Tail-recursive computation of `φ^n_{!k}(a)`.
pub fn iter_k_fast(
    k: usize,
    phi: &dyn StepFn,
    a: &Word,
    n: usize,
    mode: FastMode,
) -> Result<Word, RunError> {
    match mode {
        FastMode::Threaded => {
            let mut t = a.clone();
            let mut baseline = a.len();
            let mut left = k;
            for _ in 0..n {
                let fa = phi.call(&t)?;
                if fa.len() > baseline {
                    if left == 0 {
                        return Ok(t);
                    }
                    left -= 1;
                    baseline = fa.len();
                }
                t = fa;
            }
            Ok(t)
        }
        FastMode::Literal => {
            let mut t = a.clone();
            let mut left = k;
            let mut remaining = n;
            while remaining > 0 {
                let fa = phi.call(&t)?;
                if fa.len() > t.len() {
                    if left == 0 {
                        return Ok(t);
                    }
                    left -= 1;
                }
                t = fa;
                remaining -= 1;
            }
            Ok(t)
        }
    }
}

/// Convenience: c is only read through its length, so checks often use 0^n.
pub fn length_word(n: usize) -> Word {
    crate::word::repeat(0, n)
}

/// Re-exported shorthand for `c ≫ 1` used by the §4 bridges.
pub fn shift(c: &Word) -> Word {
    drop_last(c)
}
