//! Composite functionals realizing each equivalence: every builder wires
//! word base functions around one supplied primitive and must coincide
//! extensionally with the corresponding reference semantics.

use crate::error::RunError;
use crate::iterators::{StepFn, StepFn2};
use crate::word::{append_sym, drop_last, lmin, repeat, truncate, tuple_n, project_n_i, word_eq, Word};

/// Something with the calling shape of the recursor `Rec(φ, ψ, a, c)`.
pub trait RecPrim {
    fn run(
        &self,
        phi: &dyn StepFn2,
        psi: &dyn StepFn,
        a: &Word,
        c: &Word,
    ) -> Result<Word, RunError>;
}

/// Shape of `Rec₀(φ, b, a, c)` (also used for `Rec₀′`, same signature).
pub trait Rec0Prim {
    fn run(&self, phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError>;
}

/// Shape of `Iter(φ, b, a, c)`.
pub trait IterPrim {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError>;
}

/// Shape of `Jter(φ, b, a, c)`.
pub trait JterPrim {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError>;
}

/// Shape of `Iter_k(φ, a, c)` for a fixed budget (also used for `Jter_k`).
pub trait BudgetPrim {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError>;
}

// --- reference wrappers -------------------------------------------------

pub struct RecRef;
impl RecPrim for RecRef {
    fn run(&self, phi: &dyn StepFn2, psi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        crate::iterators::rec(phi, psi, a, c)
    }
}

pub struct Rec0Ref;
impl Rec0Prim for Rec0Ref {
    fn run(&self, phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        crate::iterators::rec0(phi, b, a, c)
    }
}

pub struct Rec0PrimeRef;
impl Rec0Prim for Rec0PrimeRef {
    fn run(&self, phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        crate::iterators::rec0_prime(phi, b, a, c)
    }
}

pub struct IterRef;
impl IterPrim for IterRef {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        crate::iterators::iter(phi, b, a, c)
    }
}

pub struct JterRef;
impl JterPrim for JterRef {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        crate::iterators::jter(phi, b, a, c)
    }
}

pub struct IterKRef(pub usize);
impl BudgetPrim for IterKRef {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        Ok(crate::iterators::iter_k(self.0, phi, a, c)?.0)
    }
}

pub struct JterKRef(pub usize);
impl BudgetPrim for JterKRef {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        Ok(crate::iterators::jter_k(self.0, phi, a, c)?.0)
    }
}

// --- Lemma 1: Rec from Rec0 via max/argmax ------------------------------

/// max/argmax over initial segments, driven by a Rec0-shaped primitive.
pub struct MaxArgmax<'p> {
    pub rec0: &'p dyn Rec0Prim,
}

impl MaxArgmax<'_> {
    /// The shortest initial segment of `c` on which `psi` attains its
    /// length maximum. The step gadget switches to the new segment exactly
    /// when its value is strictly longer, i.e. when
    /// `lmin(ψ(t), ψ(d)) = ψ(t)` and the two values differ.
    pub fn argmax(&self, psi: &dyn StepFn, c: &Word) -> Result<Word, RunError> {
        let gadget = |d: &Word, t: &Word| -> Result<Word, RunError> {
            let vt = psi.call(t)?;
            let vd = psi.call(d)?;
            if lmin(&vt, &vd) == vt && vt != vd {
                Ok(d.clone())
            } else {
                Ok(t.clone())
            }
        };
        self.rec0.run(&gadget, c, &Word::empty(), c)
    }

    /// `max(ψ, c) = ψ(argmax(ψ, c))`.
    pub fn max(&self, psi: &dyn StepFn, c: &Word) -> Result<Word, RunError> {
        psi.call(&self.argmax(psi, c)?)
    }
}

/// `Rec(φ,ψ,a,c) = Rec₀(λd.λt.lmin(φ(d,t),ψ(d)), 0·max(ψ,c), a, c)`:
/// the constant bound is the maximum of ψ over initial segments of c with
/// one digit added, so it never binds.
pub struct RecFromRec0<'p> {
    pub rec0: &'p dyn Rec0Prim,
}

impl RecPrim for RecFromRec0<'_> {
    fn run(&self, phi: &dyn StepFn2, psi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        let max = MaxArgmax { rec0: self.rec0 }.max(psi, c)?;
        let mut bound = Word::from_bits(vec![0]);
        for &bit in max.bits() {
            bound.push(bit);
        }
        let step = |d: &Word, t: &Word| -> Result<Word, RunError> {
            Ok(lmin(&phi.call(d, t)?, &psi.call(d)?))
        };
        self.rec0.run(&step, &bound, a, c)
    }
}

// --- Lemma 4: Iter from Rec, Rec0 from Iter -----------------------------

/// `Iter(φ,b,a,c) = Rec(λd.λt.φ(t), λd.b, lmin(a,b), c)`.
pub struct IterFromRec<'p> {
    pub rec: &'p dyn RecPrim,
}

impl IterPrim for IterFromRec<'_> {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        let step = |_d: &Word, t: &Word| phi.call(t);
        let bound = |_d: &Word| Ok(b.clone());
        self.rec.run(&step, &bound, &lmin(a, b), c)
    }
}

/// `Rec₀′` through the bounded iterator: the step Φ carries a unary step
/// counter next to the running value so the recursion parameter prefix can
/// be reconstructed, and the pair bound `⟨0^{|c|}, b⟩` never binds before
/// the counter is exhausted.
pub struct Rec0pFromIter<'p> {
    pub iter: &'p dyn IterPrim,
}

impl Rec0pFromIter<'_> {
    /// The raw pair after running over `c_prefix` (exposed so tests can
    /// check the counter component).
    pub fn run_pair(
        &self,
        phi: &dyn StepFn2,
        b: &Word,
        a: &Word,
        c: &Word,
        c_prefix: &Word,
    ) -> Result<Word, RunError> {
        let step = |t: &Word| -> Result<Word, RunError> {
            let counter = project_n_i(t, 2, 1);
            let value = project_n_i(t, 2, 2);
            let prefix = truncate(c, &append_sym(&counter, 0));
            let next = lmin(&phi.call(&prefix, &value)?, b);
            Ok(tuple_n(&[append_sym(&counter, 0), next]))
        };
        // the counter component of the bound is one digit wider than any
        // reachable counter, so the pair clamp (whose tie goes to the
        // bound) can never corrupt a state; the start value is pre-clamped
        // exactly as the primitive itself would clamp it
        let bound = tuple_n(&[repeat(0, c.len() + 1), b.clone()]);
        let start = tuple_n(&[Word::empty(), lmin(a, b)]);
        self.iter.run(&step, &bound, &start, c_prefix)
    }
}

impl Rec0Prim for Rec0pFromIter<'_> {
    fn run(&self, phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        let pair = self.run_pair(phi, b, a, c, c)?;
        Ok(project_n_i(&pair, 2, 2))
    }
}

/// `Rec₀` from `Rec₀′`: the initial value must escape the start clamp, so
/// the running value is tagged with a trailing 1 and the untagged start ε
/// marks "still at the initial value". The bound is widened by two digits
/// so the clamp inside `Rec₀′` never touches tagged values.
pub struct Rec0FromRec0p<'p> {
    pub rec0p: &'p dyn Rec0Prim,
}

impl Rec0Prim for Rec0FromRec0p<'_> {
    fn run(&self, phi: &dyn StepFn2, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        if c.is_empty() {
            return Ok(a.clone());
        }
        let step = |d: &Word, t: &Word| -> Result<Word, RunError> {
            let prev = if t.is_empty() { a.clone() } else { drop_last(t) };
            Ok(append_sym(&lmin(&phi.call(d, &prev)?, b), 1))
        };
        let wide = append_sym(&append_sym(b, 0), 0);
        let tagged = self.rec0p.run(&step, &wide, &Word::empty(), c)?;
        Ok(drop_last(&tagged))
    }
}

// --- Lemma 2: the Iter/Jter bridge --------------------------------------

/// Identity (*): `Iter(φ,b,a,c) = lmin(Jter(φ,b,a,c), b)`.
pub struct IterFromJter<'p> {
    pub jter: &'p dyn JterPrim,
}

impl IterPrim for IterFromJter<'_> {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        Ok(lmin(&self.jter.run(phi, b, a, c)?, b))
    }
}

/// Identity (**), c ≠ ε clause: `Jter(φ,b,a,c) = φ(Iter(φ,b,a,c≫1))`.
/// For c = ε the definition gives `a` directly.
pub struct JterFromIter<'p> {
    pub iter: &'p dyn IterPrim,
}

impl JterPrim for JterFromIter<'_> {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        if c.is_empty() {
            return Ok(a.clone());
        }
        phi.call(&self.iter.run(phi, b, a, &drop_last(c))?)
    }
}

// --- Lemma 7: Iter_0 from Iter ------------------------------------------

/// Budget-0 iteration through the bounded iterator. The running value is
/// tagged with a stop bit (trailing 1 = halted); the bound handed to the
/// iterator is `a·00`, two digits longer than any tagged state, so the
/// iterator's own clamp never engages and the growth test `|φ(t)| ≤ |a|`
/// inside the step gadget is the only bounding.
pub struct Iter0FromIter<'p> {
    pub iter: &'p dyn IterPrim,
}

impl BudgetPrim for Iter0FromIter<'_> {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        let gadget = |s: &Word| -> Result<Word, RunError> {
            if s.last() == Some(1) {
                return Ok(s.clone());
            }
            let t = drop_last(s);
            let ft = phi.call(&t)?;
            if ft.len() <= a.len() {
                Ok(append_sym(&ft, 0))
            } else {
                Ok(append_sym(&t, 1))
            }
        };
        let bound = append_sym(&append_sym(a, 0), 0);
        let start = append_sym(a, 0);
        let out = self.iter.run(&gadget, &bound, &start, c)?;
        Ok(drop_last(&out))
    }
}

// --- Lemma 8: Iter_k from Iter, by recursion on the budget --------------

/// Caches a budget-primitive run by `|c|` for one fixed (φ, a): sound
/// because the length argument is read only through its length, and
/// extensionally invisible. Used inside [`IterKFromIter`], whose μ-search
/// probes the same budget-(k−1) values repeatedly.
struct MemoByLen<'p> {
    inner: &'p dyn BudgetPrim,
    cache: std::cell::RefCell<std::collections::HashMap<usize, Word>>,
}

impl<'p> MemoByLen<'p> {
    fn new(inner: &'p dyn BudgetPrim) -> Self {
        MemoByLen {
            inner,
            cache: std::cell::RefCell::new(std::collections::HashMap::new()),
        }
    }
}

impl BudgetPrim for MemoByLen<'_> {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        if let Some(v) = self.cache.borrow().get(&c.len()) {
            return Ok(v.clone());
        }
        let v = self.inner.run(phi, a, c)?;
        self.cache.borrow_mut().insert(c.len(), v.clone());
        Ok(v)
    }
}

/// Budget-k iteration through the bounded iterator. Built by recursion on
/// k: the stabilization point ℓ is found by a μ-search (a counter machine
/// driven by the iterator) whose stationarity predicate runs the budget-
/// (k−1) composite, and the run is finished by one φ step followed by the
/// budget-0 composite.
pub struct IterKFromIter<'p> {
    pub iter: &'p dyn IterPrim,
    pub k: usize,
}

impl IterKFromIter<'_> {
    /// The stabilization counter `0^ℓ`, probing i = 0..=|c| with unary
    /// queries; the no-hit run ends in the sentinel state `0^{|c|+1}·1`.
    fn search_ell(&self, prev: &dyn BudgetPrim, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        // stationarity at i: the budget-(k-1) values for i and i+1 steps agree
        let pred = |counter: &Word| -> Result<Word, RunError> {
            let here = prev.run(phi, a, counter)?;
            let next = prev.run(phi, a, &append_sym(counter, 0))?;
            Ok(word_eq(&here, &next))
        };
        // states: 0^i·1 still searching, 0^i·0 found at i
        let machine = |s: &Word| -> Result<Word, RunError> {
            if s.last() == Some(0) {
                return Ok(s.clone());
            }
            let counter = drop_last(s);
            if !pred(&counter)?.is_empty() {
                Ok(append_sym(&counter, 0))
            } else {
                Ok(append_sym(&append_sym(&counter, 0), 1))
            }
        };
        let probes = append_sym(c, 0);
        let bound = append_sym(&append_sym(&probes, 0), 0);
        let start = Word::from_bits(vec![1]);
        let fin = self.iter.run(&machine, &bound, &start, &probes)?;
        // dropping the flag leaves 0^ℓ when found and 0^{|c|+1} when not;
        // both exceed any useful ℓ < |c| exactly when no early
        // stabilization exists
        Ok(drop_last(&fin))
    }
}

impl BudgetPrim for IterKFromIter<'_> {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        let base = Iter0FromIter { iter: self.iter };
        if self.k == 0 {
            return base.run(phi, a, c);
        }
        let prev_raw = IterKFromIter {
            iter: self.iter,
            k: self.k - 1,
        };
        // φ and a are fixed for the rest of this invocation, so the
        // by-length cache is sound
        let prev = MemoByLen::new(&prev_raw);
        let ell = self.search_ell(&prev, phi, a, c)?;
        if ell.len() < c.len() {
            // one more φ step spends the (k)-th revision (or hits a fixed
            // point), then no further revision is allowed
            let stalled = prev.run(phi, a, &ell)?;
            let after = phi.call(&stalled)?;
            // a word of length |c| - ℓ - 1 via repeated dropl
            let drops = append_sym(&ell, 0);
            let cap_word = append_sym(c, 0);
            let dropl_step = |t: &Word| -> Result<Word, RunError> { Ok(drop_last(t)) };
            let rest = self.iter.run(&dropl_step, &cap_word, c, &drops)?;
            base.run(phi, &after, &rest)
        } else {
            prev.run(phi, a, c)
        }
    }
}

/// The auxiliary emptiness detector: `U(ψ,a,c) = ε` iff `ψ(0^i, a)` is
/// empty for every `i ≤ |c|`, realized through the recursor with the
/// V-gadget. A naive V never probes `i = 0`, so the gadget here
/// additionally checks `ψ(ε, a)` on the first recursion step.
pub struct UViaRec<'p> {
    pub rec: &'p dyn RecPrim,
}

impl UViaRec<'_> {
    pub fn run(&self, psi: &dyn StepFn2, a: &Word, c: &Word) -> Result<Word, RunError> {
        let zero = Word::from_bits(vec![0]);
        let gadget = |d: &Word, t: &Word| -> Result<Word, RunError> {
            let hit_here = !psi.call(&repeat(0, d.len()), a)?.is_empty();
            let hit_start = d.len() == 1 && !psi.call(&Word::empty(), a)?.is_empty();
            if t.is_empty() && !hit_here && !hit_start {
                Ok(Word::empty())
            } else {
                Ok(Word::from_bits(vec![0]))
            }
        };
        let bound = |_d: &Word| Ok(Word::from_bits(vec![0]));
        if c.is_empty() {
            // the recursion performs no step on ε; probe i = 0 directly
            return Ok(if psi.call(&Word::empty(), a)?.is_empty() {
                Word::empty()
            } else {
                zero
            });
        }
        self.rec.run(&gadget, &bound, &Word::empty(), c)
    }
}

// --- §4: Jter_k from Iter_k, Jter from Jter_k ---------------------------

/// `Jter_k(φ,a,c) = φ(Iter_k(φ,a,c≫1))` for nonempty c; for c = ε the
/// definition gives `a` (the stated identity does not cover that case).
pub struct JterKFromIterK<'p> {
    pub iterk: &'p dyn BudgetPrim,
}

impl BudgetPrim for JterKFromIterK<'_> {
    fn run(&self, phi: &dyn StepFn, a: &Word, c: &Word) -> Result<Word, RunError> {
        if c.is_empty() {
            return Ok(a.clone());
        }
        phi.call(&self.iterk.run(phi, a, &drop_last(c))?)
    }
}

/// The flag-bit step function ψ of the Jter ⪯ Jter_k proof, exposed so the
/// intermediate Claim equality can be tested on its own.
pub fn jter_wrap_step<'a>(
    phi: &'a dyn StepFn,
    b: &'a Word,
    a: &'a Word,
) -> impl Fn(&Word) -> Result<Word, RunError> + 'a {
    move |t: &Word| {
        if t.last() == Some(0) {
            Ok(append_sym(&lmin(a, b), 1))
        } else {
            Ok(append_sym(&lmin(&phi.call(&drop_last(t))?, b), 1))
        }
    }
}

/// `Jter` from any `Jter_k`: every query of the wrapped step function is
/// clamped to |b|+1 symbols, so the run performs no lookahead revisions
/// and any budget k ≥ 0 suffices.
pub struct JterFromJterK<'p> {
    pub jterk: &'p dyn BudgetPrim,
}

impl JterPrim for JterFromJterK<'_> {
    fn run(&self, phi: &dyn StepFn, b: &Word, a: &Word, c: &Word) -> Result<Word, RunError> {
        if c.is_empty() {
            return Ok(a.clone());
        }
        let psi = jter_wrap_step(phi, b, a);
        // iteration count |0·(c≫1)| = |c|; c itself has the right length
        let mid = self.jterk.run(&psi, &append_sym(b, 0), c)?;
        phi.call(&drop_last(&mid))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn append1(t: &Word) -> Result<Word, RunError> {
        Ok(append_sym(t, 1))
    }

    fn rec_step_append1(_d: &Word, t: &Word) -> Result<Word, RunError> {
        Ok(append_sym(t, 1))
    }

    #[test]
    fn argmax_worked_examples() {
        let mm = MaxArgmax { rec0: &Rec0Ref };
        let ident = |t: &Word| Ok(t.clone());
        assert_eq!(mm.argmax(&ident, &w("01")).unwrap(), w("01"));
        assert_eq!(mm.max(&ident, &w("01")).unwrap(), w("01"));

        let const11 = |_t: &Word| Ok(w("11"));
        assert_eq!(mm.argmax(&const11, &w("01")).unwrap(), Word::empty());
        assert_eq!(mm.max(&const11, &w("01")).unwrap(), w("11"));

        // big only at ε
        let spike = |t: &Word| {
            Ok(if t.is_empty() { w("111") } else { Word::empty() })
        };
        assert_eq!(mm.argmax(&spike, &w("0011")).unwrap(), Word::empty());
        assert_eq!(mm.max(&spike, &w("0011")).unwrap(), w("111"));
    }

    #[test]
    fn rec_from_rec0_reproduces_rec() {
        let tr = RecFromRec0 { rec0: &Rec0Ref };
        let psi = |_d: &Word| Ok(w("1111"));
        assert_eq!(
            tr.run(&rec_step_append1, &psi, &Word::empty(), &w("00")).unwrap(),
            w("11")
        );
        assert_eq!(
            tr.run(&rec_step_append1, &psi, &w("10"), &Word::empty()).unwrap(),
            w("10")
        );
    }

    #[test]
    fn iter_from_rec_reproduces_iter() {
        let tr = IterFromRec { rec: &RecRef };
        assert_eq!(
            tr.run(&append1, &w("1111"), &Word::empty(), &w("000")).unwrap(),
            w("111")
        );
        assert_eq!(
            tr.run(&append1, &w("11"), &w("0000"), &Word::empty()).unwrap(),
            w("11")
        );
    }

    #[test]
    fn rec0p_from_iter_reproduces_rec0_prime() {
        let tr = Rec0pFromIter { iter: &IterRef };
        assert_eq!(
            tr.run(&rec_step_append1, &w("1111"), &Word::empty(), &w("00")).unwrap(),
            w("11")
        );
        assert_eq!(
            tr.run(&rec_step_append1, &w("1"), &w("00"), &Word::empty()).unwrap(),
            w("1")
        );
        // counter component is 0^{|c'|} after |c'| steps
        let pair = tr
            .run_pair(&rec_step_append1, &w("1111"), &Word::empty(), &w("001"), &w("00"))
            .unwrap();
        assert_eq!(project_n_i(&pair, 2, 1), w("00"));
    }

    #[test]
    fn rec0_from_rec0p_reproduces_rec0() {
        let inner = Rec0pFromIter { iter: &IterRef };
        let tr = Rec0FromRec0p { rec0p: &inner };
        // c = ε: initial value escapes the bound entirely
        assert_eq!(
            tr.run(&rec_step_append1, &w("1"), &w("0000"), &Word::empty()).unwrap(),
            w("0000")
        );
        assert_eq!(
            tr.run(&rec_step_append1, &w("1111"), &Word::empty(), &w("00")).unwrap(),
            w("11")
        );
    }

    #[test]
    fn lemma2_bridges() {
        let itf = IterFromJter { jter: &JterRef };
        assert_eq!(
            itf.run(&append1, &w("11"), &Word::empty(), &w("000")).unwrap(),
            w("11")
        );
        let jtf = JterFromIter { iter: &IterRef };
        assert_eq!(
            jtf.run(&append1, &w("11"), &Word::empty(), &w("000")).unwrap(),
            w("111")
        );
        assert_eq!(
            jtf.run(&append1, &w("11"), &w("0101"), &Word::empty()).unwrap(),
            w("0101")
        );
    }

    #[test]
    fn iter0_from_iter_examples() {
        let tr = Iter0FromIter { iter: &IterRef };
        assert_eq!(tr.run(&append1, &w("00"), &w("111")).unwrap(), w("00"));
        // shrinking φ never halts early
        let dropl = |t: &Word| Ok(drop_last(t));
        assert_eq!(tr.run(&dropl, &w("101"), &w("11")).unwrap(), w("1"));
        assert_eq!(
            tr.run(&dropl, &w("101"), &w("11")).unwrap(),
            crate::iterators::iter_k(0, &dropl, &w("101"), &w("11")).unwrap().0
        );
    }

    #[test]
    fn iterk_from_iter_examples() {
        let tr = IterKFromIter { iter: &IterRef, k: 1 };
        assert_eq!(tr.run(&append1, &w("0"), &w("0000")).unwrap(), w("01"));

        let mixed = crate::dsl::StepDsl::cond_empty(
            crate::dsl::StepDsl::Const(w("111")),
            crate::dsl::StepDsl::Dropl,
        );
        let step = mixed.step_default();
        for k in 0..3 {
            let tr = IterKFromIter { iter: &IterRef, k };
            for c_len in 0..6 {
                let c = repeat(0, c_len);
                let expect = crate::iterators::iter_k(k, &step, &w("10"), &c).unwrap().0;
                assert_eq!(tr.run(&step, &w("10"), &c).unwrap(), expect, "k={} n={}", k, c_len);
            }
        }
    }

    #[test]
    fn u_via_rec_matches_direct_scan() {
        let u = UViaRec { rec: &RecRef };
        // ψ empty except on a chosen unary probe length
        for hit in 0..5usize {
            let psi = move |q: &Word, _a: &Word| -> Result<Word, RunError> {
                Ok(if q.len() == hit { w("1") } else { Word::empty() })
            };
            for c_len in 0..5usize {
                let c = repeat(1, c_len);
                let expect = if hit <= c_len { w("0") } else { Word::empty() };
                assert_eq!(
                    u.run(&psi, &w("1"), &c).unwrap(),
                    expect,
                    "hit={} |c|={}",
                    hit,
                    c_len
                );
            }
        }
    }

    #[test]
    fn iter0_inner_call_count_is_at_most_len_c() {
        use std::cell::Cell;
        let calls = Cell::new(0usize);
        let phi = |t: &Word| {
            calls.set(calls.get() + 1);
            Ok(append_sym(t, 1))
        };
        let tr = Iter0FromIter { iter: &IterRef };
        tr.run(&phi, &w("0101"), &repeat(0, 9)).unwrap();
        assert!(calls.get() <= 9, "made {} calls", calls.get());
    }

    #[test]
    fn jterk_from_iterk_examples() {
        let inner = IterKRef(1);
        let tr = JterKFromIterK { iterk: &inner };
        assert_eq!(tr.run(&append1, &w("0"), &w("000")).unwrap(), w("011"));
        let inner = IterKRef(0);
        let tr = JterKFromIterK { iterk: &inner };
        assert_eq!(tr.run(&append1, &w("0"), &w("000")).unwrap(), w("01"));
    }

    #[test]
    fn jter_from_jterk_examples() {
        let inner = JterKRef(0);
        let tr = JterFromJterK { jterk: &inner };
        assert_eq!(
            tr.run(&append1, &w("11"), &Word::empty(), &w("000")).unwrap(),
            w("111")
        );
        assert_eq!(
            tr.run(&append1, &w("11"), &w("01"), &Word::empty()).unwrap(),
            w("01")
        );
    }
}
