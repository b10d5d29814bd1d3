//! Seeded differential campaigns, one per lemma identifier: run the
//! translation against the reference semantics on generated inputs, shrink
//! any mismatch, and aggregate a deterministic report.

use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use crate::dsl::StepDsl;
use crate::error::RunError;
use crate::harness::gen::{gen_step_fn, gen_step_fn_biased, gen_word, trial_rng};
use crate::harness::oracles::{scan_argmax, scan_max};
use crate::harness::report::{CheckReport, Failure, Flagged, TrialInput};
use crate::iterators::{
    self, FastMode, IterTrace, RevisionKind, StepFn,
};
use crate::translations::semantic::*;
use crate::word::{append_sym, drop_last, lmin, repeat, truncate_len, Word};


#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LemmaId {
    Lemma1RecRec0,
    Lemma2IterJter,
    Lemma4RecIter,
    Lemma5Unwind,
    Cor6Unwind,
    Lemma7Iter0,
    Lemma8IterK,
    Sec4JterKIterK,
    Sec4JterJterK,
    Sec5Fast,
    TheoremMain,
}

impl LemmaId {
    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::Lemma1RecRec0 => "lemma1-rec-rec0",
            LemmaId::Lemma2IterJter => "lemma2-iter-jter",
            LemmaId::Lemma4RecIter => "lemma4-rec-iter",
            LemmaId::Lemma5Unwind => "lemma5-unwind",
            LemmaId::Cor6Unwind => "cor6-unwind",
            LemmaId::Lemma7Iter0 => "lemma7-iter0",
            LemmaId::Lemma8IterK => "lemma8-iterk",
            LemmaId::Sec4JterKIterK => "sec4-jterk-iterk",
            LemmaId::Sec4JterJterK => "sec4-jter-jterk",
            LemmaId::Sec5Fast => "sec5-fast",
            LemmaId::TheoremMain => "theorem-main",
        }
    }

    pub fn all() -> Vec<LemmaId> {
        vec![
            LemmaId::Lemma1RecRec0,
            LemmaId::Lemma2IterJter,
            LemmaId::Lemma4RecIter,
            LemmaId::Lemma5Unwind,
            LemmaId::Cor6Unwind,
            LemmaId::Lemma7Iter0,
            LemmaId::Lemma8IterK,
            LemmaId::Sec4JterKIterK,
            LemmaId::Sec4JterJterK,
            LemmaId::Sec5Fast,
            LemmaId::TheoremMain,
        ]
    }

    /// Default word-length cap for a campaign: smaller for the composites
    /// whose cost grows with |c| and k.
    pub fn default_max_len(&self) -> usize {
        match self {
            LemmaId::Lemma8IterK => 24,
            LemmaId::TheoremMain => 32,
            _ => 48,
        }
    }
}

impl FromStr for LemmaId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::all()
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown lemma id `{}`", s))
    }
}

/// One trial's generated inputs. Two-argument step functions are derived
/// from (phi, phi_alt) by parity of the prefix length.
#[derive(Clone, Debug)]
pub struct Case {
    pub phi: StepDsl,
    pub phi_alt: StepDsl,
    pub psi: StepDsl,
    pub a: Word,
    pub b: Word,
    pub c: Word,
    pub k: usize,
}

impl Case {
    fn input_view(&self, lemma: LemmaId) -> TrialInput {
        let two_arg = matches!(lemma, LemmaId::Lemma1RecRec0 | LemmaId::Lemma4RecIter);
        let uses_psi = matches!(lemma, LemmaId::Lemma1RecRec0);
        let uses_b = matches!(
            lemma,
            LemmaId::Lemma2IterJter
                | LemmaId::Lemma4RecIter
                | LemmaId::Sec4JterJterK
                | LemmaId::TheoremMain
        );
        let uses_k = matches!(lemma, LemmaId::Lemma5Unwind | LemmaId::Cor6Unwind);
        TrialInput {
            phi: if two_arg {
                format!("(parity {} {})", self.phi, self.phi_alt)
            } else {
                self.phi.to_string()
            },
            psi: uses_psi.then(|| self.psi.to_string()),
            a: self.a.to_string(),
            b: uses_b.then(|| self.b.to_string()),
            c: self.c.to_string(),
            k: uses_k.then_some(self.k),
        }
    }
}

pub fn gen_case(lemma: LemmaId, rng: &mut impl Rng, max_len: usize, biased: bool) -> Case {
    fn step(rng: &mut impl Rng, depth: usize, biased: bool) -> StepDsl {
        if biased {
            gen_step_fn_biased(rng, depth)
        } else {
            gen_step_fn(rng, depth)
        }
    }
    let phi = step(rng, 4, biased);
    let phi_alt = step(rng, 3, biased);
    let psi = step(rng, 3, biased);
    let a = gen_word(rng, max_len);
    let b = gen_word(rng, max_len);
    let c = gen_word(rng, max_len);
    let k = match lemma {
        LemmaId::Lemma5Unwind | LemmaId::Cor6Unwind => rng.gen_range(0..=2),
        _ => 0,
    };
    Case {
        phi,
        phi_alt,
        psi,
        a,
        b,
        c,
        k,
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default)]
pub struct CaseReport {
    pub mismatches: Vec<Mismatch>,
    pub flags: Vec<(String, String)>,
}

impl CaseReport {
    fn compare(&mut self, check: &str, expected: Result<Word, RunError>, actual: Result<Word, RunError>) {
        let e = render(&expected);
        let a = render(&actual);
        if e != a {
            self.mismatches.push(Mismatch {
                check: check.to_string(),
                expected: e,
                actual: a,
            });
        }
    }

    fn trace_health(&mut self, check: &str, trace: &IterTrace, a: &Word, phi: &dyn StepFn) {
        if let Err(msg) = trace.check_invariants(a) {
            self.mismatches.push(Mismatch {
                check: format!("{}/trace-invariant", check),
                expected: "invariants hold".into(),
                actual: msg,
            });
            return;
        }
        if let Err(msg) = trace_maximal(trace, a, phi) {
            self.mismatches.push(Mismatch {
                check: format!("{}/trace-maximality", check),
                expected: "ell maximal".into(),
                actual: msg,
            });
        }
    }
}

fn render(r: &Result<Word, RunError>) -> String {
    match r {
        Ok(w) => format!("'{}'", w),
        Err(e) => format!("error: {}", e),
    }
}

/// ℓ-maximality: a run stopped short of n only because the very next call
/// would exceed the revision budget.
fn trace_maximal(trace: &IterTrace, a: &Word, phi: &dyn StepFn) -> Result<(), String> {
    if trace.ell >= trace.n {
        return Ok(());
    }
    let revisions = trace.calls.iter().filter(|c| c.revision).count();
    if revisions != trace.budget {
        return Err(format!(
            "stopped at ell={} < n={} with only {} of {} revisions spent",
            trace.ell, trace.n, revisions, trace.budget
        ));
    }
    let current = trace
        .calls
        .last()
        .map(|c| c.answer.clone())
        .unwrap_or_else(|| a.clone());
    match trace.kind {
        RevisionKind::Length => {
            let baseline = trace
                .calls
                .iter()
                .map(|c| c.answer.len())
                .chain(std::iter::once(a.len()))
                .max()
                .unwrap();
            let next = phi.call(&current).map_err(|e| e.to_string())?;
            if next.len() <= baseline {
                return Err(format!(
                    "next answer length {} does not exceed baseline {}",
                    next.len(),
                    baseline
                ));
            }
        }
        RevisionKind::Lookahead => {
            let qmax = trace.calls.iter().map(|c| c.query.len()).max().unwrap_or(0);
            if current.len() <= qmax {
                return Err(format!(
                    "next query length {} does not exceed query max {}",
                    current.len(),
                    qmax
                ));
            }
        }
    }
    Ok(())
}

/// Runs every check bundled under the lemma on one input case.
pub fn run_case(lemma: LemmaId, case: &Case) -> CaseReport {
    let mut rep = CaseReport::default();
    let phi = case.phi.step_default();
    let alt = case.phi_alt.step_default();
    let psi = case.psi.step_default();
    // the parity-dispatched two-argument step for rec/rec0 shapes
    let phi2 = |d: &Word, t: &Word| -> Result<Word, RunError> {
        if d.len() % 2 == 0 {
            phi(t)
        } else {
            alt(t)
        }
    };
    let Case { a, b, c, k, .. } = case;

    match lemma {
        LemmaId::Lemma1RecRec0 => {
            let mm = MaxArgmax { rec0: &Rec0Ref };
            rep.compare("argmax-vs-scan", scan_argmax(&psi, c), mm.argmax(&psi, c));
            rep.compare("max-vs-scan", scan_max(&psi, c), mm.max(&psi, c));
            let tr = RecFromRec0 { rec0: &Rec0Ref };
            rep.compare(
                "rec-from-rec0",
                iterators::rec(&phi2, &psi, a, c),
                tr.run(&phi2, &psi, a, c),
            );
        }
        LemmaId::Lemma2IterJter => {
            let itf = IterFromJter { jter: &JterRef };
            rep.compare("iter-from-jter", iterators::iter(&phi, b, a, c), itf.run(&phi, b, a, c));
            if c.is_empty() {
                rep.flags.push((
                    "lemma2-starstar-epsilon-excluded".into(),
                    "the (**) identity would give b at c = ε but Jter gives a; excluded".into(),
                ));
            } else {
                let jtf = JterFromIter { iter: &IterRef };
                rep.compare("jter-from-iter", iterators::jter(&phi, b, a, c), jtf.run(&phi, b, a, c));
            }
            if let Ok((_, trace)) = iterators::iter_traced(&phi, b, a, c) {
                // the run starts from the clamped word, so invariants are
                // judged against it
                rep.trace_health("iter-traced", &trace, &lmin(a, b), &phi);
            }
        }
        LemmaId::Lemma4RecIter => {
            let ifr = IterFromRec { rec: &RecRef };
            rep.compare("iter-from-rec", iterators::iter(&phi, b, a, c), ifr.run(&phi, b, a, c));
            let rpi = Rec0pFromIter { iter: &IterRef };
            rep.compare(
                "rec0p-from-iter",
                iterators::rec0_prime(&phi2, b, a, c),
                rpi.run(&phi2, b, a, c),
            );
            // intermediate invariant: the counter component is 0^{|c'|}
            let c_prefix = truncate_len(c, c.len() / 2);
            if let Ok(pair) = rpi.run_pair(&phi2, b, a, c, &c_prefix) {
                let counter = crate::word::project_n_i(&pair, 2, 1);
                if counter != repeat(0, c_prefix.len()) {
                    rep.mismatches.push(Mismatch {
                        check: "rec0p-counter-invariant".into(),
                        expected: format!("'{}'", repeat(0, c_prefix.len())),
                        actual: format!("'{}'", counter),
                    });
                }
            }
            let rfp = Rec0FromRec0p { rec0p: &Rec0PrimeRef };
            rep.compare(
                "rec0-from-rec0p",
                iterators::rec0(&phi2, b, a, c),
                rfp.run(&phi2, b, a, c),
            );
            let composed = Rec0FromRec0p { rec0p: &rpi };
            rep.compare(
                "rec0-from-iter-composite",
                iterators::rec0(&phi2, b, a, c),
                composed.run(&phi2, b, a, c),
            );
        }
        LemmaId::Lemma5Unwind | LemmaId::Cor6Unwind => {
            let n = c.len();
            match iterators::unwind_ell(*k, n, &phi, a) {
                Err(e) => rep.mismatches.push(Mismatch {
                    check: "unwind-ell".into(),
                    expected: "total".into(),
                    actual: format!("error: {}", e),
                }),
                Ok(ell) => {
                    let lhs = iterators::iter_k(*k + 1, &phi, a, c).map(|r| r.0);
                    let v_ell =
                        iterators::iter_k(*k, &phi, a, &repeat(0, ell)).map(|r| r.0);
                    match (&lhs, &v_ell) {
                        (Ok(_), Ok(ve)) => {
                            if lemma == LemmaId::Lemma5Unwind {
                                let rhs = iterators::iter_k(1, &phi, ve, &repeat(0, n - ell))
                                    .map(|r| r.0);
                                rep.compare("lemma5-star", lhs.clone(), rhs);
                            } else if ell < n {
                                let rhs = phi(ve).and_then(|fa| {
                                    iterators::iter_k(0, &phi, &fa, &repeat(0, n - ell - 1))
                                        .map(|r| r.0)
                                });
                                rep.compare("cor6", lhs.clone(), rhs);
                            } else {
                                // the Corollary's exponent n-ell-1 is not
                                // defined at ell = n; the decomposition
                                // degenerates to the budget-k value
                                rep.compare("cor6-ell-eq-n", lhs.clone(), v_ell.clone());
                            }
                        }
                        _ => {
                            rep.compare("unwind-operands", lhs, v_ell);
                        }
                    }
                    if let Ok((_, trace)) = iterators::iter_k(*k + 1, &phi, a, c) {
                        rep.trace_health("unwind", &trace, a, &phi);
                    }
                }
            }
        }
        LemmaId::Lemma7Iter0 => {
            let tr = Iter0FromIter { iter: &IterRef };
            rep.compare(
                "iter0-from-iter",
                iterators::iter_k(0, &phi, a, c).map(|r| r.0),
                tr.run(&phi, a, c),
            );
            if let Ok((_, trace)) = iterators::iter_k(0, &phi, a, c) {
                rep.trace_health("iter0", &trace, a, &phi);
            }
        }
        LemmaId::Lemma8IterK => {
            for kk in 0..=3 {
                let tr = IterKFromIter { iter: &IterRef, k: kk };
                rep.compare(
                    &format!("iterk-from-iter(k={})", kk),
                    iterators::iter_k(kk, &phi, a, c).map(|r| r.0),
                    tr.run(&phi, a, c),
                );
                if let Ok((_, trace)) = iterators::iter_k(kk, &phi, a, c) {
                    rep.trace_health(&format!("iterk(k={})", kk), &trace, a, &phi);
                }
            }
        }
        LemmaId::Sec4JterKIterK => {
            for kk in 0..=2 {
                let inner = IterKRef(kk);
                let tr = JterKFromIterK { iterk: &inner };
                if c.is_empty() {
                    rep.flags.push((
                        format!("sec4-epsilon-dispatch(k={})", kk),
                        "identity φ(Iter_k(φ,a,c≫1)) not covered at c = ε; dispatched to a".into(),
                    ));
                    rep.compare(
                        &format!("jterk-epsilon(k={})", kk),
                        Ok(a.clone()),
                        tr.run(&phi, a, c),
                    );
                } else {
                    rep.compare(
                        &format!("jterk-from-iterk(k={})", kk),
                        iterators::jter_k(kk, &phi, a, c).map(|r| r.0),
                        tr.run(&phi, a, c),
                    );
                }
                if let Ok((_, trace)) = iterators::jter_k(kk, &phi, a, c) {
                    rep.trace_health(&format!("jterk(k={})", kk), &trace, a, &phi);
                }
            }
        }
        LemmaId::Sec4JterJterK => {
            for kk in 0..=2 {
                let inner = JterKRef(kk);
                let tr = JterFromJterK { jterk: &inner };
                rep.compare(
                    &format!("jter-from-jterk(k={})", kk),
                    iterators::jter(&phi, b, a, c),
                    tr.run(&phi, b, a, c),
                );
                if !c.is_empty() {
                    // the Claim: the wrapped run equals the clamped Jter
                    // value with its flag bit, for any budget
                    let psi_w = jter_wrap_step(&phi, b, a);
                    let claim_lhs =
                        iterators::jter_k(kk, &psi_w, &append_sym(b, 0), c).map(|r| r.0);
                    let claim_rhs = iterators::jter(&phi, b, a, &drop_last(c))
                        .map(|v| append_sym(&lmin(&v, b), 1));
                    rep.compare(&format!("sec4-claim(k={})", kk), claim_rhs, claim_lhs);
                }
            }
        }
        LemmaId::Sec5Fast => {
            for kk in 0..=3 {
                let reference = iterators::iter_k(kk, &phi, a, c).map(|r| r.0);
                let threaded = iterators::iter_k_fast(kk, &phi, a, c.len(), FastMode::Threaded);
                rep.compare(&format!("threaded-vs-iterk(k={})", kk), reference.clone(), threaded);
                let literal = iterators::iter_k_fast(kk, &phi, a, c.len(), FastMode::Literal);
                match (&reference, &literal) {
                    (Ok(r), Ok(l)) if r != l => rep.flags.push((
                        format!("literal-divergence(k={})", kk),
                        format!("literal '{}' vs iter_k '{}'", l, r),
                    )),
                    _ => {}
                }
                if let Ok((_, trace)) = iterators::iter_k(kk, &phi, a, c) {
                    rep.trace_health(&format!("fast(k={})", kk), &trace, a, &phi);
                }
            }
        }
        LemmaId::TheoremMain => {
            for kk in 0..=3 {
                // Iter → Iter_k → Jter_k → Jter → Iter
                let iterk_built = IterKFromIter { iter: &IterRef, k: kk };
                let jterk_c = JterKFromIterK { iterk: &iterk_built };
                let jter_c = JterFromJterK { jterk: &jterk_c };
                let iter_c = IterFromJter { jter: &jter_c };
                rep.compare(
                    &format!("cycle-iter(k={})", kk),
                    iterators::iter(&phi, b, a, c),
                    iter_c.run(&phi, b, a, c),
                );
                // Iter_k → Jter_k → Jter → Iter → Iter_k
                let jterk_2 = JterKFromIterK { iterk: &IterKRef(kk) };
                let jter_2 = JterFromJterK { jterk: &jterk_2 };
                let iter_2 = IterFromJter { jter: &jter_2 };
                let iterk_2 = IterKFromIter { iter: &iter_2, k: kk };
                rep.compare(
                    &format!("cycle-iterk(k={})", kk),
                    iterators::iter_k(kk, &phi, a, c).map(|r| r.0),
                    iterk_2.run(&phi, a, c),
                );
                // Jter_k → Jter → Iter → Iter_k → Jter_k
                let jter_3 = JterFromJterK { jterk: &JterKRef(kk) };
                let iter_3 = IterFromJter { jter: &jter_3 };
                let iterk_3 = IterKFromIter { iter: &iter_3, k: kk };
                let jterk_3 = JterKFromIterK { iterk: &iterk_3 };
                rep.compare(
                    &format!("cycle-jterk(k={})", kk),
                    iterators::jter_k(kk, &phi, a, c).map(|r| r.0),
                    jterk_3.run(&phi, a, c),
                );
                // Jter → Iter → Iter_k → Jter_k → Jter
                let iter_4 = IterFromJter { jter: &JterRef };
                let iterk_4 = IterKFromIter { iter: &iter_4, k: kk };
                let jterk_4 = JterKFromIterK { iterk: &iterk_4 };
                let jter_4 = JterFromJterK { jterk: &jterk_4 };
                rep.compare(
                    &format!("cycle-jter(k={})", kk),
                    iterators::jter(&phi, b, a, c),
                    jter_4.run(&phi, b, a, c),
                );
            }
        }
    }
    rep
}

/// Pointwise shrinking: word shortening and DSL-tree pruning, accepting a
/// candidate only if the same named check still fails.
fn shrink_case(lemma: LemmaId, case: &Case, check: &str) -> (Case, Mismatch) {
    let fails_with = |cand: &Case| -> Option<Mismatch> {
        run_case(lemma, cand)
            .mismatches
            .into_iter()
            .find(|m| m.check == check)
    };
    let mut current = case.clone();
    let mut best = fails_with(&current).expect("shrink entered without a failing check");
    let mut budget = 400usize;
    loop {
        let mut improved = false;
        let mut candidates: Vec<Case> = Vec::new();
        for (field, w) in [(0, &current.c), (1, &current.a), (2, &current.b)] {
            if !w.is_empty() {
                let mut cand = current.clone();
                let shorter = drop_last(w);
                match field {
                    0 => cand.c = shorter,
                    1 => cand.a = shorter,
                    _ => cand.b = shorter,
                }
                candidates.push(cand);
            }
        }
        for p in current.phi.shrink_candidates() {
            let mut cand = current.clone();
            cand.phi = p;
            candidates.push(cand);
        }
        for p in current.phi_alt.shrink_candidates() {
            let mut cand = current.clone();
            cand.phi_alt = p;
            candidates.push(cand);
        }
        for p in current.psi.shrink_candidates() {
            let mut cand = current.clone();
            cand.psi = p;
            candidates.push(cand);
        }
        for cand in candidates {
            if budget == 0 {
                break;
            }
            budget -= 1;
            if let Some(m) = fails_with(&cand) {
                current = cand;
                best = m;
                improved = true;
                break;
            }
        }
        if !improved || budget == 0 {
            break;
        }
    }
    (current, best)
}

fn aggregate(
    lemma: LemmaId,
    trials: u64,
    seed: u64,
    max_len: usize,
    results: Vec<(u64, Case, CaseReport)>,
    started: Instant,
) -> CheckReport {
    let mut failures = Vec::new();
    let mut flagged = Vec::new();
    for (trial, case, rep) in results {
        for m in &rep.mismatches {
            let (min_case, min_m) = shrink_case(lemma, &case, &m.check);
            failures.push(Failure {
                trial,
                check: m.check.clone(),
                inputs: case.input_view(lemma),
                expected: m.expected.clone(),
                actual: m.actual.clone(),
                minimized_inputs: min_case.input_view(lemma),
                minimized_expected: min_m.expected,
                minimized_actual: min_m.actual,
            });
        }
        for (kind, details) in rep.flags {
            flagged.push(Flagged {
                trial,
                kind,
                details,
            });
        }
    }
    CheckReport {
        lemma: lemma.name().to_string(),
        trials,
        seed,
        max_len,
        failures,
        flagged_edge_cases: flagged,
        wall_time_secs: started.elapsed().as_secs_f64(),
    }
}

pub fn check_lemma(lemma: LemmaId, trials: u64, seed: u64, max_len: usize) -> CheckReport {
    let started = Instant::now();
    let mut results: Vec<(u64, Case, CaseReport)> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial);
            // half plain, half boundary-biased
            let case = gen_case(lemma, &mut rng, max_len, trial % 2 == 1);
            let rep = run_case(lemma, &case);
            (trial, case, rep)
        })
        .collect();
    results.sort_by_key(|(trial, _, _)| *trial);
    let mut report = aggregate(lemma, trials, seed, max_len, results, started);
    if lemma == LemmaId::Sec5Fast {
        push_literal_probe_flag(&mut report, trials);
    }
    report
}

/// The deterministic §5 probe: a step function whose restart-baseline
/// reading diverges from the threaded baseline.
fn push_literal_probe_flag(report: &mut CheckReport, trial: u64) {
    let probe = StepDsl::ite_longer(crate::word::w("1"), StepDsl::Dropl, StepDsl::Selfcat);
    let phi = probe.step_default();
    let a = crate::word::w("11");
    let reference = iterators::iter_k(0, &phi, &a, &repeat(0, 2)).map(|r| r.0);
    let literal = iterators::iter_k_fast(0, &phi, &a, 2, FastMode::Literal);
    if let (Ok(r), Ok(l)) = (reference, literal) {
        if r != l {
            report.flagged_edge_cases.push(Flagged {
                trial,
                kind: "literal-baseline-probe".into(),
                details: format!(
                    "phi = {}, a = '11', n = 2, k = 0: literal '{}' vs iter_k '{}'",
                    probe, l, r
                ),
            });
        }
    }
}

pub fn falsify_lemma(lemma: LemmaId, budget_seconds: f64, seed: u64, max_len: usize) -> CheckReport {
    falsify_with(lemma, budget_seconds, seed, max_len, &|case| {
        run_case(lemma, case)
    })
}

/// Adversarial search shared by the real campaign and the planted-bug
/// self-test: 100% boundary-biased generation, stop at the first failure
/// or when the time budget runs out.
pub fn falsify_with(
    lemma: LemmaId,
    budget_seconds: f64,
    seed: u64,
    max_len: usize,
    runner: &dyn Fn(&Case) -> CaseReport,
) -> CheckReport {
    let started = Instant::now();
    let mut trial = 0u64;
    let mut results = Vec::new();
    while started.elapsed().as_secs_f64() < budget_seconds {
        let mut rng = trial_rng(seed, trial);
        let mut case = gen_case(lemma, &mut rng, max_len, true);
        if lemma == LemmaId::Sec4JterKIterK && case.c.is_empty() {
            // the ε edge is excluded by construction in adversarial mode
            case.c = append_sym(&case.c, 0);
        }
        let rep = runner(&case);
        let failed = !rep.mismatches.is_empty();
        results.push((trial, case, rep));
        trial += 1;
        if failed {
            break;
        }
    }
    // shrinking must replay through the same (possibly mutated) runner
    let mut failures = Vec::new();
    let mut flagged = Vec::new();
    for (t, case, rep) in &results {
        for m in &rep.mismatches {
            let (min_case, min_m) = shrink_with(runner, case, &m.check);
            failures.push(Failure {
                trial: *t,
                check: m.check.clone(),
                inputs: case.input_view(lemma),
                expected: m.expected.clone(),
                actual: m.actual.clone(),
                minimized_inputs: min_case.input_view(lemma),
                minimized_expected: min_m.expected,
                minimized_actual: min_m.actual,
            });
        }
        for (kind, details) in &rep.flags {
            flagged.push(Flagged {
                trial: *t,
                kind: kind.clone(),
                details: details.clone(),
            });
        }
    }
    CheckReport {
        lemma: lemma.name().to_string(),
        trials: trial,
        seed,
        max_len,
        failures,
        flagged_edge_cases: flagged,
        wall_time_secs: started.elapsed().as_secs_f64(),
    }
}

fn shrink_with(
    runner: &dyn Fn(&Case) -> CaseReport,
    case: &Case,
    check: &str,
) -> (Case, Mismatch) {
    let fails_with = |cand: &Case| -> Option<Mismatch> {
        runner(cand).mismatches.into_iter().find(|m| m.check == check)
    };
    let mut current = case.clone();
    let mut best = fails_with(&current).expect("shrink entered without a failing check");
    let mut budget = 400usize;
    loop {
        let mut improved = false;
        let mut candidates: Vec<Case> = Vec::new();
        for field in 0..3 {
            let w = match field {
                0 => &current.c,
                1 => &current.a,
                _ => &current.b,
            };
            if !w.is_empty() {
                let mut cand = current.clone();
                let shorter = drop_last(w);
                match field {
                    0 => cand.c = shorter,
                    1 => cand.a = shorter,
                    _ => cand.b = shorter,
                }
                candidates.push(cand);
            }
        }
        for p in current.phi.shrink_candidates() {
            let mut cand = current.clone();
            cand.phi = p;
            candidates.push(cand);
        }
        for p in current.phi_alt.shrink_candidates() {
            let mut cand = current.clone();
            cand.phi_alt = p;
            candidates.push(cand);
        }
        for p in current.psi.shrink_candidates() {
            let mut cand = current.clone();
            cand.psi = p;
            candidates.push(cand);
        }
        for cand in candidates {
            if budget == 0 {
                break;
            }
            budget -= 1;
            if let Some(m) = fails_with(&cand) {
                current = cand;
                best = m;
                improved = true;
                break;
            }
        }
        if !improved || budget == 0 {
            break;
        }
    }
    (current, best)
}

/// Deliberately broken translations for the harness self-test: each must
/// be caught by the adversarial campaign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlantedBug {
    /// jterk_from_iterk without the final φ application.
    JterKDropsFinalPhi,
    /// iter0_from_iter with the narrow bound `a` that truncates the tagged
    /// start.
    Iter0NarrowBound,
    /// rec0 driven through rec0_prime with no initial-value tagging, so
    /// the start clamp wrongly applies to a.
    Rec0UntaggedInitial,
}

impl PlantedBug {
    pub fn lemma(&self) -> LemmaId {
        match self {
            PlantedBug::JterKDropsFinalPhi => LemmaId::Sec4JterKIterK,
            PlantedBug::Iter0NarrowBound => LemmaId::Lemma7Iter0,
            PlantedBug::Rec0UntaggedInitial => LemmaId::Lemma4RecIter,
        }
    }

    pub fn run_case(&self, case: &Case) -> CaseReport {
        let mut rep = CaseReport::default();
        let phi = case.phi.step_default();
        let alt = case.phi_alt.step_default();
        let phi2 = |d: &Word, t: &Word| -> Result<Word, RunError> {
            if d.len() % 2 == 0 {
                phi(t)
            } else {
                alt(t)
            }
        };
        let Case { a, b, c, .. } = case;
        match self {
            PlantedBug::JterKDropsFinalPhi => {
                for kk in 0..=2 {
                    if c.is_empty() {
                        continue;
                    }
                    let broken = iterators::iter_k(kk, &phi, a, &drop_last(c)).map(|r| r.0);
                    rep.compare(
                        &format!("jterk-from-iterk(k={})", kk),
                        iterators::jter_k(kk, &phi, a, c).map(|r| r.0),
                        broken,
                    );
                }
            }
            PlantedBug::Iter0NarrowBound => {
                let gadget = |s: &Word| -> Result<Word, RunError> {
                    if s.last() == Some(1) {
                        return Ok(s.clone());
                    }
                    let t = drop_last(s);
                    let ft = phi(&t)?;
                    if ft.len() <= a.len() {
                        Ok(append_sym(&ft, 0))
                    } else {
                        Ok(append_sym(&t, 1))
                    }
                };
                let broken = iterators::iter(&gadget, a, &append_sym(a, 0), c).map(|w| drop_last(&w));
                rep.compare(
                    "iter0-from-iter",
                    iterators::iter_k(0, &phi, a, c).map(|r| r.0),
                    broken,
                );
            }
            PlantedBug::Rec0UntaggedInitial => {
                let broken = iterators::rec0_prime(&phi2, b, a, c);
                rep.compare(
                    "rec0-from-rec0p",
                    iterators::rec0(&phi2, b, a, c),
                    broken,
                );
            }
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_campaigns_pass_for_every_lemma() {
        for lemma in LemmaId::all() {
            let max_len = lemma.default_max_len().min(16);
            let report = check_lemma(lemma, 25, 11, max_len);
            assert!(
                report.failures.is_empty(),
                "{}:\n{}",
                lemma.name(),
                report.render_text()
            );
        }
    }

    #[test]
    fn campaign_reports_are_byte_identical_across_runs() {
        let a = check_lemma(LemmaId::Lemma2IterJter, 40, 9, 24).to_json();
        let b = check_lemma(LemmaId::Lemma2IterJter, 40, 9, 24).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn planted_bugs_are_detected_quickly() {
        for bug in [
            PlantedBug::JterKDropsFinalPhi,
            PlantedBug::Iter0NarrowBound,
            PlantedBug::Rec0UntaggedInitial,
        ] {
            let report = falsify_with(bug.lemma(), 5.0, 23, 16, &|case| bug.run_case(case));
            assert!(
                !report.failures.is_empty(),
                "planted bug {:?} was not detected",
                bug
            );
            // the shrunk counterexample is small
            let f = &report.failures[0];
            assert!(f.minimized_inputs.a.len() <= 8, "{:?}", f);
            assert!(f.minimized_inputs.c.len() <= 8, "{:?}", f);
        }
    }

    #[test]
    fn unknown_lemma_ids_are_rejected() {
        assert!("lemma9-nonsense".parse::<LemmaId>().is_err());
        assert_eq!(
            "theorem-main".parse::<LemmaId>().unwrap(),
            LemmaId::TheoremMain
        );
    }
}
