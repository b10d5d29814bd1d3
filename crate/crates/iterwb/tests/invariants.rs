//! Property-based invariants for the word algebra and the revision-budget
//! iterators, complementing the seeded differential campaigns.

use proptest::prelude::*;

use iterwb::dsl::StepDsl;
use iterwb::harness::gen::gen_step_fn;
use iterwb::iterators::{self, FastMode, RevisionKind, StepFn};
use iterwb::word::{lmin, project_n_i, tuple_n, word_eq, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word_strat(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..=1, 0..=max_len).prop_map(Word::from_bits)
}

fn step_strat() -> impl Strategy<Value = StepDsl> {
    any::<u64>().prop_map(|seed| gen_step_fn(&mut ChaCha8Rng::seed_from_u64(seed), 4))
}

proptest! {
    #[test]
    fn tupling_round_trips(parts in prop::collection::vec(word_strat(12), 2..=3)) {
        let packed = tuple_n(&parts);
        let total: usize = parts.iter().map(Word::len).sum();
        prop_assert_eq!(packed.len(), 2 * total + 2 * (parts.len() - 1));
        for (i, part) in parts.iter().enumerate() {
            prop_assert_eq!(&project_n_i(&packed, parts.len(), i + 1), part);
        }
    }

    #[test]
    fn lmin_picks_the_strictly_shorter_side(x in word_strat(16), y in word_strat(16)) {
        let m = lmin(&x, &y);
        if x.len() < y.len() {
            prop_assert_eq!(m, x);
        } else {
            prop_assert_eq!(m, y);
        }
    }

    #[test]
    fn word_eq_is_a_boolean(x in word_strat(12), y in word_strat(12)) {
        let e = word_eq(&x, &y);
        prop_assert_eq!(e.len() == 1, x == y);
        prop_assert!(e.len() <= 1);
    }

    #[test]
    fn iter_never_exceeds_its_bound(
        phi in step_strat(),
        a in word_strat(20),
        b in word_strat(20),
        c in word_strat(20),
    ) {
        let step = phi.step_default();
        if let Ok(out) = iterators::iter(&step, &b, &a, &c) {
            prop_assert!(out.len() <= b.len());
        }
        // empty length word: no calls at all, just the start clamp
        prop_assert_eq!(
            iterators::iter(&step, &b, &a, &Word::empty()).unwrap(),
            lmin(&a, &b)
        );
    }

    #[test]
    fn budget_growth_never_shrinks_ell(
        phi in step_strat(),
        a in word_strat(16),
        c in word_strat(16),
        k in 0usize..3,
    ) {
        let step = phi.step_default();
        let lo = iterators::iter_k(k, &step, &a, &c);
        let hi = iterators::iter_k(k + 1, &step, &a, &c);
        if let (Ok((lo_word, lo_trace)), Ok((hi_word, hi_trace))) = (lo, hi) {
            prop_assert!(lo_trace.ell <= hi_trace.ell);
            // once the budget suffices for the whole run, it is inert
            if lo_trace.ell == c.len() {
                prop_assert_eq!(lo_word, hi_word);
            }
        }
    }

    #[test]
    fn non_growing_steps_collapse_the_budget(a in word_strat(16), c in word_strat(16)) {
        // dropl never lengthens, so budget 0 already executes all n calls
        let step = StepDsl::Dropl.step_default();
        let (out, trace) = iterators::iter_k(0, &step, &a, &c).unwrap();
        prop_assert_eq!(trace.ell, c.len());
        prop_assert_eq!(out, iterators::iterate(&step, c.len(), &a).unwrap());
    }

    #[test]
    fn length_trace_chains_queries_through_answers(
        phi in step_strat(),
        a in word_strat(16),
        c in word_strat(16),
        k in 0usize..=3,
    ) {
        let step = phi.step_default();
        if let Ok((_, trace)) = iterators::iter_k(k, &step, &a, &c) {
            prop_assert_eq!(trace.kind, RevisionKind::Length);
            prop_assert!(trace.calls.iter().filter(|cl| cl.revision).count() <= k);
            if let Some(first) = trace.calls.first() {
                prop_assert_eq!(&first.query, &a);
            }
            for pair in trace.calls.windows(2) {
                prop_assert_eq!(&pair[1].query, &pair[0].answer);
            }
        }
    }

    #[test]
    fn lookahead_trace_exempts_call_one(
        phi in step_strat(),
        a in word_strat(16),
        c in word_strat(16),
        k in 0usize..=3,
    ) {
        let step = phi.step_default();
        if let Ok((_, trace)) = iterators::jter_k(k, &step, &a, &c) {
            prop_assert_eq!(trace.kind, RevisionKind::Lookahead);
            prop_assert!(trace.calls.iter().filter(|cl| cl.revision).count() <= k);
            if let Some(first) = trace.calls.first() {
                prop_assert!(!first.revision);
            }
        }
    }

    #[test]
    fn threaded_fast_mode_matches_the_reference(
        phi in step_strat(),
        a in word_strat(16),
        c in word_strat(16),
        k in 0usize..=3,
    ) {
        let step = phi.step_default();
        let reference = iterators::iter_k(k, &step, &a, &c).map(|r| r.0);
        let threaded = iterators::iter_k_fast(k, &step, &a, c.len(), FastMode::Threaded);
        match (reference, threaded) {
            (Ok(r), Ok(t)) => prop_assert_eq!(r, t),
            (Err(_), Err(_)) => {}
            (r, t) => prop_assert!(false, "reference {:?} vs threaded {:?}", r, t),
        }
    }

    #[test]
    fn rec_runs_over_strict_prefixes(
        phi in step_strat(),
        alt in step_strat(),
        b in word_strat(16),
        a in word_strat(16),
        c in word_strat(16),
    ) {
        // a two-argument step via prefix-length parity, as in the campaigns
        let even = phi.step_default();
        let odd = alt.step_default();
        let phi2 = |d: &Word, t: &Word| {
            if d.len() % 2 == 0 { StepFn::call(&even, t) } else { StepFn::call(&odd, t) }
        };
        // the run over c extends the run over c without its last symbol
        if !c.is_empty() {
            let shorter = iterwb::word::truncate_len(&c, c.len() - 1);
            let prefix = iterators::rec0(&phi2, &b, &a, &shorter);
            let full = iterators::rec0(&phi2, &b, &a, &c);
            if let (Ok(p), Ok(f)) = (prefix, full) {
                // the last stage sees d = c itself; it cannot fail when the
                // full run succeeded
                let last = phi2(&c, &p).unwrap();
                prop_assert_eq!(f, lmin(&last, &b));
            }
        }
    }
}
