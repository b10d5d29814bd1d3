//! Human-readable rendering of revision traces.

use crate::iterators::{IterTrace, RevisionKind};

/// A table of the calls (index, |query|, |answer|, revision flag, running
/// baseline) followed by the JSON wire form.
pub fn trace_report(trace: &IterTrace) -> String {
    let mut out = String::new();
    let kind = match trace.kind {
        RevisionKind::Length => "length",
        RevisionKind::Lookahead => "lookahead",
    };
    out.push_str(&format!(
        "{} revisions, budget {}: n = {}, ell = {}\n",
        kind, trace.budget, trace.n, trace.ell
    ));
    out.push_str("  call  |query|  |answer|  revision  baseline\n");
    let mut baseline: Option<usize> = None;
    for call in &trace.calls {
        let tracked = match trace.kind {
            RevisionKind::Length => call.answer.len(),
            RevisionKind::Lookahead => call.query.len(),
        };
        baseline = Some(baseline.map_or(tracked, |b| b.max(tracked)));
        out.push_str(&format!(
            "  {:>4}  {:>7}  {:>8}  {:>8}  {:>8}\n",
            call.i,
            call.query.len(),
            call.answer.len(),
            if call.revision { "*" } else { "-" },
            baseline.unwrap(),
        ));
    }
    out.push_str(&serde_json::to_string_pretty(trace).expect("trace serialization"));
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iterators::{iter_k, jter_k};
    use crate::word::{append_sym, w, Word};
    use crate::RunError;

    fn append1(t: &Word) -> Result<Word, RunError> {
        Ok(append_sym(t, 1))
    }

    #[test]
    fn length_trace_shows_the_single_revision() {
        let (_, trace) = iter_k(1, &append1, &w("0"), &w("0000")).unwrap();
        let text = trace_report(&trace);
        assert!(text.contains("ell = 1"));
        assert_eq!(trace.calls.iter().filter(|c| c.revision).count(), 1);
        assert!(trace.calls[0].revision);
    }

    #[test]
    fn lookahead_trace_exempts_the_first_call() {
        let (_, trace) = jter_k(0, &append1, &w("0"), &w("000")).unwrap();
        let text = trace_report(&trace);
        assert!(text.contains("ell = 1"));
        assert!(!trace.calls[0].revision);
        assert_eq!(trace.calls.len(), 1);
    }

    #[test]
    fn empty_trace_renders_zero_rows() {
        let (_, trace) = iter_k(2, &append1, &w("0"), &Word::empty()).unwrap();
        let text = trace_report(&trace);
        assert!(text.contains("ell = 0"));
        assert_eq!(trace.calls.len(), 0);
    }
}
