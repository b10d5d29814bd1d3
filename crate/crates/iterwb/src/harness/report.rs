//! Campaign reports. The JSON form is byte-deterministic for a fixed
//! (lemma, trials, seed, max_len): wall time appears only in the text
//! rendering, never in the serialized report.

use serde::Serialize;

/// The inputs of one trial, rendered as strings for the report.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TrialInput {
    pub phi: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<String>,
    pub a: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    pub c: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: u64,
    /// Which equality inside the lemma failed (a lemma may bundle several).
    pub check: String,
    pub inputs: TrialInput,
    pub expected: String,
    pub actual: String,
    pub minimized_inputs: TrialInput,
    pub minimized_expected: String,
    pub minimized_actual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Flagged {
    pub trial: u64,
    pub kind: String,
    pub details: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub lemma: String,
    pub trials: u64,
    pub seed: u64,
    pub max_len: usize,
    pub failures: Vec<Failure>,
    pub flagged_edge_cases: Vec<Flagged>,
    #[serde(skip)]
    pub wall_time_secs: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{}: {} trials, seed {}, max_len {} — {} failures, {} flagged ({:.2}s)\n",
            self.lemma,
            self.trials,
            self.seed,
            self.max_len,
            self.failures.len(),
            self.flagged_edge_cases.len(),
            self.wall_time_secs,
        ));
        for f in &self.failures {
            out.push_str(&format!(
                "  FAIL trial {} [{}]: expected {:?}, got {:?}\n    inputs: {:?}\n    minimized: {:?} (expected {:?}, got {:?})\n",
                f.trial,
                f.check,
                f.expected,
                f.actual,
                f.inputs,
                f.minimized_inputs,
                f.minimized_expected,
                f.minimized_actual,
            ));
        }
        for fl in &self.flagged_edge_cases {
            out.push_str(&format!(
                "  flag trial {} [{}]: {}\n",
                fl.trial, fl.kind, fl.details
            ));
        }
        out
    }
}
