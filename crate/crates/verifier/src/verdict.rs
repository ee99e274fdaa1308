//! What a single check produced and how it is classified.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Truth-table classification of a checked instance. Counterexamples are
/// exactly the instances where the hypothesis held and the conclusion did
/// not; failed hypotheses make the claim vacuous rather than refuted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Confirmed,
    Vacuous,
    Counterexample,
}

impl Classification {
    pub fn from_flags(hypothesis: bool, conclusion: bool) -> Classification {
        match (hypothesis, conclusion) {
            (false, _) => Classification::Vacuous,
            (true, true) => Classification::Confirmed,
            (true, false) => Classification::Counterexample,
        }
    }
}

/// Raw result of evaluating one instance: the two truth values plus any
/// witness data for a failed conclusion and notes on degenerate hypotheses.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub hypothesis: bool,
    pub conclusion: bool,
    /// Location of the first conclusion failure, when there is one.
    pub witness: Option<Value>,
    pub notes: Option<String>,
}

impl Outcome {
    pub fn classification(&self) -> Classification {
        Classification::from_flags(self.hypothesis, self.conclusion)
    }
}

/// One report line: the instance key plus its outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Verdict {
    pub key: String,
    pub hypothesis: bool,
    pub conclusion: bool,
    pub classification: Classification,
    pub witness: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

impl Verdict {
    pub fn new(key: String, outcome: Outcome) -> Verdict {
        Verdict {
            key,
            hypothesis: outcome.hypothesis,
            conclusion: outcome.conclusion,
            classification: outcome.classification(),
            witness: outcome.witness,
            notes: outcome.notes,
        }
    }
}

/// Final line of a sweep report, and the row the CLI prints per claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub theorem: String,
    pub instances: u64,
    pub confirmed: u64,
    pub vacuous: u64,
    pub counterexamples: u64,
    pub seed: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_truth_table() {
        assert_eq!(Classification::from_flags(true, true), Classification::Confirmed);
        assert_eq!(Classification::from_flags(true, false), Classification::Counterexample);
        assert_eq!(Classification::from_flags(false, true), Classification::Vacuous);
        assert_eq!(Classification::from_flags(false, false), Classification::Vacuous);
    }

    #[test]
    fn verdict_serialization_shape() {
        let v = Verdict::new(
            "R33_chain|nX=1|topX=3|t=builtin:identity".into(),
            Outcome { hypothesis: true, conclusion: true, witness: None, notes: None },
        );
        let line = serde_json::to_string(&v).unwrap();
        assert_eq!(
            line,
            r#"{"key":"R33_chain|nX=1|topX=3|t=builtin:identity","hypothesis":true,"conclusion":true,"classification":"confirmed","witness":null}"#
        );

        let v = Verdict::new(
            "k".into(),
            Outcome {
                hypothesis: true,
                conclusion: false,
                witness: Some(serde_json::json!({"a": 5})),
                notes: Some("note".into()),
            },
        );
        let line = serde_json::to_string(&v).unwrap();
        assert!(line.contains(r#""classification":"counterexample""#));
        assert!(line.contains(r#""witness":{"a":5}"#));
        assert!(line.ends_with(r#""notes":"note"}"#));
        let back: Verdict = serde_json::from_str(&line).unwrap();
        assert_eq!(back.classification, Classification::Counterexample);
    }
}
