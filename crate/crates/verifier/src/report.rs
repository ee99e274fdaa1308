//! JSON-lines report emission: one verdict per line, one summary line at the
//! end. Everything written here is deterministic for a fixed configuration,
//! so reruns produce byte-identical files.

use std::io::Write;

use crate::theorem::TheoremId;
use crate::verdict::{Classification, Summary, Verdict};

pub struct ReportWriter<W: Write> {
    out: W,
    theorem: TheoremId,
    seed: u64,
    instances: u64,
    confirmed: u64,
    vacuous: u64,
    counterexamples: u64,
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W, theorem: TheoremId, seed: u64) -> ReportWriter<W> {
        ReportWriter {
            out,
            theorem,
            seed,
            instances: 0,
            confirmed: 0,
            vacuous: 0,
            counterexamples: 0,
        }
    }

    pub fn record(&mut self, verdict: &Verdict) -> std::io::Result<()> {
        self.instances += 1;
        match verdict.classification {
            Classification::Confirmed => self.confirmed += 1,
            Classification::Vacuous => self.vacuous += 1,
            Classification::Counterexample => self.counterexamples += 1,
        }
        serde_json::to_writer(&mut self.out, verdict)?;
        self.out.write_all(b"\n")
    }

    /// Write the summary line and hand back the tallies.
    pub fn finish(mut self) -> std::io::Result<Summary> {
        let summary = Summary {
            theorem: self.theorem.id().to_string(),
            instances: self.instances,
            confirmed: self.confirmed,
            vacuous: self.vacuous,
            counterexamples: self.counterexamples,
            seed: self.seed,
        };
        serde_json::to_writer(&mut self.out, &summary)?;
        self.out.write_all(b"\n")?;
        self.out.flush()?;
        Ok(summary)
    }
}

/// Split a finished report back into its verdicts and summary. The summary
/// is the single line carrying a `theorem` field instead of a `key`.
pub fn parse_report(text: &str) -> Result<(Vec<Verdict>, Summary), serde_json::Error> {
    let mut verdicts = Vec::new();
    let mut summary = None;
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let value: serde_json::Value = serde_json::from_str(line)?;
        if value.get("key").is_some() {
            verdicts.push(serde_json::from_value(value)?);
        } else {
            summary = Some(serde_json::from_value(value)?);
        }
    }
    let summary = summary.ok_or_else(|| {
        <serde_json::Error as serde::de::Error>::custom("report has no summary line")
    })?;
    Ok((verdicts, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Outcome;

    #[test]
    fn report_round_trips_and_tallies() {
        let mut buf = Vec::new();
        let mut w = ReportWriter::new(&mut buf, TheoremId::R43IntersectionWitness, 7);
        let outcomes = [
            Outcome { hypothesis: true, conclusion: true, witness: None, notes: None },
            Outcome { hypothesis: false, conclusion: true, witness: None, notes: None },
            Outcome {
                hypothesis: true,
                conclusion: false,
                witness: Some(serde_json::json!({"a": 5, "b": 6, "intersection": 4})),
                notes: None,
            },
        ];
        for (i, o) in outcomes.into_iter().enumerate() {
            w.record(&Verdict::new(format!("k{i}"), o)).unwrap();
        }
        let summary = w.finish().unwrap();
        assert_eq!(summary.instances, 3);
        assert_eq!(summary.confirmed, 1);
        assert_eq!(summary.vacuous, 1);
        assert_eq!(summary.counterexamples, 1);
        assert_eq!(summary.seed, 7);

        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().last().unwrap().starts_with(
            r#"{"theorem":"R43_intersection_witness","instances":3,"confirmed":1,"vacuous":1,"counterexamples":1,"seed":7}"#
        ));
        let (verdicts, parsed) = parse_report(&text).unwrap();
        assert_eq!(verdicts.len(), 3);
        assert_eq!(parsed, summary);
    }
}
