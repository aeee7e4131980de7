//! Structured verification reports: one record per checked instance, a
//! derived summary, and a stable text rendering. Timings are kept in memory
//! but only rendered on request so that report files are byte-stable across
//! runs.

use std::fmt::Display;

/// One checked statistic on one instance.
#[derive(Clone, Debug)]
pub struct Record {
    pub key: String,
    pub stat: String,
    pub expected: String,
    pub observed: String,
    pub ok: bool,
    pub millis: u128,
    pub seed: Option<u64>,
}

/// A named campaign's records.
#[derive(Clone, Debug)]
pub struct Report {
    pub campaign: String,
    pub seed: Option<u64>,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(campaign: impl Into<String>, seed: Option<u64>) -> Report {
        Report { campaign: campaign.into(), seed, records: Vec::new() }
    }

    /// Records an equality check.
    pub fn push_eq(
        &mut self,
        key: impl Into<String>,
        stat: impl Into<String>,
        expected: impl Display,
        observed: impl Display,
        millis: u128,
    ) {
        let expected = expected.to_string();
        let observed = observed.to_string();
        let ok = expected == observed;
        self.records.push(Record {
            key: key.into(),
            stat: stat.into(),
            expected,
            observed,
            ok,
            millis,
            seed: self.seed,
        });
    }

    /// Records a property check with a caller-supplied verdict.
    pub fn push_check(
        &mut self,
        key: impl Into<String>,
        stat: impl Into<String>,
        expected: impl Display,
        observed: impl Display,
        ok: bool,
        millis: u128,
    ) {
        self.records.push(Record {
            key: key.into(),
            stat: stat.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            ok,
            millis,
            seed: self.seed,
        });
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.ok)
    }

    pub fn pass_count(&self) -> usize {
        self.records.iter().filter(|r| r.ok).count()
    }

    pub fn fail_count(&self) -> usize {
        self.records.len() - self.pass_count()
    }

    /// Stable text rendering; `timings` adds per-record and total elapsed
    /// milliseconds (and makes the output run-dependent).
    pub fn render(&self, timings: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("campaign \"{}\"", self.campaign));
        if let Some(seed) = self.seed {
            out.push_str(&format!(" seed={seed}"));
        }
        out.push('\n');
        for r in &self.records {
            out.push_str(&format!(
                "record key=\"{}\" stat=\"{}\" expected=\"{}\" observed=\"{}\" ok={}",
                r.key, r.stat, r.expected, r.observed, r.ok
            ));
            if timings {
                out.push_str(&format!(" ms={}", r.millis));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary records={} pass={} fail={}",
            self.records.len(),
            self.pass_count(),
            self.fail_count()
        ));
        if timings {
            let total: u128 = self.records.iter().map(|r| r.millis).sum();
            out.push_str(&format!(" ms={total}"));
        }
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_counts_match_records() {
        let mut rep = Report::new("demo", Some(7));
        rep.push_eq("a", "x", 3, 3, 12);
        rep.push_eq("b", "x", 3, 4, 5);
        rep.push_check("c", "prop", "holds", "holds", true, 1);
        assert_eq!(rep.pass_count(), 2);
        assert_eq!(rep.fail_count(), 1);
        assert!(!rep.passed());
    }

    #[test]
    fn render_is_stable_without_timings() {
        let mut rep = Report::new("demo", None);
        rep.push_eq("a", "x", 1, 1, 999);
        let text = rep.render(false);
        assert_eq!(
            text,
            "campaign \"demo\"\nrecord key=\"a\" stat=\"x\" expected=\"1\" observed=\"1\" ok=true\nsummary records=1 pass=1 fail=0\n"
        );
        assert!(rep.render(true).contains("ms=999"));
    }
}
