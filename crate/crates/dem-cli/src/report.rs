//! Report documents emitted by the `reproduce` suites: one row per checked
//! case, a conjunction verdict, and TSV/JSON renderings.

use serde::Serialize;

/// One checked value: what was claimed, what was computed, and whether the
/// two agree. `source` states the mathematical claim backing the expectation.
#[derive(Clone, Debug, Serialize)]
pub struct Case {
    /// Stable slug, unique within a suite (e.g. `families/kipas:8`).
    pub id: String,
    /// Which acceptance check this case belongs to (1..=12).
    pub criterion: u32,
    pub description: String,
    pub expected: String,
    pub computed: String,
    /// The claim the expected value rests on, in words.
    pub source: String,
    pub pass: bool,
    /// Wall-clock for this case; populated only when timings were requested,
    /// since they vary between runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

/// A full suite run. The overall verdict is the conjunction of the cases'.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub suite: String,
    pub pass: bool,
    pub cases: Vec<Case>,
}

impl ReportDocument {
    pub fn new(suite: &str, cases: Vec<Case>) -> ReportDocument {
        let pass = cases.iter().all(|c| c.pass);
        ReportDocument { suite: suite.to_string(), pass, cases }
    }

    /// Tab-separated table with a header row and one trailing summary
    /// comment. The `wall_ms` column appears only when timings were recorded.
    pub fn to_tsv(&self) -> String {
        let timed = self.cases.iter().any(|c| c.wall_ms.is_some());
        let mut out = String::from("id\tcriterion\tdescription\texpected\tcomputed\tpass\tsource");
        if timed {
            out.push_str("\twall_ms");
        }
        out.push('\n');
        for c in &self.cases {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                c.id, c.criterion, c.description, c.expected, c.computed, c.pass, c.source
            ));
            if timed {
                out.push_str(&format!("\t{}", c.wall_ms.unwrap_or(0)));
            }
            out.push('\n');
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "# suite {}: {} ({}/{} cases)\n",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            passed,
            self.cases.len()
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
