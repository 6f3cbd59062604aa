//! Suite reports and their JSON/text renderings.

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "permlab.suite-report/v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub group: String,
    pub witness: String,
}

/// Settings echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub corpus: String,
    pub max_order: usize,
    pub exhaustive_limit: usize,
    pub sample_size: usize,
    pub seed: String,
}

/// Wall-clock data; only serialized when explicitly requested because it
/// differs between runs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u128,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: String,
    pub suite: String,
    pub title: String,
    pub config: ReportConfig,
    pub corpus_size: usize,
    pub checks_run: u64,
    pub skipped: usize,
    pub skipped_members: Vec<String>,
    pub passed: bool,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {}: {}\n  corpus {} ({} members, {} skipped), {} checks\n",
            self.suite,
            self.title,
            if self.passed { "PASS" } else { "FAIL" },
            self.config.corpus,
            self.corpus_size,
            self.skipped,
            self.checks_run,
        );
        for f in &self.failures {
            out.push_str(&format!("  failure in {}: {}\n", f.group, f.witness));
        }
        if let Some(t) = &self.timing {
            out.push_str(&format!("  {} ms with {} jobs\n", t.elapsed_ms, t.jobs));
        }
        out
    }
}
