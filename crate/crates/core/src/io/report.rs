//! Verdict records and their JSON-lines / table serialization.

use serde::{Deserialize, Serialize};

use crate::conditions::{ConditionReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub graph_id: usize,
    pub condition: String,
    /// `None` when the graph could not be evaluated.
    pub verdict: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

impl VerdictRecord {
    pub fn from_report(graph_id: usize, report: ConditionReport) -> Self {
        VerdictRecord {
            graph_id,
            condition: report.condition,
            verdict: Some(report.verdict),
            witness: report.violations,
            error: None,
            elapsed_us: None,
        }
    }

    pub fn error(graph_id: usize, condition: impl Into<String>, error: impl ToString) -> Self {
        VerdictRecord {
            graph_id,
            condition: condition.into(),
            verdict: None,
            witness: Vec::new(),
            error: Some(error.to_string()),
            elapsed_us: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub records: usize,
    #[serde(rename = "true")]
    pub true_count: usize,
    #[serde(rename = "false")]
    pub false_count: usize,
    #[serde(rename = "error")]
    pub error_count: usize,
}

impl ReportSummary {
    pub fn of(records: &[VerdictRecord]) -> Self {
        let mut s = ReportSummary { records: records.len(), ..Default::default() };
        for r in records {
            match r.verdict {
                Some(true) => s.true_count += 1,
                Some(false) => s.false_count += 1,
                None => s.error_count += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}

/// Serializes records ordered by graph id (stable for equal ids), followed
/// by a summary. JSON output is one object per line with the summary last.
pub fn write_report(records: &[VerdictRecord], format: ReportFormat) -> String {
    let mut sorted: Vec<&VerdictRecord> = records.iter().collect();
    sorted.sort_by_key(|r| r.graph_id);
    let summary = ReportSummary::of(records);
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            for r in sorted {
                out.push_str(&serde_json::to_string(r).expect("record serializes"));
                out.push('\n');
            }
            #[derive(Serialize)]
            struct Trailer {
                summary: ReportSummary,
            }
            out.push_str(&serde_json::to_string(&Trailer { summary }).expect("summary serializes"));
            out.push('\n');
        }
        ReportFormat::Table => {
            out.push_str(&format!("{:>8}  {:<24} {:<7} witness\n", "graph", "condition", "verdict"));
            for r in sorted {
                let verdict = match r.verdict {
                    Some(true) => "true",
                    Some(false) => "false",
                    None => "error",
                };
                let witness = match (&r.error, r.witness.first()) {
                    (Some(e), _) => e.clone(),
                    (None, Some(v)) => v.to_string(),
                    (None, None) => "-".into(),
                };
                out.push_str(&format!("{:>8}  {:<24} {:<7} {}\n", r.graph_id, r.condition, verdict, witness));
            }
            out.push_str(&format!(
                "summary: {} records, {} true, {} false, {} error\n",
                summary.records, summary.true_count, summary.false_count, summary.error_count
            ));
        }
    }
    out
}
