//! Report assembly and serialization. JSON is the authoritative format;
//! CSV flattens witness directions into semicolon-joined decimals. Reports
//! carry no timestamps so identical configs and seeds produce identical
//! bytes.

use std::io::Write;

use serde::{Deserialize, Serialize};

use shadowgauge::inequalities::{CheckReport, Verdict};

/// One check outcome, tagged with the body (and pair partner) it belongs to.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportRow {
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub against: Option<String>,
    #[serde(flatten)]
    pub report: CheckReport,
}

impl ReportRow {
    pub fn new(subject: &str, against: Option<String>, report: CheckReport) -> Self {
        Self { subject: subject.to_string(), against, report }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn tally(rows: &[ReportRow]) -> Self {
        let mut summary = Summary::default();
        for row in rows {
            match row.report.verdict {
                Verdict::Passed => summary.passed += 1,
                Verdict::Failed => summary.failed += 1,
                Verdict::NotApplicable => summary.not_applicable += 1,
            }
        }
        summary
    }
}

/// Configuration echo embedded in each report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportConfig {
    pub seed: u64,
    pub coarse_samples: usize,
    pub restarts: usize,
    pub with_oracle: bool,
    pub bodies: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub config: ReportConfig,
    pub summary: Summary,
    pub reports: Vec<ReportRow>,
}

impl Report {
    pub fn to_json(&self) -> anyhow::Result<String> {
        let mut payload = serde_json::to_string_pretty(self)?;
        payload.push('\n');
        Ok(payload)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> anyhow::Result<()> {
        let mut csv = csv::Writer::from_writer(writer);
        csv.write_record([
            "subject",
            "against",
            "name",
            "lhs",
            "rhs",
            "gap",
            "epsilon_star",
            "witness_xi",
            "passed",
            "verdict",
            "tol_rel",
            "refined",
            "reason",
        ])?;
        for row in &self.reports {
            let r = &row.report;
            csv.write_record([
                row.subject.clone(),
                row.against.clone().unwrap_or_default(),
                enum_tag(&r.name)?,
                format!("{}", r.lhs),
                format!("{}", r.rhs),
                format!("{}", r.gap),
                r.epsilon_star.map(|e| format!("{e}")).unwrap_or_default(),
                r.witness_xi
                    .as_ref()
                    .map(|w| {
                        w.coords()
                            .iter()
                            .map(|c| format!("{c}"))
                            .collect::<Vec<_>>()
                            .join(";")
                    })
                    .unwrap_or_default(),
                r.passed.to_string(),
                enum_tag(&r.verdict)?,
                format!("{}", r.tolerances.tol_rel),
                r.tolerances.refined.to_string(),
                r.reason.clone().unwrap_or_default(),
            ])?;
        }
        csv.flush()?;
        Ok(())
    }
}

/// Serde tag of a unit enum variant ("hyperplane", "passed", ...).
fn enum_tag<T: Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_value(value)?
        .as_str()
        .map(str::to_string)
        .unwrap_or_default())
}
