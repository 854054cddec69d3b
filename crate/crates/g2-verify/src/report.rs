//! Check records, summaries, exit codes and the JSON/CSV writers.

use crate::config::{Format, RunConfig};
use g2_closed::Variant;
use serde::Serialize;
use std::io::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    PaperFormula,
    CorrectedVariant,
}

impl From<Variant> for Provenance {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Printed => Provenance::PaperFormula,
            Variant::Corrected => Provenance::CorrectedVariant,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub provenance: Provenance,
    pub ms: u128,
}

/// Result of one instance: a comparison, or an oracle that ran out of budget.
#[derive(Clone, Debug)]
pub enum Outcome {
    Done(Check),
    OverBudget { id: String, instance: String, detail: String },
}

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub id: String,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed_printed: usize,
    pub failed_corrected: usize,
    pub over_budget: Vec<Skipped>,
    pub exit_code: i32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: RunConfig,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

impl Report {
    pub fn new(config: RunConfig, outcomes: Vec<Outcome>) -> Self {
        let mut checks = Vec::new();
        let mut over_budget = Vec::new();
        for o in outcomes {
            match o {
                Outcome::Done(c) => checks.push(c),
                Outcome::OverBudget { id, instance, detail } => over_budget.push(Skipped { id, instance, detail }),
            }
        }
        let failed = |p: Provenance| checks.iter().filter(|c| !c.equal && c.provenance == p).count();
        let (failed_printed, failed_corrected) = (failed(Provenance::PaperFormula), failed(Provenance::CorrectedVariant));
        let exit_code = if failed_printed + failed_corrected > 0 {
            EXIT_FAILURE
        } else if !over_budget.is_empty() {
            EXIT_BUDGET
        } else {
            EXIT_OK
        };
        let summary = Summary {
            total: checks.len(),
            passed: checks.iter().filter(|c| c.equal).count(),
            failed_printed,
            failed_corrected,
            over_budget,
            exit_code,
        };
        Self {
            version: env!("CARGO_PKG_VERSION"),
            config,
            checks,
            summary,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.equal)
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["id", "instance", "branch", "value", "equal", "provenance", "ms"])?;
                for c in &self.checks {
                    for (branch, value) in [("lhs", &c.lhs), ("rhs", &c.rhs)] {
                        let prov = serde_json::to_value(c.provenance)?;
                        w.write_record([
                            c.id.as_str(),
                            c.instance.as_str(),
                            branch,
                            value.as_str(),
                            if c.equal { "true" } else { "false" },
                            prov.as_str().unwrap_or_default(),
                            &c.ms.to_string(),
                        ])?;
                    }
                }
                w.flush()
            }
        }
    }
}
