//! Re-analysis of the embedded table.

use std::fmt::Write as _;

use qcsd_core::Family;

use crate::analyze::{analyze, AnalysisReport};
use crate::known::KnownParams;
use crate::table::{TableEntry, TABLE};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    /// Each string names one field as `field: expected X, computed Y`.
    Mismatch(Vec<String>),
    /// Length or ones count contradicts the table's own columns; not
    /// analyzed unless forced.
    DataSuspect,
}

#[derive(Debug, Clone)]
pub struct EntryResult {
    pub entry: TableEntry,
    pub status: Status,
    pub report: Option<AnalysisReport>,
}

#[derive(Debug, Clone, Default)]
pub struct VerifySummary {
    pub results: Vec<EntryResult>,
}

impl VerifySummary {
    pub fn passed(&self) -> usize {
        self.count(|s| matches!(s, Status::Pass))
    }

    pub fn failed(&self) -> usize {
        self.count(|s| matches!(s, Status::Mismatch(_)))
    }

    pub fn suspect(&self) -> usize {
        self.results
            .iter()
            .filter(|r| !r.entry.is_consistent())
            .count()
    }

    fn count(&self, pred: impl Fn(&Status) -> bool) -> usize {
        self.results.iter().filter(|r| pred(&r.status)).count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed() == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let e = &r.entry;
            let label = match &r.status {
                Status::Pass => "PASS".to_string(),
                Status::DataSuspect => "DATA_SUSPECT".to_string(),
                Status::Mismatch(why) => format!("FAIL ({})", why.join("; ")),
            };
            let timing = r
                .report
                .as_ref()
                .map(|rep| format!("  [{} ms]", rep.elapsed_ms))
                .unwrap_or_default();
            let _ = writeln!(
                s,
                "{:<16} K={:<2} ones={} beta={:<4} {label}{timing}",
                e.poly, e.window, e.ones, e.beta
            );
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} data-suspect",
            self.passed(),
            self.failed(),
            self.suspect()
        );
        s
    }
}

/// Compares a report with what the table claims for the entry.
pub fn compare(entry: &TableEntry, report: &AnalysisReport) -> Status {
    let mut why = Vec::new();
    let mut check = |field: &str, expected: String, computed: String| {
        if expected != computed {
            why.push(format!("{field}: expected {expected}, computed {computed}"));
        }
    };
    check("self_dual", "true".into(), report.self_dual.to_string());
    check("d", "Some(12)".into(), format!("{:?}", report.d));
    check(
        "beta",
        format!("Some({})", entry.beta),
        format!("{:?}", report.beta),
    );
    check("gamma", "Some(0)".into(), format!("{:?}", report.gamma));
    check(
        "family",
        Family::W70_1.to_string(),
        report.family.to_string(),
    );
    if why.is_empty() {
        Status::Pass
    } else {
        Status::Mismatch(why)
    }
}

/// Verifies the table entries whose `K` is in `windows` (all when `None`).
/// Suspect entries are analyzed and counted only when `force` is set.
pub fn verify_table(
    workers: usize,
    windows: Option<&[usize]>,
    force: bool,
    known: &KnownParams,
    progress: impl FnMut(&EntryResult),
) -> Result<VerifySummary, CliError> {
    let selected: Vec<TableEntry> = TABLE
        .iter()
        .filter(|e| windows.map_or(true, |w| w.contains(&e.window)))
        .copied()
        .collect();
    verify_entries(&selected, workers, force, known, progress)
}

pub fn verify_entries(
    entries: &[TableEntry],
    workers: usize,
    force: bool,
    known: &KnownParams,
    mut progress: impl FnMut(&EntryResult),
) -> Result<VerifySummary, CliError> {
    let mut summary = VerifySummary::default();
    for entry in entries {
        let result = if entry.is_consistent() || force {
            let report = analyze(entry.poly, 35, workers, known)?;
            EntryResult {
                entry: *entry,
                status: compare(entry, &report),
                report: Some(report),
            }
        } else {
            EntryResult {
                entry: *entry,
                status: Status::DataSuspect,
                report: None,
            }
        };
        progress(&result);
        summary.results.push(result);
    }
    Ok(summary)
}
