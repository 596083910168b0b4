//! Plain-text tables, the FINDING block, and JSON/CSV files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use sylowlab_core::checks::{CheckReport, Status};

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> u8 {
    u8::from(reports.iter().any(|r| r.status == Status::Fail))
}

/// Decimal numbers longer than this are abbreviated in tables (never in
/// JSON).
const MAX_DIGITS: usize = 24;

pub fn short(n: &impl ToString) -> String {
    let s = n.to_string();
    if s.len() <= MAX_DIGITS {
        s
    } else {
        format!("{}..{} ({} digits)", &s[..8], &s[s.len() - 4..], s.len())
    }
}

fn finding_block(reports: &[CheckReport]) -> String {
    let violated: Vec<&CheckReport> = reports
        .iter()
        .filter(|r| r.status == Status::ReportOnlyViolated)
        .collect();
    let mut out = String::new();
    if violated.is_empty() {
        return out;
    }
    out.push_str("==================== FINDING ====================\n");
    out.push_str("A report-only inequality is violated. This is a candidate counterexample.\n");
    for r in violated {
        let _ = writeln!(
            out,
            "  {} {} p={}: lhs {} rhs {}; {}",
            r.check_id, r.group_name, r.prime, r.lhs, r.rhs, r.detail
        );
    }
    out.push_str("=================================================\n\n");
    out
}

fn counts(reports: &[CheckReport]) -> BTreeMap<Status, usize> {
    let mut c = BTreeMap::new();
    for r in reports {
        *c.entry(r.status).or_insert(0) += 1;
    }
    c
}

fn summary_line(reports: &[CheckReport]) -> String {
    let c = counts(reports);
    let parts: Vec<String> = [
        Status::Pass,
        Status::Fail,
        Status::ReportOnlyHolds,
        Status::ReportOnlyViolated,
        Status::Skipped,
    ]
    .iter()
    .map(|s| format!("{} {}", c.get(s).copied().unwrap_or(0), s))
    .collect();
    format!("{} checks: {}\n", reports.len(), parts.join(", "))
}

/// Aligns whitespace-separated columns; the last column is left ragged.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0; columns];
    for row in rows {
        for (i, cell) in row.iter().enumerate().take(columns.saturating_sub(1)) {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 < row.len() {
                let _ = write!(line, "{:<w$}  ", cell, w = widths[i]);
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn report_table(reports: &[CheckReport]) -> String {
    let mut rows = vec![["check", "group", "p", "status", "lhs", "rhs", "detail"]
        .map(String::from)
        .to_vec()];
    for r in reports {
        rows.push(vec![
            r.check_id.clone(),
            r.group_name.clone(),
            r.prime.to_string(),
            r.status.to_string(),
            short(&r.lhs),
            short(&r.rhs),
            r.detail.clone(),
        ]);
    }
    format!(
        "{}{}\n{}",
        finding_block(reports),
        aligned(&rows),
        summary_line(reports)
    )
}

/// One row per `(group, p)` with status counts, plus every non-PASS line.
pub fn sweep_table(reports: &[CheckReport]) -> String {
    let mut per: BTreeMap<(String, u64), BTreeMap<Status, usize>> = BTreeMap::new();
    let mut order: Vec<(String, u64)> = Vec::new();
    for r in reports {
        let key = (r.group_name.clone(), r.prime);
        if !per.contains_key(&key) {
            order.push(key.clone());
        }
        *per.entry(key).or_default().entry(r.status).or_insert(0) += 1;
    }
    order.sort_by_key(|(g, p)| {
        let idx = sylowlab_core::catalog::names()
            .position(|n| n == g)
            .unwrap_or(usize::MAX);
        (idx, g.clone(), *p)
    });
    let mut rows = vec![["group", "p", "PASS", "FAIL", "REPORT_ONLY", "SKIPPED"]
        .map(String::from)
        .to_vec()];
    for key in &order {
        let c = &per[key];
        let n = |s: Status| c.get(&s).copied().unwrap_or(0);
        let report_only = match (n(Status::ReportOnlyHolds), n(Status::ReportOnlyViolated)) {
            (0, 0) => "0".to_string(),
            (h, 0) => format!("{h} holds"),
            (h, v) => format!("{h} holds, {v} VIOLATED"),
        };
        rows.push(vec![
            key.0.clone(),
            key.1.to_string(),
            n(Status::Pass).to_string(),
            n(Status::Fail).to_string(),
            report_only,
            n(Status::Skipped).to_string(),
        ]);
    }
    let mut out = format!("{}{}", finding_block(reports), aligned(&rows));
    let failures: Vec<&CheckReport> = reports.iter().filter(|r| r.status == Status::Fail).collect();
    if !failures.is_empty() {
        out.push_str("\nFailures:\n");
        for r in failures {
            let _ = writeln!(out, "  {} {} p={}: {}", r.check_id, r.group_name, r.prime, r.detail);
        }
    }
    out.push('\n');
    out.push_str(&summary_line(reports));
    out
}

pub fn write_outputs(reports: &[CheckReport], json: Option<&Path>, csv: Option<&Path>) -> Result<()> {
    if let Some(path) = json {
        let mut text = serde_json::to_string_pretty(reports)?;
        text.push('\n');
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = csv {
        let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        w.write_record(["check_id", "group", "p", "status"])?;
        for r in reports {
            w.write_record([
                r.check_id.as_str(),
                r.group_name.as_str(),
                &r.prime.to_string(),
                r.status.as_str(),
            ])?;
        }
        w.flush()?;
    }
    Ok(())
}
