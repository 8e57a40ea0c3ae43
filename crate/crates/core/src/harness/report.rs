//! Report rendering: human tables and the machine-readable JSON stream.

use std::fmt::Write as _;

use crate::error::{EngineError, Result};
use crate::resolution::BettiTable;

use super::batch::{BettiEntry, InstanceRecord, InstanceStatus, RunReport};

/// Render a Betti table in the usual grid layout: columns are homological
/// indices, rows are `j - i`.
pub fn betti_grid(table: &BettiTable) -> String {
    if table.is_empty() {
        return "empty betti table\n".to_string();
    }
    let pd = table.pd().expect("nonempty");
    let slopes: Vec<i64> = {
        let mut s: Vec<i64> = table.entries().keys().map(|&(i, j)| j - i as i64).collect();
        s.sort();
        s.dedup();
        let (lo, hi) = (*s.first().unwrap(), *s.last().unwrap());
        (lo..=hi).collect()
    };
    let mut cells: Vec<Vec<String>> = Vec::new();
    let mut header = vec![String::new()];
    header.extend((0..=pd).map(|i| i.to_string()));
    cells.push(header);
    let mut total = vec!["total:".to_string()];
    total.extend((0..=pd).map(|i| table.total_at(i).to_string()));
    cells.push(total);
    for &s in &slopes {
        let mut row = vec![format!("{s}:")];
        for i in 0..=pd {
            let b = table.get(i, s + i as i64);
            row.push(if b == 0 { ".".to_string() } else { b.to_string() });
        }
        cells.push(row);
    }
    let widths: Vec<usize> = (0..=pd + 1)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        for (c, cell) in row.iter().enumerate() {
            let _ = write!(out, "{:>width$} ", cell, width = widths[c]);
        }
        out.pop();
        out.push('\n');
    }
    out
}

fn betti_grid_from_entries(entries: &[BettiEntry]) -> String {
    let map = entries
        .iter()
        .map(|e| ((e.i, e.j), e.beta))
        .collect::<std::collections::BTreeMap<_, _>>();
    betti_grid(&BettiTable::from_entries(map))
}

/// Serialize a run report. Formats: `table` (human) or `json` (machine).
pub fn emit_report(report: &RunReport, format: &str) -> Result<String> {
    match format {
        "json" => serde_json::to_string_pretty(report)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| EngineError::Internal(format!("serialization failed: {e}"))),
        "table" => Ok(render_table(report)),
        other => Err(EngineError::UnknownFormat(other.to_string())),
    }
}

fn render_table(report: &RunReport) -> String {
    let mut out = String::new();
    let env = &report.env;
    let _ = writeln!(
        out,
        "run: char={} order={} seed={} version={}",
        env.characteristic, env.order, env.seed, env.version
    );
    for rec in &report.instances {
        render_instance(&mut out, rec);
    }
    let s = &report.summary;
    let _ = writeln!(out, "summary:");
    let _ = writeln!(
        out,
        "  instances: attempted {} / completed {} / skipped {}",
        s.attempted, s.completed, s.skipped
    );
    let _ = writeln!(
        out,
        "  bounds: asserted-pass {} / asserted-violations {} / hypothesis-skipped {} / probes {}",
        s.asserted_pass, s.asserted_violations, s.hypothesis_skipped, s.probes
    );
    let _ = writeln!(
        out,
        "  candidates {} / structural failures {} / oracle mismatches {}",
        s.candidates, s.structural_failures, s.oracle_mismatches
    );
    out
}

fn render_instance(out: &mut String, rec: &InstanceRecord) {
    let _ = writeln!(out, "---- instance {} ----", rec.index);
    match (&rec.status, &rec.analysis) {
        (InstanceStatus::Skipped { reason }, _) => {
            let _ = writeln!(out, "  skipped: {reason}");
        }
        (InstanceStatus::Completed, Some(a)) => {
            for line in a.input.lines() {
                let _ = writeln!(out, "  | {line}");
            }
            if a.zero_module {
                let _ = writeln!(out, "  zero module (unit relations)");
                return;
            }
            if let Some(inv) = &a.invariants {
                let _ = writeln!(
                    out,
                    "  dim {}  codim {}  depth {}  pd {}  cm {}  char {}",
                    inv.dim, inv.codim, inv.depth, inv.pd, inv.is_cm, inv.char_used
                );
            }
            if let Some(p) = &a.profile {
                let ts: Vec<String> = p.max_shifts.iter().map(|t| t.to_string()).collect();
                let _ = writeln!(out, "  T = ({})  reg {}", ts.join(", "), p.reg);
            }
            for line in betti_grid_from_entries(&a.betti).lines() {
                let _ = writeln!(out, "    {line}");
            }
            if let Some(j) = &a.j_used {
                let _ = writeln!(
                    out,
                    "  J ({}): {}  codim {}  cm {}  contained {}",
                    j.source,
                    j.gens.join("; "),
                    j.codim,
                    j.is_cm,
                    j.contained
                );
            }
            if !a.bounds.is_empty() {
                let _ = writeln!(
                    out,
                    "  {:<10} {:<6} {:>5} {:>5} {:>6}  witness",
                    "bound", "state", "lhs", "rhs", "slack"
                );
                for b in &a.bounds {
                    let state = if b.violation {
                        "VIOL"
                    } else if b.asserted {
                        "pass"
                    } else if !b.hypotheses_met {
                        "skip"
                    } else if b.candidate {
                        "CAND"
                    } else {
                        "probe"
                    };
                    let witness = match &b.witness {
                        None => "-".to_string(),
                        Some(w) => match &w.weights {
                            None => format!("i={}", w.index),
                            Some(a) => format!("i={} a={:?}", w.index, a.0),
                        },
                    };
                    let _ = writeln!(
                        out,
                        "  {:<10} {:<6} {:>5} {:>5} {:>6}  {}",
                        b.bound.name(),
                        state,
                        b.lhs,
                        b.rhs,
                        b.slack,
                        witness
                    );
                }
            }
            if let Some(ses) = &a.ses {
                let _ = writeln!(out, "  ses: {}", if ses.all_hold { "ok" } else { "FAILED" });
            }
            let structural_ok = a.structural.iter().all(|c| c.pass);
            let _ = writeln!(out, "  structural: {}", if structural_ok { "ok" } else { "FAILED" });
            for c in &a.structural {
                if !c.pass {
                    let _ = writeln!(out, "    FAILED {}", c.name);
                }
            }
            if let Some(m) = a.oracle_match {
                let _ = writeln!(out, "  oracle: {}", if m { "match" } else { "MISMATCH" });
            }
            for note in &a.notes {
                let _ = writeln!(out, "  note: {note}");
            }
            for cand in &a.candidates {
                let _ = writeln!(
                    out,
                    "  CANDIDATE {} at i={}; re-verification:",
                    cand.bound.name(),
                    cand.index
                );
                for r in &cand.results {
                    let _ = writeln!(
                        out,
                        "    char {}: {} (lhs {:?} rhs {:?})",
                        r.characteristic, r.status, r.lhs, r.rhs
                    );
                }
                for line in cand.recreation.lines() {
                    let _ = writeln!(out, "    > {line}");
                }
            }
        }
        _ => {
            let _ = writeln!(out, "  (no analysis)");
        }
    }
}
