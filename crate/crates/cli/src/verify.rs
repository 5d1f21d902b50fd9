//! `ren verify`: closed-form predictions against the exact solvers.

use std::io::Write;

use anyhow::{Context, Result};
use clap::Args;
use serde::Serialize;

use ren_core::closed_forms::{verify, Status, Sweep, VerifyRow, VerifySummary};

use crate::table::write_aligned;
use crate::{Format, EXIT_DISAGREE, EXIT_OK, SCHEMA};

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Sweep description, e.g. `cycles 3..12`, `jahangir n=1 m=3..6`,
    /// `join cycle:5 cycle:5`.
    #[arg(required = true, num_args = 1..)]
    sweep: Vec<String>,

    /// Exit 0 even when some rows disagree.
    #[arg(long)]
    findings_ok: bool,
}

#[derive(Serialize)]
struct RowLine<'a> {
    schema: u32,
    #[serde(flatten)]
    row: &'a VerifyRow,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    schema: u32,
    summary: &'a VerifySummary,
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Agree => "agree",
        Status::Disagree => "DISAGREE",
        Status::NotApplicable => "n/a",
        Status::Error => "ERROR",
    }
}

pub fn run(args: &VerifyArgs, format: Format, out: &mut dyn Write) -> Result<i32> {
    let text = args.sweep.join(" ");
    let sweep: Sweep = text.parse().with_context(|| format!("sweep {text:?}"))?;
    let report = verify(&sweep);

    match format {
        Format::Json => {
            for row in &report.rows {
                writeln!(out, "{}", serde_json::to_string(&RowLine { schema: SCHEMA, row })?)?;
            }
            let trailer = SummaryLine {
                schema: SCHEMA,
                summary: &report.summary,
            };
            writeln!(out, "{}", serde_json::to_string(&trailer)?)?;
        }
        Format::Table => {
            let mut rows = vec![["instance", "quantity", "predicted", "exact", "status", "source", "note"]
                .map(String::from)
                .to_vec()];
            for r in &report.rows {
                let note = match (&r.note, &r.error) {
                    (_, Some(e)) => e.clone(),
                    (Some(n), None) => n.clone(),
                    (None, None) => String::new(),
                };
                rows.push(vec![
                    r.instance.clone(),
                    r.quantity.to_string(),
                    r.predicted.to_string(),
                    r.exact.map_or_else(|| "-".to_string(), |e| e.to_string()),
                    status_word(r.status).to_string(),
                    r.source.clone(),
                    note,
                ]);
            }
            write_aligned(out, &rows)?;
            let s = &report.summary;
            writeln!(
                out,
                "\n{} rows: {} agree, {} disagree, {} not applicable, {} errors",
                s.rows, s.agree, s.disagree, s.not_applicable, s.errors
            )?;
        }
    }

    let clean = report.summary.disagree == 0 && report.summary.errors == 0;
    Ok(if clean || args.findings_ok { EXIT_OK } else { EXIT_DISAGREE })
}
