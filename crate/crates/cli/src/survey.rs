//! `ren survey`: every graph of an order, or graphs from a graph6 file.

use std::io::{BufRead, Write};

use anyhow::{bail, Result};
use clap::Args;
use serde::Serialize;

use ren_core::graph::{enumerate_graphs, MAX_ENUM_ORDER};
use ren_core::ren::MAX_REN_ORDER;
use ren_core::sequences::{survey_graphs, SurveyRow, SurveySummary};
use ren_core::Graph;

use crate::input::read_source;
use crate::table::write_aligned;
use crate::{Format, EXIT_OK, SCHEMA};

#[derive(Debug, Args)]
pub struct SurveyArgs {
    /// Order to enumerate (1..=6); with --input, keeps only graphs of this order.
    n: Option<usize>,

    /// Only connected graphs.
    #[arg(long)]
    connected: bool,

    /// Survey graphs from a graph6 file (`-` for stdin) instead of enumerating.
    #[arg(long)]
    input: Option<String>,

    /// With --input, skip graphs with more vertices than this.
    #[arg(long)]
    max_order: Option<usize>,
}

impl SurveyArgs {
    pub fn reads_stdin(&self) -> bool {
        self.input.as_deref() == Some("-")
    }
}

#[derive(Serialize)]
struct RowLine<'a> {
    schema: u32,
    #[serde(flatten)]
    row: &'a SurveyRow,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    schema: u32,
    summary: &'a SurveySummary,
}

fn collect_graphs(args: &SurveyArgs, stdin: &mut dyn BufRead, err: &mut dyn Write) -> Result<Vec<Graph>> {
    let Some(path) = &args.input else {
        let Some(n) = args.n else {
            bail!("survey needs an order or --input");
        };
        if !(1..=MAX_ENUM_ORDER).contains(&n) {
            bail!("survey order must be in 1..={MAX_ENUM_ORDER} (use --input for larger graphs)");
        }
        return Ok(enumerate_graphs(n, args.connected)?.collect());
    };
    let cap = args.max_order.unwrap_or(MAX_REN_ORDER).min(MAX_REN_ORDER);
    let mut graphs = Vec::new();
    for input in read_source(path, stdin)? {
        let g = input.graph;
        if args.n.is_some_and(|n| n != g.order()) || (args.connected && !g.is_connected()) {
            continue;
        }
        if g.order() == 0 || g.order() > cap {
            writeln!(err, "skipping {}: order {} outside 1..={cap}", input.descriptor, g.order())?;
            continue;
        }
        graphs.push(g);
    }
    Ok(graphs)
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn run(
    args: &SurveyArgs,
    format: Format,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let graphs = collect_graphs(args, stdin, err)?;
    let survey = survey_graphs(&graphs)?;

    match format {
        Format::Json => {
            for row in &survey.rows {
                writeln!(out, "{}", serde_json::to_string(&RowLine { schema: SCHEMA, row })?)?;
            }
            let trailer = SummaryLine {
                schema: SCHEMA,
                summary: &survey.summary,
            };
            writeln!(out, "{}", serde_json::to_string(&trailer)?)?;
        }
        Format::Table => {
            let mut rows = vec![[
                "graph6", "n", "m", "chi", "J", "ren", "r_chi", "min d_chi", "max d_chi", "d(G,chi)", "null",
            ]
            .map(String::from)
            .to_vec()];
            for r in &survey.rows {
                rows.push(vec![
                    r.graph6.clone(),
                    r.order.to_string(),
                    r.size.to_string(),
                    r.chi.to_string(),
                    r.j.map_or_else(|| "-".to_string(), |j| j.to_string()),
                    r.ren.to_string(),
                    r.rainbow_number.to_string(),
                    r.min_chromatic_degree.to_string(),
                    r.max_chromatic_degree.to_string(),
                    r.chromatic_diameter.to_string(),
                    yes_no(r.chromatic_null),
                ]);
            }
            write_aligned(out, &rows)?;

            let s = &survey.summary;
            writeln!(out, "\n{} graphs, {} J-colourable", s.graphs, s.j_colourable)?;
            let mut joint = vec![["n", "ren", "r_chi", "count"].map(String::from).to_vec()];
            for j in &s.joint {
                joint.push(vec![
                    j.order.to_string(),
                    j.ren.to_string(),
                    j.rainbow_number.to_string(),
                    j.count.to_string(),
                ]);
            }
            write_aligned(out, &joint)?;
            writeln!(
                out,
                "\nJ-colourable but not chromatic-null: {}",
                s.null_claim_findings.len()
            )?;
            for g6 in &s.null_claim_findings {
                writeln!(out, "  {g6}")?;
            }
        }
    }
    Ok(EXIT_OK)
}
