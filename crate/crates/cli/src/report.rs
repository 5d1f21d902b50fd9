//! `ren report`: per-graph invariants with field-level skip reasons.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::time::Instant;

use anyhow::Result;
use clap::{Args, ValueEnum};
use serde::Serialize;

use ren_core::chromatic::{
    chi_minus_colouring, chromatic_number, chromatic_profile, rainbow_number_range, ChromaticProfile, Colouring,
};
use ren_core::graph::write_graph6;
use ren_core::jcolor::{j_number, j_star_number, JWitness};
use ren_core::ren::{ren_exact, ren_upper_bound, RenBound, RenResult, MAX_REN_ORDER};
use ren_core::sequences::{sequence_under, ChromaticDegreeSequence};
use ren_core::Graph;

use crate::input::{resolve, Input};
use crate::table::{list, write_aligned};
use crate::{Format, EXIT_OK, SCHEMA};

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Family specs (`cycle:5`), graph6 strings, `@file.g6`, or `-` for stdin.
    #[arg(required = true)]
    inputs: Vec<String>,

    /// Restrict to these computations (comma separated).
    #[arg(long, value_enum, value_delimiter = ',')]
    only: Vec<Part>,

    /// Skip every computation on graphs with more vertices than this.
    #[arg(long)]
    max_order: Option<usize>,

    /// Also compute the range of r_χ over all χ-colourings.
    #[arg(long)]
    exhaustive: bool,

    /// Include per-stage wall-clock timings (not reproducible across runs).
    #[arg(long)]
    timings: bool,
}

impl ReportArgs {
    pub fn reads_stdin(&self) -> bool {
        self.inputs.iter().any(|i| i == "-")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum Part {
    Chi,
    ChiMinus,
    J,
    JStar,
    Ren,
    Profile,
    Sequence,
}

/// A computed value, or why it was not computed.
#[derive(Debug, Serialize)]
#[serde(untagged)]
enum Field<T> {
    Value(T),
    Skipped { skipped: String },
}

impl<T> Field<T> {
    fn from_result(r: ren_core::Result<T>) -> Self {
        match r {
            Ok(v) => Field::Value(v),
            Err(e) => Field::Skipped { skipped: e.to_string() },
        }
    }
}

#[derive(Debug, Serialize)]
struct ChiMinus {
    theta: Vec<usize>,
    colouring: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct JOutcome {
    /// `None` when the graph has no such colouring.
    value: Option<usize>,
    colouring: Option<Vec<usize>>,
}

impl From<Option<JWitness>> for JOutcome {
    fn from(w: Option<JWitness>) -> Self {
        JOutcome {
            value: w.as_ref().map(|w| w.k),
            colouring: w.map(|w| w.colouring.assignment().to_vec()),
        }
    }
}

#[derive(Debug, Serialize)]
struct RenOutcome {
    ren: usize,
    removed: Vec<usize>,
    surviving_vertices: Vec<usize>,
    /// J-colouring of the survivors, listed in `surviving_vertices` order.
    surviving_colouring: Vec<usize>,
}

impl From<RenResult> for RenOutcome {
    fn from(r: RenResult) -> Self {
        RenOutcome {
            ren: r.ren,
            removed: r.removed,
            surviving_vertices: r.surviving_vertices,
            surviving_colouring: r.surviving_witness.colouring.assignment().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
struct Profile {
    #[serde(flatten)]
    profile: ChromaticProfile,
    #[serde(skip_serializing_if = "Option::is_none")]
    rainbow_number_range: Option<Field<(usize, usize)>>,
}

#[derive(Debug, Serialize)]
struct Report {
    schema: u32,
    input: String,
    graph6: String,
    order: usize,
    size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<Field<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi_minus: Option<Field<ChiMinus>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<Field<JOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j_star: Option<Field<JOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ren: Option<Field<RenOutcome>>,
    /// Greedy bound, given only when the exact value is out of reach.
    #[serde(skip_serializing_if = "Option::is_none")]
    ren_upper_bound: Option<RenBound>,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile: Option<Field<Profile>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sequence: Option<Field<ChromaticDegreeSequence>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<BTreeMap<&'static str, f64>>,
}

struct Stopwatch {
    enabled: bool,
    laps: BTreeMap<&'static str, f64>,
}

impl Stopwatch {
    fn time<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let value = f();
        if self.enabled {
            self.laps.insert(stage, start.elapsed().as_secs_f64() * 1e3);
        }
        value
    }
}

fn build_report(input: &Input, args: &ReportArgs) -> Report {
    let g: &Graph = &input.graph;
    let wants = |p: Part| args.only.is_empty() || args.only.contains(&p);
    let mut report = Report {
        schema: SCHEMA,
        input: input.descriptor.clone(),
        graph6: write_graph6(g),
        order: g.order(),
        size: g.size(),
        chi: None,
        chi_minus: None,
        j: None,
        j_star: None,
        ren: None,
        ren_upper_bound: None,
        profile: None,
        sequence: None,
        timings_ms: None,
    };
    let mut clock = Stopwatch {
        enabled: args.timings,
        laps: BTreeMap::new(),
    };

    if let Some(max) = args.max_order.filter(|&max| g.order() > max) {
        let reason = format!("order {} exceeds --max-order {max}", g.order());
        fn skip<T>(on: bool, reason: &str) -> Option<Field<T>> {
            on.then(|| Field::Skipped {
                skipped: reason.to_string(),
            })
        }
        report.chi = skip(wants(Part::Chi), &reason);
        report.chi_minus = skip(wants(Part::ChiMinus), &reason);
        report.j = skip(wants(Part::J), &reason);
        report.j_star = skip(wants(Part::JStar), &reason);
        report.ren = skip(wants(Part::Ren), &reason);
        report.profile = skip(wants(Part::Profile), &reason);
        report.sequence = skip(wants(Part::Sequence), &reason);
        return report;
    }

    if wants(Part::Chi) {
        report.chi = Some(clock.time("chi", || Field::from_result(chromatic_number(g))));
    }
    let needs_chi_minus = wants(Part::ChiMinus) || wants(Part::Profile) || wants(Part::Sequence);
    let canonical: Option<ren_core::Result<Colouring>> =
        needs_chi_minus.then(|| clock.time("chi_minus", || chi_minus_colouring(g)));
    if wants(Part::ChiMinus) {
        report.chi_minus = canonical.as_ref().map(|c| match c {
            Ok(c) => Field::Value(ChiMinus {
                theta: c.theta().to_vec(),
                colouring: c.assignment().to_vec(),
            }),
            Err(e) => Field::Skipped { skipped: e.to_string() },
        });
    }
    if wants(Part::J) {
        report.j = Some(clock.time("j", || Field::from_result(j_number(g).map(JOutcome::from))));
    }
    if wants(Part::JStar) {
        report.j_star = Some(clock.time("j_star", || Field::from_result(j_star_number(g).map(JOutcome::from))));
    }
    if wants(Part::Ren) {
        let exact = clock.time("ren", || Field::from_result(ren_exact(g).map(RenOutcome::from)));
        if g.order() > MAX_REN_ORDER {
            report.ren_upper_bound = clock.time("ren_upper_bound", || ren_upper_bound(g).ok());
        }
        report.ren = Some(exact);
    }
    fn with_canonical<T>(
        canonical: &Option<ren_core::Result<Colouring>>,
        f: impl FnOnce(&Colouring) -> ren_core::Result<T>,
    ) -> ren_core::Result<T> {
        match canonical {
            Some(Ok(c)) => f(c),
            Some(Err(e)) => Err(e.clone()),
            None => unreachable!("canonical colouring computed when needed"),
        }
    }
    if wants(Part::Profile) {
        let exhaustive = args.exhaustive;
        report.profile = Some(clock.time("profile", || {
            Field::from_result(with_canonical(&canonical, |c| {
                Ok(Profile {
                    profile: chromatic_profile(g, c)?,
                    rainbow_number_range: exhaustive.then(|| Field::from_result(rainbow_number_range(g))),
                })
            }))
        }));
    }
    if wants(Part::Sequence) {
        report.sequence = Some(clock.time("sequence", || {
            Field::from_result(with_canonical(&canonical, |c| sequence_under(g, c)))
        }));
    }
    if args.timings {
        report.timings_ms = Some(clock.laps);
    }
    report
}

fn show<T>(field: &Field<T>, f: impl Fn(&T) -> String) -> String {
    match field {
        Field::Value(v) => f(v),
        Field::Skipped { skipped } => format!("skipped: {skipped}"),
    }
}

fn show_j(j: &JOutcome) -> String {
    match (&j.value, &j.colouring) {
        (Some(k), Some(c)) => format!("{k} (colouring {})", list(c)),
        _ => "none".to_string(),
    }
}

fn with_removed(count: usize, removed: &[usize]) -> String {
    if removed.is_empty() {
        count.to_string()
    } else {
        format!("{count} (remove {})", list(removed))
    }
}

fn table_rows(r: &Report) -> Vec<Vec<String>> {
    let mut rows = vec![
        vec!["input".into(), r.input.clone()],
        vec!["graph6".into(), r.graph6.clone()],
        vec!["order".into(), r.order.to_string()],
        vec!["size".into(), r.size.to_string()],
    ];
    let mut push = |key: &str, value: String| rows.push(vec![key.to_string(), value]);
    if let Some(f) = &r.chi {
        push("chi", show(f, usize::to_string));
    }
    if let Some(f) = &r.chi_minus {
        push("theta", show(f, |c| list(&c.theta)));
        push("chi-minus", show(f, |c| list(&c.colouring)));
    }
    if let Some(f) = &r.j {
        push("J", show(f, show_j));
    }
    if let Some(f) = &r.j_star {
        push("J*", show(f, show_j));
    }
    if let Some(f) = &r.ren {
        push("ren", show(f, |o| with_removed(o.ren, &o.removed)));
    }
    if let Some(b) = &r.ren_upper_bound {
        push("ren bound", with_removed(b.bound, &b.removed));
    }
    if let Some(f) = &r.profile {
        push("chromatic degrees", show(f, |p| list(&p.profile.chromatic_degrees)));
        push("r_chi", show(f, |p| p.profile.rainbow_number.to_string()));
        push("min d_chi", show(f, |p| p.profile.min_chromatic_degree.to_string()));
        push("max d_chi", show(f, |p| p.profile.max_chromatic_degree.to_string()));
        push("d(G,chi)", show(f, |p| p.profile.chromatic_diameter.to_string()));
        push("chromatic null", show(f, |p| p.profile.chromatic_null.to_string()));
        if let Field::Value(Profile {
            rainbow_number_range: Some(range),
            ..
        }) = f
        {
            push("r_chi range", show(range, |(lo, hi)| format!("{lo}..{hi}")));
        }
    }
    if let Some(f) = &r.sequence {
        push("sequence", show(f, |s| s.to_string()));
    }
    if let Some(t) = &r.timings_ms {
        for (stage, ms) in t {
            push(&format!("time {stage}"), format!("{ms:.3} ms"));
        }
    }
    rows
}

pub fn run(
    args: &ReportArgs,
    format: Format,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<i32> {
    // parse everything up front so a bad operand produces no partial output
    let mut inputs = Vec::new();
    for operand in &args.inputs {
        inputs.extend(resolve(operand, stdin)?);
    }
    for (i, input) in inputs.iter().enumerate() {
        let report = build_report(input, args);
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&report)?)?,
            Format::Table => {
                if i > 0 {
                    writeln!(out)?;
                }
                write_aligned(out, &table_rows(&report))?;
            }
        }
    }
    Ok(EXIT_OK)
}
