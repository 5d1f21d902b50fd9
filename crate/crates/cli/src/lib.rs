//! The `ren` command-line tool: per-graph reports, closed-form verification
//! sweeps and small-graph surveys.

use std::ffi::OsString;
use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};

mod input;
mod report;
mod survey;
mod table;
mod verify;

/// Version of the JSON output layout.
pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ren", version, about = "J-colourings, ren(G) and chromatic profiles of small graphs")]
pub struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants for graphs given as family specs or graph6.
    Report(report::ReportArgs),
    /// Compare closed-form predictions against the exact solvers.
    Verify(verify::VerifyArgs),
    /// Tabulate every graph of a given order.
    Survey(survey::SurveyArgs),
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(jobs);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };

    // the worker pool needs Send handles, so stdin is drained up front and
    // output is buffered
    let reads_stdin = match &cli.command {
        Command::Report(a) => a.reads_stdin(),
        Command::Survey(a) => a.reads_stdin(),
        Command::Verify(_) => false,
    };
    let mut piped = String::new();
    if reads_stdin {
        if let Err(e) = stdin.read_to_string(&mut piped) {
            let _ = writeln!(err, "error: reading stdin: {e}");
            return EXIT_USAGE;
        }
    }
    let format = cli.format;
    let (mut buf_out, mut buf_err) = (Vec::new(), Vec::new());
    let result = pool.install(|| {
        let mut input = piped.as_bytes();
        match &cli.command {
            Command::Report(a) => report::run(a, format, &mut input, &mut buf_out),
            Command::Verify(a) => verify::run(a, format, &mut buf_out),
            Command::Survey(a) => survey::run(a, format, &mut input, &mut buf_out, &mut buf_err),
        }
    });
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(buf_err, "error: {e:#}");
            EXIT_USAGE
        }
    };
    if code != EXIT_USAGE {
        if let Err(e) = out.write_all(&buf_out) {
            let _ = writeln!(err, "error: writing output: {e}");
            return EXIT_USAGE;
        }
    }
    let _ = err.write_all(&buf_err);
    code
}
