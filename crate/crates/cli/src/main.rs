use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use genus3_euler::lowgenus::{format_table, load_table};
use genus3_euler::verify::{self, VerifyOptions};
use genus3_euler::{Error, Evaluator, H3Provider, M2Provider, RowSelection};

mod record;

use record::{evaluate, parse_weight, rows_up_to, Format, Space};

/// Exact Euler characteristics of symplectic local systems in genus 3.
#[derive(Parser, Debug)]
#[command(name = "euler3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone, Default)]
struct Tables {
    /// Extra hyperelliptic values, lines `a,b,c,value`
    #[arg(long, value_name = "FILE")]
    h3_table: Option<PathBuf>,
    /// Extra genus-2 values, lines `a,b,value`
    #[arg(long, value_name = "FILE")]
    m2_table: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one space at one weight
    Eval {
        space: Space,
        /// `a,b,c` (a single integer for a1, `a,b` for m2)
        lambda: String,
        /// Print the four terms of the abelian-threefold value
        #[arg(long)]
        breakdown: bool,
        #[arg(long, value_enum, default_value_t = EvalFormat::Text)]
        format: EvalFormat,
        #[command(flatten)]
        tables: Tables,
    },
    /// Emit every weight up to a bound
    Table {
        space: Space,
        #[arg(long)]
        max_weight: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Abort on the first missing value instead of annotating it
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        breakdown: bool,
        #[command(flatten)]
        tables: Tables,
    },
    /// Run the self-verification suite
    Verify {
        /// Only `bootstrap` is recognised
        #[arg(long, value_name = "STEP")]
        skip: Vec<SkipStep>,
    },
    /// Solve for the genus-2 values and print them as an extension table
    BootstrapM2 {
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum EvalFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SkipStep {
    Bootstrap,
}

enum Failure {
    Usage(String),
    Coverage(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_coverage() {
            Failure::Coverage(e.to_string())
        } else {
            Failure::Other(e.to_string())
        }
    }
}

fn evaluator(tables: &Tables) -> Result<Evaluator, Failure> {
    let mut h3 = H3Provider::builtin();
    if let Some(path) = &tables.h3_table {
        h3 = h3.with_extension(load_table(path)?);
    }
    let base = Evaluator::new(h3, M2Provider::empty())?;
    let mut m2 = base.bootstrap_m2(RowSelection::ThirdPartZero)?.provider;
    if let Some(path) = &tables.m2_table {
        m2 = m2.with_extension(load_table(path)?);
    }
    Ok(Evaluator { m2, ..base })
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let io = |e: std::io::Error| Failure::Other(e.to_string());
    match cli.command {
        Command::Eval {
            space,
            lambda,
            breakdown,
            format,
            tables,
        } => {
            let weight = parse_weight(space, &lambda).map_err(Failure::Usage)?;
            let ev = evaluator(&tables)?;
            let rec = evaluate(&ev, space, weight, breakdown)?;
            match format {
                EvalFormat::Json => {
                    let s = serde_json::to_string_pretty(&rec)
                        .map_err(|e| Failure::Other(e.to_string()))?;
                    writeln!(out, "{s}").map_err(io)?;
                }
                EvalFormat::Text => {
                    if let (true, Some(b)) = (breakdown, &rec.breakdown) {
                        writeln!(out, "m3-nonhyp {}", b.m3_nonhyp).map_err(io)?;
                        writeln!(out, "h3 {}", b.h3).map_err(io)?;
                        writeln!(out, "m2xa1 {}", b.m2_a1).map_err(io)?;
                        writeln!(out, "a111 {}", b.a111).map_err(io)?;
                        writeln!(out, "total {}", b.total).map_err(io)?;
                    } else {
                        writeln!(out, "{}", rec.value.expect("evaluated")).map_err(io)?;
                    }
                }
            }
        }
        Command::Table {
            space,
            max_weight,
            format,
            strict,
            breakdown,
            tables,
        } => {
            let ev = evaluator(&tables)?;
            let records = rows_up_to(&ev, space, max_weight, breakdown, strict)?;
            for (r, note) in records
                .iter()
                .filter_map(|r| r.note.as_ref().map(|n| (r, n)))
            {
                let [a, b, c] = r.lambda;
                eprintln!("{a},{b},{c}: {note}");
            }
            out.write_all(
                record::render(&records, format)
                    .map_err(Failure::Other)?
                    .as_bytes(),
            )
            .map_err(io)?;
        }
        Command::Verify { skip } => {
            let options = VerifyOptions {
                skip_bootstrap: skip.contains(&SkipStep::Bootstrap),
                ..Default::default()
            };
            let outcomes = verify::run(&options)?;
            for o in &outcomes {
                writeln!(out, "{o}").map_err(io)?;
            }
            let failed = outcomes.iter().filter(|o| o.failed()).count();
            writeln!(out, "{} checks, {failed} failed", outcomes.len()).map_err(io)?;
            if failed > 0 {
                return Err(Failure::Other(format!(
                    "{failed} verification checks failed"
                )));
            }
        }
        Command::BootstrapM2 { out: path } => {
            let ev = Evaluator::new(H3Provider::builtin(), M2Provider::empty())?;
            let report = ev.bootstrap_m2(RowSelection::ThirdPartZero)?;
            let header = format!(
                "genus-2 Euler characteristics, solved from {} rows, {} held-out rows reproduced\nmu1,mu2,value",
                report.solved_rows.len(),
                report.held_out_rows.len()
            );
            let text = format_table(&header, report.provider.table());
            match path {
                Some(p) => std::fs::write(&p, text)
                    .map_err(|e| Failure::Other(format!("{}: {e}", p.display())))?,
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}\n\n{}", Cli::command().render_usage());
            ExitCode::from(1)
        }
        Err(Failure::Coverage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Other(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
