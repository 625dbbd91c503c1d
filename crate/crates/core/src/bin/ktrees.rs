use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use ktrees::checks::{self, Mode};
use ktrees::{count_ktrees, stable_counts, Error};

/// Count unlabeled k-trees by number of hedra (n hedra = n + k vertices).
#[derive(Parser, Debug)]
#[command(name = "ktrees", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print K_{n,k} for n = 0..terms-1.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the grid of K_{n,k} for k = 1..=max-k, n = 0..=max-n.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_k: u32,
        #[arg(long)]
        max_n: u32,
        /// Append the stable row (K_{n,k} for k >= n - 1).
        #[arg(long)]
        stable: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the stable k-tree numbers for n = 0..terms-1.
    Stable {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = VerifyMode::All)]
        mode: VerifyMode,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyMode {
    Reference,
    Closedform,
    Oracle,
    Dissymmetry,
    Stability,
    All,
}

impl From<VerifyMode> for Mode {
    fn from(m: VerifyMode) -> Mode {
        match m {
            VerifyMode::Reference => Mode::Reference,
            VerifyMode::Closedform => Mode::Closedform,
            VerifyMode::Oracle => Mode::Oracle,
            VerifyMode::Dissymmetry => Mode::Dissymmetry,
            VerifyMode::Stability => Mode::Stability,
            VerifyMode::All => Mode::All,
        }
    }
}

enum Row {
    K(usize),
    Stable,
}

fn json_counts(counts: &[BigInt]) -> Value {
    Value::Array(
        counts
            .iter()
            .map(|c| Value::Number(c.to_string().parse::<Number>().expect("integer literal")))
            .collect(),
    )
}

fn json_row(row: &Row, counts: &[BigInt]) -> Value {
    match row {
        Row::K(k) => json!({ "k": k, "counts": json_counts(counts) }),
        Row::Stable => json!({ "stable": true, "counts": json_counts(counts) }),
    }
}

fn join(counts: &[BigInt], sep: &str) -> String {
    counts
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn print_rows(
    out: &mut impl Write,
    rows: &[(Row, Vec<BigInt>)],
    format: Format,
    single: bool,
) -> io::Result<()> {
    match format {
        Format::Csv => {
            for (_, counts) in rows {
                writeln!(out, "{}", join(counts, ","))?;
            }
        }
        Format::Json => {
            let value = if single {
                json_row(&rows[0].0, &rows[0].1)
            } else {
                Value::Array(rows.iter().map(|(r, c)| json_row(r, c)).collect())
            };
            writeln!(out, "{value}")?;
        }
        Format::Plain if single => writeln!(out, "{}", join(&rows[0].1, " "))?,
        Format::Plain => {
            let columns = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
            let width = rows
                .iter()
                .flat_map(|(_, c)| c.iter().map(|v| v.to_string().len()))
                .chain([columns.saturating_sub(1).to_string().len()])
                .max()
                .unwrap_or(1);
            let header: String = (0..columns).map(|n| format!(" {n:>width$}")).collect();
            writeln!(out, "{:<6}{header}", "k\\n")?;
            for (row, counts) in rows {
                let label = match row {
                    Row::K(k) => k.to_string(),
                    Row::Stable => "stable".to_string(),
                };
                let cells: String = counts
                    .iter()
                    .map(|v| format!(" {:>width$}", v.to_string()))
                    .collect();
                writeln!(out, "{label:<6}{cells}")?;
            }
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, Error> {
    let io_ok = |r: io::Result<()>| {
        if let Err(e) = r {
            eprintln!("ktrees: write failed: {e}");
        }
    };
    match cli.command {
        Command::Count { k, terms, format } => {
            let counts = count_ktrees(k as usize, terms as usize - 1)?.u;
            io_ok(print_rows(out, &[(Row::K(k as usize), counts)], format, true));
        }
        Command::Table {
            max_k,
            max_n,
            stable,
            format,
        } => {
            let mut rows: Vec<(Row, Vec<BigInt>)> = checks::grid(max_k as usize, max_n as usize)?
                .into_iter()
                .enumerate()
                .map(|(i, counts)| (Row::K(i + 1), counts))
                .collect();
            if stable {
                rows.push((Row::Stable, stable_counts(max_n as usize)?));
            }
            io_ok(print_rows(out, &rows, format, false));
        }
        Command::Stable { terms, format } => {
            let counts = stable_counts(terms as usize - 1)?;
            io_ok(print_rows(out, &[(Row::Stable, counts)], format, true));
        }
        Command::Verify { mode } => {
            let results = checks::run(mode.into())?;
            let failed = results.iter().filter(|c| !c.passed).count();
            for check in &results {
                io_ok(writeln!(out, "{check}"));
            }
            io_ok(writeln!(out, "{} checks, {failed} failed", results.len()));
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("ktrees: internal error: {err}");
            ExitCode::from(3)
        }
    }
}
