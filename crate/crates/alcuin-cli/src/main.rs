//! `alcuin`: count, enumerate, and area-optimize integer triangles by
//! perimeter.
//!
//! Exit codes: 0 on success, 1 for domain or verification failures
//! (no triangle, overflow, failed cross-check, unwritable output file),
//! 2 for usage errors.

mod bench;
mod output;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use alcuin::counting::{self, CountMethod};
use alcuin::geometry;
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "alcuin",
    version,
    about = "Count, enumerate, and area-optimize integer triangles by perimeter"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print T(p), the number of integer triangles with perimeter P
    Count {
        p: i64,
        /// Counting implementation: closed-form, mod12, bijection-sum, series, or brute-force
        #[arg(long, value_parser = parse_method, default_value = "closed-form")]
        method: CountMethod,
        #[arg(long, value_enum, ignore_case = true, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// List every triangle with perimeter P, one triple per line
    Enumerate {
        p: i64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Show the unique maximal-area triangle for perimeter P
    #[command(name = "max-area")]
    MaxArea {
        p: i64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Tabulate T(p) for every perimeter in a range
    Table {
        p_min: i64,
        p_max: i64,
        #[arg(long, value_enum, ignore_case = true, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Write the table to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the counting methods against the brute-force oracle
    Verify {
        p_max: i64,
        /// Check only this method (repeatable; default: all five)
        #[arg(long = "method", value_parser = parse_method)]
        methods: Vec<CountMethod>,
        /// Suppress the timing line
        #[arg(long)]
        no_timing: bool,
    },
    /// Time each counting method over a full perimeter sweep
    Bench {
        p_max: i64,
        /// Repetitions per method
        #[arg(long, default_value_t = 1)]
        reps: u32,
        /// Suppress the timing column
        #[arg(long)]
        no_timing: bool,
    },
}

fn parse_method(s: &str) -> Result<CountMethod, String> {
    CountMethod::from_str(s).map_err(|e| e.to_string())
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version arrive here as non-errors
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Count { p, method, format } => cmd_count(p, method, format),
        Command::Enumerate { p, format } => cmd_enumerate(p, format),
        Command::MaxArea { p, format } => cmd_max_area(p, format),
        Command::Table {
            p_min,
            p_max,
            format,
            output,
        } => cmd_table(p_min, p_max, format, output),
        Command::Verify {
            p_max,
            methods,
            no_timing,
        } => cmd_verify(p_max, methods, no_timing),
        Command::Bench {
            p_max,
            reps,
            no_timing,
        } => cmd_bench(p_max, reps, no_timing),
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

/// Writes a block to stdout with a trailing newline. A pipe closed
/// downstream (`alcuin table ... | head`) is not our failure: exit
/// quietly with success, unix-style.
fn emit(text: &str) -> i32 {
    emit_raw(&format!("{text}\n"))
}

fn emit_raw(text: &str) -> i32 {
    use std::io::{ErrorKind, Write};
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let outcome = lock.write_all(text.as_bytes()).and_then(|()| lock.flush());
    match outcome {
        Ok(()) => 0,
        Err(e) if e.kind() == ErrorKind::BrokenPipe => 0,
        Err(e) => {
            eprintln!("error: cannot write output: {e}");
            1
        }
    }
}

fn cmd_count(p: i64, method: CountMethod, format: OutputFormat) -> i32 {
    if p < 1 {
        return usage_error("P must be at least 1");
    }
    match counting::count(p, method) {
        Ok(value) => emit(&output::render_count(p, method, value, format)),
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn cmd_enumerate(p: i64, format: OutputFormat) -> i32 {
    if p < 1 {
        return usage_error("P must be at least 1");
    }
    let triples = counting::enumerate_triples(p);
    let rendered = output::render_enumerate(&triples, format);
    // an empty perimeter renders as nothing in plain format, and that is
    // a success, not an error
    if rendered.is_empty() {
        0
    } else {
        emit(&rendered)
    }
}

fn cmd_max_area(p: i64, format: OutputFormat) -> i32 {
    if p < 1 {
        return usage_error("P must be at least 1");
    }
    match geometry::max_area_triple(p) {
        Ok(result) => emit(&output::render_max_area(p, &result, format)),
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn cmd_table(p_min: i64, p_max: i64, format: OutputFormat, path: Option<PathBuf>) -> i32 {
    if p_min < 0 || p_min > p_max {
        return usage_error("table needs 0 <= P_MIN <= P_MAX");
    }
    let rows: Vec<(i64, i128)> = (p_min..=p_max)
        .map(|p| {
            // T(0) = 0 by convention; the closed form starts at p = 1
            let t = if p == 0 {
                0
            } else {
                counting::count_closed_form(p)
            };
            (p, t)
        })
        .collect();
    let rendered = output::render_table(&rows, format);
    match path {
        None => emit(&rendered),
        Some(path) => match fs::write(&path, format!("{rendered}\n")) {
            Ok(()) => 0,
            Err(err) => {
                eprintln!("error: cannot write '{}': {err}", path.display());
                1
            }
        },
    }
}

fn cmd_verify(p_max: i64, methods: Vec<CountMethod>, no_timing: bool) -> i32 {
    if p_max < 1 {
        return usage_error("P_MAX must be at least 1");
    }
    let methods = if methods.is_empty() {
        CountMethod::ALL.to_vec()
    } else {
        let mut unique = Vec::new();
        for m in methods {
            if !unique.contains(&m) {
                unique.push(m);
            }
        }
        unique
    };
    let report = verify::run(p_max, &methods);
    let code = emit_raw(&report.render(!no_timing));
    if code != 0 {
        code
    } else if report.passed() {
        0
    } else {
        1
    }
}

fn cmd_bench(p_max: i64, reps: u32, no_timing: bool) -> i32 {
    if p_max < 1 {
        return usage_error("P_MAX must be at least 1");
    }
    if reps < 1 {
        return usage_error("--reps must be at least 1");
    }
    let rows = bench::run(p_max, reps);
    emit_raw(&bench::render(p_max, reps, &rows, !no_timing))
}
