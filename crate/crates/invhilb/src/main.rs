use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, ValueEnum};
use invhilb::catalog;
use invhilb::cli::{parse_weights, run_all, run_many, Options, Report};
use invhilb::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Runs the catalogued verification suites.
#[derive(Parser, Debug)]
#[command(name = "invhilb", version)]
struct Args {
    /// Case to run; may be repeated.
    #[arg(long = "case")]
    cases: Vec<String>,
    /// Run the default registry.
    #[arg(long)]
    all: bool,
    /// Print the registry and exit.
    #[arg(long)]
    list_cases: bool,
    /// Largest degree for Hilbert function checks.
    #[arg(long, default_value_t = 6)]
    pmax: u32,
    /// Weight triple for the degeneration checks, e.g. -3,-2,-1.
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Per-case time budget in seconds.
    #[arg(long)]
    time_budget: Option<f64>,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("invhilb: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_cases {
        for name in catalog::list_cases() {
            println!("{name}");
        }
        return ExitCode::SUCCESS;
    }
    let weights = match args.weights.as_deref().map(parse_weights).transpose() {
        Ok(w) => w,
        Err(e) => return usage_error(e),
    };
    let time_budget = match args.time_budget {
        Some(s) if !(s.is_finite() && s >= 0.0) => return usage_error("time budget must be a non-negative number"),
        s => s.map(Duration::from_secs_f64),
    };
    let opts = Options { pmax: args.pmax, weights, time_budget };
    let result = match (args.all, args.cases.is_empty()) {
        (true, true) => run_all(&opts),
        (false, false) => run_many(&args.cases, &opts),
        _ => return usage_error("give either --all or at least one --case"),
    };
    let reports: Vec<Report> = match result {
        Ok(r) => r,
        Err(e @ (Error::UnknownCase(_) | Error::InvalidParams(_) | Error::LengthMismatch { .. })) => {
            return usage_error(e)
        }
        Err(e) => {
            eprintln!("invhilb: {e}");
            return ExitCode::from(1);
        }
    };
    match args.format {
        Format::Text => {
            for r in &reports {
                print!("{}", r.to_text());
            }
        }
        Format::Json => {
            for r in &reports {
                println!("{}", serde_json::to_string(r).expect("reports serialize"));
            }
        }
    }
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
