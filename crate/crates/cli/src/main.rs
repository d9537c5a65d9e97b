//! Command-line front end: parse a semigroup (family spec or table file),
//! compute chain lengths by formula/decomposition/oracle, run league
//! searches, reproduce the summary tables, and print the general-linear and
//! T_n bound packages. All output goes through a single JSON envelope
//! (`--format tsv` switches the result body to tab-separated text).

mod family;
mod run;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "semichain", version, about = "Chain lengths in finite semigroups")]
struct Cli {
    /// Output format for the result payload
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Treat any diagnostic (e.g. a table discrepancy record) as an error
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Formula,
    Decompose,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Length of the longest subsemigroup chain
    Length {
        /// Family spec: T:n, O:n, I:n, POI:n, POPI:n, brandt:<triv|cK|sK>,<n>,
        /// null:m, mono:m,r, cyc:n, sym:n, fb2
        #[arg(long, conflicts_with = "file")]
        family: Option<String>,
        /// Cayley table file (text or JSON)
        #[arg(long)]
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Chain over inverse subsemigroups instead (l*)
        #[arg(long)]
        inverse: bool,
        #[arg(long, default_value_t = 60_000)]
        budget_ms: u64,
        #[arg(long, default_value_t = 2_000_000)]
        max_subsemigroups: usize,
    },
    /// Maximum league content F(n,k) / F*(n,k)
    League {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Restrict partitions to intervals (the order-preserving case)
        #[arg(long)]
        interval: bool,
        /// Report the construction lower bounds instead of searching
        #[arg(long)]
        bounds: bool,
        /// Root symmetry reduction (general partitions only)
        #[arg(long)]
        symmetry: bool,
        #[arg(long, default_value_t = 600_000)]
        budget_ms: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Reproduce one of the five summary tables
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        /// Include the F(7,4) cell of table 1 (a long search)
        #[arg(long)]
        long_run: bool,
        /// Cap the n rows of tables 1 and 2
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 600_000)]
        budget_ms: u64,
    },
    /// Orders, Gaussian summands, c(q), and the chain bound for the linear maps on F_q^n
    Gls {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
    },
    /// Chain and counting bounds for the full transformation monoid
    Tn {
        #[arg(long)]
        n: u64,
        /// Use the construction bounds instead of exact league searches
        #[arg(long)]
        bounds: bool,
        #[arg(long, default_value_t = 600_000)]
        budget_ms: u64,
    },
}

pub(crate) struct Outcome {
    pub result: Value,
    /// Plain-text rendering used under --format tsv
    pub text: String,
    pub diagnostics: Vec<Value>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, inputs) = run::describe(&cli.command);
    match run::dispatch(&cli.command) {
        Ok(outcome) => {
            let strict_fail = cli.strict && !outcome.diagnostics.is_empty();
            match cli.format {
                Format::Json => {
                    let envelope = json!({
                        "command": name,
                        "inputs": inputs,
                        "result": outcome.result,
                        "diagnostics": outcome.diagnostics,
                        "timingMillis": start.elapsed().as_millis() as u64,
                    });
                    println!("{envelope}");
                }
                Format::Tsv => {
                    print!("{}", outcome.text);
                    if !outcome.text.ends_with('\n') {
                        println!();
                    }
                    for d in &outcome.diagnostics {
                        eprintln!("# diagnostic: {d}");
                    }
                }
            }
            if strict_fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
