use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcsd_cli::analyze::analyze;
use qcsd_cli::known::KnownParams;
use qcsd_cli::search::{render_csv, render_json, render_text, search};
use qcsd_cli::verify::{verify_table, Status};
use qcsd_cli::CliError;
use qcsd_core::{extremal_bound, DivisorMode, SearchConfig};

#[derive(Debug, Parser)]
#[command(
    name = "qcsd",
    version,
    about = "Quasi-cyclic self-dual codes from circulant pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze the code generated by one tap polynomial.
    Analyze {
        /// Tap polynomial as a 0/1 string, coefficient of x^0 first.
        #[arg(long)]
        poly: String,
        /// Circulant size.
        #[arg(long, default_value_t = 35)]
        k: usize,
        #[arg(long)]
        threads: Option<usize>,
        /// Print the JSON report (includes the full distribution).
        #[arg(long)]
        json: bool,
    },
    /// Search tap polynomials for self-dual codes of a target distance.
    Search {
        #[arg(long)]
        kmin: usize,
        #[arg(long)]
        kmax: usize,
        /// Allowed numbers of ones in the tap polynomial.
        #[arg(long, value_delimiter = ',', default_value = "7,9")]
        weights: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ModeArg::Nontrivial)]
        divisor_mode: ModeArg,
        #[arg(long, default_value_t = 12)]
        target_d: usize,
        /// Largest message weight tried by the light-codeword prescreen.
        #[arg(long, default_value_t = 4)]
        prescreen_weight: usize,
        /// Circulant size.
        #[arg(long, default_value_t = 35)]
        k: usize,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-analyze the embedded table of published codes.
    VerifyTable {
        /// Only entries with these tap window lengths.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        #[arg(long)]
        threads: Option<usize>,
        /// Also analyze entries whose metadata is inconsistent.
        #[arg(long)]
        force: bool,
    },
    /// Minimum-distance bound for self-dual codes of length n.
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Nontrivial,
    Any,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn workers(threads: Option<usize>) -> usize {
    threads.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let known = KnownParams::literature();
    match cli.command {
        Command::Analyze {
            poly,
            k,
            threads,
            json,
        } => {
            let report = analyze(&poly, k, workers(threads), &known)?;
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.exit_code())
        }
        Command::Search {
            kmin,
            kmax,
            weights,
            divisor_mode,
            target_d,
            prescreen_weight,
            k,
            threads,
            format,
        } => {
            let cfg = SearchConfig {
                k,
                window_min: kmin,
                window_max: kmax,
                weights: weights.into_iter().collect::<BTreeSet<_>>(),
                divisor_mode: match divisor_mode {
                    ModeArg::Nontrivial => DivisorMode::RequireNontrivial,
                    ModeArg::Any => DivisorMode::Any,
                },
                target_d,
                prescreen_info_weight: prescreen_weight,
                workers: workers(threads),
            };
            let rows = search(&cfg, &known)?;
            match format {
                Format::Text => print!("{}", render_text(&rows)),
                Format::Json => println!("{}", render_json(&rows)),
                Format::Csv => print!("{}", render_csv(&rows)?),
            }
            Ok(0)
        }
        Command::VerifyTable { k, threads, force } => {
            let summary = verify_table(workers(threads), k.as_deref(), force, &known, |r| {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Mismatch(_) => "FAIL",
                    Status::DataSuspect => "DATA_SUSPECT",
                };
                eprintln!("{} {tag}", r.entry.poly);
            })?;
            print!("{}", summary.to_text());
            Ok(summary.exit_code())
        }
        Command::Bound { n } => {
            println!("{}", extremal_bound(n)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
