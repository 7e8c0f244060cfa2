use std::io::Write;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use expcommute::commands::{self, Outcome};
use expcommute::fuzz::Campaign;
use expcommute::ExitStatus;
use expcommute_core::wermuth::campaign::DEFAULT_MARGIN;
use expcommute_core::wermuth::DEFAULT_SCAN_SAMPLES;
use expcommute_core::{TheoremId, ToleranceConfig};

/// Checks commutation of matrix exponentials against Wermuth-type theorems.
///
/// Exit codes: 0 consistent, 2 usage or input error, 3 numerical failure,
/// 4 hypothesis violated, 5 VIOLATION.
#[derive(Parser, Debug)]
#[command(name = "expcommute", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().eq_tol)]
    eq_tol: f64,
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().congruence_tol)]
    congruence_tol: f64,
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().spectral_tol)]
    spectral_tol: f64,
    #[arg(long, global = true, default_value_t = ToleranceConfig::default().interval_margin)]
    interval_margin: f64,
    /// Seed echoed in the report; also the campaign seed for `fuzz`.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Omit the timestamp so identical invocations print identical bytes.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Spectrum, diameter and 2πi-congruence verdict of a matrix.
    Eig { file: PathBuf },
    /// Run one of the theorem verifiers on a pair of matrices.
    Verify {
        #[arg(value_parser = parse_theorem)]
        theorem: TheoremId,
        file_a: PathBuf,
        file_b: PathBuf,
    },
    /// Emit the rotation-by-π pair and its verification report.
    Counterexample {
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        a: f64,
        /// Write A.json and B.json here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Seeded soundness campaign.
    Fuzz {
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: f64,
        /// Directory for forensic dumps of failing instances.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Matrix exponential by scaling and squaring.
    Expm {
        file: PathBuf,
        /// Also compute the Taylor oracle and report the gap.
        #[arg(long)]
        cross_check: bool,
    },
    /// Sample defects of (A, tB) for t in (0, τ].
    Scan {
        file_a: PathBuf,
        file_b: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SCAN_SAMPLES)]
        samples: usize,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).ok_or_else(|| format!("unknown theorem '{s}' (expected wermuth, main or cm)"))
}

const DEFAULT_CAMPAIGN_SEED: u64 = 42;

fn dispatch(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let cfg = ToleranceConfig {
        eq_tol: g.eq_tol,
        congruence_tol: g.congruence_tol,
        spectral_tol: g.spectral_tol,
        interval_margin: g.interval_margin,
    };
    match &cli.command {
        Command::Eig { file } => commands::eig(file, &cfg, g.seed),
        Command::Verify { theorem, file_a, file_b } => commands::verify_files(*theorem, file_a, file_b, &cfg, g.seed),
        Command::Counterexample { a, out_dir } => commands::counterexample(*a, out_dir.as_deref(), &cfg, g.seed),
        Command::Expm { file, cross_check } => commands::exponential(file, *cross_check, &cfg, g.seed),
        Command::Scan { file_a, file_b, samples } => commands::scan(file_a, file_b, *samples, &cfg, g.seed),
        Command::Fuzz { theorem, count, margin, dump_dir } => {
            let seed = g.seed.unwrap_or(DEFAULT_CAMPAIGN_SEED);
            let default_dir = std::env::temp_dir().join("expcommute-forensics");
            commands::fuzz(&Campaign {
                theorem: *theorem,
                count: *count,
                seed,
                margin: *margin,
                cfg: &cfg,
                dump_dir: Some(dump_dir.as_deref().unwrap_or(&default_dir)),
            })
        }
    }
}

fn run() -> ExitStatus {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitStatus::Usage } else { ExitStatus::Consistent };
        }
    };
    let outcome = match panic::catch_unwind(|| dispatch(&cli)) {
        Ok(outcome) => outcome,
        Err(_) => return ExitStatus::Numerical,
    };
    match outcome {
        Ok((mut doc, status)) => {
            if !cli.global.no_timestamp {
                doc.timestamp = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
            }
            let text = match cli.global.format {
                Format::Json => doc.to_json(),
                Format::Text => doc.summary(),
            };
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitStatus::Usage;
            }
            status
        }
        Err(e) => {
            eprintln!("expcommute: {e}");
            e.exit_status()
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run().code())
}
