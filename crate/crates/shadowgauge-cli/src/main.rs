//! `shadowgauge` — convex-geometry calculus and projection-inequality
//! verification for origin-symmetric bodies.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use shadowgauge::bodies::{Body, BodySpec};
use shadowgauge::inequalities::{cn, cn_lower_bound, unit_ball_volume};

use shadowgauge_cli::gen::{self, GenConfig};
use shadowgauge_cli::report::{Report, ReportConfig, Summary};
use shadowgauge_cli::suite::{self, SuiteOptions};

#[derive(Parser)]
#[command(name = "shadowgauge", version, about = "Shadow calculus and sharp projection inequalities for origin-symmetric convex bodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate seeded random zonotopes plus the fixture family as JSON body files.
    Gen {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Number of random zonotopes to emit.
        #[arg(long, default_value_t = 5)]
        bodies: usize,
        /// Generators per random zonotope.
        #[arg(long, default_value_t = 6)]
        generators: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory for the body files.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every applicable inequality check on the given body files.
    Verify {
        /// Body files produced by `gen` (or hand-written in the same format).
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Coarse sphere-scan size override.
        #[arg(long)]
        coarse_samples: Option<usize>,
        /// Refined-candidate count override.
        #[arg(long)]
        restarts: Option<usize>,
        /// Verdict tolerance override (relative).
        #[arg(long)]
        tol: Option<f64>,
        /// Add Monte Carlo oracle agreement rows.
        #[arg(long)]
        with_oracle: bool,
        /// Report path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print n, |B^n|, c_n, and c_n - 1/sqrt(e) for n = 2..n_max.
    Constants {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { dim, bodies, generators, seed, out } => {
            let cfg = GenConfig { dim, bodies, generators, seed };
            match gen::run(&cfg, &out) {
                Ok(paths) => {
                    println!("wrote {} body files to {}", paths.len(), out.display());
                    ExitCode::SUCCESS
                }
                Err(err) => {
                    eprintln!("gen: {err:#}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify { files, seed, coarse_samples, restarts, tol, with_oracle, out, format } => {
            let opts = SuiteOptions { coarse_samples, restarts, tol_rel: tol, with_oracle, seed };
            run_verify(&files, &opts, out.as_deref(), format)
        }
        Command::Constants { n_max } => run_constants(n_max),
    }
}

/// SHADOWGAUGE_THREADS caps worker parallelism for the whole process.
fn configure_threads() {
    if let Ok(value) = std::env::var("SHADOWGAUGE_THREADS") {
        match value.parse::<usize>() {
            Ok(threads) if threads > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
            _ => eprintln!("ignoring invalid SHADOWGAUGE_THREADS={value}"),
        }
    }
}

fn run_verify(
    files: &[PathBuf],
    opts: &SuiteOptions,
    out: Option<&std::path::Path>,
    format: Format,
) -> ExitCode {
    let mut bodies: Vec<(String, Body)> = Vec::new();
    let mut input_errors = 0;
    for path in files {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string());
        let loaded = fs::read_to_string(path)
            .map_err(|e| format!("cannot read: {e}"))
            .and_then(|text| {
                serde_json::from_str::<BodySpec>(&text).map_err(|e| format!("cannot parse: {e}"))
            })
            .and_then(|spec| spec.into_body().map_err(|e| format!("invalid body: {e}")));
        match loaded {
            Ok(body) => bodies.push((name, body)),
            Err(err) => {
                eprintln!("{}: {err}", path.display());
                input_errors += 1;
            }
        }
    }
    if input_errors > 0 {
        eprintln!("{input_errors} input file(s) rejected");
        return ExitCode::from(2);
    }

    let rows = match suite::run_suite(&bodies, opts) {
        Ok(rows) => rows,
        Err(err) => {
            eprintln!("verify: {err:#}");
            return ExitCode::from(2);
        }
    };
    let summary = Summary::tally(&rows);
    let max_dim = bodies.iter().map(|(_, b)| b.dim()).max().unwrap_or(2);
    let sphere = suite::effective_sphere_config(max_dim, opts);
    let report = Report {
        config: ReportConfig {
            seed: opts.seed,
            coarse_samples: sphere.coarse_samples,
            restarts: sphere.restarts,
            with_oracle: opts.with_oracle,
            bodies: bodies.len(),
        },
        summary,
        reports: rows,
    };

    let rendered = match format {
        Format::Json => report.to_json(),
        Format::Csv => {
            let mut buffer = Vec::new();
            report.write_csv(&mut buffer).map(|()| String::from_utf8_lossy(&buffer).into_owned())
        }
    };
    let rendered = match rendered {
        Ok(r) => r,
        Err(err) => {
            eprintln!("verify: cannot render report: {err:#}");
            return ExitCode::from(2);
        }
    };
    if let Some(path) = out {
        if let Err(err) = fs::write(path, &rendered) {
            eprintln!("verify: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    } else {
        print!("{rendered}");
    }
    eprintln!(
        "verify: {} passed, {} failed, {} not applicable",
        summary.passed, summary.failed, summary.not_applicable
    );
    if summary.failed > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_constants(n_max: usize) -> ExitCode {
    if n_max < 2 {
        eprintln!("constants: --n-max must be at least 2, got {n_max}");
        return ExitCode::from(2);
    }
    let bound = cn_lower_bound();
    println!("{:>3}  {:>16}  {:>12}  {:>14}", "n", "ball_volume", "c_n", "c_n - 1/sqrt(e)");
    for n in 2..=n_max {
        let volume = unit_ball_volume(n).expect("n >= 2");
        let c = cn(n).expect("n >= 2");
        println!("{n:>3}  {volume:>16.8}  {c:>12.8}  {:>14.8}", c - bound);
    }
    ExitCode::SUCCESS
}
