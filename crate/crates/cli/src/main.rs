use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wronskian_cli::config::{FileConfig, Format, Suite, SuiteConfig};
use wronskian_cli::{density, emit_table, run_suite, CliError};
use wronskian_core::spectral::eigenfunction_value;

#[derive(Parser)]
#[command(name = "wronskian", version, about = "Exact Wronskian identities, Crum chains and killed-diffusion densities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a summary
    Verify(SuiteArgs),
    /// Run a suite and emit its per-cell table
    Table(SuiteArgs),
    /// Transition density at one point
    Density(DensityArgs),
    /// Transition density on an interior grid, for plotting
    DensityGrid(GridArgs),
    /// Value of one normalized eigenfunction
    Eigen(EigenArgs),
}

#[derive(Args)]
struct SuiteArgs {
    suite: Suite,
    /// Largest n in the grid
    #[arg(long)]
    n_max: Option<usize>,
    /// Cells run over 0 ≤ k < k_max
    #[arg(long)]
    k_max: Option<usize>,
    /// Tolerance for numeric suites
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Seed for randomized suites
    #[arg(long)]
    seed: Option<u64>,
    /// key = value file; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Args)]
struct ModelArgs {
    /// Killing strength μ ≥ 0 (default 0)
    #[arg(long, allow_hyphen_values = true, conflicts_with = "nu")]
    mu: Option<f64>,
    /// Order ν ≥ 1 instead of μ
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<f64>,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long = "t", allow_hyphen_values = true)]
    t: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Times; repeat the flag for several
    #[arg(long = "t", required = true, allow_hyphen_values = true)]
    t: Vec<f64>,
    /// Interior points per axis
    #[arg(long, default_value_t = 19)]
    points: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EigenArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    k: usize,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
}

fn suite_config(args: &SuiteArgs) -> Result<SuiteConfig, CliError> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let base = SuiteConfig::new(args.suite);
    Ok(SuiteConfig {
        suite: args.suite,
        n_max: args.n_max.or(file.n_max).unwrap_or(base.n_max),
        k_max: args.k_max.or(file.k_max).unwrap_or(base.k_max),
        tol: args.tol.or(file.tol).unwrap_or(base.tol),
        output_path: args.out.clone().or(file.out),
        format: args.format.or(file.format).unwrap_or(base.format),
        threads: args.threads.or(file.threads).unwrap_or(base.threads),
        seed: args.seed.or(file.seed).unwrap_or(base.seed),
        inject_fault: args.inject_fault,
    })
}

fn write_output(bytes: &[u8], out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Verify(args) => {
            let config = suite_config(&args)?;
            let reports = run_suite(&config)?;
            for r in &reports {
                println!("{}", r.summary());
                for c in r.cells.iter().filter(|c| !c.pass) {
                    eprintln!("FAIL {} n={} k={}: {}", r.suite.name(), c.n, c.k, c.detail);
                }
            }
            Ok(reports.iter().all(|r| r.failed == 0))
        }
        Command::Table(args) => {
            let config = suite_config(&args)?;
            let reports = run_suite(&config)?;
            if config.output_path.is_none() {
                write_output(&emit_table(&reports, config.format), &None)?;
            }
            for r in &reports {
                eprintln!("{}", r.summary());
            }
            Ok(reports.iter().all(|r| r.failed == 0))
        }
        Command::Density(args) => {
            let model = density::model(args.model.mu, args.model.nu)?;
            let bytes = density::table(&model, &[(args.t, args.x, args.y)], args.tol)?;
            write_output(&bytes, &args.out)?;
            Ok(true)
        }
        Command::DensityGrid(args) => {
            let model = density::model(args.model.mu, args.model.nu)?;
            let bytes = density::table(&model, &density::grid_points(&args.t, args.points), args.tol)?;
            write_output(&bytes, &args.out)?;
            Ok(true)
        }
        Command::Eigen(args) => {
            let model = density::model(args.model.mu, args.model.nu)?;
            let value = eigenfunction_value(&model, args.k, args.x).map_err(|e| CliError::Config(e.to_string()))?;
            println!("nu,k,x,value");
            println!("{:.16e},{},{:.16e},{:.16e}", model.nu, args.k, args.x, value);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("wronskian: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
