use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use upic_cli::{analyze_str, CliError, Overrides, EXIT_FAILURE, EXIT_OK, EXIT_PARSE};
use upic_core::cohomology::CohomologyConfig;
use upic_core::selftest;

#[derive(Parser)]
#[command(name = "upic", version, about = "Picard and Brauer invariants of reductive groups from root data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Largest cochain degree beyond the top of the complex.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Largest number of entries allowed in one differential matrix.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Compute the Ш groups (default).
    #[arg(long, global = true, overrides_with = "no_sha")]
    sha: bool,
    /// Skip the Ш groups.
    #[arg(long, global = true)]
    no_sha: bool,
    /// Include wall-clock timing in the report (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariant report for an input document (`-` for stdin).
    Analyze { path: String },
    /// Run the built-in acceptance checks.
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError { code: EXIT_PARSE, message: format!("cannot read {path}: {e}") })?;
    Ok(text)
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let overrides = Overrides {
        max_degree: cli.max_degree,
        budget: cli.budget,
        sha: if cli.no_sha { Some(false) } else if cli.sha { Some(true) } else { None },
        timing: cli.timing,
    };
    match &cli.command {
        Command::Analyze { path } => {
            let report = analyze_str(&read_input(path)?, &overrides)?;
            match cli.format {
                Format::Json => {
                    let text = serde_json::to_string_pretty(&report)
                        .map_err(|e| CliError { code: EXIT_FAILURE, message: e.to_string() })?;
                    println!("{text}");
                }
                Format::Table => print!("{}", report.to_table()),
            }
            Ok(EXIT_OK)
        }
        Command::Selftest => {
            let defaults = CohomologyConfig::default();
            let config = CohomologyConfig {
                max_degree: cli.max_degree.unwrap_or(defaults.max_degree),
                budget: cli.budget.unwrap_or(defaults.budget),
                ..defaults
            };
            let results = selftest::run_all(&config);
            for r in &results {
                println!("{r}");
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            println!("{} passed, {failed} failed", results.len() - failed);
            Ok(if failed == 0 { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli).unwrap_or_else(|e| {
        eprintln!("{}", e.message);
        e.code
    });
    ExitCode::from(code as u8)
}
