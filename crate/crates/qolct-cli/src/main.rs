use clap::{Args, Parser, Subcommand};
use qolct_cli::commands;
use qolct_cli::config::{RunConfig, Scale};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "qolct", version, about = "Offset linear canonical transforms of quaternion fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Transform a field and export its spectrum
    Transform(CommonArgs),
    /// Slide a window over the field and stream the coefficient tensor to disk
    Analyze(CommonArgs),
    /// Rebuild a field from a coefficient tensor
    Reconstruct(CommonArgs),
    /// Run the verification suite and write a JSON report
    Verify(CommonArgs),
    /// Emit reference signals and the closed-form comparison
    Oracle(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Key=value run configuration file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Input field (csv or png) or coefficient tensor (qwol)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Output directory
    #[arg(long, default_value = "out")]
    output: PathBuf,
    /// Override the configured seed
    #[arg(long)]
    seed: Option<u64>,
    /// Verification scale
    #[arg(long, value_enum, default_value_t = Scale::Desk)]
    scale: Scale,
}

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn run(cli: Cli) -> i32 {
    let args = match &cli.cmd {
        Cmd::Transform(a)
        | Cmd::Analyze(a)
        | Cmd::Reconstruct(a)
        | Cmd::Verify(a)
        | Cmd::Oracle(a) => a,
    };
    let mut cfg = match &args.config {
        Some(path) => match RunConfig::load(path) {
            Ok(c) => c,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        },
        None => RunConfig::default(),
    };
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    let input = args.input.as_deref();
    let result = match &cli.cmd {
        Cmd::Transform(_) => commands::transform(&cfg, input, &args.output),
        Cmd::Analyze(_) => commands::analyze(&cfg, input, &args.output),
        Cmd::Reconstruct(_) => commands::reconstruct(&cfg, input, &args.output),
        Cmd::Verify(_) => commands::verify(&cfg, &args.output, args.scale),
        Cmd::Oracle(_) => commands::oracle(&cfg, &args.output),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
