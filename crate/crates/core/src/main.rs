use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use segre_toolkit::cli::{self, Options, Report};
use segre_toolkit::groebner::Limits;
use segre_toolkit::variety::Point;
use segre_toolkit::Error;

/// Segre varieties, complexifications and intrinsic complexifications of
/// real-algebraic subvarieties of ℂⁿ.
#[derive(Parser)]
#[command(name = "segre", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the report as JSON with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    /// Abort once Buchberger has processed N critical pairs (exit code 4).
    #[arg(long, global = true, value_name = "N")]
    max_pairs: Option<usize>,
}

#[derive(Args)]
struct PointArgs {
    /// Point as comma-separated Gaussian rationals, e.g. `1/2+i,0`.
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
    /// Points separated by `;`, e.g. `0,0;1,1;2,2`.
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the complexification generators and the real dimension.
    Complexify { file: PathBuf },
    /// Segre fiber and degeneracy at a point or over a grid.
    Segre {
        file: PathBuf,
        #[command(flatten)]
        points: PointArgs,
    },
    /// Intrinsic complexification; with --at, the dimension-formula check.
    Intrinsic {
        file: PathBuf,
        #[command(flatten)]
        points: PointArgs,
    },
    /// Image of the complexification under a polynomial map.
    Pushforward { variety: PathBuf, map: PathBuf },
    /// Segre, CR and intrinsic data at points (the origin by default).
    Classify {
        file: PathBuf,
        #[command(flatten)]
        points: PointArgs,
    },
}

fn read(path: &Path) -> Result<String, (u8, String)> {
    std::fs::read_to_string(path).map_err(|e| (2, format!("cannot read {}: {e}", path.display())))
}

fn options(points: &PointArgs, limits: Limits) -> Result<Options, Error> {
    Ok(Options {
        at: points.at.as_deref().map(Point::parse).transpose()?,
        grid: points.grid.as_deref().map(cli::parse_grid).transpose()?.unwrap_or_default(),
        limits,
    })
}

fn run(args: &Cli) -> Result<Report, (u8, String)> {
    let limits = Limits { max_pairs: args.max_pairs };
    let fail = |e: Error| (e.exit_code(), format!("error: {e}"));
    match &args.command {
        Command::Complexify { file } => {
            cli::cmd_complexify(&read(file)?, &Options { limits, ..Options::default() }).map_err(fail)
        }
        Command::Segre { file, points } => {
            let text = read(file)?;
            cli::cmd_segre(&text, &options(points, limits).map_err(fail)?).map_err(fail)
        }
        Command::Intrinsic { file, points } => {
            let text = read(file)?;
            cli::cmd_intrinsic(&text, &options(points, limits).map_err(fail)?).map_err(fail)
        }
        Command::Pushforward { variety, map } => {
            let (v, m) = (read(variety)?, read(map)?);
            cli::cmd_pushforward(&v, &m, &Options { limits, ..Options::default() }).map_err(fail)
        }
        Command::Classify { file, points } => {
            let text = read(file)?;
            cli::cmd_classify(&text, &options(points, limits).map_err(fail)?).map_err(fail)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(&args) {
        Ok(report) => {
            if args.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
