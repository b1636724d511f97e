use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use toric_core::{Capabilities, Error, ProductType, RootSystem};

mod commands;

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Toric arrangements of root systems: points, layers, Poincaré polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Root system type, e.g. F4, D5, A3xA1.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    ty: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_name = "N", default_value_t = 60_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_group_order: u64,

    #[arg(long, global = true, value_name = "N", default_value_t = 4, value_parser = positive)]
    brute_rank: usize,

    #[arg(long, global = true, value_name = "N", default_value_t = 3, value_parser = positive)]
    poset_rank: usize,

    /// Largest rank for complete-subsystem enumeration.
    #[arg(long, global = true, value_name = "N", default_value_t = 4, value_parser = positive)]
    enum_rank: usize,

    /// Allow complete-subsystem enumeration for E6.
    #[arg(long, global = true)]
    allow_e6: bool,

    #[arg(long, global = true, value_enum, default_value_t = RouteArg::Both)]
    route: RouteArg,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
enum Command {
    /// Points of the arrangement and their W-orbits.
    Points,
    /// Number of layers in each dimension.
    Layers,
    /// Layers grouped by tangent subsystem, with the types of Φ_C.
    Census,
    /// Poincaré polynomial of the complement.
    Poincare,
    /// Euler characteristic of the complement.
    Euler,
    /// The degree identity over the vertices of the affine diagram.
    Identity,
    /// The explicit poset of layers.
    Poset,
    /// Formula-versus-oracle checks.
    Verify,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Points => "points",
            Command::Layers => "layers",
            Command::Census => "census",
            Command::Poincare => "poincare",
            Command::Euler => "euler",
            Command::Identity => "identity",
            Command::Poset => "poset",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Closed,
    Layers,
    Both,
}

/// A finished command: the rendered artifact and whether its checks held.
pub struct Artifact {
    pub body: String,
    pub consistent: bool,
}

pub enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub struct RunConfig {
    pub ty: ProductType,
    pub format: Format,
    pub caps: Capabilities,
    pub route: RouteArg,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(artifact) => {
            if let Err(e) = emit(&cli.out, &artifact.body) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if artifact.consistent {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification mismatch");
                ExitCode::from(3)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e @ Error::Capability { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Artifact, Failure> {
    let ty_str = cli
        .ty
        .as_deref()
        .ok_or_else(|| Failure::Usage("--type is required".into()))?;
    let ty: ProductType = ty_str.parse()?;
    if ty.factors().is_empty() {
        return Err(Failure::Usage(format!("type {ty_str:?} has rank 0")));
    }
    let config = RunConfig {
        ty,
        format: cli.format,
        caps: Capabilities {
            max_group_order: cli.max_group_order,
            brute_rank: cli.brute_rank,
            poset_rank: cli.poset_rank,
            enum_rank: cli.enum_rank,
            allow_e6: cli.allow_e6,
        },
        route: cli.route,
    };
    let rs = RootSystem::build(&config.ty);
    commands::run(cli.command, &config, &rs)
}

fn emit(out: &Option<PathBuf>, body: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, body),
        None => io::stdout().lock().write_all(body.as_bytes()),
    }
}
