//! `serre`: Diamond weights, `D_0` tables, socle diagrams and the verification suites.

mod render;
mod suites;

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use serre_core::diamond::{generic_params, GaloisParams};
use serre_core::{Error, Params};

#[derive(Parser, Debug)]
#[command(name = "serre", version, about = "Serre weights, Diamond diagrams and exact GL2 checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List D(ρ) with S_λ, ℓ and δ.
    Diamond,
    /// The factors of D_0(ρ), block by block.
    D0,
    /// Run a verification suite.
    Verify,
    /// Render a socle diagram.
    Filtration {
        #[arg(value_enum)]
        which: Which,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    Example1,
    V1,
    S1,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    Reducible,
    Irreducible,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Jh,
    Witt,
    Uplus,
    #[value(name = "calculH", alias = "calcul-h")]
    CalculH,
    Indej,
    Womega,
    Combination,
    F2,
    Special,
    S1s2,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    #[arg(long, global = true)]
    pub p: Option<u32>,
    #[arg(long, global = true)]
    pub f: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub case: Option<Case>,
    /// Comma-separated digits, or `all-generic`.
    #[arg(long, global = true)]
    pub r: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub twist: u64,
    /// Slot `j` for `filtration example1`.
    #[arg(long, global = true)]
    pub j: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub suite: Option<Suite>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

/// Rendered output and whether every check passed.
pub struct Outcome {
    pub body: String,
    pub pass: bool,
}

pub fn usage(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

impl RunConfig {
    pub fn params(&self) -> Result<Params, Error> {
        let p = self.p.ok_or_else(|| usage("--p is required"))?;
        let f = self.f.ok_or_else(|| usage("--f is required"))?;
        Params::new(p, f)
    }

    pub fn digits(&self) -> Result<Option<Vec<i64>>, Error> {
        match self.r.as_deref() {
            None | Some("all-generic") => Ok(None),
            Some(s) => s
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| usage(format!("bad digit {x:?} in --r"))))
                .collect::<Result<Vec<_>, _>>()
                .map(Some),
        }
    }

    /// The `ρ` selected by `--case`/`--r`, or every generic one when `--r` is absent.
    pub fn rhos(&self, params: &Params) -> Result<Vec<GaloisParams>, Error> {
        let cases: Vec<bool> = match self.case {
            Some(Case::Reducible) => vec![true],
            Some(Case::Irreducible) => vec![false],
            None => vec![true, false],
        };
        match self.digits()? {
            Some(r) => {
                if r.len() != params.f() {
                    return Err(usage(format!("--r has {} digits, f = {}", r.len(), params.f())));
                }
                Ok(cases.into_iter().map(|red| GaloisParams::new(red, r.clone(), self.twist)).collect())
            }
            None => Ok(cases.into_iter().flat_map(|red| generic_params(params, red)).collect()),
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = &cli.config;
    if let Some(n) = cfg.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .map_err(|e| usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Diamond => render::diamond(cfg),
        Command::D0 => render::d0(cfg),
        Command::Filtration { which } => match which {
            Which::Example1 => render::example1(cfg),
            Which::V1 => render::v1_s1(cfg, false),
            Which::S1 => render::v1_s1(cfg, true),
        },
        Command::Verify => {
            let suite = cfg.suite.ok_or_else(|| usage("--suite is required"))?;
            let records = suites::run(suite, cfg)?;
            let pass = records.iter().all(|r| r.pass);
            Ok(Outcome { body: render::report(cfg, suite, &records), pass })
        }
    }
}

fn emit(cfg: &RunConfig, body: &str) -> std::io::Result<()> {
    match &cfg.out {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome { body, pass }) => {
            if let Err(e) = emit(&cli.config, &body) {
                eprintln!("serre: {e}");
                return ExitCode::from(2);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.config.format == Format::Json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("serre: {e}");
            ExitCode::from(2)
        }
    }
}
