//! `aagroup`: batch analyses of almost Abelian Lie groups described by a spec file.
//!
//! Exit codes: 0 when the decision is true or the command succeeded, 1 when it is false or a
//! violation was found, 2 on input errors.

mod commands;
mod literal;
mod output;
mod spec;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{AutAction, CliError, Ctx, Mode, OracleAction, RepKind};
use output::Output;
use spec::SpecFile;

#[derive(Debug, Parser)]
#[command(
    name = "aagroup",
    version,
    about = "Exact computations for almost Abelian Lie groups"
)]
struct Cli {
    /// Group spec file.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exact", global = true)]
    mode: Mode,
    /// Decimal digits in numeric output.
    #[arg(long, default_value_t = 12, global = true)]
    digits: usize,
    /// Hexadecimal RNG seed for the oracles.
    #[arg(long, default_value = "0x5EED", global = true)]
    seed: String,
    /// Print `key=value` lines.
    #[arg(long, global = true)]
    machine: bool,
    /// Entry bound for the relatedness search.
    #[arg(long, default_value_t = 2, global = true)]
    bound: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, J, exponentiality, torsion, center, dilations and the abelian splitting.
    Analyze,
    /// Exponential of an algebra element `[v]@t`.
    Exp {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Product of two group elements.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Membership in the center.
    Center {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Matrix of an element under G, G_I, G_II or the faithful quotient representation.
    Rep {
        #[arg(value_enum)]
        kind: RepKind,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Economic generators of the spec lattice and the unimodular change of basis.
    Reduce,
    /// Automorphism splitting the spec lattice into kernel and time parts.
    Normalize,
    /// Whether the quotient by the spec lattice has a faithful matrix representation.
    Faithful,
    /// Whether the spec subgroup is closed in the quotient by the spec lattice.
    Closed,
    /// Automorphism from the spec file.
    Aut {
        #[command(subcommand)]
        action: AutAction,
    },
    /// Bounded search for an automorphism carrying the spec lattice onto another spec's lattice.
    Related { other: PathBuf },
    /// Floating-point cross-checks.
    Oracle {
        #[command(subcommand)]
        action: OracleAction,
    },
}

fn load(path: &Path) -> Result<SpecFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    SpecFile::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli, ctx: &mut Ctx) -> Result<bool, CliError> {
    let spec = match &cli.spec {
        Some(p) => Some(load(p)?),
        None => None,
    };
    if let Command::Oracle { action } = &cli.command {
        return commands::oracle(ctx, spec.as_ref(), action);
    }
    let spec = spec.ok_or_else(|| CliError::Input("--spec is required".into()))?;
    match &cli.command {
        Command::Analyze => commands::analyze(ctx, &spec),
        Command::Exp { element } => commands::exp(ctx, &spec, element),
        Command::Mul { left, right } => commands::mul(ctx, &spec, left, right),
        Command::Center { element } => commands::center(ctx, &spec, element),
        Command::Rep { kind, element } => commands::rep(ctx, &spec, *kind, element),
        Command::Reduce => commands::reduce(ctx, &spec),
        Command::Normalize => commands::normalize(ctx, &spec),
        Command::Faithful => commands::faithful(ctx, &spec),
        Command::Closed => commands::closed(ctx, &spec),
        Command::Aut { action } => commands::aut(ctx, &spec, action),
        Command::Related { other } => commands::related(ctx, &spec, &load(other)?),
        Command::Oracle { .. } => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = match commands::parse_seed(&cli.seed) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut ctx = Ctx {
        mode: cli.mode,
        digits: cli.digits,
        seed,
        bound: cli.bound,
        out: Output::new(cli.machine),
    };
    match run(&cli, &mut ctx) {
        Ok(decision) => {
            print!("{}", ctx.out.render());
            ExitCode::from(if decision { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
