//! `jetdisc`: jet-scheme singularity invariants from a session file.
//!
//! Every command prints one JSON report on stdout. Exit codes: 0 success,
//! 2 parse error, 3 precondition or validation error, 4 resource limit,
//! 5 verify FAIL.

mod commands;
mod context;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use context::{CliError, Context};

#[derive(Debug, Parser)]
#[command(
    name = "jetdisc",
    version,
    about = "Jet-scheme singularity invariants with exact arithmetic"
)]
struct Cli {
    /// Session file to load.
    #[arg(long, global = true, conflicts_with = "suite")]
    session: Option<PathBuf>,
    /// Built-in fixture session (cusp, quadric-cone, whitney-umbrella, a2,
    /// twisted-cubic-cone, plane, space).
    #[arg(long, global = true)]
    suite: Option<String>,
    /// Seed for generic-point sampling.
    #[arg(long, global = true, default_value_t = jetdisc::sampling::SamplingConfig::default().seed)]
    seed: u64,
    /// Name of the ideal defining X.
    #[arg(long, global = true, default_value = "X")]
    ideal: String,
    /// Dimension of X; inferred when omitted.
    #[arg(long, global = true)]
    dim: Option<usize>,
    /// Gröbner degree cap.
    #[arg(long, global = true)]
    max_degree: Option<u32>,
    /// Gröbner pending-pair cap.
    #[arg(long, global = true)]
    max_pairs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Jacobian ideal of X.
    Jac,
    /// lci-defect ideal `(I_V : I_X) + I_X` for a complete intersection V.
    Lcidefect {
        #[arg(long = "V", visible_alias = "v")]
        v: String,
    },
    /// Equations of the jet scheme X_m.
    Jets {
        #[arg(short)]
        m: usize,
    },
    /// Tangent-space dimension of X_m at an arc.
    Tdim {
        #[arg(long)]
        arc: String,
        #[arg(short)]
        m: Option<usize>,
    },
    /// km, kj and aj along one chart.
    Disc {
        #[arg(long)]
        chart: String,
        #[arg(long)]
        rideal: Option<String>,
    },
    /// Minimal log J-discrepancy over a chart set.
    Mld {
        #[arg(long)]
        charts: String,
        #[arg(long)]
        center: String,
        #[arg(long)]
        rideal: Option<String>,
    },
    /// Log J-canonical threshold over a chart set.
    Lct {
        #[arg(long)]
        charts: String,
        #[arg(long)]
        rideal: String,
    },
    /// Multiplier-ideal membership with per-chart certificate.
    Member {
        #[arg(long, required_unless_present = "num", conflicts_with_all = ["num", "den"])]
        g: Option<String>,
        #[arg(long, requires = "den")]
        num: Option<String>,
        #[arg(long, requires = "num")]
        den: Option<String>,
        #[arg(long)]
        rideal: String,
        #[arg(long)]
        charts: String,
        #[arg(long, value_enum, default_value_t = MultiplierKind::Mather)]
        kind: MultiplierKind,
    },
    /// Run a consistency check on a session and report PASS/FAIL.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(short)]
        m: Option<usize>,
        #[arg(long, default_value = "S")]
        charts: String,
    },
    /// J-canonical and log J-canonical verdicts with implications.
    Classify {
        #[arg(long)]
        charts: String,
        /// Ideals of complete intersections containing X.
        #[arg(long, value_delimiter = ',')]
        dlist: Vec<String>,
    },
    /// Canonical form of the session.
    Print,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MultiplierKind {
    Mather,
    Jacobian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    #[value(name = "prop51")]
    Prop51,
    #[value(name = "thmB")]
    ThmB,
    Lci,
    Colon,
    Invadj,
    Monomial,
}

fn run(cli: Cli) -> Result<(serde_json::Value, bool), CliError> {
    let ctx = Context::load(&cli)?;
    let mut pass = true;
    let result = match &cli.command {
        Command::Jac => commands::jac(&ctx)?,
        Command::Lcidefect { v } => commands::lcidefect(&ctx, v)?,
        Command::Jets { m } => commands::jets(&ctx, *m)?,
        Command::Tdim { arc, m } => commands::tdim(&ctx, arc, *m)?,
        Command::Disc { chart, rideal } => commands::disc(&ctx, chart, rideal.as_deref())?,
        Command::Mld {
            charts,
            center,
            rideal,
        } => commands::mld(&ctx, charts, center, rideal.as_deref())?,
        Command::Lct { charts, rideal } => commands::lct(&ctx, charts, rideal)?,
        Command::Member {
            g,
            num,
            den,
            rideal,
            charts,
            kind,
        } => {
            let target = match (g, num, den) {
                (Some(g), _, _) => commands::MemberTarget::Poly(g),
                (None, Some(num), Some(den)) => commands::MemberTarget::Fraction(num, den),
                _ => unreachable!("clap enforces --g or --num/--den"),
            };
            commands::member(
                &ctx,
                target,
                rideal,
                charts,
                *kind == MultiplierKind::Jacobian,
            )?
        }
        Command::Verify { check, m, charts } => {
            let (value, ok) = verify::run(&ctx, *check, *m, charts)?;
            pass = ok;
            value
        }
        Command::Classify { charts, dlist } => commands::classify(&ctx, charts, dlist)?,
        Command::Print => commands::print(&ctx),
    };
    Ok((ctx.report(command_name(&cli.command), result), pass))
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Jac => "jac",
        Command::Lcidefect { .. } => "lcidefect",
        Command::Jets { .. } => "jets",
        Command::Tdim { .. } => "tdim",
        Command::Disc { .. } => "disc",
        Command::Mld { .. } => "mld",
        Command::Lct { .. } => "lct",
        Command::Member { .. } => "member",
        Command::Verify { .. } => "verify",
        Command::Classify { .. } => "classify",
        Command::Print => "print",
    }
}

/// A closed stdout is not an error of the computation.
fn emit(report: &serde_json::Value) {
    let text = serde_json::to_string_pretty(report).expect("serializable report");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    match run(cli) {
        Ok((report, pass)) => {
            emit(&report);
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(5)
            }
        }
        Err(e) => {
            let report = serde_json::json!({
                "schema": context::SCHEMA,
                "command": name,
                "error": { "code": e.code, "message": e.message },
            });
            emit(&report);
            eprintln!("error: {}", e.message);
            ExitCode::from(e.exit_code)
        }
    }
}
