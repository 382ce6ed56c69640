//! `bkkit`: command-line front end. Every run prints one JSON envelope, on a single
//! line, to stdout.
//!
//! Exit codes: 0 success, 2 malformed input, 3 unsupported or degenerate input,
//! 4 oracle inconclusive.

mod commands;
mod json;

use bkkit::{Error, SupportSet};
use clap::{ArgGroup, Args, Parser, Subcommand};
use commands::{CheckKind, CountKind, Failure, Identity, OracleKind, Output, TropicalKind};
use serde_json::{json, Map, Value};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bkkit", version, about = "Exact polytope computations for sparse polynomial systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Files {
    /// Support files (`{"dim": n, "points": [[...], ...]}`); `-` reads stdin.
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

#[derive(Args)]
struct Axis {
    /// 1-based coordinate index.
    #[arg(long, default_value_t = 1)]
    axis: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice volume of the convex hull.
    Volume(Files),
    /// Mixed volume of the convex hulls.
    Mv(Files),
    /// Euler characteristic of a generic complete intersection.
    EulerBkk {
        #[command(flatten)]
        files: Files,
        /// Ambient dimension (defaults to that of the supports).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Critical incremental polytope.
    Hat {
        #[command(flatten)]
        files: Files,
        #[command(flatten)]
        axis: Axis,
    },
    /// Symmetric incremental polytope, denominator and reduced polytope.
    CheckIncr(Files),
    /// Summary for the critical complete intersection {f = df/dx_axis = 0}.
    CriticalCi {
        #[command(flatten)]
        files: Files,
        #[command(flatten)]
        axis: Axis,
    },
    /// Summary for the symmetric complete intersection {f(x) = f(Ix) = 0}.
    SymmetricCi(Files),
    /// Critical point counts as sums over faces.
    Count {
        #[command(flatten)]
        files: Files,
        #[arg(long, value_enum, default_value = "df")]
        mode: CountKind,
        /// Use the face recursion (df only).
        #[arg(long)]
        recursive: bool,
        #[command(flatten)]
        axis: Axis,
    },
    /// Critical points of the Lagrange function of f_0 on {f_1 = ... = f_k = 0}.
    AlgebraicDegree(Files),
    /// Multiplicities and Euler obstructions along every face.
    Obstructions(Files),
    /// Support sequence of a system with the given coefficient vectors.
    SupportSeq {
        #[command(flatten)]
        files: Files,
        #[arg(long)]
        vectors: PathBuf,
        /// Covector, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        l: String,
    },
    /// Tropical fans of the critical or symmetric complete intersection.
    Tropical {
        #[command(flatten)]
        files: Files,
        #[arg(long = "type", value_enum)]
        kind: TropicalKind,
        #[command(flatten)]
        axis: Axis,
    },
    /// Combinatorial checks.
    #[command(group(ArgGroup::new("what").required(true).args(["reflexive", "compatible", "irreducible", "condition_star", "blinders"])))]
    Check {
        #[command(flatten)]
        files: Files,
        #[arg(long)]
        reflexive: bool,
        /// Fan file to test against the normal fan.
        #[arg(long, value_name = "FAN")]
        compatible: Option<PathBuf>,
        #[arg(long)]
        irreducible: bool,
        #[arg(long)]
        condition_star: bool,
        #[arg(long)]
        blinders: bool,
    },
    /// Brute-force root counts for one or two variables.
    Oracle {
        #[command(flatten)]
        files: Files,
        #[arg(long, value_enum)]
        mode: OracleKind,
        /// Which critical system to solve.
        #[arg(long, value_enum, default_value = "df")]
        system: CountKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Both sides of a localization or cross-check identity.
    Identities {
        #[command(flatten)]
        files: Files,
        #[arg(long, value_enum)]
        which: Identity,
        #[command(flatten)]
        axis: Axis,
    },
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn load(files: &Files) -> Result<Vec<SupportSet>, Failure> {
    files
        .files
        .iter()
        .map(|p| json::parse_support(&read_json(p)?).map_err(|m| Failure::Malformed(format!("{}: {}", p.display(), m.0))))
        .collect()
}

fn name_and_inputs(cmd: &Command) -> (&'static str, Value) {
    let paths = |f: &Files| -> Vec<String> { f.files.iter().map(|p| p.display().to_string()).collect() };
    match cmd {
        Command::Volume(f) => ("volume", json!({ "files": paths(f) })),
        Command::Mv(f) => ("mv", json!({ "files": paths(f) })),
        Command::EulerBkk { files, n } => ("euler-bkk", json!({ "files": paths(files), "n": n })),
        Command::Hat { files, axis } => ("hat", json!({ "files": paths(files), "axis": axis.axis })),
        Command::CheckIncr(f) => ("check-incr", json!({ "files": paths(f) })),
        Command::CriticalCi { files, axis } => ("critical-ci", json!({ "files": paths(files), "axis": axis.axis })),
        Command::SymmetricCi(f) => ("symmetric-ci", json!({ "files": paths(f) })),
        Command::Count { files, mode, recursive, axis } => (
            "count",
            json!({ "files": paths(files), "mode": format!("{mode:?}").to_lowercase(), "recursive": recursive, "axis": axis.axis }),
        ),
        Command::AlgebraicDegree(f) => ("algebraic-degree", json!({ "files": paths(f) })),
        Command::Obstructions(f) => ("obstructions", json!({ "files": paths(f) })),
        Command::SupportSeq { files, vectors, l } => {
            ("support-seq", json!({ "files": paths(files), "vectors": vectors.display().to_string(), "l": l }))
        }
        Command::Tropical { files, kind, axis } => (
            "tropical",
            json!({ "files": paths(files), "type": format!("{kind:?}").to_lowercase(), "axis": axis.axis }),
        ),
        Command::Check { files, reflexive, compatible, irreducible, condition_star, blinders } => (
            "check",
            json!({
                "files": paths(files),
                "reflexive": reflexive,
                "compatible": compatible.as_ref().map(|p| p.display().to_string()),
                "irreducible": irreducible,
                "condition_star": condition_star,
                "blinders": blinders,
            }),
        ),
        Command::Oracle { files, mode, system, seed } => (
            "oracle",
            json!({
                "files": paths(files),
                "mode": format!("{mode:?}").to_lowercase(),
                "system": format!("{system:?}").to_lowercase(),
                "seed": seed.to_string(),
            }),
        ),
        Command::Identities { files, which, axis } => (
            "identities",
            json!({ "files": paths(files), "which": format!("{which:?}").to_lowercase(), "axis": axis.axis }),
        ),
    }
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Volume(f) => commands::volume(&load(f)?),
        Command::Mv(f) => commands::mv(&load(f)?),
        Command::EulerBkk { files, n } => commands::euler_bkk_cmd(&load(files)?, *n),
        Command::Hat { files, axis } => commands::hat(&load(files)?, axis.axis),
        Command::CheckIncr(f) => commands::check_incr(&load(f)?),
        Command::CriticalCi { files, axis } => commands::critical_ci(&load(files)?, axis.axis),
        Command::SymmetricCi(f) => commands::symmetric_ci(&load(f)?),
        Command::Count { files, mode, recursive, axis } => commands::count(&load(files)?, *mode, *recursive, axis.axis),
        Command::AlgebraicDegree(f) => commands::algebraic_degree_cmd(&load(f)?),
        Command::Obstructions(f) => commands::obstructions(&load(f)?),
        Command::SupportSeq { files, vectors, l } => {
            let sets = load(files)?;
            commands::support_seq(&sets, &read_json(vectors)?, l)
        }
        Command::Tropical { files, kind, axis } => commands::tropical(&load(files)?, *kind, axis.axis),
        Command::Check { files, reflexive, compatible, irreducible, condition_star, blinders } => {
            let sets = load(files)?;
            let fan = compatible.as_ref().map(read_json).transpose()?;
            let kind = match () {
                _ if *reflexive => CheckKind::Reflexive,
                _ if fan.is_some() => CheckKind::Compatible,
                _ if *irreducible => CheckKind::Irreducible,
                _ if *condition_star => CheckKind::ConditionStar,
                _ => {
                    debug_assert!(*blinders);
                    CheckKind::Blinders
                }
            };
            commands::check(&sets, kind, fan.as_ref())
        }
        Command::Oracle { files, mode, system, seed } => commands::oracle(&load(files)?, *mode, *system, *seed),
        Command::Identities { files, which, axis } => commands::identities(&load(files)?, *which, axis.axis),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::OracleInconclusive(_) => 4,
        Error::EmptySupport
        | Error::WrongLength { .. }
        | Error::DuplicatePoint
        | Error::DimensionMismatch(_)
        | Error::UnboundSymbol(_)
        | Error::InvalidInput(_) => 2,
        _ => 3,
    }
}

fn emit(v: &Value) {
    // a closed pipe is not worth a panic
    let _ = writeln!(std::io::stdout(), "{v}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit(&json!({
                "error": { "reason": "UsageError", "message": e.render().to_string().trim_end() },
                "assumptions": [],
                "version": env!("CARGO_PKG_VERSION"),
            }));
            return ExitCode::from(2);
        }
    };
    let (name, inputs) = name_and_inputs(&cli.command);
    let mut env = Map::new();
    env.insert("command".into(), json!(name));
    env.insert("inputs".into(), inputs);
    env.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    env.insert("assumptions".into(), json!([]));
    let code = match run(&cli.command) {
        Ok(out) => {
            env.insert("result".into(), out.result);
            env.insert("assumptions".into(), json!(out.assumptions));
            for (k, v) in out.extra {
                env.insert(k, v);
            }
            0
        }
        Err(Failure::Malformed(msg)) => {
            env.insert("error".into(), json!({ "reason": "MalformedInput", "message": msg }));
            2
        }
        Err(Failure::Math(e)) => {
            env.insert("error".into(), json!({ "reason": e.reason(), "message": e.to_string() }));
            exit_code(&e)
        }
    };
    emit(&Value::Object(env));
    ExitCode::from(code)
}
