//! Command-line front end.  Every invocation prints exactly one JSON
//! report on stdout: `{command, inputs, result, version}`, compact by
//! default, indented with `--pretty`.  Malformed input produces a JSON
//! error object on stderr with a machine-readable code and exit status 2;
//! a detected internal inconsistency (an oracle contradicting a checker)
//! still prints its report but exits with status 1.
//!
//! The oracle budget comes from the `WEYLPRIM_BUDGET` environment
//! variable (default one million operator applications); `search` takes
//! an explicit `--budget` flag that overrides it.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::jantzen::{is_weyl_simple, JantzenError};
use crate::root_weight::Weight;
use crate::tableaux::{coherent_shape, enumerate_standard};
use crate::theorems::{
    search, theorem_a, theorem_b_condition, theorem_b_consistency, verify_embedding, Outcome,
    TheoremsError,
};
use crate::weyl_engine::{dim_weyl, Budget, EngineError, PrimitiveModule, Realization};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const BUDGET_ENV: &str = "WEYLPRIM_BUDGET";

const EXIT_OK: i32 = 0;
const EXIT_INCONSISTENT: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "weylprim",
    version,
    about = "Exact checks for Weyl modules of SL_n in prime characteristic",
    disable_help_subcommand = true
)]
struct Cli {
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WeightArgs {
    /// Number of basis vectors of the natural module; the rank is n - 1.
    #[arg(long)]
    n: usize,
    /// Comma-separated fundamental coordinates, n - 1 of them.
    #[arg(long)]
    weight: String,
}

#[derive(Args)]
struct LevelArgs {
    /// Divided power of the lowering operator generating the submodule.
    #[arg(long)]
    k: i64,
    /// End node of the diagram: 1 or n - 1.
    #[arg(long, default_value_t = 1)]
    q: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleArg {
    /// The Weyl module Delta(w).
    Weyl,
    /// Its simple quotient L(w).
    Simple,
}

#[derive(Subcommand)]
enum Command {
    /// Jantzen simplicity of Delta(w) over GF(p).
    SimpleCheck {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u64,
    },
    /// Weyl dimension of Delta(w) in characteristic zero.
    Dim {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Standard tableaux on the shape coherent with a subgroup weight.
    Tableaux {
        /// Ambient n; the weight belongs to the subgroup on {2, ..., n}.
        #[arg(long)]
        n: usize,
        /// Comma-separated coordinates (d_2, ..., d_{n-1}).
        #[arg(long)]
        weight: String,
    },
    /// Theorem A hypothesis report for (w, p, k, q).
    TheoremA {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        level: LevelArgs,
    },
    /// Staircase condition on the target and the full biconditional.
    TheoremB {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        level: LevelArgs,
    },
    /// Brute-force verification of the predicted embedding in L(w).
    Verify {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        level: LevelArgs,
    },
    /// Dimensions of primitive-vector spaces, per weight drop.
    Primitives {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long)]
        p: u64,
        /// Comma-separated root-basis drop; omit to scan the whole box.
        #[arg(long)]
        drop: Option<String>,
        /// Comma-separated diagram nodes whose raisings are not required
        /// to vanish.
        #[arg(long)]
        omit: Option<String>,
        /// Module in which primitivity is tested.
        #[arg(long, value_enum, default_value_t = ModuleArg::Simple)]
        module: ModuleArg,
    },
    /// Grid search over dominant weights and levels.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        /// Largest fundamental coordinate in the grid.
        #[arg(long)]
        max_coord: i64,
        /// Largest level; clamped to p - 1.
        #[arg(long)]
        k_max: i64,
        /// Operator-application budget shared by all verifications.
        #[arg(long)]
        budget: Option<u64>,
    },
}

/// A user-input failure, reported on stderr as JSON with a stable code.
struct UsageError {
    code: &'static str,
    message: String,
}

impl UsageError {
    fn new(code: &'static str, message: impl Into<String>) -> Self {
        UsageError { code, message: message.into() }
    }
}

enum RunError {
    Usage(UsageError),
    /// A checker contradicted an oracle, or an oracle overflowed; the
    /// message goes to stderr and the exit status is 1.
    Internal(String),
}

impl From<UsageError> for RunError {
    fn from(e: UsageError) -> Self {
        RunError::Usage(e)
    }
}

impl From<TheoremsError> for RunError {
    fn from(e: TheoremsError) -> Self {
        match e {
            TheoremsError::KOutOfRange { .. } => {
                RunError::Usage(UsageError::new("k_out_of_range", e.to_string()))
            }
            TheoremsError::InvalidQ { .. } => {
                RunError::Usage(UsageError::new("invalid_q", e.to_string()))
            }
            TheoremsError::RankTooSmall { .. } => {
                RunError::Usage(UsageError::new("rank_too_small", e.to_string()))
            }
            TheoremsError::NonDominant(_) => {
                RunError::Usage(UsageError::new("nondominant_weight", e.to_string()))
            }
            TheoremsError::Jantzen(j) => j.into(),
            TheoremsError::Engine(g) => g.into(),
            TheoremsError::RootWeight(r) => {
                RunError::Usage(UsageError::new("malformed_weight", r.to_string()))
            }
        }
    }
}

impl From<JantzenError> for RunError {
    fn from(e: JantzenError) -> Self {
        let code = match e {
            JantzenError::NotPrime(_) => "not_prime",
            JantzenError::NonDominant(_) => "nondominant_weight",
            JantzenError::NonPositivePairing(_) => "malformed_weight",
        };
        RunError::Usage(UsageError::new(code, e.to_string()))
    }
}

impl From<EngineError> for RunError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::NotPrime(_) => {
                RunError::Usage(UsageError::new("not_prime", e.to_string()))
            }
            EngineError::NonDominant(_) => {
                RunError::Usage(UsageError::new("nondominant_weight", e.to_string()))
            }
            EngineError::RankTooLarge { .. } | EngineError::DimensionOverflow => {
                RunError::Usage(UsageError::new("too_large", e.to_string()))
            }
            other => RunError::Internal(other.to_string()),
        }
    }
}

/// Parses a comma-separated integer list of the given length.
fn parse_coords(s: &str, expected: usize, what: &str) -> Result<Vec<i64>, UsageError> {
    let coords: Result<Vec<i64>, _> =
        s.split(',').map(|part| part.trim().parse::<i64>()).collect();
    let coords = coords.map_err(|_| {
        UsageError::new("malformed_weight", format!("cannot parse {what} {s:?}"))
    })?;
    if coords.len() != expected {
        return Err(UsageError::new(
            "malformed_weight",
            format!("{what} {s:?} has {} coordinates, expected {expected}", coords.len()),
        ));
    }
    Ok(coords)
}

/// Parses a dominant weight with `rank` fundamental coordinates.
fn parse_weight(s: &str, rank: usize) -> Result<Weight, UsageError> {
    if rank == 0 {
        return Err(UsageError::new("malformed_weight", "n must be at least 2"));
    }
    let coords = parse_coords(s, rank, "weight")?;
    let weight = Weight::new(coords)
        .map_err(|e| UsageError::new("malformed_weight", e.to_string()))?;
    if !weight.is_dominant() {
        return Err(UsageError::new(
            "nondominant_weight",
            format!("weight {weight} is not dominant"),
        ));
    }
    Ok(weight)
}

fn env_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    inputs: Value,
    result: Value,
    version: &'static str,
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

/// Runs one parsed subcommand, returning the report pieces and the exit
/// status (0, or 1 when a consistency check failed).
fn dispatch(command: &Command) -> Result<(&'static str, Value, Value, i32), RunError> {
    match command {
        Command::SimpleCheck { weight, p } => {
            let w = parse_weight(&weight.weight, weight.n.saturating_sub(1))?;
            let report = is_weyl_simple(&w, *p)?;
            let inputs = json!({ "n": weight.n, "p": p, "weight": w });
            Ok(("simple-check", inputs, json!({ "simple": report.simple }), EXIT_OK))
        }
        Command::Dim { weight } => {
            let w = parse_weight(&weight.weight, weight.n.saturating_sub(1))?;
            let dim = dim_weyl(&w)?;
            let inputs = json!({ "n": weight.n, "weight": w });
            Ok(("dim", inputs, json!({ "dimension": dim }), EXIT_OK))
        }
        Command::Tableaux { n, weight } => {
            if *n < 3 {
                return Err(UsageError::new("rank_too_small", "tableaux need n >= 3").into());
            }
            let kappa = parse_weight(weight, n.saturating_sub(2))?;
            let shape = coherent_shape(&kappa)
                .map_err(|e| UsageError::new("malformed_weight", e.to_string()))?;
            let count = enumerate_standard(&shape).len() as u64;
            let dim = dim_weyl(&kappa)?;
            let inputs = json!({ "n": n, "weight": kappa });
            let result = json!({
                "shape": shape.lambda(),
                "standard_count": count,
                "weyl_dimension": dim,
            });
            let status = if count == dim { EXIT_OK } else { EXIT_INCONSISTENT };
            Ok(("tableaux", inputs, result, status))
        }
        Command::TheoremA { weight, p, level } => {
            let w = parse_weight(&weight.weight, weight.n.saturating_sub(1))?;
            let report = theorem_a(&w, *p, level.k, level.q)?;
            let inputs = json!({ "n": weight.n, "p": p, "weight": w, "k": level.k, "q": level.q });
            Ok(("theorem-a", inputs, to_value(&report), EXIT_OK))
        }
        Command::TheoremB { weight, p, level } => {
            let w = parse_weight(&weight.weight, weight.n.saturating_sub(1))?;
            let budget = Budget::new(env_budget());
            let certificate = theorem_b_condition(&w, *p, level.k, level.q, &budget)?;
            let consistency = theorem_b_consistency(&w, *p, level.k, level.q, &budget)?;
            let status = match consistency.as_done() {
                Some(rep) if !rep.consistent => EXIT_INCONSISTENT,
                _ => EXIT_OK,
            };
            let inputs = json!({ "n": weight.n, "p": p, "weight": w, "k": level.k, "q": level.q });
            let result = json!({
                "certificate": to_value(&certificate),
                "consistency": to_value(&consistency),
            });
            Ok(("theorem-b", inputs, result, status))
        }
        Command::Verify { weight, p, level } => {
            let w = parse_weight(&weight.weight, weight.n.saturating_sub(1))?;
            let report = theorem_a(&w, *p, level.k, level.q)?;
            let budget = Budget::new(env_budget());
            let embedding = verify_embedding(&w, *p, level.k, level.q, &budget)?;
            let status = match embedding.as_done() {
                Some(e) if report.applies && !e.is_weyl => EXIT_INCONSISTENT,
                _ => EXIT_OK,
            };
            let inputs = json!({ "n": weight.n, "p": p, "weight": w, "k": level.k, "q": level.q });
            Ok(("verify", inputs, to_value(&embedding), status))
        }
        Command::Primitives { weight, p, drop, omit, module } => {
            let w = parse_weight(&weight.weight, weight.n.saturating_sub(1))?;
            let omitted: Vec<usize> = match omit {
                Some(s) => parse_coords(s, s.split(',').count(), "omit list")?
                    .into_iter()
                    .map(|v| v as usize)
                    .collect(),
                None => Vec::new(),
            };
            let module_kind = match module {
                ModuleArg::Weyl => PrimitiveModule::Weyl,
                ModuleArg::Simple => PrimitiveModule::Simple,
            };
            let module_name = match module {
                ModuleArg::Weyl => "weyl",
                ModuleArg::Simple => "simple",
            };
            let budget = Budget::new(env_budget());
            let real = Realization::with_budget(&w, *p, budget)?;
            let inputs = json!({
                "n": weight.n, "p": p, "weight": w,
                "drop": drop, "omit": omitted, "module": module_name,
            });
            let result = match drop {
                Some(s) => {
                    let d = parse_coords(s, w.rank(), "drop")?;
                    let mu = real.weight_of_drop(&d);
                    let basis = real.primitive_vectors(&mu, &omitted, module_kind)?;
                    json!({ "mu": mu, "drop": d, "dimension": basis.dimension() })
                }
                None => {
                    let drops = real.primitive_weight_drops(&omitted, module_kind)?;
                    json!({ "drops": drops })
                }
            };
            Ok(("primitives", inputs, result, EXIT_OK))
        }
        Command::Search { n, p, max_coord, k_max, budget } => {
            let effective = budget.unwrap_or_else(env_budget);
            let records = search(*n, *p, *max_coord, *k_max, effective)?;
            let mut status = EXIT_OK;
            for record in &records {
                if let (true, Outcome::Done(dim)) =
                    (record.theorem_a.applies, &record.verified_dim)
                {
                    let expected = dim_weyl(&record.theorem_a.target)?;
                    let confirmed_false =
                        record.primitives_confirmed == Outcome::Done(false);
                    if *dim != expected || (*dim == expected && confirmed_false) {
                        status = EXIT_INCONSISTENT;
                    }
                }
            }
            let inputs = json!({
                "n": n, "p": p, "max_coord": max_coord,
                "k_max": k_max, "budget": effective,
            });
            Ok(("search", inputs, to_value(&records), status))
        }
    }
}

/// Parses `args` and runs the command, printing the report on stdout or
/// an error object on stderr.  Returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{err}");
                    return EXIT_OK;
                }
                ErrorKind::InvalidSubcommand | ErrorKind::UnknownArgument => {
                    let code = if err.kind() == ErrorKind::InvalidSubcommand {
                        "unknown_subcommand"
                    } else {
                        "usage"
                    };
                    print_usage_error(&UsageError::new(code, err.to_string()));
                }
                _ => print_usage_error(&UsageError::new("usage", err.to_string())),
            }
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli.command) {
        Ok((command, inputs, result, status)) => {
            let report =
                Report { command, inputs, result, version: env!("CARGO_PKG_VERSION") };
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&report)
            } else {
                serde_json::to_string(&report)
            }
            .expect("reports serialize");
            // Ignore EPIPE so `weylprim ... | head` exits cleanly.
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{rendered}");
            status
        }
        Err(RunError::Usage(err)) => {
            print_usage_error(&err);
            EXIT_USAGE
        }
        Err(RunError::Internal(message)) => {
            eprintln!("{}", json!({ "error": { "code": "internal", "message": message } }));
            EXIT_INCONSISTENT
        }
    }
}

fn print_usage_error(err: &UsageError) {
    eprintln!(
        "{}",
        json!({ "error": { "code": err.code, "message": err.message } })
    );
}
