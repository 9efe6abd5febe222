//! Command-line front end. [`run`] takes the full argument vector and the
//! two output streams and returns the process exit code:
//! 0 success (or conjugate / equal / member), 1 negative verdict,
//! 2 usage or input error, 3 internal invariant failure.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumerate::{count_sss, enumerate_sss, verify_membership};
use crate::error::Error;
use crate::garside::{normalize, NormalForm};
use crate::ncp::{zeta, NoncrossingPartition};
use crate::parse::parse_word;
use crate::periodic::{
    classify_periodic, round_reduction_blocks, solve_csp, solve_csp_delta, PeriodicClass, Verdict,
};
use crate::summit::sss_brute_force_bounded;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "dualbraid",
    version,
    about = "Braid groups under the dual Garside structure"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Strands {
    /// Number of strands
    #[arg(short = 'n')]
    n: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Left normal form of a word
    Nf {
        #[command(flatten)]
        strands: Strands,
        word: String,
    },
    /// Whether two words represent the same braid
    Eq {
        #[command(flatten)]
        strands: Strands,
        left: String,
        right: String,
    },
    /// Periodic type of a braid
    Classify {
        #[command(flatten)]
        strands: Strands,
        word: String,
    },
    /// Conjugator to ε^k (or δ^k with --delta)
    Csp {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        /// Target δ^k instead of ε^k
        #[arg(long)]
        delta: bool,
        word: String,
    },
    /// Super summit sets of ε^d
    Sss {
        #[command(subcommand)]
        action: SssAction,
    },
    /// Number of multichains of length r in the noncrossing partitions of d points
    Zeta {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        r: u64,
    },
    /// Super summit set by brute-force closure
    OracleSss {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, default_value_t = crate::summit::DEFAULT_BRUTE_FORCE_BOUND)]
        bound: usize,
        word: String,
    },
    /// Blocks S_k = kd + {2..d+1}
    Blocks {
        #[command(flatten)]
        strands: Strands,
        #[arg(long)]
        d: usize,
    },
    /// SVG chord diagram of a simple element
    Draw {
        #[command(flatten)]
        strands: Strands,
        word: String,
    },
}

#[derive(Debug, Subcommand)]
enum SssAction {
    Count {
        #[command(flatten)]
        strands: Strands,
        #[arg(long)]
        d: usize,
    },
    Enumerate {
        #[command(flatten)]
        strands: Strands,
        #[arg(long)]
        d: usize,
    },
    Check {
        #[command(flatten)]
        strands: Strands,
        #[arg(long)]
        d: usize,
        word: String,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) | Error::IterationCap(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn read(text: &str, n: usize) -> Result<NormalForm, Failure> {
    if n < 2 {
        return Err(Failure::Usage(format!("need at least 2 strands, got {n}")));
    }
    Ok(normalize(&parse_word(text, n)?))
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "i/o error: {e}");
            EXIT_INTERNAL
        }
    }
}

fn emit_json(out: &mut dyn Write, v: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string(v).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn class_json(c: PeriodicClass) -> serde_json::Value {
    let (kind, m) = match c {
        PeriodicClass::DeltaType(m) => ("delta-type", Some(m)),
        PeriodicClass::EpsilonType(m) => ("epsilon-type", Some(m)),
        PeriodicClass::Central(m) => ("central", Some(m)),
        PeriodicClass::NonPeriodic => ("non-periodic", None),
    };
    json!({ "kind": kind, "m": m })
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Nf { strands, word } => {
            let x = read(word, strands.n)?;
            if json {
                emit_json(out, &x)?;
            } else {
                writeln!(out, "{x}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Eq {
            strands,
            left,
            right,
        } => {
            let equal = read(left, strands.n)? == read(right, strands.n)?;
            if json {
                emit_json(out, &json!({ "equal": equal }))?;
            } else {
                writeln!(out, "{equal}")?;
            }
            Ok(if equal { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Classify { strands, word } => {
            let c = classify_periodic(&read(word, strands.n)?);
            if json {
                emit_json(out, &class_json(c))?;
            } else {
                writeln!(out, "{c}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Csp {
            strands,
            k,
            delta,
            word,
        } => {
            let x = read(word, strands.n)?;
            let verdict = if *delta {
                solve_csp_delta(&x, *k)?
            } else {
                solve_csp(&x, *k)?
            };
            if json {
                emit_json(out, &verdict)?;
            } else {
                match &verdict {
                    Verdict::Conjugate(c) => {
                        writeln!(
                            out,
                            "conjugate: {}",
                            if c.verified { "verified" } else { "UNVERIFIED" }
                        )?;
                        writeln!(out, "gamma: {}", c.gamma)?;
                    }
                    Verdict::NotConjugate(v) => writeln!(out, "not conjugate: {}", v.reason)?,
                }
            }
            match verdict {
                Verdict::Conjugate(c) if c.verified => Ok(EXIT_OK),
                Verdict::Conjugate(_) => {
                    Err(Failure::Internal("conjugator failed verification".into()))
                }
                Verdict::NotConjugate(_) => Ok(EXIT_NEGATIVE),
            }
        }
        Command::Sss { action } => sss(action, json, out),
        Command::Zeta { d, r } => {
            let z = zeta(*d, *r)?;
            if json {
                emit_json(out, &json!({ "d": d, "r": r, "zeta": z }))?;
            } else {
                writeln!(out, "{z}")?;
            }
            Ok(EXIT_OK)
        }
        Command::OracleSss {
            strands,
            bound,
            word,
        } => {
            let x = read(word, strands.n)?;
            let set = sss_brute_force_bounded(&x, *bound)?;
            if json {
                emit_json(out, &set)?;
            } else {
                for y in &set {
                    writeln!(out, "{y}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Blocks { strands, d } => {
            let blocks = round_reduction_blocks(strands.n, *d)?;
            if json {
                emit_json(out, &blocks)?;
            } else {
                let parts: Vec<String> = blocks
                    .iter()
                    .map(|b| {
                        let items: Vec<String> = b.iter().map(|i| i.to_string()).collect();
                        format!("{{{}}}", items.join(","))
                    })
                    .collect();
                writeln!(out, "{}", parts.join(" "))?;
            }
            Ok(EXIT_OK)
        }
        Command::Draw { strands, word } => {
            let x = read(word, strands.n)?;
            let a = match (x.inf(), x.factors()) {
                (0, []) => NoncrossingPartition::identity(x.n()),
                (1, []) => NoncrossingPartition::delta(x.n()),
                (0, [a]) => a.clone(),
                _ => return Err(Failure::Usage(format!("{x} is not a simple element"))),
            };
            write!(out, "{}", crate::draw::simple_to_svg(&a))?;
            Ok(EXIT_OK)
        }
    }
}

fn sss(action: &SssAction, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    match action {
        SssAction::Count { strands, d } => {
            let count = count_sss(strands.n, *d)?;
            if json {
                emit_json(out, &json!({ "n": strands.n, "d": d, "count": count }))?;
            } else {
                writeln!(out, "{count}")?;
            }
            Ok(EXIT_OK)
        }
        SssAction::Enumerate { strands, d } => {
            let table = enumerate_sss(strands.n, *d)?;
            if json {
                table.write_jsonl(&mut *out)?;
            } else {
                for x in &table.elements {
                    writeln!(out, "{x}")?;
                }
            }
            Ok(EXIT_OK)
        }
        SssAction::Check { strands, d, word } => {
            let x = read(word, strands.n)?;
            crate::enumerate::rounds(strands.n, *d)?;
            let member = verify_membership(&x, strands.n, *d);
            if json {
                emit_json(out, &json!({ "member": member }))?;
            } else {
                writeln!(out, "{member}")?;
            }
            Ok(if member { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}
