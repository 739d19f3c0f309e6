//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit status together with the
//! text destined for stdout and stderr, so the binary stays a thin shell and
//! tests can drive the CLI in-process.
//!
//! Exit status: 0 on success, 1 for invalid input, 2 when an internal
//! invariant breaks (an inversion that does not sweep back, a failed
//! exhaustive check). Every error line carries a `error[TOKEN]` prefix.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::inverse::{invert_sweep, reconstruct_path, recover_ranks, InverseError};
use crate::oracle::{l2r_collision_census, verify_bijectivity, VerifyReport, DEFAULT_MAX_N};
use crate::path::{
    enumerate_paths, infer_n, labels_to_string, parse_labels, DyckPath, Label, PathError,
};
use crate::render::render_path;
use crate::sweep::{sweep_map, ScanDirection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dyck-sweep",
    version,
    about = "Sweep map and its inverse on (2n,n)-Dyck paths"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a single-line JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep a path word over {N,E}.
    Sweep {
        #[command(flatten)]
        path: PathArg,
        #[arg(long, value_enum, default_value_t = Direction::R2l)]
        direction: Direction,
    },
    /// Recover the rank sequence of a sweep word over {S,W}.
    Ranks(SigmaArg),
    /// Invert a sweep word over {S,W} back to its path.
    Invert(SigmaArg),
    /// List every path for one n.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        count_only: bool,
    },
    /// Exhaustively verify the sweep map for one n or for 1..=max-n
    /// (default max-n is 8).
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), conflicts_with = "max_n")]
        n: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: Option<u64>,
    },
    /// List left-to-right sweep words with more than one preimage.
    Collide {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Draw a path on its lattice grid.
    Render(PathArg),
}

#[derive(Debug, Args)]
pub struct PathArg {
    /// Path word over {N,E}.
    #[arg(long = "path")]
    pub word: String,
    /// Path parameter; inferred from the word length when omitted.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: Option<u64>,
}

#[derive(Debug, Args)]
pub struct SigmaArg {
    /// Sweep word over {S,W}.
    #[arg(long)]
    pub sigma: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// Right to left (the bijective sweep).
    R2l,
    /// Left to right.
    L2r,
}

impl From<Direction> for ScanDirection {
    fn from(d: Direction) -> Self {
        match d {
            Direction::R2l => ScanDirection::RightToLeft,
            Direction::L2r => ScanDirection::LeftToRight,
        }
    }
}

/// Captured result of one CLI invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input { code: &'static str, message: String },
    Internal { code: &'static str, message: String },
}

impl From<PathError> for Failure {
    fn from(err: PathError) -> Self {
        Failure::Input {
            code: err.code(),
            message: err.to_string(),
        }
    }
}

impl From<InverseError> for Failure {
    fn from(err: InverseError) -> Self {
        match err {
            InverseError::InvalidSigma(inner) => Failure::Input {
                code: inner.code(),
                message: format!("sigma is not a Dyck word: {inner}"),
            },
            other if other.is_input_error() => Failure::Input {
                code: other.code(),
                message: other.to_string(),
            },
            other => Failure::Internal {
                code: other.code(),
                message: other.to_string(),
            },
        }
    }
}

/// Text and JSON renderings of one successful command.
struct Output {
    text: String,
    json: Value,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(config) => config,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    status: EXIT_INVALID_INPUT,
                    stdout: String::new(),
                    stderr: format!("error[USAGE]: {rendered}"),
                }
            } else {
                Outcome {
                    status: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    execute(&config)
}

pub fn execute(config: &CliConfig) -> Outcome {
    let mut diagnostics = String::new();
    match dispatch(&config.command, &mut diagnostics) {
        Ok(output) => {
            let stdout = if config.json {
                format!("{}\n", output.json)
            } else {
                output.text
            };
            Outcome {
                status: EXIT_OK,
                stdout,
                stderr: diagnostics,
            }
        }
        Err((failure, partial)) => {
            let (status, code, message) = match failure {
                Failure::Input { code, message } => (EXIT_INVALID_INPUT, code, message),
                Failure::Internal { code, message } => (EXIT_INTERNAL, code, message),
            };
            let line = if config.json {
                json!({ "error": code, "message": message }).to_string()
            } else {
                format!("error[{code}]: {message}")
            };
            let stdout = match partial {
                Some(output) if config.json => format!("{}\n", output.json),
                Some(output) => output.text,
                None => String::new(),
            };
            Outcome {
                status,
                stdout,
                stderr: format!("{diagnostics}{line}\n"),
            }
        }
    }
}

type Dispatch = Result<Output, (Failure, Option<Output>)>;

fn fail<E: Into<Failure>>(err: E) -> (Failure, Option<Output>) {
    (err.into(), None)
}

fn resolve_n(explicit: Option<u64>, len: usize) -> Result<usize, PathError> {
    match explicit {
        Some(n) => {
            let n = n as usize;
            if len != 3 * n {
                return Err(PathError::WrongLength {
                    expected: 3 * n,
                    found: len,
                });
            }
            Ok(n)
        }
        None => infer_n(len),
    }
}

fn parse_path(arg: &PathArg) -> Result<DyckPath, PathError> {
    let steps = crate::path::parse_steps(&arg.word)?;
    let n = resolve_n(arg.n, steps.len())?;
    DyckPath::new(n, steps)
}

fn parse_sigma(arg: &SigmaArg) -> Result<(usize, Vec<Label>), PathError> {
    let sigma = parse_labels(&arg.sigma)?;
    let n = resolve_n(arg.n, sigma.len())?;
    DyckPath::from_labels(n, &sigma)?;
    Ok((n, sigma))
}

fn dispatch(command: &Command, diagnostics: &mut String) -> Dispatch {
    match command {
        Command::Sweep { path, direction } => {
            let path = parse_path(path).map_err(fail)?;
            let direction = ScanDirection::from(*direction);
            let swept = sweep_map(&path, direction);
            let sigma = swept.sigma_string();
            Ok(Output {
                text: format!("sigma={sigma}\ntau={}\n", swept.tau),
                json: json!({
                    "n": path.n(),
                    "path": path.to_string(),
                    "direction": direction,
                    "sigma": sigma,
                    "tau": swept.tau.as_slice(),
                }),
            })
        }
        Command::Ranks(arg) => {
            let (n, sigma) = parse_sigma(arg).map_err(fail)?;
            let tau = recover_ranks(&sigma).map_err(fail)?;
            // The ranks must rebuild a path that sweeps back to the same pair.
            let path = reconstruct_path(&sigma, &tau).map_err(fail)?;
            let swept = sweep_map(&path, ScanDirection::RightToLeft);
            if swept.sigma != sigma || swept.tau != tau {
                return Err(fail(Failure::Internal {
                    code: "ORACLE_DISAGREEMENT",
                    message: format!(
                        "recovered tau={tau} rebuilds {path}, which sweeps to sigma={} tau={}",
                        swept.sigma_string(),
                        swept.tau
                    ),
                }));
            }
            Ok(Output {
                text: format!("tau={tau}\n"),
                json: json!({
                    "n": n,
                    "sigma": labels_to_string(&sigma),
                    "tau": tau.as_slice(),
                }),
            })
        }
        Command::Invert(arg) => {
            let (n, sigma) = parse_sigma(arg).map_err(fail)?;
            let path = invert_sweep(&sigma).map_err(fail)?;
            let back = sweep_map(&path, ScanDirection::RightToLeft);
            if back.sigma != sigma {
                return Err(fail(Failure::Internal {
                    code: "ORACLE_DISAGREEMENT",
                    message: format!("inverse {path} sweeps to {}", back.sigma_string()),
                }));
            }
            Ok(Output {
                text: format!("path={path}\n"),
                json: json!({
                    "n": n,
                    "sigma": labels_to_string(&sigma),
                    "path": path.to_string(),
                }),
            })
        }
        Command::Enumerate { n, count_only } => {
            let n = *n as usize;
            if *count_only {
                let count = enumerate_paths(n).count();
                Ok(Output {
                    text: format!("count={count}\n"),
                    json: json!({ "n": n, "count": count }),
                })
            } else {
                let words: Vec<String> = enumerate_paths(n).map(|p| p.to_string()).collect();
                let mut text = String::new();
                for word in &words {
                    writeln!(text, "{word}").unwrap();
                }
                Ok(Output {
                    text,
                    json: json!({ "n": n, "count": words.len(), "paths": words }),
                })
            }
        }
        Command::Verify { n, max_n } => {
            let range = match (n, max_n) {
                (Some(n), _) => *n as usize..=*n as usize,
                (None, Some(max)) => 1..=*max as usize,
                (None, None) => 1..=DEFAULT_MAX_N,
            };
            let reports: Vec<VerifyReport> = range.map(verify_bijectivity).collect();
            let mut text = String::new();
            for report in &reports {
                writeln!(text, "{report}").unwrap();
                for ce in &report.counterexamples {
                    writeln!(
                        diagnostics,
                        "n={} {} {}: {}",
                        report.n, ce.kind, ce.path, ce.detail
                    )
                    .unwrap();
                }
            }
            let output = Output {
                text,
                json: json!({ "reports": reports }),
            };
            match reports.iter().find(|r| !r.all_ok()) {
                None => Ok(output),
                Some(bad) => Err((
                    Failure::Internal {
                        code: "VERIFY_FAILED",
                        message: format!(
                            "exhaustive check failed at n={} with {} counterexample(s)",
                            bad.n,
                            bad.counterexamples.len()
                        ),
                    },
                    Some(output),
                )),
            }
        }
        Command::Collide { n } => {
            let n = *n as usize;
            let census = l2r_collision_census(n);
            let mut text = String::new();
            for c in &census {
                writeln!(
                    text,
                    "sigma={} count={} preimages={}",
                    c.sigma,
                    c.count(),
                    c.preimages.join(",")
                )
                .unwrap();
            }
            writeln!(text, "collisions={}", census.len()).unwrap();
            let collisions: Vec<Value> = census
                .iter()
                .map(|c| json!({ "sigma": c.sigma, "count": c.count(), "preimages": c.preimages }))
                .collect();
            Ok(Output {
                text,
                json: json!({ "n": n, "collisions": collisions }),
            })
        }
        Command::Render(arg) => {
            let path = parse_path(arg).map_err(fail)?;
            let drawing = render_path(&path);
            Ok(Output {
                json: json!({ "n": path.n(), "path": path.to_string(), "drawing": drawing }),
                text: drawing,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("dyck-sweep").chain(args.iter().copied()))
    }

    #[test]
    fn sweep_text() {
        let out = cli(&["sweep", "--path", "NENEENEEE"]);
        assert_eq!(out.status, 0);
        assert_eq!(out.stdout, "sigma=SWSSWWWWW\ntau=0,3,3,3,6,6,6,9,9\n");
        let out = cli(&["sweep", "--path", "NEENEE", "--direction", "l2r"]);
        assert_eq!(out.stdout, "sigma=SSWWWW\ntau=0,0,2,2,4,4\n");
    }

    #[test]
    fn ranks_and_invert() {
        let out = cli(&["ranks", "--sigma", "SWSSWWWWW"]);
        assert_eq!(out.stdout, "tau=0,3,3,3,6,6,6,9,9\n");
        let out = cli(&["invert", "--sigma", "SWSSWWWWW"]);
        assert_eq!((out.status, out.stdout.as_str()), (0, "path=NENEENEEE\n"));
    }

    #[test]
    fn invalid_inputs_exit_one() {
        let out = cli(&["invert", "--sigma", "WSW"]);
        assert_eq!(out.status, 1);
        assert!(out.stderr.contains("BELOW_ZERO"), "{}", out.stderr);

        let out = cli(&["sweep", "--path", "SWW"]);
        assert_eq!(out.status, 1);
        assert!(out.stderr.contains("INVALID_LETTER"));

        let out = cli(&["invert", "--sigma", "NEE"]);
        assert!(out.stderr.contains("INVALID_LETTER"));

        let out = cli(&["sweep", "--path", "NEE", "--n", "2"]);
        assert!(out.stderr.contains("WRONG_LENGTH"));

        let out = cli(&["enumerate", "--n", "0"]);
        assert_eq!(out.status, 1);
        assert!(out.stderr.starts_with("error[USAGE]"));

        let out = cli(&["verify", "--n", "2", "--max-n", "3"]);
        assert_eq!(out.status, 1);
    }

    #[test]
    fn enumerate_and_collide() {
        assert_eq!(
            cli(&["enumerate", "--n", "2"]).stdout,
            "NNEEEE\nNENEEE\nNEENEE\n"
        );
        assert_eq!(
            cli(&["enumerate", "--n", "2", "--count-only"]).stdout,
            "count=3\n"
        );
        let out = cli(&["collide", "--n", "2"]);
        assert!(out.stdout.contains("sigma=SSWWWW"));
        assert!(out.stdout.contains("NEENEE"));
        assert!(out.stdout.contains("NENEEE"));
        assert_eq!(cli(&["collide", "--n", "1"]).stdout, "collisions=0\n");
    }

    #[test]
    fn verify_lines() {
        let out = cli(&["verify", "--n", "2"]);
        assert_eq!(out.status, 0);
        assert_eq!(
            out.stdout,
            "n=2 paths=3 injective=true roundtrip=true thm32=true prop31=true\n"
        );
        let out = cli(&["verify", "--max-n", "3"]);
        assert_eq!(out.stdout.lines().count(), 3);
        let out = cli(&["verify"]);
        assert_eq!(out.stdout.lines().count(), DEFAULT_MAX_N);
    }

    #[test]
    fn json_is_single_line() {
        let out = cli(&["--json", "sweep", "--path", "NENEENEEE"]);
        assert_eq!(out.stdout.lines().count(), 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["sigma"], "SWSSWWWWW");
        assert_eq!(v["tau"], json!([0, 3, 3, 3, 6, 6, 6, 9, 9]));
        assert_eq!(v["direction"], "right_to_left");

        let out = cli(&["invert", "--sigma", "WSW", "--json"]);
        let v: Value = serde_json::from_str(out.stderr.trim()).unwrap();
        assert_eq!(v["error"], "BELOW_ZERO");
    }

    #[test]
    fn help_exits_zero() {
        let out = cli(&["--help"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("invert"));
    }
}
