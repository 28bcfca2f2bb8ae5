//! Command-line front end.
//!
//! Exit status: 0 on success or a passing verification, 1 when a verification
//! fails, 2 on usage or input errors, 3 when a size limit would be exceeded
//! without `--force`.

use std::io::{Read, Write};
use std::process::ExitCode;
use std::str::FromStr;

use cactus3_core::bijection::{theta_forward, theta_inverse};
use cactus3_core::cactus::export_dot;
use cactus3_core::counting::{cc_count_from_table, i_count_formula, jackson_symmetric};
use cactus3_core::tree::{ct_count_formula, enumerate_ct_with_limit, TreeProfile};
use cactus3_core::{DEFAULT_MAX_N, DEFAULT_MAX_TREE_VERTICES};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::json::{cactus_to_json, parse_cactus, parse_triple, parse_tuple, tuple_to_json};
use crate::parallel::m_table;
use crate::report::Outcome;
use crate::{table, verify};

/// Environment variable overriding the default enumeration limit on `n`.
pub const MAX_N_ENV: &str = "CACTUS3_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "cactus3",
    version,
    about = "Factorizations of the long cycle into three permutations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Worker threads for brute-force enumeration.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    /// Ignore the enumeration size limits.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Table of M(n1, n2, n3, n) by brute force.
    CountM {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Number of partitioned cacti with p1, p2, p3 blocks on [n].
    Count {
        #[arg(long)]
        p: Triple,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// Number of cactus trees with profile p1,p2,p3,a,b,c.
    CtCount {
        #[arg(long)]
        profile: Profile,
        /// Enumerate the trees instead of using the closed form.
        #[arg(long)]
        brute_force: bool,
    },
    /// Apply the bijection or its inverse to a JSON document.
    Theta {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
    /// Run a verification suite and print one JSON report per line.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
    },
    /// Graphviz rendering of the cactus of a JSON document.
    ExportDot {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, default_value = "-")]
        output: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Stirling,
    Brute,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Bijection,
    Ct,
    Jackson,
    All,
}

fn parse_list<const K: usize>(s: &str) -> std::result::Result<[u32; K], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != K {
        return Err(format!("expected {K} comma-separated integers, got {}", parts.len()));
    }
    let mut out = [0; K];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("`{part}` is not a nonnegative integer"))?;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple(pub [u32; 3]);

impl FromStr for Triple {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_list(s).map(Triple)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile(pub TreeProfile);

impl FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        parse_list(s).map(|a| Profile(TreeProfile::from_array(a)))
    }
}

/// Enumeration limits after `--force` and the environment are taken into account.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_tree_vertices: usize,
}

impl Limits {
    pub fn resolve(force: bool, env: Option<&str>) -> Result<Self> {
        if force {
            return Ok(Self {
                max_n: usize::MAX,
                max_tree_vertices: usize::MAX,
            });
        }
        let max_n = match env {
            Some(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::Usage(format!("{MAX_N_ENV} must be a nonnegative integer, got `{v}`")))?,
            None => DEFAULT_MAX_N,
        };
        Ok(Self {
            max_n,
            max_tree_vertices: DEFAULT_MAX_TREE_VERTICES,
        })
    }
}

fn read_input(path: &str) -> Result<String> {
    let io = |source| Error::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn write_output(path: &str, text: &str) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(io)
    } else {
        std::fs::write(path, text).map_err(io)
    }
}

/// What a command produced: text for stdout and whether it counts as a pass.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub passed: bool,
}

impl Output {
    fn text(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            passed: true,
        }
    }
}

fn verification(out: Outcome) -> Output {
    let mut stderr = String::new();
    if let Some(c) = &out.counterexample {
        stderr = format!("counterexample: {c}\n");
    }
    Output {
        stdout: out.to_json_lines(),
        stderr,
        passed: out.passed(),
    }
}

/// Runs a parsed command. File outputs are written here; everything else is returned.
pub fn run(cli: &Cli, limits: Limits) -> Result<Output> {
    let jobs = cli.global.jobs as usize;
    match &cli.command {
        Command::CountM { n, format } => {
            let t = m_table(*n, limits.max_n, jobs)?;
            Ok(Output::text(match format {
                TableFormat::Csv => {
                    let mut buf = Vec::new();
                    table::write_csv(&t, &mut buf)?;
                    String::from_utf8(buf).expect("csv is utf-8")
                }
                TableFormat::Json => table::to_json(&t),
            }))
        }
        Command::Count {
            p: Triple(p),
            n,
            method,
        } => {
            let value = match method {
                Method::Formula => i_count_formula(*p, *n)?.to_string(),
                Method::Symmetric => jackson_symmetric(*p, *n)?.to_string(),
                Method::Stirling => cc_count_from_table(*p, &m_table(*n, limits.max_n, jobs)?).to_string(),
                Method::Brute => verify::count_cc(*p, *n, limits.max_n, jobs)?.to_string(),
            };
            Ok(Output::text(value + "\n"))
        }
        Command::CtCount {
            profile: Profile(pr),
            brute_force,
        } => {
            let value = if *brute_force {
                enumerate_ct_with_limit(*pr, limits.max_tree_vertices)?
                    .len()
                    .to_string()
            } else {
                ct_count_formula(*pr)?.to_string()
            };
            Ok(Output::text(value + "\n"))
        }
        Command::Theta {
            direction,
            input,
            output,
        } => {
            let text = read_input(input)?;
            let result = match direction {
                Direction::Forward => tuple_to_json(&theta_forward(&parse_cactus(&text)?)?),
                Direction::Inverse => cactus_to_json(&theta_inverse(&parse_tuple(&text)?)?),
            };
            write_output(output, &result)?;
            Ok(Output::text(String::new()))
        }
        Command::Verify { suite, max_n } => {
            let k = *max_n;
            let out = match suite {
                Suite::Theorem1 => verify::verify_theorem1(k, limits.max_n, jobs)?,
                Suite::Bijection => verify::verify_bijection(k, limits.max_n, jobs)?,
                Suite::Ct => verify::verify_ct(k, limits.max_tree_vertices)?,
                Suite::Jackson => verify::verify_jackson(k)?,
                Suite::All => {
                    let mut all = verify::verify_theorem1(k, limits.max_n, jobs)?;
                    all.extend(verify::verify_bijection(k, limits.max_n, jobs)?);
                    all.extend(verify::verify_ct(k, limits.max_tree_vertices)?);
                    all.extend(verify::verify_jackson(k)?);
                    all
                }
            };
            Ok(verification(out))
        }
        Command::ExportDot { input, output } => {
            let dot = export_dot(&parse_triple(&read_input(input)?)?);
            write_output(output, &dot)?;
            Ok(Output::text(String::new()))
        }
    }
}

/// Parses arguments, runs, prints, and maps the result to an exit status.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let env = std::env::var(MAX_N_ENV).ok();
    let result = Limits::resolve(cli.global.force, env.as_deref()).and_then(|limits| run(&cli, limits));
    match result {
        Ok(out) => {
            if !out.stdout.is_empty() {
                if let Err(e) = write_output("-", &out.stdout) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            eprint!("{}", out.stderr);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("cactus3").chain(args.iter().copied())).unwrap()
    }

    fn defaults() -> Limits {
        Limits::resolve(false, None).unwrap()
    }

    #[test]
    fn count_methods_agree() {
        let mut values = Vec::new();
        for m in ["formula", "stirling", "brute", "symmetric"] {
            let out = run(&cli(&["count", "--p", "2,1,2", "--n", "4", "--method", m]), defaults()).unwrap();
            values.push(out.stdout);
        }
        assert!(values.windows(2).all(|w| w[0] == w[1]), "{values:?}");
        let out = run(&cli(&["count", "--p", "1,1,1", "--n", "4"]), defaults()).unwrap();
        assert_eq!(out.stdout, "576\n");
    }

    #[test]
    fn limits_and_environment() {
        assert_eq!(Limits::resolve(false, Some("5")).unwrap().max_n, 5);
        assert!(Limits::resolve(false, Some("five")).is_err());
        assert_eq!(Limits::resolve(true, Some("five")).unwrap().max_n, usize::MAX);
        let err = run(&cli(&["count-m", "--n", "8"]), defaults()).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        let small = Limits::resolve(false, Some("3")).unwrap();
        assert_eq!(run(&cli(&["count-m", "--n", "4"]), small).unwrap_err().exit_code(), 3);
    }

    #[test]
    fn argument_errors() {
        assert!(Cli::try_parse_from(["cactus3", "count", "--p", "1,1", "--n", "3"]).is_err());
        assert!(Cli::try_parse_from(["cactus3", "count", "--p", "1,x,1", "--n", "3"]).is_err());
        assert!(Cli::try_parse_from(["cactus3", "count-m", "--n", "3", "--jobs", "0"]).is_err());
        assert!(Cli::try_parse_from(["cactus3", "verify", "everything", "--max-n", "3"]).is_err());
    }

    #[test]
    fn ct_count_both_ways() {
        let f = run(&cli(&["ct-count", "--profile", "2,2,2,1,1,0"]), defaults()).unwrap();
        let b = run(
            &cli(&["ct-count", "--profile", "2,2,2,1,1,0", "--brute-force"]),
            defaults(),
        )
        .unwrap();
        assert_eq!(f.stdout, b.stdout);
        let degenerate = run(&cli(&["ct-count", "--profile", "1,0,0,0,0,0"]), defaults()).unwrap_err();
        assert_eq!(degenerate.exit_code(), 2);
    }

    #[test]
    fn verify_reports_pass() {
        let out = run(&cli(&["verify", "all", "--max-n", "3"]), defaults()).unwrap();
        assert!(out.passed, "{}", out.stderr);
        for line in out.stdout.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            for key in ["check", "n", "params", "pass", "lhs", "rhs"] {
                assert!(v.get(key).is_some(), "{key} missing in {line}");
            }
        }
    }
}
