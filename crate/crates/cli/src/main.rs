//! Command-line front end: JSON in, JSON out.
//!
//! Exit status 0 on success, 1 when the input parses but violates a
//! precondition (error JSON on stderr), 2 when the input cannot be parsed.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use octarray::array::{Array, Partition};
use octarray::bijections::{
    associate, associate_functional, associate_inverse, com_prime, commute, commute_sp,
    dtight_to_ssyt, pair_to_lr_tableau, ssyt_to_dtight, LrTableau, Ssyt,
};
use octarray::condense::{condense_down, condense_left, condense_right, condense_up, shape};
use octarray::error::Error;
use octarray::hive::{
    hive_to_pair, pair_to_hive, rhombus_violations, AntiStandardPair, StandardPair,
    TriangleFunction,
};
use octarray::lr::{enumerate_hives, lr_coefficient};
use octarray::octahedron::{prism_propagate, prism_top, prism_wall, rsk, rsk_inverse};
use octarray::scalar::Scalar;
use octarray::verify::{self, Config, Suite};

#[derive(Parser)]
#[command(
    name = "octarray",
    version,
    about = "Exact array calculus, hives and Littlewood-Richardson bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Condense an array in one direction.
    Condense {
        input: PathBuf,
        #[arg(long, value_enum)]
        dir: Direction,
    },
    /// Modified RSK: array to (D a, L a), or back with --inverse.
    Rsk {
        #[arg(long)]
        inverse: bool,
        #[arg(required = true, num_args = 1..=2)]
        inputs: Vec<PathBuf>,
    },
    /// Octahedron-recurrence propagation over the prism of an array.
    Propagate {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "prism")]
        emit: Emit,
    },
    /// Hive utilities.
    Hive {
        #[arg(value_enum)]
        action: HiveAction,
        input: PathBuf,
    },
    /// The commuter on a standard pair, an anti-standard pair or a hive.
    Commute {
        input: PathBuf,
        /// Input is an anti-standard pair.
        #[arg(long, conflicts_with = "functional")]
        anti: bool,
        /// Input is a hive.
        #[arg(long)]
        functional: bool,
    },
    /// The associativity bijection on two standard pairs or two hives.
    Associate {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, conflicts_with = "functional")]
        inverse: bool,
        #[arg(long)]
        functional: bool,
    },
    /// Littlewood-Richardson coefficient of comma-separated partitions.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
        /// Print the hives instead of their number.
        #[arg(long)]
        list: bool,
    },
    /// Tableau conversions and rendering.
    Tableau {
        #[arg(value_enum)]
        action: TableauAction,
        input: PathBuf,
    },
    /// Run a seeded verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_mass: Option<i64>,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Down,
    Left,
    Right,
    Up,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Prism,
    Top,
    Wall,
}

#[derive(Clone, Copy, ValueEnum)]
enum HiveAction {
    Check,
    Increments,
    ToPair,
    FromPair,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauAction {
    FromArray,
    ToArray,
    FromPair,
    Render,
}

enum Failure {
    Malformed(String),
    Invalid(Error),
    /// A check ran and failed; the report is already on stdout.
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

type Outcome = Result<Value, Failure>;

// Pairs are parsed as raw arrays first so that a well-formed pair violating
// the tightness conditions exits with 1 rather than 2.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    a: Array,
    b: Array,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSsyt {
    alphabet: usize,
    rows: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Renderable {
    Ssyt(RawSsyt),
    Skew(LrTableau),
}

fn read<T: DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn standard(path: &PathBuf) -> Result<StandardPair, Failure> {
    let raw: RawPair = read(path)?;
    Ok(StandardPair::new(raw.a, raw.b)?)
}

fn hive(path: &PathBuf) -> Result<TriangleFunction, Failure> {
    read(path)
}

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn partition(text: &str) -> Result<Partition, Failure> {
    let parts = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<Scalar>()
                .map_err(|_| Failure::Malformed(format!("bad part {p:?} in {text:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let p = Partition::new(parts)?;
    if !p.is_integer() {
        return Err(Error::NonInteger.into());
    }
    Ok(p)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Condense { input, dir } => {
            let a: Array = read(&input)?;
            let out = match dir {
                Direction::Down => condense_down(&a),
                Direction::Left => condense_left(&a),
                Direction::Right => condense_right(&a),
                Direction::Up => condense_up(&a),
            };
            Ok(value(&out))
        }
        Command::Rsk {
            inverse: false,
            inputs,
        } if inputs.len() == 1 => {
            let a: Array = read(&inputs[0])?;
            let (d, l) = rsk(&a);
            Ok(json!({ "d": value(&d), "l": value(&l), "shape": value(&shape(&a)) }))
        }
        Command::Rsk {
            inverse: true,
            inputs,
        } if inputs.len() == 2 => {
            let d: Array = read(&inputs[0])?;
            let l: Array = read(&inputs[1])?;
            Ok(value(&rsk_inverse(&d, &l)?))
        }
        Command::Rsk { inverse, .. } => Err(Failure::Malformed(format!(
            "rsk takes {} input file(s)",
            if inverse { 2 } else { 1 }
        ))),
        Command::Propagate { input, emit } => {
            let a: Array = read(&input)?;
            let prism = prism_propagate(&a);
            Ok(match emit {
                Emit::Prism => value(&prism),
                Emit::Top => value(&prism_top(&prism)),
                Emit::Wall => value(&prism_wall(&prism)),
            })
        }
        Command::Hive { action, input } => match action {
            HiveAction::Check => {
                let h = hive(&input)?;
                let violations: Vec<Value> = rhombus_violations(&h)
                    .iter()
                    .map(|v| json!({ "kind": format!("{:?}", v.kind), "at": [v.at.0, v.at.1], "excess": value(&v.excess) }))
                    .collect();
                let report =
                    json!({ "discrete_concave": violations.is_empty(), "violations": violations });
                if violations.is_empty() {
                    Ok(report)
                } else {
                    emit(&compact(&report));
                    Err(Failure::Failed)
                }
            }
            HiveAction::Increments => {
                let inc = hive(&input)?.increments();
                Ok(
                    json!({ "lambda": value(&inc.lambda), "mu": value(&inc.mu), "nu": value(&inc.nu) }),
                )
            }
            HiveAction::ToPair => Ok(value(&hive_to_pair(&hive(&input)?)?)),
            HiveAction::FromPair => Ok(value(&pair_to_hive(&standard(&input)?))),
        },
        Command::Commute {
            input,
            anti,
            functional,
        } => {
            if functional {
                Ok(value(&com_prime(&hive(&input)?)?))
            } else if anti {
                let raw: RawPair = read(&input)?;
                Ok(value(&commute(&AntiStandardPair::new(raw.a, raw.b)?)))
            } else {
                Ok(value(&commute_sp(&standard(&input)?)))
            }
        }
        Command::Associate {
            first,
            second,
            inverse,
            functional,
        } => {
            if functional {
                let (p, q) = associate_functional(&hive(&first)?, &hive(&second)?)?;
                return Ok(json!({ "first": value(&p), "second": value(&q) }));
            }
            let (x, y) = (standard(&first)?, standard(&second)?);
            let (p, q) = if inverse {
                associate_inverse(&x, &y)?
            } else {
                associate(&x, &y)?
            };
            Ok(json!({ "first": value(&p), "second": value(&q) }))
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            list,
        } => {
            let (l, m, v) = (partition(&lambda)?, partition(&mu)?, partition(&nu)?);
            if l.len() != m.len() || m.len() != v.len() {
                return Err(Error::DimensionMismatch(
                    "partitions must have the same number of parts".into(),
                )
                .into());
            }
            if list {
                Ok(value(&enumerate_hives(&l, &m, &v)))
            } else {
                Ok(json!(lr_coefficient(&l, &m, &v)))
            }
        }
        Command::Tableau { action, input } => match action {
            TableauAction::FromArray => Ok(value(&dtight_to_ssyt(&read(&input)?)?)),
            TableauAction::ToArray => {
                let raw: RawSsyt = read(&input)?;
                Ok(value(&ssyt_to_dtight(&Ssyt::new(raw.alphabet, raw.rows)?)))
            }
            TableauAction::FromPair => Ok(value(&pair_to_lr_tableau(&standard(&input)?)?)),
            TableauAction::Render => {
                let text = match read::<Renderable>(&input)? {
                    Renderable::Ssyt(raw) => Ssyt::new(raw.alphabet, raw.rows)?.to_string(),
                    Renderable::Skew(t) => {
                        t.validate()?;
                        t.to_string()
                    }
                };
                Ok(Value::String(text))
            }
        },
        Command::Verify {
            suite,
            n,
            max_mass,
            cases,
            seed,
        } => {
            let suite: Suite = suite.parse().map_err(Failure::Malformed)?;
            let d = Config::defaults(suite, seed);
            let cfg = Config {
                n: n.unwrap_or(d.n),
                max_mass: max_mass.unwrap_or(d.max_mass),
                cases: cases.unwrap_or(d.cases),
                seed,
            };
            let report = verify::run(suite, &cfg);
            let out = json!({ "suite": suite.name(), "passed": report.passed(), "checks": report.checks, "failures": report.failures });
            if report.passed() {
                Ok(out)
            } else {
                emit(&compact(&out));
                Err(Failure::Failed)
            }
        }
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

// A closed pipe downstream is not an error worth a panic.
fn emit(text: &str) {
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        // rendered tableaux are printed as text, not as a JSON string
        Ok(Value::String(text)) => {
            emit(&text);
            ExitCode::SUCCESS
        }
        Ok(v) => {
            emit(&compact(&v));
            ExitCode::SUCCESS
        }
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Invalid(e)) => {
            eprintln!("{}", json!({ "error": e.code(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Malformed(msg)) => {
            eprintln!("{}", json!({ "error": "malformed_input", "message": msg }));
            ExitCode::from(2)
        }
    }
}
