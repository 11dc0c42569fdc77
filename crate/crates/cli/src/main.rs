use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jacq::evaluators::{run_bench, Method};
use jacq::genfunc::RationalSeries;
use jacq::harness::{verify, Summary, VerifyConfig, DEFAULT_MAX_R};
use jacq::matrices::{self, Matrix};
use jacq::quaternion::{jlq_term, jq_term};
use jacq::sequences::{seq_term, sum_closed, sum_direct};
use jacq::{Error, Identity, IdentityReport, Rational, Ring, SeqKind};

#[derive(Parser)]
#[command(name = "jacq", version, about = "Exact third-order Jacobsthal numbers, quaternions and identity checks")]
struct Cli {
    /// Output format for records.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SumMethod {
    Direct,
    Closed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "verbatim")]
enum MatrixName {
    M,
    L,
    F,
    A,
    Q,
    B,
    H,
    R,
    #[value(name = "RM")]
    Rm,
}

#[derive(Subcommand)]
enum Command {
    /// Value of J3, j3, J2 or jL2 at n.
    Term {
        #[arg(long)]
        seq: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Quaternion JQ3 or jQ3 at n >= 0.
    Qterm {
        #[arg(long)]
        seq: String,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Sum of J3(r·k) for k = 0..=n.
    Sum {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = SumMethod::Direct)]
        method: SumMethod,
    },
    /// Check an identity (or `all`) over an index range.
    Verify {
        #[arg(long)]
        identity: String,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// Largest stride r for stride-dependent identities.
        #[arg(long, env = "JACQ_MAX_R", default_value_t = DEFAULT_MAX_R)]
        max_r: i64,
    },
    /// Taylor coefficients of the quaternion generating function.
    Series {
        #[arg(long, default_value = "JQ3")]
        seq: String,
        #[arg(long, default_value_t = 10)]
        terms: u64,
        /// Print the degree-2 numerator instead of coefficients.
        #[arg(long)]
        numerator: bool,
    },
    /// Print one of the generating matrices as row-major entry strings.
    Matrix {
        #[arg(long, value_enum)]
        name: MatrixName,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value_t = 1)]
        n: i64,
        /// Raise the matrix to this power before printing.
        #[arg(long)]
        power: Option<u64>,
    },
    /// Compute J3(n) by several methods, check agreement and time them.
    Bench {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', default_value = "recurrence,matrix,binet,closed-form")]
        methods: Vec<String>,
    },
}

enum Failure {
    /// Exit 2.
    Usage(String),
    /// Exit 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    format: Format,
    header_written: bool,
    out: io::StdoutLock<'static>,
}

impl Output {
    fn new(format: Format) -> Self {
        Output {
            format,
            header_written: false,
            out: io::stdout().lock(),
        }
    }

    /// One record: a JSON line, or a CSV row under `header`.
    fn record(&mut self, value: &Value, header: &[&str]) -> io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", value),
            Format::Csv => {
                if !self.header_written {
                    writeln!(self.out, "{}", csv_line(header.iter().map(|h| h.to_string())))?;
                    self.header_written = true;
                }
                let cells = header.iter().map(|h| match value.get(*h) {
                    None | Some(Value::Null) => String::new(),
                    Some(Value::String(s)) => s.clone(),
                    Some(other) => other.to_string(),
                });
                writeln!(self.out, "{}", csv_line(cells))
            }
        }
    }
}

fn csv_line(cells: impl Iterator<Item = String>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(cells).expect("in-memory csv write");
    let mut bytes = w.into_inner().expect("in-memory csv flush");
    bytes.pop();
    String::from_utf8(bytes).expect("csv output is utf-8")
}

fn parse_quaternion_seq(seq: &str) -> Result<fn(u64) -> jacq::quaternion::RationalQuaternion, Failure> {
    match seq {
        "JQ3" => Ok(jq_term),
        "jQ3" => Ok(jlq_term),
        other => Err(Failure::Usage(format!("unknown quaternion sequence `{other}` (expected JQ3 or jQ3)"))),
    }
}

fn matrix_value<R: Ring + serde::Serialize>(m: Matrix<R>, power: Option<u64>) -> Value {
    let m = match power {
        Some(p) => m.pow(p),
        None => m,
    };
    serde_json::to_value(&m).expect("matrix serializes")
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = Output::new(cli.format);
    let io_err = |e: io::Error| Failure::Usage(format!("write failed: {e}"));
    match cli.command {
        Command::Term { seq, n } => {
            let kind: SeqKind = seq.parse()?;
            let value = seq_term(kind, n)?;
            out.record(&json!({"seq": kind.as_str(), "n": n, "value": value.to_string()}), &["seq", "n", "value"])
                .map_err(io_err)?;
        }
        Command::Qterm { seq, n } => {
            let f = parse_quaternion_seq(&seq)?;
            if n < 0 {
                return Err(Failure::Usage(format!("{seq} is defined for n >= 0, got {n}")));
            }
            let q = f(n as u64);
            let value = if cli.format == Format::Csv {
                json!({"seq": seq, "n": n, "s": q.s, "i": q.i, "j": q.j, "k": q.k})
            } else {
                json!({"seq": seq, "n": n, "value": q})
            };
            out.record(&value, &["seq", "n", "s", "i", "j", "k"]).map_err(io_err)?;
        }
        Command::Sum { r, n, method } => {
            if r < 1 || n < 0 {
                return Err(Failure::Usage("sum needs r >= 1 and n >= 0".to_string()));
            }
            let (name, value): (&str, Rational) = match method {
                SumMethod::Direct => ("direct", sum_direct(r, n)),
                SumMethod::Closed => {
                    if n < 1 {
                        return Err(Failure::Usage("closed sum formula needs n >= 1".to_string()));
                    }
                    ("closed", sum_closed(r, n)?)
                }
            };
            out.record(
                &json!({"r": r, "n": n, "method": name, "value": value.to_string()}),
                &["r", "n", "method", "value"],
            )
            .map_err(io_err)?;
        }
        Command::Verify { identity, from, to, max_r } => {
            if from > to {
                return Err(Failure::Usage(format!("--from {from} exceeds --to {to}")));
            }
            let identities: Vec<Identity> = if identity == "all" {
                Identity::suite().collect()
            } else {
                identity
                    .split(',')
                    .map(|t| t.trim().parse::<Identity>())
                    .collect::<Result<_, _>>()?
            };
            let reports = verify(&VerifyConfig::new(identities, from, to).with_max_r(max_r));
            const HEADER: [&str; 8] = ["identity", "n", "r", "s", "status", "lhs", "rhs", "reason"];
            for rep in &reports {
                out.record(&report_value(rep), &HEADER).map_err(io_err)?;
            }
            let summary = Summary::of(&reports);
            if let Some(first) = summary.first_failure {
                match cli.format {
                    Format::Json => writeln!(out.out, "{}", json!({"first_counterexample": report_value(&first)})),
                    Format::Csv => out.record(&report_value(&first), &HEADER),
                }
                .map_err(io_err)?;
                return Err(Failure::Check(format!(
                    "{} of {} checks failed; first counterexample: {} at n = {}",
                    summary.failed,
                    reports.len(),
                    first.identity,
                    first.n
                )));
            }
        }
        Command::Series { seq, terms, numerator } => {
            let series = match seq.as_str() {
                "JQ3" => RationalSeries::jacobsthal(),
                "jQ3" => RationalSeries::lucas(),
                other => return Err(Failure::Usage(format!("unknown quaternion sequence `{other}`"))),
            };
            let items: Vec<_> = if numerator {
                series.numerator.to_vec()
            } else {
                series.coefficients().take(terms as usize).collect()
            };
            for q in items {
                out.record(&serde_json::to_value(&q).expect("quaternion serializes"), &["s", "i", "j", "k"])
                    .map_err(io_err)?;
            }
        }
        Command::Matrix { name, r, n, power } => {
            if r < 1 {
                return Err(Failure::Usage("matrix needs r >= 1".to_string()));
            }
            let (label, rows) = match name {
                MatrixName::M => ("M", matrix_value(matrices::build_m(), power)),
                MatrixName::L => ("L", matrix_value(matrices::build_l(r), power)),
                MatrixName::F => ("F", matrix_value(matrices::build_f(r, n), power)),
                MatrixName::A => ("A", matrix_value(matrices::build_a(r), power)),
                MatrixName::Q => ("Q", matrix_value(matrices::build_q(r, n), power)),
                MatrixName::B => ("B", matrix_value(matrices::build_b(r), power)),
                MatrixName::H => ("H", matrix_value(matrices::build_h(r)?, power)),
                MatrixName::R => ("R", matrix_value(matrices::build_rquat(), power)),
                MatrixName::Rm => {
                    if n < 0 {
                        return Err(Failure::Usage("RM needs n >= 0".to_string()));
                    }
                    let m = matrices::build_m().pow(n as u64).map(|x| jacq::Quaternion::from_scalar(x.clone()));
                    ("RM", matrix_value(matrices::build_rquat().mul(&m), power))
                }
            };
            match cli.format {
                Format::Json => {
                    let value = json!({"name": label, "r": r, "n": n, "power": power, "rows": rows});
                    writeln!(out.out, "{}", value).map_err(io_err)?;
                }
                Format::Csv => {
                    for row in rows.as_array().into_iter().flatten() {
                        let cells = row.as_array().into_iter().flatten().map(|c| match c {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        });
                        writeln!(out.out, "{}", csv_line(cells)).map_err(io_err)?;
                    }
                }
            }
        }
        Command::Bench { n, methods } => {
            let methods = methods
                .iter()
                .map(|m| m.parse::<Method>())
                .collect::<Result<Vec<_>, _>>()?;
            let (_, records) = run_bench(n, &methods).map_err(|d| Failure::Check(d.to_string()))?;
            for rec in records {
                out.record(
                    &serde_json::to_value(&rec).expect("record serializes"),
                    &["method", "n", "wall_time_ns", "value_digits", "multiplications"],
                )
                .map_err(io_err)?;
            }
        }
    }
    out.out.flush().map_err(io_err)
}

fn report_value(rep: &IdentityReport) -> Value {
    serde_json::to_value(rep).expect("report serializes")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("jacq: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("jacq: {msg}");
            ExitCode::from(2)
        }
    }
}
