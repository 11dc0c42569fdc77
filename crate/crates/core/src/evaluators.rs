//! The four independent ways of computing `J(n)`, and timed comparison runs.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::error::Error;
use crate::matrices::fast_j3_counted;
use crate::sequences::{binet_J3, closed_form_jacobsthal_int, jacobsthal3_int};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Recurrence,
    Matrix,
    Binet,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Recurrence, Method::Matrix, Method::Binet, Method::ClosedForm];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Matrix => "matrix",
            Method::Binet => "binet",
            Method::ClosedForm => "closed-form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse {
                input: s.to_string(),
                reason: "expected recurrence, matrix, binet or closed-form".to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: BigInt,
    /// 3×3 products, matrix method only.
    pub multiplications: Option<u32>,
}

pub fn evaluate(method: Method, n: u64) -> Evaluation {
    match method {
        Method::Recurrence => Evaluation {
            value: jacobsthal3_int(n),
            multiplications: None,
        },
        Method::Matrix => {
            let (value, count) = fast_j3_counted(n);
            Evaluation {
                value,
                multiplications: Some(count),
            }
        }
        Method::Binet => Evaluation {
            value: binet_J3(n)
                .ok()
                .and_then(|v| v.to_bigint())
                .expect("Binet evaluation of J(n) is an integer"),
            multiplications: None,
        },
        Method::ClosedForm => Evaluation {
            value: closed_form_jacobsthal_int(n),
            multiplications: None,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub method: Method,
    pub n: u64,
    pub wall_time_ns: u128,
    pub value_digits: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplications: Option<u32>,
}

impl BenchRecord {
    pub fn wall_time(&self) -> Duration {
        Duration::from_nanos(self.wall_time_ns as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub n: u64,
    pub reference: Method,
    pub method: Method,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "methods {} and {} disagree on J({})", self.reference, self.method, self.n)
    }
}

impl std::error::Error for Disagreement {}

/// Evaluates `J(n)` with each method and reports timings only once every
/// method has produced the same value.
pub fn run_bench(n: u64, methods: &[Method]) -> Result<(BigInt, Vec<BenchRecord>), Disagreement> {
    let mut results = Vec::with_capacity(methods.len());
    for &method in methods {
        let start = Instant::now();
        let eval = evaluate(method, n);
        let elapsed = start.elapsed();
        results.push((method, eval, elapsed));
    }
    let Some((reference, first, _)) = results.first() else {
        return Ok((BigInt::default(), Vec::new()));
    };
    if let Some((method, _, _)) = results.iter().find(|(_, e, _)| e.value != first.value) {
        return Err(Disagreement {
            n,
            reference: *reference,
            method: *method,
        });
    }
    let value = first.value.clone();
    let digits = value.abs().to_string().len();
    let records = results
        .into_iter()
        .map(|(method, eval, elapsed)| BenchRecord {
            method,
            n,
            wall_time_ns: elapsed.as_nanos(),
            value_digits: digits,
            multiplications: eval.multiplications,
        })
        .collect();
    Ok((value, records))
}
