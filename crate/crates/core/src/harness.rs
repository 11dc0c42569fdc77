//! Driver that sweeps identities over index and stride grids.
//!
//! With the `parallel` feature (default) the grid is evaluated on the rayon
//! thread pool; without it, or with [`Execution::Sequential`], jobs run in
//! order on the calling thread. Output order is identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::Error;
use crate::genfunc::check_genfunc;
use crate::matrices::{
    check_corollary_conv, check_diagonalization, check_theorem_aq, check_theorem_lf,
    check_theorem_rm,
};
use crate::quaternion::check_quat_identity;
use crate::report::{Identity, IdentityReport, Outcome};
use crate::sequences::{check_binet, check_lemma1, check_scalar_identity, check_sum_formula};

pub const DEFAULT_MAX_R: i64 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub identities: Vec<Identity>,
    pub from: i64,
    pub to: i64,
    pub max_r: i64,
}

impl VerifyConfig {
    pub fn new(identities: Vec<Identity>, from: i64, to: i64) -> Self {
        VerifyConfig {
            identities,
            from,
            to,
            max_r: DEFAULT_MAX_R,
        }
    }

    pub fn with_max_r(mut self, max_r: i64) -> Self {
        self.max_r = max_r;
        self
    }

    pub fn suite(from: i64, to: i64) -> Self {
        VerifyConfig::new(Identity::suite().collect(), from, to)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Job {
    pub identity: Identity,
    pub n: i64,
    pub r: Option<i64>,
    pub s: Option<i64>,
}

pub fn jobs(config: &VerifyConfig) -> Vec<Job> {
    let mut out = Vec::new();
    for &identity in &config.identities {
        for n in config.from..=config.to {
            if !identity.uses_stride() {
                out.push(Job { identity, n, r: None, s: None });
                continue;
            }
            for r in 1..=config.max_r {
                if identity == Identity::Lemma1 {
                    out.extend((0..r).map(|s| Job { identity, n, r: Some(r), s: Some(s) }));
                } else {
                    out.push(Job { identity, n, r: Some(r), s: None });
                }
            }
        }
    }
    out
}

fn dispatch(job: &Job) -> crate::Result<IdentityReport> {
    let Job { identity, n, r, s } = *job;
    let r = r.unwrap_or(1);
    match identity {
        Identity::Lemma1 => check_lemma1(r, s.unwrap_or(0), n),
        Identity::G5 => check_sum_formula(r, n),
        Identity::ThmLF => check_theorem_lf(r, n),
        Identity::ThmAQ => check_theorem_aq(r, n),
        Identity::Diag => check_diagonalization(r, n),
        Identity::Binet => check_binet(n),
        Identity::Genfunc => check_genfunc(n),
        Identity::ThmRM => check_theorem_rm(n),
        Identity::CorConv => check_corollary_conv(n),
        Identity::T2
        | Identity::LemmaE4Lift
        | Identity::T5a
        | Identity::T5b
        | Identity::T6
        | Identity::Norm
        | Identity::Hsum
        | Identity::Product
        | Identity::QBinet => check_quat_identity(identity, n),
        _ => check_scalar_identity(identity, n),
    }
}

/// Runs one grid point. Out-of-domain points become `skipped` records and
/// evaluation errors become `fail` records.
pub fn run_job(job: &Job) -> IdentityReport {
    let tag = |mut rep: IdentityReport| {
        rep.r = job.r;
        rep.s = job.s;
        rep
    };
    match dispatch(job) {
        Ok(rep) => rep,
        Err(Error::DomainError { detail, .. }) => tag(IdentityReport::skipped(job.identity, job.n, detail)),
        Err(e @ Error::DegenerateModulus { .. }) => {
            tag(IdentityReport::skipped(job.identity, job.n, e.to_string()))
        }
        Err(e) => {
            let mut rep = tag(IdentityReport::skipped(job.identity, job.n, e.to_string()));
            rep.status = Outcome::Fail;
            rep
        }
    }
}

pub fn verify_with(config: &VerifyConfig, exec: Execution) -> Vec<IdentityReport> {
    let jobs = jobs(config);
    let mut reports: Vec<IdentityReport> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => jobs.par_iter().map(run_job).collect(),
        _ => jobs.iter().map(run_job).collect(),
    };
    reports.sort_by_key(IdentityReport::sort_key);
    reports
}

pub fn verify(config: &VerifyConfig) -> Vec<IdentityReport> {
    verify_with(config, Execution::default())
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<IdentityReport>,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Summary::default();
        for rep in reports {
            match rep.status {
                Outcome::Pass => s.passed += 1,
                Outcome::Skipped => s.skipped += 1,
                Outcome::Fail => {
                    s.failed += 1;
                    if s.first_failure.is_none() {
                        s.first_failure = Some(rep.clone());
                    }
                }
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}
