//! Runs suites over a corpus on a worker pool.
//!
//! Each member is prepared (lattice and classification) by one worker and
//! then shared read-only; results are collected in corpus order, so reports
//! do not depend on the number of workers.

use std::time::Instant;

use rayon::prelude::*;
use rayon::ThreadPool;

use permlab::catalog::CorpusMember;

use crate::member::Member;
use crate::report::{Failure, ReportConfig, SuiteReport, Timing, REPORT_SCHEMA};
use crate::suites::{Options, Suite};

/// A corpus member ready for checking, or the reason it could not be built.
pub enum Prepared {
    Ready(Box<Member>),
    Failed { name: String, error: String },
}

impl Prepared {
    pub fn name(&self) -> &str {
        match self {
            Prepared::Ready(m) => &m.name,
            Prepared::Failed { name, .. } => name,
        }
    }
}

pub fn pool(jobs: usize) -> ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

pub fn prepare(pool: &ThreadPool, members: Vec<CorpusMember>) -> Vec<Prepared> {
    pool.install(|| {
        members
            .into_par_iter()
            .map(|c| {
                let built = c.group.and_then(|g| Member::new(c.name.clone(), g));
                match built {
                    Ok(m) => Prepared::Ready(Box::new(m)),
                    Err(e) => Prepared::Failed {
                        name: c.name,
                        error: e.to_string(),
                    },
                }
            })
            .collect()
    })
}

pub fn run_suite(
    pool: &ThreadPool,
    suite: &Suite,
    prepared: &[Prepared],
    opts: &Options,
    config: ReportConfig,
    timing: bool,
) -> SuiteReport {
    let start = Instant::now();
    let outcomes: Vec<_> = pool.install(|| {
        prepared
            .par_iter()
            .map(|p| match p {
                Prepared::Ready(m) => Ok(suite.run_on(m, opts)),
                Prepared::Failed { error, .. } => Err(error.clone()),
            })
            .collect()
    });
    let mut report = SuiteReport {
        schema: REPORT_SCHEMA.to_string(),
        suite: suite.id.to_string(),
        title: suite.title.to_string(),
        config,
        corpus_size: prepared.len(),
        checks_run: 0,
        skipped: 0,
        skipped_members: Vec::new(),
        passed: true,
        failures: Vec::new(),
        timing: None,
    };
    for (p, outcome) in prepared.iter().zip(outcomes) {
        let name = p.name().to_string();
        match outcome {
            Ok(o) => {
                report.checks_run += o.checks;
                if o.skipped {
                    report.skipped += 1;
                    report.skipped_members.push(name.clone());
                }
                report.failures.extend(o.failures.into_iter().map(|witness| Failure {
                    group: name.clone(),
                    witness,
                }));
            }
            Err(error) => {
                report.checks_run += 1;
                report.failures.push(Failure {
                    group: name,
                    witness: format!("could not be prepared: {error}"),
                });
            }
        }
    }
    report.passed = report.failures.is_empty();
    if timing {
        report.timing = Some(Timing {
            elapsed_ms: start.elapsed().as_millis(),
            jobs: pool.current_num_threads(),
        });
    }
    report
}
