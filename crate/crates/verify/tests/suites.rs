//! Suite runs over small corpora: pass/skip semantics, cap handling and
//! independence from the worker count.

use permlab::catalog::corpus;
use permlab_verify::report::ReportConfig;
use permlab_verify::runner::{self, Prepared};
use permlab_verify::suites::{self, Options};
use permlab_verify::SuiteReport;

fn run(suite: &str, spec: &str, cap: usize, jobs: usize) -> SuiteReport {
    let pool = runner::pool(jobs);
    let prepared = runner::prepare(&pool, corpus(spec, cap).unwrap());
    let opts = Options::default();
    let config = ReportConfig {
        corpus: spec.into(),
        max_order: cap,
        exhaustive_limit: opts.exhaustive_limit,
        sample_size: opts.sample_size,
        seed: format!("{:#x}", opts.seed),
    };
    runner::run_suite(&pool, suites::suite(suite).unwrap(), &prepared, &opts, config, false)
}

#[test]
fn permutizer_basics_hold_in_s3() {
    let r = run("L2.1", "S3", 5000, 1);
    assert!(r.passed, "{:?}", r.failures);
    assert!(r.checks_run > 20);
}

#[test]
fn sylow_characterization_holds_on_fixtures_and_small_subgroups() {
    let r = run("T3.1", "subgroups-of:S4,subgroups-of:S5,psl27,example2.7,wu-not-u", 5000, 4);
    assert!(r.passed, "{:?}", r.failures);
    assert_eq!(r.corpus_size, 11 + 19 + 3);
    assert!(r.checks_run as usize >= r.corpus_size);
}

#[test]
fn metanilpotent_hypothesis_skips_other_members() {
    let r = run("T3.2", "S3,S4,A5,wu-not-u,D8", 5000, 2);
    assert!(r.passed, "{:?}", r.failures);
    assert_eq!(r.skipped_members, vec!["S4", "A5", "wu-not-u"]);
}

#[test]
fn members_over_the_cap_fail_without_stopping_the_run() {
    let r = run("T3.1", "S3,S5,Z4", 100, 2);
    assert!(!r.passed);
    assert_eq!(r.failures.len(), 1);
    assert_eq!(r.failures[0].group, "S5");
    assert!(r.failures[0].witness.contains("cap"));
    assert_eq!(r.corpus_size, 3);
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    for id in ["L2.1", "L1.5", "KW"] {
        let a = run(id, "S4,S5,F21,D12", 5000, 1).to_json();
        let b = run(id, "S4,S5,F21,D12", 5000, 6).to_json();
        assert_eq!(a, b, "{id}");
    }
}

#[test]
fn failed_preparation_keeps_the_member_name() {
    let pool = runner::pool(1);
    let prepared = runner::prepare(&pool, corpus("S5", 50).unwrap());
    assert!(matches!(&prepared[0], Prepared::Failed { name, .. } if name == "S5"));
}
