//! The `permlab` binary end to end.

use std::process::{Command, Output};

fn permlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(args)
        .env_remove("PERMLAB_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn catalog_list_names_every_fixture() {
    let o = permlab(&["catalog", "list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["psl27", "example2.7", "wu-not-u", "S4", "A5"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
    assert!(text.lines().any(|l| l.starts_with("psl27") && l.contains(" 168 ")));
}

#[test]
fn check_reports_the_psl27_witness() {
    let o = permlab(&["check", "psl27", "--sub", "sylow:3", "--prop", "strongly-permuteral"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("false"));
    assert!(text.contains("witness U: order 12,"), "{text}");
}

#[test]
fn permutizer_of_example_subgroup() {
    let show = stdout(&permlab(&["check", "example2.7", "--sub", "sylow:2", "--prop", "permuteral"]));
    assert_eq!(show.lines().next(), Some("true"));
    let o = permlab(&["permutizer", "S4", "--sub", "gens:(1 2 3)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("permuteral: false"));
}

#[test]
fn verify_json_report_passes() {
    let o = permlab(&["verify", "--suite", "T3.1", "--corpus", "default", "--jobs", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "permlab.suite-report/v1");
    assert_eq!(v["passed"], true);
    assert_eq!(v["corpus_size"], 62);
    assert!(v.get("timing").is_none());
}

#[test]
fn verify_fails_with_status_one_when_a_member_exceeds_the_cap() {
    let o = permlab(&["verify", "--suite", "T3.1", "--corpus", "S3,S5", "--max-order", "100"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failure in S5"));
}

#[test]
fn environment_cap_applies_without_the_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(["show", "S5"])
        .env("PERMLAB_MAX_ORDER", "60")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_permlab"))
        .args(["show", "S5", "--max-order", "120"])
        .env("PERMLAB_MAX_ORDER", "60")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn search_contract() {
    let o = permlab(&["search", "--expr", "sylow & permuteral & !strongly-permuteral", "--corpus", "psl27"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("psl27: order 3,"));

    let o = permlab(&["search", "--expr", "sylow & !permuteral", "--corpus", "S3", "--expect-none"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 witnesses"));

    let o = permlab(&["search", "--expr", "!supersoluble", "--corpus", "S4", "--expect-none"]);
    assert_eq!(o.status.code(), Some(1));

    let o = permlab(&["search", "--expr", "w-supersoluble & !supersoluble"]);
    assert!(stdout(&o).lines().any(|l| l == "wu-not-u"));
}

#[test]
fn group_files_are_accepted() {
    let dir = std::env::temp_dir().join(format!("permlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.group");
    std::fs::write(&path, "# S3 on three points\ndegree 3\ngen (1 2 3)\ngen (1 2)\n").unwrap();
    let o = permlab(&["show", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("order: 6"));
    std::fs::write(&path, "gen (1 2)\n").unwrap();
    assert_eq!(permlab(&["show", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["verify", "--suite", "T9.9"],
        vec!["show", "no-such-group"],
        vec!["check", "S4", "--sub", "sylow:5", "--prop", "permuteral"],
        vec!["check", "S4", "--sub", "sylow:2", "--prop", "shiny"],
        vec!["search", "--expr", "sylow &"],
        vec!["frobnicate"],
    ] {
        assert_eq!(permlab(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn subgroups_lists_every_class() {
    let o = permlab(&["subgroups", "S4"]);
    assert_eq!(stdout(&o).lines().count(), 11);
}
