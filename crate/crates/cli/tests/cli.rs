use std::path::PathBuf;
use std::process::{Command, Output};

fn polyperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyperm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("polyperm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn path(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn m4_has_no_positive_diagonal() {
    let file = scratch("m4.supp");
    assert_eq!(polyperm(&["gen", "m4", "--d", "3", "--out", path(&file)]).status.code(), Some(0));
    let pos = polyperm(&["per", path(&file), "--positivity"]);
    assert_eq!(stdout(&pos), "none\n");
    assert_eq!(stdout(&polyperm(&["per", path(&file), "--exact"])), "0\n");
}

#[test]
fn permutation_at_d2_has_permanent_one() {
    let file = scratch("m2.supp");
    polyperm(&["gen", "m4", "--d", "2", "--out", path(&file)]);
    assert_eq!(stdout(&polyperm(&["per", path(&file), "--exact"])), "1\n");
    let pos = stdout(&polyperm(&["per", path(&file), "--positivity"]));
    assert_eq!(pos.lines().count(), 4);
}

#[test]
fn uniform_matrix_permanent() {
    let file = scratch("uniform.mat");
    let mut text = String::from("polymat 1\nd=2 n=4\n");
    for _ in 0..4 {
        text.push_str("1/4 1/4 1/4 1/4\n");
    }
    std::fs::write(&file, text).unwrap();
    assert_eq!(stdout(&polyperm(&["per", path(&file), "--exact"])), "3/32\n");
    assert_eq!(polyperm(&["per", path(&file), "--exact", "--budget", "2"]).status.code(), Some(3));
}

#[test]
fn l4_convex_sum_is_written() {
    let file = scratch("l4.mat");
    assert_eq!(polyperm(&["gen", "l4", "--d", "3", "--lambda", "1/3", "--out", path(&file)]).status.code(), Some(0));
    assert!(std::fs::read_to_string(&file).unwrap().starts_with("polymat"));
    assert_eq!(stdout(&polyperm(&["per", path(&file), "--exact"])), "0\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["gen", "l4", "--d", "3", "--lambda", "0"],
        vec!["gen", "l4", "--d", "3", "--lambda", "x"],
        vec!["gen", "block", "--d", "3", "--eps", "2,2"],
        vec!["verify", "claim-zz"],
        vec!["per", "/nonexistent/file"],
        vec!["verify", "census-44", "--threads", "0"],
    ] {
        assert_eq!(polyperm(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_exit_codes_and_replay() {
    let report = scratch("double3.json");
    let ok = polyperm(&["verify", "census-double3", "--out", path(&report)]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("classes: 10"));
    let replayed = polyperm(&["verify", "census-double3", "--replay", path(&report)]);
    assert_eq!(replayed.status.code(), Some(0));
    assert!(stdout(&replayed).ends_with("0 failures\n"));
    assert_eq!(polyperm(&["verify", "census-44", "--replay", path(&report)]).status.code(), Some(2));

    assert_eq!(polyperm(&["verify", "claim-planes", "--budget", "5"]).status.code(), Some(3));
    let refuted = polyperm(&["verify", "claim-ab", "--format", "json"]);
    assert_eq!(refuted.status.code(), Some(1));
    assert!(stdout(&refuted).contains("\"status\": \"refuted\""));
}
