use std::process::{Command, Output};

fn clusterw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clusterw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = clusterw(args);
    assert!(out.status.success(), "clusterw {args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn bwt_golden() {
    assert_eq!(stdout(&["bwt", "1322313223"]).trim(), "3333222211");
    assert_eq!(stdout(&["bwt", "21"]).trim(), "21");
}

#[test]
fn bwt_rejects_empty_input() {
    let out = clusterw(&["bwt", ""]);
    assert!(!out.status.success());
    assert!(String::from_utf8(out.stderr).unwrap().contains("error"));
}

#[test]
fn unbwt_statuses() {
    assert_eq!(stdout(&["unbwt", "32221"]).trim(), "no antecedent");
    assert_eq!(stdout(&["unbwt", "3333222211"]).trim(), "non-primitive: (13223)^2");
    assert_eq!(stdout(&["unbwt", "21"]).trim(), "primitive: 12");
}

#[test]
fn cluster_verdicts() {
    assert_eq!(stdout(&["cluster", "122131313"]).trim(), "clustering, pi=3,2,1, perfect");
    assert_eq!(
        stdout(&["cluster", "4123231312412"]).trim(),
        "clustering, pi=4,3,1,2, not perfect"
    );
    assert_eq!(stdout(&["cluster", "11"]).trim(), "not clustering");
}

#[test]
fn iet_analyses() {
    assert_eq!(stdout(&["iet", "4,2,3", "3,2,1", "--word"]).trim(), "122131313");
    assert_eq!(stdout(&["iet", "2,2,4", "3,2,1", "--minimal"]).trim(), "non-minimal");

    let orbits = stdout(&["iet", "3,1,2,3", "4,3,2,1", "--orbits"]);
    let words: Vec<&str> = orbits.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(words, ["14", "14", "14", "233"]);
}

#[test]
fn continuous_commands() {
    assert_eq!(stdout(&["cont", "4/9,2/9,3/9", "3,2,1", "0", "9"]).trim(), "122131313");
    assert_eq!(stdout(&["sturmian", "golden", "10"]).trim(), "1211212112");
    assert!(stdout(&["keane", "4/9,2/9,3/9", "3,2,1", "20"]).starts_with("collision"));
}

#[test]
fn verify_and_census() {
    let text = stdout(&["verify", "theorem1", "--r", "2", "--nmax", "8"]);
    assert!(text.contains("failures: 0"), "{text}");

    let census = stdout(&["census", "2", "5"]);
    let lines: Vec<&str> = census.lines().collect();
    assert_eq!(lines, ["11112\tpi=2,1", "11212\tpi=2,1", "12122\tpi=2,1", "12222\tpi=2,1"]);
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = clusterw(&["verify", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_output() {
    let value: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "cluster", "122131313"])).unwrap();
    assert_eq!(value["clustering"], true);
    assert_eq!(value["permutation"], "3,2,1");
    assert_eq!(value["perfect"], true);
    assert_eq!(value["bwt"], "333221111");

    let value: serde_json::Value =
        serde_json::from_str(&stdout(&["--json", "verify", "injectivity", "--r", "2", "--nmax", "7"]))
            .unwrap();
    assert_eq!(value["suite"], "injectivity");
    assert_eq!(value["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn alphabet_mapping() {
    assert_eq!(
        stdout(&["--alphabet", "a,b,c", "bwt", "a,b,b,a,c,a,c,a,c"]).trim(),
        "c,c,c,b,b,a,a,a,a"
    );
    assert_eq!(
        stdout(&["--alphabet", "a,b,c", "cluster", "a,b,b,a,c,a,c,a,c"]).trim(),
        "clustering, pi=3,2,1, perfect"
    );
}
