use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const PT: &str = "arg(a). arg(b0). arg(b1). arg(b2). arg(b3).\n\
                  att(a,b0). att(b0,b1). att(b1,b2). att(b2,b3). att(b3,b0).\n";

const SK_F: &str = "arg(a). arg(b). arg(c).\natt(a,b). att(b,a). att(b,c). att(c,b). att(c,c).\n";
const SK_G: &str = "arg(a). arg(b). arg(c).\natt(a,b). att(c,b). att(c,c).\n";

fn argscc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_argscc"))
        .args(args)
        .env_remove("ARGSCC_MAX_ARGS")
        .env_remove("ARGSCC_STABILIZE_K")
        .env_remove("ARGSCC_UNATTACKED_CAP")
        .env_remove("ARGSCC_SEARCH_STEPS")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

struct Files {
    _dir: TempDir,
    pt: String,
    skf: String,
    skg: String,
}

fn files() -> Files {
    let dir = TempDir::new().unwrap();
    let s = |p: PathBuf| p.to_str().unwrap().to_string();
    Files {
        pt: s(write(dir.path(), "pt.apx", PT)),
        skf: s(write(dir.path(), "skf.apx", SK_F)),
        skg: s(write(dir.path(), "skg.apx", SK_G)),
        _dir: dir,
    }
}

#[test]
fn solve_enumerates_as_json() {
    let f = files();
    let o = argscc(&["--output", "json", "solve", "-s", "cf1.5", "-i", &f.pt]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["semantics"], "cf1.5");
    assert_eq!(
        v["extensions"],
        serde_json::json!([["a", "b1", "b3"], ["a", "b2"]])
    );
}

#[test]
fn solve_acceptance_queries() {
    let f = files();
    let o = argscc(&["solve", "-s", "cf1.5", "-i", &f.pt, "--credulous", "b2"]);
    assert!(stdout(&o).starts_with("YES"));
    let o = argscc(&["solve", "-s", "cf1.5", "-i", &f.pt, "--skeptical", "b2"]);
    assert!(stdout(&o).starts_with("NO"));
    let o = argscc(&["solve", "-s", "cf1.5", "-i", &f.pt, "--skeptical", "zz"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tgf_input() {
    let dir = TempDir::new().unwrap();
    let p = write(dir.path(), "g.tgf", "1\n2\n#\n1 2\n");
    let o = argscc(&[
        "--output",
        "json",
        "solve",
        "-s",
        "grounded",
        "-i",
        p.to_str().unwrap(),
    ]);
    assert_eq!(json(&o)["extensions"], serde_json::json!([["1"]]));
}

#[test]
fn exit_codes() {
    let f = files();
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.apx", "arg(a).\natt(a,c).\n");
    let o = argscc(&["solve", "-s", "naive", "-i", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    assert_eq!(
        argscc(&["solve", "-s", "preferred", "-i", &f.pt])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(argscc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(argscc(&["--help"]).status.code(), Some(0));

    let o = argscc(&["--max-args", "3", "solve", "-s", "naive", "-i", &f.pt]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_argscc"))
        .args(["solve", "-s", "naive", "-i", &f.pt])
        .env("ARGSCC_MAX_ARGS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));

    let o = argscc(&[
        "check",
        "-c",
        "reinstatement",
        "-s",
        "naive",
        "-i",
        &f.pt,
        "--assert",
    ]);
    assert_eq!(o.status.code(), Some(3));
    let o = argscc(&["check", "-c", "i-max", "-i", &f.pt, "--assert"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_reports() {
    let f = files();
    let o = argscc(&[
        "--output",
        "json",
        "check",
        "-c",
        "skepticism-adequacy",
        "-s",
        "stage",
        "-i",
        &f.skf,
        "--against",
        &f.skg,
    ]);
    let v = json(&o);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["holds"] == false));
    assert_eq!(reports[0]["witness"]["left"], serde_json::json!([["b"]]));

    let o = argscc(&["check", "-c", "skepticism-adequacy", "-i", &f.skf]);
    assert_eq!(o.status.code(), Some(1));

    let o = argscc(&[
        "check",
        "-c",
        "directionality",
        "-s",
        "cf2",
        "-i",
        &f.pt,
        "--unattacked",
        "a",
    ]);
    assert!(stdout(&o).contains("directionality [cf2]: holds"));
}

#[test]
fn oracle_runs_clean() {
    let o = argscc(&[
        "--output",
        "json",
        "oracle",
        "--trials",
        "25",
        "--max-args",
        "7",
        "--seed",
        "3",
        "--assert",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["mismatches"], serde_json::json!([]));
}

#[test]
fn infinite_probe() {
    let o = argscc(&[
        "--output",
        "json",
        "infinite",
        "--family",
        "bs_ladder",
        "--levels",
        "4,8,12,16",
        "-s",
        "cf2",
        "--track",
        "b1",
    ]);
    let v = json(&o);
    assert_eq!(v["stabilized"]["b1"], true);
    assert_eq!(v["levels"], serde_json::json!([4, 8, 12, 16]));

    let o = argscc(&[
        "infinite",
        "--family",
        "tree_scc",
        "--params",
        "tree=e,0,10",
        "--levels",
        "5",
        "-s",
        "cf2",
        "--track",
        "x",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn construct_verifies_its_output() {
    let f = files();
    for alg in ["greedy-cf1.5", "lex-stg1.5", "lex-stage"] {
        let o = argscc(&["--output", "json", "construct", "-a", alg, "-i", &f.pt]);
        let v = json(&o);
        assert_eq!(v["verified"], true, "{alg}");
        assert_eq!(
            v["extension"],
            serde_json::json!(["a", "b1", "b3"]),
            "{alg}"
        );
    }
}

#[test]
fn json_is_byte_identical_across_runs() {
    let f = files();
    let args = [
        "--output",
        "json",
        "check",
        "-c",
        "directionality",
        "-i",
        &f.pt,
    ];
    assert_eq!(argscc(&args).stdout, argscc(&args).stdout);
}
