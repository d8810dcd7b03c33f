use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn isq(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isq"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("run isq")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn fixtures() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (args, file) in [
        (vec!["builder", "example-a"], "S6.json"),
        (vec!["builder", "example-b"], "T.json"),
        (vec!["builder", "in", "--n", "2"], "I2.json"),
        (vec!["builder", "cyclic", "--n", "2"], "Z2.json"),
    ] {
        let mut a = args.clone();
        a.extend(["--out", file]);
        assert_eq!(isq(&a, dir.path()).status.code(), Some(0), "{file}");
    }
    dir
}

#[test]
fn s6_quotient_report() {
    let d = fixtures();
    let out = isq(&["quotient", "S6.json", "--by", "S6.json"], d.path());
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["num_classes"], 3);
    assert_eq!(v["order_is_chain"], true);
    assert_eq!(v["is_congruence"], false);
    assert_eq!(v["inductive"], true);
}

#[test]
fn t_quotient_is_not_inductive() {
    let d = fixtures();
    let v = json(&isq(&["quotient", "T.json", "--by", "T.json"], d.path()));
    assert_eq!(v["inductive"], false);
    let g = json(&isq(&["green", "T.json"], d.path()));
    assert_eq!(g["j_poset_is_semilattice"], false);
}

#[test]
fn exit_codes() {
    let d = fixtures();
    std::fs::write(d.path().join("garbage.json"), "garbage").unwrap();
    assert_eq!(
        isq(&["verify", "garbage.json"], d.path()).status.code(),
        Some(2)
    );
    assert_eq!(
        isq(&["verify", "missing.json"], d.path()).status.code(),
        Some(2)
    );
    assert_eq!(
        isq(&["verify", "I2.json", "--frobnicate"], d.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(isq(&["verify", "I2.json"], d.path()).status.code(), Some(0));

    // idempotents that do not commute
    let bad = r#"{"kind":"table","n":2,"mul":[[0,0],[1,1]],"inv":[0,1]}"#;
    std::fs::write(d.path().join("bad.json"), bad).unwrap();
    let out = isq(&["verify", "bad.json"], d.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["valid"], false);

    // a set that is not normal is an input error for quotient, a failed property for normal --set
    std::fs::write(d.path().join("n.json"), r#"{"indices":[1]}"#).unwrap();
    assert_eq!(
        isq(&["quotient", "I2.json", "--by", "n.json"], d.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        isq(&["normal", "I2.json", "--set", "n.json"], d.path())
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn size_cap_flag() {
    let d = fixtures();
    let out = isq(&["normal", "I2.json", "--max-size", "3"], d.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size limit"));
    let out = Command::new(env!("CARGO_BIN_EXE_isq"))
        .args(["normal", "I2.json"])
        .env("ISQ_MAX_ELEMENTS", "3")
        .current_dir(d.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn normal_listing_and_congruences() {
    let d = fixtures();
    let v = json(&isq(&["normal", "I2.json"], d.path()));
    assert_eq!(v["members"].as_array().unwrap().len(), 3);
    let v = json(&isq(&["congruences", "I2.json"], d.path()));
    assert_eq!(v["count"], 4);
    std::fs::write(d.path().join("e.json"), r#"{"indices":[0,2,3,4]}"#).unwrap();
    let v = json(&isq(
        &["congruences", "I2.json", "--kernel", "e.json"],
        d.path(),
    ));
    assert_eq!(v["count"], 1);
}

#[test]
fn factorize_projection() {
    let d = fixtures();
    assert_eq!(
        isq(
            &["builder", "product", "--left", "I2.json", "--group", "Z2.json", "--out", "P.json"],
            d.path()
        )
        .status
        .code(),
        Some(0)
    );
    let map: Vec<usize> = (0..14).map(|x| x % 2).collect();
    std::fs::write(
        d.path().join("hom.json"),
        serde_json::json!({ "map": map }).to_string(),
    )
    .unwrap();
    let out = isq(
        &["factorize", "P.json", "Z2.json", "--hom", "hom.json"],
        d.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["unique"], true);
    assert_eq!(v["star_injective"], true);
    assert_eq!(v["kernel"], serde_json::json!([0, 2, 4, 6, 8, 10, 12]));

    std::fs::write(
        d.path().join("bad.json"),
        r#"{"map":[1,1,1,1,1,1,1,1,1,1,1,1,1,0]}"#,
    )
    .unwrap();
    assert_eq!(
        isq(
            &["factorize", "P.json", "Z2.json", "--hom", "bad.json"],
            d.path()
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn munn_commands() {
    let d = fixtures();
    // in I_2, id_1 is element 3 and id_2 is element 2
    let v = json(&isq(
        &[
            "munn",
            "eval",
            "--word",
            "babAB",
            "--assign",
            "a=idx3,b=idx2",
            "--in",
            "I2.json",
        ],
        d.path(),
    ));
    assert_eq!(v["zero"], true);
    let v = json(&isq(
        &[
            "munn",
            "eval",
            "--word",
            "b",
            "--assign",
            "a=idx3,b=idx2",
            "--in",
            "I2.json",
        ],
        d.path(),
    ));
    assert_eq!(v["label"], "[2->2]");
    let out = isq(
        &[
            "munn", "member", "--pres", "ab=ba", "--word", "babABB", "--maxlen", "4",
        ],
        d.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["member"], "yes");
    let out = isq(
        &[
            "munn", "member", "--pres", "", "--word", "a", "--maxlen", "2",
        ],
        d.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(
        isq(&["munn", "tree", "--word", "a?"], d.path())
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn poly_gauge() {
    let d = fixtures();
    let out = isq(
        &["poly", "--n", "2", "--check", "gauge", "--maxlen", "3"],
        d.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["failures"], 0);
}

#[test]
fn paper_suite_passes_and_is_deterministic() {
    let d = fixtures();
    let a = isq(&["suite", "--paper"], d.path());
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stdout)
    );
    let b = isq(&["suite", "--paper"], d.path());
    assert_eq!(a.stdout, b.stdout);
    let q1 = isq(&["quotient", "T.json", "--by", "T.json"], d.path());
    let q2 = isq(&["quotient", "T.json", "--by", "T.json"], d.path());
    assert_eq!(q1.stdout, q2.stdout);
}

#[test]
fn pretty_output() {
    let d = fixtures();
    let out = isq(
        &["quotient", "S6.json", "--by", "S6.json", "--pretty"],
        d.path(),
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("num_classes: 3"));
    assert!(text.contains("is_congruence: false"));
}
