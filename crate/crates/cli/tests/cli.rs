use std::process::{Command, Output};

use serde_json::Value;

fn cupprv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cupprv"))
        .args(args)
        .env_remove("CUPPRV_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cupprv(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn svg(args: &[&str]) -> String {
    let out = cupprv(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn cohomological_b2() {
    let v = json(&[
        "cohomological",
        "-t",
        "B",
        "-r",
        "2",
        "--lam",
        "1,1",
        "--mu",
        "1,1",
    ]);
    assert_eq!(v["format_version"], 1);
    assert_eq!(v["command"], "cohomological");
    let distinct: Vec<Vec<i64>> = serde_json::from_value(v["result"]["distinct"].clone()).unwrap();
    let mut d = distinct.clone();
    d.sort();
    assert_eq!(d, vec![vec![0, 0], vec![0, 4], vec![2, 2], vec![3, 0]]);
    assert_eq!(v["result"]["counts"]["distinct"], 4);
}

#[test]
fn catalan_three() {
    let v = json(&["catalan", "--n", "3"]);
    assert_eq!(v["result"]["count"], 5);
    let text = cupprv(&["catalan", "--n", "3", "--format", "text"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("count    5"));
}

#[test]
fn theorem1_gl_tuple_not_surjective() {
    let v = json(&[
        "theorem1",
        "--gl",
        "--lam",
        "3,1,0,5,3,2",
        "--mu",
        "3,1,0,5,3,2",
    ]);
    let r = &v["result"];
    assert_eq!(r["root_system"], "A5");
    assert_eq!(r["lengths_add"], true);
    assert_eq!(r["inversion_sets_partition"], false);
    assert_eq!(r["surjective"], false);
    assert_eq!(r["nu_prime"], serde_json::json!([7, 7, 4, 4, 3, 3]));
}

#[test]
fn figure_markers() {
    for (t, lam, mu, circles, squares) in [
        ("A", "3,5", "1,2", 6, 0),
        ("B", "1,1", "1,1", 4, 3),
        ("A", "7,2", "1,3", 5, 1),
    ] {
        let s = svg(&[
            "figure", "-t", t, "-r", "2", "--lam", lam, "--mu", mu, "-k", "2",
        ]);
        assert!(s.starts_with("<svg"));
        assert_eq!(
            s.matches("class=\"cohomological\"").count(),
            circles,
            "{t} {lam} {mu}"
        );
        assert_eq!(
            s.matches("class=\"generalized-prv\"").count(),
            squares,
            "{t} {lam} {mu}"
        );
    }
}

#[test]
fn figure_is_byte_stable_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let p = path.to_str().unwrap();
    let args = [
        "--out", p, "figure", "-t", "B", "-r", "2", "--lam", "1,1", "--mu", "1,1",
    ];
    assert!(cupprv(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(cupprv(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());
    assert_eq!(first, svg(&args[2..]).into_bytes());
}

#[test]
fn triples_are_json_lines() {
    let out = cupprv(&["triples", "-t", "A", "-r", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["format_version"], 1);
    assert_eq!(lines[0]["count"], 15);
    assert_eq!(lines.len(), 16);
    assert_eq!(lines[1]["w1"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    // rank mismatch is a domain error
    let out = cupprv(&["prv", "-t", "B", "-r", "2", "--lam", "1,1", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(
        cupprv(&["scans", "q0", "-t", "B", "-r", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        cupprv(&["rootsys", "-t", "E", "-r", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cupprv(&["prv", "--lam", "1,1", "--mu", "1,1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cupprv(&["scans", "claim0", "--letters", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(
        cupprv(&["cone-dim", "-t", "A", "-r", "2", "--w1", "4", "--w2", "e", "--w3", "e"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        cupprv(&["reduce", "--lam", "0,1", "--mu", "0,0", "--nu", "0,1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn rootsys_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_cupprv"))
        .args(["rootsys", "-t", "C", "-r", "3"])
        .env("CUPPRV_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let file = v["result"]["cache_file"].as_str().unwrap();
    assert!(std::path::Path::new(file).exists());
    assert_eq!(v["result"]["weyl_order"], 48);
    let again = Command::new(env!("CARGO_BIN_EXE_cupprv"))
        .args(["rootsys", "-t", "C", "-r", "3"])
        .env("CUPPRV_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn reduce_and_schubert() {
    let v = json(&["reduce", "--lam", "2,1,0", "--mu", "1,0,0", "--nu", "3,1,0"]);
    assert_eq!(v["result"]["cohomological"], true);
    assert_eq!(v["result"]["lr_coefficient"], 1);
    let one_based = json(&[
        "schubert-d",
        "--w1",
        "2,1,3",
        "--w2",
        "1,3,2",
        "--w3",
        "2,3,1",
    ]);
    let zero_based = json(&[
        "schubert-d",
        "--w1",
        "1,0,2",
        "--w2",
        "0,2,1",
        "--w3",
        "1,2,0",
    ]);
    assert_eq!(one_based["result"], zero_based["result"]);
    assert_eq!(one_based["result"]["d"], 1);
}

#[test]
fn prv_table_text() {
    let out = cupprv(&[
        "prv", "-t", "B", "-r", "2", "--lam", "1,1", "--mu", "1,1", "--format", "text",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# B2 V(1,1) (x) V(1,1), stability checked for k <= 2\n"));
    assert!(text.contains("(1,2)  2     yes       no              no"));
}

#[test]
fn tsv_and_json_agree() {
    let args = [
        "decompose",
        "-t",
        "A",
        "-r",
        "2",
        "--lam",
        "1,1",
        "--mu",
        "1,1",
    ];
    let v = json(&args);
    let mut tsv_args = args.to_vec();
    tsv_args.extend(["--format", "tsv"]);
    let tsv = String::from_utf8(cupprv(&tsv_args).stdout).unwrap();
    let rows: Vec<&str> = tsv.lines().skip(1).collect();
    assert_eq!(
        rows.len(),
        v["result"]["components"].as_array().unwrap().len()
    );
    assert_eq!(v["result"]["total_dimension"], "64");
}

#[test]
fn verify_paper_passes() {
    let out = cupprv(&["verify-paper", "--format", "text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 20);
}

#[test]
fn cone_dim_a1() {
    let v = json(&[
        "cone-dim", "-t", "A", "-r", "1", "--w1", "1", "--w2", "e", "--w3", "1",
    ]);
    assert_eq!(v["result"]["cones"][0]["dim"], 2);
}
