use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn torsion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torsion")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn generated(dir: &Path, name: &str, params: &[&str]) -> String {
    let mut args = vec!["gen", name];
    args.extend_from_slice(params);
    let o = torsion(&args);
    assert!(o.status.success());
    write(dir, &format!("{name}.json"), &stdout(&o))
}

#[test]
fn gen_writes_the_graph_format() {
    let o = torsion(&["gen", "cycle", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"vertices\":[0,1,2,3],\"edges\":[[0,1],[0,3],[1,2],[2,3]]}\n");
    assert!(stdout(&torsion(&["gen", "list"])).lines().any(|l| l == "icosahedron"));
    assert_eq!(torsion(&["gen", "nonsense"]).status.code(), Some(2));
}

#[test]
fn torsion_report_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "octahedron", &[]);
    let o = torsion(&["torsion", "--graph", &g, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["a"], "3/4");
    assert_eq!(v["report"]["a_hodge"], "3/4");
    assert_eq!(v["f_vector"], serde_json::json!([6, 12, 8]));
    assert_eq!(v["betti"], serde_json::json!([1, 0, 1]));
    assert_eq!(v["mckean_singer"], "1");
    assert_eq!(v["parity_products"]["even"], "2304");
}

#[test]
fn complex_input() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "tri.json", "{\"facets\": [[0, 1, 2], [2, 3]]}");
    let o = torsion(&["torsion", "--complex", &c]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("A = 4\n"));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\n  \"vertices\": [0, 1],\n  \"edges\": [[0, ]]\n}\n");
    let o = torsion(&["torsion", "--graph", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(torsion(&["torsion"]).status.code(), Some(2));
    assert_eq!(torsion(&["torsion", "--graph", "/nonexistent/graph.json"]).status.code(), Some(2));
    let unknown = write(dir.path(), "unknown.json", "{\"vertices\": [0], \"edges\": [[0, 4]]}");
    assert_eq!(torsion(&["betti", "--graph", &unknown]).status.code(), Some(2));
}

#[test]
fn computation_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "two.json", "{\"vertices\": [0, 1], \"edges\": []}");
    assert_eq!(torsion(&["trees", "--graph", &g]).status.code(), Some(1));
    let c4 = generated(dir.path(), "cycle", &["4"]);
    assert_eq!(torsion(&["bary", "--graph", &c4, "--limit", "1"]).status.code(), Some(1));
}

#[test]
fn trees_and_duality() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "icosahedron", &[]);
    let v: Value = serde_json::from_str(&stdout(&torsion(&["trees", "--graph", &g, "--json"]))).unwrap();
    assert_eq!(v["duality"]["holds"], true);
    assert_eq!(v["counts"]["unrooted"], v["duality"]["check"]["dual_trees"]);
}

#[test]
fn wu_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "cycle", &["4"]);
    let v: Value = serde_json::from_str(&stdout(&torsion(&["wu", "--graph", &g, "--json"]))).unwrap();
    assert_eq!(v["a2"], "1/48");
    assert_eq!(v["omega"], 0);
    let w = generated(dir.path(), "wheel", &["6"]);
    let v: Value = serde_json::from_str(&stdout(&torsion(&["check", "--graph", &w, "--json"]))).unwrap();
    assert_eq!(v["contractible"], "yes");
}

#[test]
fn zeta_and_bary() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "cycle", &["4"]);
    assert_eq!(stdout(&torsion(&["zeta", "--graph", &g, "--at", "1"])), "zeta(1) = 1.25\n");
    let csv = stdout(&torsion(&["zeta", "--graph", &g, "--from", "0", "--to", "1", "--step", "0.5"]));
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.starts_with("s,zeta\n0,3\n"));
    let oct = generated(dir.path(), "octahedron", &[]);
    let out = stdout(&torsion(&["bary", "--graph", &oct, "--limit", "2", "--steps", "1"]));
    assert_eq!(out, "torsions = [3/4, 13/24]\nlimit = 0.5\n");
    assert_eq!(stdout(&torsion(&["bary", "--operator", "1"])), "1 1\n0 2\n");
}

#[test]
fn experiments_are_reproducible() {
    let args = ["experiment", "er", "--n", "7", "--samples", "4", "--p", "0,1/3,1", "--seed", "9"];
    let a = torsion(&args);
    let b = torsion(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "p,mean_a,mean_log_a,samples");
    assert!(rows[1].starts_with("0,7,"));
    assert!(rows[3].starts_with("1,7,"));
    assert_eq!(torsion(&["experiment", "er", "--p", "3/2"]).status.code(), Some(2));
}

#[test]
fn sequence_and_extremal_tables() {
    let seq = stdout(&torsion(&["experiment", "sequence", "--target", "path_complement", "--n-max", "5"]));
    assert_eq!(seq, "n,a\n1,1\n2,1\n3,2\n4,4\n5,55/3\n");
    let ext = stdout(&torsion(&["experiment", "extremal", "--n", "6", "--csv"]));
    let lines: Vec<&str> = ext.lines().collect();
    assert!(lines[1].starts_with("max,486,"));
    assert!(lines[2].starts_with("min,3/4,"));
    assert!(lines[3].starts_with("balanced_bipartite,486,"));
}

#[test]
fn matrix_dump() {
    let dir = tempfile::tempdir().unwrap();
    let g = generated(dir.path(), "path", &["3"]);
    assert_eq!(stdout(&torsion(&["matrix", "kirchhoff", "--graph", &g])), "1 -1 0\n-1 2 -1\n0 -1 1\n");
    assert_eq!(stdout(&torsion(&["matrix", "d", "--k", "0", "--graph", &g])), "-1 1 0\n0 -1 1\n");
    assert_eq!(torsion(&["matrix", "nope", "--graph", &g]).status.code(), Some(2));
}
