use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const INTERVAL_0_2: &str = r#"{"dimension":1,"adjacency":{"kind":"cu","u":1},"points":[[0],[1],[2]]}"#;
const INTERVAL_0_1: &str = r#"{"dimension":1,"adjacency":{"kind":"cu","u":1},"points":[[0],[1]]}"#;

fn shy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shy")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace {
            dir: tempfile::tempdir().unwrap(),
        };
        ws.write("x.json", INTERVAL_0_2);
        ws.write("y.json", INTERVAL_0_1);
        ws
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.dir.path().join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).to_str().unwrap().to_string()
    }
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn check_shy_map() {
    let ws = Workspace::new();
    let m = ws.write("m.json", r#"{"pairs":[[[0],[0]],[[1],[0]],[[2],[1]]]}"#);
    let o = shy(&["check", "--map", &m, "--domain", &ws.path("x.json"), "--codomain", &ws.path("y.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classification"]["shy"], true);
    assert!(v.get("not_shy").is_none());
}

#[test]
fn check_fold_fails_expectation_with_witness() {
    let ws = Workspace::new();
    let m = ws.write("m.json", r#"{"pairs":[[[0],[0]],[[1],[1]],[[2],[0]]]}"#);
    let o = shy(&["check", "--map", &m, "--domain", &ws.path("x.json"), "--codomain", &ws.path("y.json"), "--expect", "shy", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["not_shy"]["reason"], "disconnected-preimage");
    assert_eq!(v["not_shy"]["witness"], serde_json::json!([[0]]));
    assert_eq!(v["expect"]["holds"], false);

    let o = shy(&["check", "--map", &m, "--domain", &ws.path("x.json"), "--codomain", &ws.path("y.json"), "--expect", "continuous"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn map_file_names_its_images() {
    let ws = Workspace::new();
    let m = ws.write("m.json", r#"{"domain":"x.json","codomain":"y.json","pairs":[[[0],[0]],[[1],[0]],[[2],[1]]]}"#);
    let o = shy(&["check", "--map", &m, "--expect", "shy"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("shy: true"));
}

#[test]
fn input_errors_exit_2() {
    let ws = Workspace::new();
    let missing = ws.write("m.json", r#"{"pairs":[[[0],[0]],[[1],[0]]]}"#);
    let outside = ws.write("o.json", r#"{"pairs":[[[0],[0]],[[1],[0]],[[2],[5]]]}"#);
    let dup = ws.write("d.json", r#"{"dimension":1,"adjacency":{"kind":"cu","u":1},"points":[[0],[1],[1]]}"#);
    let (x, y) = (ws.path("x.json"), ws.path("y.json"));
    for args in [
        vec!["check", "--map", &missing, "--domain", &x, "--codomain", &y],
        vec!["check", "--map", &outside, "--domain", &x, "--codomain", &y],
        vec!["check", "--map", &missing],
        vec!["components", &dup],
        vec!["components", "/no/such/file.json"],
        vec!["verify", "nope"],
        vec!["verify", "all", "--xlen", "3"],
        vec!["verify", "wedge", "--k", "3"],
        vec!["verify", "monotone", "--xlen", "3"],
        vec!["enumerate", "--domain", &x, "--codomain", &y, "--bound", "0"],
    ] {
        let o = shy(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn enumeration_respects_bound_and_limit() {
    let ws = Workspace::new();
    let (x, y) = (ws.path("x.json"), ws.path("y.json"));
    let o = shy(&["enumerate", "--domain", &x, "--codomain", &y, "--filter", "continuous-surjections", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 6);

    let o = shy(&["enumerate", "--domain", &x, "--codomain", &y, "--bound", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = shy(&["enumerate", "--domain", &x, "--codomain", &y, "--bound", "4", "--limit", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("3 map(s)"));
}

#[test]
fn tree_fixture_parses() {
    let tree = fixture("tree.json");
    let o = shy(&["components", tree.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["connected"], true);
    assert_eq!(v["components"][0].as_array().unwrap().len(), 11);

    let o = shy(&["verify", "cut-vertex", "--tree", tree.to_str().unwrap(), "--root", "0", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("cut-vertex: PASS"));
}

#[test]
fn constructions_write_image_files() {
    let ws = Workspace::new();
    let out = ws.path("w.json");
    let left = ws.write("l.json", r#"{"dimension":1,"adjacency":{"kind":"cu","u":1},"points":[[-1],[0]]}"#);
    let o = shy(&["wedge", "--left", &left, "--right", &ws.path("x.json"), "--junction", "0", "--format", "json", "--out", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
    let o = shy(&["components", &out]);
    assert!(stdout(&o).starts_with("1 component(s)\n{-1, 0, 1, 2}"));

    let prod = ws.path("p.json");
    let o = shy(&["product", "--left", &ws.path("y.json"), "--right", &ws.path("y.json"), "--format", "json", "--out", &prod]);
    assert_eq!(o.status.code(), Some(0));
    let o = shy(&["enumerate", "--domain", &prod, "--codomain", &ws.path("y.json"), "--filter", "shy"]);
    // The product square is complete, so every surjection onto two points is shy.
    assert!(stdout(&o).starts_with("14 map(s)"));

    let cyc = ws.path("c.json");
    shy(&["construct", "cycle", "--size", "6", "--format", "json", "--out", &cyc]);
    let o = shy(&["enumerate", "--domain", &cyc, "--codomain", &ws.path("x.json"), "--filter", "shy"]);
    assert!(stdout(&o).starts_with("0 map(s)"));
}

#[test]
fn verify_reports() {
    let o = shy(&["verify", "monotone", "--xlen", "4", "--ylen", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["theorem_id"], "monotone");
    assert_eq!(v["passed"], true);
    assert!(v["instances_checked"].as_u64().unwrap() > 0);
    assert!(v["wall_time"].is_f64());
    assert_eq!(v["counterexamples"], serde_json::json!([]));

    let o = shy(&["verify", "closed-curve", "--size", "4", "--size", "5", "--kmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let o = shy(&["verify", "cu-product", "--m", "2", "--n", "1", "--bound", "100"]);
    assert_eq!(o.status.code(), Some(2));
}
