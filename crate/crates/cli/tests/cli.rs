use std::process::Command;

use maxclust_cli::run;
use maxclust_cli::schema::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("maxclust").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

/// Parses a JSON document into its schema type and checks that
/// re-serializing reproduces the output byte for byte.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> Envelope<T> {
    let out = ok(args);
    let doc: Envelope<T> = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.schema_version, SCHEMA_VERSION);
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", out);
    doc
}

#[test]
fn classify_reports_flags_and_counts() {
    let out = ok(&["classify", "--graph", "A2", "--word", "1,2,1"]);
    assert_eq!(out.lines().next().unwrap(), "MC=yes FB=yes FC=no N=1 Ñ=1");
}

#[test]
fn mc_all_counts_a3() {
    assert_eq!(ok(&["mc-all", "--graph", "A3", "--count"]), "21\n");
    let words = ok(&["mc-all", "--graph", "A3"]);
    assert_eq!(words.lines().count(), 21);
    assert_eq!(words.lines().next(), Some("()"));
}

#[test]
fn graph_reports_finiteness() {
    let out = ok(&["graph", "E6"]);
    assert!(out.starts_with("mc_finite=true\n"));
    let out = ok(&["graph", "--graph", r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[2,0]]}"#]);
    assert!(out.starts_with("mc_finite=false\n"));
    assert!(out.contains("(cycle)"));
}

#[test]
fn contract_and_pi() {
    assert_eq!(ok(&["contract", "--graph", "A3", "--word", "1,2,3,1"]), "[1 2 1] 3\n");
    assert_eq!(ok(&["contract", "--graph", "A3", "--word", "3 [1 2 1]"]), "3 [1 2 1]\n");
    assert_eq!(ok(&["pi", "--graph", "D4", "--word", "2,1,3,4,2,4,3,1"]), "2,4,3,1\nÑ=0\n");
    assert_eq!(ok(&["pi", "--graph", "A3", "--word", "1,2,3,2,1", "--full"]), "3,2,1\nÑ=0\n");
}

#[test]
fn census_table() {
    let out = ok(&["census", "--graph", "A2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0].split_whitespace().collect::<Vec<_>>(), ["length", "total", "fc", "fb", "mc"]);
    assert_eq!(lines[4].split_whitespace().collect::<Vec<_>>(), ["3", "1", "0", "1", "1"]);
}

#[test]
fn json_documents_round_trip() {
    let g = round_trip::<GraphDoc>(&["graph", "D5", "--format", "json"]);
    assert!(g.body.report.mc_finite);
    assert_eq!(g.command, "graph");
    let c = round_trip::<ClassifyDoc>(&["classify", "--graph", "A3", "--word", "1,2,1,3,2,1", "--format", "json"]);
    assert_eq!((c.body.report.n_w, c.body.report.n_tilde_w), (4, 3));
    assert!(!c.body.report.flags.maximally_clustered);
    let r = round_trip::<RootSeqDoc>(&["rootseq", "--graph", "A2", "--word", "1,2,1", "--format", "json"]);
    assert_eq!(r.body.roots.len(), 3);
    let m = round_trip::<MovesDoc>(&["moves", "--graph", "A3", "--word", "1,2,1,3", "--format", "json"]);
    assert_eq!(m.body.moves.len(), 2);
    let k = round_trip::<ContractDoc>(&["contract", "--graph", "A3", "--word", "3,1,2,1", "--format", "json"]);
    assert_eq!(k.body.contracted, "3 [1 2 1]");
    let p = round_trip::<PiDoc>(&["pi", "--graph", "A3", "--word", "3,1,2,1", "--format", "json"]);
    assert_eq!((p.body.image.to_string(), p.body.index, p.body.n_tilde_w), ("3,2,1".into(), Some(1), 0));
    let s = round_trip::<CensusDoc>(&["census", "--graph", "A3", "--format", "json"]);
    assert_eq!(s.body.rows.iter().map(|r| r.mc).sum::<usize>(), 21);
    let a = round_trip::<McAllDoc>(&["mc-all", "--graph", "A3", "--format", "json"]);
    assert_eq!((a.body.count, a.body.complete), (21, true));
    assert_eq!(a.body.words.unwrap().len(), 21);
    let a = round_trip::<McAllDoc>(&["mc-all", "--graph", "A3", "--count", "--format", "json"]);
    assert!(a.body.words.is_none());
}

#[test]
fn exit_codes() {
    let (code, _, err) = invoke(&["classify", "--graph", "A3", "--word", "1,1"]);
    assert_eq!(code, 1);
    assert!(err.contains("not reduced"), "{err}");
    let (code, _, _) = invoke(&["mc-all", "--graph", r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[2,0]]}"#]);
    assert_eq!(code, 1);
    let (code, _, _) = invoke(&["graph", "B3"]);
    assert_eq!(code, 1);
    let (code, _, err) = invoke(&["classify", "--graph", "A3"]);
    assert_eq!(code, 2);
    assert!(err.contains("--word"));
    let (code, _, _) = invoke(&["census", "--graph", "A3", "--format", "yaml"]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&["classify", "--graph", "@/nonexistent/graph", "--word", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = invoke(&["census", "--graph", r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[2,0]]}"#, "--max-nodes", "100"]);
    assert_eq!(code, 1);
}

#[test]
fn file_indirection() {
    let dir = std::env::temp_dir().join(format!("maxclust-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let gpath = dir.join("g.txt");
    let wpath = dir.join("w.txt");
    std::fs::write(&gpath, "vertices: [1,2,3]\nedges: [[1,2],[2,3]]\n").unwrap();
    std::fs::write(&wpath, "1,2,1\n").unwrap();
    let g = format!("@{}", gpath.display());
    let w = format!("@{}", wpath.display());
    let out = ok(&["classify", "--graph", &g, "--word", &w]);
    assert!(out.starts_with("MC=yes FB=yes FC=no N=1 Ñ=1"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_maxclust");
    let args = ["mc-all", "--graph", "D4", "--format", "json"];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let census = |_| Command::new(bin).args(["census", "--graph", "D5"]).output().unwrap().stdout;
    assert_eq!(census(0), census(1));
    let code = Command::new(bin).args(["classify", "--graph", "A3"]).output().unwrap().status.code();
    assert_eq!(code, Some(2));
}
