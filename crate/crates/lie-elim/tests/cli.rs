use std::io::Write;
use std::process::{Command, Stdio};

use lie_elim::cli::GraphFile;
use lie_elim::LieError;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lie-elim"))
}

fn run_stdin(args: &[&str], input: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const K2: &str = "n 2\n1 2\n";

#[test]
fn graph_file_parsing() {
    let g = GraphFile::parse("# graph\n\nn 4\n1 2 # edge\n2 1\n4 3\n").unwrap();
    assert_eq!(g.n, 4);
    assert_eq!(g.edges, vec![(2, 1), (4, 3)]);
    for (text, line) in [
        ("n 2\n1 1\n", 2),
        ("n x\n", 1),
        ("2 1\n", 1),
        ("n 3\n1 2 3\n", 2),
        ("n 2\n\n# c\n0 1\n", 4),
    ] {
        match GraphFile::parse(text) {
            Err(LieError::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
    assert!(GraphFile::parse("# nothing\n").is_err());
}

#[test]
fn ranks_of_k2() {
    let (code, out, _) = run_stdin(&["ranks", "-", "-d", "4", "--format", "csv"], K2);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "section,d,rank,idealRank,saturated");
    assert_eq!(lines[1], "raag,1,2,0,true");
    assert_eq!(lines[2], "raag,2,0,1,true");
}

#[test]
fn ranks_of_empty_graph() {
    let (code, out, _) = run_stdin(&["ranks", "-", "-d", "5", "--format", "json"], "n 2\n");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "lie-elim/1");
    let ranks: Vec<u64> = (1..=5)
        .map(|d| {
            v["sections"]["raag"]["degrees"][d.to_string()]["rank"]
                .as_u64()
                .unwrap()
        })
        .collect();
    assert_eq!(ranks, vec![2, 1, 2, 3, 6]);
}

#[test]
fn fp_json_single_edge() {
    let (code, out, _) = run_stdin(&["fp", "-", "-d", "4", "--format", "json"], K2);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let fp = &v["sections"]["fp"]["degrees"];
    assert_eq!(fp["1"]["rankGr"], 3);
    assert_eq!(fp["2"]["rankGr"], 2);
    assert_eq!(fp["2"]["rankJ"], 1);
    for d in 1..=4 {
        assert_eq!(fp[d.to_string()]["saturated"], true);
        assert_eq!(fp[d.to_string()]["splitOK"], true);
    }
    assert_eq!(v["ok"], true);
}

#[test]
fn fp_empty_relation_and_degree_one() {
    let (code, out, _) = run_stdin(&["fp", "-", "-d", "4", "--format", "json"], "n 2\n");
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sections"]["emptyRelation"]["degrees"]["3"]["rankJ"], 4);
    let (code, out, _) = run_stdin(&["fp", "-", "-d", "1", "--format", "json"], K2);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sections"]["fp"]["degrees"]["1"]["rankJ"], 0);
}

#[test]
fn output_is_deterministic() {
    let path = "n 3\n1 2\n2 3\n";
    for fmt in ["json", "text", "csv"] {
        let a = run_stdin(
            &["verify", "-", "-d", "4", "--seed", "7", "--format", fmt],
            path,
        );
        let b = run_stdin(
            &["verify", "-", "-d", "4", "--seed", "7", "--format", fmt],
            path,
        );
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}

#[test]
fn eliminate_prints_generators_in_input_labels() {
    let (code, out, _) = run_stdin(
        &["eliminate", "-", "-d", "3", "--show-relabel"],
        "n 3\n3 2\n",
    );
    assert_eq!(code, 0);
    assert!(out.contains("relabel (working->input): 1->2 2->3 3->1"));
    assert!(out.contains("[y3,y2]"));
    assert!(out.contains("adjoined y1"));
}

#[test]
fn eliminate_empty_relation_is_an_error() {
    let (code, _, err) = run_stdin(&["eliminate", "-", "-d", "3"], "n 3\n");
    assert_eq!(code, 2);
    assert!(err.contains("empty"));
}

#[test]
fn verify_passes_and_corruption_fails() {
    let (code, out, _) = run_stdin(&["verify", "-", "-d", "5", "--seed", "0"], K2);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("result: ok"));
    let (code, out, _) = run_stdin(&["verify", "-", "-d", "5", "--corrupt-relator"], K2);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL raag ideal modulo its commutator is free"));
}

#[test]
fn verify_empty_relation_on_three() {
    let (code, out, _) = run_stdin(&["verify", "-", "-d", "4"], "n 3\n");
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS L(A) = L(Y) + L(Omega) + J"));
    assert!(out.contains("PASS J modulo its commutator is free on the [s,y_i,y_j]"));
}

#[test]
fn quiet_prints_nothing() {
    let (code, out, _) = run_stdin(&["verify", "-", "-d", "3", "--quiet"], K2);
    assert_eq!(code, 0);
    assert!(out.is_empty());
}

#[test]
fn parse_errors_carry_line_numbers() {
    let (code, _, err) = run_stdin(&["ranks", "-"], "n 2\n1 5\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn reads_from_a_file() {
    let dir = std::env::temp_dir().join(format!("lie-elim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("k2.txt");
    std::fs::write(&file, K2).unwrap();
    let out = bin()
        .args([
            "ranks",
            file.to_str().unwrap(),
            "-d",
            "2",
            "--format",
            "csv",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("raag,2,0,1,true"));
    std::fs::remove_dir_all(dir).unwrap();
}
