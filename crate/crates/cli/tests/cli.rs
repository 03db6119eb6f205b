use std::path::{Path, PathBuf};
use std::process::Command;

use subtrans_cli::{run, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_USAGE};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus").join(name)
}

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["subtrans"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn solve_k3_report() {
    let f = corpus("k3-terminal.wst");
    let (code, out, _) = call(&["solve", path_str(&f), "--problem", "oct"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "problem oct\nclass P4free\nroute cograph\nn 3\nweight 1\nremoved 3\n"
    );
}

#[test]
fn solve_without_terminals() {
    let (code, out, _) = call(&["solve", path_str(&corpus("isolated-pair.wst")), "--problem", "fvs"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("route no-terminals\n") && out.ends_with("weight 0\nremoved\n"));
}

#[test]
fn recognize_p5() {
    let (code, out, _) = call(&["recognize", path_str(&corpus("p5-middle.wst"))]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "class ThreeP1P2free\nwitness P4 1 2 3 4\nwitness P1+P3 1 3 4 5\n");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("loop.wst");
    std::fs::write(&bad, "p wst 2 1\nw 1 1\nw 2 1\ne 1 1\nt 0\n").unwrap();
    let (code, _, err) = call(&["solve", path_str(&bad)]);
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("line 4, column 5"));

    let (code, _, err) = call(&["solve", path_str(&corpus("unsupported-n30.wst"))]);
    assert_eq!(code, EXIT_UNSUPPORTED, "{err}");
    let (code, _, _) = call(&["solve", path_str(&corpus("unsupported-n12.wst")), "--oracle-cap", "8"]);
    assert_eq!(code, EXIT_UNSUPPORTED);

    assert_eq!(call(&["solve"]).0, EXIT_USAGE);
    assert_eq!(call(&["solve", "x.wst", "--problem", "vc"]).0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["solve", path_str(&dir.path().join("missing.wst"))]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn generate_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gen");
    let (code, _, err) = call(&[
        "generate",
        "random",
        "--class",
        "3p1p2",
        "-n",
        "10",
        "--count",
        "100",
        "--seed",
        "1",
        "--out",
        path_str(&out),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    let (code, text, _) = call(&["verify", path_str(&out)]);
    assert_eq!(code, EXIT_OK);
    assert!(text.ends_with("checked 200 mismatched 0\n"), "{text}");
}

#[test]
fn generate_is_seeded() {
    let a = call(&["generate", "random", "--class", "p1p3free", "-n", "12", "--seed", "42"]);
    let b = call(&["generate", "random", "--class", "p1p3free", "-n", "12", "--seed", "42"]);
    assert_eq!(a.0, EXIT_OK);
    assert_eq!(a, b);
    let c = call(&["generate", "random", "--class", "p1p3free", "-n", "12", "--seed", "43"]);
    assert_ne!(a.1, c.1);
}

#[test]
fn reduction_of_a_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = dir.path().join("k3.wst");
    std::fs::write(&k3, "p wst 3 3\nw 1 1\nw 2 1\nw 3 1\ne 1 2\ne 1 3\ne 2 3\nt 0\n").unwrap();
    let (code, text, _) = call(&["generate", "reduction", path_str(&k3)]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(text, std::fs::read_to_string(corpus("reduction-k3.wst")).unwrap());
    let k4 = dir.path().join("k4.wst");
    std::fs::write(&k4, std::fs::read_to_string(corpus("k4-all.wst")).unwrap()).unwrap();
    assert_eq!(call(&["generate", "reduction", path_str(&k4)]).0, EXIT_UNSUPPORTED);
}

#[test]
fn solve_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.txt");
    let (code, out, _) = call(&["solve", path_str(&corpus("c5-all.wst")), "--out", path_str(&target)]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let report = std::fs::read_to_string(target).unwrap();
    assert!(report.contains("weight 1\nremoved 4\n"), "{report}");
}

#[test]
fn bench_lists_every_file() {
    let (code, out, _) = call(&["bench", path_str(&corpus("")), "--problem", "oct", "--jobs", "2"]);
    assert_eq!(code, EXIT_OK);
    let files = std::fs::read_dir(corpus("")).unwrap().count();
    assert_eq!(out.lines().count(), files + 1);
    assert!(out.lines().nth(1).unwrap().starts_with("2p2free-n13-all.wst"));
}

#[test]
fn binary_exit_status() {
    let status = Command::new(env!("CARGO_BIN_EXE_subtrans"))
        .args(["solve", path_str(&corpus("unsupported-n30.wst"))])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_UNSUPPORTED));
}
