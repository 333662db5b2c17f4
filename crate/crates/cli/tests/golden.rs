//! Golden-output tests for every subcommand. Set `UPDATE_GOLDEN=1` to rewrite
//! the files under `tests/golden/` after an intentional output change.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn multitree(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_multitree"))
        .args(args)
        .env_remove("MULTITREE_LIMIT_VERTICES")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn multitree");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    format!("@{}", path.display())
}

fn golden(name: &str, args: &[&str]) {
    let run = multitree(args, None);
    assert_eq!(run.code, 0, "{args:?} failed: {}", run.stderr);
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &run.stdout).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(run.stdout, expected, "output of {args:?} differs from {}", path.display());
    // no run-to-run variation
    assert_eq!(multitree(args, None).stdout, run.stdout);
}

fn exit_code(args: &[&str]) -> i32 {
    multitree(args, None).code
}

#[test]
fn count_examples() {
    let run = multitree(&["count", "--stat", "unitype-degree", "--gamma", "2,1,1"], None);
    assert_eq!((run.code, run.stdout.as_str()), (0, "1\n"));
    let run = multitree(
        &["count", "--stat", "edge-types", "--d", "2", "--profile", "2,2", "--root", "1", "--m", "1,2:1;2,1:2"],
        None,
    );
    assert_eq!((run.code, run.stdout.as_str()), (0, "8\n"));
}

#[test]
fn count_statistics() {
    golden("count_injective_edge_types", &[
        "count", "--stat", "injective-edge-types", "--profile", "2,2", "--root", "1", "--m", "1,2:1;2,1:2",
    ]);
    golden("count_embedded", &["count", "--stat", "embedded", "--profile", "2,3", "--root", "1", "--digraph", "1,2;2,1;2,2"]);
    golden("count_injective_embedded", &[
        "count", "--stat", "injective-embedded", "--profile", "2,3", "--root", "2", "--digraph", "1,2;2,1",
    ]);
    golden("count_indegree", &["count", "--stat", "indegree", "--profile", "2,2", "--root", "1", "--gamma", "2,1,1:2;1,2,1:1"]);
    golden("count_degree_classes", &[
        "count", "--stat", "degree-classes", "--d", "2", "--root", "1", "--classes", "1:0,2:1;1:0,0:1;2:1,0:1;2:0,0:1",
    ]);
    golden("count_complete_types", &[
        "count", "--stat", "complete-types", "--d", "1", "--root", "1", "--classes", "1,2:2:1;1,1:2:1;1,1:0:3",
    ]);
    golden("count_complete_special", &[
        "count", "--stat", "complete-special", "--d", "1", "--classes", "1,2:2:1;1,1:2:1;1,1:0:3",
    ]);
    golden("count_plane", &["count", "--stat", "plane", "--counts", "3,0,2"]);
    golden("count_cacti_degree", &["count", "--stat", "cacti-degree", "--profile", "2,2", "--degrees", "1,2,2,1"]);
    golden("count_cacti_total", &["count", "--stat", "cacti-total", "--profile", "3,2,2"]);
}

#[test]
fn gf_kinds() {
    golden("gf_multitype", &["gf", "--profile", "2,1", "--root", "1"]);
    golden("gf_forests", &["gf", "--kind", "forests", "--profile", "1,1", "--pretty"]);
    golden("gf_delta", &["gf", "--kind", "delta", "--profile", "1,1,1", "--root", "2"]);
    golden("gf_star", &["gf", "--kind", "star", "--profile", "2,2", "--root", "1"]);
}

#[test]
fn listings() {
    golden("list_trees", &["list", "--kind", "trees", "--profile", "1,2", "--root", "1"]);
    golden("list_forests", &["list", "--kind", "forests", "--profile", "1,1"]);
    golden("list_unrooted", &["list", "--kind", "unrooted", "--n", "4", "--limit", "5"]);
    golden("list_plane", &["list", "--kind", "plane", "--n", "4"]);
    golden("list_skeletons", &["list", "--kind", "skeletons", "--d", "3", "--root", "2"]);
    golden("list_cacti", &["list", "--kind", "cacti", "--profile", "2,1"]);
}

#[test]
fn list_counts_match_count() {
    let trees = multitree(&["list", "--kind", "trees", "--profile", "2,2", "--root", "1"], None);
    let m = multitree(&["count", "--stat", "embedded", "--profile", "2,2", "--root", "1", "--digraph", "1,1;1,2;2,1;2,2"], None);
    assert_eq!(trees.stdout.lines().count().to_string(), m.stdout.trim());
}

#[test]
fn bijections() {
    golden("bijection_unitype", &["bijection", "unitype", "--tree", &fixture("path4.json"), "--mark", "2,1", "--from", "2", "--to", "4"]);
    golden("bijection_marked", &[
        "bijection", "marked", "--tree", &fixture("marked.json"), "--s", "2", "--t", "2", "--from", "1", "--to", "2",
    ]);
    golden("bijection_marked_verify", &[
        "bijection", "marked", "--verify", "--tree", &fixture("marked.json"), "--s", "2", "--t", "2", "--from", "1",
        "--to", "2",
    ]);
    golden("bijection_star", &["bijection", "star", "--profile", "2,2", "--gamma", "2,1,2:1;1,2,1:1;2,1,1:1"]);
    golden("bijection_verify", &["bijection", "verify", "--max-vertices", "5", "--max-d", "2"]);
}

#[test]
fn marked_tree_from_stdin() {
    let text = std::fs::read_to_string(&fixture("marked.json")[1..]).unwrap();
    let run = multitree(&["bijection", "marked", "--tree", "-", "--s", "2", "--t", "2", "--from", "1", "--to", "2"], Some(&text));
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("\"case\""));
}

#[test]
fn lagrange_routes() {
    let sys = fixture("catalan.json");
    golden("lagrange_all", &["lagrange", "--system", &sys, "--coefficient", "4"]);
    golden("lagrange_treesum", &["lagrange", "--system", &sys, "--coefficient", "3", "--route", "treesum"]);
    golden("lagrange_two_types", &["lagrange", "--system", &fixture("two_types.json"), "--coefficient", "2,1"]);
    // past the truncation order
    assert_eq!(exit_code(&["lagrange", "--system", &sys, "--coefficient", "4", "--order", "3"]), 2);
}

#[test]
fn cacti_commands() {
    golden("cacti_count", &["cacti", "count", "--profile", "2,2"]);
    golden("cacti_count_degrees", &["cacti", "count", "--profile", "2,2", "--degrees", "1,2,2,1"]);
    golden("cacti_list", &["cacti", "list", "--profile", "2,2", "--limit", "3"]);
    golden("cacti_phi", &["cacti", "phi", "--cactus", &fixture("cactus.json"), "--s", "1", "--j", "2", "--k", "1"]);
    golden("cacti_psi", &["cacti", "psi", "--cactus", &fixture("cactus_star.json"), "--r", "2", "--s", "1"]);
    golden("cacti_verify", &["cacti", "verify"]);
}

#[test]
fn verify_suites() {
    golden("verify_small", &["verify", "--suite", "unitype,plane,determinant", "--max-vertices", "5", "--max-d", "3"]);
    golden("verify_pretty", &["verify", "--suite", "forests", "--max-vertices", "4", "--max-d", "2", "--pretty"]);
    let run = multitree(&["verify", "--suite", "gf", "--max-vertices", "3", "--max-d", "2", "--timing"], None);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("\"elapsed_ms\""));
}

#[test]
fn verify_all_default_sweep() {
    let run = multitree(&["verify", "--suite", "all", "--max-vertices", "7", "--max-d", "3"], None);
    assert_eq!(run.code, 0, "{}\n{}", run.stdout, run.stderr);
    assert_eq!(run.stdout.lines().count(), 9);
}

#[test]
fn exit_codes() {
    // invalid input
    assert_eq!(exit_code(&["count", "--stat", "edge-types", "--profile", "2,2", "--root", "3", "--m", "1,2:1"]), 2);
    assert_eq!(exit_code(&["count", "--stat", "unitype-degree", "--gamma", "2,x"]), 2);
    assert_eq!(exit_code(&["count", "--stat", "edge-types", "--profile", "2,2", "--root", "1"]), 2);
    assert_eq!(exit_code(&["verify", "--suite", "nonsense"]), 2);
    assert_eq!(exit_code(&["bijection", "unitype", "--tree", "{\"n\":3}", "--mark", "1,2", "--from", "1", "--to", "2"]), 2);
    // precondition: the marked edge lies on the path
    assert_eq!(
        exit_code(&["bijection", "unitype", "--tree", &fixture("path4.json"), "--mark", "1,2", "--from", "1", "--to", "4"]),
        2
    );
    assert_eq!(exit_code(&["no-such-command"]), 2);
    // size bounds
    assert_eq!(exit_code(&["list", "--kind", "unrooted", "--n", "20"]), 3);
    assert_eq!(exit_code(&["--limit-vertices", "3", "list", "--kind", "trees", "--profile", "2,2", "--root", "1"]), 3);
    assert_eq!(exit_code(&["gf", "--profile", "2,2", "--root", "1", "--limit-gf-terms", "2"]), 3);
    let run = multitree(&["list", "--kind", "cacti", "--profile", "3,3,3,3,3"], None);
    assert_eq!(run.code, 3, "{}", run.stderr);
}

#[test]
fn size_bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_multitree"))
        .args(["list", "--kind", "plane", "--n", "5"])
        .env("MULTITREE_LIMIT_PLANE_VERTICES", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
