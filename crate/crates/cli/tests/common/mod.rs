//! Helpers shared by the CLI tests and the acceptance run.
#![allow(dead_code)]

use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn run<S: AsRef<str>>(args: &[S]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_geomonoid"))
        .args(args.iter().map(AsRef::as_ref))
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn split(line: &str) -> Vec<String> {
    // arguments are separated by `|` so words may contain spaces
    line.split('|').map(|s| s.trim().to_string()).collect()
}

/// Every invocation the CLI test suite makes, with its expected exit code.
/// Runs an invocation that must be listed in [`invocations`], so the
/// determinism check covers everything the tests exercise.
pub fn listed(line: &str) -> Run {
    let args = split(line);
    assert!(
        invocations().iter().any(|(a, _)| *a == args),
        "`{line}` is not in the invocation list"
    );
    run(&args)
}

pub fn invocations() -> Vec<(Vec<String>, i32)> {
    let d = data;
    let lines: Vec<(String, i32)> = vec![
        ("parse|--pres|bicyclic".into(), 0),
        (format!("parse|--pres|{}", d("bicyclic.pres")), 0),
        ("parse|--pres|section4_S|--format|json".into(), 0),
        ("parse|--pres|free_commutative_2|--format|json".into(), 0),
        ("nf|--pres|bicyclic|--w|b a a b a b b".into(), 0),
        ("nf|--pres|mx(evens)|--w|abbc|--format|json".into(), 0),
        ("area|--pres|bicyclic|--u|a a b b|--v|1|--depth|10".into(), 0),
        ("area|--pres|bicyclic|--u|b a|--v|1".into(), 0),
        ("area|--pres|section4_S|--u|c b b|--v|c b b b|--depth|2".into(), 0),
        ("area|--pres|section4_S|--u|a1 a2|--v|a1 c|--depth|1".into(), 2),
        ("dehn|--pres|bicyclic|--n-max|4".into(), 0),
        ("dehn|--pres|free_commutative_2|--n-max|4|--format|json".into(), 0),
        ("ball|--pres|bicyclic|--L|2".into(), 0),
        ("ball|--pres|free(1)|--L|3|--format|dot".into(), 0),
        ("ball|--pres|free_commutative_2|--L|2|--format|text".into(), 0),
        ("dist|--pres|free(1)|--L|3|--x|a|--y|1".into(), 0),
        ("dist|--pres|f2_group|--L|2|--x|x y|--y|#0|--metric|subspace".into(), 0),
        ("dist|--pres|bicyclic|--L|3|--pairs|5|--seed|7".into(), 2),
        ("qmetric|--pres|free(1)|--L|3|--lambda|5|--mu|3/2".into(), 0),
        ("qmetric|--pres|f2_group|--L|2|--lambda|1|--mu|0|--metric|subspace".into(), 0),
        ("scc|--pres|bicyclic|--L|2".into(), 2),
        ("scc|--pres|free(2)|--L|2".into(), 0),
        ("schutz|--pres|bicyclic|--L|4|--h|1".into(), 2),
        ("schutz|--pres|bicyclic|--L|2|--h|1|--format|dot".into(), 2),
        ("kn-cells|--pres|free_commutative_2|--L|4|--n|4".into(), 0),
        ("kn-cells|--pres|bicyclic|--L|3|--n|2|--format|text".into(), 0),
        ("homotopy|--pres|free_commutative_2|--L|8|--n|4|--p|aabb|--q|bbaa".into(), 0),
        ("homotopy|--pres|free_commutative_2|--L|4|--n|4|--p|ab|--q|ba|--full".into(), 0),
        ("homotopy|--pres|free_commutative_2|--L|6|--n|2|--p|ab|--q|ba".into(), 0),
        ("gamma|--pres|free_commutative_2|--L|10|--n|4|--i-max|8".into(), 0),
        ("qsc|--pres|free_commutative_2|--L|8|--n|4|--i-max|6".into(), 0),
        ("qsc|--pres|free_commutative_2|--L|10|--n|2|--i-max|6".into(), 0),
        (
            format!("qi-check|--x-pres|free(1)|--x-L|3|--y-pres|free(1)|--y-L|6|--map|{}|--lambda|2|--eps|1", d("doubling.map")),
            0,
        ),
        (
            format!("qi-check|--x-pres|free(1)|--x-L|3|--y-pres|free(1)|--y-L|3|--map|{}|--lambda|1|--eps|1", d("collapse.map")),
            0,
        ),
        ("qi-density|--pres|free(1)|--L|4|--image|0,2,4|--mu|3".into(), 0),
        ("qi-density|--pres|f2_group|--L|2|--image|0,5,6,7,8,9,10,11,12,13,14,15,16|--mu|1|--metric|subspace".into(), 0),
        (
            format!(
                "qi-inverse|--x-pres|f2_group|--x-L|1|--y-pres|f2_group|--y-L|1|--map|{}|--lambda|1|--eps|1|--mu|0|--metric|subspace",
                d("f2_identity.map")
            ),
            0,
        ),
        ("mbound|--lambda|2|--eps|1|--mu|1|--n|3".into(), 0),
        ("mbound|--lambda|3/2|--eps|1/3|--mu|0|--n|0|--format|json".into(), 0),
        (format!("type-cmp|--f|{}|--g|{}|--a|2", d("square.csv"), d("linear.csv")), 0),
        (format!("type-cmp|--f|{}|--g|{}|--a-max|5", d("square.csv"), d("linear.csv")), 0),
        ("bushy|--pres|mx(evens)|--L|4|--cap|6".into(), 0),
        ("bushy|--pres|free(1)|--L|4|--cap|6".into(), 0),
        ("mx-nf|--x|finite:1|--w|abcabbc".into(), 0),
        ("mx-nf|--x|evens|--w|a b b c c|--format|json".into(), 0),
        ("mx-wp|--x|periodic:t=4,p=3,r=0,2|--u|abbbbbc|--v|abbbbbd".into(), 0),
        ("mx-ball|--x|finite:1|--L|2".into(), 0),
        ("mx-ball|--x|evens|--L|1|--format|dot".into(), 0),
        ("mx-iso|--x|finite:1|--y|evens|--L|5".into(), 0),
        ("f2-ball|--L|1".into(), 0),
        ("f2-ball|--L|2|--format|text".into(), 0),
        ("frobnicate".into(), 1),
        ("area|--pres|bicyclic|--u|a b".into(), 1),
        ("area|--pres|no_such_monoid|--u|a|--v|a".into(), 1),
        ("mbound|--lambda|1/2|--eps|1|--n|3".into(), 1),
        (
            format!("qi-check|--x-pres|free(1)|--x-L|1|--y-pres|free(1)|--y-L|1|--map|{}|--lambda|1|--eps|1", d("bad.map")),
            1,
        ),
    ];
    lines.into_iter().map(|(l, c)| (split(&l), c)).collect()
}
