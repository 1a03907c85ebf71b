use std::process::{Command, Output};

use groth_cli::render::{to_json, ElementJson, ExpansionJson};

fn groth(args: &[&str]) -> Output {
    groth_env(args, None)
}

fn groth_env(args: &[&str], caps: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_groth"));
    cmd.args(args).env_remove("GROTH_DEFAULT_CAPS");
    if let Some(c) = caps {
        cmd.env("GROTH_DEFAULT_CAPS", c);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn compute_examples() {
    let o = groth(&["compute", "G", "--shape", "1", "--method", "bialternant", "--vars", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "x1 + x2 + b x1 x2\n");

    let o = groth(&[
        "compute",
        "g",
        "--shape",
        "3",
        "--method",
        "determinant",
        "--format",
        "latex",
    ]);
    assert_eq!(stdout(&o), "s_{3}\n");
    let o = groth(&[
        "compute", "g", "--shape", "3", "--basis", "complete", "--format", "latex",
    ]);
    assert_eq!(stdout(&o), "h_{3}\n");

    let o = groth(&["compute", "G", "--shape", "", "--method", "fermionic"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn routes_print_the_same_element() {
    let mut outs = Vec::new();
    for m in ["bialternant", "jacobi-trudi", "fermionic", "another-determinant", "gr"] {
        let o = groth(&[
            "compute", "G", "--shape", "2,1", "--method", m, "--vars", "3", "--degree", "6", "--format", "latex",
        ]);
        assert_eq!(code(&o), 0, "{m}");
        outs.push(stdout(&o));
    }
    assert!(outs.windows(2).all(|w| w[0] == w[1]), "{outs:?}");
    let a = groth(&[
        "compute",
        "g",
        "--shape",
        "2,1",
        "--method",
        "determinant",
        "--format",
        "latex",
    ]);
    let b = groth(&[
        "compute",
        "g",
        "--shape",
        "2,1",
        "--method",
        "fermionic",
        "--format",
        "latex",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), "s_{2,1} - \\beta s_{2}\n");
}

#[test]
fn json_round_trips() {
    let o = groth(&["compute", "G", "--shape", "2,1", "--vars", "3", "--format", "json"]);
    let text = stdout(&o);
    let parsed: ElementJson = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed.family, "G");
    assert_eq!(parsed.shape, vec![2, 1]);
    assert_eq!(parsed.caps.n_vars, 3);
    assert_eq!(parsed.caps.max_degree, 7);
    assert_eq!(to_json(&parsed), text);
    assert_eq!(
        stdout(&groth(&[
            "compute", "G", "--shape", "2,1", "--vars", "3", "--format", "json"
        ])),
        text
    );

    let o = groth(&[
        "expand", "sG", "--s", "2", "--mu", "1", "--rows", "2", "--format", "json",
    ]);
    let text = stdout(&o);
    let parsed: ExpansionJson = serde_json::from_str(&text).unwrap();
    assert_eq!(to_json(&parsed), text);
    let parts: Vec<_> = parsed.terms.iter().map(|t| t.partition.clone()).collect();
    assert_eq!(parts, vec![vec![2, 2], vec![3], vec![2, 1]]);
}

#[test]
fn expand_examples() {
    let o = groth(&["expand", "sG", "--s", "2", "--mu", "1", "--rows", "2"]);
    assert_eq!(stdout(&o), "-b G(2,2) + G(3) + G(2,1)\n");
    let o = groth(&["expand", "pieri-h", "--i", "1", "--shape", "2"]);
    assert_eq!(stdout(&o), "g(3) + g(2,1) + b g(2)\n");
    let o = groth(&["expand", "sG", "--s", "", "--mu", "2,1", "--rows", "3"]);
    assert_eq!(stdout(&o), "G(2,1)\n");
    let o = groth(&[
        "expand", "sG", "--s", "2", "--mu", "1", "--rows", "2", "--format", "latex",
    ]);
    assert_eq!(stdout(&o), "-\\beta G_{2,2} + G_{3} + G_{2,1}\n");
    let o = groth(&["expand", "pieri-e", "--i", "1", "--shape", ""]);
    assert_eq!(stdout(&o), "g(1)\n");
    let o = groth(&["expand", "sg", "--s", "2", "--mu", "", "--rows", "0", "--cols", "1"]);
    assert_eq!(stdout(&o), "g(2)\n");
}

#[test]
fn verify_examples() {
    let o = groth(&["verify", "--suite", "routes", "--max-weight", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.contains(": PASS")));
    let o = groth(&["verify", "--suite", "knuth", "--seed", "7", "--instances", "50"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = groth(&["verify", "--suite", "duality", "--max-weight", "3"]);
    assert!(stdout(&o).starts_with("7x7 Gram block == identity: PASS"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&groth(&["verify", "--suite", "nope"])), 2);
    assert_eq!(code(&groth(&["compute", "G", "--shape", "1,2"])), 2);
    assert_eq!(code(&groth(&["compute", "X"])), 2);
    assert_eq!(code(&groth(&["expand", "pieri-e", "--shape", "1"])), 2);
    let o = groth(&["expand", "sG", "--s", "1,1,1", "--mu", "1", "--rows", "2"]);
    assert_eq!(code(&o), 3);
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(
        code(&groth(&["compute", "g", "--shape", "1", "--method", "bialternant"])),
        3
    );
    assert_eq!(
        code(&groth(&[
            "compute", "G", "--shape", "2", "--vars", "2", "--basis", "complete", "--format", "json"
        ])),
        3
    );
}

#[test]
fn default_caps_from_environment() {
    let o = groth_env(&["compute", "G", "--shape", "1", "--format", "json"], Some("2,2"));
    let parsed: ElementJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((parsed.caps.n_vars, parsed.caps.max_degree), (2, 2));
    let o = groth_env(
        &["compute", "G", "--shape", "1", "--vars", "3", "--format", "json"],
        Some("2,2"),
    );
    let parsed: ElementJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((parsed.caps.n_vars, parsed.caps.max_degree), (3, 2));
    assert_eq!(code(&groth_env(&["compute", "G", "--shape", "1"], Some("two"))), 2);
}
