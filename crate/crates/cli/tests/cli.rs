use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postgroup-lab"))
        .args(args)
        .env_remove("POSTGROUP_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn validate_magma() {
    let o = run(&["validate-magma", p(&data("trivial3.json"))]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("diagonal left-regular: OK"));
    let o = run(&["validate-magma", p(&data("shift3.json"))]);
    assert_eq!(code(&o), 0);
    let o = run(&["validate-magma", p(&data("additive2.json"))]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("not diagonal"), "{}", stderr(&o));
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let typo = dir.path().join("typo.json");
    std::fs::write(&typo, r#"{"elements": ["a"], "triangel": [["a"]]}"#).unwrap();
    assert_eq!(code(&run(&["validate-magma", p(&typo)])), 2);
    let ragged = dir.path().join("ragged.json");
    std::fs::write(&ragged, r#"{"elements": ["a", "b"], "triangle": [["a", "b"], ["a"]]}"#).unwrap();
    assert_eq!(code(&run(&["validate-magma", p(&ragged)])), 2);
    assert_eq!(code(&run(&["validate-magma", "/nonexistent.json"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let shift = data("shift3.json");
    let o = run(&["act", "--magma", p(&shift), "x0", "y1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("y1"));
}

#[test]
fn free_postgroup_verbs() {
    let shift = data("shift3.json");
    let m = p(&shift);
    let o = run(&["act", "--magma", m, "x0", "x1 x2'"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "x2 x0'");
    let o = run(&["act", "--magma", m, "--inverse", "x0", "x2 x0'"]);
    assert_eq!(stdout(&o).trim(), "x1 x2'");
    assert_eq!(stdout(&run(&["star", "--magma", m, "x0", "x1"])).trim(), "x0 x2");
    assert_eq!(stdout(&run(&["jmap", "--magma", m, "x0 x1"])).trim(), "x0 x2");
    assert_eq!(stdout(&run(&["kmap", "--magma", m, "x0 x2"])).trim(), "x0 x1");
    let inv = stdout(&run(&["star-inv", "--magma", m, "x0 x1"])).trim().to_string();
    assert_eq!(stdout(&run(&["star", "--magma", m, "x0 x1", &inv])).trim(), "e");
}

#[test]
fn postgroup_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = |n: &str| dir.path().join(n);
    for group in ["z3.json", "s3.json"] {
        let g = data(group);
        for verb in ["make-trivial", "make-conjugation"] {
            let pg = d("pg.json");
            assert_eq!(code(&run(&[verb, "--group", p(&g), "--out", p(&pg)])), 0);
            let o = run(&["check-postgroup", p(&pg)]);
            assert_eq!(code(&o), 0, "{}", stdout(&o));
            assert!(stdout(&o).contains("Yang-Baxter (R = P∘σ): OK"));
            assert!(stdout(&o).contains("skew brace identity: OK"));

            // post-group → brace → post-group is the identity on files
            assert_eq!(code(&run(&["to-brace", p(&pg), "--out", p(&d("brace.json"))])), 0);
            assert_eq!(code(&run(&["from-brace", p(&d("brace.json")), "--out", p(&d("back.json"))])), 0);
            assert_eq!(std::fs::read(&pg).unwrap(), std::fs::read(d("back.json")).unwrap());

            // the opposite is an involution
            assert_eq!(code(&run(&["opposite", p(&pg), "--out", p(&d("op.json"))])), 0);
            assert_eq!(code(&run(&["opposite", p(&d("op.json")), "--out", p(&d("opop.json"))])), 0);
            assert_eq!(std::fs::read(&pg).unwrap(), std::fs::read(d("opop.json")).unwrap());
        }
    }
    // stdout output parses back as a post-group
    let o = run(&["make-trivial", "--group", p(&data("z3.json"))]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["triangle"][1][2], "2");
}

#[test]
fn braiding_and_corrupted_braiding() {
    let dir = tempfile::tempdir().unwrap();
    let pg = dir.path().join("s3conj.json");
    let sigma = dir.path().join("sigma.json");
    run(&["make-conjugation", "--group", p(&data("s3.json")), "--out", p(&pg)]);
    let o = run(&["braiding", p(&pg), "--out", p(&sigma)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("σ(")).count(), 36);
    assert_eq!(code(&run(&["ybe", p(&sigma)])), 0);
    assert_eq!(code(&run(&["ybe", p(&pg)])), 0);

    // exchange two images in one row: still a bijection, no longer a braiding
    let mut v: serde_json::Value = serde_json::from_slice(&std::fs::read(&sigma).unwrap()).unwrap();
    let row = v["sigma"][1].as_array_mut().unwrap();
    row.swap(2, 3);
    std::fs::write(&sigma, serde_json::to_vec(&v).unwrap()).unwrap();
    let o = run(&["ybe", p(&sigma)]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("σ bijective: OK"), "{out}");
    assert!(out.contains("braid equation: FAIL ("), "{out}");
    assert!(out.contains("lhs = "), "{out}");
}

#[test]
fn gauge_postgroups_from_actions() {
    let o = run(&["from-action", p(&data("z2-swap-action.json"))]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("is not a bijection"), "{}", stderr(&o));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("gauge.json");
    assert_eq!(code(&run(&["from-action", p(&data("z2-trivial-action.json")), "--out", p(&out)])), 0);
    let o = run(&["check-postgroup", p(&out)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pre-group: σ∘σ = id: OK"));
}

#[test]
fn tensor_verbs() {
    let o = run(&["kmap-tensor", "--generators", "3", "x1.x2.x3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).trim(),
        "(x2>(x1>x3)) + ((x1>x2)>x3) - x1.(x2>x3) - x2.(x1>x3) - (x1>x2).x3 + x1.x2.x3"
    );
    let back = run(&["kmap-tensor", "--generators", "3", "--inverse", stdout(&o).trim()]);
    assert_eq!(stdout(&back).trim(), "x1.x2.x3");
    let o = run(&["kmap-tensor", "--generators", "1", "--degree", "3"]);
    // two trees, (x>x).x, x.(x>x) and x.x.x
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(code(&run(&["kmap-tensor", "--degree", "9"])), 2);
    assert_eq!(code(&run(&["kmap-tensor", "x1.x7"])), 2);
    let o = run(&["check-posthopf", "--degree", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("K(A*B) = K(A).K(B): OK"));
}

#[test]
fn magnus_verb() {
    let o = run(&["magnus", "--order", "5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("t^2: -1/2*(x>x) + 1/2*x.x"), "{out}");
    assert!(out.contains("exp^*(Ω_*(α(tx))) = exp^.(tx): OK"));
    assert_eq!(code(&run(&["magnus", "--generators", "2"])), 2);
    assert_eq!(code(&run(&["magnus", "--order", "12"])), 2);
}

#[test]
fn selftest_reports_every_criterion() {
    let o = run(&["selftest", "--seed", "4"]);
    let out = stdout(&o);
    assert!(out.starts_with("seed 4\n"), "{out}");
    let verdicts: Vec<&str> = out.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(verdicts.len(), 9, "{out}");
    // only the swap-action gauge entry fails
    let failing: Vec<&&str> = verdicts.iter().filter(|l| l.starts_with("[FAIL]")).collect();
    assert_eq!(failing.len(), 1, "{out}");
    assert!(failing[0].starts_with("[FAIL] 3."));
    assert_eq!(code(&o), 1);

    let o = Command::new(env!("CARGO_BIN_EXE_postgroup-lab"))
        .args(["selftest", "--seed", "4"])
        .env("POSTGROUP_LAB_SEED", "11")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("seed 11\n"));
    assert_eq!(code(&run(&["selftest", "--level", "slow"])), 2);
}
