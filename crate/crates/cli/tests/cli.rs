use std::process::{Command, Output};

fn serre(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_serre")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const DIAMOND_F2: [&str; 9] = ["diamond", "--p", "7", "--f", "2", "--r", "2,1", "--case", "irreducible"];

#[test]
fn diamond_lists_four_weights() {
    let o = serre(&DIAMOND_F2);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("σ=")).count(), 4);
    assert!(text.contains("σ=(1,4)⊗det^14 δ(σ)=(4,3)⊗det^16"));

    let o = serre(&["diamond", "--p", "5", "--f", "1", "--r", "2", "--case", "irreducible"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("σ=")).count(), 2);
}

#[test]
fn diamond_json() {
    let mut args = DIAMOND_F2.to_vec();
    args.extend(["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&serre(&args).stdout).unwrap();
    assert_eq!(v["command"], "diamond");
    let ws = v["results"][0]["weights"].as_array().unwrap();
    assert_eq!(ws.len(), 4);
    for w in ws {
        for key in ["weight", "s", "ell", "lambda", "delta"] {
            assert!(w.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn verify_json_records() {
    let o = serre(&["verify", "--suite", "witt", "--p", "5", "--f", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failed"], 0);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len() as u64, v["passed"].as_u64().unwrap());
    for r in recs {
        for key in ["paper_anchor", "instance", "expected", "got", "status"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["status"], "pass");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(serre(&["verify", "--suite", "witt", "--p", "5", "--f", "1"]).status.code(), Some(0));
    let bad = serre(&["verify", "--suite", "s1s2", "--p", "7", "--f", "2", "--r", "1,0", "--case", "irreducible"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("12/13 checks passed"));
    assert_eq!(serre(&["diamond", "--p", "4", "--f", "2", "--r", "1,1", "--case", "irreducible"]).status.code(), Some(2));
    assert_eq!(serre(&["verify", "--p", "5", "--f", "1"]).status.code(), Some(2));
    assert_eq!(serre(&["diamond", "--case", "irr"]).status.code(), Some(2));
    assert_eq!(serre(&["diamond", "--p", "7", "--f", "2", "--r", "0,0", "--case", "reducible"]).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    let args = ["verify", "--suite", "calculH", "--p", "5", "--f", "2", "--seed", "3", "--format", "json"];
    let a = serre(&args);
    let b = serre(&args);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
    let mut one_job = args.to_vec();
    one_job.extend(["--jobs", "1"]);
    assert_eq!(serre(&one_job).stdout, a.stdout);
}

#[test]
fn filtration_example() {
    let o = serre(&["filtration", "example1", "--p", "5", "--f", "2", "--r", "2,1", "--j", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1,2)⊗det^10"));
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("serre-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.txt");
    let mut args = DIAMOND_F2.to_vec();
    let p = path.to_str().unwrap().to_string();
    args.extend(["--out", &p]);
    assert_eq!(serre(&args).status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.trim(), stdout(&serre(&DIAMOND_F2)).trim());
    std::fs::remove_dir_all(&dir).unwrap();
}
