use std::fs;
use std::path::Path;

use irrepcount::cli::run;

fn irrep(args: &[&str]) -> i32 {
    run(std::iter::once("irrepcount").chain(args.iter().copied()))
}

fn out_arg(p: &Path) -> String {
    p.to_str().unwrap().to_string()
}

#[test]
fn dim_exit_codes() {
    assert_eq!(irrep(&["dim", "--family", "sp", "--rank", "2", "--weight", "1,0"]), 0);
    assert_eq!(irrep(&["dim", "--family", "e8", "--weight", "0,0,0,0,0,0,0,1"]), 0);
    assert_eq!(irrep(&["dim", "--family", "sl", "--weight", "2"]), 1);
    assert_eq!(irrep(&["dim", "--family", "so-even", "--rank", "3", "--weight", "0,1,2"]), 1);
    assert_eq!(irrep(&["dim", "--family", "nope", "--rank", "3", "--weight", "1"]), 1);
    assert_eq!(irrep(&["frobnicate"]), 1);
    assert_eq!(irrep(&["--help"]), 0);
}

#[test]
fn census_then_table_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let recs = dir.path().join("recs.csv");
    let direct = dir.path().join("direct.csv");
    let rebuilt = dir.path().join("rebuilt.csv");
    assert_eq!(irrep(&["census", "--max-dim", "300", "--out", &out_arg(&recs)]), 0);
    assert_eq!(irrep(&["table", "--max-dim", "300", "--out", &out_arg(&direct)]), 0);
    assert_eq!(irrep(&["table", "--max-dim", "300", "--input", &out_arg(&recs), "--out", &out_arg(&rebuilt)]), 0);
    let text = fs::read_to_string(&recs).unwrap();
    assert!(text.starts_with("family,rank,weight,dim\n"));
    assert!(text.contains("\ng2,2,0;1,7\n") || text.contains("\ng2,2,1;0,7\n"));
    assert_eq!(fs::read(&direct).unwrap(), fs::read(&rebuilt).unwrap());
    let table = fs::read_to_string(&direct).unwrap();
    assert_eq!(table.lines().count(), 301);
}

#[test]
fn outputs_independent_of_workers() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for workers in ["1", "4"] {
        for cmd in ["census", "table"] {
            let p = dir.path().join(format!("{cmd}-{workers}.csv"));
            assert_eq!(irrep(&[cmd, "--max-dim", "2000", "--workers", workers, "--out", &out_arg(&p)]), 0);
            outputs.push(fs::read(&p).unwrap());
        }
        let p = dir.path().join(format!("verify-{workers}.json"));
        let code = irrep(&["verify", "--max-dim", "2000", "--workers", workers, "--out", &out_arg(&p)]);
        assert_eq!(code, 2);
        outputs.push(fs::read(&p).unwrap());
    }
    assert_eq!(outputs[..3], outputs[3..]);
    assert_eq!(irrep(&["table", "--max-dim", "20", "--workers", "0"]), 1);
}

#[test]
fn verify_exit_codes_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let csv = dir.path().join("r.csv");
    assert_eq!(irrep(&["verify", "--claim", "total-78N", "--max-dim", "500", "--out", &out_arg(&json)]), 0);
    let v: serde_json::Value = serde_json::from_slice(&fs::read(&json).unwrap()).unwrap();
    assert_eq!(v[0]["verdict"], "holds");
    assert_eq!(v[0]["claim"], "total-78N");

    let code = irrep(&[
        "verify",
        "--claim",
        "lemma1-quarter,sl-tail-7",
        "--max-dim",
        "50",
        "--format",
        "csv",
        "--out",
        &out_arg(&csv),
    ]);
    assert_eq!(code, 2);
    let text = fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("claim,N,checked_count,violations,margin,verdict"));
    assert!(lines.next().unwrap().starts_with("lemma1-quarter,50,"));
    assert!(lines.next().unwrap().ends_with(",holds"));

    assert_eq!(irrep(&["verify", "--claim", "made-up", "--max-dim", "50"]), 1);
    assert_eq!(irrep(&["verify", "--max-dim", "0"]), 1);
    assert_eq!(
        irrep(&[
            "verify",
            "--claim",
            "sl-tail-7",
            "--max-dim",
            "50",
            "--format",
            "json-like-report",
            "--out",
            &out_arg(&json)
        ]),
        0
    );
}

#[test]
fn unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("x.csv");
    assert_eq!(irrep(&["table", "--max-dim", "10", "--out", &out_arg(&bad)]), 1);
    assert_eq!(irrep(&["census", "--max-dim", "10", "--out", &out_arg(&bad)]), 1);
    assert_eq!(irrep(&["table", "--max-dim", "10", "--input", &out_arg(&bad)]), 1);
}
