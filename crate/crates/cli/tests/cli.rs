use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn kanforge(dir: &Path, args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kanforge")).current_dir(dir).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let report: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().unwrap(), report, text)
}

fn corpus_dir() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let (code, report, _) = kanforge(dir.path(), &["corpus", "--output", "."]);
    assert_eq!(code, 0, "{report}");
    dir
}

#[test]
fn pi0_of_boundary_has_two_classes() {
    let dir = corpus_dir();
    let (code, r, _) = kanforge(dir.path(), &["pi0", "boundary1.json"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["count"], 2);
    assert_eq!(r["command"][0], "pi0");
    assert_eq!(r["inputs"][0]["path"], "boundary1.json");
}

#[test]
fn lhs_abutment_all_pass() {
    let dir = corpus_dir();
    let (code, r, _) = kanforge(dir.path(), &["lhs", "z4ext.json", "ztriv.json", "--max-total", "4"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["results"]["abutment_check"]["all_pass"], true);
    assert_eq!(r["results"]["e2_check"]["all_pass"], true);
    assert_eq!(r["results"]["pages"]["2"]["1,0"], serde_json::json!([]));
    assert_eq!(r["results"]["pages"]["2"]["0,2"], serde_json::json!([2]));
}

#[test]
fn relations_suite_size_four() {
    let dir = tempfile::tempdir().unwrap();
    let (code, r, _) = kanforge(dir.path(), &["relations-suite", "--size", "4"]);
    assert_eq!(code, 0, "{r}");
    for (_, o) in r["results"]["relations"].as_object().unwrap() {
        assert_eq!(o["pass"], true);
    }
}

#[test]
fn reports_are_byte_identical() {
    let dir = corpus_dir();
    for args in [
        &["kan", "k_z2_2.sgroup.json"][..],
        &["dold-kan", "--random", "4", "--seed", "9"],
        &["group-cohomology", "s3.group.json", "--max-total", "3"],
    ] {
        let (_, _, a) = kanforge(dir.path(), args);
        let (_, _, b) = kanforge(dir.path(), args);
        assert_eq!(a, b);
    }
    let (_, r, _) = kanforge(dir.path(), &["dold-kan", "--random", "2", "--seed", "9"]);
    assert_eq!(r["seed"], 9);
}

#[test]
fn exit_codes() {
    let dir = corpus_dir();
    assert_eq!(kanforge(dir.path(), &["kan", "horn2_1.json"]).0, 1);
    assert_eq!(kanforge(dir.path(), &["kan", "disc_s3.sgroup.json"]).0, 0);
    assert_eq!(kanforge(dir.path(), &["fibration", "w_z2.map.json"]).0, 0);
    std::fs::write(dir.path().join("broken.json"), "{\"trunc_dim\": 1,\n  \"cells\": [1,").unwrap();
    let (code, r, _) = kanforge(dir.path(), &["pi0", "broken.json"]);
    assert_eq!(code, 2);
    assert!(r["error"].as_str().unwrap().contains("broken.json: line 2"), "{r}");
    let (code, r, _) = kanforge(dir.path(), &["classify", "z3.group.json", "--n", "2", "--cell-budget", "10"]);
    assert_eq!(code, 3, "{r}");
    assert_eq!(r["status"], "budget_exceeded");
}

#[test]
fn validate_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    // d₀ s₀ ≠ id on vertex 1
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"trunc_dim": 1, "cells": [2, 2], "faces": [[], [[0, 1], [0, 1]]], "degens": [[[0, 0]]]}"#,
    )
    .unwrap();
    let (code, r, _) = kanforge(dir.path(), &["validate", "bad.json"]);
    assert_eq!(code, 1);
    assert_eq!(r["results"]["valid"], false);
    assert!(!r["results"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn emitted_files_round_trip() {
    let dir = corpus_dir();
    let (code, r, _) =
        kanforge(dir.path(), &["classify", "z3.group.json", "--n", "2", "--trunc-dim", "3", "--output", "k.json"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["results"]["pi_orders"]["2"], 3);
    let (code, r, _) = kanforge(dir.path(), &["pi", "k.json", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r["results"]["count"], 3);
    assert_eq!(r["results"]["moore_agrees"], true);
    let (code, _, _) = kanforge(dir.path(), &["classify", "s3.group.json", "--kind", "wbar", "--output", "w.json"]);
    assert_eq!(code, 0);
    let (code, r, _) = kanforge(dir.path(), &["validate", "w.json"]);
    assert_eq!(code, 0, "{r}");
}

#[test]
fn non_kan_input_to_pi_warns() {
    let dir = corpus_dir();
    let (code, r, _) = kanforge(dir.path(), &["pi", "horn2_1.json", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
}
