#![allow(dead_code)]

use std::process::{Command, Output};

use fataci_core::{BettiTable, BiDegree, DegreeSet};
use serde_json::Value;

pub fn fataci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fataci"))
        .args(args)
        .env_remove("FATACI_PRIME")
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

/// Parse "(7,0) (6,1)^2 ..." into a multiset.
pub fn degs(s: &str) -> DegreeSet {
    s.split_whitespace()
        .map(|tok| {
            let (pair, n) = match tok.split_once('^') {
                Some((p, n)) => (p, n.parse().unwrap()),
                None => (tok, 1),
            };
            let (a, b) = pair
                .trim_matches(|c| c == '(' || c == ')')
                .split_once(',')
                .unwrap();
            (BiDegree::new(a.parse().unwrap(), b.parse().unwrap()), n)
        })
        .collect()
}

pub fn table(b0: &str, b1: &str, b2: &str) -> BettiTable {
    BettiTable {
        beta0: degs(b0),
        beta1: degs(b1),
        beta2: degs(b2),
    }
}

/// The table from `predict --format json` output.
pub fn parse_json_table(json: &str) -> BettiTable {
    let v: Value = serde_json::from_str(json).expect("valid json");
    let module = |k: &str| -> DegreeSet {
        v[k].as_array()
            .expect("array of triples")
            .iter()
            .map(|t| {
                let t: Vec<u64> = t
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_u64().unwrap())
                    .collect();
                (BiDegree::new(t[0] as u32, t[1] as u32), t[2] as usize)
            })
            .collect()
    };
    BettiTable {
        beta0: module("beta0"),
        beta1: module("beta1"),
        beta2: module("beta2"),
    }
}

pub fn predict_json(alpha: [u32; 2], beta: [u32; 2], m: [u32; 3]) -> BettiTable {
    let s = |x: u32| x.to_string();
    let args = [
        "predict".to_string(),
        "--alpha".into(),
        s(alpha[0]),
        s(alpha[1]),
        "--beta".into(),
        s(beta[0]),
        s(beta[1]),
        "--m".into(),
        s(m[0]),
        s(m[1]),
        s(m[2]),
        "--format".into(),
        "json".into(),
    ];
    let refs: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = fataci(&refs);
    assert!(
        out.status.success(),
        "predict failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    parse_json_table(&stdout(&out))
}

pub fn w2() -> BettiTable {
    table(
        "(5,0) (4,1)^2 (3,2)^2 (2,3)^2 (1,4)^2 (0,5)",
        "(5,1)^2 (4,2)^3 (3,3)^3 (2,4)^3 (1,5)^2",
        "(5,2) (4,3) (3,4) (2,5)",
    )
}

pub fn w1() -> BettiTable {
    table(
        "(6,0) (5,1)^2 (4,2)^3 (3,3)^3 (2,4)^2 (1,5)^2 (0,6)",
        "(6,1)^2 (5,2)^4 (4,3)^5 (3,4)^4 (2,5)^3 (1,6)^2",
        "(6,2) (5,3)^2 (4,4)^2 (3,5) (2,6)",
    )
}

pub fn w() -> BettiTable {
    table(
        "(7,0) (6,1)^2 (5,2)^3 (4,3)^3 (3,4)^3 (2,5)^2 (1,6)^2 (0,7)",
        "(7,1)^2 (6,2)^4 (5,3)^5 (4,4)^5 (3,5)^4 (2,6)^3 (1,7)^2",
        "(7,2) (6,3)^2 (5,4)^2 (4,5)^2 (3,6) (2,7)",
    )
}

pub fn z() -> BettiTable {
    table(
        "(10,2) (9,4) (8,6) (8,4) (7,6) (6,8) (6,6) (5,8) (4,10) (4,8) (3,10) (2,12) (1,12) (0,14) \
         (7,4) (9,2) (11,0)",
        "(10,4)^2 (9,6)^2 (8,8) (8,6)^2 (7,8)^2 (6,10) (6,8)^2 (5,10)^2 (4,10) (4,12) (3,12)^2 \
         (2,14) (1,14) (7,6) (9,4) (11,2) (9,4) (11,2)",
        "(10,6) (9,8) (8,8) (7,10) (6,10) (5,12) (3,14) (9,6) (11,4)",
    )
}
