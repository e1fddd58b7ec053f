#![allow(dead_code)]

use fataci_core::betti::{BettiTable, DegreeSet};
use fataci_core::{AciParams, BiDegree};

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

pub fn params(a1: u32, a2: u32, b1: u32, b2: u32, m: [u32; 3]) -> AciParams {
    AciParams::new([a1, a2], [b1, b2], m).unwrap()
}

/// The three-point scheme `2P11 + 4P12 + 3P21`.
pub fn worked_w() -> BettiTable {
    table(
        "(7,0) (6,1)^2 (5,2)^3 (4,3)^3 (3,4)^3 (2,5)^2 (1,6)^2 (0,7)",
        "(7,1)^2 (6,2)^4 (5,3)^5 (4,4)^5 (3,5)^4 (2,6)^3 (1,7)^2",
        "(7,2) (6,3)^2 (5,4)^2 (4,5)^2 (3,6) (2,7)",
    )
}

/// The block scheme `(2,1,2,2; 2,4,3)`.
pub fn worked_z() -> BettiTable {
    table(
        "(10,2) (9,4) (8,6) (8,4) (7,6) (6,8) (6,6) (5,8) (4,10) (4,8) (3,10) (2,12) (1,12) (0,14) \
         (7,4) (9,2) (11,0)",
        "(10,4)^2 (9,6)^2 (8,8) (8,6)^2 (7,8)^2 (6,10) (6,8)^2 (5,10)^2 (4,10) (4,12) (3,12)^2 \
         (2,14) (1,14) (7,6) (9,4) (11,2) (9,4) (11,2)",
        "(10,6) (9,8) (8,8) (7,10) (6,10) (5,12) (3,14) (9,6) (11,4)",
    )
}
