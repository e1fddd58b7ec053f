use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scheme::BiDegree;

/// A multiset of bidegrees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSet(BTreeMap<BiDegree, usize>);

impl DegreeSet {
    pub fn new() -> Self {
        DegreeSet(BTreeMap::new())
    }

    pub fn insert(&mut self, d: BiDegree, n: usize) {
        if n > 0 {
            *self.0.entry(d).or_insert(0) += n;
        }
    }

    pub fn add(&mut self, d: (u32, u32)) {
        self.insert(d.into(), 1);
    }

    pub fn get(&self, d: BiDegree) -> usize {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BiDegree, usize)> + '_ {
        self.0.iter().map(|(&d, &n)| (d, n))
    }

    /// Sum of two multisets.
    pub fn extend(&mut self, other: &DegreeSet) {
        for (d, n) in other.iter() {
            self.insert(d, n);
        }
    }

    pub fn shifted(&self, da: u32, db: u32) -> DegreeSet {
        DegreeSet(self.0.iter().map(|(d, &n)| (d.shift(da, db), n)).collect())
    }

    pub fn swapped(&self) -> DegreeSet {
        DegreeSet(self.0.iter().map(|(d, &n)| (d.swap(), n)).collect())
    }

    pub fn scaled(&self, k: usize) -> DegreeSet {
        DegreeSet(self.0.iter().map(|(&d, &n)| (d, n * k)).collect())
    }

    /// Entries sorted by (total degree, a) descending.
    pub fn display_order(&self) -> Vec<(BiDegree, usize)> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort_by_key(|(x, _)| std::cmp::Reverse((x.total(), x.a)));
        v
    }

    pub fn max_corner(&self) -> BiDegree {
        self.0.keys().fold(BiDegree::ZERO, |acc, d| {
            BiDegree::new(acc.a.max(d.a), acc.b.max(d.b))
        })
    }
}

impl FromIterator<(BiDegree, usize)> for DegreeSet {
    fn from_iter<I: IntoIterator<Item = (BiDegree, usize)>>(iter: I) -> Self {
        let mut s = DegreeSet::new();
        for (d, n) in iter {
            s.insert(d, n);
        }
        s
    }
}

impl FromIterator<(u32, u32)> for DegreeSet {
    fn from_iter<I: IntoIterator<Item = (u32, u32)>>(iter: I) -> Self {
        let mut s = DegreeSet::new();
        for d in iter {
            s.add(d);
        }
        s
    }
}

/// Shifts of `0 -> F2 -> F1 -> F0 -> I -> 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BettiTable {
    pub beta0: DegreeSet,
    pub beta1: DegreeSet,
    pub beta2: DegreeSet,
}

impl BettiTable {
    /// Resolution of the unit ideal: `F0 = R`.
    pub fn unit() -> Self {
        let mut t = BettiTable::default();
        t.beta0.add((0, 0));
        t
    }

    pub fn module(&self, k: usize) -> &DegreeSet {
        match k {
            0 => &self.beta0,
            1 => &self.beta1,
            2 => &self.beta2,
            _ => panic!("resolutions here have length at most 2"),
        }
    }

    pub fn module_mut(&mut self, k: usize) -> &mut DegreeSet {
        match k {
            0 => &mut self.beta0,
            1 => &mut self.beta1,
            2 => &mut self.beta2,
            _ => panic!("resolutions here have length at most 2"),
        }
    }

    /// `sum beta0 - sum beta1 + sum beta2`; 1 for any ideal of points.
    pub fn rank(&self) -> i64 {
        self.beta0.total() as i64 - self.beta1.total() as i64 + self.beta2.total() as i64
    }

    pub fn shifted(&self, da: u32, db: u32) -> BettiTable {
        BettiTable {
            beta0: self.beta0.shifted(da, db),
            beta1: self.beta1.shifted(da, db),
            beta2: self.beta2.shifted(da, db),
        }
    }

    pub fn transposed(&self) -> BettiTable {
        BettiTable {
            beta0: self.beta0.swapped(),
            beta1: self.beta1.swapped(),
            beta2: self.beta2.swapped(),
        }
    }

    pub fn max_corner(&self) -> BiDegree {
        [&self.beta0, &self.beta1, &self.beta2]
            .iter()
            .map(|s| s.max_corner())
            .fold(BiDegree::ZERO, |acc, d| {
                BiDegree::new(acc.a.max(d.a), acc.b.max(d.b))
            })
    }

    /// Entries present in one table but not the other, as
    /// `(module, degree, ours, theirs)`.
    pub fn diff(&self, other: &BettiTable) -> Vec<(usize, BiDegree, usize, usize)> {
        let mut out = Vec::new();
        for k in 0..3 {
            let (x, y) = (self.module(k), other.module(k));
            let mut keys: Vec<BiDegree> = x.iter().chain(y.iter()).map(|(d, _)| d).collect();
            keys.sort();
            keys.dedup();
            for d in keys {
                if x.get(d) != y.get(d) {
                    out.push((k, d, x.get(d), y.get(d)));
                }
            }
        }
        out
    }
}

fn dim_r(s: i64, t: i64) -> i64 {
    if s < 0 || t < 0 {
        0
    } else {
        (s + 1) * (t + 1)
    }
}

/// `dim I_d` as read off the resolution: alternating sum of `dim R(-a,-b)_d`.
pub fn euler_hilbert(table: &BettiTable, d: BiDegree) -> i64 {
    let mut sum = 0;
    for k in 0..3 {
        let sign = if k == 1 { -1 } else { 1 };
        for (e, n) in table.module(k).iter() {
            sum += sign * n as i64 * dim_r(d.a as i64 - e.a as i64, d.b as i64 - e.b as i64);
        }
    }
    sum
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..3 {
            write!(f, "F{k}:")?;
            let entries = self.module(k).display_order();
            if entries.is_empty() {
                write!(f, " 0")?;
            }
            for (i, (d, n)) in entries.iter().enumerate() {
                let sep = if i == 0 { " " } else { " + " };
                write!(f, "{sep}R({},{})", neg(d.a), neg(d.b))?;
                if *n > 1 {
                    write!(f, "^{n}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn neg(x: u32) -> String {
    if x == 0 {
        "0".to_string()
    } else {
        format!("-{x}")
    }
}
