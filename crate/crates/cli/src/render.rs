//! Output formats.

use std::io::{self, Write};

use fataci_core::kernel::PowerReport;
use fataci_core::verify::InstanceReport;
use fataci_core::{AciParams, BettiTable, BiDegree, DegreeSet, NormalizationRecord};
use serde::{Deserialize, Serialize};

/// `[a, b, n]` triples in display order.
fn triples(s: &DegreeSet) -> Vec<[u64; 3]> {
    s.display_order()
        .into_iter()
        .map(|(d, n)| [d.a as u64, d.b as u64, n as u64])
        .collect()
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableJson {
    pub beta0: Vec<[u64; 3]>,
    pub beta1: Vec<[u64; 3]>,
    pub beta2: Vec<[u64; 3]>,
    pub normalization: NormalizationRecord,
}

impl TableJson {
    pub fn new(t: &BettiTable, normalization: NormalizationRecord) -> Self {
        TableJson {
            beta0: triples(&t.beta0),
            beta1: triples(&t.beta1),
            beta2: triples(&t.beta2),
            normalization,
        }
    }
}

pub fn table_csv(out: impl Write, t: &BettiTable) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["module", "a", "b", "count"])?;
    for k in 0..3 {
        for (d, n) in t.module(k).display_order() {
            w.write_record([
                k.to_string(),
                d.a.to_string(),
                d.b.to_string(),
                n.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
pub struct MismatchJson {
    module: usize,
    a: u32,
    b: u32,
    predicted: usize,
    computed: usize,
}

#[derive(Serialize)]
pub struct InstanceJson {
    params: AciParams,
    bound: BiDegree,
    passed: bool,
    mismatches: Vec<MismatchJson>,
    euler_failures: Vec<BiDegree>,
}

pub fn instance_json(r: &InstanceReport) -> InstanceJson {
    InstanceJson {
        params: r.params,
        bound: r.bound,
        passed: r.passed(),
        mismatches: r
            .mismatches
            .iter()
            .map(|&(module, d, predicted, computed)| MismatchJson {
                module,
                a: d.a,
                b: d.b,
                predicted,
                computed,
            })
            .collect(),
        euler_failures: r.euler_failures.clone(),
    }
}

pub fn instance_text(out: &mut impl Write, r: &InstanceReport) -> io::Result<()> {
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(out, "{verdict} {} box {}", r.params, r.bound)?;
    for (k, d, ours, theirs) in &r.mismatches {
        writeln!(out, "  F{k} at {d}: predicted {ours}, computed {theirs}")?;
    }
    for d in &r.euler_failures {
        writeln!(out, "  Euler sum of the prediction misses dim I at {d}")?;
    }
    if !r.passed() {
        writeln!(out, "computed:")?;
        write!(out, "{}", r.computed)?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub alpha1: u32,
    pub alpha2: u32,
    pub beta1: u32,
    pub beta2: u32,
    pub m11: u32,
    pub m12: u32,
    pub m21: u32,
    pub status: &'static str,
    pub millis: u128,
}

impl SweepRow {
    pub fn new(p: &AciParams, status: &'static str, millis: u128) -> Self {
        SweepRow {
            alpha1: p.alpha1,
            alpha2: p.alpha2,
            beta1: p.beta1,
            beta2: p.beta2,
            m11: p.m11,
            m12: p.m12,
            m21: p.m21,
            status,
            millis,
        }
    }

    pub fn label(&self) -> String {
        format!(
            "({},{},{},{}; {},{},{})",
            self.alpha1, self.alpha2, self.beta1, self.beta2, self.m11, self.m12, self.m21
        )
    }
}

pub fn sweep_csv(out: impl Write, rows: &[SweepRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn powers_text(out: &mut impl Write, r: &PowerReport) -> io::Result<()> {
    writeln!(out, "bidegree  I^m  I^(m)  generators")?;
    for row in &r.rows {
        let mark = if row.power_dim == row.symbolic_dim {
            ""
        } else {
            "  <- differs"
        };
        writeln!(
            out,
            "{:<9} {:>4} {:>6} {:>11}{mark}",
            row.bidegree.to_string(),
            row.power_dim,
            row.symbolic_dim,
            row.generators
        )?;
    }
    if !r.family_contained {
        writeln!(out, "the realized generators do not lie in the ideal")?;
    }
    let verdict = if r.equal { "equal" } else { "not equal" };
    writeln!(out, "I^{0} and I^({0}) are {verdict}", r.m)?;
    Ok(())
}

pub fn powers_csv(out: impl Write, reports: &[PowerReport]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "params",
        "m",
        "a",
        "b",
        "power_dim",
        "symbolic_dim",
        "generators",
    ])?;
    for r in reports {
        let label = r.params.map(|p| p.to_string()).unwrap_or_default();
        for row in &r.rows {
            w.write_record([
                label.clone(),
                r.m.to_string(),
                row.bidegree.a.to_string(),
                row.bidegree.b.to_string(),
                row.power_dim.to_string(),
                row.symbolic_dim.to_string(),
                row.generators.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
