//! Predicted tables against the oracle, one instance or a whole sweep.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::betti::{euler_hilbert, resolve_fat_aci, BettiTable};
use crate::error::Result;
use crate::kernel::field::FieldConfig;
use crate::kernel::ideal::{IdealSlices, ProductIdeal, SymbolicIdeal};
use crate::kernel::lines::realize;
use crate::kernel::resolution::syzygy_betti;
use crate::scheme::{build_grid, normalize, AciParams, BiDegree};

/// `(module, bidegree, predicted, computed)`.
pub type Mismatch = (usize, BiDegree, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub params: AciParams,
    pub bound: BiDegree,
    pub predicted: BettiTable,
    pub computed: BettiTable,
    pub mismatches: Vec<Mismatch>,
    /// Bidegrees where the predicted table's Euler sum misses `dim I_d`.
    pub euler_failures: Vec<BiDegree>,
    pub millis: u128,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.euler_failures.is_empty()
    }
}

/// Smallest box holding every Betti number of the scheme and the predicted
/// shifts with a `(2, 2)` margin.
pub fn verification_box(ideal: &SymbolicIdeal, predicted: &BettiTable) -> BiDegree {
    let c = ideal.regularity_corner();
    let p = predicted.max_corner().shift(2, 2);
    BiDegree::new(c.a.max(p.a), c.b.max(p.b))
}

/// Recompute the Betti table of `params` and compare with the prediction.
pub fn verify_instance(params: &AciParams, cfg: &FieldConfig) -> Result<InstanceReport> {
    verify_against(params, resolve_fat_aci(params), cfg, None)
}

/// Compare an arbitrary claimed table with the oracle, over `bound` or the
/// default verification box.
pub fn verify_against(
    params: &AciParams,
    predicted: BettiTable,
    cfg: &FieldConfig,
    bound: Option<BiDegree>,
) -> Result<InstanceReport> {
    let start = Instant::now();
    let (arr, _) = realize(params, cfg)?;
    let ideal = SymbolicIdeal::new(build_grid(params)?, arr);
    let bound = bound.unwrap_or_else(|| verification_box(&ideal, &predicted));
    let computed = syzygy_betti(&ideal, bound)?;
    let mut euler_failures = Vec::new();
    for a in 0..=bound.a {
        for b in 0..=bound.b {
            let d = BiDegree::new(a, b);
            if euler_hilbert(&predicted, d) != ideal.dim(d) as i64 {
                euler_failures.push(d);
            }
        }
    }
    Ok(InstanceReport {
        params: *params,
        bound,
        mismatches: predicted.diff(&computed),
        predicted,
        computed,
        euler_failures,
        millis: start.elapsed().as_millis(),
    })
}

/// Bidegrees in the box where the realized family spans less than `I_d`.
///
/// The family is built to lie in `I_Z`, so an empty result means it generates.
pub fn family_rank_gaps(
    params: &AciParams,
    cfg: &FieldConfig,
) -> Result<Vec<(BiDegree, usize, usize)>> {
    let (arr, fam) = realize(params, cfg)?;
    let ideal = SymbolicIdeal::new(build_grid(params)?, arr);
    let span = ProductIdeal::power(&fam, 1);
    let c = ideal.regularity_corner();
    let mut gaps = Vec::new();
    for a in 0..=c.a + 1 {
        for b in 0..=c.b + 1 {
            let d = BiDegree::new(a, b);
            let h = ideal.dim(d);
            let r = span.rank_capped(d, h + 1);
            if r != h {
                gaps.push((d, r, h));
            }
        }
    }
    Ok(gaps)
}

/// Normalized parameter sets with block widths in `1..=max_alpha` and
/// multiplicities in `0..=max_m`, sorted and without repeats.
pub fn sweep_params(max_alpha: u32, max_m: u32) -> Vec<AciParams> {
    let mut out = Vec::new();
    let widths = 1..=max_alpha;
    for a1 in widths.clone() {
        for a2 in widths.clone() {
            for b1 in widths.clone() {
                for b2 in widths.clone() {
                    for m11 in 0..=max_m {
                        for m12 in 0..=max_m {
                            for m21 in 0..=max_m {
                                let p = AciParams {
                                    alpha1: a1,
                                    alpha2: a2,
                                    beta1: b1,
                                    beta2: b2,
                                    m11,
                                    m12,
                                    m21,
                                };
                                out.push(normalize(&p).0);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
