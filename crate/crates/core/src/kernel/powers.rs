//! Ordinary versus symbolic powers, and the splitting of `I_W`.
//!
//! For the block family every generator is `Q1^a1 Q2^a2 U1^b1 U2^b2`, whose
//! multiples in bidegree `(a, b)` form `X ⊗ Y` with `X ⊂ k[x0,x1]_a` the forms
//! divisible by `Q1^a1 Q2^a2`. These `X` are intersections of one level from
//! each of two flags (divisibility by powers of `Q1`, of `Q2`). Two flags
//! share an adapted basis, so every `X ⊗ Y` is spanned by a subset of one
//! product basis and the dimension of their sum is a count.

use serde::{Deserialize, Serialize};

use crate::betti::DegreeSet;
use crate::error::{Error, Result};
use crate::scheme::{build_grid, AciParams, BiDegree, FatPointGrid};

use super::field::FieldConfig;
use super::hilbert::{satisfies_conditions, symbolic_basis};
use super::ideal::{GeneralIdeal, IdealSlices, ProductIdeal, SymbolicIdeal};
use super::lines::{exponent_degree, power_tuples, realize, satisfies, LineArrangement};
use super::matrix::Echelon;
use super::poly::{from_roots, poly_pow, BiPoly};
use super::resolution::{min_generators, HilbertGrid};

/// Euclidean split of an `m`-fold exponent tuple into a `1`-fold part and
/// an `(m-1)`-fold part.
pub fn split_factor(exps: [u32; 4], m: u32, mults: [u32; 3]) -> Result<([u32; 4], [u32; 4])> {
    if m == 0 {
        return Err(Error::Precondition("power must be positive".into()));
    }
    if !satisfies(exps, mults, m) {
        return Err(Error::Precondition(format!(
            "{exps:?} does not satisfy the {m}-fold constraints for {mults:?}"
        )));
    }
    let [a1, a2, b1, b2] = exps;
    let up = |b: u32| b / m + u32::from(!b.is_multiple_of(m));
    let f1 = [a1 / m, a2 / m, up(b1), up(b2)];
    let f2 = [a1 - f1[0], a2 - f1[1], b1 - f1[2], b2 - f1[3]];
    Ok((f1, f2))
}

/// Adapted-basis labels of `k[x]_deg` for divisibility by powers of two
/// coprime forms of degrees `n1, n2`: `((i, j), count)` where `i, j` are
/// the exact levels in the two flags.
fn divisibility_labels(n1: u32, n2: u32, deg: u32) -> Vec<((u32, u32), usize)> {
    let dim = |i: u32, j: u32| (deg as i64 + 1 - (i * n1) as i64 - (j * n2) as i64).max(0);
    let mut out = Vec::new();
    for i in 0..=deg / n1 {
        for j in 0..=deg / n2 {
            let c = dim(i, j) - dim(i + 1, j) - dim(i, j + 1) + dim(i + 1, j + 1);
            if c > 0 {
                out.push(((i, j), c as usize));
            }
        }
    }
    out
}

/// `dim` of the span of the given block products in bidegree `d`.
pub fn block_span_dim(params: &AciParams, exps: &[[u32; 4]], d: BiDegree) -> usize {
    let xl = divisibility_labels(params.alpha1, params.alpha2, d.a);
    let yl = divisibility_labels(params.beta1, params.beta2, d.b);
    let mut n = 0;
    for &((i, j), cx) in &xl {
        let live: Vec<&[u32; 4]> = exps.iter().filter(|e| e[0] <= i && e[1] <= j).collect();
        if live.is_empty() {
            continue;
        }
        for &((k, l), cy) in &yl {
            if live.iter().any(|e| e[2] <= k && e[3] <= l) {
                n += cx * cy;
            }
        }
    }
    n
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRow {
    pub bidegree: BiDegree,
    pub power_dim: usize,
    pub symbolic_dim: usize,
    /// Minimal generators of the ordinary power in this bidegree.
    pub generators: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerReport {
    pub params: Option<AciParams>,
    pub m: u32,
    /// Every bidegree where the symbolic power can have a generator.
    pub rows: Vec<PowerRow>,
    /// The realized generators of `I` vanish to the required orders.
    pub family_contained: bool,
    pub equal: bool,
}

impl PowerReport {
    pub fn generator_degrees(&self) -> DegreeSet {
        let mut s = DegreeSet::new();
        for r in &self.rows {
            s.insert(r.bidegree, r.generators);
        }
        s
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &PowerRow> {
        self.rows.iter().filter(|r| r.power_dim != r.symbolic_dim)
    }
}

/// Bidegrees in `[0, corner]` where `Δ²_a h` and `Δ²_b h` are both positive.
fn candidates(h: &HilbertGrid, corner: BiDegree) -> Vec<BiDegree> {
    let mut out = Vec::new();
    for a in 0..=corner.a {
        for b in 0..=corner.b {
            if h.g_a(a as i64, b as i64) > 0 && h.g_b(a as i64, b as i64) > 0 {
                out.push(BiDegree::new(a, b));
            }
        }
    }
    out
}

/// How `dim (I^m)_d` is obtained for the block family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum PowerCount {
    /// Adapted-basis label count; exact and cheap.
    #[default]
    Labels,
    /// Row reduction of all monomial multiples of the realized products.
    Dense,
}

/// Compare `I_Z^m` with `I_Z^(m)` at every possible generator degree of the
/// symbolic power.
///
/// `I^m ⊆ I^(m)` once the family lies in `I_Z`, so equal dimensions at all
/// those degrees certify equality of the ideals.
pub fn check_power_equality(params: &AciParams, m: u32, cfg: &FieldConfig) -> Result<PowerReport> {
    check_power_equality_with(params, m, cfg, PowerCount::Labels)
}

pub fn check_power_equality_with(
    params: &AciParams,
    m: u32,
    cfg: &FieldConfig,
    count: PowerCount,
) -> Result<PowerReport> {
    if m == 0 {
        return Err(Error::Precondition("power must be positive".into()));
    }
    let (arr, fam) = realize(params, cfg)?;
    let grid = build_grid(params)?;
    let family_contained = fam
        .members
        .iter()
        .all(|g| satisfies_conditions(&grid, g.poly.bidegree, &g.poly.coeffs, &arr));
    let symbolic = SymbolicIdeal::new(grid.scaled(m), arr);
    let corner = symbolic.regularity_corner();
    let h = HilbertGrid::new(&symbolic, corner);
    let exps = power_tuples(&fam.exponents(), m);
    let dim = |gens: &[[u32; 4]], d: BiDegree| match count {
        PowerCount::Labels => block_span_dim(params, gens, d),
        PowerCount::Dense => ProductIdeal::from_exponents(&fam.forms, gens).dim(d),
    };
    let mut rows = Vec::new();
    for d in candidates(&h, corner) {
        let power_dim = dim(&exps, d);
        let lower: Vec<[u32; 4]> = exps
            .iter()
            .copied()
            .filter(|&e| exponent_degree(e, params) != d)
            .collect();
        rows.push(PowerRow {
            bidegree: d,
            power_dim,
            symbolic_dim: h.get(d.a as i64, d.b as i64) as usize,
            generators: power_dim - dim(&lower, d),
        });
    }
    let equal = family_contained && rows.iter().all(|r| r.power_dim == r.symbolic_dim);
    Ok(PowerReport {
        params: Some(*params),
        m,
        rows,
        family_contained,
        equal,
    })
}

/// The same comparison for an arbitrary grid, with `I_Z` generated by its
/// computed minimal generators. Reports dimensions; equality is not expected
/// in general.
pub fn check_power_equality_grid(
    grid: &FatPointGrid,
    m: u32,
    cfg: &FieldConfig,
) -> Result<PowerReport> {
    if m == 0 {
        return Err(Error::Precondition("power must be positive".into()));
    }
    let arr = LineArrangement::new(cfg, grid.rows(), grid.cols())?;
    let base = SymbolicIdeal::new(grid.clone(), arr.clone());
    let gens: Vec<BiPoly> = super::resolution::minimal_generators(&base, base.regularity_corner())
        .into_iter()
        .flat_map(|(_, g)| g)
        .collect();
    let power = GeneralIdeal::new(arr.field, gens).power(m);
    let symbolic = SymbolicIdeal::new(grid.scaled(m), arr);
    let corner = symbolic.regularity_corner();
    let h = HilbertGrid::new(&symbolic, corner);
    let sym_gens = min_generators(&symbolic, corner);
    let rows: Vec<PowerRow> = candidates(&h, corner)
        .into_iter()
        .map(|d| PowerRow {
            bidegree: d,
            power_dim: power.span(d, usize::MAX).rank(),
            symbolic_dim: h.get(d.a as i64, d.b as i64) as usize,
            generators: sym_gens.get(d),
        })
        .collect();
    let equal = rows.iter().all(|r| r.power_dim == r.symbolic_dim);
    Ok(PowerReport {
        params: grid.block_params(),
        m,
        rows,
        family_contained: true,
        equal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingRow {
    pub bidegree: BiDegree,
    pub ideal: usize,
    /// `V1 * I_{W1}`.
    pub left: usize,
    /// `H1^m11 H2^m21 (H1, V2)^k`.
    pub right: usize,
    pub sum: usize,
    pub intersection: usize,
    /// `V1 H1^m11 H2^m21 (H1, V2)^k`.
    pub kernel: usize,
    pub contained: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingReport {
    pub mults: [u32; 3],
    pub rows: Vec<SplittingRow>,
    pub holds: bool,
}

/// Check `I_W = V1 I_{W1} + H1^m11 H2^m21 (H1, V2)^k` with intersection
/// `V1 H1^m11 H2^m21 (H1, V2)^k`, `k = (m12 - m11)_+`, slice by slice.
pub fn check_splitting_identity(
    m11: u32,
    m12: u32,
    m21: u32,
    cfg: &FieldConfig,
) -> Result<SplittingReport> {
    let params = AciParams::three_points(m11, m12, m21);
    let grid = build_grid(&params)?;
    let grid1 = build_grid(&params.with_mults(m11.saturating_sub(1), m12, m21.saturating_sub(1)))?;
    let arr = LineArrangement::new(cfg, 2, 2)?;
    let f = arr.field;
    let lin = |r: u32| from_roots(&[r], f);
    let (h1, h2, v1, v2) = (lin(arr.h[0]), lin(arr.h[1]), lin(arr.v[0]), lin(arr.v[1]));
    let v1p = BiPoly::tensor(&[1], &v1, f);
    let k = m12.saturating_sub(m11);
    let head = BiPoly::tensor(&poly_pow(&h1, m11, f), &[1], f)
        .mul(&BiPoly::tensor(&poly_pow(&h2, m21, f), &[1], f), f);
    let right_gens: Vec<BiPoly> = (0..=k)
        .map(|i| {
            let x = poly_pow(&h1, i, f);
            let y = poly_pow(&v2, k - i, f);
            head.mul(&BiPoly::tensor(&x, &y, f), f)
        })
        .collect();
    let kernel_gens: Vec<BiPoly> = right_gens.iter().map(|g| v1p.mul(g, f)).collect();
    let right = GeneralIdeal::new(f, right_gens);
    let kernel = GeneralIdeal::new(f, kernel_gens);

    let w = SymbolicIdeal::new(grid, arr.clone());
    let corner = w.regularity_corner();
    let mut rows = Vec::new();
    for a in 0..=corner.a + 1 {
        for b in 0..=corner.b + 1 {
            let d = BiDegree::new(a, b);
            let iw = w.piece(d).basis;
            let mut iw_span = Echelon::new(f, d.dim());
            for r in iw.iter_rows() {
                iw_span.insert(r.to_vec());
            }
            let mut left = Echelon::new(f, d.dim());
            if let Some(e) = d.checked_sub(0, 1) {
                for r in symbolic_basis(&grid1, e, &arr).iter_rows() {
                    let g = BiPoly {
                        bidegree: e,
                        coeffs: r.to_vec(),
                    };
                    left.insert(g.mul(&v1p, f).coeffs);
                }
            }
            let right_span = right.span(d, usize::MAX);
            let kernel_span = kernel.span(d, usize::MAX);
            let mut sum = left.clone();
            for r in right_span.rows() {
                sum.insert(r.clone());
            }
            let contained = sum.rows().iter().all(|r| iw_span.contains(r))
                && kernel_span
                    .rows()
                    .iter()
                    .all(|r| left.contains(r) && right_span.contains(r));
            rows.push(SplittingRow {
                bidegree: d,
                ideal: iw_span.rank(),
                left: left.rank(),
                right: right_span.rank(),
                sum: sum.rank(),
                intersection: left.rank() + right_span.rank() - sum.rank(),
                kernel: kernel_span.rank(),
                contained,
            });
        }
    }
    let holds = rows
        .iter()
        .all(|r| r.contained && r.sum == r.ideal && r.intersection == r.kernel);
    Ok(SplittingReport {
        mults: [m11, m12, m21],
        rows,
        holds,
    })
}
