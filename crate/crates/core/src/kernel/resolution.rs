//! Minimal generators and the full Betti table, computed from slices.
//!
//! For an ideal `I` with `x0` regular on `R/I` (points off `x0 = 0`), the
//! map `F -> F(0, 1, x2, x3)` identifies `I/x0 I` in bidegree `(a, *)` with
//! `x1^a J_a` for an ideal `J_a` of `B = k[x2, x3]`, and `J_(a-1) ⊂ J_a`.
//! Hence `M = I/(x0, x1) I` is `J_a / J_(a-1)` in `x`-degree `a`. Both
//! `x0, x1` are regular on `I`, so the minimal resolution of `I` over `R`
//! reduces to that of `M` over `B`, read off the Koszul complex on `x2, x3`.

use std::collections::HashMap;

use crate::betti::{BettiTable, DegreeSet};
use crate::error::{Error, Result};
use crate::scheme::BiDegree;

use super::ideal::{shift_rows, IdealSlices};
use super::matrix::{Echelon, Matrix};
use super::poly::BiPoly;

/// `dim I_d` on `[-2, a] x [-2, b]`, zero at negative indices.
pub(crate) struct HilbertGrid {
    corner: BiDegree,
    h: Vec<i64>,
}

impl HilbertGrid {
    pub(crate) fn new<I: IdealSlices + ?Sized>(ideal: &I, corner: BiDegree) -> Self {
        let mut h = Vec::with_capacity(corner.dim());
        for a in 0..=corner.a {
            for b in 0..=corner.b {
                h.push(ideal.dim(BiDegree::new(a, b)) as i64);
            }
        }
        HilbertGrid { corner, h }
    }

    pub(crate) fn get(&self, a: i64, b: i64) -> i64 {
        if a < 0 || b < 0 {
            return 0;
        }
        debug_assert!(a <= self.corner.a as i64 && b <= self.corner.b as i64);
        self.h[a as usize * (self.corner.b as usize + 1) + b as usize]
    }

    /// `Δ²_a h`: dimension of `I/(x0, x1) I` at `(a, b)`.
    pub(crate) fn g_a(&self, a: i64, b: i64) -> i64 {
        self.get(a, b) - 2 * self.get(a - 1, b) + self.get(a - 2, b)
    }

    pub(crate) fn g_b(&self, a: i64, b: i64) -> i64 {
        self.get(a, b) - 2 * self.get(a, b - 1) + self.get(a, b - 2)
    }

    /// `Δ²_a Δ²_b h`, the Euler characteristic of the Betti numbers at `(a, b)`.
    fn euler(&self, a: i64, b: i64) -> i64 {
        self.g_a(a, b) - 2 * self.g_a(a, b - 1) + self.g_a(a, b - 2)
    }
}

/// The products `x_k * I_(d - e_k)` inside `R_d`.
fn variable_multiples<I: IdealSlices + ?Sized>(
    ideal: &I,
    d: BiDegree,
    cache: &mut HashMap<BiDegree, Matrix>,
) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut add = |from: BiDegree, s: u32, t: u32, out: &mut Vec<Vec<u32>>| {
        let basis = cache.entry(from).or_insert_with(|| ideal.piece(from).basis);
        out.extend(shift_rows(basis, from, s, t, d));
    };
    if let Some(e) = d.checked_sub(1, 0) {
        add(e, 0, 0, &mut out);
        add(e, 1, 0, &mut out);
    }
    if let Some(e) = d.checked_sub(0, 1) {
        add(e, 0, 0, &mut out);
        add(e, 0, 1, &mut out);
    }
    out
}

/// Minimal generators with bidegree `<= bound`, as representative forms.
///
/// Works for any ideal; degrees outside the bound are not examined.
pub fn minimal_generators<I: IdealSlices + ?Sized>(
    ideal: &I,
    bound: BiDegree,
) -> Vec<(BiDegree, Vec<BiPoly>)> {
    let field = ideal.field();
    let prune = ideal
        .has_regular_linear_forms()
        .then(|| HilbertGrid::new(ideal, bound));
    let mut cache = HashMap::new();
    let mut out = Vec::new();
    for a in 0..=bound.a {
        for b in 0..=bound.b {
            let d = BiDegree::new(a, b);
            if let Some(h) = &prune {
                let (x, y) = (a as i64, b as i64);
                if h.g_a(x, y) <= 0 || h.g_b(x, y) <= 0 {
                    continue;
                }
            }
            let piece = cache
                .entry(d)
                .or_insert_with(|| ideal.piece(d).basis)
                .clone();
            if piece.rows() == 0 {
                continue;
            }
            let mut ech = Echelon::new(field, d.dim());
            for v in variable_multiples(ideal, d, &mut cache) {
                ech.insert(v);
            }
            let mut gens = Vec::new();
            for r in piece.iter_rows() {
                if ech.rank() == piece.rows() {
                    break;
                }
                if ech.insert(r.to_vec()) {
                    gens.push(BiPoly {
                        bidegree: d,
                        coeffs: r.to_vec(),
                    });
                }
            }
            if !gens.is_empty() {
                out.push((d, gens));
            }
        }
    }
    out
}

/// Number of minimal generators in each bidegree `<= bound`.
pub fn min_generators<I: IdealSlices + ?Sized>(ideal: &I, bound: BiDegree) -> DegreeSet {
    let mut set = DegreeSet::new();
    for (d, g) in minimal_generators(ideal, bound) {
        set.insert(d, g.len());
    }
    set
}

/// Bases of the top `x1`-slices `J_(a,b)`, cached.
struct TopSlices<'a, I: IdealSlices + ?Sized> {
    ideal: &'a I,
    h: &'a HilbertGrid,
    cache: HashMap<BiDegree, Matrix>,
}

impl<I: IdealSlices + ?Sized> TopSlices<'_, I> {
    fn get(&mut self, a: i64, b: i64) -> Result<Matrix> {
        let field = self.ideal.field();
        if a < 0 || b < 0 {
            return Ok(Matrix::zeros(field, 0, b.max(0) as usize + 1));
        }
        let d = BiDegree::new(a as u32, b as u32);
        if let Some(m) = self.cache.get(&d) {
            return Ok(m.clone());
        }
        let piece = self.ideal.piece(d).basis;
        let w = b as usize + 1;
        let top = a as usize * w;
        let rows: Vec<Vec<u32>> = piece
            .iter_rows()
            .map(|r| r[top..top + w].to_vec())
            .collect();
        let mut m = Matrix::from_rows(field, w, &rows);
        m.rref();
        if m.rows() as i64 != self.h.get(a, b) - self.h.get(a - 1, b) {
            return Err(Error::NotFree(d));
        }
        self.cache.insert(d, m.clone());
        Ok(m)
    }

    /// `M_(a,b) = J_(a,b) / J_(a-1,b)` as an echelon whose rows past
    /// `offset` form a basis of the quotient.
    fn quotient(&mut self, a: i64, b: i64) -> Result<Quotient> {
        let field = self.ideal.field();
        let w = b.max(0) as usize + 1;
        let mut ech = Echelon::new(field, w);
        if b < 0 {
            return Ok(Quotient { ech, offset: 0 });
        }
        for r in self.get(a - 1, b)?.iter_rows() {
            ech.insert(r.to_vec());
        }
        let offset = ech.rank();
        for r in self.get(a, b)?.iter_rows() {
            ech.insert(r.to_vec());
        }
        if offset != self.get(a - 1, b)?.rows() || ech.rank() != self.get(a, b)?.rows() {
            // J_(a-1) must sit inside J_a
            return Err(Error::NotFree(BiDegree::new(a as u32, b as u32)));
        }
        Ok(Quotient { ech, offset })
    }
}

struct Quotient {
    ech: Echelon,
    offset: usize,
}

impl Quotient {
    fn dim(&self) -> usize {
        self.ech.rank() - self.offset
    }

    fn basis(&self) -> &[Vec<u32>] {
        &self.ech.rows()[self.offset..]
    }

    fn coords(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        let c = self.ech.reduce_with_coeffs(&mut w);
        debug_assert!(w.iter().all(|&x| x == 0), "image left the slice");
        c[self.offset..].to_vec()
    }
}

/// `x2 * g` and `x3 * g` for `g` of degree `b - 1` in `x2, x3`.
fn times_x2(g: &[u32]) -> Vec<u32> {
    let mut v = g.to_vec();
    v.push(0);
    v
}

fn times_x3(g: &[u32]) -> Vec<u32> {
    let mut v = vec![0];
    v.extend_from_slice(g);
    v
}

/// The Betti table of `I`, recomputed from scratch over the box `[0, bound]`.
///
/// Requires regular linear forms (ideals of points). Every bidegree in the
/// box is checked against `Δ²_a Δ²_b dim I_d`; a Betti number on the edge
/// of a box smaller than the ideal's own support corner is an error.
pub fn syzygy_betti<I: IdealSlices + ?Sized>(ideal: &I, bound: BiDegree) -> Result<BettiTable> {
    if !ideal.has_regular_linear_forms() {
        return Err(Error::Precondition(
            "syzygies need x0 and x2 regular on R/I".into(),
        ));
    }
    let h = HilbertGrid::new(ideal, bound);
    let mut slices = TopSlices {
        ideal,
        h: &h,
        cache: HashMap::new(),
    };
    let mut table = BettiTable::default();
    for a in 0..=bound.a as i64 {
        for b in 0..=bound.b as i64 {
            let d = BiDegree::new(a as u32, b as u32);
            let cand = (0..3).any(|i| h.g_a(a, b - i) > 0 && h.g_b(a - i, b) > 0);
            let betti = if cand {
                koszul(&mut slices, &h, a, b)?
            } else {
                [0, 0, 0]
            };
            let euler = betti[0] as i64 - betti[1] as i64 + betti[2] as i64;
            if euler != h.euler(a, b) {
                return Err(Error::EulerMismatch(d));
            }
            for (k, &n) in betti.iter().enumerate() {
                table.module_mut(k).insert(d, n);
            }
        }
    }
    let safe = ideal
        .support_corner()
        .is_some_and(|c| c.a <= bound.a && c.b <= bound.b);
    if !safe {
        for k in 0..3 {
            for (d, _) in table.module(k).iter() {
                if d.a == bound.a || d.b == bound.b {
                    return Err(Error::BoxTooSmall {
                        bound,
                        what: ["generators", "first syzygies", "second syzygies"][k],
                        at: d,
                    });
                }
            }
        }
    }
    Ok(table)
}

fn koszul<I: IdealSlices + ?Sized>(
    slices: &mut TopSlices<'_, I>,
    h: &HilbertGrid,
    a: i64,
    b: i64,
) -> Result<[usize; 3]> {
    let field = slices.ideal.field();
    let m0 = slices.quotient(a, b)?;
    let m1 = slices.quotient(a, b - 1)?;
    let m2 = slices.quotient(a, b - 2)?;
    for (q, db) in [(&m0, 0), (&m1, 1), (&m2, 2)] {
        if q.dim() as i64 != h.g_a(a, b - db) {
            return Err(Error::NotFree(BiDegree::new(
                a as u32,
                (b - db).max(0) as u32,
            )));
        }
    }
    // d1: M(b-1)^2 -> M(b), (w1, w2) -> x2 w1 + x3 w2
    let mut d1 = Matrix::zeros(field, 0, m0.dim());
    for w in m1.basis() {
        d1.push_row(&m0.coords(&times_x2(w)));
        d1.push_row(&m0.coords(&times_x3(w)));
    }
    // d2: M(b-2) -> M(b-1)^2, w -> (-x3 w, x2 w)
    let mut d2 = Matrix::zeros(field, 0, 2 * m1.dim());
    for w in m2.basis() {
        let mut row: Vec<u32> = m1
            .coords(&times_x3(w))
            .into_iter()
            .map(|x| field.neg(x))
            .collect();
        row.extend(m1.coords(&times_x2(w)));
        d2.push_row(&row);
    }
    let (r1, r2) = (d1.rank(), d2.rank());
    Ok([m0.dim() - r1, 2 * m1.dim() - r1 - r2, m2.dim() - r2])
}
