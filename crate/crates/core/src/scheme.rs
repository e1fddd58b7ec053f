//! Parameter space and grid model for fat almost complete intersections.
//!
//! The scheme lives on an `r x c` grid of points `P_ij = H_i x V_j` with
//! `r = alpha1 + alpha2` horizontal and `c = beta1 + beta2` vertical lines.
//! Multiplicities are constant on three blocks and zero on the fourth:
//!
//! ```text
//!            beta1   beta2
//! alpha1  [  m11  |  m12  ]
//! alpha2  [  m21  |   0   ]
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bidegree `(a, b)`; `a` is the degree in `x0, x1`, `b` in `x2, x3`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct BiDegree {
    pub a: u32,
    pub b: u32,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { a: 0, b: 0 };

    pub const fn new(a: u32, b: u32) -> Self {
        BiDegree { a, b }
    }

    pub fn total(self) -> u32 {
        self.a + self.b
    }

    pub fn swap(self) -> Self {
        BiDegree::new(self.b, self.a)
    }

    pub fn shift(self, da: u32, db: u32) -> Self {
        BiDegree::new(self.a + da, self.b + db)
    }

    /// `self - (da, db)`, or `None` when a coordinate would go negative.
    pub fn checked_sub(self, da: u32, db: u32) -> Option<Self> {
        Some(BiDegree::new(
            self.a.checked_sub(da)?,
            self.b.checked_sub(db)?,
        ))
    }

    /// Dimension of `R_(a,b)`, i.e. `(a+1)(b+1)`.
    pub fn dim(self) -> usize {
        (self.a as usize + 1) * (self.b as usize + 1)
    }

    pub fn le(self, other: BiDegree) -> bool {
        self.a <= other.a && self.b <= other.b
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl From<(u32, u32)> for BiDegree {
    fn from((a, b): (u32, u32)) -> Self {
        BiDegree::new(a, b)
    }
}

/// The seven integers describing a fat ACI scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AciParams {
    pub alpha1: u32,
    pub alpha2: u32,
    pub beta1: u32,
    pub beta2: u32,
    pub m11: u32,
    pub m12: u32,
    pub m21: u32,
}

impl AciParams {
    /// Checked constructor; block widths must be positive.
    pub fn new(alphas: [u32; 2], betas: [u32; 2], mults: [u32; 3]) -> Result<Self> {
        let p = AciParams {
            alpha1: alphas[0],
            alpha2: alphas[1],
            beta1: betas[0],
            beta2: betas[1],
            m11: mults[0],
            m12: mults[1],
            m21: mults[2],
        };
        p.validate()?;
        Ok(p)
    }

    /// Three points `P11, P12, P21` with the given multiplicities.
    pub fn three_points(m11: u32, m12: u32, m21: u32) -> Self {
        AciParams {
            alpha1: 1,
            alpha2: 1,
            beta1: 1,
            beta2: 1,
            m11,
            m12,
            m21,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("alpha1", self.alpha1),
            ("alpha2", self.alpha2),
            ("beta1", self.beta1),
            ("beta2", self.beta2),
        ] {
            if value == 0 {
                return Err(Error::ZeroWidth { name, value });
            }
        }
        Ok(())
    }

    pub fn mults(&self) -> [u32; 3] {
        [self.m11, self.m12, self.m21]
    }

    pub fn with_mults(&self, m11: u32, m12: u32, m21: u32) -> Self {
        AciParams {
            m11,
            m12,
            m21,
            ..*self
        }
    }

    /// Swap the two P1 factors.
    pub fn transpose(&self) -> Self {
        AciParams {
            alpha1: self.beta1,
            alpha2: self.beta2,
            beta1: self.alpha1,
            beta2: self.alpha2,
            m11: self.m11,
            m12: self.m21,
            m21: self.m12,
        }
    }

    /// Every multiplicity multiplied by `m` (the scheme of the symbolic power).
    pub fn scaled(&self, m: u32) -> Self {
        self.with_mults(self.m11 * m, self.m12 * m, self.m21 * m)
    }

    pub fn is_normalized(&self) -> bool {
        self.m21 <= self.m12
    }
}

impl fmt::Display for AciParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{}; {},{},{})",
            self.alpha1, self.alpha2, self.beta1, self.beta2, self.m11, self.m12, self.m21
        )
    }
}

/// Dense multiplicity matrix `w_ij` on an `rows x cols` grid.
///
/// Grids built by [`build_grid`] remember their block shape; arbitrary
/// grids (for the oracle) carry `shape = None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FatPointGrid {
    rows: usize,
    cols: usize,
    weights: Vec<u32>,
    shape: Option<AciParams>,
}

impl FatPointGrid {
    pub fn from_weights(rows: usize, cols: usize, weights: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Precondition(
                "grid must have at least one row and column".into(),
            ));
        }
        if weights.len() != rows * cols {
            return Err(Error::Precondition(format!(
                "expected {} weights for a {rows}x{cols} grid, got {}",
                rows * cols,
                weights.len()
            )));
        }
        Ok(FatPointGrid {
            rows,
            cols,
            weights,
            shape: None,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn weight(&self, i: usize, j: usize) -> u32 {
        self.weights[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.weights[i * self.cols..(i + 1) * self.cols]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    /// Block parameters this grid was built from, if any.
    pub fn block_params(&self) -> Option<AciParams> {
        self.shape
    }

    pub fn is_empty_scheme(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> FatPointGrid {
        let mut weights = Vec::with_capacity(self.weights.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                weights.push(self.weight(i, j));
            }
        }
        FatPointGrid {
            rows: self.cols,
            cols: self.rows,
            weights,
            shape: self.shape.map(|p| p.transpose()),
        }
    }

    /// Multiply every weight by `m`.
    pub fn scaled(&self, m: u32) -> FatPointGrid {
        FatPointGrid {
            rows: self.rows,
            cols: self.cols,
            weights: self.weights.iter().map(|w| w * m).collect(),
            shape: self.shape.map(|p| p.scaled(m)),
        }
    }

    /// Row orders `N_i = max_j w_ij`.
    pub fn row_orders(&self) -> Vec<u32> {
        (0..self.rows)
            .map(|i| self.row(i).iter().copied().max().unwrap_or(0))
            .collect()
    }

    /// Column orders `M_j = max_i w_ij`.
    pub fn col_orders(&self) -> Vec<u32> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.weight(i, j)).max().unwrap_or(0))
            .collect()
    }
}

/// Whether the P1 factors were swapped to reach `m21 <= m12`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NormalizationRecord {
    pub transposed: bool,
}

impl NormalizationRecord {
    pub fn apply(&self, p: AciParams) -> AciParams {
        if self.transposed {
            p.transpose()
        } else {
            p
        }
    }

    pub fn map_degree(&self, d: BiDegree) -> BiDegree {
        if self.transposed {
            d.swap()
        } else {
            d
        }
    }
}

/// Which closed formula ends the multiplicity recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum BaseCaseTag {
    ACM_COLUMN_BLOCKS,
    DISJOINT_CI,
    EQUAL_MU_CI,
    GENERAL,
}

pub fn build_grid(params: &AciParams) -> Result<FatPointGrid> {
    params.validate()?;
    let (a1, a2) = (params.alpha1 as usize, params.alpha2 as usize);
    let (b1, b2) = (params.beta1 as usize, params.beta2 as usize);
    let (rows, cols) = (a1 + a2, b1 + b2);
    let mut weights = vec![0; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            weights[i * cols + j] = match (i < a1, j < b1) {
                (true, true) => params.m11,
                (true, false) => params.m12,
                (false, true) => params.m21,
                (false, false) => 0,
            };
        }
    }
    Ok(FatPointGrid {
        rows,
        cols,
        weights,
        shape: Some(*params),
    })
}

/// One step `Z -> Z1`: lower `m11` and `m21` by one, keep `m12`.
pub fn reduce_step(params: &AciParams) -> AciParams {
    params.with_mults(
        params.m11.saturating_sub(1),
        params.m12,
        params.m21.saturating_sub(1),
    )
}

pub fn normalize(params: &AciParams) -> (AciParams, NormalizationRecord) {
    if params.m21 <= params.m12 {
        (*params, NormalizationRecord { transposed: false })
    } else {
        (params.transpose(), NormalizationRecord { transposed: true })
    }
}

/// Base-case routing for normalized params.
///
/// `m11 = m21 = 0` leaves a homogeneous fat CI on the `m12` block, which
/// takes precedence over the column-block reading of the same scheme.
pub fn classify(params: &AciParams) -> BaseCaseTag {
    match (params.m11, params.m21) {
        (0, 0) => BaseCaseTag::EQUAL_MU_CI,
        (_, 0) => BaseCaseTag::ACM_COLUMN_BLOCKS,
        (0, _) => BaseCaseTag::DISJOINT_CI,
        _ => BaseCaseTag::GENERAL,
    }
}

/// Per-row point counts of the support, sorted non-increasingly.
pub fn alpha_tuple(grid: &FatPointGrid) -> Vec<u32> {
    let mut t: Vec<u32> = (0..grid.rows())
        .map(|i| grid.row(i).iter().filter(|&&w| w > 0).count() as u32)
        .filter(|&n| n > 0)
        .collect();
    t.sort_unstable_by(|x, y| y.cmp(x));
    t
}

/// Fat analogue of [`alpha_tuple`]: the positive values
/// `sum_j (w_ij - u)_+` over rows `i` and orders `u >= 0`, sorted
/// non-increasingly. On a reduced grid this is the support tuple; on a
/// column-block CI it is `gamma_0..gamma_{M-1}`, each repeated `alpha` times.
pub fn gamma_tuple(grid: &FatPointGrid) -> Vec<u32> {
    let mut t = Vec::new();
    for i in 0..grid.rows() {
        for u in 0.. {
            let g: u32 = grid.row(i).iter().map(|&w| w.saturating_sub(u)).sum();
            if g == 0 {
                break;
            }
            t.push(g);
        }
    }
    t.sort_unstable_by(|x, y| y.cmp(x));
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: [u32; 2], b: [u32; 2], m: [u32; 3]) -> AciParams {
        AciParams::new(a, b, m).unwrap()
    }

    #[test]
    fn grid_of_worked_example() {
        let g = build_grid(&p([2, 1], [2, 2], [2, 4, 3])).unwrap();
        assert_eq!(g.rows(), 3);
        assert_eq!(g.weights(), &[2, 2, 4, 4, 2, 2, 4, 4, 3, 3, 0, 0]);
        let w = build_grid(&AciParams::three_points(2, 4, 3)).unwrap();
        assert_eq!(w.weights(), &[2, 4, 3, 0]);
        let e = build_grid(&AciParams::three_points(0, 0, 0)).unwrap();
        assert!(e.is_empty_scheme());
    }

    #[test]
    fn zero_width_is_rejected() {
        let bad = AciParams {
            beta2: 0,
            ..AciParams::three_points(1, 1, 1)
        };
        assert_eq!(
            build_grid(&bad),
            Err(Error::ZeroWidth {
                name: "beta2",
                value: 0
            })
        );
    }

    #[test]
    fn reduction_lowers_m11_and_m21() {
        let w = AciParams::three_points(2, 4, 3);
        assert_eq!(reduce_step(&w).mults(), [1, 4, 2]);
        assert_eq!(reduce_step(&w.with_mults(0, 4, 1)).mults(), [0, 4, 0]);
        assert_eq!(reduce_step(&w.with_mults(0, 0, 0)).mults(), [0, 0, 0]);
    }

    #[test]
    fn reduction_runs_mu_steps() {
        for m11 in 0..5 {
            for m21 in 0..5 {
                let mut q = AciParams::three_points(m11, 4, m21);
                let mu = m11.min(m21);
                for _ in 0..mu {
                    q = reduce_step(&q);
                }
                assert_eq!((q.m11, q.m21), (m11 - mu, m21 - mu));
                assert_eq!(q.m11.min(q.m21), 0);
            }
        }
    }

    #[test]
    fn normalize_transposes_grid() {
        let input = p([2, 1], [2, 2], [2, 3, 4]);
        let (out, rec) = normalize(&input);
        assert!(rec.transposed);
        assert_eq!(out, p([2, 2], [2, 1], [2, 4, 3]));
        assert_eq!(
            build_grid(&out).unwrap().weights(),
            build_grid(&input).unwrap().transpose().weights()
        );
        assert_eq!(rec.apply(out), input);

        let (same, rec) = normalize(&AciParams::three_points(1, 1, 1));
        assert!(!rec.transposed);
        assert_eq!(same, AciParams::three_points(1, 1, 1));
    }

    #[test]
    fn classify_matches_mults() {
        let q = p([1, 1], [1, 1], [3, 5, 0]);
        assert_eq!(classify(&q), BaseCaseTag::ACM_COLUMN_BLOCKS);
        assert_eq!(classify(&q.with_mults(0, 4, 2)), BaseCaseTag::DISJOINT_CI);
        assert_eq!(classify(&q.with_mults(1, 4, 2)), BaseCaseTag::GENERAL);
        for m11 in 0..=4 {
            for m12 in 0..=4 {
                for m21 in 0..=4 {
                    let (n, _) = normalize(&q.with_mults(m11, m12, m21));
                    let tag = classify(&n);
                    let expect = if n.m11.min(n.m21) > 0 {
                        BaseCaseTag::GENERAL
                    } else if n.m21 > 0 {
                        BaseCaseTag::DISJOINT_CI
                    } else if n.m11 > 0 {
                        BaseCaseTag::ACM_COLUMN_BLOCKS
                    } else {
                        BaseCaseTag::EQUAL_MU_CI
                    };
                    assert_eq!(tag, expect, "{n}");
                }
            }
        }
    }

    #[test]
    fn tuples() {
        let g = build_grid(&p([2, 1], [2, 2], [1, 1, 1])).unwrap();
        assert_eq!(alpha_tuple(&g), vec![4, 4, 2]);
        assert_eq!(
            alpha_tuple(&build_grid(&AciParams::three_points(0, 0, 0)).unwrap()),
            vec![]
        );
        let one = FatPointGrid::from_weights(1, 1, vec![1]).unwrap();
        assert_eq!(alpha_tuple(&one), vec![1]);
        assert_eq!(gamma_tuple(&one), vec![1]);

        // column-block CI: gamma_u = (m11-u)+ b1 + (m12-u)+ b2, repeated alpha times
        let ci = FatPointGrid::from_weights(2, 3, vec![2, 3, 3, 2, 3, 3]).unwrap();
        assert_eq!(gamma_tuple(&ci), vec![8, 8, 5, 5, 2, 2]);
    }
}
