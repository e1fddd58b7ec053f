//! Dimensions of the slices of `I^(m) = ∩ I_{P_ij}^(m w_ij)`.
//!
//! A form `F` of bidegree `(a,b)` lies in `I_P^mu`, `P = [1:h] x [1:v]`, iff
//! the Taylor coefficients of `F(1,h+X,1,v+Y)` vanish in every order
//! `(u,t)` with `u+t < mu`. The `(u,t)` coefficient is the functional
//! `phi_{h,u} (x) psi_{v,t}` with `phi_{h,u}[s] = C(s,u) h^(s-u)`, which
//! makes sense in every characteristic.
//!
//! Four routes compute the same number:
//!
//! * `Dense`: rank of all conditions on `R_(a,b)`.
//! * `RowTaylor`: group conditions by row `i` and `x`-order `u`. The
//!   `psi` part of group `(i,u)` is annihilated exactly by multiples of
//!   `g_iu(y) = prod_j (y - v_j)^(w_ij - u)_+`, so only a small kernel is
//!   left once the `phi_{h_i,u}` are eliminated.
//! * `ColTaylor`: the same with the factors swapped.
//! * `Flag`: when rows and columns each fall into at most two classes of
//!   equal weight vectors, the condition space is a sum of tensor products
//!   drawn from two flags on each side. Two flags always share an adapted
//!   basis, so its dimension is a count over basis labels.

use crate::scheme::{BiDegree, FatPointGrid};

use super::field::PrimeField;
use super::lines::LineArrangement;
use super::matrix::{Echelon, Matrix};
use super::poly::{from_roots, poly_mul, poly_pow, shifted};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HilbertRoute {
    Auto,
    Dense,
    RowTaylor,
    ColTaylor,
    Flag,
}

/// `phi_{h,u}` on forms of degree `deg`.
pub fn hermite(h: u32, u: usize, deg: usize, binom: &[Vec<u32>], field: PrimeField) -> Vec<u32> {
    let mut out = vec![0u32; deg + 1];
    let mut hp = 1u32; // h^(s-u)
    for s in u..=deg {
        out[s] = field.mul(binom[s][u], hp);
        hp = field.mul(hp, h);
    }
    out
}

/// Number of conditions imposed by the grid (its length).
pub fn condition_count(grid: &FatPointGrid) -> usize {
    grid.weights()
        .iter()
        .map(|&w| (w as usize) * (w as usize + 1) / 2)
        .sum()
}

/// One row per point and order `(u,t)`, `u + t < w_ij`.
pub fn conditions_matrix(grid: &FatPointGrid, d: BiDegree, arr: &LineArrangement) -> Matrix {
    let field = arr.field;
    let (da, db) = (d.a as usize, d.b as usize);
    let binom = field.binomials(da.max(db));
    let mut m = Matrix::zeros(field, 0, d.dim());
    let mut row = vec![0u32; d.dim()];
    for i in 0..grid.rows() {
        for j in 0..grid.cols() {
            let w = grid.weight(i, j) as usize;
            for u in 0..w.min(da + 1) {
                let phi = hermite(arr.h[i], u, da, &binom, field);
                for t in 0..(w - u).min(db + 1) {
                    let psi = hermite(arr.v[j], t, db, &binom, field);
                    for s in 0..=da {
                        for (k, &y) in psi.iter().enumerate() {
                            row[s * (db + 1) + k] = field.mul(phi[s], y);
                        }
                    }
                    m.push_row(&row);
                }
            }
        }
    }
    m
}

/// Whether `coeffs` (a form of bidegree `d`) satisfies every condition.
pub fn satisfies_conditions(
    grid: &FatPointGrid,
    d: BiDegree,
    coeffs: &[u32],
    arr: &LineArrangement,
) -> bool {
    let field = arr.field;
    conditions_matrix(grid, d, arr).iter_rows().all(|r| {
        r.iter()
            .zip(coeffs)
            .fold(0u32, |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
            == 0
    })
}

/// Basis of the slice, as the nullspace of the conditions.
pub fn symbolic_basis(grid: &FatPointGrid, d: BiDegree, arr: &LineArrangement) -> Matrix {
    if grid.is_empty_scheme() {
        let f = arr.field;
        let mut m = Matrix::zeros(f, 0, d.dim());
        let mut e = vec![0u32; d.dim()];
        for k in 0..d.dim() {
            e.fill(0);
            e[k] = 1;
            m.push_row(&e);
        }
        return m;
    }
    conditions_matrix(grid, d, arr).nullspace()
}

/// Two-class partition of one side: class sizes and, per index, its class.
fn classes(vectors: Vec<Vec<u32>>) -> Option<(Vec<usize>, Vec<Vec<u32>>)> {
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut sizes = Vec::new();
    for v in vectors {
        match reps.iter().position(|r| *r == v) {
            Some(k) => sizes[k] += 1,
            None => {
                if reps.len() == 2 {
                    return None;
                }
                reps.push(v);
                sizes.push(1);
            }
        }
    }
    Some((sizes, reps))
}

/// Basis labels `(levels, count)` for up to two Hermite flags on forms of
/// degree `deg`. Class `x` with `n_x` points has level-`k` space of
/// dimension `min(n_x k, deg+1)`; level `cap` stands for "never".
fn flag_labels(sizes: &[usize], deg: usize, cap: usize) -> Vec<(Vec<usize>, usize)> {
    let full = deg + 1;
    let dim1 = |n: usize, k: usize| if k >= cap { full } else { (n * k).min(full) };
    match sizes {
        [n] => (1..=cap)
            .map(|k| (vec![k], dim1(*n, k) - dim1(*n, k - 1)))
            .filter(|(_, c)| *c > 0)
            .collect(),
        [n1, n2] => {
            let d = |k: usize, l: usize| -> usize {
                if k == 0 || l == 0 {
                    return 0;
                }
                let (x, y) = (dim1(*n1, k), dim1(*n2, l));
                let sum = if k >= cap || l >= cap {
                    full
                } else {
                    (n1 * k + n2 * l).min(full)
                };
                x + y - sum
            };
            let mut out = Vec::new();
            for k in 1..=cap {
                for l in 1..=cap {
                    let c = d(k, l) + d(k - 1, l - 1) - d(k - 1, l) - d(k, l - 1);
                    if c > 0 {
                        out.push((vec![k, l], c));
                    }
                }
            }
            out
        }
        _ => unreachable!("at most two classes"),
    }
}

/// Number of conditions (the Hilbert function of `R/I` at `d`) by the flag
/// count, or `None` when the grid has more than two row or column classes.
fn hf_flag(grid: &FatPointGrid, d: BiDegree) -> Option<usize> {
    let rows: Vec<Vec<u32>> = (0..grid.rows()).map(|i| grid.row(i).to_vec()).collect();
    let cols: Vec<Vec<u32>> = (0..grid.cols())
        .map(|j| (0..grid.rows()).map(|i| grid.weight(i, j)).collect())
        .collect();
    let (rsizes, _) = classes(rows.clone())?;
    let (csizes, _) = classes(cols.clone())?;
    // class index of each row / column, in first-seen order
    let class_of = |vs: &[Vec<u32>]| -> Vec<usize> {
        let mut reps: Vec<&Vec<u32>> = Vec::new();
        vs.iter()
            .map(|v| match reps.iter().position(|r| *r == v) {
                Some(k) => k,
                None => {
                    reps.push(v);
                    reps.len() - 1
                }
            })
            .collect()
    };
    let rc = class_of(&rows);
    let cc = class_of(&cols);
    let mut mu = vec![vec![0usize; csizes.len()]; rsizes.len()];
    for i in 0..grid.rows() {
        for j in 0..grid.cols() {
            mu[rc[i]][cc[j]] = grid.weight(i, j) as usize;
        }
    }
    let cap = grid.weights().iter().copied().max().unwrap_or(0) as usize + 1;
    let xs = flag_labels(&rsizes, d.a as usize, cap);
    let ys = flag_labels(&csizes, d.b as usize, cap);
    let mut total = 0;
    for (lx, nx) in &xs {
        for (ly, ny) in &ys {
            let covered = mu.iter().enumerate().any(|(x, row)| {
                row.iter()
                    .enumerate()
                    .any(|(y, &m)| m > 0 && lx[x] + ly[y] <= m + 1)
            });
            if covered {
                total += nx * ny;
            }
        }
    }
    Some(total)
}

/// Row groups `(i, u)` with their `g_iu` and its degree.
fn row_groups(grid: &FatPointGrid, arr: &LineArrangement) -> Vec<(usize, usize, Vec<u32>)> {
    let field = arr.field;
    let mut out = Vec::new();
    for i in 0..grid.rows() {
        let top = grid.row(i).iter().copied().max().unwrap_or(0) as usize;
        for u in 0..top {
            let mut g = vec![1u32];
            for j in 0..grid.cols() {
                let e = (grid.weight(i, j) as usize).saturating_sub(u);
                if e > 0 {
                    let lin = from_roots(&[arr.v[j]], field);
                    g = poly_mul(&g, &poly_pow(&lin, e as u32, field), field);
                }
            }
            out.push((i, u, g));
        }
    }
    out
}

fn hf_row_taylor(grid: &FatPointGrid, d: BiDegree, arr: &LineArrangement) -> usize {
    let field = arr.field;
    let (da, db) = (d.a as usize, d.b as usize);
    let groups = row_groups(grid, arr);
    let len = groups.len();
    if len <= da + 1 {
        return groups
            .iter()
            .map(|(_, _, g)| (g.len() - 1).min(db + 1))
            .sum();
    }
    let binom = field.binomials(da);
    // Phi^T is (da+1) x len; its nullspace gives the relations K among the groups.
    let mut phi_t = Matrix::zeros(field, da + 1, len);
    for (p, (i, u, _)) in groups.iter().enumerate() {
        let phi = hermite(arr.h[*i], *u, da, &binom, field);
        for (s, &c) in phi.iter().enumerate().take(da + 1) {
            phi_t.set(s, p, c);
        }
    }
    let k = phi_t.nullspace();
    let rels = k.rows();
    let width = rels * (db + 1);
    let mut ech = Echelon::new(field, width);
    let mut domain = 0;
    let mut row = vec![0u32; width];
    for (p, (_, _, g)) in groups.iter().enumerate() {
        let deg = g.len() - 1;
        if deg > db {
            continue;
        }
        for s in 0..=db - deg {
            domain += 1;
            let gy = shifted(g, s, db);
            for r in 0..rels {
                let c = k.get(r, p);
                for t in 0..=db {
                    row[r * (db + 1) + t] = field.mul(c, gy[t]);
                }
            }
            ech.insert(row.clone());
        }
    }
    let dim_ideal = domain - ech.rank();
    d.dim() - dim_ideal
}

fn dense_cost(grid: &FatPointGrid, d: BiDegree) -> f64 {
    let r = condition_count(grid) as f64;
    let c = d.dim() as f64;
    r * c * r.min(c)
}

fn row_taylor_cost(grid: &FatPointGrid, d: BiDegree) -> f64 {
    let (da, db) = (d.a as usize, d.b as usize);
    let mut len = 0usize;
    let mut domain = 0usize;
    for i in 0..grid.rows() {
        let top = grid.row(i).iter().copied().max().unwrap_or(0) as usize;
        for u in 0..top {
            len += 1;
            let deg: usize = grid
                .row(i)
                .iter()
                .map(|&w| (w as usize).saturating_sub(u))
                .sum();
            domain += (db + 1).saturating_sub(deg);
        }
    }
    if len <= da + 1 {
        return 0.0;
    }
    let width = ((len - da - 1) * (db + 1)) as f64;
    let dom = domain as f64;
    dom * width * dom.min(width) + (len * (da + 1) * (da + 1)) as f64
}

/// Number of independent conditions at `d` (the Hilbert function of `R/I`).
pub fn conditions_rank(
    route: HilbertRoute,
    grid: &FatPointGrid,
    d: BiDegree,
    arr: &LineArrangement,
) -> Option<usize> {
    if grid.is_empty_scheme() {
        return Some(0);
    }
    match route {
        HilbertRoute::Dense => Some(conditions_matrix(grid, d, arr).rank()),
        HilbertRoute::RowTaylor => Some(hf_row_taylor(grid, d, arr)),
        HilbertRoute::ColTaylor => {
            Some(hf_row_taylor(&grid.transpose(), d.swap(), &arr.transpose()))
        }
        HilbertRoute::Flag => hf_flag(grid, d),
        HilbertRoute::Auto => {
            if let Some(n) = hf_flag(grid, d) {
                return Some(n);
            }
            let costs = [
                (dense_cost(grid, d), HilbertRoute::Dense),
                (row_taylor_cost(grid, d), HilbertRoute::RowTaylor),
                (
                    row_taylor_cost(&grid.transpose(), d.swap()),
                    HilbertRoute::ColTaylor,
                ),
            ];
            let best = costs
                .iter()
                .min_by(|x, y| x.0.total_cmp(&y.0))
                .map(|c| c.1)
                .unwrap();
            conditions_rank(best, grid, d, arr)
        }
    }
}

/// `dim (∩ I_{P_ij}^(m w_ij))_d`.
pub fn hilbert_dim_symbolic(
    grid: &FatPointGrid,
    m: u32,
    d: BiDegree,
    arr: &LineArrangement,
) -> usize {
    hilbert_dim_with(HilbertRoute::Auto, grid, m, d, arr).expect("auto route always applies")
}

pub fn hilbert_dim_with(
    route: HilbertRoute,
    grid: &FatPointGrid,
    m: u32,
    d: BiDegree,
    arr: &LineArrangement,
) -> Option<usize> {
    let g = grid.scaled(m);
    conditions_rank(route, &g, d, arr).map(|r| d.dim() - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::FieldConfig;
    use crate::scheme::{build_grid, AciParams};

    fn arr_for(g: &FatPointGrid) -> LineArrangement {
        LineArrangement::new(&FieldConfig::default(), g.rows(), g.cols()).unwrap()
    }

    #[test]
    fn double_point() {
        let g = FatPointGrid::from_weights(1, 1, vec![2]).unwrap();
        let arr = arr_for(&g);
        for route in [
            HilbertRoute::Dense,
            HilbertRoute::RowTaylor,
            HilbertRoute::ColTaylor,
            HilbertRoute::Flag,
        ] {
            assert_eq!(
                hilbert_dim_with(route, &g, 1, BiDegree::new(1, 1), &arr),
                Some(1)
            );
        }
    }

    #[test]
    fn empty_grid_is_everything() {
        let g = build_grid(&AciParams::three_points(0, 0, 0)).unwrap();
        let arr = arr_for(&g);
        assert_eq!(hilbert_dim_symbolic(&g, 3, BiDegree::new(2, 4), &arr), 15);
    }

    #[test]
    fn routes_agree_on_blocks() {
        let p = AciParams::new([2, 1], [1, 2], [2, 3, 1]).unwrap();
        let g = build_grid(&p).unwrap();
        let arr = arr_for(&g);
        for a in 0..9 {
            for b in 0..9 {
                let d = BiDegree::new(a, b);
                let dense = hilbert_dim_with(HilbertRoute::Dense, &g, 1, d, &arr);
                for route in [
                    HilbertRoute::RowTaylor,
                    HilbertRoute::ColTaylor,
                    HilbertRoute::Flag,
                ] {
                    assert_eq!(
                        hilbert_dim_with(route, &g, 1, d, &arr),
                        dense,
                        "{route:?} {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn flag_declines_three_classes() {
        let g = FatPointGrid::from_weights(3, 1, vec![1, 2, 3]).unwrap();
        let arr = arr_for(&g);
        assert_eq!(
            hilbert_dim_with(HilbertRoute::Flag, &g, 1, BiDegree::new(2, 2), &arr),
            None
        );
        let dense = hilbert_dim_with(HilbertRoute::Dense, &g, 1, BiDegree::new(4, 3), &arr);
        assert_eq!(
            hilbert_dim_with(HilbertRoute::Auto, &g, 1, BiDegree::new(4, 3), &arr),
            dense
        );
    }
}
