//! Ideals presented slice by slice.

use crate::scheme::{BiDegree, FatPointGrid};

use super::field::PrimeField;
use super::hilbert::{hilbert_dim_symbolic, symbolic_basis};
use super::lines::{power_tuples, BlockForms, GeneratorFamily, LineArrangement};
use super::matrix::{Echelon, Matrix};
use super::poly::{shifted, BiPoly};

/// A basis of `I_d` stored as the (independent) rows of a matrix.
#[derive(Debug, Clone)]
pub struct DegreePiece {
    pub bidegree: BiDegree,
    pub basis: Matrix,
}

impl DegreePiece {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }
}

/// An ideal that can produce `dim I_d` and a basis of `I_d`.
pub trait IdealSlices {
    fn field(&self) -> PrimeField;

    fn dim(&self, d: BiDegree) -> usize;

    fn piece(&self, d: BiDegree) -> DegreePiece;

    /// True when `R/I` has nonzerodivisors among the linear forms of both
    /// bidegrees `(1,0)` and `(0,1)` (saturated ideals of points).
    fn has_regular_linear_forms(&self) -> bool {
        false
    }

    /// A corner known to bound every Betti number, if any.
    fn support_corner(&self) -> Option<BiDegree> {
        None
    }
}

/// `∩ I_{P_ij}^(w_ij)` for a grid already scaled to the wanted multiplicities.
#[derive(Debug, Clone)]
pub struct SymbolicIdeal {
    pub grid: FatPointGrid,
    pub arr: LineArrangement,
}

impl SymbolicIdeal {
    pub fn new(grid: FatPointGrid, arr: LineArrangement) -> Self {
        assert_eq!(grid.rows(), arr.h.len());
        assert_eq!(grid.cols(), arr.v.len());
        SymbolicIdeal { grid, arr }
    }

    /// Past this corner every Betti number vanishes:
    /// `(sum of row orders, sum of column orders)`.
    pub fn regularity_corner(&self) -> BiDegree {
        BiDegree::new(
            self.grid.row_orders().iter().sum(),
            self.grid.col_orders().iter().sum(),
        )
    }
}

impl IdealSlices for SymbolicIdeal {
    fn field(&self) -> PrimeField {
        self.arr.field
    }

    fn dim(&self, d: BiDegree) -> usize {
        hilbert_dim_symbolic(&self.grid, 1, d, &self.arr)
    }

    fn piece(&self, d: BiDegree) -> DegreePiece {
        let basis = symbolic_basis(&self.grid, d, &self.arr);
        debug_assert_eq!(basis.rows(), self.dim(d));
        DegreePiece { bidegree: d, basis }
    }

    fn has_regular_linear_forms(&self) -> bool {
        true
    }

    fn support_corner(&self) -> Option<BiDegree> {
        Some(self.regularity_corner())
    }
}

/// Ideal generated by products `f(x0,x1) g(x2,x3)`.
#[derive(Debug, Clone)]
pub struct ProductIdeal {
    field: PrimeField,
    gens: Vec<(Vec<u32>, Vec<u32>)>,
}

impl ProductIdeal {
    pub fn new(field: PrimeField, gens: Vec<(Vec<u32>, Vec<u32>)>) -> Self {
        ProductIdeal { field, gens }
    }

    /// `I^m` for the product-of-lines family `I`.
    pub fn power(fam: &GeneratorFamily, m: u32) -> Self {
        Self::from_exponents(&fam.forms, &power_tuples(&fam.exponents(), m))
    }

    pub fn from_exponents(forms: &BlockForms, exps: &[[u32; 4]]) -> Self {
        ProductIdeal {
            field: forms.field,
            gens: exps.iter().map(|&e| forms.factors(e)).collect(),
        }
    }

    pub fn generator_degrees(&self) -> Vec<BiDegree> {
        self.gens
            .iter()
            .map(|(x, y)| BiDegree::new(x.len() as u32 - 1, y.len() as u32 - 1))
            .collect()
    }

    /// Span of all monomial multiples in bidegree `d`, stopping once the
    /// rank reaches `cap`.
    pub fn span(&self, d: BiDegree, cap: usize) -> Echelon {
        let f = self.field;
        let (da, db) = (d.a as usize, d.b as usize);
        let mut ech = Echelon::new(f, d.dim());
        let mut v = vec![0u32; d.dim()];
        for (x, y) in &self.gens {
            let (ex, ey) = (x.len() - 1, y.len() - 1);
            if ex > da || ey > db {
                continue;
            }
            for s in 0..=da - ex {
                let xs = shifted(x, s, da);
                for t in 0..=db - ey {
                    if ech.rank() >= cap {
                        return ech;
                    }
                    let yt = shifted(y, t, db);
                    for (i, &xi) in xs.iter().enumerate() {
                        let dst = &mut v[i * (db + 1)..(i + 1) * (db + 1)];
                        for (o, &yj) in dst.iter_mut().zip(&yt) {
                            *o = f.mul(xi, yj);
                        }
                    }
                    ech.insert(v.clone());
                }
            }
        }
        ech
    }

    pub fn rank_capped(&self, d: BiDegree, cap: usize) -> usize {
        self.span(d, cap).rank()
    }
}

impl IdealSlices for ProductIdeal {
    fn field(&self) -> PrimeField {
        self.field
    }

    fn dim(&self, d: BiDegree) -> usize {
        self.span(d, usize::MAX).rank()
    }

    fn piece(&self, d: BiDegree) -> DegreePiece {
        DegreePiece {
            bidegree: d,
            basis: self.span(d, usize::MAX).into_matrix(),
        }
    }
}

/// Ideal generated by arbitrary bihomogeneous forms.
#[derive(Debug, Clone)]
pub struct GeneralIdeal {
    field: PrimeField,
    gens: Vec<BiPoly>,
}

impl GeneralIdeal {
    pub fn new(field: PrimeField, gens: Vec<BiPoly>) -> Self {
        GeneralIdeal { field, gens }
    }

    pub fn gens(&self) -> &[BiPoly] {
        &self.gens
    }

    /// `I^m`, generated by all products of `m` generators.
    pub fn power(&self, m: u32) -> GeneralIdeal {
        let mut acc = vec![BiPoly::one()];
        for _ in 0..m {
            let mut next = Vec::new();
            for p in &acc {
                for g in &self.gens {
                    next.push(p.mul(g, self.field));
                }
            }
            next.sort_by(|x, y| x.coeffs.cmp(&y.coeffs));
            next.dedup();
            acc = next;
        }
        GeneralIdeal {
            field: self.field,
            gens: acc,
        }
    }

    pub fn span(&self, d: BiDegree, cap: usize) -> Echelon {
        let mut ech = Echelon::new(self.field, d.dim());
        for g in &self.gens {
            for v in g.multiples(d) {
                if ech.rank() >= cap {
                    return ech;
                }
                ech.insert(v);
            }
        }
        ech
    }
}

impl IdealSlices for GeneralIdeal {
    fn field(&self) -> PrimeField {
        self.field
    }

    fn dim(&self, d: BiDegree) -> usize {
        self.span(d, usize::MAX).rank()
    }

    fn piece(&self, d: BiDegree) -> DegreePiece {
        DegreePiece {
            bidegree: d,
            basis: self.span(d, usize::MAX).into_matrix(),
        }
    }
}

/// `(I^m)_d` for the product-of-lines family.
pub fn power_piece(fam: &GeneratorFamily, m: u32, d: BiDegree) -> DegreePiece {
    ProductIdeal::power(fam, m).piece(d)
}

/// Multiply every row of a basis of `I_{d}` by `x0^i x1^j x2^k x3^l`
/// (given as the `(j, l)` shift) into bidegree `target`.
pub fn shift_rows(
    basis: &Matrix,
    from: BiDegree,
    s: u32,
    t: u32,
    target: BiDegree,
) -> Vec<Vec<u32>> {
    basis
        .iter_rows()
        .map(|r| {
            BiPoly {
                bidegree: from,
                coeffs: r.to_vec(),
            }
            .place(s, t, target)
        })
        .collect()
}
