//! Bihomogeneous forms in the dense monomial basis.
//!
//! A form of bidegree `(a,b)` is stored by its coefficients on
//! `x0^(a-s) x1^s x2^(b-t) x3^t`, index `s*(b+1) + t`. A univariate form
//! of degree `e` in `x0, x1` is stored as its affine polynomial in
//! `x = x1/x0`: coefficient `s` belongs to `x0^(e-s) x1^s`.

use crate::scheme::BiDegree;

use super::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    pub bidegree: BiDegree,
    pub coeffs: Vec<u32>,
}

impl BiPoly {
    pub fn zero(d: BiDegree) -> Self {
        BiPoly {
            bidegree: d,
            coeffs: vec![0; d.dim()],
        }
    }

    pub fn one() -> Self {
        BiPoly {
            bidegree: BiDegree::ZERO,
            coeffs: vec![1],
        }
    }

    /// `f(x0,x1) * g(x2,x3)` from the two coefficient lists.
    pub fn tensor(f: &[u32], g: &[u32], field: PrimeField) -> Self {
        let d = BiDegree::new(f.len() as u32 - 1, g.len() as u32 - 1);
        let mut coeffs = Vec::with_capacity(d.dim());
        for &x in f {
            coeffs.extend(g.iter().map(|&y| field.mul(x, y)));
        }
        BiPoly {
            bidegree: d,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &BiPoly, field: PrimeField) -> BiPoly {
        let d = BiDegree::new(
            self.bidegree.a + other.bidegree.a,
            self.bidegree.b + other.bidegree.b,
        );
        let (b1, b2, b) = (
            self.bidegree.b as usize + 1,
            other.bidegree.b as usize + 1,
            d.b as usize + 1,
        );
        let mut out = vec![0u32; d.dim()];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let (s, t) = (i / b1, i % b1);
            for (j, &y) in other.coeffs.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let (s2, t2) = (j / b2, j % b2);
                let k = (s + s2) * b + t + t2;
                out[k] = field.add(out[k], field.mul(x, y));
            }
        }
        BiPoly {
            bidegree: d,
            coeffs: out,
        }
    }

    /// Coefficient vector of `self * x1^s x3^t` times `x0, x2` powers, placed in bidegree `target`.
    pub fn place(&self, s: u32, t: u32, target: BiDegree) -> Vec<u32> {
        let mut out = vec![0u32; target.dim()];
        self.place_into(s, t, target, &mut out);
        out
    }

    pub fn place_into(&self, s: u32, t: u32, target: BiDegree, out: &mut [u32]) {
        let src_b = self.bidegree.b as usize + 1;
        let dst_b = target.b as usize + 1;
        debug_assert!(self.bidegree.a + s <= target.a && self.bidegree.b + t <= target.b);
        for i in 0..=self.bidegree.a as usize {
            let src = &self.coeffs[i * src_b..(i + 1) * src_b];
            let start = (i + s as usize) * dst_b + t as usize;
            out[start..start + src_b].copy_from_slice(src);
        }
    }

    /// All `self * x0^.. x1^s x2^.. x3^t` landing in bidegree `target`.
    pub fn multiples(&self, target: BiDegree) -> impl Iterator<Item = Vec<u32>> + '_ {
        let ea = target.a.checked_sub(self.bidegree.a);
        let eb = target.b.checked_sub(self.bidegree.b);
        let (ea, eb) = match (ea, eb) {
            (Some(x), Some(y)) => (x as i64, y as i64),
            _ => (-1, -1),
        };
        (0..=ea).flat_map(move |s| (0..=eb).map(move |t| self.place(s as u32, t as u32, target)))
    }
}

/// Product of `(x - r)` over the roots, low degree first.
pub fn from_roots(roots: &[u32], field: PrimeField) -> Vec<u32> {
    let mut p = vec![1u32];
    for &r in roots {
        let mut next = vec![0u32; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.sub(next[i], field.mul(c, r));
        }
        p = next;
    }
    p
}

pub fn poly_mul(f: &[u32], g: &[u32], field: PrimeField) -> Vec<u32> {
    let mut out = vec![0u32; f.len() + g.len() - 1];
    for (i, &x) in f.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in g.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

pub fn poly_pow(f: &[u32], e: u32, field: PrimeField) -> Vec<u32> {
    let mut r = vec![1u32];
    for _ in 0..e {
        r = poly_mul(&r, f, field);
    }
    r
}

/// `f(x) * x^s` padded to degree `deg`.
pub fn shifted(f: &[u32], s: usize, deg: usize) -> Vec<u32> {
    let mut out = vec![0u32; deg + 1];
    out[s..s + f.len()].copy_from_slice(f);
    out
}
