//! Concrete lines and the product-of-lines generators.

use crate::error::Result;
use crate::scheme::{AciParams, BiDegree};

use super::field::{FieldConfig, PrimeField};
use super::poly::{from_roots, poly_mul, poly_pow, BiPoly};

/// Scalars `h_i`, `v_j` realizing `H_i = x1 - h_i x0` and `V_j = x3 - v_j x2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineArrangement {
    pub field: PrimeField,
    pub h: Vec<u32>,
    pub v: Vec<u32>,
}

impl LineArrangement {
    pub fn new(cfg: &FieldConfig, rows: usize, cols: usize) -> Result<Self> {
        let (h, v) = cfg.scalars(rows, cols)?;
        Ok(LineArrangement {
            field: cfg.field()?,
            h,
            v,
        })
    }

    /// Swap the roles of the two factors.
    pub fn transpose(&self) -> Self {
        LineArrangement {
            field: self.field,
            h: self.v.clone(),
            v: self.h.clone(),
        }
    }

    /// `Q1 = H_1 ... H_alpha1` and `Q2 = H_{alpha1+1} ... H_r` as affine polynomials.
    pub fn q(&self, alpha1: usize) -> (Vec<u32>, Vec<u32>) {
        (
            from_roots(&self.h[..alpha1], self.field),
            from_roots(&self.h[alpha1..], self.field),
        )
    }

    /// `U1 = V_1 ... V_beta1` and `U2 = V_{beta1+1} ... V_c`.
    pub fn u(&self, beta1: usize) -> (Vec<u32>, Vec<u32>) {
        (
            from_roots(&self.v[..beta1], self.field),
            from_roots(&self.v[beta1..], self.field),
        )
    }
}

/// The block forms `Q1, Q2, U1, U2` of a parameter set.
#[derive(Debug, Clone)]
pub struct BlockForms {
    pub field: PrimeField,
    pub q1: Vec<u32>,
    pub q2: Vec<u32>,
    pub u1: Vec<u32>,
    pub u2: Vec<u32>,
}

impl BlockForms {
    pub fn new(params: &AciParams, arr: &LineArrangement) -> Self {
        let (q1, q2) = arr.q(params.alpha1 as usize);
        let (u1, u2) = arr.u(params.beta1 as usize);
        BlockForms {
            field: arr.field,
            q1,
            q2,
            u1,
            u2,
        }
    }

    /// `Q1^a1 Q2^a2` and `U1^b1 U2^b2`.
    pub fn factors(&self, e: [u32; 4]) -> (Vec<u32>, Vec<u32>) {
        let f = self.field;
        (
            poly_mul(
                &poly_pow(&self.q1, e[0], f),
                &poly_pow(&self.q2, e[1], f),
                f,
            ),
            poly_mul(
                &poly_pow(&self.u1, e[2], f),
                &poly_pow(&self.u2, e[3], f),
                f,
            ),
        )
    }

    pub fn realize(&self, e: [u32; 4]) -> BiPoly {
        let (x, y) = self.factors(e);
        BiPoly::tensor(&x, &y, self.field)
    }
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub exponents: [u32; 4],
    pub poly: BiPoly,
}

/// Products `Q1^a1 Q2^a2 U1^b1 U2^b2` satisfying the three block constraints.
#[derive(Debug, Clone)]
pub struct GeneratorFamily {
    pub params: AciParams,
    pub forms: BlockForms,
    pub members: Vec<FamilyMember>,
}

impl GeneratorFamily {
    pub fn exponents(&self) -> Vec<[u32; 4]> {
        self.members.iter().map(|m| m.exponents).collect()
    }
}

/// Whether `e = (a1,a2,b1,b2)` satisfies the `k`-fold constraints.
pub fn satisfies(e: [u32; 4], mults: [u32; 3], k: u32) -> bool {
    let [a1, a2, b1, b2] = e;
    let [m11, m12, m21] = mults;
    a1 + b1 >= k * m11 && a1 + b2 >= k * m12 && a2 + b1 >= k * m21
}

/// Bidegree of the realized product.
pub fn exponent_degree(e: [u32; 4], p: &AciParams) -> BiDegree {
    BiDegree::new(
        e[0] * p.alpha1 + e[1] * p.alpha2,
        e[2] * p.beta1 + e[3] * p.beta2,
    )
}

/// Every tuple satisfying the `k`-fold constraints inside the box that
/// contains all minimal solutions.
pub fn constrained_tuples(mults: [u32; 3], k: u32) -> Vec<[u32; 4]> {
    let [m11, m12, m21] = mults.map(|x| x * k);
    let mut out = Vec::new();
    for a1 in 0..=m11.max(m12) {
        for a2 in 0..=m21 {
            for b1 in 0..=m11.max(m21) {
                for b2 in 0..=m12 {
                    let e = [a1, a2, b1, b2];
                    if satisfies(e, mults, k) {
                        out.push(e);
                    }
                }
            }
        }
    }
    out
}

fn dominated(x: &[u32; 4], y: &[u32; 4]) -> bool {
    x != y && (0..4).all(|i| y[i] <= x[i])
}

/// Componentwise-minimal elements, sorted.
pub fn minimal_tuples(mut v: Vec<[u32; 4]>) -> Vec<[u32; 4]> {
    v.sort();
    v.dedup();
    let keep: Vec<bool> = v
        .iter()
        .map(|x| !v.iter().any(|y| dominated(x, y)))
        .collect();
    v.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(x, _)| x)
        .collect()
}

/// Minimal exponent tuples of the `m`-fold sums of `base`.
pub fn power_tuples(base: &[[u32; 4]], m: u32) -> Vec<[u32; 4]> {
    let mut acc = vec![[0u32; 4]];
    for _ in 0..m {
        let mut next = Vec::with_capacity(acc.len() * base.len());
        for x in &acc {
            for y in base {
                next.push([x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]);
            }
        }
        acc = minimal_tuples(next);
    }
    acc
}

/// Seeded line arrangement plus the product-of-lines family for `params`.
pub fn realize(
    params: &AciParams,
    cfg: &FieldConfig,
) -> Result<(LineArrangement, GeneratorFamily)> {
    params.validate()?;
    let rows = (params.alpha1 + params.alpha2) as usize;
    let cols = (params.beta1 + params.beta2) as usize;
    let arr = LineArrangement::new(cfg, rows, cols)?;
    let forms = BlockForms::new(params, &arr);
    let members = minimal_tuples(constrained_tuples(params.mults(), 1))
        .into_iter()
        .map(|e| FamilyMember {
            exponents: e,
            poly: forms.realize(e),
        })
        .collect();
    Ok((
        arr,
        GeneratorFamily {
            params: *params,
            forms,
            members,
        },
    ))
}
