use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `Z/p` for a prime `p < 2^16`, so that `a*b + c` never overflows `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 16 {
            return Err(Error::FieldTooSmall { p, needed: 0 });
        }
        Ok(PrimeField { p })
    }

    #[inline(always)]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline(always)]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline(always)]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline(always)]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, (self.p - 2) as u64)
    }

    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// `dst += f * src`, entrywise.
    #[inline]
    pub fn axpy(self, dst: &mut [u32], src: &[u32], f: u32) {
        let p = self.p;
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = (*d + f * s) % p;
        }
    }

    pub fn scale(self, v: &mut [u32], f: u32) {
        for x in v {
            *x = self.mul(*x, f);
        }
    }

    /// Rows `0..=n` of Pascal's triangle mod p.
    pub fn binomials(self, n: usize) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![1u32; i + 1];
            for j in 1..i {
                row[j] = self.add(rows[i - 1][j - 1], rows[i - 1][j]);
            }
            rows.push(row);
        }
        rows
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime modulus and seed for the scalars of the line arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldConfig {
    pub p: u32,
    pub seed: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { p: 32003, seed: 0 }
    }
}

impl FieldConfig {
    pub fn new(p: u32, seed: u64) -> Self {
        FieldConfig { p, seed }
    }

    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.p)
    }

    /// `rows` distinct row scalars and `cols` distinct column scalars.
    ///
    /// Seed 0 gives `1..=rows` and `1..=cols`; other seeds draw from ChaCha8.
    pub fn scalars(&self, rows: usize, cols: usize) -> Result<(Vec<u32>, Vec<u32>)> {
        let field = self.field()?;
        let needed = (rows + cols) as u32;
        if self.p <= needed {
            return Err(Error::FieldTooSmall { p: self.p, needed });
        }
        if self.seed == 0 {
            return Ok(((1..=rows as u32).collect(), (1..=cols as u32).collect()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut draw = |n: usize| {
            let mut out: Vec<u32> = Vec::with_capacity(n);
            while out.len() < n {
                let x = rng.next_u32() % field.p();
                if !out.contains(&x) {
                    out.push(x);
                }
            }
            out
        };
        let h = draw(rows);
        let v = draw(cols);
        Ok((h, v))
    }
}
