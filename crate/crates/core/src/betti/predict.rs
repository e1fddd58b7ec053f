//! Closed forms and mapping-cone recursions for the Betti tables.
//!
//! Shifts are stored as positive bidegrees: `(a, b)` stands for `R(-a,-b)`.

use crate::error::{Error, Result};
use crate::scheme::{classify, normalize, reduce_step, AciParams, BaseCaseTag, BiDegree};

use super::table::{BettiTable, DegreeSet};

/// Index tuple `(a, b, c, d)` mapped to the shift `(a*alpha1 + b*alpha2, c*beta1 + d*beta2)`.
pub type IndexTuple = [u32; 4];

fn pos(x: i64) -> u32 {
    x.max(0) as u32
}

/// `I(P)^m` for a single point.
pub fn resolve_single_fat_point(m: u32) -> BettiTable {
    if m == 0 {
        return BettiTable::unit();
    }
    let mut t = BettiTable::default();
    for s in 0..=m {
        t.beta0.add((m - s, s));
    }
    for s in 1..=m {
        t.beta1.add((m + 1 - s, s));
    }
    t
}

/// Fat points on `CI(alpha, beta1 + beta2)` with multiplicity `m11` on the
/// first `beta1` columns and `m12` on the remaining `beta2`.
pub fn resolve_ci_column_blocks(
    alpha: u32,
    beta1: u32,
    beta2: u32,
    m11: u32,
    m12: u32,
) -> BettiTable {
    if m11 == 0 && m12 == 0 {
        return BettiTable::unit();
    }
    let top = m11.max(m12) as i64;
    let (m11, m12) = (m11 as i64, m12 as i64);
    let col = |s: i64| beta1 * pos(m11 - s) + beta2 * pos(m12 - s);
    let mut t = BettiTable::default();
    for s in 0..=top {
        t.beta0.add((alpha * s as u32, col(s)));
    }
    for s in 1..=top {
        t.beta1.add((alpha * s as u32, col(s - 1)));
    }
    t
}

/// Homogeneous fat points of multiplicity `m` on `CI(alpha, beta)`.
pub fn resolve_ci_homogeneous(alpha: u32, beta: u32, m: u32) -> BettiTable {
    if m == 0 {
        return BettiTable::unit();
    }
    let mut t = BettiTable::default();
    for i in 0..=m {
        t.beta0.add((i * alpha, (m - i) * beta));
    }
    for i in 0..m {
        t.beta1.add(((i + 1) * alpha, (m - i) * beta));
    }
    t
}

/// Two fat points `m12 P12 + m21 P21` not on a common line.
///
/// The second syzygies sit at `min(a-1, b-1, s)` with `s = min(m12, m21)`;
/// this is what the disjoint-CI count gives at unit block sizes.
pub fn resolve_two_fat_points(m12: u32, m21: u32) -> BettiTable {
    let s = m12.min(m21) as i64;
    let n = (m12 + m21) as i64;
    let mut t = BettiTable::default();
    let put = |set: &mut DegreeSet, a: i64, b: i64, k: i64| {
        if k > 0 {
            set.insert(BiDegree::new(a as u32, b as u32), k as usize);
        }
    };
    for a in 0..=n {
        let b = n - a;
        put(&mut t.beta0, a, b, a.min(b).min(s) + 1);
    }
    for a in 1..=n {
        let b = n + 1 - a;
        put(
            &mut t.beta1,
            a,
            b,
            a.min(b - 1).min(s) + (a - 1).min(b).min(s) + 1,
        );
    }
    for a in 2..=n {
        let b = n + 2 - a;
        put(&mut t.beta2, a, b, (a - 1).min(b - 1).min(s));
    }
    t
}

/// The degree sets added by one step of the three-point recursion.
pub fn aset_w(k: u8, m11: u32, m12: u32, m21: u32) -> DegreeSet {
    let top = m12.saturating_sub(m11);
    let sum = m11 + m21 + top;
    match k {
        0 => (0..=top).map(|b| (sum - b, b)).collect(),
        1 => (1..=top).map(|b| (sum + 1 - b, b)).collect(),
        2 => (2..=top + 1).map(|b| (sum + 2 - b, b)).collect(),
        _ => DegreeSet::new(),
    }
}

/// `m11 P11 + m12 P12 + m21 P21`.
pub fn resolve_three_points(m11: u32, m12: u32, m21: u32) -> BettiTable {
    if m21 > m12 {
        return resolve_three_points(m11, m21, m12).transposed();
    }
    if m21 == 0 {
        return resolve_ci_column_blocks(1, 1, 1, m11, m12);
    }
    if m11 == 0 {
        return resolve_two_fat_points(m12, m21);
    }
    let mut t = resolve_three_points(m11 - 1, m12, m21 - 1).shifted(0, 1);
    t.beta0.extend(&aset_w(0, m11, m12, m21));
    t.beta1.extend(&aset_w(1, m11, m12, m21).scaled(2));
    t.beta1.add((m11 + m21, m12.saturating_sub(m11) + 1));
    t.beta2.extend(&aset_w(2, m11, m12, m21));
    t
}

/// Index tuples for two disjoint fat complete intersections.
pub fn dset(k: u8, m12: u32, m21: u32) -> Vec<IndexTuple> {
    // (a + d, b + c) targets for each branch
    let branches: &[(u32, u32)] = match k {
        0 => &[(0, 0)],
        1 => &[(1, 0), (0, 1)],
        2 => &[(1, 1)],
        _ => &[],
    };
    let mut out = Vec::new();
    for &(dx, dy) in branches {
        let (ad, bc) = (m12 + dx, m21 + dy);
        for a in 0..=m12 {
            let Some(d) = ad.checked_sub(a).filter(|&d| d <= m12) else {
                continue;
            };
            for b in 0..=m21 {
                let Some(c) = bc.checked_sub(b).filter(|&c| c <= m21) else {
                    continue;
                };
                out.push([a, b, c, d]);
            }
        }
    }
    out
}

fn image(tuples: &[IndexTuple], alpha1: u32, alpha2: u32, beta1: u32, beta2: u32) -> DegreeSet {
    tuples
        .iter()
        .map(|&[a, b, c, d]| (a * alpha1 + b * alpha2, c * beta1 + d * beta2))
        .collect()
}

/// Disjoint union of `m12` on `CI(alpha1, beta2)` and `m21` on `CI(alpha2, beta1)`.
pub fn resolve_disjoint_ci(
    alpha1: u32,
    alpha2: u32,
    beta1: u32,
    beta2: u32,
    m12: u32,
    m21: u32,
) -> BettiTable {
    if m12 == 0 && m21 == 0 {
        return BettiTable::unit();
    }
    BettiTable {
        beta0: image(&dset(0, m12, m21), alpha1, alpha2, beta1, beta2),
        beta1: image(&dset(1, m12, m21), alpha1, alpha2, beta1, beta2),
        beta2: image(&dset(2, m12, m21), alpha1, alpha2, beta1, beta2),
    }
}

/// Degrees contributed by one step `Z1 -> Z` of the general recursion.
pub fn aset_z(k: u8, p: &AciParams) -> DegreeSet {
    let top = p.m12.saturating_sub(p.m11);
    let first = |i: u32| p.alpha1 * (p.m11 + i) + p.alpha2 * p.m21;
    match k {
        0 => (0..=top).map(|i| (first(i), (top - i) * p.beta2)).collect(),
        1 => (0..top)
            .map(|i| (first(i + 1), (top - i) * p.beta2))
            .collect(),
        _ => DegreeSet::new(),
    }
}

/// Predicted minimal resolution of the fat ACI `Z`.
///
/// Non-normalized input is transposed, resolved, and mapped back.
pub fn resolve_fat_aci(p: &AciParams) -> BettiTable {
    let (q, rec) = normalize(p);
    let t = resolve_normalized(&q);
    if rec.transposed {
        t.transposed()
    } else {
        t
    }
}

fn resolve_normalized(q: &AciParams) -> BettiTable {
    match classify(q) {
        BaseCaseTag::EQUAL_MU_CI => resolve_ci_homogeneous(q.alpha1, q.beta2, q.m12),
        BaseCaseTag::ACM_COLUMN_BLOCKS => {
            resolve_ci_column_blocks(q.alpha1, q.beta1, q.beta2, q.m11, q.m12)
        }
        BaseCaseTag::DISJOINT_CI => {
            resolve_disjoint_ci(q.alpha1, q.alpha2, q.beta1, q.beta2, q.m12, q.m21)
        }
        BaseCaseTag::GENERAL => {
            let inner = resolve_normalized(&reduce_step(q)).shifted(0, q.beta1);
            let a0 = aset_z(0, q);
            let a1 = aset_z(1, q);
            let mut t = inner;
            t.beta0.extend(&a0);
            t.beta1.extend(&a0.shifted(0, q.beta1));
            t.beta1.extend(&a1);
            t.beta2.extend(&a1.shifted(0, q.beta1));
            t
        }
    }
}

/// Index tuples for `m11 = m21 = n`, `m12 = m`.
pub fn bset(k: u8, n: u32, m: u32) -> Vec<IndexTuple> {
    let mut out = Vec::new();
    match k {
        0 => {
            for b in 0..=n {
                for a in b..=m {
                    out.push([a, b, n - b, m - a]);
                }
            }
        }
        1 => {
            for b in 0..=n {
                for a in b + 1..=m {
                    out.push([a, b, n - b, m + 1 - a]);
                }
            }
            for b in 1..=n {
                for a in b..=m {
                    out.push([a, b, n + 1 - b, m - a]);
                }
            }
        }
        2 => {
            for b in 1..=n {
                for a in b + 1..=m {
                    out.push([a, b, n + 1 - b, m + 1 - a]);
                }
            }
        }
        _ => {}
    }
    out
}

/// Closed form for `m11 = m21 = n <= m12 = m`.
pub fn resolve_equal_multiplicity(p: &AciParams) -> Result<BettiTable> {
    if p.m11 != p.m21 || p.m21 > p.m12 {
        return Err(Error::Precondition(format!(
            "need m11 = m21 <= m12, got {}",
            p
        )));
    }
    let (n, m) = (p.m11, p.m12);
    if n == 0 && m == 0 {
        return Ok(BettiTable::unit());
    }
    let img = |k| image(&bset(k, n, m), p.alpha1, p.alpha2, p.beta1, p.beta2);
    Ok(BettiTable {
        beta0: img(0),
        beta1: img(1),
        beta2: img(2),
    })
}

/// Homogeneous fat ACI: every point of the support with multiplicity `m`.
pub fn resolve_homogeneous_aci(p: &AciParams, m: u32) -> BettiTable {
    resolve_equal_multiplicity(&p.with_mults(m, m, m)).expect("n = m satisfies the hypotheses")
}

/// Triple points on an ACI support with row tuple `(a^c, b^d)`, `a > b`.
///
/// Each shift is `R(-(p*c + q*d), -(r*a + s*b))`, listed as `[p, q, r, s]`.
pub fn resolve_aci_triple(a: u32, b: u32, c: u32, d: u32) -> BettiTable {
    const F0: [[u32; 4]; 10] = [
        [3, 3, 0, 0],
        [3, 2, 0, 1],
        [2, 2, 1, 0],
        [3, 1, 0, 2],
        [2, 1, 1, 1],
        [1, 1, 2, 0],
        [3, 0, 0, 3],
        [2, 0, 1, 2],
        [1, 0, 2, 1],
        [0, 0, 3, 0],
    ];
    const F1: [[u32; 4]; 12] = [
        [1, 0, 3, 0],
        [2, 0, 2, 1],
        [3, 0, 1, 2],
        [1, 1, 2, 1],
        [2, 1, 1, 2],
        [3, 1, 0, 3],
        [2, 1, 2, 0],
        [3, 1, 1, 1],
        [2, 2, 1, 1],
        [3, 2, 0, 2],
        [3, 2, 1, 0],
        [3, 3, 0, 1],
    ];
    const F2: [[u32; 4]; 3] = [[3, 2, 1, 1], [3, 1, 1, 2], [2, 1, 2, 1]];
    let img = |rows: &[[u32; 4]]| -> DegreeSet {
        rows.iter()
            .map(|&[p, q, r, s]| (p * c + q * d, r * a + s * b))
            .collect()
    };
    BettiTable {
        beta0: img(&F0),
        beta1: img(&F1),
        beta2: img(&F2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(entries: &[((u32, u32), usize)]) -> DegreeSet {
        entries
            .iter()
            .map(|&(d, n)| (BiDegree::from(d), n))
            .collect()
    }

    fn table(
        b0: &[((u32, u32), usize)],
        b1: &[((u32, u32), usize)],
        b2: &[((u32, u32), usize)],
    ) -> BettiTable {
        BettiTable {
            beta0: set(b0),
            beta1: set(b1),
            beta2: set(b2),
        }
    }

    #[test]
    fn single_point() {
        assert_eq!(
            resolve_single_fat_point(1),
            table(&[((1, 0), 1), ((0, 1), 1)], &[((1, 1), 1)], &[])
        );
        assert_eq!(
            resolve_single_fat_point(2),
            table(
                &[((2, 0), 1), ((1, 1), 1), ((0, 2), 1)],
                &[((2, 1), 1), ((1, 2), 1)],
                &[]
            )
        );
        assert_eq!(resolve_single_fat_point(0), BettiTable::unit());
    }

    #[test]
    fn column_blocks() {
        assert_eq!(
            resolve_ci_column_blocks(1, 1, 1, 1, 1),
            table(&[((0, 2), 1), ((1, 0), 1)], &[((1, 2), 1)], &[])
        );
        assert_eq!(
            resolve_ci_column_blocks(2, 1, 1, 1, 1),
            table(&[((0, 2), 1), ((2, 0), 1)], &[((2, 2), 1)], &[])
        );
        assert_eq!(
            resolve_ci_column_blocks(1, 1, 1, 0, 2),
            resolve_single_fat_point(2)
        );
        assert_eq!(resolve_ci_column_blocks(3, 2, 5, 0, 0), BettiTable::unit());
    }

    #[test]
    fn homogeneous_ci() {
        assert_eq!(resolve_ci_homogeneous(1, 1, 1), resolve_single_fat_point(1));
        assert_eq!(
            resolve_ci_homogeneous(2, 3, 1),
            table(&[((0, 3), 1), ((2, 0), 1)], &[((2, 3), 1)], &[])
        );
        assert_eq!(resolve_ci_homogeneous(1, 1, 2), resolve_single_fat_point(2));
        for (a, b, m) in [(1, 2, 3), (3, 1, 2), (2, 2, 4)] {
            assert_eq!(
                resolve_ci_homogeneous(a, b, m),
                resolve_ci_column_blocks(a, 1, b, 0, m)
            );
        }
    }

    #[test]
    fn two_points() {
        let t = resolve_two_fat_points(4, 1);
        assert_eq!(
            t,
            table(
                &[
                    ((5, 0), 1),
                    ((4, 1), 2),
                    ((3, 2), 2),
                    ((2, 3), 2),
                    ((1, 4), 2),
                    ((0, 5), 1)
                ],
                &[
                    ((5, 1), 2),
                    ((4, 2), 3),
                    ((3, 3), 3),
                    ((2, 4), 3),
                    ((1, 5), 2)
                ],
                &[((5, 2), 1), ((4, 3), 1), ((3, 4), 1), ((2, 5), 1)],
            )
        );
        assert_eq!(resolve_two_fat_points(1, 0), resolve_single_fat_point(1));
        let t = resolve_two_fat_points(2, 2);
        assert_eq!(
            t,
            table(
                &[
                    ((4, 0), 1),
                    ((3, 1), 2),
                    ((2, 2), 3),
                    ((1, 3), 2),
                    ((0, 4), 1)
                ],
                &[((4, 1), 2), ((3, 2), 4), ((2, 3), 4), ((1, 4), 2)],
                &[((4, 2), 1), ((3, 3), 2), ((2, 4), 1)],
            )
        );
        assert_eq!(t.rank(), 1);
    }

    #[test]
    fn three_point_sets() {
        assert_eq!(
            aset_w(0, 2, 4, 3),
            [(7, 0), (6, 1), (5, 2)].into_iter().collect()
        );
        assert_eq!(aset_w(2, 2, 4, 3), [(7, 2), (6, 3)].into_iter().collect());
        assert!(aset_w(1, 3, 2, 1).is_empty());
    }

    #[test]
    fn disjoint_sets() {
        for m12 in 0..5 {
            for m21 in 0..5 {
                assert_eq!(dset(0, m12, m21).len() as u32, (m12 + 1) * (m21 + 1));
                assert_eq!(dset(2, m12, m21).len() as u32, m12 * m21);
            }
        }
        assert!(dset(2, 3, 0).is_empty());
        let t = resolve_disjoint_ci(2, 1, 2, 2, 4, 2);
        assert!(t.beta0.get(BiDegree::new(8, 4)) >= 1);
        assert_eq!(t.rank(), 1);
    }

    #[test]
    fn worked_example_sets() {
        let p = AciParams::new([2, 1], [2, 2], [2, 4, 3]).unwrap();
        assert_eq!(
            aset_z(0, &p),
            [(7, 4), (9, 2), (11, 0)].into_iter().collect()
        );
        assert_eq!(aset_z(1, &p), [(9, 4), (11, 2)].into_iter().collect());
        let q = p.with_mults(4, 3, 1);
        assert!(aset_z(1, &q).is_empty());
        assert_eq!(aset_z(0, &q), [(9, 0)].into_iter().collect());
    }

    #[test]
    fn equal_multiplicity_sets() {
        assert_eq!(
            bset(0, 0, 3),
            (0..=3).map(|a| [a, 0, 0, 3 - a]).collect::<Vec<_>>()
        );
        for m in 0..6 {
            assert_eq!(bset(0, m, m).len() as u32, (m + 1) * (m + 2) / 2);
        }
        assert_eq!(bset(0, 1, 2).len(), 5);
        assert!(resolve_equal_multiplicity(&AciParams::three_points(2, 3, 1)).is_err());
    }
}
