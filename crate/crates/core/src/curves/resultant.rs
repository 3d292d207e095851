//! Sylvester resultants and the cubic discriminant over any [`Ring`].

use super::{CurveError, Ring};

/// Sylvester matrix of `f` (formal degree `n`) and `g` (formal degree `m`),
/// coefficients given leading term first. The first `m` rows hold shifted
/// copies of `f`, the last `n` rows copies of `g`.
pub fn sylvester_matrix<R: Ring>(f: &[R], g: &[R]) -> Result<Vec<Vec<R>>, CurveError> {
    if f.len() < 2 || g.len() < 2 {
        return Err(CurveError::NonPositiveDegree);
    }
    if f[0].is_zero() && g[0].is_zero() {
        return Err(CurveError::ZeroLeadingCoefficients);
    }
    let (n, m) = (f.len() - 1, g.len() - 1);
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for (src, count) in [(f, m), (g, n)] {
        for shift in 0..count {
            let mut row = vec![R::zero(); size];
            for (j, c) in src.iter().enumerate() {
                row[shift + j] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Determinant of the Sylvester matrix. With this row order
/// `Res(x − 1, x + 1) = 2`.
pub fn sylvester_resultant<R: Ring>(f: &[R], g: &[R]) -> Result<R, CurveError> {
    Ok(determinant(&sylvester_matrix(f, g)?))
}

/// Cofactor expansion along the first column, skipping zero entries. Needs
/// no division, so it works over polynomial rings.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let rows: Vec<usize> = (0..n).collect();
    minor(m, &rows, 0)
}

fn minor<R: Ring>(m: &[Vec<R>], rows: &[usize], col: usize) -> R {
    if rows.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for (k, &r) in rows.iter().enumerate() {
        let entry = &m[r][col];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = entry.mul(&minor(m, &rest, col + 1));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Discriminant of `a0·x³ + a1·x² + a2·x + a3`:
/// `a1²a2² − 4a0a2³ − 4a1³a3 − 27a0²a3² + 18a0a1a2a3`.
pub fn cubic_discriminant<R: Ring>(a0: &R, a1: &R, a2: &R, a3: &R) -> R {
    let sq = |a: &R| a.mul(a);
    let cube = |a: &R| a.mul(a).mul(a);
    let k = R::from_i64;
    sq(a1)
        .mul(&sq(a2))
        .sub(&k(4).mul(a0).mul(&cube(a2)))
        .sub(&k(4).mul(&cube(a1)).mul(a3))
        .sub(&k(27).mul(&sq(a0)).mul(&sq(a3)))
        .add(&k(18).mul(a0).mul(a1).mul(a2).mul(a3))
}
