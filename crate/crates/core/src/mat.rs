//! Exact integer and rational matrix routines used by the lattice layer.
//!
//! Everything here works over `BigInt`/`BigRational`; no floating point
//! anywhere. Ranks stay small (at most 23 for the full second-cohomology
//! lattice), so the simple classical algorithms are the right tool.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IMat = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Fraction-free Bareiss determinant.
pub fn determinant(m: &IMat) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Smith normal form `u * m * v = d` with unimodular `u`, `v`.
/// Returns (diagonal of d, u, v).
pub fn smith_normal_form(m: &IMat) -> (Vec<BigInt>, IMat, IMat) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let dim = rows.min(cols);

    for t in 0..dim {
        loop {
            // Pivot: smallest nonzero entry in the trailing block.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && pivot
                            .map(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                let d = (0..dim).map(|i| a[i][i].clone()).collect();
                return (d, u, v);
            };
            if pi != t {
                a.swap(pi, t);
                u.swap(pi, t);
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
                for row in v.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let mut dirty = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    if !q.is_zero() {
                        for j in 0..cols {
                            let s = &a[t][j] * &q;
                            a[i][j] -= s;
                        }
                        for j in 0..rows {
                            let s = &u[t][j] * &q;
                            u[i][j] -= s;
                        }
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    if !q.is_zero() {
                        for i in 0..rows {
                            let s = &a[i][t] * &q;
                            a[i][j] -= s;
                            let s = &v[i][t] * &q;
                            v[i][j] -= s;
                        }
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        // Divisibility fix-up: fold any entry the pivot does not divide
        // into the pivot column and redo the elimination.
        let mut retry = false;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if !(&a[i][j] % &a[t][t]).is_zero() {
                    for r in 0..rows {
                        let s = a[r][j].clone();
                        a[r][t] += s;
                        let s = v[r][j].clone();
                        v[r][t] += s;
                    }
                    retry = true;
                    break 'scan;
                }
            }
        }
        if retry {
            // Re-run this step; the loop above terminates because the
            // pivot magnitude strictly decreases.
            return smith_restart(a, u, v, t);
        }
        if a[t][t].is_negative() {
            for j in 0..cols {
                a[t][j] = -a[t][j].clone();
            }
            for j in 0..rows {
                u[t][j] = -u[t][j].clone();
            }
        }
    }
    let d = (0..dim).map(|i| a[i][i].clone()).collect();
    (d, u, v)
}

fn smith_restart(a: IMat, u: IMat, v: IMat, _t: usize) -> (Vec<BigInt>, IMat, IMat) {
    // Restart with the accumulated transforms: compose results.
    let (d, u2, v2) = smith_normal_form(&a);
    (d, mat_mul(&u2, &u), mat_mul(&v, &v2))
}

pub fn mat_mul(a: &IMat, b: &IMat) -> IMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

/// Exact inverse of a rational matrix by Gauss-Jordan elimination.
/// Returns `None` when singular.
pub fn invert_rational(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] = &a[col][j] / &p;
            inv[col][j] = &inv[col][j] / &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let s = &a[col][j] * &f;
                    a[r][j] -= s;
                    let s = &inv[col][j] * &f;
                    inv[r][j] -= s;
                }
            }
        }
    }
    Some(inv)
}

pub fn to_rational(m: &IMat) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|row| row.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect()
}

/// Signs of the diagonal after an exact congruent diagonalization of a
/// symmetric rational matrix. Returns (positive, negative, zero) counts.
pub fn congruent_signature(m: &IMat) -> (usize, usize, usize) {
    let n = m.len();
    let mut a = to_rational(m);
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for k in 0..n {
        if a[k][k].is_zero() {
            // Prefer swapping in a nonzero diagonal entry; otherwise mix in
            // a row with a nonzero off-diagonal pairing (2x2 block pivot).
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                swap_basis(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                add_basis(&mut a, k, j);
            } else {
                zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for j in k + 1..n {
            if !a[k][j].is_zero() {
                let f = &a[k][j] / &pivot;
                // basis_j -= f * basis_k
                for t in 0..n {
                    let s = &a[k][t] * &f;
                    a[j][t] -= s;
                }
                for t in 0..n {
                    let s = &a[t][k] * &f;
                    a[t][j] -= s;
                }
            }
        }
    }
    (pos, neg, zero)
}

fn swap_basis(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// basis_i += basis_j (congruent transformation).
fn add_basis(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    let n = a.len();
    for t in 0..n {
        let s = a[j][t].clone();
        a[i][t] += s;
    }
    for t in 0..n {
        let s = a[t][j].clone();
        a[t][i] += s;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IMat {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Cofactor-expansion determinant: the independent cross-check for
    /// the Bareiss implementation.
    fn det_cofactor(a: &IMat) -> BigInt {
        let n = a.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return a[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            if a[0][j].is_zero() {
                continue;
            }
            let minor: IMat = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &a[0][j] * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let cases = vec![
            m(&[&[0, 1], &[1, 0]]),
            m(&[&[6, 2], &[2, -2]]),
            m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            m(&[&[3, 1, 4, 1], &[1, 5, 9, 2], &[4, 9, 2, 6], &[1, 2, 6, 5]]),
            m(&[&[1, 2], &[2, 4]]),
        ];
        for c in cases {
            assert_eq!(determinant(&c), det_cofactor(&c));
        }
    }

    #[test]
    fn snf_diagonal_divides_and_matches_det() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let (d, u, v) = smith_normal_form(&a);
        for w in d.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        let prod: BigInt = d.iter().product();
        assert_eq!(prod.abs(), determinant(&a).abs());
        // u * a * v is the diagonal matrix.
        let uav = mat_mul(&mat_mul(&u, &a), &v);
        for (i, row) in uav.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i == j {
                    assert_eq!(x, &d[i]);
                } else {
                    assert!(x.is_zero());
                }
            }
        }
        assert_eq!(determinant(&u).abs(), BigInt::one());
        assert_eq!(determinant(&v).abs(), BigInt::one());
    }

    #[test]
    fn signature_of_hyperbolic_plane() {
        assert_eq!(congruent_signature(&m(&[&[0, 1], &[1, 0]])), (1, 1, 0));
    }

    #[test]
    fn rational_inverse_round_trip() {
        let a = to_rational(&m(&[&[6, 10], &[10, 8]]));
        let inv = invert_rational(&a).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let s: BigRational = (0..2).map(|t| &a[i][t] * &inv[t][j]).sum();
                let expect = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(s, expect);
            }
        }
    }
}
