//! Small dense float matrices (const-generic over the dimension) plus the
//! scaling-and-squaring matrix exponential and LU-based solves. Dimensions
//! 3, 4, 5 are the ones that occur; nothing here allocates.

use crate::dual::Real;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatExpError {
    /// Input had non-finite entries or the series overflowed.
    InvalidInput,
}

pub fn identity<const N: usize>() -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    m
}

pub fn transpose<const N: usize>(a: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            m[i][j] = a[j][i];
        }
    }
    m
}

pub fn mat_mul<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for i in 0..N {
        for k in 0..N {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..N {
                m[i][j] += aik * b[k][j];
            }
        }
    }
    m
}

pub fn mat_vec<const N: usize>(a: &[[f64; N]; N], v: &[f64; N]) -> [f64; N] {
    let mut out = [0.0; N];
    for i in 0..N {
        for j in 0..N {
            out[i] += a[i][j] * v[j];
        }
    }
    out
}

pub fn mat_add<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            m[i][j] = a[i][j] + b[i][j];
        }
    }
    m
}

pub fn mat_sub<const N: usize>(a: &[[f64; N]; N], b: &[[f64; N]; N]) -> [[f64; N]; N] {
    let mut m = [[0.0; N]; N];
    for i in 0..N {
        for j in 0..N {
            m[i][j] = a[i][j] - b[i][j];
        }
    }
    m
}

pub fn mat_scale<const N: usize>(a: &[[f64; N]; N], c: f64) -> [[f64; N]; N] {
    a.map(|row| row.map(|x| x * c))
}

/// Largest absolute entry.
pub fn max_abs<const N: usize>(a: &[[f64; N]; N]) -> f64 {
    let mut m: f64 = 0.0;
    for row in a {
        for &x in row {
            m = m.max(x.abs());
        }
    }
    m
}

/// Operator ∞-norm (max absolute row sum).
pub fn inf_norm<const N: usize>(a: &[[f64; N]; N]) -> f64 {
    let mut m: f64 = 0.0;
    for row in a {
        let s: f64 = row.iter().map(|x| x.abs()).sum();
        m = m.max(s);
    }
    m
}

/// `e^A` by scaling and squaring with a Taylor tail below 1e-16.
pub fn matexp<const N: usize>(a: &[[f64; N]; N]) -> Result<[[f64; N]; N], MatExpError> {
    let norm = inf_norm(a);
    if !norm.is_finite() || norm > 1e3 {
        return Err(MatExpError::InvalidInput);
    }
    let mut squarings = 0u32;
    let mut scaled = *a;
    while inf_norm(&scaled) > 0.25 {
        scaled = mat_scale(&scaled, 0.5);
        squarings += 1;
    }
    let mut result = identity::<N>();
    let mut term = identity::<N>();
    for k in 1..64 {
        term = mat_mul(&term, &scaled);
        term = mat_scale(&term, 1.0 / k as f64);
        result = mat_add(&result, &term);
        if inf_norm(&term) < 1e-16 {
            break;
        }
    }
    for _ in 0..squarings {
        result = mat_mul(&result, &result);
    }
    if result.iter().flatten().any(|x| !x.is_finite()) {
        return Err(MatExpError::InvalidInput);
    }
    Ok(result)
}

/// Solve `A x = b` with partial pivoting; `None` when A is singular.
pub fn lu_solve<const N: usize>(a: &[[f64; N]; N], b: &[f64; N]) -> Option<[f64; N]> {
    let mut m = *a;
    let mut x = *b;
    for col in 0..N {
        let piv = (col..N).max_by(|&i, &j| {
            m[i][col]
                .abs()
                .partial_cmp(&m[j][col].abs())
                .unwrap_or(core::cmp::Ordering::Equal)
        })?;
        if m[piv][col].abs() < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        x.swap(col, piv);
        for r in col + 1..N {
            let f = m[r][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for j in col..N {
                m[r][j] -= f * m[col][j];
            }
            x[r] -= f * x[col];
        }
    }
    for col in (0..N).rev() {
        let mut acc = x[col];
        for j in col + 1..N {
            acc -= m[col][j] * x[j];
        }
        x[col] = acc / m[col][col];
    }
    Some(x)
}

/// Matrix inverse by column-wise solves.
pub fn inverse<const N: usize>(a: &[[f64; N]; N]) -> Option<[[f64; N]; N]> {
    let mut inv = [[0.0; N]; N];
    for j in 0..N {
        let mut e = [0.0; N];
        e[j] = 1.0;
        let col = lu_solve(a, &e)?;
        for i in 0..N {
            inv[i][j] = col[i];
        }
    }
    Some(inv)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det<const N: usize>(a: &[[f64; N]; N]) -> f64 {
    let mut m = *a;
    let mut d = 1.0;
    for col in 0..N {
        let piv = (col..N)
            .max_by(|&i, &j| {
                m[i][col]
                    .abs()
                    .partial_cmp(&m[j][col].abs())
                    .unwrap_or(core::cmp::Ordering::Equal)
            })
            .unwrap();
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(col, piv);
            d = -d;
        }
        d *= m[col][col];
        for r in col + 1..N {
            let f = m[r][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for j in col..N {
                m[r][j] -= f * m[col][j];
            }
        }
    }
    d
}

/// Generic matrix-vector product over any [`Real`] scalar.
pub fn mat_vec_g<R: Real, const N: usize>(a: &[[R; N]; N], v: &[R; N]) -> [R; N] {
    core::array::from_fn(|i| {
        let mut acc = R::from_f64(0.0);
        for j in 0..N {
            acc = acc + a[i][j] * v[j];
        }
        acc
    })
}

/// Generic determinant for tiny dims (3 and 4 are the callers).
pub fn det_g<R: Real, const N: usize>(a: &[[R; N]; N]) -> R {
    match N {
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        3 => {
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        }
        4 => {
            let mut acc = R::from_f64(0.0);
            for j in 0..4 {
                let minor: [[R; 3]; 3] = core::array::from_fn(|r| {
                    let mut cc = 0;
                    core::array::from_fn(|_| {
                        if cc == j {
                            cc += 1;
                        }
                        let v = a[r + 1][cc];
                        cc += 1;
                        v
                    })
                });
                let m3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1])
                    - minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0])
                    + minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
                let signed = if j % 2 == 0 {
                    a[0][j] * m3
                } else {
                    -(a[0][j] * m3)
                };
                acc = acc + signed;
            }
            acc
        }
        _ => panic!("det_g only supports N <= 4"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matexp_of_zero_is_identity() {
        let z = [[0.0; 5]; 5];
        assert_eq!(matexp(&z).unwrap(), identity::<5>());
    }

    #[test]
    fn matexp_plane_rotation() {
        // antisymmetric generator in the (2,3) plane, angle π/2
        let mut a = [[0.0; 5]; 5];
        a[2][3] = core::f64::consts::FRAC_PI_2;
        a[3][2] = -core::f64::consts::FRAC_PI_2;
        let m = matexp(&a).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let expect = match (i, j) {
                    (2, 3) => 1.0,
                    (3, 2) => -1.0,
                    (2, 2) | (3, 3) => 0.0,
                    _ if i == j => 1.0,
                    _ => 0.0,
                };
                assert!((m[i][j] - expect).abs() < 1e-15, "({i},{j}) = {}", m[i][j]);
            }
        }
    }

    #[test]
    fn matexp_inverse_pairing() {
        // pseudo-random dense A with ‖A‖ ≈ 5
        let mut a = [[0.0; 5]; 5];
        let mut s = 0x9e3779b97f4a7c15u64;
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                s = s
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                *x = ((s >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 2.0;
            }
        }
        let e = matexp(&a).unwrap();
        let em = matexp(&mat_scale(&a, -1.0)).unwrap();
        let prod = mat_mul(&e, &em);
        let resid = mat_sub(&prod, &identity::<5>());
        assert!(inf_norm(&resid) < 1e-12, "residual {}", inf_norm(&resid));
    }

    #[test]
    fn matexp_rejects_non_finite() {
        let mut a = [[0.0; 3]; 3];
        a[0][0] = f64::NAN;
        assert_eq!(matexp(&a), Err(MatExpError::InvalidInput));
    }

    #[test]
    fn lu_solve_and_inverse() {
        let a = [[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 4.0]];
        let b = [1.0, 2.0, 3.0];
        let x = lu_solve(&a, &b).unwrap();
        let back = mat_vec(&a, &x);
        for i in 0..3 {
            assert!((back[i] - b[i]).abs() < 1e-13);
        }
        let inv = inverse(&a).unwrap();
        let prod = mat_mul(&a, &inv);
        assert!(inf_norm(&mat_sub(&prod, &identity::<3>())) < 1e-13);
        assert!(lu_solve(&[[1.0, 2.0], [2.0, 4.0]], &[1.0, 1.0]).is_none());
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let a = [
            [2.0, 1.0, 0.5, -1.0],
            [1.0, 3.0, 1.0, 0.0],
            [0.0, 1.0, 4.0, 0.3],
            [2.0, -1.0, 0.0, 1.5],
        ];
        let lu = det(&a);
        let cof = det_g(&a);
        assert!((lu - cof).abs() < 1e-12 * lu.abs());
    }
}
