//! Exact scalars and dense exact linear algebra.
//!
//! Scalars are arbitrary-precision rationals ([`Rational`]) and elements of
//! the quadratic extension ℚ(√2) ([`QSqrt2`]), which is the smallest field
//! containing every entry of the generator catalog (the 1/√2 prefactors).
//! [`Matrix`] is a dense row-major matrix over any [`Field`]; row reduction
//! and nullspaces are exact, so rank decisions never depend on a tolerance.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Field operations needed by the elimination routines.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + fmt::Debug
{
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rational {}

/// Element `p + q·√2` of ℚ(√2) with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QSqrt2 {
    pub p: Rational,
    pub q: Rational,
}

impl QSqrt2 {
    pub fn new(p: Rational, q: Rational) -> Self {
        Self { p, q }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(rat(n), rat(0))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::new(r, rat(0))
    }

    /// The generator √2 itself.
    pub fn sqrt2() -> Self {
        Self::new(rat(0), rat(1))
    }

    /// `1/√2 = √2/2`, the prefactor of the normalized generators.
    pub fn inv_sqrt2() -> Self {
        Self::new(rat(0), ratio(1, 2))
    }

    /// Galois conjugate `p − q·√2`.
    pub fn conj(&self) -> Self {
        Self::new(self.p.clone(), -self.q.clone())
    }

    /// Field norm `p² − 2q²` (the product with the conjugate).
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - rat(2) * &self.q * &self.q
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * core::f64::consts::SQRT_2
    }

    /// Is this a pure rational (q = 0)?
    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Canonical ASCII rendering, e.g. `"3/2"`, `"-1/2*sqrt(2)"`, `"1+sqrt(2)"`.
    pub fn render(&self) -> String {
        fn rat_str(r: &Rational) -> String {
            if r.denom().is_one() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        if self.q.is_zero() {
            return rat_str(&self.p);
        }
        let qmag = self.q.abs();
        let qpart = if qmag.is_one() {
            String::from("sqrt(2)")
        } else {
            format!("{}*sqrt(2)", rat_str(&qmag))
        };
        let sign = if self.q.is_negative() { "-" } else { "+" };
        if self.p.is_zero() {
            if self.q.is_negative() {
                format!("-{}", qpart)
            } else {
                qpart
            }
        } else {
            format!("{}{}{}", rat_str(&self.p), sign, qpart)
        }
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for QSqrt2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Sub for QSqrt2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.p - rhs.p, self.q - rhs.q)
    }
}

impl Neg for QSqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.p, -self.q)
    }
}

impl Mul for QSqrt2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (p1 + q1√2)(p2 + q2√2) = p1p2 + 2q1q2 + (p1q2 + q1p2)√2
        let p = &self.p * &rhs.p + rat(2) * &self.q * &rhs.q;
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        Self::new(p, q)
    }
}

impl Div for QSqrt2 {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in QSqrt2");
        let c = rhs.conj();
        let num = self * c;
        Self::new(num.p / n.clone(), num.q / n)
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl Field for QSqrt2 {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero in QSqrt2");
        let c = self.conj();
        Self::new(c.p / n.clone(), c.q / n)
    }
}

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(rows * cols, data.len());
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() * c.clone()
        })
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Commutator `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Reduced row echelon form; returns `(rank, pivot columns, rref)`.
    pub fn rref(&self) -> (usize, Vec<usize>, Self) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(piv) = (rank..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, piv);
            let inv = m[(rank, col)].inv();
            for j in col..m.cols {
                m[(rank, j)] = m[(rank, j)].clone() * inv.clone();
            }
            for r in 0..m.rows {
                if r == rank || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let s = m[(rank, j)].clone() * factor.clone();
                    m[(r, j)] = m[(r, j)].clone() - s;
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (rank, pivots, m)
    }

    pub fn rank(&self) -> usize {
        self.rref().0
    }

    /// Exact basis of `{v : Mv = 0}`; empty for full column rank.
    ///
    /// Rectangular input is allowed, so stacked constraint rows can be fed
    /// in directly. Each basis vector has a unit entry in its free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (_, pivots, r) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Determinant of a square matrix via fraction-free-ish elimination.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..m.cols {
            let Some(piv) = (col..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if piv != col {
                m.swap_rows(col, piv);
                det = -det;
            }
            det = det * m[(col, col)].clone();
            let inv = m[(col, col)].inv();
            for r in col + 1..m.rows {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * inv.clone();
                for j in col..m.cols {
                    let s = m[(col, j)].clone() * factor.clone();
                    m[(r, j)] = m[(r, j)].clone() - s;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl<F> core::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> core::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Matrix over ℚ(√2), the scalar kind of the generator catalog.
pub type QMat = Matrix<QSqrt2>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qsqrt2_conjugate_norm() {
        let x = QSqrt2::new(ratio(3, 2), ratio(-1, 4));
        let prod = x.clone() * x.conj();
        assert!(prod.q.is_zero());
        assert_eq!(prod.p, x.norm());
    }

    #[test]
    fn qsqrt2_inverse() {
        let x = QSqrt2::new(rat(1), rat(1)); // 1 + √2
        let inv = x.clone().inv();
        assert_eq!(x * inv, QSqrt2::one());
        // 1/√2 = √2/2
        assert_eq!(QSqrt2::sqrt2().inv(), QSqrt2::inv_sqrt2());
    }

    #[test]
    fn qsqrt2_render() {
        assert_eq!(QSqrt2::from_int(0).render(), "0");
        assert_eq!(QSqrt2::new(ratio(-1, 2), rat(0)).render(), "-1/2");
        assert_eq!(QSqrt2::inv_sqrt2().render(), "1/2*sqrt(2)");
        assert_eq!(QSqrt2::new(rat(1), rat(-1)).render(), "1-sqrt(2)");
    }

    #[test]
    fn nullspace_full_rank_is_empty() {
        let m: Matrix<Rational> = Matrix::identity(3);
        assert!(m.nullspace().is_empty());
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn nullspace_of_zero_map() {
        let m: Matrix<Rational> = Matrix::zeros(2, 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        // rank-1 matrix with 2-dimensional kernel
        let m = Matrix::new(
            3,
            3,
            vec![
                rat(1),
                rat(2),
                rat(3),
                rat(2),
                rat(4),
                rat(6),
                rat(-1),
                rat(-2),
                rat(-3),
            ],
        );
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        assert_eq!(m.rank() + ns.len(), m.cols);
        for v in &ns {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn det_and_rank() {
        let m = Matrix::new(2, 2, vec![rat(2), rat(1), rat(1), rat(1)]);
        assert_eq!(m.det(), rat(1));
        let s = Matrix::new(2, 2, vec![rat(1), rat(2), rat(2), rat(4)]);
        assert!(s.det().is_zero());
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn rref_over_qsqrt2() {
        // [[√2, 1], [2, √2]] is singular: second row = √2·first
        let m = QMat::new(
            2,
            2,
            vec![
                QSqrt2::sqrt2(),
                QSqrt2::one(),
                QSqrt2::from_int(2),
                QSqrt2::sqrt2(),
            ],
        );
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }
}
