//! Dense matrices, sample covariance matrices and pivoted determinants.

use num_complex::Complex64;

use crate::mpfloat::{BigComplex, BigFloat};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }
}

/// An `n × m` data matrix; real ensembles store zero imaginary parts.
pub type DataMatrix = Matrix<Complex64>;

/// `Z = X* X` (equal to `XᵀX` for real data).
pub fn sample_covariance(x: &DataMatrix) -> Matrix<Complex64> {
    let (n, m) = (x.rows, x.cols);
    let mut z = Matrix::from_fn(m, m, |_, _| Complex64::new(0.0, 0.0));
    for i in 0..m {
        for j in i..m {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..n {
                s += x.get(k, i).conj() * x.get(k, j);
            }
            z.data[i * m + j] = s;
            z.data[j * m + i] = s.conj();
        }
    }
    z
}

/// Field operations needed by the LU factorisation.
pub trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Monotone proxy for the magnitude, used for pivot selection.
    fn magnitude(&self) -> f64;
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Scalar for BigComplex {
    fn zero() -> Self {
        BigComplex::zero()
    }
    fn one() -> Self {
        BigComplex::from_real(BigFloat::from_i64(1, 64))
    }
    fn add(&self, o: &Self) -> Self {
        BigComplex::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        BigComplex::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        BigComplex::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        BigComplex::div(self, o)
    }
    fn neg(&self) -> Self {
        BigComplex { re: -self.re.clone(), im: -self.im.clone() }
    }
    fn magnitude(&self) -> f64 {
        self.l1_ln()
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> T {
    assert_eq!(a.rows, a.cols, "determinant of a non-square matrix");
    let n = a.rows;
    let mut m = a.data.clone();
    let mut det = T::one();
    for col in 0..n {
        let mut piv = col;
        let mut best = m[col * n + col].magnitude();
        for r in col + 1..n {
            let v = m[r * n + col].magnitude();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best == 0.0 || best == f64::NEG_INFINITY {
            return T::zero();
        }
        if piv != col {
            for c in 0..n {
                m.swap(col * n + c, piv * n + c);
            }
            det = det.neg();
        }
        let p = m[col * n + col].clone();
        det = det.mul(&p);
        for r in col + 1..n {
            let factor = m[r * n + col].div(&p);
            for c in col + 1..n {
                let v = m[r * n + c].sub(&factor.mul(&m[col * n + c]));
                m[r * n + c] = v;
            }
        }
    }
    det
}

fn shifted(z: &Matrix<Complex64>, mu: f64) -> Matrix<Complex64> {
    Matrix::from_fn(z.rows, z.cols, |i, j| if i == j { z.get(i, j) - mu } else { *z.get(i, j) })
}

/// `det(Z − μ) det(Z − ν)` in double precision.
pub fn char_poly_product(z: &Matrix<Complex64>, mu: f64, nu: f64) -> f64 {
    let a = determinant(&shifted(z, mu));
    let b = determinant(&shifted(z, nu));
    (a * b).re
}

/// `det(Z − μ)` in `prec`-bit arithmetic, for exactly representable entries.
pub fn char_poly_extended(z: &Matrix<Complex64>, mu: f64, prec: usize) -> Complex64 {
    let big = Matrix::from_fn(z.rows, z.cols, |i, j| {
        let v = if i == j { z.get(i, j) - mu } else { *z.get(i, j) };
        BigComplex::from_c64(v, prec)
    });
    determinant(&big).to_c64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zero_data_gives_zero_covariance() {
        let x = Matrix::from_fn(3, 2, |_, _| Complex64::new(0.0, 0.0));
        let z = sample_covariance(&x);
        assert!(z.data.iter().all(|v| v.norm() == 0.0));
    }

    #[test]
    fn empty_case() {
        let x: DataMatrix = Matrix::from_fn(3, 0, |_, _| Complex64::new(0.0, 0.0));
        let z = sample_covariance(&x);
        assert_eq!((z.rows, z.cols), (0, 0));
        assert_eq!(char_poly_product(&z, 2.0, 3.0), 1.0);
    }

    #[test]
    fn small_products() {
        let z = Matrix::from_fn(1, 1, |_, _| Complex64::new(0.0, 0.0));
        assert_eq!(char_poly_product(&z, 2.0, 3.0), 6.0);
        let d = Matrix::from_fn(2, 2, |i, j| Complex64::new(if i == j { [1.0, 4.0][i] } else { 0.0 }, 0.0));
        assert_eq!(char_poly_product(&d, 0.0, 0.0), 16.0);
    }

    #[test]
    fn covariance_is_hermitian() {
        let x = Matrix::from_fn(4, 3, |i, j| Complex64::new((i * 3 + j) as f64 * 0.37 - 1.0, (i + 2 * j) as f64 * -0.21));
        let z = sample_covariance(&x);
        for i in 0..3 {
            for j in 0..3 {
                assert!((z.get(i, j) - z.get(j, i).conj()).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn pivoting_and_extended_agree() {
        let z = Matrix::from_fn(3, 3, |i, j| Complex64::new([[0.0, 2.0, 1.0], [2.0, 1.0, 0.5], [1.0, 0.5, 3.0]][i][j], 0.0));
        let d = determinant(&z).re;
        assert_relative_eq!(d, -11.0, max_relative = 1e-14);
        assert_relative_eq!(char_poly_extended(&z, 0.0, 200).re, -11.0, max_relative = 1e-15);
    }
}
