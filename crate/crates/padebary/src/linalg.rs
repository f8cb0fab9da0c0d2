//! Small dense complex linear algebra.
//!
//! Every linear system in this crate is tiny (a handful of unknowns, at most
//! a few dozen), dense, and complex, so we use straightforward Gaussian
//! elimination with row pivoting rather than pulling in a factorization
//! library.  Pivoting on the entry of largest modulus keeps the elimination
//! stable on the moderately ill-conditioned Vandermonde- and Hankel-like
//! systems produced by the approximant constructions.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense row-major complex matrix.
///
/// Construction rejects non-finite entries so that downstream eliminations
/// only ever see ordinary numbers.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// Builds a matrix entry by entry from a closure over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut m = CMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if !v.re.is_finite() || !v.im.is_finite() {
                    return Err(Error::NonFinite);
                }
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Builds a matrix from explicit rows; all rows must share one length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("rows have unequal lengths"));
        }
        CMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Largest entry modulus; zero for an empty matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Solves the square system `A x = b` by Gaussian elimination with row
/// pivoting on the entry of largest modulus.
///
/// A pivot of modulus at most `n * machine_epsilon * max|A_ij|` (measured on
/// the original matrix) is treated as zero and reported as
/// [`Error::SingularMatrix`]; for well-conditioned systems the computed
/// solution carries a residual on the order of machine precision times the
/// problem scale.
pub fn solve_dense(a: &CMatrix, b: &[Complex64]) -> Result<Vec<Complex64>> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::DimensionMismatch("matrix is not square"));
    }
    if b.len() != n {
        return Err(Error::DimensionMismatch("right-hand side length differs from matrix size"));
    }
    if b.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let pivot_floor = n as f64 * f64::EPSILON * a.max_abs();
    let mut m = a.clone();
    let mut x: Vec<Complex64> = b.to_vec();

    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, m[(r, col)].norm()))
            .max_by(|p, q| p.1.total_cmp(&q.1))
            .expect("non-empty pivot search range");
        if pivot_mag <= pivot_floor {
            return Err(Error::SingularMatrix);
        }
        m.swap_rows(col, pivot_row);
        x.swap(col, pivot_row);

        let pivot = m[(col, col)];
        for row in col + 1..n {
            let factor = m[(row, col)] / pivot;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            m[(row, col)] = Complex64::new(0.0, 0.0);
            for j in col + 1..n {
                let delta = factor * m[(col, j)];
                m[(row, j)] -= delta;
            }
            let delta = factor * x[col];
            x[row] -= delta;
        }
    }

    for col in (0..n).rev() {
        let mut sum = x[col];
        for j in col + 1..n {
            sum -= m[(col, j)] * x[j];
        }
        x[col] = sum / m[(col, col)];
    }

    Ok(x)
}

/// Determinant of a small square matrix given as rows, by cofactor
/// expansion along the first row.  The empty matrix has determinant 1.
pub(crate) fn det_rows(rows: &[Vec<Complex64>]) -> Complex64 {
    let n = rows.len();
    match n {
        0 => Complex64::new(1.0, 0.0),
        1 => rows[0][0],
        2 => rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0],
        _ => {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut sign = 1.0;
            for j in 0..n {
                let minor: Vec<Vec<Complex64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        let mut v = r.clone();
                        v.remove(j);
                        v
                    })
                    .collect();
                acc += rows[0][j] * det_rows(&minor) * sign;
                sign = -sign;
            }
            acc
        }
    }
}

/// Determinant of a small square matrix by cofactor expansion.  Cost is
/// factorial in the size; intended for the tiny systems that arise here
/// (and as an elimination-free cross-check path).
pub fn determinant(a: &CMatrix) -> Result<Complex64> {
    if a.cols() != a.rows() {
        return Err(Error::DimensionMismatch("matrix is not square"));
    }
    let rows: Vec<Vec<Complex64>> = (0..a.rows())
        .map(|i| (0..a.cols()).map(|j| a[(i, j)]).collect())
        .collect();
    Ok(det_rows(&rows))
}
