//! Dense matrices over an exact commutative ring.
//!
//! One generic type serves all carriers in this crate: 0/1 biadjacency
//! matrices (`i64`), big-integer adjacency and Laplacian matrices (`BigInt`),
//! and weighted adjacency matrices (`BiPoly`). Determinants come in two exact
//! flavors: fraction-free Bareiss elimination over ℤ and packed-bit
//! elimination over GF(2).

use std::fmt::Debug;
use std::ops::{Index, IndexMut, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Minimal commutative-ring bound: exact equality plus +, −, ×, unary −.
/// Blanket-implemented; `i64`, `BigInt`, and `BiPoly` all qualify.
pub trait Ring:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Row-major rectangular matrix. Square-only operations assert squareness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    /// Build from row-major data; length must be rows·cols.
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        Matrix { rows, cols, data }
    }

    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    /// Identity matrix of dimension n.
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    /// Build entrywise from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Dimension of a square matrix; asserts squareness.
    pub fn dim(&self) -> usize {
        assert_eq!(self.rows, self.cols, "square matrix required");
        self.rows
    }

    pub fn transpose(&self) -> Matrix<R> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Matrix product (rows×k)·(k×cols).
    pub fn matmul(&self, rhs: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * rhs[(k, j)].clone();
            }
            acc
        })
    }

    /// Kronecker product: entry ((i,k),(j,l)) = A[i,j]·B[k,l] in row-major
    /// block layout, so row index i·rows(B)+k and column j·cols(B)+l.
    pub fn kronecker(&self, rhs: &Matrix<R>) -> Matrix<R> {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let (i, k) = (r / rhs.rows, r % rhs.rows);
            let (j, l) = (c / rhs.cols, c % rhs.cols);
            self[(i, j)].clone() * rhs[(k, l)].clone()
        })
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> R {
        let n = self.dim();
        let mut acc = R::zero();
        for i in 0..n {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    /// Entrywise conversion into another ring.
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }

    /// Delete one row and one column (for Laplacian minors).
    pub fn minor(&self, row: usize, col: usize) -> Matrix<R> {
        assert!(row < self.rows && col < self.cols);
        Matrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self[(si, sj)].clone()
        })
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix<i64> {
    /// Widen 0/1 (or any small-integer) entries to big integers.
    pub fn to_bigint(&self) -> Matrix<BigInt> {
        self.map(|&x| BigInt::from(x))
    }
}

impl Matrix<BigInt> {
    /// Exact determinant by fraction-free (Bareiss) elimination. On a zero
    /// pivot the first lower row with a nonzero entry in the pivot column is
    /// swapped in; if none exists the determinant is zero. The 0×0 case is 1.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.dim();
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // Exact division: every entry stays an integer minor.
                    m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = std::mem::take(&mut m[n - 1][n - 1]);
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Determinant mod 2 via elimination on bit-packed rows.
    pub fn det_mod2(&self) -> u8 {
        let n = self.dim();
        let words = n.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut w = vec![0u64; words];
                for j in 0..n {
                    if self[(i, j)].is_odd() {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                w
            })
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| rows[r][col / 64] >> (col % 64) & 1 == 1) else {
                return 0;
            };
            rows.swap(col, p);
            let pivot = rows[col].clone();
            for row in rows.iter_mut().skip(col + 1) {
                if row[col / 64] >> (col % 64) & 1 == 1 {
                    for (w, pw) in row.iter_mut().zip(&pivot) {
                        *w ^= pw;
                    }
                }
            }
        }
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: usize, cols: usize, v: &[i64]) -> Matrix<BigInt> {
        Matrix::new(rows, cols, v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn kronecker_scalars_and_blocks() {
        let a = big(1, 1, &[2]);
        let b = big(1, 1, &[3]);
        assert_eq!(a.kronecker(&b), big(1, 1, &[6]));

        let m = big(2, 2, &[1, 2, 3, 4]);
        let i2: Matrix<BigInt> = Matrix::identity(2);
        let block = i2.kronecker(&m);
        assert_eq!(block, big(4, 4, &[1, 2, 0, 0, 3, 4, 0, 0, 0, 0, 1, 2, 0, 0, 3, 4]));
    }

    #[test]
    fn kronecker_rectangular_layout() {
        // (1×2) ⊗ (2×1) = 2×2 with row-major block indexing
        let a = big(1, 2, &[1, 2]);
        let b = big(2, 1, &[3, 4]);
        assert_eq!(a.kronecker(&b), big(2, 2, &[3, 6, 4, 8]));
    }

    #[test]
    fn det_bareiss_small() {
        assert_eq!(big(2, 2, &[2, 1, 1, 2]).det_bareiss(), BigInt::from(3));
        assert_eq!(big(0, 0, &[]).det_bareiss(), BigInt::one());
        // zero pivot forces a row swap; det of the exchange matrix is -1
        assert_eq!(big(2, 2, &[0, 1, 1, 0]).det_bareiss(), BigInt::from(-1));
        // genuinely singular
        assert_eq!(big(2, 2, &[1, 2, 2, 4]).det_bareiss(), BigInt::zero());
        let m = big(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 10]);
        assert_eq!(m.det_bareiss(), BigInt::from(-3));
    }

    #[test]
    fn det_mod2_paths() {
        // path adjacency matrices: nonsingular mod 2 exactly for even length
        let path = |n: usize| {
            Matrix::<BigInt>::from_fn(n, n, |i, j| {
                BigInt::from(u8::from(i.abs_diff(j) == 1))
            })
        };
        assert_eq!(path(2).det_mod2(), 1);
        assert_eq!(path(3).det_mod2(), 0);
        assert_eq!(path(4).det_mod2(), 1);
        assert_eq!(path(5).det_mod2(), 0);
        assert_eq!(path(6).det_mod2(), 1);
    }

    #[test]
    fn matmul_and_transpose() {
        let a = big(2, 3, &[1, 0, 2, 0, 1, 1]);
        let b = a.transpose();
        let g = a.matmul(&b);
        assert_eq!(g, big(2, 2, &[5, 2, 2, 2]));
        assert!(g.is_symmetric());
    }

    #[test]
    fn minor_deletion() {
        let m = big(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(m.minor(1, 1), big(2, 2, &[1, 3, 7, 9]));
        assert_eq!(m.minor(2, 2), big(2, 2, &[1, 2, 4, 5]));
    }

    #[test]
    fn zero_dimension_edge_cases() {
        let e = big(0, 0, &[]);
        assert_eq!(e.matmul(&e), e);
        assert_eq!(e.kronecker(&big(2, 2, &[1, 2, 3, 4])).rows(), 0);
        assert_eq!(e.det_mod2(), 1);
    }
}
