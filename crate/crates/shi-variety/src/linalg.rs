//! Minimal exact-rational vectors and matrices.
//!
//! Every dimension in this crate is tiny (rank ≤ 8, at most 120 positive
//! roots), so the representation is plain row-major `Vec<Q>` with no attempt
//! at sparsity or blocking. What matters is that all arithmetic is exact.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = Ratio<i64>;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    Ratio::from_integer(n)
}

/// Rational n/d (d ≠ 0).
pub fn qdiv(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// Exact floor of a rational, as an integer.
pub fn qfloor(x: Q) -> i64 {
    x.floor().to_integer()
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Q::zero(), |acc, (a, b)| acc + *a * *b)
            })
            .collect()
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Gauss–Jordan inverse. Returns `None` for a singular matrix.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = QMat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[(r, col)];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let s = a[(col, j)] * factor;
                    a[(r, j)] -= s;
                    let t = inv[(col, j)] * factor;
                    inv[(r, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    /// Determinant by fraction-free-ish elimination on a rational copy.
    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Q::zero();
            };
            if pivot != col {
                a.swap_rows(pivot, col);
                det = -det;
            }
            let p = a[(col, col)];
            det *= p;
            for r in col + 1..n {
                let factor = a[(r, col)] / p;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let s = a[(col, j)] * factor;
                    a[(r, j)] -= s;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for col in 0..self.cols {
            self.data.swap(i * self.cols + col, j * self.cols + col);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// x + y componentwise.
pub fn vec_add(x: &[Q], y: &[Q]) -> Vec<Q> {
    x.iter().zip(y).map(|(a, b)| *a + *b).collect()
}

/// Scales a vector.
pub fn vec_scale(x: &[Q], s: Q) -> Vec<Q> {
    x.iter().map(|a| *a * s).collect()
}

/// True when every entry is an integer.
pub fn vec_is_integral(x: &[Q]) -> bool {
    x.iter().all(Q::is_integer)
}

/// Extracts integer entries; `None` when any entry has a denominator.
pub fn vec_to_ints(x: &[Q]) -> Option<Vec<i64>> {
    x.iter()
        .map(|a| a.is_integer().then(|| a.to_integer()))
        .collect()
}

/// Pretty "p/q" rendering used by the CLI tables.
pub fn qstr(x: Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Signed absolute value sum used by the length formula.
pub fn abs_sum(v: &[i64]) -> i64 {
    v.iter().map(|k| k.abs()).sum()
}

#[allow(unused_imports)]
pub(crate) use num_traits::{One as _, Signed as _, Zero as _};
