//! Small dense integer matrices and saturated integer kernels.
//!
//! Everything here is exact `i64` arithmetic. The matrices that occur are tiny
//! (at most a handful of rows, two columns), so no attempt is made at
//! asymptotic efficiency.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from nested rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend_from_slice(row);
        }
        Self {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = Self::zero(n_rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), n_rows);
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Determinant by cofactor expansion; only meant for n <= 3.
    pub fn det(&self) -> i64 {
        assert!(self.is_square(), "determinant of non-square matrix");
        match self.rows {
            0 => 1,
            1 => self.data[0],
            2 => self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)],
            n => (0..n)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * self[(0, j)] * self.minor(0, j).det()
                })
                .sum(),
        }
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..self.rows)
            .filter(|&i| i != skip_r)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_c)
                    .map(|j| self[(i, j)])
                    .collect()
            })
            .collect();
        if rows.is_empty() {
            Self::zero(0, 0)
        } else {
            Self::from_rows(&rows)
        }
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Inverse of a unimodular matrix (det = +-1). `None` otherwise.
    pub fn unimodular_inverse(&self) -> Option<Self> {
        let d = self.det();
        if d != 1 && d != -1 {
            return None;
        }
        let n = self.rows;
        let mut inv = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                // adjugate is the transpose of the cofactor matrix
                inv[(j, i)] = sign * self.minor(i, j).det() * d;
            }
        }
        Some(inv)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order, searching up to `bound`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let id = Self::identity(self.rows);
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc == id {
                return Some(k);
            }
            acc = &acc * self;
        }
        None
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Mul for IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: IntMatrix) -> IntMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Divides out the content and fixes the sign so the first nonzero entry is
/// positive. Zero vectors are returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g == 0 {
        return v.to_vec();
    }
    let sign = v.iter().find(|&&x| x != 0).map_or(1, |&x| x.signum());
    v.iter().map(|&x| sign * x / g).collect()
}

/// Column-echelon reduction by unimodular column operations.
///
/// Returns `(rank, u)` where `a * u` has its first `rank` columns forming a
/// column echelon form and its remaining columns zero. The trailing columns of
/// `u` are therefore a basis of the integer kernel of `a`, and that basis is
/// saturated in `Z^n` because `u` is unimodular.
pub fn column_echelon(a: &IntMatrix) -> (usize, IntMatrix) {
    let n = a.cols();
    let mut work = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut pivot_col = 0;
    for r in 0..work.rows() {
        if pivot_col == n {
            break;
        }
        // Euclid across columns pivot_col.. in row r.
        loop {
            let mut best: Option<usize> = None;
            for j in pivot_col..n {
                let v = work[(r, j)];
                if v != 0 && best.is_none_or(|b| v.abs() < work[(r, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            swap_cols(&mut work, pivot_col, b);
            swap_cols(&mut u, pivot_col, b);
            let p = work[(r, pivot_col)];
            let mut done = true;
            for j in pivot_col + 1..n {
                let q = work[(r, j)] / p;
                if q != 0 {
                    add_col_multiple(&mut work, j, pivot_col, -q);
                    add_col_multiple(&mut u, j, pivot_col, -q);
                }
                if work[(r, j)] != 0 {
                    done = false;
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    (pivot_col, u)
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let t = m[(i, a)];
        m[(i, a)] = m[(i, b)];
        m[(i, b)] = t;
    }
}

fn add_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    for i in 0..m.rows() {
        let v = m[(i, src)];
        m[(i, dst)] += k * v;
    }
}

/// Saturated basis of `{ v in Z^n : a v = 0 }`, together with a unimodular
/// completion whose leading columns are that basis.
pub fn integer_kernel(a: &IntMatrix) -> (Vec<Vec<i64>>, IntMatrix) {
    let n = a.cols();
    let (rank, u) = column_echelon(a);
    let kernel: Vec<Vec<i64>> = (rank..n).map(|j| u.column(j)).collect();
    // Reorder u so that kernel columns come first.
    let order: Vec<usize> = (rank..n).chain(0..rank).collect();
    let completion = IntMatrix::from_columns(n, &order.iter().map(|&j| u.column(j)).collect::<Vec<_>>());
    (kernel, completion)
}

/// Saturated basis of the vectors of `Z^n` fixed by every matrix in `mats`,
/// with a unimodular completion whose leading columns are that basis.
pub fn fixed_lattice(mats: &[IntMatrix], n: usize) -> (Vec<Vec<i64>>, IntMatrix) {
    let id = IntMatrix::identity(n);
    let rows: Vec<Vec<i64>> = mats.iter().flat_map(|g| g.sub(&id).to_rows()).collect();
    if rows.is_empty() {
        return integer_kernel(&IntMatrix::zero(1, n));
    }
    integer_kernel(&IntMatrix::from_rows(&rows))
}
