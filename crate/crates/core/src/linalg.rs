//! Exact dense linear algebra over arbitrary-precision rationals.
//!
//! Every matrix is row-major and may have zero rows or zero columns; a `0 x n`
//! matrix is the unique map into the zero space and needs no special casing.
//! Elimination always picks the first nonzero entry in column scan order, so
//! bases returned by [`kernel_basis`] and [`cokernel_presentation`] are
//! reproducible bit for bit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Canonical arbitrary-precision rational (reduced, positive denominator).
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    /// Builds a matrix from row-major entries. Panics if the entry count is wrong.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        RatMat { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_vec(rows, cols, entries.iter().map(|&e| int(e)).collect())
    }

    /// Builds a matrix with `cols` columns from a list of rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        RatMat {
            rows: n,
            cols,
            data,
        }
    }

    /// A single column.
    pub fn column(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        Self::from_vec(n, 1, entries)
    }

    /// A single row.
    pub fn row(entries: Vec<Rational>) -> Self {
        let n = entries.len();
        Self::from_vec(1, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e * s).collect(),
        }
    }

    /// Picks out the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self[(r, c)].clone());
            }
        }
        RatMat::from_vec(rows.len(), cols.len(), data)
    }

    pub fn col_range(&self, start: usize, end: usize) -> Self {
        let cols: Vec<usize> = (start..end).collect();
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, &cols)
    }

    pub fn row_range(&self, start: usize, end: usize) -> Self {
        let rows: Vec<usize> = (start..end).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.select(&rows, &cols)
    }

    /// Side-by-side concatenation. All blocks must share a row count; `rows`
    /// fixes the result height when `blocks` is empty.
    pub fn hstack(rows: usize, blocks: &[&RatMat]) -> Self {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..b.cols {
                    m[(r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation; `cols` fixes the width when `blocks` is empty.
    pub fn vstack(cols: usize, blocks: &[&RatMat]) -> Self {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        RatMat::from_vec(rows, cols, data)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[&RatMat]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    m[(ro + r, co + c)] = b[(r, c)].clone();
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..a.cols {
            if prow == a.rows {
                break;
            }
            let Some(found) = (prow..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(found, prow);
            let inv = a[(prow, col)].recip();
            for c in col..a.cols {
                let v = &a[(prow, c)] * &inv;
                a[(prow, c)] = v;
            }
            for r in 0..a.rows {
                if r == prow || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in col..a.cols {
                    let v = &a[(r, c)] - &factor * &a[(prow, c)];
                    a[(r, c)] = v;
                }
            }
            pivots.push(col);
            prow += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Determinant by elimination. Panics on non-square input.
    pub fn determinant(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for c in col..n {
                    let v = &a[(r, c)] - &factor * &a[(col, c)];
                    a[(r, c)] = v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<RatMat> {
        if !self.is_square() {
            return None;
        }
        solve(self, &RatMat::identity(self.rows)).filter(|_| self.is_invertible())
    }
}

/// Some exact solution `x` of `a * x = b` (free variables set to zero), or
/// `None` when the system is inconsistent.
pub fn solve(a: &RatMat, b: &RatMat) -> Option<RatMat> {
    assert_eq!(a.rows, b.rows, "solve: row mismatch");
    let n = a.cols;
    let aug = RatMat::hstack(a.rows, &[a, b]);
    let (r, pivots) = aug.rref();
    if pivots.iter().any(|&p| p >= n) {
        return None;
    }
    let mut x = RatMat::zeros(n, b.cols);
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..b.cols {
            x[(p, c)] = r[(row, n + c)].clone();
        }
    }
    Some(x)
}

/// Columns form a basis of `{ v : m v = 0 }`, one per free column of the RREF.
pub fn kernel_basis(m: &RatMat) -> RatMat {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut k = RatMat::zeros(m.cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k[(fc, j)] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            k[(pc, j)] = -r[(row, fc)].clone();
        }
    }
    k
}

/// The pivot columns of `m`: a basis of its column space drawn from its own columns.
pub fn column_space_basis(m: &RatMat) -> RatMat {
    let (_, pivots) = m.rref();
    let rows: Vec<usize> = (0..m.rows).collect();
    m.select(&rows, &pivots)
}

/// A quotient `ambient / span(relations)` with an explicit projection and a
/// section chosen among standard basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    /// Independent columns spanning the relation space.
    pub relation_basis: RatMat,
    pub quotient_dim: usize,
    /// `quotient_dim x ambient_dim`
    pub projection: RatMat,
    /// `ambient_dim x quotient_dim`
    pub section: RatMat,
    /// Ambient coordinates whose basis vectors represent the quotient basis.
    pub complement: Vec<usize>,
}

/// Presents the cokernel of `m`: the target space of `m` modulo its image.
///
/// The quotient basis is the set of standard basis vectors not reachable from
/// the relations in pivot order, so the section is a coordinate inclusion.
pub fn cokernel_presentation(m: &RatMat) -> QuotientPresentation {
    let n = m.rows;
    let relations = column_space_basis(m);
    let r = relations.cols;
    let aug = RatMat::hstack(n, &[&relations, &RatMat::identity(n)]);
    let (_, pivots) = aug.rref();
    let complement: Vec<usize> = pivots.iter().filter(|&&p| p >= r).map(|p| p - r).collect();
    let q = complement.len();
    debug_assert_eq!(q + r, n);
    let mut section = RatMat::zeros(n, q);
    for (j, &c) in complement.iter().enumerate() {
        section[(c, j)] = Rational::one();
    }
    let basis = RatMat::hstack(n, &[&relations, &section]);
    let inv = basis
        .inverse()
        .expect("relations plus complement always form a basis");
    let projection = inv.row_range(r, n);
    QuotientPresentation {
        ambient_dim: n,
        relation_basis: relations,
        quotient_dim: q,
        projection,
        section,
        complement,
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &RatMat {
    type Output = RatMat;

    fn mul(self, rhs: &RatMat) -> RatMat {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product of {}x{} by {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = RatMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RatMat {
    type Output = RatMat;

    fn add(self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMat {
    type Output = RatMat;

    fn sub(self, rhs: &RatMat) -> RatMat {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMat {
    type Output = RatMat;

    fn neg(self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMat{}x{}{}", self.rows, self.cols, self)
    }
}

impl fmt::Display for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str("; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        f.write_str("]")
    }
}
