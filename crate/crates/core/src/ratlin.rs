//! Exact linear algebra over the rationals.
//!
//! Everything the rest of the crate reports is a dimension, so nothing here
//! ever touches floating point. Ranks are computed by fraction-free
//! (Bareiss) elimination on integer rows obtained by clearing denominators.
//! Subspaces are kept in reduced row-echelon form, which makes subspace
//! equality a plain matrix comparison.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Zero};
use thiserror::Error;

/// Exact rational scalar. `BigRational` keeps itself reduced with a positive
/// denominator after every operation.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("vector length {found} does not match ambient dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch in product: {left_cols} columns against {right_rows} rows")]
    ProductMismatch { left_cols: usize, right_rows: usize },
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is needed so that an empty row
    /// list still has a well-defined width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(LinalgError::RaggedRows {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Matrix::from_rows(cols, rows).expect("ragged integer literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ProductMismatch {
                left_cols: self.cols,
                right_rows: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::LengthMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = self.get(r, c);
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::AmbientMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Rational::one());
        }
        let pivots = rref_in_place(&mut aug, n);
        if pivots.len() < n {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Gauss-Jordan elimination restricted to the first `pivot_cols` columns.
/// Pivot rule: leftmost column with a nonzero entry at or below the current
/// row, first such row. Returns the pivot columns in order.
fn rref_in_place(m: &mut Matrix, pivot_cols: usize) -> Vec<usize> {
    let cols = m.cols;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..pivot_cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for c in 0..cols {
                m.data.swap(p * cols + c, row * cols + c);
            }
        }
        let inv = m.get(row, col).recip();
        for c in col..cols {
            let idx = row * cols + c;
            if !m.data[idx].is_zero() {
                m.data[idx] = &m.data[idx] * &inv;
            }
        }
        for r in 0..m.rows {
            if r == row {
                continue;
            }
            let factor = m.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                let pivot_entry = m.data[row * cols + c].clone();
                if !pivot_entry.is_zero() {
                    m.data[r * cols + c] -= &factor * pivot_entry;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Clears denominators row by row, giving an integer matrix with the same
/// row space.
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect()
}

/// Rank over the rationals via fraction-free Bareiss elimination.
pub fn rank(m: &Matrix) -> usize {
    let mut a = integer_rows(m);
    let rows = m.rows;
    let cols = m.cols;
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in (r + 1)..rows {
            for j in (col + 1)..cols {
                // Bareiss step; the division is exact.
                let v = &a[r][col] * &a[i][j] - &a[i][col] * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

/// A subspace of `Q^ambient`, stored as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given rows.
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut b = m.clone();
        let width = b.cols;
        let pivots = rref_in_place(&mut b, width);
        let keep = pivots.len();
        let basis = Matrix {
            rows: keep,
            cols: b.cols,
            data: b.data[..keep * b.cols].to_vec(),
        };
        Subspace {
            ambient: m.cols,
            basis,
            pivots,
        }
    }

    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        for v in &vectors {
            if v.len() != ambient {
                return Err(LinalgError::LengthMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
        }
        Ok(Subspace::from_matrix(&Matrix::from_rows(ambient, vectors)?))
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self, LinalgError> {
        let vectors = indices
            .iter()
            .map(|&i| {
                if i >= ambient {
                    return Err(LinalgError::LengthMismatch {
                        expected: ambient,
                        found: i + 1,
                    });
                }
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                Ok(v)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::span(ambient, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)?))
    }

    /// Computed from the left kernel of the stacked bases: if
    /// `x A + y B = 0` then `x A` lies in both spaces.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let stacked = self.basis.vstack(&other.basis)?;
        let relations = kernel_basis(&stacked.transpose());
        let a = self.dim();
        let vectors = relations
            .basis_vectors()
            .into_iter()
            .map(|rel| {
                self.basis
                    .left_apply(&rel[..a])
                    .expect("coefficient length equals basis size")
            })
            .collect();
        Subspace::span(self.ambient, vectors)
    }

    /// Reduces `v` against the basis; the result is zero exactly when
    /// `v` lies in the span.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::LengthMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = out[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let b = self.basis.get(r, c);
                if !b.is_zero() {
                    *o -= &f * b;
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        for v in other.basis_vectors() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` with respect to the echelon basis, or `None` when
    /// `v` is outside the span. With a reduced echelon basis the coordinates
    /// are simply the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Standard coordinates not used as pivots; they index a complement.
    pub fn non_pivot_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}) ", self.dim(), self.ambient)?;
        self.basis.fmt(f)
    }
}

/// Right null space of `m`, as a subspace of `Q^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let cols = m.cols;
    let mut r = m.clone();
    let pivots = rref_in_place(&mut r, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            v
        })
        .collect();
    Subspace::span(cols, vectors).expect("kernel vectors have matrix width")
}
