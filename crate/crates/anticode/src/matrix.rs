//! Dense matrices over a finite field: reduced row echelon form, rank,
//! null spaces, products, and an iterator over projective representatives.
//!
//! All routines are deterministic. `rref` pivots on the leftmost nonzero
//! column using the topmost available row, so equal row spaces always
//! produce identical echelon forms.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::gf::{Field, FieldElement, FieldError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("expected {rows}x{cols} = {} entries, got {found}", rows * cols)]
    ShapeMismatch { rows: usize, cols: usize, found: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A rows x cols matrix over a finite field, stored row-major.
#[derive(Clone)]
pub struct MatrixGF {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl PartialEq for MatrixGF {
    fn eq(&self, other: &Self) -> bool {
        self.field.spec() == other.field.spec()
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl Eq for MatrixGF {}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over GF({})", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn new(
        field: Arc<Field>,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch { rows, cols, found: entries.len() });
        }
        debug_assert!(entries.iter().all(|e| e.encoding() < field.order()));
        Ok(MatrixGF { field, rows, cols, entries })
    }

    /// Builds a matrix from raw integer encodings, validating each against
    /// the field order.
    pub fn from_encodings(
        field: Arc<Field>,
        rows: usize,
        cols: usize,
        encodings: &[u64],
    ) -> Result<Self, MatrixError> {
        if encodings.len() != rows * cols {
            return Err(MatrixError::ShapeMismatch { rows, cols, found: encodings.len() });
        }
        let entries = encodings
            .iter()
            .map(|&v| field.element(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MatrixGF { field, rows, cols, entries })
    }

    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Self {
        let zero = field.zero();
        MatrixGF { field, rows, cols, entries: vec![zero; rows * cols] }
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> MatrixGF {
        let mut out = MatrixGF::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    /// Keeps only the listed columns, in the order given.
    pub fn select_columns(&self, keep: &[usize]) -> MatrixGF {
        assert!(keep.iter().all(|&c| c < self.cols), "column index out of range");
        let mut entries = Vec::with_capacity(self.rows * keep.len());
        for r in 0..self.rows {
            let row = self.row(r);
            entries.extend(keep.iter().map(|&c| row[c]));
        }
        MatrixGF { field: self.field.clone(), rows: self.rows, cols: keep.len(), entries }
    }

    pub fn with_appended_row(&self, row: &[FieldElement]) -> Result<MatrixGF, MatrixError> {
        if row.len() != self.cols {
            return Err(MatrixError::DimensionMismatch { left: self.cols, right: row.len() });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(row);
        Ok(MatrixGF { field: self.field.clone(), rows: self.rows + 1, cols: self.cols, entries })
    }

    /// Reduced row echelon form and the pivot column indices.
    pub fn rref(&self) -> (MatrixGF, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // Topmost nonzero entry at or below pivot_row.
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let (a, b) = (m.get(pivot_row, c), m.get(src, c));
                    m.set(pivot_row, c, b);
                    m.set(src, c, a);
                }
            }
            let inv = f.inv(m.get(pivot_row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let v = f.mul(m.get(pivot_row, c), inv);
                m.set(pivot_row, c, v);
            }
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.sub(m.get(r, c), f.mul(factor, m.get(pivot_row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A canonical basis of the row space: the nonzero rows of the RREF.
    pub fn row_space_basis(&self) -> MatrixGF {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let entries = r.entries[..rank * r.cols].to_vec();
        MatrixGF { field: self.field.clone(), rows: rank, cols: self.cols, entries }
    }

    /// A deterministic basis of `{ x : M x^T = 0 }`, one row per free column
    /// of the RREF, ordered by free column index. The result is a
    /// `(cols - rank) x cols` matrix (zero rows when the rank is full).
    pub fn null_space(&self) -> MatrixGF {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = MatrixGF::zeros(f.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.set(i, fc, f.one());
            for (row, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(i, pc, f.neg(r.get(row, fc)));
            }
        }
        out
    }

    /// `M v` for a column vector `v` of length `cols`.
    pub fn mat_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>, MatrixError> {
        if v.len() != self.cols {
            return Err(MatrixError::DimensionMismatch { left: self.cols, right: v.len() });
        }
        Ok((0..self.rows).map(|r| inner_unchecked(&self.field, self.row(r), v)).collect())
    }

    /// `x M` for a row vector `x` of length `rows`.
    pub fn vec_mat(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>, MatrixError> {
        if x.len() != self.rows {
            return Err(MatrixError::DimensionMismatch { left: self.rows, right: x.len() });
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (r, &xr) in x.iter().enumerate() {
            if xr.is_zero() {
                continue;
            }
            let row = self.row(r);
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(xr, g));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF, MatrixError> {
        if self.field.spec() != other.field.spec() {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch { left: self.cols, right: other.rows });
        }
        let f = &self.field;
        let mut out = MatrixGF::zeros(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }
}

/// Inner product of two equal-length vectors.
pub fn inner_product(
    field: &Field,
    a: &[FieldElement],
    b: &[FieldElement],
) -> Result<FieldElement, MatrixError> {
    if a.len() != b.len() {
        return Err(MatrixError::DimensionMismatch { left: a.len(), right: b.len() });
    }
    Ok(inner_unchecked(field, a, b))
}

#[inline]
pub(crate) fn inner_unchecked(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    let mut acc = field.zero();
    for (&x, &y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = field.add(acc, field.mul(x, y));
        }
    }
    acc
}

/// Number of 1-dimensional subspaces of GF(q)^k, i.e. `(q^k - 1) / (q - 1)`;
/// `None` if the count overflows u64.
pub fn projective_point_count(q: u64, k: usize) -> Option<u64> {
    let mut count: u128 = 0;
    let mut power: u128 = 1;
    for _ in 0..k {
        count = count.checked_add(power)?;
        power = power.checked_mul(q as u128)?;
        if count > u64::MAX as u128 {
            return None;
        }
    }
    u64::try_from(count).ok()
}

/// Iterates the canonical representatives of the 1-dimensional subspaces of
/// GF(q)^k — the vectors whose first nonzero coordinate is 1 — in
/// lexicographic order of their coordinate tuples.
pub fn projective_points(field: &Arc<Field>, k: usize) -> ProjectivePoints {
    assert!(k >= 1, "projective points need dimension >= 1");
    ProjectivePoints {
        field: field.clone(),
        k,
        lead: k - 1,
        suffix: 0,
        exhausted: false,
    }
}

pub struct ProjectivePoints {
    field: Arc<Field>,
    k: usize,
    /// Index of the leading 1; walks from k-1 down to 0.
    lead: usize,
    /// Counter over the coordinates after the leading 1, big-endian base q.
    suffix: u64,
    exhausted: bool,
}

impl Iterator for ProjectivePoints {
    type Item = Vec<FieldElement>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted {
            return None;
        }
        let q = self.field.order();
        let tail = self.k - 1 - self.lead;
        let mut v = vec![self.field.zero(); self.k];
        v[self.lead] = self.field.one();
        let mut rem = self.suffix;
        for i in (0..tail).rev() {
            v[self.lead + 1 + i] = self.field.element(rem % q).expect("digit below q");
            rem /= q;
        }
        // Advance: next suffix in this block, or the next leading position.
        self.suffix += 1;
        let block = (q as u128).pow(tail as u32);
        if self.suffix as u128 >= block {
            self.suffix = 0;
            if self.lead == 0 {
                self.exhausted = true;
            } else {
                self.lead -= 1;
            }
        }
        Some(v)
    }
}
