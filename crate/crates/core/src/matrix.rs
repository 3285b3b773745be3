//! Dense matrices over one ring, sided elementary operations, and transform pairs
//! that carry their own inverses.
//!
//! Row operations are always left multiplications and column operations right
//! multiplications, which matters once the ring is noncommutative.

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, entries: Vec<E>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!("{rows}x{cols} matrix has no entries")));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        assert!(rows > 0 && cols > 0, "empty matrix");
        Matrix { rows, cols, entries: vec![value; rows * cols] }
    }

    pub fn zeros<R: Ring<Elem = E> + ?Sized>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = E> + ?Sized>(ring: &R, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn diagonal<R: Ring<Elem = E> + ?Sized>(ring: &R, rows: usize, cols: usize, diag: &[E]) -> Self {
        let mut m = Matrix::zeros(ring, rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m.set(i, i, d.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<F, T: Clone>(&self, f: F) -> Result<Matrix<T>>
    where
        F: FnMut(&E) -> Result<T>,
    {
        Ok(Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.entries.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in 0..self.rows {
                self.entries.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// `row_target += factor·row_source`
    pub fn add_row_multiple<R: Ring<Elem = E> + ?Sized>(&mut self, ring: &R, target: usize, source: usize, factor: &E) {
        for c in 0..self.cols {
            let v = ring.add(self.get(target, c), &ring.mul(factor, self.get(source, c)));
            self.set(target, c, v);
        }
    }

    /// `col_target += col_source·factor`
    pub fn add_col_multiple<R: Ring<Elem = E> + ?Sized>(&mut self, ring: &R, target: usize, source: usize, factor: &E) {
        for r in 0..self.rows {
            let v = ring.add(self.get(r, target), &ring.mul(self.get(r, source), factor));
            self.set(r, target, v);
        }
    }

    /// `row_i = u·row_i`
    pub fn scale_row<R: Ring<Elem = E> + ?Sized>(&mut self, ring: &R, i: usize, u: &E) {
        for c in 0..self.cols {
            let v = ring.mul(u, self.get(i, c));
            self.set(i, c, v);
        }
    }

    /// `col_j = col_j·u`
    pub fn scale_col<R: Ring<Elem = E> + ?Sized>(&mut self, ring: &R, j: usize, u: &E) {
        for r in 0..self.rows {
            let v = ring.mul(self.get(r, j), u);
            self.set(r, j, v);
        }
    }

    pub fn is_zero<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> bool {
        self.entries.iter().all(|e| ring.is_zero(e))
    }

    pub fn is_identity<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { ring.is_one(self.get(i, j)) } else { ring.is_zero(self.get(i, j)) })
            })
    }

    pub fn is_diagonal<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || ring.is_zero(self.get(i, j))))
    }
}

pub fn multiply<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut out = Matrix::zeros(ring, a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = ring.zero();
            for k in 0..a.cols {
                acc = ring.add(&acc, &ring.mul(a.get(i, k), b.get(k, j)));
            }
            out.set(i, j, acc);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementaryOp<E> {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// `row = unit·row`
    ScaleRow { row: usize, unit: E },
    /// `col = col·unit`
    ScaleCol { col: usize, unit: E },
    /// `row_target += factor·row_source`
    AddRow { target: usize, source: usize, factor: E },
    /// `col_target += col_source·factor`
    AddCol { target: usize, source: usize, factor: E },
}

impl<E: Clone> ElementaryOp<E> {
    pub fn is_row_op(&self) -> bool {
        matches!(self, ElementaryOp::SwapRows(..) | ElementaryOp::ScaleRow { .. } | ElementaryOp::AddRow { .. })
    }

    pub fn inverse<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> Result<Self> {
        Ok(match self {
            ElementaryOp::SwapRows(i, j) => ElementaryOp::SwapRows(*i, *j),
            ElementaryOp::SwapCols(i, j) => ElementaryOp::SwapCols(*i, *j),
            ElementaryOp::ScaleRow { row, unit } => ElementaryOp::ScaleRow { row: *row, unit: ring.invert_unit(unit)? },
            ElementaryOp::ScaleCol { col, unit } => ElementaryOp::ScaleCol { col: *col, unit: ring.invert_unit(unit)? },
            ElementaryOp::AddRow { target, source, factor } => {
                ElementaryOp::AddRow { target: *target, source: *source, factor: ring.neg(factor) }
            }
            ElementaryOp::AddCol { target, source, factor } => {
                ElementaryOp::AddCol { target: *target, source: *source, factor: ring.neg(factor) }
            }
        })
    }

    fn check_bounds(&self, rows: usize, cols: usize) -> Result<()> {
        let ok = match self {
            ElementaryOp::SwapRows(i, j) => *i < rows && *j < rows,
            ElementaryOp::SwapCols(i, j) => *i < cols && *j < cols,
            ElementaryOp::ScaleRow { row, .. } => *row < rows,
            ElementaryOp::ScaleCol { col, .. } => *col < cols,
            ElementaryOp::AddRow { target, source, .. } => *target < rows && *source < rows && target != source,
            ElementaryOp::AddCol { target, source, .. } => *target < cols && *source < cols && target != source,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!("elementary operation out of range for {rows}x{cols}")))
        }
    }
}

/// Invertible transforms with `P·A·Q = current` and carried inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformPair<E> {
    pub p: Matrix<E>,
    pub p_inv: Matrix<E>,
    pub q: Matrix<E>,
    pub q_inv: Matrix<E>,
}

impl<E: Clone> TransformPair<E> {
    pub fn identity<R: Ring<Elem = E> + ?Sized>(ring: &R, rows: usize, cols: usize) -> Self {
        TransformPair {
            p: Matrix::identity(ring, rows),
            p_inv: Matrix::identity(ring, rows),
            q: Matrix::identity(ring, cols),
            q_inv: Matrix::identity(ring, cols),
        }
    }

    /// Transforms for `P1·(P0·A·Q0)·Q1`, given `self = (P0, Q0)` and `then = (P1, Q1)`.
    pub fn then<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, then: &TransformPair<E>) -> Result<Self> {
        Ok(TransformPair {
            p: multiply(ring, &then.p, &self.p)?,
            p_inv: multiply(ring, &self.p_inv, &then.p_inv)?,
            q: multiply(ring, &self.q, &then.q)?,
            q_inv: multiply(ring, &then.q_inv, &self.q_inv)?,
        })
    }
}

/// Applies `op` to `m` and records it (with its inverse) in `t`.
pub fn apply_in_place<R: Ring + ?Sized>(
    ring: &R,
    m: &mut Matrix<R::Elem>,
    t: &mut TransformPair<R::Elem>,
    op: &ElementaryOp<R::Elem>,
) -> Result<()> {
    op.check_bounds(m.rows(), m.cols())?;
    match op {
        ElementaryOp::SwapRows(i, j) => {
            m.swap_rows(*i, *j);
            t.p.swap_rows(*i, *j);
            t.p_inv.swap_cols(*i, *j);
        }
        ElementaryOp::SwapCols(i, j) => {
            m.swap_cols(*i, *j);
            t.q.swap_cols(*i, *j);
            t.q_inv.swap_rows(*i, *j);
        }
        ElementaryOp::ScaleRow { row, unit } => {
            let inv = ring.invert_unit(unit)?;
            m.scale_row(ring, *row, unit);
            t.p.scale_row(ring, *row, unit);
            t.p_inv.scale_col(ring, *row, &inv);
        }
        ElementaryOp::ScaleCol { col, unit } => {
            let inv = ring.invert_unit(unit)?;
            m.scale_col(ring, *col, unit);
            t.q.scale_col(ring, *col, unit);
            t.q_inv.scale_row(ring, *col, &inv);
        }
        ElementaryOp::AddRow { target, source, factor } => {
            m.add_row_multiple(ring, *target, *source, factor);
            t.p.add_row_multiple(ring, *target, *source, factor);
            // P⁻¹·(I − f·e_ts): col_source −= col_target·f
            t.p_inv.add_col_multiple(ring, *source, *target, &ring.neg(factor));
        }
        ElementaryOp::AddCol { target, source, factor } => {
            m.add_col_multiple(ring, *target, *source, factor);
            t.q.add_col_multiple(ring, *target, *source, factor);
            // (I − e_st·f)·Q⁻¹: row_source −= f·row_target
            t.q_inv.add_row_multiple(ring, *source, *target, &ring.neg(factor));
        }
    }
    Ok(())
}

/// Value-returning form of [`apply_in_place`].
pub fn apply_elementary<R: Ring + ?Sized>(
    ring: &R,
    m: &Matrix<R::Elem>,
    t: &TransformPair<R::Elem>,
    op: &ElementaryOp<R::Elem>,
) -> Result<(Matrix<R::Elem>, TransformPair<R::Elem>)> {
    let mut m = m.clone();
    let mut t = t.clone();
    apply_in_place(ring, &mut m, &mut t, op)?;
    Ok((m, t))
}

/// `P·a·Q = d` together with all four inverse identities, recomputed from scratch.
pub fn verify_transform_pair<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    d: &Matrix<R::Elem>,
    t: &TransformPair<R::Elem>,
) -> bool {
    let check = || -> Result<bool> {
        let pa = multiply(ring, &t.p, a)?;
        let paq = multiply(ring, &pa, &t.q)?;
        Ok(paq == *d
            && multiply(ring, &t.p, &t.p_inv)?.is_identity(ring)
            && multiply(ring, &t.p_inv, &t.p)?.is_identity(ring)
            && multiply(ring, &t.q, &t.q_inv)?.is_identity(ring)
            && multiply(ring, &t.q_inv, &t.q)?.is_identity(ring))
    };
    check().unwrap_or(false)
}

/// Diagonal entries `d₁..d_k` (all nonzero) followed by `zero_tail` zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm<E> {
    pub diag: Vec<E>,
    pub zero_tail: usize,
    pub chain_ok: bool,
    pub duo_flags: Vec<bool>,
}

impl<E> DiagonalForm<E> {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}
