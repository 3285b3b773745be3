//! Shared elimination machinery: a matrix under reduction with its accumulated
//! transforms, pivot stages, chain repair and canonical scaling.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::matrix::{apply_in_place, ElementaryOp, Matrix, TransformPair};
use crate::ring::{bezout_plan, divides, BezoutPlan, Capabilities, PairOp, Ring, Side};

/// Iteration budget per unit of matrix size before giving up.
const STEP_BUDGET: usize = 20_000;

pub(crate) struct Workspace<'r, R: Ring + ?Sized> {
    pub ring: &'r R,
    pub m: Matrix<R::Elem>,
    pub t: TransformPair<R::Elem>,
    steps: usize,
    limit: usize,
}

impl<'r, R: Ring + ?Sized> Workspace<'r, R> {
    pub fn new(ring: &'r R, m: Matrix<R::Elem>) -> Self {
        let t = TransformPair::identity(ring, m.rows(), m.cols());
        Workspace::with_transforms(ring, m, t)
    }

    pub fn with_transforms(ring: &'r R, m: Matrix<R::Elem>, t: TransformPair<R::Elem>) -> Self {
        let limit = STEP_BUDGET * (m.rows() + m.cols());
        Workspace { ring, m, t, steps: 0, limit }
    }

    pub fn finish(self) -> (Matrix<R::Elem>, TransformPair<R::Elem>) {
        (self.m, self.t)
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        self.m.get(i, j)
    }

    pub fn apply(&mut self, op: ElementaryOp<R::Elem>) -> Result<()> {
        apply_in_place(self.ring, &mut self.m, &mut self.t, &op)
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.limit {
            return Err(Error::ReductionDiverged(self.steps));
        }
        Ok(())
    }

    /// Replays a pair plan on columns `i, j` (`Right`) or rows `i, j` (`Left`).
    pub fn apply_plan(&mut self, plan: &BezoutPlan<R::Elem>, i: usize, j: usize) -> Result<()> {
        for op in &plan.ops {
            let e = match (plan.side, op) {
                (Side::Right, PairOp::Swap) => ElementaryOp::SwapCols(i, j),
                (Side::Right, PairOp::AddToFirst(f)) => ElementaryOp::AddCol { target: i, source: j, factor: f.clone() },
                (Side::Right, PairOp::AddToSecond(f)) => ElementaryOp::AddCol { target: j, source: i, factor: f.clone() },
                (Side::Right, PairOp::ScaleFirst(u)) => ElementaryOp::ScaleCol { col: i, unit: u.clone() },
                (Side::Left, PairOp::Swap) => ElementaryOp::SwapRows(i, j),
                (Side::Left, PairOp::AddToFirst(f)) => ElementaryOp::AddRow { target: i, source: j, factor: f.clone() },
                (Side::Left, PairOp::AddToSecond(f)) => ElementaryOp::AddRow { target: j, source: i, factor: f.clone() },
                (Side::Left, PairOp::ScaleFirst(u)) => ElementaryOp::ScaleRow { row: i, unit: u.clone() },
            };
            self.apply(e)?;
        }
        Ok(())
    }

    /// Moves `(i, j)` to `(t, t)`.
    fn move_to_corner(&mut self, t: usize, i: usize, j: usize) -> Result<()> {
        if i != t {
            self.apply(ElementaryOp::SwapRows(t, i))?;
        }
        if j != t {
            self.apply(ElementaryOp::SwapCols(t, j))?;
        }
        Ok(())
    }

    fn nonzero_in_block(&self, t: usize, row_end: usize, col_end: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in t..row_end {
            for j in t..col_end {
                if !self.ring.is_zero(self.get(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Clears row and column `t` inside the block `[t, row_end) × [t, col_end)`
    /// around a nonzero pivot. Returns `false` when the block is zero.
    pub fn eliminate(&mut self, t: usize, row_end: usize, col_end: usize) -> Result<bool> {
        if self.ring.has(Capabilities::EUCLIDEAN) {
            self.eliminate_euclidean(t, row_end, col_end)
        } else if self.ring.has(Capabilities::FINITE | Capabilities::STABLE_RANGE_1) {
            self.eliminate_finite(t, row_end, col_end)
        } else {
            Err(crate::ring::unsupported(self.ring, Capabilities::EUCLIDEAN))
        }
    }

    fn eliminate_euclidean(&mut self, t: usize, row_end: usize, col_end: usize) -> Result<bool> {
        loop {
            self.tick()?;
            let mut best: Option<(BigUint, usize, usize)> = None;
            for (i, j) in self.nonzero_in_block(t, row_end, col_end) {
                let n = self.ring.norm(self.get(i, j))?;
                if best.as_ref().map_or(true, |(b, _, _)| n < *b) {
                    best = Some((n, i, j));
                }
            }
            let Some((_, i, j)) = best else { return Ok(false) };
            self.move_to_corner(t, i, j)?;
            // a canonical (monic) pivot keeps rational coefficients from compounding
            let (pivot, u) = self.ring.canonical_associate(self.get(t, t), Side::Right);
            if !self.ring.is_one(&u) {
                self.apply(ElementaryOp::ScaleCol { col: t, unit: u })?;
            }
            for i in t + 1..row_end {
                let (q, _) = self.ring.euclidean_divmod(self.get(i, t), &pivot, Side::Right)?;
                if !self.ring.is_zero(&q) {
                    self.apply(ElementaryOp::AddRow { target: i, source: t, factor: self.ring.neg(&q) })?;
                }
            }
            for j in t + 1..col_end {
                let (q, _) = self.ring.euclidean_divmod(self.get(t, j), &pivot, Side::Left)?;
                if !self.ring.is_zero(&q) {
                    self.apply(ElementaryOp::AddCol { target: j, source: t, factor: self.ring.neg(&q) })?;
                }
            }
            if self.line_clear(t, row_end, col_end) {
                return Ok(true);
            }
        }
    }

    /// `|pR| + |Rp|`, larger is closer to a unit.
    fn ideal_score(&self, p: &R::Elem) -> BigUint {
        let right = self.ring.principal_ideal_size(p, Side::Right).unwrap_or_default();
        let left = self.ring.principal_ideal_size(p, Side::Left).unwrap_or_default();
        right + left
    }

    fn eliminate_finite(&mut self, t: usize, row_end: usize, col_end: usize) -> Result<bool> {
        let mut best: Option<(BigUint, usize, usize)> = None;
        for (i, j) in self.nonzero_in_block(t, row_end, col_end) {
            let s = self.ideal_score(self.get(i, j));
            if best.as_ref().map_or(true, |(b, _, _)| s > *b) {
                best = Some((s, i, j));
            }
        }
        let Some((_, i, j)) = best else { return Ok(false) };
        self.move_to_corner(t, i, j)?;
        loop {
            self.tick()?;
            let pivot = self.get(t, t).clone();
            if let Some(i) = (t + 1..row_end).find(|&i| !self.ring.is_zero(self.get(i, t))) {
                match self.ring.divide(self.get(i, t), &pivot, Side::Left) {
                    Ok(q) => self.apply(ElementaryOp::AddRow { target: i, source: t, factor: self.ring.neg(&q) })?,
                    Err(Error::NotDivisible) => {
                        let plan = bezout_plan(self.ring, &pivot, self.get(i, t), Side::Left)?;
                        self.apply_plan(&plan, t, i)?;
                    }
                    Err(e) => return Err(e),
                }
                continue;
            }
            if let Some(j) = (t + 1..col_end).find(|&j| !self.ring.is_zero(self.get(t, j))) {
                match self.ring.divide(self.get(t, j), &pivot, Side::Right) {
                    Ok(q) => self.apply(ElementaryOp::AddCol { target: j, source: t, factor: self.ring.neg(&q) })?,
                    Err(Error::NotDivisible) => {
                        let plan = bezout_plan(self.ring, &pivot, self.get(t, j), Side::Right)?;
                        self.apply_plan(&plan, t, j)?;
                    }
                    Err(e) => return Err(e),
                }
                continue;
            }
            return Ok(true);
        }
    }

    fn line_clear(&self, t: usize, row_end: usize, col_end: usize) -> bool {
        (t + 1..row_end).all(|i| self.ring.is_zero(self.get(i, t)))
            && (t + 1..col_end).all(|j| self.ring.is_zero(self.get(t, j)))
    }

    /// Diagonalizes the whole matrix, without chain repair.
    pub fn eliminate_all(&mut self) -> Result<()> {
        let (r, c) = (self.m.rows(), self.m.cols());
        for t in 0..r.min(c) {
            if !self.eliminate(t, r, c)? {
                break;
            }
        }
        Ok(())
    }

    pub fn diagonal(&self) -> Vec<R::Elem> {
        (0..self.m.rows().min(self.m.cols())).map(|i| self.get(i, i).clone()).collect()
    }

    /// Repairs the total-divisor chain on a diagonal matrix, recording each repair.
    pub fn repair_chain(&mut self) -> Result<Vec<RepairStep<R::Elem>>> {
        let mut trace = Vec::new();
        while let Some(i) = first_chain_break(self.ring, &self.diagonal())? {
            self.tick()?;
            let before = self.diagonal();
            let (a, b) = (before[i].clone(), before[i + 1].clone());
            let ring = self.ring;
            let row_factor = ring
                .generators()
                .into_iter()
                .map(|x| -> Result<Option<R::Elem>> { Ok((!divides(ring, &a, &ring.mul(&x, &b), Side::Right)?).then_some(x)) })
                .find_map(|r| r.transpose());
            if let Some(x) = row_factor {
                self.apply(ElementaryOp::AddRow { target: i, source: i + 1, factor: x? })?;
            } else {
                let col_factor = ring
                    .generators()
                    .into_iter()
                    .map(|y| -> Result<Option<R::Elem>> { Ok((!divides(ring, &a, &ring.mul(&b, &y), Side::Left)?).then_some(y)) })
                    .find_map(|r| r.transpose());
                match col_factor {
                    Some(y) => self.apply(ElementaryOp::AddCol { target: i, source: i + 1, factor: y? })?,
                    None => {
                        return Err(Error::InvalidWitness(format!(
                            "chain breaks at {i} but every generator product is divisible"
                        )))
                    }
                }
            }
            self.eliminate(i, i + 2, i + 2)?;
            self.eliminate(i + 1, i + 2, i + 2)?;
            trace.push(RepairStep { index: i, before, after: self.diagonal() });
        }
        Ok(trace)
    }

    /// Scales each diagonal entry on the right to its canonical associate.
    pub fn canonicalize_diagonal(&mut self) -> Result<()> {
        for i in 0..self.m.rows().min(self.m.cols()) {
            let (_, u) = self.ring.canonical_associate(self.get(i, i), Side::Right);
            if !self.ring.is_one(&u) {
                self.apply(ElementaryOp::ScaleCol { col: i, unit: u })?;
            }
        }
        Ok(())
    }
}

/// One chain repair: the diagonal before and after fixing the pair at `index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairStep<E> {
    pub index: usize,
    pub before: Vec<E>,
    pub after: Vec<E>,
}

/// `Rb R ⊆ aR ∩ Ra`, tested through the duo generator of `RbR`.
pub fn totally_divides<R: Ring + ?Sized>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<bool> {
    let c = ring.coboundary(b)?;
    Ok(divides(ring, a, &c, Side::Right)? && divides(ring, a, &c, Side::Left)?)
}

/// First `i` with `d_i` not totally dividing `d_{i+1}`.
pub fn first_chain_break<R: Ring + ?Sized>(ring: &R, diag: &[R::Elem]) -> Result<Option<usize>> {
    for i in 0..diag.len().saturating_sub(1) {
        if !totally_divides(ring, &diag[i], &diag[i + 1])? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
