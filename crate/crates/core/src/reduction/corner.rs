//! 2×2 reductions over stable-range-1 rings whose corner entry generates the
//! matrix coboundary.

use super::engine::Workspace;
use super::matrix_coboundary;
use crate::error::{Error, Result};
use crate::matrix::{ElementaryOp, Matrix, TransformPair};
use crate::ring::{bezout_plan, divides, Capabilities, Ring, Side};

fn require_square_pair<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<()> {
    ring.require(Capabilities::STABLE_RANGE_1 | Capabilities::D_PROPERTY)?;
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::DimensionMismatch(format!("expected a 2x2 matrix, got {}x{}", a.rows(), a.cols())));
    }
    Ok(())
}

/// `δ ∈ RzR`, via the duo generator of `RzR`.
fn in_two_sided<R: Ring + ?Sized>(ring: &R, z: &R::Elem, delta: &R::Elem) -> Result<bool> {
    divides(ring, &ring.coboundary(z)?, delta, Side::Right)
}

fn canonical_first_column<R: Ring + ?Sized>(ws: &mut Workspace<'_, R>) -> Result<()> {
    let (_, u) = ws.ring.canonical_associate(ws.get(0, 0), Side::Right);
    if !ws.ring.is_one(&u) {
        ws.apply(ElementaryOp::ScaleCol { col: 0, unit: u })?;
    }
    Ok(())
}

/// `[[z, γ], [δ, 0]]` with `γ ∈ zR`, `δ ∈ RzR` and `RzR` the matrix coboundary.
pub fn corner_form<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<(Matrix<R::Elem>, TransformPair<R::Elem>)> {
    require_square_pair(ring, a)?;
    let alpha = matrix_coboundary(ring, a)?;
    let (z, gamma, delta) = (a.get(0, 0), a.get(0, 1), a.get(1, 0));
    if ring.is_zero(a.get(1, 1))
        && divides(ring, z, gamma, Side::Right)?
        && in_two_sided(ring, z, delta)?
        && ring.coboundary(z)? == alpha
    {
        return Ok((a.clone(), TransformPair::identity(ring, 2, 2)));
    }
    let mut ws = Workspace::new(ring, a.clone());
    // [[α, 0], [β, γ]]
    let plan = bezout_plan(ring, a.get(0, 0), a.get(0, 1), Side::Right)?;
    ws.apply_plan(&plan, 0, 1)?;
    // x·α + β = d generates Rα + Rβ; rows become [[d, γ], [α, 0]]
    let x = ring.sr1_shift(ws.get(1, 0), ws.get(0, 0), Side::Left)?;
    if !ring.is_zero(&x) {
        ws.apply(ElementaryOp::AddRow { target: 1, source: 0, factor: x })?;
    }
    ws.apply(ElementaryOp::SwapRows(0, 1))?;
    // d + γ·y = z generates dR + γR
    let y = ring.sr1_shift(ws.get(0, 0), ws.get(0, 1), Side::Right)?;
    if !ring.is_zero(&y) {
        ws.apply(ElementaryOp::AddCol { target: 0, source: 1, factor: y })?;
    }
    canonical_first_column(&mut ws)?;
    Ok(ws.finish())
}

/// `[[a, 0], [b, c]]` with `RaR` the matrix coboundary and `b, c ∈ RaR`.
pub fn lower_triangular_form<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
) -> Result<(Matrix<R::Elem>, TransformPair<R::Elem>)> {
    require_square_pair(ring, a)?;
    if ring.is_zero(a.get(0, 1)) && ring.coboundary(a.get(0, 0))? == matrix_coboundary(ring, a)? {
        return Ok((a.clone(), TransformPair::identity(ring, 2, 2)));
    }
    let (m, t) = corner_form(ring, a)?;
    let mut ws = Workspace::with_transforms(ring, m, t);
    // z + γ·t generates zR + γR = zR
    let shift = ring.sr1_shift(ws.get(0, 0), ws.get(0, 1), Side::Right)?;
    if !ring.is_zero(&shift) {
        ws.apply(ElementaryOp::AddCol { target: 0, source: 1, factor: shift })?;
    }
    if !ring.is_zero(ws.get(0, 1)) {
        let s = ring.divide(ws.get(0, 1), ws.get(0, 0), Side::Right)?;
        ws.apply(ElementaryOp::AddCol { target: 1, source: 0, factor: ring.neg(&s) })?;
    }
    canonical_first_column(&mut ws)?;
    Ok(ws.finish())
}
