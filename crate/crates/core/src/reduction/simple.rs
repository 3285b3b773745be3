//! Simple elements (`Σ uᵢ·a·vᵢ = 1`), splitting `diag(a, a)` into `diag(1, Δ)`,
//! and Kaplansky pairs for upper triangular 2×2 matrices.

use std::collections::HashSet;

use super::engine::Workspace;
use super::{build_report, can_diagonalize, diagonalize, matrix_coboundary, ReductionReport};
use crate::error::{Error, Result};
use crate::matrix::{ElementaryOp, Matrix};
use crate::ring::{bezout_plan, gcd_with_witnesses, Capabilities, GcdWitness, Ring, Side};

/// `Σ u[i]·a·v[i] = 1` with `n` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleWitness<E> {
    pub n: usize,
    pub u: Vec<E>,
    pub v: Vec<E>,
}

impl<E: Clone> SimpleWitness<E> {
    pub fn holds<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, a: &E) -> bool {
        self.u.len() == self.n
            && self.v.len() == self.n
            && ring.is_one(
                &self.u.iter().zip(&self.v).fold(ring.zero(), |acc, (u, v)| ring.add(&acc, &ring.mul(&ring.mul(u, a), v))),
            )
    }
}

/// Shortest witness found for `a` being simple, searching at most `max_n` terms.
///
/// Units give `n = 1`. Otherwise the witness is read off the reduction of
/// `diag(a, a)` when its corner is a unit: with `z = Σ P₁ₖ·a·Qₖ₁`,
/// `u = (z⁻¹P₁₁, z⁻¹P₁₂)` and `v = (Q₁₁, Q₂₁)`. Finite rings fall back to a
/// breadth-first search over sums of `u·a·v`.
pub fn simple_witnesses<R: Ring + ?Sized>(ring: &R, a: &R::Elem, max_n: usize) -> Result<SimpleWitness<R::Elem>> {
    if ring.is_unit(a) {
        return Ok(SimpleWitness { n: 1, u: vec![ring.one()], v: vec![ring.invert_unit(a)?] });
    }
    if !ring.is_unit(&ring.coboundary(a)?) {
        return Err(Error::NotSimple);
    }
    let elems = ring.elements();
    if let Some(elems) = &elems {
        if let Some((_, u, v)) = products(ring, a, elems).into_iter().find(|(p, _, _)| ring.is_one(p)) {
            return Ok(SimpleWitness { n: 1, u: vec![u], v: vec![v] });
        }
    }
    if max_n >= 2 && can_diagonalize(ring).is_ok() {
        if let Some(w) = extract_from_double(ring, a)? {
            return Ok(w);
        }
    }
    if let Some(elems) = &elems {
        if let Some(w) = search_sums(ring, a, elems, max_n) {
            return Ok(w);
        }
    }
    Err(Error::SearchExhausted(format!("no simple witness with at most {max_n} terms")))
}

fn extract_from_double<R: Ring + ?Sized>(ring: &R, a: &R::Elem) -> Result<Option<SimpleWitness<R::Elem>>> {
    let rep = diagonalize(ring, &Matrix::diagonal(ring, 2, 2, &[a.clone(), a.clone()]))?;
    let z = rep.output.get(0, 0);
    if !ring.is_unit(z) {
        return Ok(None);
    }
    let zi = ring.invert_unit(z)?;
    let (p, q) = (&rep.transforms.p, &rep.transforms.q);
    let w = SimpleWitness {
        n: 2,
        u: vec![ring.mul(&zi, p.get(0, 0)), ring.mul(&zi, p.get(0, 1))],
        v: vec![q.get(0, 0).clone(), q.get(1, 0).clone()],
    };
    Ok(w.holds(ring, a).then_some(w))
}

/// First witness for each value of `u·a·v`, in enumeration order.
fn products<R: Ring + ?Sized>(ring: &R, a: &R::Elem, elems: &[R::Elem]) -> Vec<(R::Elem, R::Elem, R::Elem)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in elems {
        let ua = ring.mul(u, a);
        for v in elems {
            let p = ring.mul(&ua, v);
            if seen.insert(p.clone()) {
                out.push((p, u.clone(), v.clone()));
            }
        }
    }
    out
}

fn search_sums<R: Ring + ?Sized>(
    ring: &R,
    a: &R::Elem,
    elems: &[R::Elem],
    max_n: usize,
) -> Option<SimpleWitness<R::Elem>> {
    let singles = products(ring, a, elems);
    let mut level: Vec<(R::Elem, Vec<R::Elem>, Vec<R::Elem>)> =
        singles.iter().map(|(p, u, v)| (p.clone(), vec![u.clone()], vec![v.clone()])).collect();
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (s, us, vs) in &level {
            for (p, u, v) in &singles {
                let sum = ring.add(s, p);
                if !seen.insert(sum.clone()) {
                    continue;
                }
                let mut us = us.clone();
                let mut vs = vs.clone();
                us.push(u.clone());
                vs.push(v.clone());
                if ring.is_one(&sum) {
                    return Some(SimpleWitness { n, u: us, v: vs });
                }
                next.push((sum, us, vs));
            }
        }
        level = next;
    }
    None
}

/// Reduces `diag(a, a)` to `diag(1, Δ)` from a witness with at most two terms.
///
/// With `u₁a + u₂a·t = w₁`, `t + x·a = w₂` and `a·w₂ + s·a = w₃` all units, the
/// factors `[[s, 1], [1, 0]]`, `diag(1, w₂)` and `[[1, 0], [1, 1]]` bring
/// `diag(a, a)` to `[[w₃, a·w₂], [a, 0]]`, and the unit pivot `w₃` is cleared.
pub fn split_off_unit<R: Ring + ?Sized>(
    ring: &R,
    a: &R::Elem,
    w: &SimpleWitness<R::Elem>,
) -> Result<ReductionReport<R::Elem>> {
    ring.require(Capabilities::STABLE_RANGE_1)?;
    if w.n > 2 || !w.holds(ring, a) {
        return Err(Error::InvalidWitness(format!("not a simple witness with at most two terms for {a:?}")));
    }
    let pick = |k: usize| w.u.get(k).cloned().unwrap_or_else(|| ring.zero());
    let (u1, u2) = (pick(0), pick(1));
    let unit = |e: R::Elem, what: &str| -> Result<R::Elem> {
        if ring.is_unit(&e) {
            Ok(e)
        } else {
            Err(Error::InvalidWitness(format!("{what} is not a unit")))
        }
    };
    let (u1a, u2a) = (ring.mul(&u1, a), ring.mul(&u2, a));
    let t = ring.sr1_shift(&u1a, &u2a, Side::Right)?;
    unit(ring.add(&u1a, &ring.mul(&u2a, &t)), "u1·a + u2·a·t")?;
    let x = ring.sr1_shift(&t, a, Side::Left)?;
    let w2 = unit(ring.add(&t, &ring.mul(&x, a)), "t + x·a")?;
    let aw2 = ring.mul(a, &w2);
    let s = ring.sr1_shift(&aw2, a, Side::Left)?;
    let w3 = unit(ring.add(&aw2, &ring.mul(&s, a)), "a·w2 + s·a")?;

    let input = Matrix::diagonal(ring, 2, 2, &[a.clone(), a.clone()]);
    let mut ws = Workspace::new(ring, input.clone());
    ws.apply(ElementaryOp::AddRow { target: 1, source: 0, factor: s })?;
    ws.apply(ElementaryOp::SwapRows(0, 1))?;
    ws.apply(ElementaryOp::ScaleCol { col: 1, unit: w2.clone() })?;
    ws.apply(ElementaryOp::AddCol { target: 0, source: 1, factor: ring.one() })?;
    debug_assert_eq!(*ws.get(0, 0), w3);
    let w3i = ring.invert_unit(&w3)?;
    ws.apply(ElementaryOp::AddRow { target: 1, source: 0, factor: ring.neg(&ring.mul(a, &w3i)) })?;
    ws.apply(ElementaryOp::AddCol { target: 1, source: 0, factor: ring.neg(&ring.mul(&ring.mul(&w3i, a), &w2)) })?;
    ws.apply(ElementaryOp::ScaleRow { row: 0, unit: w3i })?;
    ws.canonicalize_diagonal()?;
    let (d, transforms) = ws.finish();
    let alpha = matrix_coboundary(ring, &input)?;
    build_report(ring, &input, d, transforms, alpha)
}

/// `p, q` with `p·a·R + (p·b + q·c)·R = R`, certified by a right gcd that is a unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaplanskyPair<E> {
    pub p: E,
    pub q: E,
    pub certificate: GcdWitness<E>,
}

impl<E: Clone + Eq> KaplanskyPair<E> {
    pub fn holds<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, a: &E, b: &E, c: &E) -> bool {
        let (x, y) = kaplansky_terms(ring, &self.p, &self.q, a, b, c);
        self.certificate.side == Side::Right && ring.is_unit(&self.certificate.d) && self.certificate.holds(ring, &x, &y)
    }
}

fn kaplansky_terms<R: Ring + ?Sized>(
    ring: &R,
    p: &R::Elem,
    q: &R::Elem,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> (R::Elem, R::Elem) {
    (ring.mul(p, a), ring.add(&ring.mul(p, b), &ring.mul(q, c)))
}

fn certify<R: Ring + ?Sized>(
    ring: &R,
    p: &R::Elem,
    q: &R::Elem,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Result<Option<KaplanskyPair<R::Elem>>> {
    let (x, y) = kaplansky_terms(ring, p, q, a, b, c);
    if !ring.is_unit(&bezout_plan(ring, &x, &y, Side::Right)?.gcd) {
        return Ok(None);
    }
    let certificate = gcd_with_witnesses(ring, &x, &y, Side::Right)?;
    Ok(Some(KaplanskyPair { p: p.clone(), q: q.clone(), certificate }))
}

/// Kaplansky pair for `[[a, b], [0, c]]` when `RaR + RbR + RcR = R`.
///
/// Searches the ring's candidate list (`p` outer, `q` inner), then reads
/// `p, q` off the first row of `P` in a diagonalization `P·A·Q = diag(z, Δ)`
/// with `z` a unit.
pub fn kaplansky_pq<R: Ring + ?Sized>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Result<KaplanskyPair<R::Elem>> {
    let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![ring.zero(), c.clone()]])?;
    if !ring.is_unit(&matrix_coboundary(ring, &m)?) {
        return Err(Error::CriterionUnsatisfiable("the entries generate a proper two-sided ideal".into()));
    }
    let candidates = ring.search_candidates();
    for p in &candidates {
        for q in &candidates {
            if let Some(pair) = certify(ring, p, q, a, b, c)? {
                return Ok(pair);
            }
        }
    }
    if can_diagonalize(ring).is_err() {
        return Err(Error::SearchExhausted("no candidate pair and no diagonal reduction available".into()));
    }
    let rep = diagonalize(ring, &m)?;
    if !ring.is_unit(rep.output.get(0, 0)) {
        return Err(Error::CriterionUnsatisfiable(format!(
            "diagonal corner {} is not a unit",
            ring.format_element(rep.output.get(0, 0))
        )));
    }
    let (p, q) = (rep.transforms.p.get(0, 0), rep.transforms.p.get(0, 1));
    certify(ring, p, q, a, b, c)?
        .ok_or_else(|| Error::CriterionUnsatisfiable("extracted pair fails the gcd certificate".into()))
}
