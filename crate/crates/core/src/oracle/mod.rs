//! Brute-force ground truth, kept independent of the fast paths it checks.
//!
//! Finite rings are handled by enumeration and closure saturation. Hurwitz
//! ideals are exact integer lattices in the `{1, i, j, ω}` coordinates, and the
//! commutative infinite instances get determinantal divisors.

mod divisors;
mod lattice;
mod sweep;

pub use divisors::{determinantal_divisors, integer_gcd, minor, poly_gcd};
pub use lattice::{hurwitz_elements_up_to_norm, hurwitz_ideal_lattices, HurwitzIdeals, Lattice};
pub use sweep::{exhaustive_invariants, Counterexample, InvariantReport, SweepConfig, DEFAULT_SEED};

use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{unsupported, Capabilities, Ring};

/// Complete, duplicate-free element list of a finite instance.
pub fn enumerate_elements<R: Ring + ?Sized>(ring: &R) -> Result<Vec<R::Elem>> {
    ring.require(Capabilities::FINITE)?;
    let elems = ring.elements().ok_or_else(|| unsupported(ring, Capabilities::FINITE))?;
    let distinct: HashSet<_> = elems.iter().collect();
    if distinct.len() != elems.len() {
        return Err(Error::InvalidRing(format!("{} lists duplicate elements", ring.name())));
    }
    Ok(elems)
}

/// A generator set and the smallest two-sided ideal containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealClosure<E: Eq + Hash> {
    pub generators: Vec<E>,
    pub elements: HashSet<E>,
}

impl<E: Eq + Hash> IdealClosure<E> {
    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Additive subgroup generated by `gens` inside a finite ring.
pub fn additive_span<R: Ring + ?Sized>(ring: &R, gens: impl IntoIterator<Item = R::Elem>) -> HashSet<R::Elem> {
    let mut set: HashSet<R::Elem> = HashSet::from([ring.zero()]);
    for g in gens {
        if set.contains(&g) {
            continue;
        }
        let mut multiples = vec![ring.zero()];
        let mut m = g.clone();
        while !ring.is_zero(&m) {
            multiples.push(m.clone());
            m = ring.add(&m, &g);
        }
        set = set.iter().flat_map(|s| multiples.iter().map(move |k| ring.add(s, k))).collect();
    }
    set
}

/// Smallest two-sided ideal containing every element of `gens`, by saturation.
pub fn two_sided_closure<R: Ring + ?Sized>(ring: &R, gens: &[R::Elem]) -> Result<IdealClosure<R::Elem>> {
    let elems = enumerate_elements(ring)?;
    let mut products = HashSet::new();
    for g in gens {
        for x in &elems {
            let xg = ring.mul(x, g);
            for y in &elems {
                products.insert(ring.mul(&xg, y));
            }
        }
    }
    let elements = additive_span(ring, products);
    debug_assert!(elements.iter().all(|e| elems.iter().all(|r| elements.contains(&ring.mul(r, e)))));
    Ok(IdealClosure { generators: gens.to_vec(), elements })
}

/// Smallest two-sided ideal containing `a`.
pub fn minimal_two_sided_ideal<R: Ring + ?Sized>(ring: &R, a: &R::Elem) -> Result<IdealClosure<R::Elem>> {
    two_sided_closure(ring, std::slice::from_ref(a))
}

/// `aR`, or `Ra` when `left` is set, by enumeration.
pub fn one_sided_ideal<R: Ring + ?Sized>(ring: &R, a: &R::Elem, left: bool) -> Result<HashSet<R::Elem>> {
    let elems = enumerate_elements(ring)?;
    Ok(elems.iter().map(|r| if left { ring.mul(r, a) } else { ring.mul(a, r) }).collect())
}

/// `x₁·r₁ + … + x_k·r_k` over all coefficient vectors, with rows `r_i` (or columns
/// combined on the right when `columns` is set).
fn module_span<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>, columns: bool, elems: &[R::Elem]) -> HashSet<Vec<R::Elem>> {
    let (count, len) = if columns { (m.cols(), m.rows()) } else { (m.rows(), m.cols()) };
    let vector = |k: usize| -> Vec<R::Elem> {
        (0..len).map(|l| if columns { m.get(l, k).clone() } else { m.get(k, l).clone() }).collect()
    };
    let mut span: HashSet<Vec<R::Elem>> = HashSet::from([vec![ring.zero(); len]]);
    for k in 0..count {
        let v = vector(k);
        let multiples: HashSet<Vec<R::Elem>> = elems
            .iter()
            .map(|x| v.iter().map(|e| if columns { ring.mul(e, x) } else { ring.mul(x, e) }).collect())
            .collect();
        span = span
            .iter()
            .flat_map(|s| multiples.iter().map(move |t| s.iter().zip(t).map(|(p, q)| ring.add(p, q)).collect()))
            .collect();
    }
    span
}

/// Largest `|R|^k` the equivalence check will enumerate.
const SPAN_LIMIT: usize = 1 << 20;

/// Necessary conditions for `a ~ b` over a finite ring, each computed by
/// enumeration: equal two-sided ideals of entries, equal sizes of the row and
/// column spans, and on commutative rings equal ideals of `k×k` minors.
pub fn finite_equivalent<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<bool> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Ok(false);
    }
    let elems = enumerate_elements(ring)?;
    let worst = elems.len().checked_pow(a.rows().max(a.cols()) as u32);
    if worst.map_or(true, |w| w > SPAN_LIMIT) {
        return Err(Error::SearchExhausted("matrix too large for enumerated spans".into()));
    }
    if two_sided_closure(ring, a.entries())?.elements != two_sided_closure(ring, b.entries())?.elements {
        return Ok(false);
    }
    for columns in [false, true] {
        if module_span(ring, a, columns, &elems).len() != module_span(ring, b, columns, &elems).len() {
            return Ok(false);
        }
    }
    if ring.has(Capabilities::COMMUTATIVE) {
        for k in 1..=a.rows().min(a.cols()) {
            let ideal = |m: &Matrix<R::Elem>| -> Result<HashSet<R::Elem>> {
                Ok(two_sided_closure(ring, &all_minors(ring, m, k))?.elements)
            };
            if ideal(a)? != ideal(b)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn all_minors<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>, k: usize) -> Vec<R::Elem> {
    let rows = divisors::subsets(m.rows(), k);
    let cols = divisors::subsets(m.cols(), k);
    rows.iter().flat_map(|r| cols.iter().map(move |c| minor(ring, m, r, c))).collect()
}
