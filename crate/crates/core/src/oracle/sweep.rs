//! Exhaustive (or seeded-sample) sweeps over a finite ring, comparing every fast
//! path with enumeration. The first disagreement is reported with its inputs.

use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{enumerate_elements, finite_equivalent, one_sided_ideal, two_sided_closure};
use crate::error::{Error, Result};
use crate::matrix::{verify_transform_pair, Matrix};
use crate::reduction::{corner_form, diagonalize, kaplansky_pq, lower_triangular_form, matrix_coboundary};
use crate::ring::{divides, ideal_sum, sr1_bezout, Capabilities, Ring, Side};

pub const DEFAULT_SEED: u64 = 0xD1C0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    /// Above this many cases a category is sampled instead of enumerated.
    pub cap: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { seed: DEFAULT_SEED, cap: 10_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub ring: String,
    pub tallies: Vec<(&'static str, usize)>,
    pub counterexample: Option<Counterexample>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring)?;
        for (name, n) in &self.tallies {
            writeln!(f, "checked {name}: {n}")?;
        }
        match &self.counterexample {
            None => write!(f, "result: PASS"),
            Some(c) => {
                writeln!(f, "counterexample {}: {}", c.check, c.detail)?;
                write!(f, "result: FAIL")
            }
        }
    }
}

struct Sweep<'r, R: Ring + ?Sized> {
    ring: &'r R,
    elems: Vec<R::Elem>,
    everything: HashSet<R::Elem>,
    config: SweepConfig,
    tallies: Vec<(&'static str, usize)>,
}

type Found = Option<Counterexample>;

fn fail(check: &'static str, detail: String) -> Found {
    Some(Counterexample { check, detail })
}

impl<'r, R: Ring + ?Sized> Sweep<'r, R> {
    fn fmt_all(&self, xs: &[&R::Elem]) -> String {
        xs.iter().map(|x| self.ring.format_element(x)).collect::<Vec<_>>().join(", ")
    }

    fn fmt_matrix(&self, m: &Matrix<R::Elem>) -> String {
        let rows: Vec<String> = m
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|e| self.ring.format_element(e)).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }

    /// All index tuples of length `k`, or a seeded sample when there are too many.
    fn tuples(&self, k: usize) -> Vec<Vec<R::Elem>> {
        let n = self.elems.len();
        let total = n.checked_pow(k as u32);
        if total.is_some_and(|t| t <= self.config.cap) {
            (0..total.unwrap())
                .map(|mut idx| {
                    (0..k)
                        .map(|_| {
                            let e = self.elems[idx % n].clone();
                            idx /= n;
                            e
                        })
                        .collect()
                })
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
            (0..self.config.cap).map(|_| (0..k).map(|_| self.elems[rng.gen_range(0..n)].clone()).collect()).collect()
        }
    }

    fn elements(&mut self) -> Result<Found> {
        let ring = self.ring;
        for a in &self.elems {
            let oracle = two_sided_closure(ring, std::slice::from_ref(a))?.elements;
            let fast = match ring.coboundary(a) {
                Ok(c) => c,
                Err(e) => return Ok(fail("element.coboundary", format!("{}: {e}", ring.format_element(a)))),
            };
            let right = one_sided_ideal(ring, &fast, false)?;
            let left = one_sided_ideal(ring, &fast, true)?;
            if right != oracle || left != oracle {
                return Ok(fail(
                    "element.coboundary",
                    format!("a = {}, fast generator {} does not span RaR", ring.format_element(a), ring.format_element(&fast)),
                ));
            }
        }
        self.tallies.push(("element.coboundary", self.elems.len()));
        Ok(None)
    }

    fn pairs(&mut self) -> Result<Found> {
        let ring = self.ring;
        let cases = self.tuples(2);
        for case in &cases {
            let (a, b) = (&case[0], &case[1]);
            for side in [Side::Right, Side::Left] {
                let left = side == Side::Left;
                let coprime = ideal_sum(&one_sided_ideal(ring, a, left)?, &one_sided_ideal(ring, b, left)?, |x, y| {
                    ring.add(x, y)
                }) == self.everything;
                let w = match sr1_bezout(ring, a, b, side) {
                    Ok(w) => w,
                    Err(e) => return Ok(fail("pair.stable_range", format!("({}) {side}: {e}", self.fmt_all(&[a, b])))),
                };
                if !w.holds(ring, a, b) || ring.is_unit(&w.d) != coprime {
                    return Ok(fail(
                        "pair.stable_range",
                        format!(
                            "({}) {side}: shift {} gives {}, ideal sum is {}the ring",
                            self.fmt_all(&[a, b]),
                            ring.format_element(&w.x),
                            ring.format_element(&w.d),
                            if coprime { "" } else { "not " }
                        ),
                    ));
                }
            }
        }
        self.tallies.push(("pair.stable_range", cases.len()));
        Ok(None)
    }

    fn matrices(&mut self) -> Result<Found> {
        let ring = self.ring;
        let cases = self.tuples(4);
        for case in &cases {
            let m = Matrix::new(2, 2, case.clone())?;
            if let Some(c) = self.one_matrix(&m)? {
                return Ok(Some(c));
            }
        }
        self.tallies.push(("matrix.coboundary", cases.len()));
        if ring.has(Capabilities::STABLE_RANGE_1) {
            self.tallies.push(("matrix.corner_forms", cases.len()));
        }
        self.tallies.push(("matrix.diagonalize", cases.len()));
        Ok(None)
    }

    fn one_matrix(&self, m: &Matrix<R::Elem>) -> Result<Found> {
        let ring = self.ring;
        let shown = || self.fmt_matrix(m);
        let oracle = two_sided_closure(ring, m.entries())?.elements;
        let spans = |g: &R::Elem| -> Result<bool> { Ok(two_sided_closure(ring, std::slice::from_ref(g))?.elements == oracle) };
        match matrix_coboundary(ring, m) {
            Ok(g) if spans(&g)? => {}
            Ok(g) => return Ok(fail("matrix.coboundary", format!("{}: generator {}", shown(), ring.format_element(&g)))),
            Err(e) => return Ok(fail("matrix.coboundary", format!("{}: {e}", shown()))),
        }
        if ring.has(Capabilities::STABLE_RANGE_1) {
            let (b, t) = match corner_form(ring, m) {
                Ok(x) => x,
                Err(e) => return Ok(fail("matrix.corner_form", format!("{}: {e}", shown()))),
            };
            let (z, gamma, delta) = (b.get(0, 0), b.get(0, 1), b.get(1, 0));
            let ok = verify_transform_pair(ring, m, &b, &t)
                && ring.is_zero(b.get(1, 1))
                && spans(z)?
                && divides(ring, z, gamma, Side::Right)?
                && oracle.contains(delta);
            if !ok {
                return Ok(fail("matrix.corner_form", format!("{} -> {}", shown(), self.fmt_matrix(&b))));
            }
            let (b, t) = match lower_triangular_form(ring, m) {
                Ok(x) => x,
                Err(e) => return Ok(fail("matrix.lower_form", format!("{}: {e}", shown()))),
            };
            let ok = verify_transform_pair(ring, m, &b, &t)
                && ring.is_zero(b.get(0, 1))
                && spans(b.get(0, 0))?
                && oracle.contains(b.get(1, 0))
                && oracle.contains(b.get(1, 1));
            if !ok {
                return Ok(fail("matrix.lower_form", format!("{} -> {}", shown(), self.fmt_matrix(&b))));
            }
        }
        match diagonalize(ring, m) {
            Ok(rep) if rep.verified() && finite_equivalent(ring, m, &rep.output)? => {}
            Ok(rep) => return Ok(fail("matrix.diagonalize", format!("{} -> {}", shown(), self.fmt_matrix(&rep.output)))),
            Err(e) => return Ok(fail("matrix.diagonalize", format!("{}: {e}", shown()))),
        }
        Ok(None)
    }

    /// Whether some `p, q` give `p·a·R + (p·b + q·c)·R = R`, by enumeration.
    fn pair_exists(&self, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Result<bool> {
        let ring = self.ring;
        for p in &self.elems {
            let pa = one_sided_ideal(ring, &ring.mul(p, a), false)?;
            let pb = ring.mul(p, b);
            for q in &self.elems {
                let rest = one_sided_ideal(ring, &ring.add(&pb, &ring.mul(q, c)), false)?;
                if ideal_sum(&pa, &rest, |x, y| ring.add(x, y)) == self.everything {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    fn triples(&mut self) -> Result<Found> {
        let ring = self.ring;
        let cases = self.tuples(3);
        let (mut eligible, mut unsatisfiable) = (0, 0);
        for case in &cases {
            let (a, b, c) = (&case[0], &case[1], &case[2]);
            if two_sided_closure(ring, case)?.elements != self.everything {
                continue;
            }
            eligible += 1;
            let shown = || self.fmt_all(&[a, b, c]);
            match kaplansky_pq(ring, a, b, c) {
                Ok(k) if k.holds(ring, a, b, c) => {}
                Ok(k) => {
                    return Ok(fail(
                        "triple.kaplansky",
                        format!("({}): p = {}, q = {}", shown(), ring.format_element(&k.p), ring.format_element(&k.q)),
                    ))
                }
                Err(Error::CriterionUnsatisfiable(_)) if !self.pair_exists(a, b, c)? => unsatisfiable += 1,
                Err(e) => return Ok(fail("triple.kaplansky", format!("({}): {e}", shown()))),
            }
        }
        self.tallies.push(("triple.kaplansky", eligible));
        self.tallies.push(("triple.kaplansky_unsatisfiable", unsatisfiable));
        Ok(None)
    }
}

/// Sweeps elements, pairs, 2×2 matrices and triples of a finite ring.
///
/// Confirms that stable-range shifts exist and give a unit exactly when the
/// one-sided ideal sum is the ring, that the fast coboundary spans the enumerated
/// two-sided ideal, that the corner forms and diagonalization satisfy their
/// postconditions, and that for triples generating the unit ideal a Kaplansky
/// pair is found exactly when enumeration finds one. Stops at the first
/// counterexample.
pub fn exhaustive_invariants<R: Ring + ?Sized>(ring: &R, config: SweepConfig) -> Result<InvariantReport> {
    let elems = enumerate_elements(ring)?;
    let everything = elems.iter().cloned().collect();
    let mut sweep = Sweep { ring, elems, everything, config, tallies: Vec::new() };
    let mut counterexample = sweep.elements()?;
    if counterexample.is_none() && ring.has(Capabilities::STABLE_RANGE_1) {
        counterexample = sweep.pairs()?;
    }
    if counterexample.is_none() {
        counterexample = sweep.matrices()?;
    }
    if counterexample.is_none() {
        counterexample = sweep.triples()?;
    }
    Ok(InvariantReport { ring: ring.name(), tallies: sweep.tallies, counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::ModularRing;

    #[test]
    fn small_modulus_passes() {
        let report = exhaustive_invariants(&ModularRing::new(4).unwrap(), SweepConfig::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.to_string().ends_with("result: PASS"));
    }

    #[test]
    fn sampling_is_reproducible() {
        let r = ModularRing::new(12).unwrap();
        let config = SweepConfig { seed: DEFAULT_SEED, cap: 50 };
        let elems = enumerate_elements(&r).unwrap();
        let everything = elems.iter().cloned().collect();
        let sweep = Sweep { ring: &r, elems, everything, config, tallies: Vec::new() };
        assert_eq!(sweep.tuples(4), sweep.tuples(4));
        assert_eq!(sweep.tuples(4).len(), 50);
    }
}
