use diagred::instances::{Hurwitz, HurwitzRing, IntegerRing, Mat2F2Ring, ModularRing, PolyRing};
use diagred::oracle::{
    determinantal_divisors, exhaustive_invariants, finite_equivalent, hurwitz_ideal_lattices, integer_gcd, poly_gcd,
    Lattice, SweepConfig,
};
use diagred::reduction::{diagonalize, matrix_coboundary, simple_witnesses, verify_chain, ReductionReport};
use diagred::ring::is_duo;
use diagred::{apply_elementary, verify_transform_pair, Capabilities, ElementaryOp, Matrix, Ring, TransformPair};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::document::{element_value, matrix_value, parse_element};
use crate::{CheckLevel, CliError};

/// A ring instance together with its independent cross-check.
pub trait Instance: Ring {
    /// Whether the independent oracle agrees with `d` as a reduction of `a`;
    /// `None` when no oracle covers this input.
    fn oracle_agrees(&self, a: &Matrix<Self::Elem>, d: &[Self::Elem]) -> Option<bool>;
}

fn divisor_products<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    d: &[R::Elem],
    gcd: impl Fn(&R::Elem, &R::Elem) -> R::Elem,
    normalize: impl Fn(&R::Elem) -> R::Elem,
) -> Option<bool> {
    let deltas = determinantal_divisors(ring, a, d.len().min(4), gcd).ok()?;
    let mut product = ring.one();
    for (k, delta) in deltas.iter().enumerate() {
        product = ring.mul(&product, &d[k]);
        if normalize(&product) != *delta {
            return Some(false);
        }
    }
    Some(true)
}

impl Instance for IntegerRing {
    fn oracle_agrees(&self, a: &Matrix<Self::Elem>, d: &[Self::Elem]) -> Option<bool> {
        divisor_products(self, a, d, integer_gcd, |x| x.abs())
    }
}

impl Instance for PolyRing {
    fn oracle_agrees(&self, a: &Matrix<Self::Elem>, d: &[Self::Elem]) -> Option<bool> {
        divisor_products(self, a, d, poly_gcd, Clone::clone)
    }
}

fn finite_check<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>, d: &[R::Elem]) -> Option<bool> {
    let mut full = d.to_vec();
    full.resize(a.rows().min(a.cols()), ring.zero());
    let dm = Matrix::diagonal(ring, a.rows(), a.cols(), &full);
    finite_equivalent(ring, a, &dm).ok()
}

impl Instance for ModularRing {
    fn oracle_agrees(&self, a: &Matrix<Self::Elem>, d: &[Self::Elem]) -> Option<bool> {
        finite_check(self, a, d)
    }
}

impl Instance for Mat2F2Ring {
    fn oracle_agrees(&self, a: &Matrix<Self::Elem>, d: &[Self::Elem]) -> Option<bool> {
        finite_check(self, a, d)
    }
}

impl Instance for HurwitzRing {
    /// Total divisibility of consecutive entries, decided on integer lattices.
    fn oracle_agrees(&self, _a: &Matrix<Hurwitz>, d: &[Hurwitz]) -> Option<bool> {
        let inside = |small: &Lattice, big: &Lattice| small.basis().iter().all(|v| big.contains(v));
        Some(d.windows(2).all(|w| {
            let (lo, hi) = (hurwitz_ideal_lattices(&w[0]), hurwitz_ideal_lattices(&w[1]));
            inside(&hi.two_sided, &lo.right) && inside(&hi.two_sided, &lo.left)
        }))
    }
}

/// Recomputes every claim in a reduction report from the input and output alone.
fn recheck<R: Instance>(ring: &R, rep: &ReductionReport<R::Elem>, level: CheckLevel) -> (bool, Option<bool>) {
    let d = &rep.output;
    let n = d.rows().min(d.cols());
    let all: Vec<R::Elem> = (0..n).map(|i| d.get(i, i).clone()).collect();
    let nonzero: Vec<R::Elem> = all.iter().filter(|e| !ring.is_zero(e)).cloned().collect();
    let mut ok = verify_transform_pair(ring, &rep.input, d, &rep.transforms)
        && d.is_diagonal(ring)
        && verify_chain(ring, &all).unwrap_or(false)
        && matrix_coboundary(ring, d).ok().as_ref() == Some(&rep.matrix_coboundary);
    let oracle = match level {
        CheckLevel::Fast => None,
        CheckLevel::Full => ring.oracle_agrees(&rep.input, &nonzero),
    };
    ok &= oracle != Some(false);
    (ok, oracle)
}

pub fn reduce<R: Instance>(ring: &R, a: &Matrix<R::Elem>, level: CheckLevel) -> Result<(Value, bool), CliError> {
    let rep = diagonalize(ring, a)?;
    let (verified, oracle) = recheck(ring, &rep, level);
    let t = &rep.transforms;
    let checks: Map<String, Value> = rep.checks.iter().map(|c| (c.name.to_string(), Value::Bool(c.passed))).collect();
    let doc = json!({
        "ring": ring.name(),
        "rows": a.rows(),
        "cols": a.cols(),
        "D": matrix_value(ring, &rep.output),
        "P": matrix_value(ring, &t.p),
        "P_inv": matrix_value(ring, &t.p_inv),
        "Q": matrix_value(ring, &t.q),
        "Q_inv": matrix_value(ring, &t.q_inv),
        "diagonal": rep.form.diag.iter().map(|e| element_value(ring, e)).collect::<Vec<_>>(),
        "zero_tail": rep.form.zero_tail,
        "chain_ok": rep.form.chain_ok,
        "duo_flags": rep.form.duo_flags,
        "matrix_coboundary": element_value(ring, &rep.matrix_coboundary),
        "checks": checks,
        "oracle_check": oracle,
        "verified": verified,
    });
    Ok((doc, verified))
}

pub fn analyze<R: Instance>(ring: &R, text: &str, max_n: usize) -> Result<Value, CliError> {
    let a = parse_element(ring, text, "element")?;
    let simple = match simple_witnesses(ring, &a, max_n) {
        Ok(w) => json!({
            "n": w.n,
            "u": w.u.iter().map(|e| element_value(ring, e)).collect::<Vec<_>>(),
            "v": w.v.iter().map(|e| element_value(ring, e)).collect::<Vec<_>>(),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    };
    Ok(json!({
        "ring": ring.name(),
        "element": element_value(ring, &a),
        "is_unit": ring.is_unit(&a),
        "is_duo": is_duo(ring, &a)?,
        "coboundary": element_value(ring, &ring.coboundary(&a)?),
        "simple_witnesses": simple,
    }))
}

pub fn oracle<R: Instance>(ring: &R, seed: u64, level: CheckLevel) -> Result<(String, bool), CliError> {
    ring.require(Capabilities::FINITE)?;
    let report = exhaustive_invariants(ring, SweepConfig { seed, cap: level.sample_cap() })?;
    Ok((report.to_string(), report.passed()))
}

fn random_matrix<R: Ring + ?Sized>(ring: &R, rng: &mut ChaCha8Rng, max: usize) -> Matrix<R::Elem> {
    let (rows, cols) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
    Matrix::new(rows, cols, (0..rows * cols).map(|_| ring.sample(rng)).collect()).unwrap()
}

fn random_op<R: Ring + ?Sized>(ring: &R, rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ElementaryOp<R::Elem> {
    let units: Vec<R::Elem> = ring.search_candidates().into_iter().filter(|u| ring.is_unit(u)).collect();
    let unit = units.get(rng.gen_range(0..units.len().max(1))).cloned().unwrap_or_else(|| ring.one());
    let pick_two = |rng: &mut ChaCha8Rng, n: usize| {
        let i = rng.gen_range(0..n);
        (i, (i + rng.gen_range(1..n)) % n)
    };
    match rng.gen_range(0..4) {
        0 if rows > 1 => {
            let (target, source) = pick_two(rng, rows);
            ElementaryOp::AddRow { target, source, factor: ring.sample(rng) }
        }
        1 if cols > 1 => {
            let (target, source) = pick_two(rng, cols);
            ElementaryOp::AddCol { target, source, factor: ring.sample(rng) }
        }
        2 => ElementaryOp::ScaleRow { row: rng.gen_range(0..rows), unit },
        _ => ElementaryOp::ScaleCol { col: rng.gen_range(0..cols), unit },
    }
}

/// Reductions, coboundary invariance under random elementary words and, for
/// finite instances, the oracle sweep. Returns one line per suite.
pub fn selftest<R: Instance>(ring: &R, seed: u64, level: CheckLevel) -> Vec<(String, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = ring.name();
    let (count, max) = match level {
        CheckLevel::Fast => (25, 3),
        CheckLevel::Full => (200, 4),
    };
    let mut lines = Vec::new();

    let mut failures = 0;
    for _ in 0..count {
        let a = random_matrix(ring, &mut rng, max);
        let ok = diagonalize(ring, &a).map(|rep| recheck(ring, &rep, level).0).unwrap_or(false);
        failures += usize::from(!ok);
    }
    lines.push((format!("{name} reductions: {} of {count} verified", count - failures), failures == 0));

    let mut failures = 0;
    for _ in 0..count {
        let a = random_matrix(ring, &mut rng, max);
        let mut b = a.clone();
        let mut t = TransformPair::identity(ring, a.rows(), a.cols());
        for _ in 0..rng.gen_range(1..=12) {
            let op = random_op(ring, &mut rng, a.rows(), a.cols());
            (b, t) = apply_elementary(ring, &b, &t, &op).expect("operation fits the matrix");
        }
        let same = matrix_coboundary(ring, &a).ok() == matrix_coboundary(ring, &b).ok();
        failures += usize::from(!(same && verify_transform_pair(ring, &a, &b, &t)));
    }
    lines.push((format!("{name} coboundary invariance: {} of {count} words", count - failures), failures == 0));

    if ring.has(Capabilities::FINITE) {
        let (text, passed) = match oracle(ring, seed, level) {
            Ok(x) => x,
            Err(e) => (e.to_string(), false),
        };
        let summary = text.lines().filter(|l| l.starts_with("counterexample")).collect::<Vec<_>>().join("; ");
        let detail = if passed { "no counterexample".to_string() } else { summary };
        lines.push((format!("{name} oracle sweep: {detail}"), passed));
    }
    lines
}
