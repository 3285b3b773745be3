//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{random_matrix, random_word};
use diagred::instances::{Bits2x2, Hurwitz, HurwitzRing, IntegerRing, Mat2F2Ring, ModularRing, Poly, PolyRing};
use diagred::oracle::{
    determinantal_divisors, enumerate_elements, hurwitz_ideal_lattices, integer_gcd, poly_gcd, two_sided_closure,
    Lattice, DEFAULT_SEED,
};
use diagred::reduction::{
    corner_form, diagonalize, kaplansky_pq, lower_triangular_form, matrix_coboundary, simple_witnesses,
    split_off_unit, verify_chain,
};
use diagred::ring::{divides, is_duo};
use diagred::{verify_transform_pair, Error, Matrix, Ring, Side};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<String, String> {
    let spent = start.elapsed();
    ensure(spent <= budget, || format!("took {:.2?}, budget {:.0?}", spent, budget))?;
    Ok(format!("{:.2?}", spent))
}

fn seeded(offset: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(DEFAULT_SEED + offset)
}

/// `d₁···d_k` against the gcd of the `k×k` minors for `k ≤ min(4, rank)`.
fn divisors_match<R: Ring>(
    ring: &R,
    m: &Matrix<R::Elem>,
    diag: &[R::Elem],
    gcd: impl Fn(&R::Elem, &R::Elem) -> R::Elem,
    normalize: impl Fn(&R::Elem) -> R::Elem,
) -> Result<(), String> {
    let kmax = diag.len().min(4);
    let deltas = determinantal_divisors(ring, m, kmax, gcd).map_err(|e| e.to_string())?;
    let mut product = ring.one();
    for (k, delta) in deltas.iter().enumerate() {
        product = ring.mul(&product, &diag[k]);
        ensure(normalize(&product) == *delta, || format!("k = {}: product {product:?}, minors give {delta:?}", k + 1))?;
    }
    Ok(())
}

fn integer_diagonalization() -> Outcome {
    let r = IntegerRing;
    let mut rng = seeded(1);
    let start = Instant::now();
    for n in 0..500 {
        let (rows, cols) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m = random_matrix(&r, &mut rng, rows, cols);
        let rep = diagonalize(&r, &m).map_err(|e| format!("matrix {n}: {e}"))?;
        ensure(verify_transform_pair(&r, &m, &rep.output, &rep.transforms), || format!("matrix {n}: transforms"))?;
        ensure(rep.form.chain_ok, || format!("matrix {n}: chain"))?;
        divisors_match(&r, &m, &rep.form.diag, integer_gcd, |x| x.abs()).map_err(|e| format!("matrix {n}: {e}"))?;
    }
    Ok(format!("500 matrices up to 6x6 in {}", within(start, Duration::from_secs(10))?))
}

fn random_poly(rng: &mut dyn RngCore) -> Poly {
    let len = rng.gen_range(0..=5usize);
    Poly::new(
        (0..len)
            .map(|_| BigRational::new(BigInt::from(rng.gen_range(-5i64..=5)), BigInt::from(rng.gen_range(1i64..=4))))
            .collect(),
    )
}

fn polynomial_diagonalization() -> Outcome {
    let r = PolyRing;
    let mut rng = seeded(2);
    let start = Instant::now();
    for n in 0..200 {
        let (rows, cols) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let m = Matrix::new(rows, cols, (0..rows * cols).map(|_| random_poly(&mut rng)).collect()).unwrap();
        let rep = diagonalize(&r, &m).map_err(|e| format!("matrix {n}: {e}"))?;
        ensure(verify_transform_pair(&r, &m, &rep.output, &rep.transforms), || format!("matrix {n}: transforms"))?;
        ensure(rep.form.chain_ok, || format!("matrix {n}: chain"))?;
        ensure(rep.form.diag.iter().all(|d| d.leading().is_some_and(|c| c.is_one())), || format!("matrix {n}: not monic"))?;
        divisors_match(&r, &m, &rep.form.diag, poly_gcd, Clone::clone).map_err(|e| format!("matrix {n}: {e}"))?;
    }
    Ok(format!("200 matrices up to 4x4, degree <= 4, in {}", within(start, Duration::from_secs(10))?))
}

fn modular_exhaustive() -> Outcome {
    let r = ModularRing::new(6).unwrap();
    let elems = enumerate_elements(&r).unwrap();
    let ideal = |gens: &[u64]| two_sided_closure(&r, gens).unwrap().elements;
    let mut count = 0;
    for idx in 0..1296usize {
        let entries: Vec<u64> = (0..4).map(|k| elems[idx / 6usize.pow(k) % 6]).collect();
        let m = Matrix::new(2, 2, entries.clone()).unwrap();
        let target = ideal(&entries);
        let show = || format!("{:?}", m.to_rows());
        let (b, t) = corner_form(&r, &m).map_err(|e| format!("{}: {e}", show()))?;
        ensure(verify_transform_pair(&r, &m, &b, &t) && r.is_zero(b.get(1, 1)), || format!("{}: corner form", show()))?;
        ensure(ideal(&[*b.get(0, 0)]) == target, || format!("{}: corner RzR differs", show()))?;
        ensure(divides(&r, b.get(0, 0), b.get(0, 1), Side::Right).unwrap(), || format!("{}: corner divisibility", show()))?;
        let (b, t) = lower_triangular_form(&r, &m).map_err(|e| format!("{}: {e}", show()))?;
        ensure(verify_transform_pair(&r, &m, &b, &t) && r.is_zero(b.get(0, 1)), || format!("{}: lower form", show()))?;
        ensure(ideal(&[*b.get(0, 0)]) == target, || format!("{}: lower RaR differs", show()))?;
        let rep = diagonalize(&r, &m).map_err(|e| format!("{}: {e}", show()))?;
        ensure(rep.verified() && rep.form.chain_ok, || format!("{}: diagonalize", show()))?;
        count += 1;
    }
    Ok(format!("{count} matrices, zero failures"))
}

fn mat2f2_sweep() -> Outcome {
    let f = Mat2F2Ring;
    let elems = enumerate_elements(&f).unwrap();
    let units = elems.iter().filter(|a| elems.iter().any(|b| f.is_one(&f.mul(a, b)) && f.is_one(&f.mul(b, a)))).count();
    ensure(units == 6, || format!("{units} units"))?;
    let a = Bits2x2::E11;
    let w = simple_witnesses(&f, &a, 3).map_err(|e| e.to_string())?;
    let one_term = elems.iter().any(|u| elems.iter().any(|v| f.is_one(&f.mul(&f.mul(u, &a), v))));
    ensure(w.n == 2 && w.holds(&f, &a) && !one_term, || format!("e11 witness {w:?}"))?;
    let mut two_simple = 0;
    for x in &elems {
        let w = match simple_witnesses(&f, x, 2) {
            Ok(w) if w.n == 2 => w,
            _ => continue,
        };
        let rep = split_off_unit(&f, x, &w).map_err(|e| format!("{x:?}: {e}"))?;
        ensure(rep.verified() && f.is_one(rep.output.get(0, 0)), || format!("{x:?}: split report"))?;
        if *x == a {
            ensure(f.is_zero(rep.output.get(1, 1)), || format!("e11 leaves {:?}", rep.output.get(1, 1)))?;
        }
        two_simple += 1;
    }
    ensure(two_simple == 9, || format!("{two_simple} two-simple elements"))?;
    Ok(format!("6 units, {two_simple} two-simple elements split, e11 leaves 0"))
}

fn hurwitz_lattice(a: &Hurwitz) -> diagred::oracle::HurwitzIdeals {
    hurwitz_ideal_lattices(a)
}

fn inside(small: &Lattice, big: &Lattice) -> bool {
    small.basis().iter().all(|v| big.contains(v))
}

fn random_hurwitz(rng: &mut dyn RngCore, reach: i64) -> Hurwitz {
    Hurwitz::new(rng.gen_range(-reach..=reach), rng.gen_range(-reach..=reach), rng.gen_range(-reach..=reach), rng.gen_range(-reach..=reach))
}

fn hurwitz_suite() -> Outcome {
    let r = HurwitzRing;
    let mut rng = seeded(5);
    let start = Instant::now();
    for n in 0..200 {
        let m = Matrix::new(3, 3, (0..9).map(|_| random_hurwitz(&mut rng, 10)).collect()).unwrap();
        let rep = diagonalize(&r, &m).map_err(|e| format!("matrix {n}: {e}"))?;
        ensure(verify_transform_pair(&r, &m, &rep.output, &rep.transforms), || format!("matrix {n}: transforms"))?;
        for pair in rep.form.diag.windows(2) {
            let (lo, hi) = (hurwitz_lattice(&pair[0]), hurwitz_lattice(&pair[1]));
            ensure(inside(&hi.two_sided, &lo.right) && inside(&hi.two_sided, &lo.left), || {
                format!("matrix {n}: {:?} does not totally divide {:?}", pair[0], pair[1])
            })?;
        }
    }
    for n in 0..10_000 {
        let (a, d) = (random_hurwitz(&mut rng, 10), random_hurwitz(&mut rng, 10));
        if r.is_zero(&d) {
            continue;
        }
        let (q, rem) = r.euclidean_divmod(&a, &d, Side::Right).map_err(|e| e.to_string())?;
        ensure(r.add(&r.mul(&q, &d), &rem) == a && rem.reduced_norm() < d.reduced_norm(), || format!("divmod pair {n}"))?;
    }
    for n in 0..10_000 {
        let (a, b) = (random_hurwitz(&mut rng, 10), random_hurwitz(&mut rng, 10));
        ensure(r.mul(&a, &b).reduced_norm() == a.reduced_norm() * b.reduced_norm(), || format!("norm pair {n}"))?;
    }
    Ok(format!("200 3x3 matrices, 10^4 divisions, 10^4 norm products in {}", within(start, Duration::from_secs(20))?))
}

fn invariance_for<R: Ring>(ring: &R, rng: &mut ChaCha8Rng) -> Result<(), String> {
    for n in 0..1000 {
        let (rows, cols) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let m = random_matrix(ring, rng, rows, cols);
        let len = rng.gen_range(1..=12);
        let (image, t) = random_word(ring, rng, &m, len);
        ensure(verify_transform_pair(ring, &m, &image, &t), || format!("{} word {n}: transforms", ring.name()))?;
        let (before, after) = (matrix_coboundary(ring, &m), matrix_coboundary(ring, &image));
        ensure(before.is_ok() && before == after, || format!("{} word {n}: {before:?} vs {after:?}", ring.name()))?;
    }
    Ok(())
}

fn coboundary_invariance() -> Outcome {
    let mut rng = seeded(6);
    invariance_for(&IntegerRing, &mut rng)?;
    invariance_for(&PolyRing, &mut rng)?;
    invariance_for(&ModularRing::new(6).unwrap(), &mut rng)?;
    invariance_for(&HurwitzRing, &mut rng)?;
    invariance_for(&Mat2F2Ring, &mut rng)?;
    Ok("1000 words on each of 5 instances".into())
}

fn kaplansky_criterion() -> Outcome {
    let z6 = ModularRing::new(6).unwrap();
    let elems = enumerate_elements(&z6).unwrap();
    let everything = two_sided_closure(&z6, &[1]).unwrap().elements;
    let mut eligible = 0;
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                if two_sided_closure(&z6, &[a, b, c]).unwrap().elements != everything {
                    continue;
                }
                eligible += 1;
                let k = kaplansky_pq(&z6, &a, &b, &c).map_err(|e| format!("({a}, {b}, {c}): {e}"))?;
                ensure(k.holds(&z6, &a, &b, &c), || format!("({a}, {b}, {c}): certificate"))?;
            }
        }
    }
    let r = IntegerRing;
    let mut rng = seeded(7);
    let mut found = 0;
    while found < 1000 {
        let [a, b, c]: [BigInt; 3] = std::array::from_fn(|_| r.sample(&mut rng));
        if !integer_gcd(&integer_gcd(&a, &b), &c).is_one() {
            continue;
        }
        found += 1;
        let k = kaplansky_pq(&r, &a, &b, &c).map_err(|e| format!("({a}, {b}, {c}): {e}"))?;
        ensure(k.holds(&r, &a, &b, &c), || format!("({a}, {b}, {c}): certificate"))?;
    }
    Ok(format!("{eligible} Z/6 triples, {found} integer triples"))
}

fn negative_controls() -> Outcome {
    let z = IntegerRing;
    let chain = verify_chain(&z, &[BigInt::from(2), BigInt::from(3)]).map_err(|e| e.to_string())?;
    ensure(!chain, || "diag(2, 3) accepted as a chain".into())?;
    let duo = is_duo(&HurwitzRing, &Hurwitz::new(2, 1, 0, 0)).map_err(|e| e.to_string())?;
    ensure(!duo, || "2+i reported duo".into())?;
    let q = z.divide(&BigInt::from(5), &BigInt::from(2), Side::Right);
    ensure(q == Err(Error::NotDivisible), || format!("divide(5, 2) gave {q:?}"))?;
    Ok("diag(2,3) rejected, 2+i not duo, 5/2 not divisible".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("integer diagonalization", integer_diagonalization),
        ("rational polynomial diagonalization", polynomial_diagonalization),
        ("Z/6 exhaustive 2x2 forms", modular_exhaustive),
        ("M2(F2) units and simple elements", mat2f2_sweep),
        ("Hurwitz reduction and arithmetic", hurwitz_suite),
        ("matrix coboundary invariance", coboundary_invariance),
        ("Kaplansky pairs", kaplansky_criterion),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
