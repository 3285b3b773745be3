//! Determinantal divisors for commutative instances: `Δ_k` is the gcd of all
//! `k×k` minors, and the diagonal form must satisfy `d₁···d_k ~ Δ_k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::instances::Poly;
use crate::matrix::Matrix;
use crate::ring::{Capabilities, Ring};

/// All increasing `k`-subsets of `0..n`.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Determinant of the submatrix on `rows × cols` by Laplace expansion along the first row.
pub fn minor<R: Ring + ?Sized>(ring: &R, m: &Matrix<R::Elem>, rows: &[usize], cols: &[usize]) -> R::Elem {
    if rows.is_empty() {
        return ring.one();
    }
    let r0 = rows[0];
    let rest = &rows[1..];
    let mut acc = ring.zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = m.get(r0, c);
        if ring.is_zero(entry) {
            continue;
        }
        let others: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = ring.mul(entry, &minor(ring, m, rest, &others));
        acc = if k % 2 == 0 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

/// `[Δ₁, …, Δ_kmax]` with `Δ_k` the gcd of all `k×k` minors under `gcd`.
pub fn determinantal_divisors<R: Ring + ?Sized>(
    ring: &R,
    m: &Matrix<R::Elem>,
    kmax: usize,
    gcd: impl Fn(&R::Elem, &R::Elem) -> R::Elem,
) -> Result<Vec<R::Elem>> {
    ring.require(Capabilities::COMMUTATIVE)?;
    let kmax = kmax.min(m.rows()).min(m.cols());
    let mut out = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let mut g = ring.zero();
        for rows in subsets(m.rows(), k) {
            for cols in subsets(m.cols(), k) {
                g = gcd(&g, &minor(ring, m, &rows, &cols));
            }
        }
        out.push(g);
    }
    Ok(out)
}

/// Non-negative integer gcd.
pub fn integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lead;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &f * c;
        }
        r = trim(r);
    }
    r
}

/// Monic gcd of two rational polynomials by plain long division.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = trim(a.coeffs().to_vec());
    let mut y = trim(b.coeffs().to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    debug_assert!(x.last().map_or(true, |c| c.is_one()));
    Poly::new(x)
}
