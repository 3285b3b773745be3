use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use super::parse::{format_rational, Cursor};
use crate::error::{Error, ParseError, Result};
use crate::ring::{Capabilities, Ring, Side};

/// Polynomial over ℚ, coefficients lowest degree first, never with a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.last()
    }

    fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.0.iter().map(|x| x * c).collect())
    }

    /// `(N, d)` with integer coefficients `N` and `self = N / d`.
    fn over_common_denominator(&self) -> (Vec<BigInt>, BigInt) {
        let d = self.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let n = self.0.iter().map(|c| c.numer() * (&d / c.denom())).collect();
        (n, d)
    }

    fn shifted_scale(&self, c: &BigRational, shift: usize) -> Poly {
        let mut v = vec![BigRational::zero(); shift];
        v.extend(self.0.iter().map(|x| x * c));
        Poly::new(v)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", PolyRing.format_element(self))
    }
}

/// ℚ[x], Euclidean under `1 + degree`. Canonical associates are monic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PolyRing;

impl PolyRing {
    fn divmod(&self, a: &Poly, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.leading().unwrap().recip();
        let mut q = vec![BigRational::zero(); a.0.len().saturating_sub(dd)];
        let mut r = a.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.leading().unwrap() * &lead_inv;
            let shift = rd - dd;
            r = self.sub(&r, &d.shifted_scale(&c, shift));
            q[shift] = c;
        }
        Ok((Poly::new(q), r))
    }
}

impl Ring for PolyRing {
    type Elem = Poly;

    fn name(&self) -> String {
        "polyq".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities::BEZOUT
            | Capabilities::EUCLIDEAN
            | Capabilities::D_PROPERTY
            | Capabilities::K_PROPERTY_DOCUMENTED
            | Capabilities::COMMUTATIVE
    }

    fn zero(&self) -> Poly {
        Poly::default()
    }

    fn one(&self) -> Poly {
        Poly::constant(BigRational::one())
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.0.len().max(b.0.len());
        let zero = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|i| a.0.get(i).unwrap_or(&zero) + b.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn neg(&self, a: &Poly) -> Poly {
        Poly(a.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::default();
        }
        // integer convolution, then a single reduction per coefficient
        let (an, ad) = a.over_common_denominator();
        let (bn, bd) = b.over_common_denominator();
        let mut out = vec![BigInt::zero(); an.len() + bn.len() - 1];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        let d = ad * bd;
        Poly::new(out.into_iter().map(|c| BigRational::new(c, d.clone())).collect())
    }

    fn is_unit(&self, a: &Poly) -> bool {
        a.degree() == Some(0)
    }

    fn invert_unit(&self, a: &Poly) -> Result<Poly> {
        if self.is_unit(a) {
            Ok(Poly::constant(a.0[0].recip()))
        } else {
            Err(Error::NotAUnit)
        }
    }

    fn canonical_associate(&self, a: &Poly, _side: Side) -> (Poly, Poly) {
        match a.leading() {
            None => (a.clone(), self.one()),
            Some(lead) => {
                let inv = lead.recip();
                (a.scale(&inv), Poly::constant(inv))
            }
        }
    }

    fn generators(&self) -> Vec<Poly> {
        vec![self.one()]
    }

    fn divide(&self, a: &Poly, d: &Poly, _side: Side) -> Result<Poly> {
        let (q, r) = self.divmod(a, d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    fn norm(&self, a: &Poly) -> Result<BigUint> {
        Ok(BigUint::from(a.0.len()))
    }

    fn euclidean_divmod(&self, a: &Poly, d: &Poly, _side: Side) -> Result<(Poly, Poly)> {
        self.divmod(a, d)
    }

    fn coboundary(&self, a: &Poly) -> Result<Poly> {
        Ok(self.canonical_associate(a, Side::Right).0)
    }

    /// JSON-style array of rational strings: `["1/2","0","1"]` is `x² + 1/2`.
    fn parse_element(&self, text: &str) -> std::result::Result<Poly, ParseError> {
        let mut cur = Cursor::new(text);
        cur.expect(b'[')?;
        let mut coeffs = Vec::new();
        if !cur.at(b']') {
            loop {
                cur.expect(b'"')?;
                coeffs.push(cur.rational()?);
                cur.expect(b'"')?;
                if cur.at(b',') {
                    cur.expect(b',')?;
                } else {
                    break;
                }
            }
        }
        let close = cur.pos();
        cur.expect(b']')?;
        cur.finish()?;
        if coeffs.last().is_some_and(|c| c.is_zero()) {
            return Err(ParseError::new(close, "trailing zero coefficient"));
        }
        Ok(Poly(coeffs))
    }

    fn format_element(&self, a: &Poly) -> String {
        let parts: Vec<String> = a.0.iter().map(|c| format!("\"{}\"", format_rational(c))).collect();
        format!("[{}]", parts.join(","))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Poly {
        let len = rng.gen_range(0..=3usize);
        Poly::new(
            (0..len)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(-4i64..=4)), BigInt::from(rng.gen_range(1i64..=3))))
                .collect(),
        )
    }

    fn search_candidates(&self) -> Vec<Poly> {
        vec![
            self.zero(),
            self.one(),
            Poly::from_ints(&[-1]),
            Poly::from_ints(&[0, 1]),
            Poly::from_ints(&[0, -1]),
            Poly::from_ints(&[1, 1]),
            Poly::from_ints(&[-1, 1]),
            Poly::from_ints(&[2]),
        ]
    }
}
