use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::parse::Cursor;
use crate::error::{Error, ParseError, Result};
use crate::ring::{Capabilities, Ring, Side};

/// Arbitrary-precision integers. Canonical associates are non-negative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn name(&self) -> String {
        "int".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities::BEZOUT
            | Capabilities::EUCLIDEAN
            | Capabilities::D_PROPERTY
            | Capabilities::K_PROPERTY_DOCUMENTED
            | Capabilities::COMMUTATIVE
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }

    fn invert_unit(&self, a: &BigInt) -> Result<BigInt> {
        if self.is_unit(a) {
            Ok(a.clone())
        } else {
            Err(Error::NotAUnit)
        }
    }

    fn canonical_associate(&self, a: &BigInt, _side: Side) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-a, -BigInt::one())
        } else {
            (a.clone(), BigInt::one())
        }
    }

    fn generators(&self) -> Vec<BigInt> {
        vec![BigInt::one()]
    }

    fn divide(&self, a: &BigInt, d: &BigInt, _side: Side) -> Result<BigInt> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = a.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    fn norm(&self, a: &BigInt) -> Result<BigUint> {
        Ok(a.magnitude().clone())
    }

    fn euclidean_divmod(&self, a: &BigInt, d: &BigInt, _side: Side) -> Result<(BigInt, BigInt)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // remainder in [0, |d|)
        let r = a.mod_floor(&d.abs());
        let q = (a - &r) / d;
        Ok((q, r))
    }

    fn coboundary(&self, a: &BigInt) -> Result<BigInt> {
        Ok(a.abs())
    }

    fn parse_element(&self, text: &str) -> std::result::Result<BigInt, ParseError> {
        let mut cur = Cursor::new(text);
        let n = cur.integer()?;
        cur.finish()?;
        Ok(n)
    }

    fn format_element(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigInt {
        BigInt::from(rng.gen_range(-99i64..=99))
    }

    fn search_candidates(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero()];
        for k in 1..=8i64 {
            out.push(BigInt::from(k));
            out.push(BigInt::from(-k));
        }
        out
    }
}
