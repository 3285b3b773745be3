use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore};

use super::parse::Cursor;
use crate::error::{Error, ParseError, Result};
use crate::ring::{Capabilities, Ring, Side};

/// Residues `0..n` modulo a fixed `n ≥ 2`.
///
/// Every ideal is generated by a divisor of `n`; that divisor (as a residue) is
/// the canonical generator, and canonical associates are `gcd(a, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularRing {
    modulus: u64,
}

impl ModularRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("modulus must be at least 2, got {modulus}")));
        }
        Ok(ModularRing { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, a: i128) -> u64 {
        a.rem_euclid(self.modulus as i128) as u64
    }

    fn gcd_n(&self, a: u64) -> u64 {
        a.gcd(&self.modulus)
    }

    /// Inverse of `a` modulo `m` for `gcd(a, m) = 1`, `m ≥ 1`.
    fn inverse_mod(a: u64, m: u64) -> u64 {
        if m == 1 {
            return 0;
        }
        let e = (a as i128).extended_gcd(&(m as i128));
        debug_assert_eq!(e.gcd, 1);
        e.x.rem_euclid(m as i128) as u64
    }

    /// A unit `u` with `a·u ≡ gcd(a, n)`; lifts the inverse of `a/g` modulo `n/g`.
    fn normalizing_unit(&self, a: u64) -> u64 {
        if a == 0 {
            return 1;
        }
        let g = self.gcd_n(a);
        let m = self.modulus / g;
        let base = Self::inverse_mod((a / g) % m, m);
        let mut u = base;
        while u.gcd(&self.modulus) != 1 {
            u += m;
        }
        u % self.modulus
    }
}

impl Ring for ModularRing {
    type Elem = u64;

    fn name(&self) -> String {
        format!("zmod:{}", self.modulus)
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities::BEZOUT
            | Capabilities::STABLE_RANGE_1
            | Capabilities::D_PROPERTY
            | Capabilities::K_PROPERTY_DOCUMENTED
            | Capabilities::COMMUTATIVE
            | Capabilities::FINITE
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn is_unit(&self, a: &u64) -> bool {
        self.gcd_n(*a) == 1
    }

    fn invert_unit(&self, a: &u64) -> Result<u64> {
        if self.is_unit(a) {
            Ok(Self::inverse_mod(*a, self.modulus))
        } else {
            Err(Error::NotAUnit)
        }
    }

    fn canonical_associate(&self, a: &u64, _side: Side) -> (u64, u64) {
        if *a == 0 {
            return (0, 1);
        }
        (self.gcd_n(*a) % self.modulus, self.normalizing_unit(*a))
    }

    fn generators(&self) -> Vec<u64> {
        vec![1]
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.modulus).collect())
    }

    fn divide(&self, a: &u64, d: &u64, _side: Side) -> Result<u64> {
        if *d == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = self.gcd_n(*d);
        if a % g != 0 {
            return Err(Error::NotDivisible);
        }
        let m = self.modulus / g;
        let q = (a / g) as u128 * Self::inverse_mod((d / g) % m, m) as u128 % m as u128;
        Ok(q as u64)
    }

    fn coboundary(&self, a: &u64) -> Result<u64> {
        Ok(self.canonical_associate(a, Side::Right).0)
    }

    /// Works over the integers: the first `x` with `gcd(a + b·x, n) = gcd(a, b, n)`.
    fn sr1_shift(&self, a: &u64, b: &u64, _side: Side) -> Result<u64> {
        let target = a.gcd(b).gcd(&self.modulus);
        (0..self.modulus)
            .find(|x| self.gcd_n(self.add(a, &self.mul(b, x))) == target)
            .ok_or_else(|| Error::SearchExhausted("no stable-range shift exists".into()))
    }

    fn principal_ideal_size(&self, a: &u64, _side: Side) -> Option<BigUint> {
        Some(BigUint::from(self.modulus / self.gcd_n(*a)))
    }

    /// Any decimal integer, reduced modulo `n`.
    fn parse_element(&self, text: &str) -> std::result::Result<u64, ParseError> {
        let mut cur = Cursor::new(text);
        let v: BigInt = cur.integer()?;
        cur.finish()?;
        let r = v.mod_floor(&BigInt::from(self.modulus));
        Ok(r.to_u64().unwrap_or_else(|| unreachable!("residue below modulus")))
    }

    fn format_element(&self, a: &u64) -> String {
        a.to_string()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.modulus)
    }

    fn search_candidates(&self) -> Vec<u64> {
        (0..self.modulus.min(64)).collect()
    }
}
