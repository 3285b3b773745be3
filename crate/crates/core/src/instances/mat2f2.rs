use std::fmt;

use rand::{Rng, RngCore};

use super::parse::Cursor;
use crate::error::{Error, ParseError, Result};
use crate::ring::{Capabilities, Ring, Side};

/// A 2×2 matrix over F₂, packed row-major as bits `a11 a12 a21 a22` (high to low).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits2x2(u8);

impl Bits2x2 {
    pub const ZERO: Bits2x2 = Bits2x2(0);
    pub const ONE: Bits2x2 = Bits2x2(0b1001);
    pub const E11: Bits2x2 = Bits2x2(0b1000);
    pub const E12: Bits2x2 = Bits2x2(0b0100);
    pub const E21: Bits2x2 = Bits2x2(0b0010);
    pub const E22: Bits2x2 = Bits2x2(0b0001);

    pub fn from_bits(bits: u8) -> Self {
        Bits2x2(bits & 0b1111)
    }

    pub fn from_rows(rows: [[u8; 2]; 2]) -> Self {
        Bits2x2(((rows[0][0] & 1) << 3) | ((rows[0][1] & 1) << 2) | ((rows[1][0] & 1) << 1) | (rows[1][1] & 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn entry(self, r: usize, c: usize) -> u8 {
        (self.0 >> (3 - (2 * r + c))) & 1
    }

    pub fn det(self) -> u8 {
        (self.entry(0, 0) & self.entry(1, 1)) ^ (self.entry(0, 1) & self.entry(1, 0))
    }

    pub fn rank(self) -> u8 {
        if self.0 == 0 {
            0
        } else if self.det() == 1 {
            2
        } else {
            1
        }
    }
}

impl fmt::Debug for Bits2x2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{},{}],[{},{}]]",
            self.entry(0, 0),
            self.entry(0, 1),
            self.entry(1, 0),
            self.entry(1, 1)
        )
    }
}

/// The simple ring M₂(F₂): 16 elements, 6 units, stable range 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Mat2F2Ring;

impl Ring for Mat2F2Ring {
    type Elem = Bits2x2;

    fn name(&self) -> String {
        "mat2f2".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities::BEZOUT
            | Capabilities::STABLE_RANGE_1
            | Capabilities::D_PROPERTY
            | Capabilities::K_PROPERTY_DOCUMENTED
            | Capabilities::FINITE
    }

    fn zero(&self) -> Bits2x2 {
        Bits2x2::ZERO
    }

    fn one(&self) -> Bits2x2 {
        Bits2x2::ONE
    }

    fn add(&self, a: &Bits2x2, b: &Bits2x2) -> Bits2x2 {
        Bits2x2(a.0 ^ b.0)
    }

    fn neg(&self, a: &Bits2x2) -> Bits2x2 {
        *a
    }

    fn mul(&self, a: &Bits2x2, b: &Bits2x2) -> Bits2x2 {
        let mut rows = [[0u8; 2]; 2];
        for (r, row) in rows.iter_mut().enumerate() {
            for (c, slot) in row.iter_mut().enumerate() {
                *slot = (a.entry(r, 0) & b.entry(0, c)) ^ (a.entry(r, 1) & b.entry(1, c));
            }
        }
        Bits2x2::from_rows(rows)
    }

    fn is_unit(&self, a: &Bits2x2) -> bool {
        a.det() == 1
    }

    fn invert_unit(&self, a: &Bits2x2) -> Result<Bits2x2> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit);
        }
        // over F₂ the adjugate is the inverse
        Ok(Bits2x2::from_rows([[a.entry(1, 1), a.entry(0, 1)], [a.entry(1, 0), a.entry(0, 0)]]))
    }

    /// The identity for units, otherwise the smallest bit pattern among the unit multiples.
    fn canonical_associate(&self, a: &Bits2x2, side: Side) -> (Bits2x2, Bits2x2) {
        if let Ok(inv) = self.invert_unit(a) {
            return (Bits2x2::ONE, inv);
        }
        (0..16u8)
            .map(Bits2x2)
            .filter(|u| self.is_unit(u))
            .map(|u| {
                let c = match side {
                    Side::Right => self.mul(a, &u),
                    Side::Left => self.mul(&u, a),
                };
                (c, u)
            })
            .min_by_key(|(c, u)| (*c, *u != Bits2x2::ONE))
            .unwrap()
    }

    fn generators(&self) -> Vec<Bits2x2> {
        vec![Bits2x2::E11, Bits2x2::E12, Bits2x2::E21, Bits2x2::E22]
    }

    fn elements(&self) -> Option<Vec<Bits2x2>> {
        Some((0..16u8).map(Bits2x2).collect())
    }

    fn coboundary(&self, a: &Bits2x2) -> Result<Bits2x2> {
        Ok(if a.0 == 0 { Bits2x2::ZERO } else { Bits2x2::ONE })
    }

    /// `[[r,r],[r,r]]` with bits.
    fn parse_element(&self, text: &str) -> std::result::Result<Bits2x2, ParseError> {
        let mut cur = Cursor::new(text);
        let mut rows = [[0u8; 2]; 2];
        cur.expect(b'[')?;
        for (r, row) in rows.iter_mut().enumerate() {
            if r > 0 {
                cur.expect(b',')?;
            }
            cur.expect(b'[')?;
            row[0] = cur.bit()?;
            cur.expect(b',')?;
            row[1] = cur.bit()?;
            cur.expect(b']')?;
        }
        cur.expect(b']')?;
        cur.finish()?;
        Ok(Bits2x2::from_rows(rows))
    }

    fn format_element(&self, a: &Bits2x2) -> String {
        format!("{a:?}")
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Bits2x2 {
        Bits2x2(rng.gen_range(0..16u8))
    }

    fn search_candidates(&self) -> Vec<Bits2x2> {
        crate::ring::search_order(self, &self.elements().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{principal_ideal, sr1_bezout};

    #[test]
    fn six_units() {
        let r = Mat2F2Ring;
        let units: Vec<_> = r.elements().unwrap().into_iter().filter(|a| r.is_unit(a)).collect();
        assert_eq!(units.len(), 6);
        for u in units {
            let v = r.invert_unit(&u).unwrap();
            assert_eq!(r.mul(&u, &v), Bits2x2::ONE);
            assert_eq!(r.mul(&v, &u), Bits2x2::ONE);
        }
    }

    #[test]
    fn matrix_units_multiply() {
        let r = Mat2F2Ring;
        assert_eq!(r.mul(&Bits2x2::E12, &Bits2x2::E21), Bits2x2::E11);
        assert_eq!(r.mul(&Bits2x2::E21, &Bits2x2::E12), Bits2x2::E22);
        assert_eq!(r.add(&Bits2x2::E11, &Bits2x2::E22), Bits2x2::ONE);
    }

    #[test]
    fn complementary_idempotents_shift() {
        let w = sr1_bezout(&Mat2F2Ring, &Bits2x2::E11, &Bits2x2::E22, Side::Right).unwrap();
        assert_eq!(w.x, Bits2x2::ONE);
        assert_eq!(w.d, Bits2x2::ONE);
    }

    #[test]
    fn one_sided_ideals_are_generated_by_idempotents() {
        let r = Mat2F2Ring;
        let elems = r.elements().unwrap();
        let idempotents: Vec<_> = elems.iter().copied().filter(|e| r.mul(e, e) == *e).collect();
        for side in [Side::Left, Side::Right] {
            for a in &elems {
                let ideal = principal_ideal(&r, a, side, &elems);
                assert!(idempotents.iter().any(|e| principal_ideal(&r, e, side, &elems) == ideal));
            }
        }
    }

    #[test]
    fn units_are_associate_to_one() {
        let r = Mat2F2Ring;
        for u in r.elements().unwrap().into_iter().filter(|a| r.is_unit(a)) {
            for side in [Side::Left, Side::Right] {
                assert_eq!(r.canonical_associate(&u, side).0, Bits2x2::ONE);
            }
        }
        assert_eq!(r.canonical_associate(&Bits2x2::ZERO, Side::Right).0, Bits2x2::ZERO);
    }

    #[test]
    fn grammar() {
        let r = Mat2F2Ring;
        assert_eq!(r.format_element(&Bits2x2::E11), "[[1,0],[0,0]]");
        assert_eq!(r.parse_element("[[1,0],[0,0]]").unwrap(), Bits2x2::E11);
        assert_eq!(r.parse_element("[[1,2],[0,0]]").unwrap_err().position, 4);
    }
}
