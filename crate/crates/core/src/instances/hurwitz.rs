//! Hurwitz quaternions: the integral quaternions `a + b·i + c·j + d·ω` with
//! `ω = (1 + i + j + k)/2`.
//!
//! Internally most arithmetic runs on *doubled* standard coordinates
//! `(2t, 2x, 2y, 2z)` of `t + x·i + y·j + z·k`; an element is Hurwitz exactly
//! when the four doubled coordinates share one parity.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use super::parse::Cursor;
use crate::error::{Error, ParseError, Result};
use crate::ring::{Capabilities, Ring, Side};

type Quad = [BigInt; 4];

/// Coordinates in the basis `{1, i, j, ω}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hurwitz {
    coords: Quad,
}

impl Hurwitz {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Hurwitz { coords: [a.into(), b.into(), c.into(), d.into()] }
    }

    pub fn from_coords(coords: Quad) -> Self {
        Hurwitz { coords }
    }

    pub fn coords(&self) -> &Quad {
        &self.coords
    }

    /// `t + x·i + y·j + z·k` with integer coefficients.
    pub fn quaternion(t: i64, x: i64, y: i64, z: i64) -> Self {
        Self::from_doubled(&[(2 * t).into(), (2 * x).into(), (2 * y).into(), (2 * z).into()])
            .expect("Lipschitz quaternions are Hurwitz")
    }

    /// From doubled standard coordinates; `None` unless all four share one parity.
    pub fn from_doubled(q: &Quad) -> Option<Self> {
        let parity = q[0].is_odd();
        if q.iter().any(|c| c.is_odd() != parity) {
            return None;
        }
        let d = q[3].clone();
        Some(Hurwitz {
            coords: [(&q[0] - &d) / 2, (&q[1] - &d) / 2, (&q[2] - &d) / 2, d],
        })
    }

    pub fn doubled(&self) -> Quad {
        let [a, b, c, d] = &self.coords;
        [a * 2 + d, b * 2 + d, c * 2 + d, d.clone()]
    }

    pub fn omega() -> Self {
        Hurwitz::new(0, 0, 0, 1)
    }

    pub fn reduced_norm(&self) -> BigUint {
        let q = self.doubled();
        let s: BigInt = q.iter().map(|c| c * c).sum();
        (s / BigInt::from(4)).to_biguint().expect("sum of squares")
    }

    /// The 24 units `±1, ±i, ±j, ±k, (±1 ± i ± j ± k)/2`.
    pub fn units() -> Vec<Hurwitz> {
        let mut out = Vec::with_capacity(24);
        for axis in 0..4 {
            for sign in [2i64, -2] {
                let mut q: [i64; 4] = [0; 4];
                q[axis] = sign;
                out.push(Self::from_doubled(&q.map(BigInt::from)).unwrap());
            }
        }
        for mask in 0..16u32 {
            let q: [i64; 4] = std::array::from_fn(|k| if mask & (1 << k) != 0 { -1 } else { 1 });
            out.push(Self::from_doubled(&q.map(BigInt::from)).unwrap());
        }
        out
    }
}

impl fmt::Debug for Hurwitz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coords;
        write!(f, "[{a},{b},{c},{d}]")
    }
}

fn quat_mul(p: &Quad, q: &Quad) -> Quad {
    let [t1, x1, y1, z1] = p;
    let [t2, x2, y2, z2] = q;
    [
        t1 * t2 - x1 * x2 - y1 * y2 - z1 * z2,
        t1 * x2 + x1 * t2 + y1 * z2 - z1 * y2,
        t1 * y2 - x1 * z2 + y1 * t2 + z1 * x2,
        t1 * z2 + x1 * y2 - y1 * x2 + z1 * t2,
    ]
}

fn conj(q: &Quad) -> Quad {
    [q[0].clone(), -&q[1], -&q[2], -&q[3]]
}

/// Nearest integer to `k/m` for `m > 0`, halves rounded up.
fn round_div(k: &BigInt, m: &BigInt) -> BigInt {
    let twice: BigInt = k * 2 + m;
    twice.div_floor(&(m * 2))
}

/// Maximal order of the rational quaternions, Euclidean for the reduced norm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HurwitzRing;

impl HurwitzRing {
    /// Numerator of the exact quotient in doubled coordinates scaled by `4·N(d)`:
    /// `a·d⁻¹` when `d` sits on the right, `d⁻¹·a` when it sits on the left.
    fn quotient_numerator(a: &Hurwitz, d: &Hurwitz, d_on_right: bool) -> Quad {
        let da = a.doubled();
        let dd = conj(&d.doubled());
        if d_on_right {
            quat_mul(&da, &dd)
        } else {
            quat_mul(&dd, &da)
        }
    }
}

impl Ring for HurwitzRing {
    type Elem = Hurwitz;

    fn name(&self) -> String {
        "hurwitz".into()
    }

    fn capabilities(&self) -> Capabilities {
        Capabilities::BEZOUT | Capabilities::EUCLIDEAN | Capabilities::D_PROPERTY
    }

    fn zero(&self) -> Hurwitz {
        Hurwitz::new(0, 0, 0, 0)
    }

    fn one(&self) -> Hurwitz {
        Hurwitz::new(1, 0, 0, 0)
    }

    fn add(&self, a: &Hurwitz, b: &Hurwitz) -> Hurwitz {
        Hurwitz { coords: std::array::from_fn(|k| &a.coords[k] + &b.coords[k]) }
    }

    fn neg(&self, a: &Hurwitz) -> Hurwitz {
        Hurwitz { coords: std::array::from_fn(|k| -&a.coords[k]) }
    }

    fn sub(&self, a: &Hurwitz, b: &Hurwitz) -> Hurwitz {
        Hurwitz { coords: std::array::from_fn(|k| &a.coords[k] - &b.coords[k]) }
    }

    fn mul(&self, a: &Hurwitz, b: &Hurwitz) -> Hurwitz {
        let p = quat_mul(&a.doubled(), &b.doubled());
        Hurwitz::from_doubled(&p.map(|c| c / 2)).expect("Hurwitz order is closed under multiplication")
    }

    fn is_unit(&self, a: &Hurwitz) -> bool {
        a.reduced_norm().is_one()
    }

    fn invert_unit(&self, a: &Hurwitz) -> Result<Hurwitz> {
        if self.is_unit(a) {
            Ok(Hurwitz::from_doubled(&conj(&a.doubled())).unwrap())
        } else {
            Err(Error::NotAUnit)
        }
    }

    /// Among the 24 associates, the one with lexicographically greatest
    /// standard coordinates `(t, x, y, z)`; so `1`, `1+i` and `2` are canonical.
    fn canonical_associate(&self, a: &Hurwitz, side: Side) -> (Hurwitz, Hurwitz) {
        if self.is_zero(a) {
            return (a.clone(), self.one());
        }
        Hurwitz::units()
            .into_iter()
            .map(|u| {
                let c = match side {
                    Side::Right => self.mul(a, &u),
                    Side::Left => self.mul(&u, a),
                };
                (c, u)
            })
            .max_by(|(x, _), (y, _)| x.doubled().cmp(&y.doubled()))
            .unwrap()
    }

    fn generators(&self) -> Vec<Hurwitz> {
        vec![self.one(), Hurwitz::new(0, 1, 0, 0), Hurwitz::new(0, 0, 1, 0), Hurwitz::omega()]
    }

    fn divide(&self, a: &Hurwitz, d: &Hurwitz, side: Side) -> Result<Hurwitz> {
        if self.is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        // Right: a = d·q, so q = d⁻¹·a
        let k = Self::quotient_numerator(a, d, side == Side::Left);
        let scale = BigInt::from(d.reduced_norm()) * 2;
        let mut q: Quad = Default::default();
        for (slot, c) in q.iter_mut().zip(&k) {
            let (quo, rem) = c.div_rem(&scale);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            *slot = quo;
        }
        Hurwitz::from_doubled(&q).ok_or(Error::NotDivisible)
    }

    fn norm(&self, a: &Hurwitz) -> Result<BigUint> {
        Ok(a.reduced_norm())
    }

    /// Rounds the exact quotient to the nearest integral point and to the nearest
    /// all-half-integral point, keeping whichever remainder has smaller norm.
    fn euclidean_divmod(&self, a: &Hurwitz, d: &Hurwitz, side: Side) -> Result<(Hurwitz, Hurwitz)> {
        if self.is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        let k = Self::quotient_numerator(a, d, side == Side::Right);
        let m = BigInt::from(d.reduced_norm()) * 4;
        let whole: Quad = std::array::from_fn(|c| round_div(&k[c], &m) * 2);
        let half: Quad = std::array::from_fn(|c| k[c].div_floor(&m) * 2 + 1);
        let mut best: Option<(Hurwitz, Hurwitz)> = None;
        for cand in [whole, half] {
            let q = Hurwitz::from_doubled(&cand).unwrap();
            let r = match side {
                Side::Right => self.sub(a, &self.mul(&q, d)),
                Side::Left => self.sub(a, &self.mul(d, &q)),
            };
            if best.as_ref().map_or(true, |(_, br)| r.reduced_norm() < br.reduced_norm()) {
                best = Some((q, r));
            }
        }
        let (q, r) = best.unwrap();
        debug_assert!(r.reduced_norm() < d.reduced_norm());
        Ok((q, r))
    }

    /// `m·(1+i)^e`: `m` the content of the `{1,i,j,ω}` coordinates, `e = 1` when
    /// the primitive part has even norm.
    fn coboundary(&self, a: &Hurwitz) -> Result<Hurwitz> {
        if self.is_zero(a) {
            return Ok(self.zero());
        }
        let m = a.coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let primitive = Hurwitz { coords: std::array::from_fn(|k| &a.coords[k] / &m) };
        let content = Hurwitz { coords: [m, BigInt::zero(), BigInt::zero(), BigInt::zero()] };
        if primitive.reduced_norm().is_even() {
            Ok(self.mul(&content, &Hurwitz::new(1, 1, 0, 0)))
        } else {
            Ok(content)
        }
    }

    /// `[a,b,c,d]`, four decimal integers in the basis `{1, i, j, ω}`.
    fn parse_element(&self, text: &str) -> std::result::Result<Hurwitz, ParseError> {
        let mut cur = Cursor::new(text);
        cur.expect(b'[')?;
        let mut coords: Quad = Default::default();
        for (k, slot) in coords.iter_mut().enumerate() {
            if k > 0 {
                cur.expect(b',')?;
            }
            *slot = cur.integer()?;
        }
        cur.expect(b']')?;
        cur.finish()?;
        Ok(Hurwitz { coords })
    }

    fn format_element(&self, a: &Hurwitz) -> String {
        format!("{a:?}")
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Hurwitz {
        Hurwitz { coords: std::array::from_fn(|_| BigInt::from(rng.gen_range(-3i64..=3))) }
    }

    fn search_candidates(&self) -> Vec<Hurwitz> {
        let mut out = vec![self.zero(), self.one()];
        out.extend(Hurwitz::units().into_iter().filter(|u| *u != self.one()));
        out.push(Hurwitz::new(1, 1, 0, 0));
        out
    }
}
