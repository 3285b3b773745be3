//! Ring abstraction shared by every concrete instance.
//!
//! A [`Ring`] is a value describing one ring instance (the integers, `Z/n` for a
//! particular `n`, ...). Elements are plain values of the associated type
//! [`Ring::Elem`]; every operation goes through the ring value, so two elements
//! are only ever combined by the instance that produced them.
//!
//! Sidedness is fixed globally: a *right* ideal `aR` contains the products `a·r`,
//! and right-sided Bézout data combines as `d = a·u + b·v`.

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;

use bitflags::bitflags;
use num_bigint::BigUint;
use rand::RngCore;

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => f.write_str("LEFT"),
            Side::Right => f.write_str("RIGHT"),
        }
    }
}

bitflags! {
    /// Structural properties an instance promises to honour.
    #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
    pub struct Capabilities: u16 {
        const BEZOUT_RIGHT = 1 << 0;
        const BEZOUT_LEFT = 1 << 1;
        const STABLE_RANGE_1 = 1 << 2;
        const EUCLIDEAN = 1 << 3;
        const D_PROPERTY = 1 << 4;
        const K_PROPERTY_DOCUMENTED = 1 << 5;
        const COMMUTATIVE = 1 << 6;
        const FINITE = 1 << 7;

        const BEZOUT = Self::BEZOUT_RIGHT.bits() | Self::BEZOUT_LEFT.bits();
    }
}

impl Capabilities {
    pub fn names(self) -> String {
        self.iter_names()
            .filter(|(name, _)| *name != "BEZOUT")
            .map(|(name, _)| name)
            .collect::<Vec<_>>()
            .join("|")
    }

    pub fn bezout_side(side: Side) -> Capabilities {
        match side {
            Side::Left => Capabilities::BEZOUT_LEFT,
            Side::Right => Capabilities::BEZOUT_RIGHT,
        }
    }
}

/// One concrete ring instance.
///
/// Instance-specific behaviour lives here; the generic algorithms (Bézout data,
/// shifts, reductions) are free functions that dispatch on [`Ring::capabilities`]
/// and fail with [`Error::UnsupportedCapability`] when a hypothesis is missing.
pub trait Ring: fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    /// Selector string, e.g. `int` or `zmod:6`.
    fn name(&self) -> String;
    fn capabilities(&self) -> Capabilities;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Two-sided inverse; `NotAUnit` otherwise.
    fn invert_unit(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// `Right`: returns `(c, u)` with `c = a·u`, `u` a unit and `c` the instance's
    /// representative of `{a·w : w unit}`. `Left` is the mirror image, `c = u·a`.
    fn canonical_associate(&self, a: &Self::Elem, side: Side) -> (Self::Elem, Self::Elem);

    /// A set spanning the ring additively over its centre. Two-sided closure and
    /// duo tests only need to range over these.
    fn generators(&self) -> Vec<Self::Elem>;

    /// Complete duplicate-free element list for finite instances.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Exact quotient. `Right` returns `q` with `a = d·q` (so `a ∈ dR`),
    /// `Left` returns `q` with `a = q·d`.
    fn divide(&self, a: &Self::Elem, d: &Self::Elem, side: Side) -> Result<Self::Elem> {
        if self.is_zero(d) {
            return Err(Error::DivisionByZero);
        }
        let elems = self.elements().ok_or_else(|| unsupported(self, Capabilities::FINITE))?;
        elems
            .into_iter()
            .find(|q| {
                let prod = match side {
                    Side::Right => self.mul(d, q),
                    Side::Left => self.mul(q, d),
                };
                prod == *a
            })
            .ok_or(Error::NotDivisible)
    }

    fn norm(&self, _a: &Self::Elem) -> Result<BigUint> {
        Err(unsupported(self, Capabilities::EUCLIDEAN))
    }

    /// Division with remainder. The side names where `d` sits:
    /// `Right` gives `a = q·d + r`, `Left` gives `a = d·q + r`; `norm(r) < norm(d)`.
    fn euclidean_divmod(
        &self,
        _a: &Self::Elem,
        _d: &Self::Elem,
        _side: Side,
    ) -> Result<(Self::Elem, Self::Elem)> {
        Err(unsupported(self, Capabilities::EUCLIDEAN))
    }

    /// Canonical duo generator of the two-sided ideal `RaR`.
    fn coboundary(&self, _a: &Self::Elem) -> Result<Self::Elem> {
        Err(unsupported(self, Capabilities::D_PROPERTY))
    }

    /// Shift `x` with `(a + b·x)R = aR + bR` (`Right`) or `R(a + x·b) = Ra + Rb` (`Left`).
    ///
    /// The default searches a finite instance, trying `0` and `1` before the
    /// remaining elements in enumeration order.
    fn sr1_shift(&self, a: &Self::Elem, b: &Self::Elem, side: Side) -> Result<Self::Elem> {
        self.require(Capabilities::STABLE_RANGE_1)?;
        let elems = self.elements().ok_or_else(|| unsupported(self, Capabilities::FINITE))?;
        let target = ideal_sum(
            &principal_ideal(self, a, side, &elems),
            &principal_ideal(self, b, side, &elems),
            |x, y| self.add(x, y),
        );
        for x in search_order(self, &elems) {
            let d = shifted(self, a, b, &x, side);
            if principal_ideal(self, &d, side, &elems) == target {
                return Ok(x);
            }
        }
        Err(Error::SearchExhausted("no stable-range shift exists".into()))
    }

    /// `|aR|` (`Right`) or `|Ra|` (`Left`) for finite instances.
    fn principal_ideal_size(&self, a: &Self::Elem, side: Side) -> Option<BigUint> {
        let elems = self.elements()?;
        Some(BigUint::from(principal_ideal(self, a, side, &elems).len()))
    }

    fn parse_element(&self, text: &str) -> std::result::Result<Self::Elem, ParseError>;
    fn format_element(&self, a: &Self::Elem) -> String;

    /// A small random element, used for sampled sweeps and round-trip checks.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// Short ordered list of candidates for bounded searches (zero and one first).
    fn search_candidates(&self) -> Vec<Self::Elem>;

    fn has(&self, caps: Capabilities) -> bool {
        self.capabilities().contains(caps)
    }

    fn require(&self, caps: Capabilities) -> Result<()> {
        let missing = caps - self.capabilities();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(unsupported(self, missing))
        }
    }
}

pub fn unsupported<R: Ring + ?Sized>(ring: &R, caps: Capabilities) -> Error {
    Error::UnsupportedCapability { ring: ring.name(), capability: caps.names() }
}

/// `a + b·x` for `Right`, `a + x·b` for `Left`.
pub fn shifted<R: Ring + ?Sized>(ring: &R, a: &R::Elem, b: &R::Elem, x: &R::Elem, side: Side) -> R::Elem {
    match side {
        Side::Right => ring.add(a, &ring.mul(b, x)),
        Side::Left => ring.add(a, &ring.mul(x, b)),
    }
}

/// Membership `a ∈ dR` (`Right`) or `a ∈ Rd` (`Left`), tolerating `d = 0`.
pub fn divides<R: Ring + ?Sized>(ring: &R, d: &R::Elem, a: &R::Elem, side: Side) -> Result<bool> {
    if ring.is_zero(d) {
        return Ok(ring.is_zero(a));
    }
    match ring.divide(a, d, side) {
        Ok(_) => Ok(true),
        Err(Error::NotDivisible) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Zero, one, then the rest of `elems` in order.
pub fn search_order<R: Ring + ?Sized>(ring: &R, elems: &[R::Elem]) -> Vec<R::Elem> {
    let zero = ring.zero();
    let one = ring.one();
    let mut out = vec![zero.clone(), one.clone()];
    out.extend(elems.iter().filter(|e| **e != zero && **e != one).cloned());
    out
}

pub fn principal_ideal<R: Ring + ?Sized>(
    ring: &R,
    a: &R::Elem,
    side: Side,
    elems: &[R::Elem],
) -> HashSet<R::Elem> {
    elems
        .iter()
        .map(|r| match side {
            Side::Right => ring.mul(a, r),
            Side::Left => ring.mul(r, a),
        })
        .collect()
}

pub fn ideal_sum<E: Clone + Eq + Hash>(
    x: &HashSet<E>,
    y: &HashSet<E>,
    add: impl Fn(&E, &E) -> E,
) -> HashSet<E> {
    let mut out = HashSet::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.insert(add(a, b));
        }
    }
    out
}

/// Elementary step acting on a pair `(first, second)`.
///
/// On the `Right` the pair is a row vector transformed by column operations
/// (factors multiply on the right); on the `Left` it is a column vector
/// transformed by row operations (factors multiply on the left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairOp<E> {
    Swap,
    /// `first += second·f` (`Right`) / `first += f·second` (`Left`).
    AddToFirst(E),
    /// `second += first·f` (`Right`) / `second += f·first` (`Left`).
    AddToSecond(E),
    /// `first = first·u` (`Right`) / `first = u·first` (`Left`), `u` a unit.
    ScaleFirst(E),
}

/// A sequence of elementary pair steps sending `(a, b)` to `(gcd, 0)`.
#[derive(Clone, Debug)]
pub struct BezoutPlan<E> {
    pub side: Side,
    pub ops: Vec<PairOp<E>>,
    pub gcd: E,
}

pub fn apply_pair_op<R: Ring + ?Sized>(
    ring: &R,
    side: Side,
    op: &PairOp<R::Elem>,
    pair: (R::Elem, R::Elem),
) -> (R::Elem, R::Elem) {
    let (x, y) = pair;
    let times = |p: &R::Elem, f: &R::Elem| match side {
        Side::Right => ring.mul(p, f),
        Side::Left => ring.mul(f, p),
    };
    match op {
        PairOp::Swap => (y, x),
        PairOp::AddToFirst(f) => (ring.add(&x, &times(&y, f)), y),
        PairOp::AddToSecond(f) => {
            let y2 = ring.add(&y, &times(&x, f));
            (x, y2)
        }
        PairOp::ScaleFirst(u) => (times(&x, u), y),
    }
}

const EUCLID_LIMIT: usize = 100_000;

/// Elementary steps reducing `(a, b)` to `(d, 0)` with `d` canonical.
///
/// Euclidean instances run the division loop; otherwise stable range 1 is used:
/// `(a, b) → (a + b·x, b) → (d, 0)`.
pub fn bezout_plan<R: Ring + ?Sized>(ring: &R, a: &R::Elem, b: &R::Elem, side: Side) -> Result<BezoutPlan<R::Elem>> {
    let mut ops = Vec::new();
    let mut pair = (a.clone(), b.clone());
    if ring.has(Capabilities::EUCLIDEAN) {
        let mut steps = 0;
        while !ring.is_zero(&pair.1) {
            steps += 1;
            if steps > EUCLID_LIMIT {
                return Err(Error::ReductionDiverged(steps));
            }
            // right ideals need a = d·q + r, left ideals a = q·d + r
            let (q, _) = ring.euclidean_divmod(&pair.0, &pair.1, side.opposite())?;
            let op = PairOp::AddToFirst(ring.neg(&q));
            pair = apply_pair_op(ring, side, &op, pair);
            ops.push(op);
            pair = apply_pair_op(ring, side, &PairOp::Swap, pair);
            ops.push(PairOp::Swap);
        }
    } else if ring.has(Capabilities::STABLE_RANGE_1) {
        ring.require(Capabilities::bezout_side(side))?;
        if !ring.is_zero(&pair.1) {
            let x = ring.sr1_shift(&pair.0, &pair.1, side)?;
            if !ring.is_zero(&x) {
                let op = PairOp::AddToFirst(x);
                pair = apply_pair_op(ring, side, &op, pair);
                ops.push(op);
            }
            if ring.is_zero(&pair.0) {
                return Err(Error::InvalidWitness("shift produced zero from a nonzero pair".into()));
            }
            let b0 = ring.divide(&pair.1, &pair.0, side)?;
            let op = PairOp::AddToSecond(ring.neg(&b0));
            pair = apply_pair_op(ring, side, &op, pair);
            ops.push(op);
        }
    } else {
        return Err(unsupported(ring, Capabilities::EUCLIDEAN | Capabilities::bezout_side(side)));
    }
    let (c, u) = ring.canonical_associate(&pair.0, side);
    if !ring.is_one(&u) {
        let op = PairOp::ScaleFirst(u);
        pair = apply_pair_op(ring, side, &op, pair);
        ops.push(op);
    }
    debug_assert!(pair.0 == c && ring.is_zero(&pair.1));
    Ok(BezoutPlan { side, ops, gcd: pair.0 })
}

/// Bézout data for `(a, b)` together with the coprime cofactors.
///
/// `Right`: `d = a·u + b·v`, `a = d·a0`, `b = d·b0`, `a0·u + b0·v = 1`.
/// `Left`: `d = u·a + v·b`, `a = a0·d`, `b = b0·d`, `u·a0 + v·b0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdWitness<E> {
    pub d: E,
    pub u: E,
    pub v: E,
    pub a0: E,
    pub b0: E,
    pub side: Side,
}

impl<E: Clone + Eq> GcdWitness<E> {
    pub fn holds<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, a: &E, b: &E) -> bool {
        let m = |x: &E, y: &E| ring.mul(x, y);
        match self.side {
            Side::Right => {
                ring.add(&m(a, &self.u), &m(b, &self.v)) == self.d
                    && m(&self.d, &self.a0) == *a
                    && m(&self.d, &self.b0) == *b
                    && ring.is_one(&ring.add(&m(&self.a0, &self.u), &m(&self.b0, &self.v)))
            }
            Side::Left => {
                ring.add(&m(&self.u, a), &m(&self.v, b)) == self.d
                    && m(&self.a0, &self.d) == *a
                    && m(&self.b0, &self.d) == *b
                    && ring.is_one(&ring.add(&m(&self.u, &self.a0), &m(&self.v, &self.b0)))
            }
        }
    }
}

type Mat2<E> = [[E; 2]; 2];

fn identity2<R: Ring + ?Sized>(ring: &R) -> Mat2<R::Elem> {
    [[ring.one(), ring.zero()], [ring.zero(), ring.one()]]
}

/// Accumulates `P` with `(a, b)·P = (d, 0)` (`Right`) or `P·(a, b)ᵀ = (d, 0)ᵀ` (`Left`)
/// and its inverse, then reads the witnesses off the first column/row.
pub fn gcd_with_witnesses<R: Ring + ?Sized>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    side: Side,
) -> Result<GcdWitness<R::Elem>> {
    let plan = bezout_plan(ring, a, b, side)?;
    let mut p = identity2(ring);
    let mut pinv = identity2(ring);
    for op in &plan.ops {
        match side {
            Side::Right => right_step(ring, op, &mut p, &mut pinv)?,
            Side::Left => left_step(ring, op, &mut p, &mut pinv)?,
        }
    }
    let w = match side {
        Side::Right => GcdWitness {
            d: plan.gcd,
            u: p[0][0].clone(),
            v: p[1][0].clone(),
            a0: pinv[0][0].clone(),
            b0: pinv[0][1].clone(),
            side,
        },
        Side::Left => GcdWitness {
            d: plan.gcd,
            u: p[0][0].clone(),
            v: p[0][1].clone(),
            a0: pinv[0][0].clone(),
            b0: pinv[1][0].clone(),
            side,
        },
    };
    debug_assert!(w.holds(ring, a, b));
    Ok(w)
}

// P ← P·E (column op), P⁻¹ ← E⁻¹·P⁻¹ (row op)
fn right_step<R: Ring + ?Sized>(ring: &R, op: &PairOp<R::Elem>, p: &mut Mat2<R::Elem>, pinv: &mut Mat2<R::Elem>) -> Result<()> {
    match op {
        PairOp::Swap => {
            for row in p.iter_mut() {
                row.swap(0, 1);
            }
            pinv.swap(0, 1);
        }
        PairOp::AddToFirst(f) => {
            for row in p.iter_mut() {
                row[0] = ring.add(&row[0], &ring.mul(&row[1], f));
            }
            for c in 0..2 {
                pinv[1][c] = ring.sub(&pinv[1][c], &ring.mul(f, &pinv[0][c]));
            }
        }
        PairOp::AddToSecond(f) => {
            for row in p.iter_mut() {
                row[1] = ring.add(&row[1], &ring.mul(&row[0], f));
            }
            for c in 0..2 {
                pinv[0][c] = ring.sub(&pinv[0][c], &ring.mul(f, &pinv[1][c]));
            }
        }
        PairOp::ScaleFirst(u) => {
            let ui = ring.invert_unit(u)?;
            for row in p.iter_mut() {
                row[0] = ring.mul(&row[0], u);
            }
            for c in 0..2 {
                pinv[0][c] = ring.mul(&ui, &pinv[0][c]);
            }
        }
    }
    Ok(())
}

// P ← E·P (row op), P⁻¹ ← P⁻¹·E⁻¹ (column op)
fn left_step<R: Ring + ?Sized>(ring: &R, op: &PairOp<R::Elem>, p: &mut Mat2<R::Elem>, pinv: &mut Mat2<R::Elem>) -> Result<()> {
    match op {
        PairOp::Swap => {
            p.swap(0, 1);
            for row in pinv.iter_mut() {
                row.swap(0, 1);
            }
        }
        PairOp::AddToFirst(f) => {
            for c in 0..2 {
                p[0][c] = ring.add(&p[0][c], &ring.mul(f, &p[1][c]));
            }
            for row in pinv.iter_mut() {
                row[1] = ring.sub(&row[1], &ring.mul(&row[0], f));
            }
        }
        PairOp::AddToSecond(f) => {
            for c in 0..2 {
                p[1][c] = ring.add(&p[1][c], &ring.mul(f, &p[0][c]));
            }
            for row in pinv.iter_mut() {
                row[0] = ring.sub(&row[0], &ring.mul(&row[1], f));
            }
        }
        PairOp::ScaleFirst(u) => {
            let ui = ring.invert_unit(u)?;
            for c in 0..2 {
                p[0][c] = ring.mul(u, &p[0][c]);
            }
            for row in pinv.iter_mut() {
                row[0] = ring.mul(&row[0], &ui);
            }
        }
    }
    Ok(())
}

/// Stable-range shift with certifying cofactors.
///
/// `Right`: `d = a + b·x`, `a = d·a0`, `b = d·b0`, hence `aR + bR = dR`.
/// `Left`: `d = a + x·b`, `a = a0·d`, `b = b0·d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sr1Witness<E> {
    pub x: E,
    pub d: E,
    pub a0: E,
    pub b0: E,
    pub side: Side,
}

impl<E: Clone + Eq> Sr1Witness<E> {
    pub fn holds<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, a: &E, b: &E) -> bool {
        let m = |x: &E, y: &E| ring.mul(x, y);
        match self.side {
            Side::Right => {
                shifted(ring, a, b, &self.x, Side::Right) == self.d
                    && m(&self.d, &self.a0) == *a
                    && m(&self.d, &self.b0) == *b
            }
            Side::Left => {
                shifted(ring, a, b, &self.x, Side::Left) == self.d
                    && m(&self.a0, &self.d) == *a
                    && m(&self.b0, &self.d) == *b
            }
        }
    }
}

pub fn sr1_bezout<R: Ring + ?Sized>(ring: &R, a: &R::Elem, b: &R::Elem, side: Side) -> Result<Sr1Witness<R::Elem>> {
    ring.require(Capabilities::STABLE_RANGE_1)?;
    let x = ring.sr1_shift(a, b, side)?;
    let d = shifted(ring, a, b, &x, side);
    let (a0, b0) = if ring.is_zero(&d) {
        if !ring.is_zero(b) {
            return Err(Error::InvalidWitness("shift produced zero from a nonzero pair".into()));
        }
        (ring.one(), ring.zero())
    } else {
        let b0 = ring.divide(b, &d, side)?;
        let correction = match side {
            Side::Right => ring.mul(&b0, &x),
            Side::Left => ring.mul(&x, &b0),
        };
        (ring.sub(&ring.one(), &correction), b0)
    };
    let w = Sr1Witness { x, d, a0, b0, side };
    if !w.holds(ring, a, b) {
        return Err(Error::InvalidWitness(format!("stable-range witness fails for {a:?}, {b:?}")));
    }
    Ok(w)
}

/// Whether `a` generates the same right and left ideal under every generator:
/// `g·a ∈ aR` and `a·g ∈ Ra` for all generators `g`.
pub fn is_duo<R: Ring + ?Sized>(ring: &R, a: &R::Elem) -> Result<bool> {
    for g in ring.generators() {
        if !divides(ring, a, &ring.mul(&g, a), Side::Right)? {
            return Ok(false);
        }
        if !divides(ring, a, &ring.mul(a, &g), Side::Left)? {
            return Ok(false);
        }
    }
    Ok(true)
}
