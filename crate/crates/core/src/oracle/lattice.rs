//! Integer lattices in Hermite normal form, used as exact Hurwitz ideals.
//!
//! With `G = {1, i, j, ω}` spanning the Hurwitz order over ℤ, `RaR` is the ℤ-span
//! of `{g·a·h}`, `aR` of `{a·h}` and `Ra` of `{g·a}`, for `g, h ∈ G`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::instances::{Hurwitz, HurwitzRing};
use crate::ring::Ring;

/// A ℤ-submodule of ℤⁿ, stored as its row-style Hermite normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl Lattice {
    pub fn span(dim: usize, vectors: impl IntoIterator<Item = Vec<BigInt>>) -> Lattice {
        let mut rows: Vec<Vec<BigInt>> = vectors.into_iter().filter(|v| v.iter().any(|c| !c.is_zero())).collect();
        assert!(rows.iter().all(|v| v.len() == dim), "vector length differs from lattice dimension");
        let mut basis: Vec<Vec<BigInt>> = Vec::new();
        for col in 0..dim {
            // Euclid on column `col` among the remaining rows
            loop {
                let nonzero: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r][col].is_zero()).collect();
                if nonzero.len() <= 1 {
                    break;
                }
                let pivot = *nonzero.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
                let p = rows[pivot].clone();
                for &r in &nonzero {
                    if r != pivot {
                        let q = rows[r][col].div_floor(&p[col]);
                        for c in 0..dim {
                            rows[r][c] -= &q * &p[c];
                        }
                    }
                }
            }
            if let Some(r) = (0..rows.len()).find(|&r| !rows[r][col].is_zero()) {
                let mut v = rows.swap_remove(r);
                if v[col].is_negative() {
                    v.iter_mut().for_each(|c| *c = -&*c);
                }
                for b in &mut basis {
                    let q = b[col].div_floor(&v[col]);
                    for c in 0..dim {
                        b[c] -= &q * &v[c];
                    }
                }
                basis.push(v);
            }
            rows.retain(|v| v.iter().any(|c| !c.is_zero()));
        }
        Lattice { dim, basis }
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for b in &self.basis {
            let col = b.iter().position(|c| !c.is_zero()).unwrap();
            if v[..col].iter().any(|c| !c.is_zero()) {
                return false;
            }
            let (q, r) = v[col].div_rem(&b[col]);
            if !r.is_zero() {
                return false;
            }
            for c in 0..self.dim {
                v[c] -= &q * &b[c];
            }
        }
        v.iter().all(|c| c.is_zero())
    }

    /// Index in ℤⁿ for full-rank lattices.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.dim).then(|| self.basis.iter().enumerate().map(|(k, b)| b[k].clone()).product())
    }
}

/// Two-sided, right and left principal ideals of one Hurwitz element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzIdeals {
    pub two_sided: Lattice,
    pub right: Lattice,
    pub left: Lattice,
}

fn coords(h: &Hurwitz) -> Vec<BigInt> {
    h.coords().to_vec()
}

pub fn hurwitz_ideal_lattices(a: &Hurwitz) -> HurwitzIdeals {
    let r = HurwitzRing;
    let gens = [Hurwitz::new(1, 0, 0, 0), Hurwitz::new(0, 1, 0, 0), Hurwitz::new(0, 0, 1, 0), Hurwitz::new(0, 0, 0, 1)];
    let two_sided = gens.iter().flat_map(|g| gens.iter().map(move |h| coords(&r.mul(&r.mul(g, a), h))));
    HurwitzIdeals {
        two_sided: Lattice::span(4, two_sided.collect::<Vec<_>>()),
        right: Lattice::span(4, gens.iter().map(|h| coords(&r.mul(a, h)))),
        left: Lattice::span(4, gens.iter().map(|g| coords(&r.mul(g, a)))),
    }
}

/// Every Hurwitz quaternion of reduced norm at most `bound`.
pub fn hurwitz_elements_up_to_norm(bound: u64) -> Vec<Hurwitz> {
    let limit = 4 * bound as i64;
    let reach = (limit as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for t in -reach..=reach {
        for x in -reach..=reach {
            for y in -reach..=reach {
                for z in -reach..=reach {
                    if t * t + x * x + y * y + z * z > limit {
                        continue;
                    }
                    if let Some(h) = Hurwitz::from_doubled(&[t.into(), x.into(), y.into(), z.into()]) {
                        out.push(h);
                    }
                }
            }
        }
    }
    out
}
