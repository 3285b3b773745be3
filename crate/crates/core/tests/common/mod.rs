//! Random inputs shared by the property and acceptance suites.
#![allow(dead_code)]

use diagred::{apply_elementary, ElementaryOp, Matrix, Ring, TransformPair};
use rand::{Rng, RngCore};

pub fn random_matrix<R: Ring + ?Sized>(ring: &R, rng: &mut dyn RngCore, rows: usize, cols: usize) -> Matrix<R::Elem> {
    let entries = (0..rows * cols).map(|_| ring.sample(rng)).collect();
    Matrix::new(rows, cols, entries).unwrap()
}

fn random_unit<R: Ring + ?Sized>(ring: &R, rng: &mut dyn RngCore) -> R::Elem {
    let mut units: Vec<R::Elem> = ring.search_candidates().into_iter().filter(|u| ring.is_unit(u)).collect();
    if units.is_empty() {
        units.push(ring.one());
    }
    units[rng.gen_range(0..units.len())].clone()
}

fn two_indices(rng: &mut dyn RngCore, n: usize) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    (i, j)
}

/// A random invertible elementary operation that fits a `rows×cols` matrix.
pub fn random_op<R: Ring + ?Sized>(ring: &R, rng: &mut dyn RngCore, rows: usize, cols: usize) -> ElementaryOp<R::Elem> {
    loop {
        match rng.gen_range(0..6) {
            0 if rows > 1 => {
                let (i, j) = two_indices(rng, rows);
                return ElementaryOp::SwapRows(i, j);
            }
            1 if cols > 1 => {
                let (i, j) = two_indices(rng, cols);
                return ElementaryOp::SwapCols(i, j);
            }
            2 => return ElementaryOp::ScaleRow { row: rng.gen_range(0..rows), unit: random_unit(ring, rng) },
            3 => return ElementaryOp::ScaleCol { col: rng.gen_range(0..cols), unit: random_unit(ring, rng) },
            4 if rows > 1 => {
                let (target, source) = two_indices(rng, rows);
                return ElementaryOp::AddRow { target, source, factor: ring.sample(rng) };
            }
            5 if cols > 1 => {
                let (target, source) = two_indices(rng, cols);
                return ElementaryOp::AddCol { target, source, factor: ring.sample(rng) };
            }
            _ => {}
        }
    }
}

/// Applies a random word of `len` elementary operations, returning the image and transforms.
pub fn random_word<R: Ring + ?Sized>(
    ring: &R,
    rng: &mut dyn RngCore,
    m: &Matrix<R::Elem>,
    len: usize,
) -> (Matrix<R::Elem>, TransformPair<R::Elem>) {
    let mut cur = m.clone();
    let mut t = TransformPair::identity(ring, m.rows(), m.cols());
    for _ in 0..len {
        let op = random_op(ring, rng, m.rows(), m.cols());
        (cur, t) = apply_elementary(ring, &cur, &t, &op).unwrap();
    }
    (cur, t)
}
