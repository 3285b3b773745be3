//! Reference values regenerated by the brute-force oracles and compared with the
//! fast paths. Each test computes its expectation independently first.

use diagred::instances::{Bits2x2, Hurwitz, HurwitzRing, IntegerRing, Mat2F2Ring, ModularRing, Poly, PolyRing};
use diagred::oracle::{
    determinantal_divisors, enumerate_elements, hurwitz_elements_up_to_norm, hurwitz_ideal_lattices, integer_gcd,
    minimal_two_sided_ideal, poly_gcd, Lattice,
};
use diagred::reduction::{diagonalize, fix_chain, kaplansky_pq, matrix_coboundary, simple_witnesses, split_off_unit, verify_chain};
use diagred::ring::{bezout_plan, is_duo, sr1_bezout};
use diagred::{Matrix, Ring, Side, TransformPair};
use num_bigint::BigInt;

fn zm(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

fn h(t: &str) -> Hurwitz {
    HurwitzRing.parse_element(t).unwrap()
}

fn lattice_of(set: &[Hurwitz]) -> Lattice {
    let vectors: Vec<Vec<BigInt>> = set
        .iter()
        .flat_map(|a| hurwitz_ideal_lattices(a).two_sided.basis().to_vec())
        .collect();
    Lattice::span(4, vectors)
}

fn sublattice(small: &Lattice, big: &Lattice) -> bool {
    small.basis().iter().all(|v| big.contains(v))
}

#[test]
fn hurwitz_coboundary_matches_lattices_up_to_norm_50() {
    let r = HurwitzRing;
    let elems = hurwitz_elements_up_to_norm(50);
    assert!(elems.len() > 20_000);
    for a in &elems {
        let fast = r.coboundary(a).unwrap();
        let ideals = hurwitz_ideal_lattices(a);
        let generated = hurwitz_ideal_lattices(&fast);
        assert_eq!(generated.right, ideals.two_sided, "coboundary of {a:?}");
        assert_eq!(generated.left, ideals.two_sided, "coboundary of {a:?} is not duo");
    }
}

#[test]
fn hurwitz_duo_matches_lattices() {
    let r = HurwitzRing;
    for a in hurwitz_elements_up_to_norm(20) {
        let ideals = hurwitz_ideal_lattices(&a);
        assert_eq!(is_duo(&r, &a).unwrap(), ideals.right == ideals.left, "{a:?}");
    }
    assert!(is_duo(&r, &h("[1,1,0,0]")).unwrap());
    assert!(!is_duo(&r, &h("[2,1,0,0]")).unwrap());
}

#[test]
fn hurwitz_reference_elements() {
    let r = HurwitzRing;
    let omega = Hurwitz::omega();
    assert_eq!(omega.reduced_norm(), 1u32.into());
    assert!(r.is_unit(&omega));
    let one_plus_i = h("[1,1,0,0]");
    let one_minus_i = h("[1,-1,0,0]");
    let two = h("[2,0,0,0]");
    assert_eq!(r.mul(&one_plus_i, &one_minus_i), two);
    assert_eq!(r.divide(&two, &one_plus_i, Side::Right).unwrap(), one_minus_i);
    assert_eq!(r.coboundary(&h("[2,1,0,0]")).unwrap(), r.one());
    assert_eq!(r.coboundary(&one_plus_i).unwrap(), one_plus_i);

    let i_plus_j = h("[0,1,1,0]");
    assert_eq!(r.mul(&omega, &one_plus_i), i_plus_j);
    let (q, rem) = r.euclidean_divmod(&i_plus_j, &one_plus_i, Side::Right).unwrap();
    assert_eq!((q, r.is_zero(&rem)), (omega, true));

    let d = bezout_plan(&r, &one_plus_i, &two, Side::Right).unwrap().gcd;
    assert_eq!(hurwitz_ideal_lattices(&d).right, hurwitz_ideal_lattices(&one_plus_i).right);
}

#[test]
fn hurwitz_matrix_coboundary_against_lattice() {
    let r = HurwitzRing;
    let entries = [h("[1,1,0,0]"), h("[2,0,0,0]"), h("[0,0,0,0]"), h("[0,2,0,0]")];
    let m = Matrix::new(2, 2, entries.to_vec()).unwrap();
    let g = matrix_coboundary(&r, &m).unwrap();
    assert_eq!(g, h("[1,1,0,0]"));
    assert_eq!(hurwitz_ideal_lattices(&g).right, lattice_of(&entries));
}

#[test]
fn hurwitz_total_divisibility_against_lattices() {
    let r = HurwitzRing;
    let totally_divides = |a: &Hurwitz, b: &Hurwitz| {
        let la = hurwitz_ideal_lattices(a);
        let lb = hurwitz_ideal_lattices(b);
        sublattice(&lb.two_sided, &la.right) && sublattice(&lb.two_sided, &la.left)
    };
    for (a, b) in [("[1,1,0,0]", "[2,0,0,0]"), ("[2,1,0,0]", "[5,0,0,0]")] {
        let (a, b) = (h(a), h(b));
        assert!(totally_divides(&a, &b));
        assert!(verify_chain(&r, &[a, b]).unwrap());
    }
    let (a, b) = (h("[2,0,0,0]"), h("[1,1,0,0]"));
    assert!(!totally_divides(&a, &b));
    assert!(!verify_chain(&r, &[a.clone(), b.clone()]).unwrap());

    let d = Matrix::diagonal(&r, 2, 2, &[a, b]);
    let (out, t, trace) = fix_chain(&r, &d, &TransformPair::identity(&r, 2, 2)).unwrap();
    assert!(!trace.is_empty());
    assert!(diagred::verify_transform_pair(&r, &d, &out, &t));
    let (d1, d2) = (out.get(0, 0), out.get(1, 1));
    assert_eq!((d1.reduced_norm(), d2.reduced_norm()), (2u32.into(), 4u32.into()));
    assert!(totally_divides(d1, d2));
    assert_eq!(hurwitz_ideal_lattices(d1).right, hurwitz_ideal_lattices(&h("[1,1,0,0]")).right);
}

#[test]
fn integer_diagonal_forms_match_determinantal_divisors() {
    let r = IntegerRing;
    for (rows, expected) in [
        (&[&[2i64, 0][..], &[0, 3]][..], [1i64, 6]),
        (&[&[2, 4][..], &[6, 8]][..], [2, 4]),
        (&[&[3, 0][..], &[0, 2]][..], [1, 6]),
    ] {
        let m = zm(rows);
        let divisors = determinantal_divisors(&r, &m, 2, integer_gcd).unwrap();
        let d1 = divisors[0].clone();
        let d2 = &divisors[1] / &d1;
        assert_eq!([d1.clone(), d2.clone()], expected.map(BigInt::from));
        let rep = diagonalize(&r, &m).unwrap();
        assert!(rep.verified());
        assert_eq!(rep.form.diag, vec![d1, d2]);
    }
    assert!(!verify_chain(&r, &[BigInt::from(2), BigInt::from(3)]).unwrap());
}

#[test]
fn polynomial_diagonal_form_matches_determinantal_divisors() {
    let r = PolyRing;
    let x = Poly::from_ints(&[0, 1]);
    let x1 = Poly::from_ints(&[1, 1]);
    let m = Matrix::diagonal(&r, 2, 2, &[x, x1]);
    let divisors = determinantal_divisors(&r, &m, 2, poly_gcd).unwrap();
    let expected = vec![divisors[0].clone(), r.divide(&divisors[1], &divisors[0], Side::Right).unwrap()];
    assert_eq!(expected, vec![r.one(), Poly::from_ints(&[0, 1, 1])]);
    let rep = diagonalize(&r, &m).unwrap();
    assert!(rep.verified());
    assert_eq!(rep.form.diag, expected);

    let a = Poly::from_ints(&[-1, 0, 1]);
    let b = Poly::from_ints(&[0, -1, 1]);
    assert_eq!(bezout_plan(&r, &a, &b, Side::Right).unwrap().gcd, poly_gcd(&a, &b));
}

#[test]
fn modular_stable_range_shifts_match_search() {
    let r = ModularRing::new(6).unwrap();
    let first_shift = |a: u64, b: u64| (0..6u64).find(|x| r.is_unit(&((a + b * x) % 6))).unwrap();
    for (a, b, x, d) in [(3u64, 4u64, 1u64, 1u64), (2, 3, 1, 5)] {
        assert_eq!(first_shift(a, b), x);
        let w = sr1_bezout(&r, &a, &b, Side::Right).unwrap();
        assert_eq!((w.x, w.d), (x, d));
        assert!(w.holds(&r, &a, &b));
    }
}

#[test]
fn finite_ring_reference_counts() {
    let z6 = ModularRing::new(6).unwrap();
    assert_eq!(enumerate_elements(&z6).unwrap().len(), 6);
    let f = Mat2F2Ring;
    let elems = enumerate_elements(&f).unwrap();
    assert_eq!(elems.len(), 16);
    let units: Vec<_> = elems
        .iter()
        .filter(|a| elems.iter().any(|b| f.is_one(&f.mul(a, b)) && f.is_one(&f.mul(b, a))))
        .collect();
    assert_eq!(units.len(), 6);
    assert!(units.iter().all(|u| f.is_unit(u)));
    assert_eq!(elems.iter().filter(|a| f.is_unit(a)).count(), 6);
    assert_eq!(minimal_two_sided_ideal(&f, &Bits2x2::E11).unwrap().len(), 16);
}

#[test]
fn mat2f2_corner_reference() {
    let f = Mat2F2Ring;
    let m = Matrix::diagonal(&f, 2, 2, &[Bits2x2::E11, Bits2x2::E22]);
    let g = matrix_coboundary(&f, &m).unwrap();
    assert!(f.is_one(&g));
    let (b, _) = diagred::reduction::lower_triangular_form(&f, &m).unwrap();
    assert!(f.is_one(&f.coboundary(b.get(0, 0)).unwrap()));
}

#[test]
fn e11_is_two_simple_and_splits_to_zero() {
    let f = Mat2F2Ring;
    let a = Bits2x2::E11;
    let by_hand = f.add(&a, &f.mul(&f.mul(&Bits2x2::E21, &a), &Bits2x2::E12));
    assert!(f.is_one(&by_hand));
    let elems = enumerate_elements(&f).unwrap();
    assert!(!elems.iter().any(|u| elems.iter().any(|v| f.is_one(&f.mul(&f.mul(u, &a), v)))));
    let w = simple_witnesses(&f, &a, 3).unwrap();
    assert_eq!(w.n, 2);
    assert!(w.holds(&f, &a));
    let rep = split_off_unit(&f, &a, &w).unwrap();
    assert!(rep.verified());
    assert_eq!(rep.output.get(0, 0), &f.one());
    assert_eq!(rep.output.get(1, 1), &Bits2x2::ZERO);
}

#[test]
fn integer_kaplansky_reference() {
    let r = IntegerRing;
    let z = |x: i64| BigInt::from(x);
    assert!(integer_gcd(&z(6), &z(25)) == z(1));
    let k = kaplansky_pq(&r, &z(6), &z(10), &z(15)).unwrap();
    assert_eq!((k.p, k.q), (z(1), z(1)));
    let k = kaplansky_pq(&r, &z(2), &z(1), &z(3)).unwrap();
    assert_eq!((k.p, k.q), (z(1), z(0)));
}
