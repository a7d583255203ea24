mod common;

use common::int_series;
use qlab::ring::{Coefficient, DynSeries, EisSeries, Eisenstein, IntSeries, Scalar, Series};
use qlab::Error;

fn eis(c: &[(i64, i64)], min_exp: i64, order: Option<i64>) -> EisSeries {
    Series::from_coeffs(min_exp, c.iter().map(|&(a, b)| Eisenstein::new(a, b)).collect(), order)
}

#[test]
fn addition_examples() {
    let f = int_series(&[1, 1], None);
    let g = int_series(&[0, 1], None);
    assert_eq!(f.add(&g), int_series(&[1, 2], None));
    assert_eq!(f.add(&IntSeries::zero_exact()), f);
    let a = IntSeries::from_i64s(-1, &[1], None);
    let b = IntSeries::from_i64s(-1, &[-1], None);
    assert!(a.add(&b).is_zero());
    assert_eq!(a.add(&b), IntSeries::zero_exact());
}

#[test]
fn multiplication_examples() {
    let one_minus = int_series(&[1, -1], None);
    let one_plus = int_series(&[1, 1], None);
    assert_eq!(one_minus.mul(&one_plus), int_series(&[1, 0, -1], None));
    let x = IntSeries::from_i64s(-2, &[1], None);
    let y = IntSeries::from_i64s(5, &[1], None);
    assert_eq!(x.mul(&y), IntSeries::from_i64s(3, &[1], None));
    let t = int_series(&[1, 1, 1], None);
    assert_eq!(t.mul(&t), int_series(&[1, 2, 3, 2, 1], None));
}

#[test]
fn truncated_products_track_order() {
    let f = int_series(&[1, 1], Some(4));
    let g = IntSeries::from_i64s(2, &[1], None);
    // q^2 times something known through q^4 is known through q^6
    assert_eq!(f.mul(&g).order(), Some(6));
    let h = int_series(&[1, 2, 3], Some(3));
    assert_eq!(f.mul(&h).order(), Some(3));
}

#[test]
fn inversion_examples() {
    let inv = int_series(&[1, -1], Some(6)).invert_unit().unwrap();
    assert_eq!(inv, int_series(&[1; 7], Some(6)));
    assert_eq!(IntSeries::one().truncate(5).invert_unit().unwrap(), IntSeries::one().truncate(5));
    let f = int_series(&[1, -1], None).mul(&int_series(&[1, 0, -1], None));
    let inv = f.invert_unit_to(5).unwrap();
    assert_eq!(inv, int_series(&[1, 1, 2, 2, 3, 3], Some(5)));
}

#[test]
fn inversion_errors() {
    assert!(matches!(
        int_series(&[2, 1], Some(4)).invert_unit(),
        Err(Error::NotInvertible(_))
    ));
    assert!(matches!(
        IntSeries::from_i64s(-1, &[1, 1], Some(4)).invert_unit(),
        Err(Error::NonzeroMinExp(-1))
    ));
    assert!(int_series(&[1, 1], None).invert_unit().is_err());
    let e = eis(&[(0, 1), (1, 0)], 0, Some(3)).invert_unit().unwrap();
    assert_eq!(e.coeff(0), Eisenstein::omega_sq());
}

#[test]
fn reflection_examples() {
    let f = IntSeries::from_i64s(2, &[1, 0, 0, 1], None);
    let r = f.reflect_exponents().unwrap();
    assert_eq!(r, IntSeries::from_i64s(-5, &[1, 0, 0, 1], None));
    assert_eq!(IntSeries::one().reflect_exponents().unwrap(), IntSeries::one());
    let g = IntSeries::from_i64s(1, &[3, 0, 0, -1], None);
    assert_eq!(g.reflect_exponents().unwrap().reflect_exponents().unwrap(), g);
    assert!(matches!(
        int_series(&[1], Some(3)).reflect_exponents(),
        Err(Error::ReflectTruncated(3))
    ));
}

#[test]
fn conjugation_examples() {
    let f = eis(&[(0, 0), (0, 1)], 0, None);
    assert_eq!(f.conjugate(), eis(&[(0, 0), (-1, -1)], 0, None));
    let g = int_series(&[1, -2, 5], Some(8)).promote();
    assert_eq!(g.conjugate(), g);
    let h = eis(&[(1, 2), (-3, 1), (0, -1)], -1, Some(5));
    assert_eq!(h.conjugate().conjugate(), h);
}

#[test]
fn substitution_examples() {
    assert_eq!(int_series(&[1, 1], None).substitute_power(3), int_series(&[1, 0, 0, 1], None));
    let f = int_series(&[1, -1, 1], None);
    assert_eq!(f.substitute_power(1), f);
    assert_eq!(f.substitute_power(2), int_series(&[1, 0, -1, 0, 1], None));
    assert_eq!(int_series(&[1, 1], Some(4)).substitute_power(3).order(), Some(12));
}

#[test]
fn omega_identities() {
    let w = Eisenstein::omega();
    let w2 = w.mul(&w);
    assert_eq!(w2, Eisenstein::omega_sq());
    assert_eq!(w2.mul(&w), Eisenstein::one());
    let mut s = Eisenstein::one();
    s.add_assign(&w);
    s.add_assign(&w2);
    assert!(s.is_zero());
    assert_eq!(Eisenstein::new(2, 3).norm(), 7.into());
}

#[test]
fn dynamic_series_refuse_mixed_rings() {
    let z = DynSeries::Int(int_series(&[1, 1], Some(5)));
    let w = DynSeries::Eis(eis(&[(0, 1)], 0, Some(5)));
    assert!(matches!(z.add(&w), Err(Error::RingMismatch { .. })));
    assert!(matches!(z.mul(&w), Err(Error::RingMismatch { .. })));
    assert!(z.scale(&Coefficient::Eisenstein(Eisenstein::omega())).is_err());
    let sum = z.promote().add(&w).unwrap();
    assert_eq!(sum.ring(), w.ring());
    assert_eq!(sum.coeff(0), Coefficient::Eisenstein(Eisenstein::new(1, 1)));
}

#[test]
fn display_format() {
    assert_eq!(int_series(&[1, 2, 0, -1], Some(5)).to_string(), "1 + 2q - q^3 + O(q^6)");
    assert_eq!(IntSeries::from_i64s(-1, &[1], None).to_string(), "q^-1");
}
