mod common;

use common::{naive, to_poly};
use num_bigint::BigInt;
use qlab::finite::{
    kr5_finite, limit_series, measured_stabilization, reflect_finite, s_finite, summands, Family,
    FiniteSpec, FiniteTarget, LimitFamily, Rk1Reading, Variant,
};
use qlab::oracle::{gap_generating_function, GapConditionSpec};
use qlab::ring::IntSeries;
use qlab::Error;

fn fam(f: Family, r: u8) -> LimitFamily {
    LimitFamily::new(f, r).unwrap()
}

#[test]
fn finite_examples() {
    for nn in 3..8 {
        let s = s_finite(FiniteSpec::new(Variant::V0m1, nn)).unwrap();
        assert_eq!(s.coeff(2), BigInt::from(2), "N={nn}");
    }
    let s = s_finite(FiniteSpec::new(Variant::V23, 3)).unwrap();
    assert_eq!(s.coeff(0), BigInt::from(1));
    let s = s_finite(FiniteSpec::new(Variant::V00, 0)).unwrap();
    assert_eq!(s, IntSeries::one());
    assert!(matches!(
        summands(FiniteSpec::new(Variant::V00, -1)),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn finite_versions_approach_the_full_sums() {
    for v in Variant::ALL {
        let (a, b) = v.ab();
        let nn = 24;
        let fin = s_finite(FiniteSpec::combinatorial(v, nn)).unwrap();
        assert!(fin.is_exact());
        let full = naive::s_series(a, b, nn as usize);
        assert_eq!(to_poly(&fin, nn as usize), full, "{v}");
    }
}

#[test]
fn finite_versions_count_bounded_partitions() {
    for v in [Variant::V0m1, Variant::V00, Variant::V11, Variant::V24, Variant::V36] {
        for nn in [2, 5, 9] {
            let fin = s_finite(FiniteSpec::combinatorial(v, nn)).unwrap();
            let gap = gap_generating_function(&GapConditionSpec::for_variant(v, Some(nn)), 30).unwrap();
            assert!(fin.truncate(30).agreement(&gap).agrees(), "{v} N={nn}");
        }
    }
}

#[test]
fn kr5_finite_examples() {
    let k = kr5_finite(15).unwrap();
    assert_eq!(k.coeff(0), BigInt::from(1));
    assert_eq!(k.coeff(1), BigInt::from(1));
    let s24 = naive::s_series(2, 4, 15);
    let s37 = naive::s_series(3, 7, 15);
    let want: Vec<i128> = (0..=15)
        .map(|e| s24[e] + if e >= 1 { s24[e - 1] } else { 0 } + if e >= 2 { s37[e - 2] } else { 0 })
        .collect();
    assert_eq!(to_poly(&k, 15), want);
    assert!(kr5_finite(-2).is_err());
}

/// S(1,3;N) = S(2,3;N) + q² S(3,6;N) and S(0,2;N) = S(0,−1;N) − q² S(3,5;N).
#[test]
fn lift_relations_hold_for_every_n() {
    let f = |v, n| s_finite(FiniteSpec::combinatorial(v, n)).unwrap();
    for nn in 1..=30 {
        let rhs = f(Variant::V23, nn).add(&f(Variant::V36, nn).shift(2));
        assert_eq!(f(Variant::V13, nn), rhs, "first, N={nn}");
        let rhs = f(Variant::V0m1, nn).sub(&f(Variant::V35, nn).shift(2));
        assert_eq!(f(Variant::V02, nn), rhs, "second, N={nn}");
    }
}

#[test]
fn reflection_is_exponent_reversal() {
    for lf in LimitFamily::twelve() {
        for m in 0..5 {
            let nn = 3 * m + lf.residue as i64;
            let poly = s_finite(FiniteSpec::new(lf.family.variant(), nn)).unwrap();
            let want = poly.reflect_exponents().unwrap().shift(lf.rule().eval(m));
            assert_eq!(lf.reflect(m, None).unwrap(), want, "{lf} M={m}");
        }
    }
    let k = kr5_finite(7).unwrap();
    let rule = Family::F.rule(1);
    let r = reflect_finite(FiniteTarget::Kr5, 2, 1, rule, None).unwrap();
    assert_eq!(r, k.reflect_exponents().unwrap().shift(rule.eval(2)));
    assert!(reflect_finite(FiniteTarget::Kr5, 2, 3, rule, None).is_err());
}

#[test]
fn stabilization_is_monotone() {
    let order = 100;
    let mut fams = LimitFamily::twelve();
    fams.extend((0..3).map(|r| fam(Family::Rk4, r)));
    for lf in fams {
        let mut last = 0;
        for m in (2..=30).step_by(4) {
            let s = measured_stabilization(lf, m, order).unwrap();
            assert!(s >= last, "{lf}: prefix fell from {last} to {s} at M={m}");
            last = s;
        }
        assert!(last >= 60, "{lf} only stabilized through {last}");
    }
}

#[test]
fn reflections_settle_on_the_limits() {
    for lf in LimitFamily::twelve() {
        let lim = limit_series(lf, Rk1Reading::Corrected, 60).unwrap();
        let refl = lf.reflect(25, Some(60)).unwrap();
        assert!(refl.agreement(&lim).agrees(), "{lf}");
    }
    assert!(limit_series(fam(Family::Rk4, 0), Rk1Reading::Corrected, 10).is_err());
}

#[test]
fn f0_starts_at_one() {
    let f0 = fam(Family::F, 0);
    for m in 0..8 {
        assert_eq!(f0.reflect(m, Some(5)).unwrap().coeff(0), BigInt::from(1), "M={m}");
    }
    let lim = limit_series(f0, Rk1Reading::Corrected, 5).unwrap();
    assert_eq!(lim.coeff(0), BigInt::from(1));
}

#[test]
fn rk1_readings_differ() {
    let r0 = fam(Family::Rk1, 0);
    let c = limit_series(r0, Rk1Reading::Corrected, 40).unwrap();
    let l = limit_series(r0, Rk1Reading::Literal, 40).unwrap();
    assert_eq!(c.agreement(&l).first_mismatch, Some(2));
    let refl = r0.reflect(20, Some(40)).unwrap();
    assert!(refl.agreement(&c).agrees());
}
