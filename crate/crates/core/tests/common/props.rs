//! Randomized property suites, each run for a fixed number of cases with a
//! deterministic generator.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use num_bigint::BigInt;
use qlab::qkit::{
    binom_recurrence_check, gauss_binom, pochhammer, reflect_binom_law, BinomSpec, PochhammerSpec,
};
use qlab::ring::{EisSeries, Eisenstein, IntSeries, Series, Scalar};

use super::naive;

pub const CASES: u32 = 1000;

fn runner() -> TestRunner {
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner().run(&strategy, test).map_err(|e| e.to_string())
}

fn int_series() -> impl Strategy<Value = IntSeries> {
    (
        -3i64..4,
        prop::collection::vec(-4i64..5, 0..7),
        prop::option::of(4i64..12),
    )
        .prop_map(|(lo, c, order)| IntSeries::from_i64s(lo, &c, order))
}

fn eis_series() -> impl Strategy<Value = EisSeries> {
    (
        -3i64..4,
        prop::collection::vec((-3i64..4, -3i64..4), 0..7),
        prop::option::of(4i64..12),
    )
        .prop_map(|(lo, c, order)| {
            let c: Vec<Eisenstein> = c.into_iter().map(|(a, b)| Eisenstein::new(a, b)).collect();
            Series::from_coeffs(lo, c, order)
        })
}

fn laurent_int() -> impl Strategy<Value = IntSeries> {
    (-4i64..5, prop::collection::vec(-4i64..5, 0..7)).prop_map(|(lo, c)| IntSeries::from_i64s(lo, &c, None))
}

fn agree<C: Scalar>(x: &Series<C>, y: &Series<C>, what: &str) -> Result<(), TestCaseError> {
    let a = x.agreement(y);
    prop_assert!(a.agrees(), "{what}: {x} vs {y}, first mismatch {:?}", a.first_mismatch);
    if x.is_exact() && y.is_exact() {
        prop_assert_eq!(x, y, "{}", what);
    }
    Ok(())
}

fn axioms<C: Scalar>(f: Series<C>, g: Series<C>, h: Series<C>) -> Result<(), TestCaseError> {
    agree(&f.add(&g), &g.add(&f), "add commutes")?;
    agree(&f.mul(&g), &g.mul(&f), "mul commutes")?;
    agree(&f.add(&g).add(&h), &f.add(&g.add(&h)), "add associates")?;
    agree(&f.mul(&g).mul(&h), &f.mul(&g.mul(&h)), "mul associates")?;
    agree(&f.mul(&g.add(&h)), &f.mul(&g).add(&f.mul(&h)), "distributes")?;
    agree(&f.sub(&f), &Series::zero_exact(), "additive inverse")?;
    agree(&f.mul(&Series::one()), &f, "multiplicative identity")
}

pub fn ring_axioms_integer() -> Result<(), String> {
    run((int_series(), int_series(), int_series()), |(f, g, h)| axioms(f, g, h))
}

pub fn ring_axioms_eisenstein() -> Result<(), String> {
    run((eis_series(), eis_series(), eis_series()), |(f, g, h)| axioms(f, g, h))
}

fn units() -> impl Strategy<Value = Eisenstein> {
    prop::sample::select(vec![
        Eisenstein::new(1, 0),
        Eisenstein::new(-1, 0),
        Eisenstein::new(0, 1),
        Eisenstein::new(0, -1),
        Eisenstein::new(-1, -1),
        Eisenstein::new(1, 1),
    ])
}

pub fn invert_unit() -> Result<(), String> {
    let strat = (
        units(),
        prop::collection::vec((-3i64..4, -3i64..4), 0..8),
        1i64..20,
    );
    run(strat, |(u, tail, p)| {
        let mut c = vec![u];
        c.extend(tail.into_iter().map(|(a, b)| Eisenstein::new(a, b)));
        let f: EisSeries = Series::from_coeffs(0, c, Some(p));
        let g = f.invert_unit().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(g.order(), Some(p));
        agree(&f.mul(&g), &Series::one().truncate(p), "f * f^-1")?;
        prop_assert_eq!(f.mul(&g).order(), Some(p));
        Ok(())
    })
}

pub fn conjugation_homomorphism() -> Result<(), String> {
    run((eis_series(), eis_series()), |(f, g)| {
        agree(&f.mul(&g).conjugate(), &f.conjugate().mul(&g.conjugate()), "conj(fg)")?;
        agree(&f.add(&g).conjugate(), &f.conjugate().add(&g.conjugate()), "conj(f+g)")?;
        agree(&f.conjugate().conjugate(), &f, "conj is an involution")
    })
}

pub fn reflection_multiplicative() -> Result<(), String> {
    run((laurent_int(), laurent_int()), |(f, g)| {
        let r = |s: &IntSeries| s.reflect_exponents().expect("exact input");
        prop_assert_eq!(r(&f.mul(&g)), r(&f).mul(&r(&g)));
        prop_assert_eq!(r(&r(&f)), f);
        Ok(())
    })
}

fn nm() -> impl Strategy<Value = (i64, i64)> {
    (0i64..=20).prop_flat_map(|n| (Just(n), 0..=n))
}

pub fn binomial_symmetry() -> Result<(), String> {
    run(nm(), |(n, m)| {
        prop_assert_eq!(gauss_binom(BinomSpec::new(n, m)), gauss_binom(BinomSpec::new(n, n - m)));
        Ok(())
    })
}

pub fn binomial_degree_and_positivity() -> Result<(), String> {
    run(nm(), |(n, m)| {
        let b = gauss_binom(BinomSpec::new(n, m));
        prop_assert_eq!(b.degree(), Some(m * (n - m)));
        prop_assert_eq!(b.valuation(), Some(0));
        prop_assert!(b.coeffs().iter().all(|c| *c > BigInt::from(0)));
        let want = naive::gauss(n, m);
        let got: Vec<i128> = b.coeffs().iter().map(|c| i128::try_from(c).unwrap()).collect();
        prop_assert_eq!(got, want);
        Ok(())
    })
}

pub fn binomial_recurrences() -> Result<(), String> {
    let strat = (1i64..=20).prop_flat_map(|n| (Just(n), -1..=n + 1));
    run(strat, |(n, m)| {
        prop_assert!(binom_recurrence_check(n, m, 3).unwrap(), "recurrence 3 at ({n},{m})");
        prop_assert!(binom_recurrence_check(n, m, 4).unwrap(), "recurrence 4 at ({n},{m})");
        Ok(())
    })
}

pub fn reflection_laws() -> Result<(), String> {
    let strat = (0i64..=10, -8i64..=8, 0i64..=12, 0i64..=12);
    run(strat, |(len, e, bn, bm)| {
        // (q^e; q^-1)_len via the reflection of (q^-e; q)_len
        let poch = |exp: i64| {
            pochhammer(&PochhammerSpec::finite(BigInt::from(1), exp, 1, len as usize), 0)
                .expect("finite Pochhammer")
        };
        let lhs = poch(-e).reflect_exponents().unwrap();
        let sign = if len % 2 == 0 { 1 } else { -1 };
        let rhs = poch(-e).scale(&BigInt::from(sign)).shift(e * len - len * (len - 1) / 2);
        prop_assert_eq!(lhs, rhs);
        prop_assert!(reflect_binom_law(bn, bm));
        Ok(())
    })
}

pub type Suite = fn() -> Result<(), String>;

/// Every suite with its name, in a fixed order.
pub fn suites() -> Vec<(&'static str, Suite)> {
    vec![
        ("ring axioms over Z", ring_axioms_integer),
        ("ring axioms over Z[w]", ring_axioms_eisenstein),
        ("unit inversion", invert_unit),
        ("conjugation homomorphism", conjugation_homomorphism),
        ("reflection multiplicativity", reflection_multiplicative),
        ("binomial symmetry", binomial_symmetry),
        ("binomial degree and positivity", binomial_degree_and_positivity),
        ("binomial recurrences", binomial_recurrences),
        ("Pochhammer and binomial reflection laws", reflection_laws),
    ]
}
