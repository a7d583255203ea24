//! A small closed expression form for the two sides of a catalog identity.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::finite::{
    bracket_combination, limit_series, measured_stabilization, LimitFamily, Rk1Reading,
};
use crate::qkit::{gauss_binom, inv_product, product_quotient, BinomSpec, PochhammerSpec};
use crate::ring::{Coefficient, DynSeries, EisSeries, Eisenstein, IntSeries};
use crate::sums::{kr_combo, s_series, SumSpec};

/// One factor (c·q^exp; q^base)_∞ with c ∈ {±1, ±ω, ±ω²}, written as (re, omega).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factor {
    pub unit: (i64, i64),
    pub exp: i64,
    pub base: i64,
}

impl Factor {
    pub const fn plain(exp: i64, base: i64) -> Self {
        Factor {
            unit: (1, 0),
            exp,
            base,
        }
    }

    pub const fn omega(exp: i64, base: i64) -> Self {
        Factor {
            unit: (0, 1),
            exp,
            base,
        }
    }

    pub const fn omega_sq(exp: i64, base: i64) -> Self {
        Factor {
            unit: (-1, -1),
            exp,
            base,
        }
    }

    fn spec(&self) -> PochhammerSpec<Eisenstein> {
        PochhammerSpec::infinite(Eisenstein::new(self.unit.0, self.unit.1), self.exp, self.base)
    }
}

/// Which Schur polynomial identity, and which side of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurSide {
    Sum,
    Alternating,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// An integer constant.
    Const(i64),
    /// S(a,b;q).
    S(i64, i64),
    /// The S-form sum side of KRᵢ.
    Kr(usize),
    /// Σ q^{n²+kn} / (q;q)_n.
    RrSum(i64),
    /// Σ q^{n²} / (q;q)_{2n} (k = 0) or Σ q^{n²+n} / (q;q)_{2n+1} (k = 1).
    RrIvSum(i64),
    /// Schur polynomial sides for parameter N (k = 1, 2).
    Schur { k: u8, n: i64, side: SchurSide },
    /// 1 / ∏ (q^c; q^m)_∞ over (c, m).
    InvProduct(Vec<(i64, i64)>),
    /// unit · ∏ num / ∏ den over infinite Pochhammer symbols, in ℤ[ω].
    EisProduct {
        unit: (i64, i64),
        num: Vec<Factor>,
        den: Vec<Factor>,
    },
    /// A limit double sum.
    Limit(LimitFamily, Rk1Reading),
    /// Reflected finite version at M (or the smallest M ≥ 40 reaching the
    /// order), known only through its measured stabilization.
    Reflected { fam: LimitFamily, m: Option<i64> },
    /// Σ sign·q^shift·⟨c⟩.
    Brackets(Vec<(i64, i64, [i64; 4])>),
    Add(Vec<Recipe>),
    /// c · q^shift · inner.
    Scale {
        c: Coefficient,
        shift: i64,
        inner: Box<Recipe>,
    },
    /// Ring conjugation ω ↦ ω².
    Conj(Box<Recipe>),
    /// ℤ → ℤ[ω].
    Promote(Box<Recipe>),
}

impl Recipe {
    pub fn shifted(self, k: i64) -> Recipe {
        Recipe::Scale {
            c: Coefficient::Integer(BigInt::from(1)),
            shift: k,
            inner: Box::new(self),
        }
    }

    pub fn times(self, c: i64) -> Recipe {
        Recipe::Scale {
            c: Coefficient::Integer(BigInt::from(c)),
            shift: 0,
            inner: Box::new(self),
        }
    }

    /// Multiplies by the Eisenstein integer re + omega·ω.
    pub fn times_eis(self, re: i64, omega: i64) -> Recipe {
        Recipe::Scale {
            c: Coefficient::Eisenstein(Eisenstein::new(re, omega)),
            shift: 0,
            inner: Box::new(self),
        }
    }

    pub fn plus(self, other: Recipe) -> Recipe {
        match self {
            Recipe::Add(mut v) => {
                v.push(other);
                Recipe::Add(v)
            }
            s => Recipe::Add(vec![s, other]),
        }
    }

    pub fn minus(self, other: Recipe) -> Recipe {
        self.plus(other.times(-1))
    }

    pub fn conj(self) -> Recipe {
        Recipe::Conj(Box::new(self))
    }

    pub fn promote(self) -> Recipe {
        Recipe::Promote(Box::new(self))
    }

    /// Evaluates through `order`. The result's own order may be lower when a
    /// component cannot be known further (reflections).
    pub fn eval(&self, order: i64) -> Result<DynSeries> {
        Ok(match self {
            Recipe::Const(c) => DynSeries::Int(IntSeries::from_i64s(0, &[*c], None).truncate(order)),
            Recipe::S(a, b) => DynSeries::Int(s_series(SumSpec::new(*a, *b), order)),
            Recipe::Kr(i) => DynSeries::Int(kr_combo(*i, order)?),
            Recipe::RrSum(k) => DynSeries::Int(rr_sum(*k, order)),
            Recipe::RrIvSum(k) => DynSeries::Int(rr_iv_sum(*k, order)?),
            Recipe::Schur { k, n, side } => DynSeries::Int(schur_side(*k, *n, *side)?.truncate(order)),
            Recipe::InvProduct(pairs) => DynSeries::Int(inv_product(pairs, order)?),
            Recipe::EisProduct { unit, num, den } => {
                let num: Vec<_> = num.iter().map(Factor::spec).collect();
                let den: Vec<_> = den.iter().map(Factor::spec).collect();
                let p: EisSeries = product_quotient(&num, &den, order)?;
                DynSeries::Eis(p.scale(&Eisenstein::new(unit.0, unit.1)))
            }
            Recipe::Limit(fam, reading) => DynSeries::Int(limit_series(*fam, *reading, order)?),
            Recipe::Reflected { fam, m } => DynSeries::Int(reflected_known(*fam, *m, order)?),
            Recipe::Brackets(terms) => DynSeries::Int(bracket_combination(terms, order)?),
            Recipe::Add(parts) => {
                let mut it = parts.iter();
                let first = it
                    .next()
                    .ok_or_else(|| Error::InvalidArgument("empty sum recipe".into()))?
                    .eval(order)?;
                it.try_fold(first, |acc, r| acc.add(&r.eval(order)?))?
            }
            Recipe::Scale { c, shift, inner } => inner.eval(order - shift)?.scale(c)?.shift(*shift),
            Recipe::Conj(inner) => inner.eval(order)?.conjugate(),
            Recipe::Promote(inner) => inner.eval(order)?.promote(),
        })
    }
}

/// Σ_n q^{n²+kn} / (q;q)_n through `order`.
pub fn rr_sum(k: i64, order: i64) -> IntSeries {
    let one = BigInt::from(1);
    let mut acc = IntSeries::zero(order);
    let mut n = 0i64;
    while n * n + k * n <= order {
        let e = n * n + k * n;
        let mut t = IntSeries::one().truncate(order - e);
        for j in 1..=n {
            t.div_one_minus(&one, j).expect("truncated");
        }
        acc = acc.add(&t.shift(e));
        n += 1;
    }
    acc
}

/// Σ q^{n²} / (q;q)_{2n} (k = 0) or Σ q^{n²+n} / (q;q)_{2n+1} (k = 1).
pub fn rr_iv_sum(k: i64, order: i64) -> Result<IntSeries> {
    if !(0..=1).contains(&k) {
        return Err(Error::InvalidArgument(format!("Region IV index must be 0 or 1, got {k}")));
    }
    let one = BigInt::from(1);
    let mut acc = IntSeries::zero(order);
    let mut n = 0i64;
    while n * n + k * n <= order {
        let e = n * n + k * n;
        let mut t = IntSeries::one().truncate(order - e);
        for j in 1..=2 * n + k {
            t.div_one_minus(&one, j).expect("truncated");
        }
        acc = acc.add(&t.shift(e));
        n += 1;
    }
    Ok(acc)
}

/// Exact Schur polynomials. k = 1: Σ_j q^{j²}[N−j, j] against
/// Σ_λ (−1)^λ q^{λ(5λ+1)/2} [N, ⌊(N−5λ)/2⌋]; k = 2: Σ_j q^{j²+j}[N−j, j]
/// against Σ_λ (−1)^λ q^{λ(5λ−3)/2} [N+1, ⌊(N+1−5λ)/2⌋ + 1].
pub fn schur_side(k: u8, n: i64, side: SchurSide) -> Result<IntSeries> {
    if n < 0 || !(1..=2).contains(&k) {
        return Err(Error::InvalidArgument(format!(
            "Schur identity needs k in 1..=2 and N >= 0, got k={k}, N={n}"
        )));
    }
    let lin = i64::from(k - 1);
    let mut acc = IntSeries::zero_exact();
    match side {
        SchurSide::Sum => {
            for j in 0..=n / 2 {
                let b = gauss_binom(BinomSpec::new(n - j, j));
                acc = acc.add(&b.shift(j * j + lin * j));
            }
        }
        SchurSide::Alternating => {
            // the binomial vanishes once |λ| is beyond (N+1)/5 + 1
            let lam_max = (n + 1) / 5 + 2;
            for lam in -lam_max..=lam_max {
                let (exp, top, bottom) = if k == 1 {
                    (lam * (5 * lam + 1) / 2, n, (n - 5 * lam).div_euclid(2))
                } else {
                    (lam * (5 * lam - 3) / 2, n + 1, (n + 1 - 5 * lam).div_euclid(2) + 1)
                };
                let b = gauss_binom(BinomSpec::new(top, bottom)).shift(exp);
                acc = if lam.rem_euclid(2) == 0 { acc.add(&b) } else { acc.sub(&b) };
            }
        }
    }
    Ok(acc)
}

/// Smallest M ≥ 40 whose reflections are expected to stabilize past `order`.
pub fn auto_m(order: i64) -> i64 {
    40.max(order / 3 + 2)
}

/// The reflection at M, truncated to the prefix it shares with M + 1.
fn reflected_known(fam: LimitFamily, m: Option<i64>, order: i64) -> Result<IntSeries> {
    let m = m.unwrap_or_else(|| auto_m(order));
    let stable = measured_stabilization(fam, m, order)?;
    Ok(fam.reflect(m, Some(order))?.truncate(stable - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_small_n() {
        for k in 1..=2 {
            for n in 0..=12 {
                let l = schur_side(k, n, SchurSide::Sum).unwrap();
                let r = schur_side(k, n, SchurSide::Alternating).unwrap();
                assert_eq!(l, r, "k={k} N={n}");
            }
        }
    }

    #[test]
    fn mixed_rings_need_promotion() {
        let bad = Recipe::S(0, 0).plus(Recipe::S(1, 1).times_eis(0, 1));
        assert!(bad.eval(5).is_err());
        let good = Recipe::S(0, 0).promote().plus(Recipe::S(1, 1).promote().times_eis(0, 1));
        assert!(good.eval(5).is_ok());
    }
}
