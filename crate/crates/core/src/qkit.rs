//! Pochhammer symbols, infinite products and Gaussian binomials.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::{IntSeries, Scalar, Series};

/// (c·q^exp; q^base)_len, with `len = None` for the infinite product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochhammerSpec<C> {
    pub coeff: C,
    pub exp: i64,
    pub base: i64,
    pub len: Option<usize>,
}

impl<C: Scalar> PochhammerSpec<C> {
    pub fn finite(coeff: C, exp: i64, base: i64, len: usize) -> Self {
        PochhammerSpec {
            coeff,
            exp,
            base,
            len: Some(len),
        }
    }

    pub fn infinite(coeff: C, exp: i64, base: i64) -> Self {
        PochhammerSpec {
            coeff,
            exp,
            base,
            len: None,
        }
    }

    fn check(&self) -> Result<()> {
        if self.base < 1 {
            return Err(Error::InvalidArgument(format!(
                "Pochhammer base exponent must be positive, got {}",
                self.base
            )));
        }
        if self.len.is_none() && self.exp < 1 {
            return Err(Error::DivergentProduct(format!(
                "({}q^{}; q^{})_inf",
                self.coeff, self.exp, self.base
            )));
        }
        if self.coeff.unit_inverse().is_none() {
            return Err(Error::InvalidArgument(format!(
                "Pochhammer argument coefficient {} is not a unit",
                self.coeff
            )));
        }
        Ok(())
    }

    /// Exponents q^{exp + base·i} of the factors that can touch exponents ≤ `order`.
    fn factor_exps(&self, order: Option<i64>) -> Vec<i64> {
        let mut out = Vec::new();
        let mut i = 0usize;
        loop {
            if self.len.is_some_and(|n| i >= n) {
                break;
            }
            let e = self.exp + self.base * i as i64;
            if self.len.is_none() && order.is_some_and(|p| e > p) {
                break;
            }
            out.push(e);
            i += 1;
        }
        out
    }
}

/// Multiplies `s` by (1 − c·q^e) for any integer e.
fn mul_factor<C: Scalar>(s: &mut Series<C>, c: &C, e: i64) {
    if e >= 1 {
        s.mul_one_minus(c, e);
    } else {
        let mut f = Series::monomial(c.neg(), e);
        f = f.add(&Series::one());
        *s = s.mul(&f);
    }
}

/// Expands a Pochhammer symbol. Finite lengths give exact polynomials;
/// the infinite product is known through `order`.
pub fn pochhammer<C: Scalar>(spec: &PochhammerSpec<C>, order: i64) -> Result<Series<C>> {
    spec.check()?;
    let mut s = match spec.len {
        Some(_) => Series::one(),
        None => Series::one().truncate(order),
    };
    for e in spec.factor_exps(Some(order)) {
        mul_factor(&mut s, &spec.coeff, e);
    }
    Ok(s)
}

/// ∏ num / ∏ den over infinite Pochhammer symbols, through `order`.
///
/// Each denominator factor is divided out with an O(P) kernel, so the cost
/// is linear in the number of factors touching the window.
pub fn product_quotient<C: Scalar>(
    num: &[PochhammerSpec<C>],
    den: &[PochhammerSpec<C>],
    order: i64,
) -> Result<Series<C>> {
    let mut s = Series::one().truncate(order);
    for spec in num {
        spec.check()?;
        for e in spec.factor_exps(Some(order)) {
            mul_factor(&mut s, &spec.coeff, e);
        }
    }
    for spec in den {
        spec.check()?;
        for e in spec.factor_exps(Some(order)) {
            if e < 1 {
                let inv = pochhammer(&PochhammerSpec::finite(spec.coeff.clone(), e, 1, 1), order)?;
                s = s.mul(&inv.truncate(order).invert_unit()?);
            } else {
                s.div_one_minus(&spec.coeff, e)?;
            }
        }
    }
    Ok(s)
}

/// 1 / ∏_j (q^{c_j}; q^{m_j})_∞ through `order`, for pairs (c_j, m_j).
pub fn inv_product(pairs: &[(i64, i64)], order: i64) -> Result<IntSeries> {
    let den: Vec<_> = pairs
        .iter()
        .map(|&(c, m)| PochhammerSpec::infinite(BigInt::from(1), c, m))
        .collect();
    product_quotient(&[], &den, order)
}

/// ⟨c₁,c₂,c₃,c₄⟩ = (q⁴⁵;q⁴⁵)_∞ / [(q³;q³)_∞ ∏_j (q^{c_j}, q^{45−c_j}; q⁴⁵)_∞].
pub fn bracket_product(c: &[i64], order: i64) -> Result<IntSeries> {
    if c.iter().any(|&x| !(1..=44).contains(&x)) {
        return Err(Error::InvalidArgument(format!(
            "bracket entries must lie in 1..=44, got {c:?}"
        )));
    }
    let one = BigInt::from(1);
    let num = [PochhammerSpec::infinite(one.clone(), 45, 45)];
    let mut den = vec![PochhammerSpec::infinite(one.clone(), 3, 3)];
    for &x in c {
        den.push(PochhammerSpec::infinite(one.clone(), x, 45));
        den.push(PochhammerSpec::infinite(one.clone(), 45 - x, 45));
    }
    product_quotient(&num, &den, order)
}

/// Coefficients of [n, m]_q in base q, optionally capped at `cap` terms.
///
/// Builds ∏_{i=1..m} (1 − q^{n−m+i}) / (1 − q^i) one factor pair at a time;
/// every intermediate is itself a Gaussian polynomial, so each division is
/// exact, and capping is safe because both kernels are lower-triangular.
pub fn binom_coeffs(n: i64, m: i64, cap: Option<usize>) -> Vec<BigInt> {
    if m < 0 || n < 0 || m > n {
        return Vec::new();
    }
    let m = m.min(n - m);
    let full = (m * (n - m) + 1) as usize;
    let len = cap.map_or(full, |c| c.min(full));
    if len == 0 {
        return Vec::new();
    }
    let mut v = vec![BigInt::from(0); len];
    v[0] = BigInt::from(1);
    let mut deg = 0usize;
    for i in 1..=m {
        let up = (n - m + i) as usize;
        let down = i as usize;
        let new_deg = deg + up - down;
        let hi = (deg + up).min(len - 1);
        // multiply by (1 − q^up)
        for e in (up..=hi).rev() {
            let t = v[e - up].clone();
            v[e] -= t;
        }
        // divide by (1 − q^down)
        let hi = new_deg.min(len - 1);
        for e in down..=hi {
            let t = v[e - down].clone();
            v[e] += t;
        }
        for x in v.iter_mut().take((deg + up).min(len - 1) + 1).skip(hi + 1) {
            *x = BigInt::from(0);
        }
        deg = new_deg;
    }
    v
}

/// Gaussian binomial [top, bottom] in base q^base.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinomSpec {
    pub top: i64,
    pub bottom: i64,
    pub base: i64,
    /// Treat [−1, 0] as 1 instead of 0.
    pub star: bool,
}

impl BinomSpec {
    pub fn new(top: i64, bottom: i64) -> Self {
        BinomSpec {
            top,
            bottom,
            base: 1,
            star: false,
        }
    }

    pub fn base(self, base: i64) -> Self {
        BinomSpec { base, ..self }
    }

    pub fn star(self, star: bool) -> Self {
        BinomSpec { star, ..self }
    }

    /// Whether the convention makes the value the constant 1 outside 0 ≤ bottom ≤ top.
    fn star_one(&self) -> bool {
        self.star && self.top == -1 && self.bottom == 0
    }

    pub fn is_zero(&self) -> bool {
        !self.star_one() && (self.bottom < 0 || self.top < self.bottom)
    }

    /// Degree in q of the value (0 for the zero polynomial).
    pub fn degree(&self) -> i64 {
        if self.is_zero() || self.star_one() {
            0
        } else {
            self.base * self.bottom * (self.top - self.bottom)
        }
    }
}

/// Exact Gaussian polynomial for `spec`.
pub fn gauss_binom(spec: BinomSpec) -> IntSeries {
    gauss_binom_capped(spec, None)
}

/// Gaussian polynomial truncated to exponents ≤ `order`.
pub fn gauss_binom_to(spec: BinomSpec, order: i64) -> IntSeries {
    gauss_binom_capped(spec, Some(order))
}

fn gauss_binom_capped(spec: BinomSpec, order: Option<i64>) -> IntSeries {
    let wrap = |s: IntSeries| match order {
        Some(p) => s.truncate(p),
        None => s,
    };
    if spec.star_one() {
        return wrap(Series::one());
    }
    if spec.is_zero() {
        return wrap(Series::zero_exact());
    }
    let cap = order.map(|p| if p < 0 { 0 } else { (p / spec.base + 1) as usize });
    let v = binom_coeffs(spec.top, spec.bottom, cap);
    wrap(Series::polynomial(v).substitute_power(spec.base))
}

/// Pascal-type recurrences: `which = 3` checks [n,m] = [n−1,m] + q^{n−m}[n−1,m−1],
/// `which = 4` checks [n,m] = [n−1,m−1] + q^m[n−1,m].
pub fn binom_recurrence_check(n: i64, m: i64, which: u8) -> Result<bool> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("recurrence needs n >= 1, got {n}")));
    }
    let lhs = gauss_binom(BinomSpec::new(n, m));
    let a = gauss_binom(BinomSpec::new(n - 1, m));
    let b = gauss_binom(BinomSpec::new(n - 1, m - 1));
    let rhs = match which {
        3 => a.add(&b.shift(n - m)),
        4 => b.add(&a.shift(m)),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "recurrence index must be 3 or 4, got {which}"
            )))
        }
    };
    Ok(lhs == rhs)
}

/// Checks that q ↦ q⁻¹ sends [n+m, m]_q to q^{−nm}[n+m, m]_q.
pub fn reflect_binom_law(n: i64, m: i64) -> bool {
    let b = gauss_binom(BinomSpec::new(n + m, m));
    match b.reflect_exponents() {
        Ok(r) => r == b.shift(-n * m),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &IntSeries, hi: i64) -> Vec<i64> {
        (0..=hi)
            .map(|e| i64::try_from(s.coeff(e)).unwrap())
            .collect()
    }

    #[test]
    fn pochhammer_small_cases() {
        let one = BigInt::from(1);
        let p0 = pochhammer(&PochhammerSpec::finite(one.clone(), 1, 1, 0), 10).unwrap();
        assert_eq!(p0, IntSeries::one());
        let p2 = pochhammer(&PochhammerSpec::finite(one.clone(), 1, 1, 2), 10).unwrap();
        assert_eq!(p2, IntSeries::from_i64s(0, &[1, -1, -1, 1], None));
        let err = pochhammer(&PochhammerSpec::infinite(one, 0, 1), 10);
        assert!(matches!(err, Err(Error::DivergentProduct(_))));
    }

    #[test]
    fn eisenstein_pochhammer() {
        use crate::ring::Eisenstein;
        let p = pochhammer(&PochhammerSpec::finite(Eisenstein::omega(), 1, 3, 1), 10).unwrap();
        assert_eq!(p.coeff(0), Eisenstein::from_int(1));
        assert_eq!(p.coeff(1), Eisenstein::new(0, -1));
    }

    #[test]
    fn inv_products() {
        let p = inv_product(&[(1, 1)], 6).unwrap();
        assert_eq!(ints(&p, 6), vec![1, 1, 2, 3, 5, 7, 11]);
        assert_eq!(p.order(), Some(6));
        let kr1 = inv_product(&[(1, 9), (3, 9), (6, 9), (8, 9)], 6).unwrap();
        assert_eq!(ints(&kr1, 6), vec![1, 1, 1, 2, 2, 2, 4]);
        assert_eq!(inv_product(&[], 5).unwrap(), IntSeries::one().truncate(5));
    }

    #[test]
    fn brackets() {
        let b = bracket_product(&[2, 8, 11, 20], 10).unwrap();
        assert_eq!(b.coeff(0), BigInt::from(1));
        assert_eq!(b.coeff(1), BigInt::from(0));
        let b = bracket_product(&[1, 7, 11, 20], 10).unwrap();
        assert_eq!(b.coeff(1), BigInt::from(1));
        assert!(bracket_product(&[0, 1, 2, 3], 10).is_err());
    }

    #[test]
    fn gaussian_binomials() {
        let b = gauss_binom(BinomSpec::new(4, 2));
        assert_eq!(b, IntSeries::from_i64s(0, &[1, 1, 2, 1, 1], None));
        assert_eq!(gauss_binom(BinomSpec::new(7, 0)), IntSeries::one());
        assert_eq!(gauss_binom(BinomSpec::new(-1, 0).star(true)), IntSeries::one());
        assert!(gauss_binom(BinomSpec::new(-1, 0)).is_zero());
        assert!(gauss_binom(BinomSpec::new(3, 4)).is_zero());
        let b3 = gauss_binom(BinomSpec::new(3, 1).base(3));
        assert_eq!(b3, IntSeries::from_i64s(0, &[1, 0, 0, 1, 0, 0, 1], None));
        let t = gauss_binom_to(BinomSpec::new(10, 5), 4);
        assert_eq!(ints(&t, 4), vec![1, 1, 2, 3, 5]);
        assert_eq!(t.order(), Some(4));
    }

    #[test]
    fn recurrences_and_reflection() {
        assert!(binom_recurrence_check(5, 2, 3).unwrap());
        assert!(binom_recurrence_check(1, 0, 4).unwrap());
        assert!(binom_recurrence_check(7, 7, 3).unwrap());
        assert!(reflect_binom_law(0, 0));
        assert!(reflect_binom_law(2, 1));
        assert!(reflect_binom_law(3, 2));
    }
}
