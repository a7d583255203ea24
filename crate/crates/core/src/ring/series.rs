use std::fmt;

use num_bigint::BigInt;

use super::{Eisenstein, Scalar};
use crate::error::{Error, Result};
use crate::par;

/// A truncated Laurent series Σ c_e q^e over a coefficient ring.
///
/// Coefficients are stored densely from `min_exp`. `order` is the largest
/// exponent whose coefficient is guaranteed correct; `None` marks an exact
/// Laurent polynomial (every coefficient known). Nothing above `order` is
/// ever stored, so arithmetic cannot leak unknown coefficients.
#[derive(Clone, Debug)]
pub struct Series<C: Scalar> {
    min_exp: i64,
    coeffs: Vec<C>,
    order: Option<i64>,
}

pub type IntSeries = Series<BigInt>;
pub type EisSeries = Series<Eisenstein>;

/// Result of comparing two series coefficient by coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Agreement {
    /// Largest exponent at which both sides are known (`None`: both exact).
    pub order: Option<i64>,
    /// Smallest exponent at which they differ, if any within `order`.
    pub first_mismatch: Option<i64>,
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn add_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

impl<C: Scalar> Series<C> {
    /// Builds a series, dropping anything stored above `order`.
    pub fn from_coeffs(min_exp: i64, mut coeffs: Vec<C>, order: Option<i64>) -> Self {
        if let Some(p) = order {
            let keep = (p - min_exp + 1).max(0) as usize;
            coeffs.truncate(keep);
        }
        let mut s = Series {
            min_exp,
            coeffs,
            order,
        };
        s.normalize();
        s
    }

    /// Exact polynomial with coefficients starting at q^0.
    pub fn polynomial(coeffs: Vec<C>) -> Self {
        Series::from_coeffs(0, coeffs, None)
    }

    pub fn zero_exact() -> Self {
        Series {
            min_exp: 0,
            coeffs: Vec::new(),
            order: None,
        }
    }

    /// The zero series known through `order`.
    pub fn zero(order: i64) -> Self {
        Series {
            min_exp: 0,
            coeffs: Vec::new(),
            order: Some(order),
        }
    }

    pub fn one() -> Self {
        Series::monomial(C::one(), 0)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        Series::from_coeffs(exp, vec![c], None)
    }

    /// Dense series with every slot from `min_exp` to `order` evaluated by `f`.
    pub fn from_fn(min_exp: i64, order: i64, f: impl Fn(i64) -> C + Sync + Send) -> Self {
        let len = (order - min_exp + 1).max(0) as usize;
        let coeffs = par::map_range(len, |i| f(min_exp + i as i64));
        Series::from_coeffs(min_exp, coeffs, Some(order))
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> Option<i64> {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order.is_none()
    }

    /// Raw dense storage starting at [`Self::min_exp`].
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    fn top(&self) -> i64 {
        self.min_exp + self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.coeff_ref(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_ref(&self, exp: i64) -> Option<&C> {
        if exp < self.min_exp {
            return None;
        }
        self.coeffs.get((exp - self.min_exp) as usize)
    }

    /// Exponent of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_exp + i as i64)
    }

    /// Exponent of the highest stored nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .map(|i| self.min_exp + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest exponent that could carry a nonzero coefficient (`None` = never).
    fn lowest_possible(&self) -> Option<i64> {
        match self.valuation() {
            Some(v) => Some(v),
            None => self.order.map(|p| p + 1),
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.min_exp = 0;
            return;
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Lowers the guaranteed order to `order` (never raises it).
    pub fn truncate(&self, order: i64) -> Self {
        Series::from_coeffs(
            self.min_exp,
            self.coeffs.clone(),
            min_opt(self.order, Some(order)),
        )
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        Series {
            min_exp: if self.coeffs.is_empty() {
                0
            } else {
                self.min_exp + k
            },
            coeffs: self.coeffs.clone(),
            order: self.order.map(|p| p + k),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x.mul(c)).collect();
        Series::from_coeffs(self.min_exp, coeffs, self.order)
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x.neg()).collect();
        Series::from_coeffs(self.min_exp, coeffs, self.order)
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let order = min_opt(self.order, other.order);
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return Series {
                min_exp: 0,
                coeffs: Vec::new(),
                order,
            };
        }
        let lo = match (self.coeffs.is_empty(), other.coeffs.is_empty()) {
            (true, _) => other.min_exp,
            (_, true) => self.min_exp,
            _ => self.min_exp.min(other.min_exp),
        };
        let mut hi = self.top().max(other.top());
        if let Some(p) = order {
            hi = hi.min(p);
        }
        if hi < lo {
            return Series {
                min_exp: 0,
                coeffs: Vec::new(),
                order,
            };
        }
        let mut out = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in self.terms() {
            if e <= hi {
                out[(e - lo) as usize].add_assign(c);
            }
        }
        for (e, c) in other.terms() {
            if e <= hi {
                let slot = &mut out[(e - lo) as usize];
                if negate_other {
                    slot.sub_assign(c);
                } else {
                    slot.add_assign(c);
                }
            }
        }
        Series::from_coeffs(lo, out, order)
    }

    /// Coefficient-wise sum; order is the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    /// Cauchy product restricted to the window where every contribution is known.
    pub fn mul(&self, other: &Self) -> Self {
        // An unknown coefficient of one factor at e > order meets the other
        // factor no lower than its lowest possible exponent.
        let order = min_opt(
            add_opt(self.order, other.lowest_possible()),
            add_opt(other.order, self.lowest_possible()),
        );
        let (Some(vf), Some(vg)) = (self.valuation(), other.valuation()) else {
            return Series {
                min_exp: 0,
                coeffs: Vec::new(),
                order,
            };
        };
        let mut hi = self.degree().unwrap() + other.degree().unwrap();
        if let Some(p) = order {
            hi = hi.min(p);
        }
        let lo = vf + vg;
        if hi < lo {
            return Series {
                min_exp: 0,
                coeffs: Vec::new(),
                order,
            };
        }
        let f = &self.coeffs[(vf - self.min_exp) as usize..=(self.degree().unwrap() - self.min_exp) as usize];
        let g = &other.coeffs[(vg - other.min_exp) as usize..=(other.degree().unwrap() - other.min_exp) as usize];
        let len = (hi - lo + 1) as usize;
        let mut out = vec![C::zero(); len];
        par::fill(&mut out, |t| {
            let mut acc = C::zero();
            let i_lo = t.saturating_sub(g.len() - 1);
            let i_hi = t.min(f.len() - 1);
            for i in i_lo..=i_hi {
                acc.add_product(&f[i], &g[t - i]);
            }
            acc
        });
        Series::from_coeffs(lo, out, order)
    }

    /// Pads storage with zeros up to `order` so in-place kernels can write there.
    fn pad_to_order(&mut self) {
        if let Some(p) = self.order {
            if self.coeffs.is_empty() {
                self.min_exp = self.min_exp.min(p + 1).min(0);
            }
            let want = (p - self.min_exp + 1).max(0) as usize;
            if self.coeffs.len() < want {
                self.coeffs.resize(want, C::zero());
            }
        }
    }

    /// In place: multiply by (1 − c·q^k), k ≥ 1.
    pub fn mul_one_minus(&mut self, c: &C, k: i64) {
        assert!(k >= 1, "mul_one_minus needs a positive exponent");
        if self.coeffs.is_empty() {
            return;
        }
        let k = k as usize;
        let grown = match self.order {
            None => self.coeffs.len() + k,
            Some(p) => (self.coeffs.len() + k).min((p - self.min_exp + 1).max(0) as usize),
        };
        if grown > self.coeffs.len() {
            self.coeffs.resize(grown, C::zero());
        }
        for i in (k..self.coeffs.len()).rev() {
            let t = self.coeffs[i - k].mul(c);
            self.coeffs[i].sub_assign(&t);
        }
        self.normalize();
    }

    /// In place: divide by (1 − c·q^k), k ≥ 1. The result is an infinite
    /// series, so `self` must carry a finite order.
    pub fn div_one_minus(&mut self, c: &C, k: i64) -> Result<()> {
        if k < 1 {
            return Err(Error::InvalidArgument(format!(
                "div_one_minus needs a positive exponent, got {k}"
            )));
        }
        if self.order.is_none() {
            return Err(Error::InvalidArgument(
                "division by (1 - c q^k) of an exact polynomial needs a target order".into(),
            ));
        }
        if self.coeffs.is_empty() {
            return Ok(());
        }
        self.pad_to_order();
        let k = k as usize;
        for i in k..self.coeffs.len() {
            let t = self.coeffs[i - k].mul(c);
            self.coeffs[i].add_assign(&t);
        }
        self.normalize();
        Ok(())
    }

    /// Multiplicative inverse through `self.order`; see [`Self::invert_unit_to`].
    pub fn invert_unit(&self) -> Result<Self> {
        match self.order {
            Some(p) => self.invert_unit_to(p),
            None => Err(Error::InvalidArgument(
                "inverse of an exact polynomial is infinite; use invert_unit_to".into(),
            )),
        }
    }

    /// Inverse through `min(order, self.order)` via g₀ = f₀⁻¹,
    /// gₙ = −f₀⁻¹ Σ_{k=1..n} f_k g_{n−k}.
    pub fn invert_unit_to(&self, order: i64) -> Result<Self> {
        let order = min_opt(self.order, Some(order)).unwrap();
        match self.valuation() {
            None => return Err(Error::NotInvertible("0".into())),
            Some(v) if v < 0 => return Err(Error::NonzeroMinExp(v)),
            Some(v) if v > 0 => return Err(Error::NotInvertible("0".into())),
            Some(_) => {}
        }
        let f0 = self.coeff(0);
        let inv0 = f0
            .unit_inverse()
            .ok_or_else(|| Error::NotInvertible(f0.to_string()))?;
        let neg_inv0 = inv0.neg();
        let len = (order + 1).max(0) as usize;
        let mut g: Vec<C> = Vec::with_capacity(len);
        if len > 0 {
            g.push(inv0);
        }
        let fcoef = |e: usize| self.coeff_ref(e as i64);
        for n in 1..len {
            let mut acc = C::zero();
            for k in 1..=n {
                if let Some(fk) = fcoef(k) {
                    acc.add_product(fk, &g[n - k]);
                }
            }
            g.push(acc.mul(&neg_inv0));
        }
        Ok(Series::from_coeffs(0, g, Some(order)))
    }

    /// q ↦ q⁻¹ for Laurent polynomials. Refused for truncated series.
    pub fn reflect_exponents(&self) -> Result<Self> {
        if let Some(p) = self.order {
            return Err(Error::ReflectTruncated(p));
        }
        if self.coeffs.is_empty() {
            return Ok(Series::zero_exact());
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Series::from_coeffs(-self.top(), coeffs, None))
    }

    /// Applies ring conjugation (ω ↦ ω²) to every coefficient.
    pub fn conjugate(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.conj()).collect();
        Series::from_coeffs(self.min_exp, coeffs, self.order)
    }

    /// q ↦ q^k, k ≥ 1; the order scales to k·order.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1, "substitute_power needs k >= 1");
        if k == 1 || self.coeffs.is_empty() {
            return Series {
                min_exp: self.min_exp * k,
                coeffs: self.coeffs.clone(),
                order: self.order.map(|p| p * k),
            };
        }
        let ku = k as usize;
        let mut out = vec![C::zero(); (self.coeffs.len() - 1) * ku + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * ku] = c.clone();
        }
        Series::from_coeffs(self.min_exp * k, out, self.order.map(|p| p * k))
    }

    /// Compares coefficient by coefficient through the common order.
    pub fn agreement(&self, other: &Self) -> Agreement {
        let order = min_opt(self.order, other.order);
        let lo = match (self.valuation(), other.valuation()) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => {
                return Agreement {
                    order,
                    first_mismatch: None,
                }
            }
        };
        let mut hi = self.top().max(other.top());
        if let Some(p) = order {
            hi = hi.min(p);
        }
        let first_mismatch = (lo..=hi).find(|&e| {
            let a = self.coeff_ref(e);
            let b = other.coeff_ref(e);
            match (a, b) {
                (Some(x), Some(y)) => x != y,
                (Some(x), None) | (None, Some(x)) => !x.is_zero(),
                (None, None) => false,
            }
        });
        Agreement {
            order,
            first_mismatch,
        }
    }

    /// Writes the series as `c0 + c1 q + ... + O(q^{P+1})`.
    fn write_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let s = c.to_string();
            let needs_parens = s.contains('ω') && (s.contains('+') || s[1..].contains('-'));
            let body = if needs_parens { format!("({s})") } else { s };
            let (sign, body) = match body.strip_prefix('-') {
                Some(rest) if !needs_parens => ("-", rest.to_string()),
                _ => ("+", body),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let body = if e != 0 && body == "1" { String::new() } else { body };
            match e {
                0 => write!(f, "{}", if body.is_empty() { "1" } else { &body })?,
                1 => write!(f, "{body}q")?,
                _ => write!(f, "{body}q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        if let Some(p) = self.order {
            write!(f, " + O(q^{})", p + 1)?;
        }
        Ok(())
    }
}

impl<C: Scalar> PartialEq for Series<C> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.agreement(other).agrees()
    }
}

impl<C: Scalar> Eq for Series<C> {}

impl<C: Scalar> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

impl IntSeries {
    pub fn from_i64s(min_exp: i64, coeffs: &[i64], order: Option<i64>) -> Self {
        Series::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    /// Embeds ℤ-coefficients into ℤ[ω].
    pub fn promote(&self) -> EisSeries {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Eisenstein::from_int(c.clone()))
            .collect();
        Series::from_coeffs(self.min_exp, coeffs, self.order)
    }
}

impl EisSeries {
    /// Returns the ℤ-valued series if every coefficient is rational.
    pub fn to_integer(&self) -> Option<IntSeries> {
        if !self.coeffs.iter().all(Eisenstein::is_real) {
            return None;
        }
        let coeffs = self.coeffs.iter().map(|c| c.re.clone()).collect();
        Some(Series::from_coeffs(self.min_exp, coeffs, self.order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_one_minus_grows_truncated_storage() {
        let mut s = IntSeries::one().truncate(5);
        s.mul_one_minus(&BigInt::from(1), 2);
        assert_eq!(s, IntSeries::from_i64s(0, &[1, 0, -1], Some(5)));
        let mut t = IntSeries::one().truncate(1);
        t.mul_one_minus(&BigInt::from(1), 3);
        assert_eq!(t, IntSeries::one().truncate(1));
    }

    #[test]
    fn display_and_agreement() {
        let s = IntSeries::from_i64s(0, &[1, 2, 0, -1], Some(5));
        assert_eq!(s.to_string(), "1 + 2q - q^3 + O(q^6)");
        let t = IntSeries::from_i64s(0, &[1, 2, 1], Some(5));
        assert_eq!(s.agreement(&t).first_mismatch, Some(2));
    }
}
