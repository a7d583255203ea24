//! Finite versions S(a,b;q,N), their q ↦ q⁻¹ reflections and the limit
//! families F, G, F*, G* together with the RK₁/RK₄ limits.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::par;
use crate::qkit::{bracket_product, gauss_binom, gauss_binom_to, inv_product, BinomSpec};
use crate::ring::IntSeries;
use crate::sums::SumSpec;

/// The ten pairs (a,b) with a known finite version.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    V0m1,
    V00,
    V11,
    V12,
    V23,
    V24,
    V35,
    V36,
    V13,
    V02,
}

impl Variant {
    pub const ALL: [Variant; 10] = [
        Variant::V0m1,
        Variant::V00,
        Variant::V11,
        Variant::V12,
        Variant::V23,
        Variant::V24,
        Variant::V35,
        Variant::V36,
        Variant::V13,
        Variant::V02,
    ];

    pub fn ab(self) -> (i64, i64) {
        match self {
            Variant::V0m1 => (0, -1),
            Variant::V00 => (0, 0),
            Variant::V11 => (1, 1),
            Variant::V12 => (1, 2),
            Variant::V23 => (2, 3),
            Variant::V24 => (2, 4),
            Variant::V35 => (3, 5),
            Variant::V36 => (3, 6),
            Variant::V13 => (1, 3),
            Variant::V02 => (0, 2),
        }
    }

    pub fn from_ab(a: i64, b: i64) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.ab() == (a, b))
            .ok_or(Error::UnsupportedFinite { a, b })
    }

    pub fn sum_spec(self) -> SumSpec {
        let (a, b) = self.ab();
        SumSpec::new(a, b)
    }

    /// c in the q-binomial top N + c − 3n − m.
    fn top_offset(self) -> i64 {
        match self {
            Variant::V0m1 | Variant::V00 | Variant::V02 => 1,
            Variant::V11 | Variant::V12 | Variant::V13 => 0,
            Variant::V23 | Variant::V24 => -1,
            Variant::V35 | Variant::V36 => -2,
        }
    }

    /// The q³-binomial top before subtracting m + n.
    fn top3(self, n: i64) -> i64 {
        let fl = |k: i64| (2 * k).div_euclid(3);
        match self {
            Variant::V0m1 => fl(n + 2),
            Variant::V00 => fl(n) + 1,
            Variant::V11 => fl(n + 1),
            Variant::V12 | Variant::V02 => fl(n - 1) + 1,
            Variant::V23 | Variant::V13 => fl(n),
            Variant::V24 => fl(n - 1) + delta3(n - 2),
            Variant::V35 => fl(n - 1),
            Variant::V36 => fl(n) - 1,
        }
    }

    /// Whether the [−1,0] = 1 convention may be switched on.
    ///
    /// The printed finite versions use it only for (2,3). The three variants
    /// whose pairs are equal parts hit the same degenerate binomial and
    /// accept it as well.
    pub fn star_allowed(self) -> bool {
        matches!(self, Variant::V23 | Variant::V0m1 | Variant::V11 | Variant::V35)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.ab();
        write!(f, "({a},{b})")
    }
}

impl FromStr for Variant {
    type Err = Error;

    /// Accepts `0,-1`, `(0,-1)` and `S(0,-1)`.
    fn from_str(s: &str) -> Result<Variant> {
        let t = s.trim();
        let t = t.strip_prefix('S').unwrap_or(t);
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let mut it = t.split(',').map(|x| x.trim().parse::<i64>());
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => {
                Variant::from_ab(a, b).map_err(|_| Error::UnknownVariant(s.to_string()))
            }
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

/// Kronecker δ_{3 | k}.
fn delta3(k: i64) -> i64 {
    i64::from(k.rem_euclid(3) == 0)
}

/// A finite version S(a,b;q,N) together with its binomial convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteSpec {
    pub variant: Variant,
    pub n: i64,
    pub star: bool,
}

impl FiniteSpec {
    /// The printed convention: star only for (2,3).
    pub fn new(variant: Variant, n: i64) -> Self {
        FiniteSpec {
            variant,
            n,
            star: variant == Variant::V23,
        }
    }

    /// Star wherever it is allowed; this is the convention under which the
    /// finite versions count partitions with largest part at most N.
    pub fn combinatorial(variant: Variant, n: i64) -> Self {
        FiniteSpec {
            variant,
            n,
            star: variant.star_allowed(),
        }
    }

    pub fn with_star(self, star: bool) -> Result<Self> {
        if star && !self.variant.star_allowed() {
            let (a, b) = self.variant.ab();
            return Err(Error::StarNotAllowed { a, b });
        }
        Ok(FiniteSpec { star, ..self })
    }
}

/// One nonzero summand q^exp (1+q)^{plus_q} [b1]_q [b2]_{q³}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summand {
    pub m: i64,
    pub n: i64,
    pub exp: i64,
    pub plus_q: bool,
    pub b1: BinomSpec,
    pub b2: BinomSpec,
}

impl Summand {
    /// Degree of the summand's polynomial part (excluding q^exp).
    pub fn degree(&self) -> i64 {
        self.b1.degree() + self.b2.degree() + i64::from(self.plus_q)
    }

    fn value(&self, order: Option<i64>) -> IntSeries {
        let (b1, b2) = match order {
            None => (gauss_binom(self.b1), gauss_binom(self.b2)),
            Some(p) => {
                let rest = p - self.exp;
                (gauss_binom_to(self.b1, rest), gauss_binom_to(self.b2, rest))
            }
        };
        let mut v = b1.mul(&b2);
        if self.plus_q {
            v = v.mul(&IntSeries::from_i64s(0, &[1, 1], None));
        }
        let v = v.shift(self.exp);
        match order {
            Some(p) => v.truncate(p),
            None => v,
        }
    }

    /// The summand after q ↦ q⁻¹ and multiplication by q^norm, given as
    /// (shift, polynomial part): each Gaussian polynomial G of degree d
    /// becomes q^{−d}G and (1+q) becomes q^{−1}(1+q).
    fn reflected_shift(&self, norm: i64) -> i64 {
        norm - self.exp - self.degree()
    }
}

fn push_if_nonzero(out: &mut Vec<Summand>, s: Summand) {
    if !s.b1.is_zero() && !s.b2.is_zero() {
        out.push(s);
    }
}

/// Nonzero summands of S(a,b;q,N).
pub fn summands(spec: FiniteSpec) -> Result<Vec<Summand>> {
    let nn = spec.n;
    if nn < 0 {
        return Err(Error::InvalidArgument(format!("N must be non-negative, got {nn}")));
    }
    if spec.star && !spec.variant.star_allowed() {
        let (a, b) = spec.variant.ab();
        return Err(Error::StarNotAllowed { a, b });
    }
    let v = spec.variant;
    let sum = v.sum_spec();
    let c = v.top_offset();
    let t3 = v.top3(nn);
    let mut out = Vec::new();
    for n in 0..=(nn + 3) / 3 + 1 {
        for m in 0..=nn + 2 {
            let b1 = BinomSpec::new(nn + c - 3 * n - m, m).star(spec.star);
            let b2 = BinomSpec::new(t3 - m - n, n).base(3);
            push_if_nonzero(
                &mut out,
                Summand {
                    m,
                    n,
                    exp: sum.exponent(m, n),
                    plus_q: false,
                    b1,
                    b2,
                },
            );
        }
    }
    Ok(out)
}

/// Nonzero summands of the two-part finite version of KR₅.
pub fn kr5_summands(nn: i64) -> Result<Vec<Summand>> {
    if nn < 0 {
        return Err(Error::InvalidArgument(format!("N must be non-negative, got {nn}")));
    }
    let t3 = (2 * (nn - 2)).div_euclid(3);
    let quad = |m: i64, n: i64| m * m + 3 * m * n + 3 * n * n;
    let mut out = Vec::new();
    for n in 0..=(nn + 3) / 3 + 1 {
        for m in 0..=nn + 2 {
            push_if_nonzero(
                &mut out,
                Summand {
                    m,
                    n,
                    exp: quad(m, n) + 2 * m + 4 * n,
                    plus_q: true,
                    b1: BinomSpec::new(nn - m - 3 * n - 1, m),
                    b2: BinomSpec::new(t3 - m - n + 1, n).base(3),
                },
            );
            push_if_nonzero(
                &mut out,
                Summand {
                    m,
                    n,
                    exp: quad(m, n) + 3 * m + 7 * n + 2,
                    plus_q: false,
                    b1: BinomSpec::new(nn - m - 3 * n - 2, m),
                    b2: BinomSpec::new(t3 - m - n + delta3(nn - 2), n).base(3),
                },
            );
        }
    }
    Ok(out)
}

fn sum_summands(terms: &[Summand], order: Option<i64>) -> IntSeries {
    let parts = par::map_slice(terms, |s| s.value(order));
    let zero = match order {
        Some(p) => IntSeries::zero(p),
        None => IntSeries::zero_exact(),
    };
    parts.iter().fold(zero, |acc, p| acc.add(p))
}

/// The exact polynomial S(a,b;q,N).
pub fn s_finite(spec: FiniteSpec) -> Result<IntSeries> {
    Ok(sum_summands(&summands(spec)?, None))
}

/// Exact polynomial KR₅(q;N).
pub fn kr5_finite(nn: i64) -> Result<IntSeries> {
    Ok(sum_summands(&kr5_summands(nn)?, None))
}

/// Which finite version a reflection starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteTarget {
    S(Variant),
    Kr5,
}

impl FiniteTarget {
    pub fn summands(self, nn: i64) -> Result<Vec<Summand>> {
        match self {
            FiniteTarget::S(v) => summands(FiniteSpec::new(v, nn)),
            FiniteTarget::Kr5 => kr5_summands(nn),
        }
    }
}

/// Normalizing exponent c₂M² + c₁M + c₀.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalizationRule {
    pub c2: i64,
    pub c1: i64,
    pub c0: i64,
}

impl NormalizationRule {
    pub const fn new(c2: i64, c1: i64, c0: i64) -> Self {
        NormalizationRule { c2, c1, c0 }
    }

    pub fn eval(&self, m: i64) -> i64 {
        self.c2 * m * m + self.c1 * m + self.c0
    }

    /// The same rule shifted by a constant; used for negative controls.
    pub fn offset(self, k: i64) -> Self {
        NormalizationRule {
            c0: self.c0 + k,
            ..self
        }
    }
}

/// q^{rule(M)} · X(q⁻¹; 3M+r) for the finite version X, summand by summand.
///
/// With `order = Some(P)` only summands reaching exponents ≤ P are
/// expanded and the result is known through P; with `None` the full
/// polynomial is returned.
pub fn reflect_finite(
    target: FiniteTarget,
    m: i64,
    r: i64,
    rule: NormalizationRule,
    order: Option<i64>,
) -> Result<IntSeries> {
    if !(0..=2).contains(&r) || m < 0 {
        return Err(Error::InvalidArgument(format!(
            "reflection needs M >= 0 and r in 0..=2, got M={m}, r={r}"
        )));
    }
    let norm = rule.eval(m);
    let terms = target.summands(3 * m + r)?;
    let mut shifted = Vec::with_capacity(terms.len());
    for s in &terms {
        let e = s.reflected_shift(norm);
        if e < 0 {
            return Err(Error::NegativeExponent {
                exponent: e,
                m: s.m,
                n: s.n,
            });
        }
        if order.is_none_or(|p| e <= p) {
            // The reflected summand is q^e times the same polynomial part.
            shifted.push(Summand { exp: e, ..*s });
        }
    }
    Ok(sum_summands(&shifted, order))
}

/// The reflected families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// From S(1,1).
    F,
    /// From S(2,4).
    G,
    /// From S(0,−1).
    FStar,
    /// From S(0,2).
    GStar,
    /// From KR₄ = S(1,2).
    Rk4,
    /// From KR₁ = S(0,0).
    Rk1,
}

impl Family {
    pub fn variant(self) -> Variant {
        match self {
            Family::F => Variant::V11,
            Family::G => Variant::V24,
            Family::FStar => Variant::V0m1,
            Family::GStar => Variant::V02,
            Family::Rk4 => Variant::V12,
            Family::Rk1 => Variant::V00,
        }
    }

    pub fn rule(self, r: u8) -> NormalizationRule {
        use NormalizationRule as R;
        match (self, r) {
            (Family::F | Family::G, 0) => R::new(3, 1, 0),
            (Family::F | Family::G, 1) => R::new(3, 4, 1),
            (Family::F | Family::G, _) => R::new(3, 7, 2),
            (Family::FStar | Family::GStar, 0) => R::new(3, 2, 0),
            (Family::FStar | Family::GStar, _) => R::new(3, 5, 2),
            (Family::Rk4, 0) => R::new(3, 2, 0),
            (Family::Rk4, 1) => R::new(3, 5, 0),
            (Family::Rk4, _) => R::new(3, 5, 2),
            (Family::Rk1, 0) => R::new(3, 3, 0),
            (Family::Rk1, 1) => R::new(3, 3, 1),
            (Family::Rk1, _) => R::new(3, 6, 3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::G => "G",
            Family::FStar => "Fstar",
            Family::GStar => "Gstar",
            Family::Rk4 => "RK4",
            Family::Rk1 => "RK1",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s.trim() {
            "F" => Family::F,
            "G" => Family::G,
            "Fstar" | "F*" => Family::FStar,
            "Gstar" | "G*" => Family::GStar,
            "RK4" | "rk4" => Family::Rk4,
            "RK1" | "rk1" => Family::Rk1,
            other => return Err(Error::UnknownVariant(other.to_string())),
        })
    }
}

/// A family member X_r, r ∈ {0,1,2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LimitFamily {
    pub family: Family,
    pub residue: u8,
}

impl LimitFamily {
    pub fn new(family: Family, residue: u8) -> Result<Self> {
        if residue > 2 {
            return Err(Error::InvalidArgument(format!(
                "residue must be 0, 1 or 2, got {residue}"
            )));
        }
        Ok(LimitFamily { family, residue })
    }

    /// F₀..G*₂, the twelve limits of the four Hickerson-type sums.
    pub fn twelve() -> Vec<LimitFamily> {
        [Family::F, Family::G, Family::FStar, Family::GStar]
            .into_iter()
            .flat_map(|family| (0..3).map(move |residue| LimitFamily { family, residue }))
            .collect()
    }

    pub fn rule(&self) -> NormalizationRule {
        self.family.rule(self.residue)
    }

    pub fn target(&self) -> FiniteTarget {
        FiniteTarget::S(self.family.variant())
    }

    /// Reflected, normalized finite version at N = 3M + r.
    pub fn reflect(&self, m: i64, order: Option<i64>) -> Result<IntSeries> {
        reflect_finite(self.target(), m, self.residue as i64, self.rule(), order)
    }
}

impl fmt::Display for LimitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::FStar => write!(f, "F{}*", self.residue),
            Family::GStar => write!(f, "G{}*", self.residue),
            fam => write!(f, "{}{}", fam.name(), self.residue),
        }
    }
}

/// How to read the RK₁(3∞) display, whose binomial top is printed as 3b−1−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Rk1Reading {
    /// [3b−a−1, a], the pattern of every other limit.
    #[default]
    Corrected,
    /// [3b−2, a], the display taken literally.
    Literal,
}

impl Rk1Reading {
    pub fn name(self) -> &'static str {
        match self {
            Rk1Reading::Corrected => "corrected",
            Rk1Reading::Literal => "literal",
        }
    }
}

/// Σ_{a,b≥0} q^{a²−3ab+3b²+la·a+lb·b+c0} [3b + ta·a + t0, a]_q / (q³;q³)_b.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LimitShape {
    pub la: i64,
    pub lb: i64,
    pub c0: i64,
    /// Coefficient of a in the binomial top: −1 normally, 0 for the literal RK₁ reading.
    pub ta: i64,
    pub t0: i64,
}

impl LimitShape {
    fn exponent(&self, a: i64, b: i64) -> i64 {
        a * a - 3 * a * b + 3 * b * b + self.la * a + self.lb * b + self.c0
    }

    fn top(&self, a: i64, b: i64) -> i64 {
        3 * b + self.ta * a + self.t0
    }
}

/// The double-sum shape of a limit, or `None` for RK₄ (known only as a product).
pub fn limit_shape(fam: LimitFamily, reading: Rk1Reading) -> Option<LimitShape> {
    let r = fam.residue as usize;
    let s = |la, lb, c0: [i64; 3], t0: [i64; 3]| {
        Some(LimitShape {
            la,
            lb,
            c0: c0[r],
            ta: -1,
            t0: t0[r],
        })
    };
    match fam.family {
        Family::F => s(1, -1, [0, 0, -2], [0, -1, -2]),
        Family::G => s(0, 2, [1, 1, -1], [1, 0, -1]),
        Family::FStar => s(1, -2, [0, 0, 0], [-1, -2, 0]),
        Family::GStar => s(-2, 4, [1, 1, 1], [2, 1, 3]),
        Family::Rk4 => None,
        Family::Rk1 => match (r, reading) {
            (0, Rk1Reading::Literal) => Some(LimitShape {
                la: 0,
                lb: 0,
                c0: -1,
                ta: 0,
                t0: -2,
            }),
            _ => s(0, 0, [-1, 0, 0], [-1, 1, 0]),
        },
    }
}

/// Evaluates a [`LimitShape`] through `order`.
pub fn limit_sum(shape: LimitShape, order: i64) -> IntSeries {
    // Rows b with their admissible a; the exponent is a positive-definite
    // quadratic, so once a row's minimum exceeds the order and is
    // increasing, later rows contribute nothing.
    let mut rows: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut prev = i64::MIN;
    for b in 0.. {
        let amax_bin = if shape.ta == 0 {
            shape.top(0, b)
        } else {
            (3 * b + shape.t0).div_euclid(2)
        };
        let feasible: Vec<i64> = (0..=amax_bin.max(-1)).collect();
        let lo = feasible.iter().map(|&a| shape.exponent(a, b)).min();
        match lo {
            None => {
                if b > 2 {
                    break;
                }
                continue;
            }
            Some(lo) => {
                if lo > order && lo >= prev {
                    break;
                }
                prev = lo;
                let ms: Vec<i64> = feasible
                    .into_iter()
                    .filter(|&a| shape.exponent(a, b) <= order && shape.top(a, b) >= a)
                    .collect();
                if !ms.is_empty() {
                    rows.push((b, ms));
                }
            }
        }
    }
    let one = BigInt::from(1);
    let parts = par::map_slice(&rows, |(b, as_)| {
        let mut row = IntSeries::zero(order);
        for &a in as_ {
            let e = shape.exponent(a, *b);
            let bin = gauss_binom_to(BinomSpec::new(shape.top(a, *b), a), order - e);
            row = row.add(&bin.shift(e));
        }
        for j in 1..=*b {
            row.div_one_minus(&one, 3 * j).expect("truncated");
        }
        row
    });
    parts.iter().fold(IntSeries::zero(order), |acc, p| acc.add(p))
}

/// The limit of a family member through `order`.
pub fn limit_series(fam: LimitFamily, reading: Rk1Reading, order: i64) -> Result<IntSeries> {
    match limit_shape(fam, reading) {
        Some(shape) => Ok(limit_sum(shape, order)),
        None => Err(Error::InvalidArgument(format!(
            "{fam} has no double-sum limit; use warnaar_product"
        ))),
    }
}

/// Warnaar's conjectured products for the RK₄ limits.
pub fn warnaar_product(r: u8, order: i64) -> Result<IntSeries> {
    let with = |c: [i64; 7]| {
        let mut pairs = vec![(2, 3)];
        pairs.extend(c.iter().map(|&x| (x, 45)));
        inv_product(&pairs, order)
    };
    match r {
        0 => with([3, 9, 12, 21, 30, 36, 39]),
        1 => with([3, 12, 18, 21, 27, 30, 39]),
        2 => Ok(warnaar_product(0, order)?.add(&warnaar_product(1, order - 2)?.shift(2))),
        _ => Err(Error::InvalidArgument(format!("residue must be 0..=2, got {r}"))),
    }
}

/// Σ sign·q^shift·⟨c⟩ over a list of bracket terms.
pub fn bracket_combination(terms: &[(i64, i64, [i64; 4])], order: i64) -> Result<IntSeries> {
    let mut acc = IntSeries::zero(order);
    for &(sign, shift, c) in terms {
        let b = bracket_product(&c, order - shift)?.shift(shift);
        acc = if sign >= 0 { acc.add(&b) } else { acc.sub(&b) };
    }
    Ok(acc)
}

/// The two printed bracket forms of RK₁(3∞) (r = 0) and RK₁(3∞+2) (r = 2).
pub fn rk1_bracket_terms(r: u8, alt: bool) -> Result<Vec<(i64, i64, [i64; 4])>> {
    Ok(match (r, alt) {
        (0, false) => vec![
            (1, 0, [2, 8, 11, 20]),
            (1, 3, [2, 14, 20, 22]),
            (-1, 8, [17, 19, 20, 22]),
        ],
        (0, true) => vec![
            (1, 0, [1, 8, 13, 20]),
            (-1, 1, [4, 7, 13, 20]),
            (1, 5, [7, 16, 17, 20]),
        ],
        (2, false) => vec![
            (1, 0, [1, 7, 11, 20]),
            (1, 6, [11, 13, 14, 20]),
            (-1, 6, [8, 14, 19, 20]),
        ],
        (2, true) => vec![
            (1, 0, [1, 4, 17, 20]),
            (-1, 4, [2, 16, 19, 20]),
            (-1, 5, [4, 16, 20, 22]),
        ],
        _ => {
            return Err(Error::InvalidArgument(format!(
                "bracket forms exist for r = 0 and r = 2, got {r}"
            )))
        }
    })
}

/// What the reflected finite versions of `fam` are compared against.
pub fn reference_series(fam: LimitFamily, reading: Rk1Reading, order: i64) -> Result<IntSeries> {
    match fam.family {
        Family::Rk4 => warnaar_product(fam.residue, order),
        _ => limit_series(fam, reading, order),
    }
}

/// Length of the common prefix of two series from exponent 0, capped at `order + 1`.
pub fn common_prefix(x: &IntSeries, y: &IntSeries, order: i64) -> i64 {
    let x = x.truncate(order);
    let y = y.truncate(order);
    match x.agreement(&y).first_mismatch {
        Some(e) => e.max(0),
        None => order + 1,
    }
}

/// Common prefix of the reflection at M with the family's reference series,
/// examined through `order`.
pub fn stabilization_order(fam: LimitFamily, m: i64, order: i64) -> Result<i64> {
    stabilization_order_with(fam, fam.rule(), m, order)
}

/// As [`stabilization_order`] with an explicit normalization rule.
pub fn stabilization_order_with(
    fam: LimitFamily,
    rule: NormalizationRule,
    m: i64,
    order: i64,
) -> Result<i64> {
    let x = reflect_finite(fam.target(), m, fam.residue as i64, rule, Some(order))?;
    let y = reference_series(fam, Rk1Reading::Corrected, order)?;
    Ok(common_prefix(&x, &y, order))
}

/// Common prefix of the reflections at M and M + 1, independent of any
/// conjectured limit.
pub fn measured_stabilization(fam: LimitFamily, m: i64, order: i64) -> Result<i64> {
    let x = fam.reflect(m, Some(order))?;
    let y = fam.reflect(m + 1, Some(order))?;
    Ok(common_prefix(&x, &y, order))
}
