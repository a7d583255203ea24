//! The double sums S(a,b;q), their contiguous relations and the reduction
//! of any S(a,b) to the 3×3 box 0 ≤ a,b ≤ 2.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::par;
use crate::qkit::inv_product;
use crate::report::VerificationReport;
use crate::ring::{DynSeries, EisSeries, Eisenstein, IntSeries};

/// Parameters (a,b) of S(a,b;q) = Σ q^{m²+3mn+3n²+am+bn} / ((q;q)_m (q³;q³)_n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SumSpec {
    pub a: i64,
    pub b: i64,
}

impl SumSpec {
    pub const fn new(a: i64, b: i64) -> Self {
        SumSpec { a, b }
    }

    /// Exponent of the (m,n) summand's leading term.
    pub fn exponent(&self, m: i64, n: i64) -> i64 {
        m * m + 3 * m * n + 3 * n * n + self.a * m + self.b * n
    }

    /// Smallest summand exponent over m ≥ 0 for fixed n.
    fn row_min(&self, n: i64) -> (i64, i64) {
        // vertex of m² + (3n+a)m, clipped to m ≥ 0
        let lin = 3 * n + self.a;
        let v = (-lin).div_euclid(2).max(0);
        [v, v + 1]
            .into_iter()
            .map(|m| (self.exponent(m, n), m))
            .min()
            .unwrap()
    }

    /// Every (m,n) whose summand starts at or below `order`, grouped by n.
    ///
    /// Rows and columns are convex in the summation indices, so scanning
    /// stops as soon as the minimum passes `order` on the increasing side.
    pub fn support(&self, order: i64) -> Vec<(i64, Vec<i64>)> {
        let mut rows = Vec::new();
        let mut prev = i64::MIN;
        for n in 0.. {
            let (lo, vm) = self.row_min(n);
            if lo > order && lo >= prev {
                break;
            }
            prev = lo;
            if lo > order {
                continue;
            }
            let mut ms = Vec::new();
            let mut m = vm;
            while m >= 0 && self.exponent(m, n) <= order {
                m -= 1;
            }
            m += 1;
            while self.exponent(m, n) <= order || m <= vm {
                if self.exponent(m, n) <= order {
                    ms.push(m);
                }
                m += 1;
            }
            rows.push((n, ms));
        }
        rows
    }

    /// Lowest summand exponent (the valuation of S(a,b)).
    pub fn min_exponent(&self) -> i64 {
        let mut best = 0;
        let mut prev = i64::MIN;
        for n in 0.. {
            let (lo, _) = self.row_min(n);
            best = best.min(lo);
            if lo >= prev && lo > 0 {
                break;
            }
            prev = lo;
        }
        best
    }
}

impl std::fmt::Display for SumSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S({},{})", self.a, self.b)
    }
}

/// 1/(q^base;q^base)_k for k = 0..=kmax, each through `order`.
fn inverse_pochhammers(base: i64, kmax: i64, order: i64) -> Vec<IntSeries> {
    let one = BigInt::from(1);
    let mut out = Vec::with_capacity(kmax as usize + 1);
    let mut cur = IntSeries::one().truncate(order);
    out.push(cur.clone());
    for k in 1..=kmax {
        cur.div_one_minus(&one, base * k).expect("truncated");
        out.push(cur.clone());
    }
    out
}

/// S(a,b;q) through `order`.
pub fn s_series(spec: SumSpec, order: i64) -> IntSeries {
    let rows = spec.support(order);
    if rows.is_empty() {
        return IntSeries::zero(order);
    }
    let vmin = spec.min_exponent().min(0);
    let mmax = rows.iter().flat_map(|(_, ms)| ms.iter().copied()).max().unwrap_or(0);
    let qq = inverse_pochhammers(1, mmax, order - vmin);
    let one = BigInt::from(1);
    let parts = par::map_slice(&rows, |(n, ms)| {
        let mut row = IntSeries::zero(order);
        for &m in ms {
            let e = spec.exponent(m, *n);
            row = row.add(&qq[m as usize].truncate(order - e).shift(e));
        }
        for j in 1..=*n {
            row.div_one_minus(&one, 3 * j).expect("truncated");
        }
        row
    });
    parts
        .iter()
        .fold(IntSeries::zero(order), |acc, p| acc.add(p))
}

/// Memo of S(a,b;q) at a fixed order; shared across threads.
#[derive(Debug)]
pub struct SumTable {
    order: i64,
    map: RwLock<HashMap<SumSpec, Arc<IntSeries>>>,
}

impl SumTable {
    pub fn new(order: i64) -> Self {
        SumTable {
            order,
            map: RwLock::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn get(&self, spec: SumSpec) -> Arc<IntSeries> {
        if let Some(s) = self.map.read().unwrap().get(&spec) {
            return s.clone();
        }
        let s = Arc::new(s_series(spec, self.order));
        self.map.write().unwrap().entry(spec).or_insert(s).clone()
    }

    /// Computes many entries at once, in parallel.
    pub fn prefetch(&self, specs: &[SumSpec]) {
        let missing: Vec<SumSpec> = {
            let map = self.map.read().unwrap();
            specs.iter().copied().filter(|s| !map.contains_key(s)).collect()
        };
        let values = par::map_slice(&missing, |&s| Arc::new(s_series(s, self.order)));
        let mut map = self.map.write().unwrap();
        for (s, v) in missing.into_iter().zip(values) {
            map.entry(s).or_insert(v);
        }
    }
}

/// Residue data of the Kanade–Russell products 1/(q^{c₁},…,q^{c₄};q⁹)_∞.
pub const KR_RESIDUES: [[i64; 4]; 5] = [
    [1, 3, 6, 8],
    [2, 3, 6, 7],
    [3, 4, 5, 6],
    [2, 3, 5, 8],
    [1, 4, 6, 7],
];

/// Sum side of KRᵢ written through S(a,b).
pub fn kr_combo(i: usize, order: i64) -> Result<IntSeries> {
    let s = |a, b, p| s_series(SumSpec::new(a, b), p);
    Ok(match i {
        1 => s(0, 0, order),
        2 => s(1, 3, order),
        3 => s(2, 3, order),
        4 => s(1, 2, order),
        5 => {
            let one_plus_q = IntSeries::from_i64s(0, &[1, 1], None);
            one_plus_q
                .mul(&s(2, 4, order))
                .add(&s(3, 7, order - 2).shift(2))
        }
        _ => {
            return Err(Error::InvalidArgument(format!(
                "KR index must be 1..=5, got {i}"
            )))
        }
    })
}

/// q·S(2,4) + S(1,4), the simplified form of KR₅.
pub fn kr5_simplified(order: i64) -> IntSeries {
    s_series(SumSpec::new(2, 4), order - 1)
        .shift(1)
        .add(&s_series(SumSpec::new(1, 4), order))
}

/// Product side of KRᵢ.
pub fn kr_product(i: usize, order: i64) -> Result<IntSeries> {
    let res = KR_RESIDUES.get(i.wrapping_sub(1)).ok_or_else(|| {
        Error::InvalidArgument(format!("KR index must be 1..=5, got {i}"))
    })?;
    let pairs: Vec<(i64, i64)> = res.iter().map(|&c| (c, 9)).collect();
    inv_product(&pairs, order)
}

/// Hickerson's combinations S(1,1) − ωqS(2,4) (which = 1) and
/// S(0,−1) + ω²S(0,2) (which = 2), optionally conjugated.
pub fn hickerson_combo(which: u8, conjugated: bool, order: i64) -> Result<EisSeries> {
    let s = |a, b, p| s_series(SumSpec::new(a, b), p).promote();
    let combo = match which {
        1 => s(1, 1, order).sub(&s(2, 4, order - 1).shift(1).scale(&Eisenstein::omega())),
        2 => s(0, -1, order).add(&s(0, 2, order).scale(&Eisenstein::omega_sq())),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "Hickerson index must be 1 or 2, got {which}"
            )))
        }
    };
    Ok(if conjugated { combo.conjugate() } else { combo })
}

/// Which contiguous relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// S(a,b) = q^{1−a}(S(a−2,b−3) − S(a−1,b−3))
    A,
    /// S(a,b) = q^{3−b}(S(a−3,b−6) − S(a−3,b−3))
    B,
}

impl Relation {
    /// The three points of the relation anchored at (a,b), and the exponent
    /// e with S(p0) = q^e (S(p1) − S(p2)).
    pub fn triple(self, a: i64, b: i64) -> ([SumSpec; 3], i64) {
        match self {
            Relation::A => (
                [SumSpec::new(a, b), SumSpec::new(a - 2, b - 3), SumSpec::new(a - 1, b - 3)],
                1 - a,
            ),
            Relation::B => (
                [SumSpec::new(a, b), SumSpec::new(a - 3, b - 6), SumSpec::new(a - 3, b - 3)],
                3 - b,
            ),
        }
    }
}

/// Checks a contiguous relation numerically through `order`, reading
/// S values from `table` (whose order must be at least `order + |e|`).
pub fn relation_check_with(
    table: &SumTable,
    rel: Relation,
    a: i64,
    b: i64,
    order: i64,
) -> Result<VerificationReport> {
    let ([p0, p1, p2], e) = rel.triple(a, b);
    let lhs = table.get(p0).truncate(order);
    let rhs = table.get(p1).sub(&table.get(p2)).shift(e).truncate(order);
    let id = format!("relation_{}({a},{b})", if rel == Relation::A { "A" } else { "B" });
    VerificationReport::compare(id, &DynSeries::Int(lhs), &DynSeries::Int(rhs), order)
}

/// S(a,b) = q^{1−a}(S(a−2,b−3) − S(a−1,b−3)) through `order`.
pub fn relation_a_check(a: i64, b: i64, order: i64) -> Result<VerificationReport> {
    let table = SumTable::new(order + (1 - a).abs());
    relation_check_with(&table, Relation::A, a, b, order)
}

/// S(a,b) = q^{3−b}(S(a−3,b−6) − S(a−3,b−3)) through `order`.
pub fn relation_b_check(a: i64, b: i64, order: i64) -> Result<VerificationReport> {
    let table = SumTable::new(order + (3 - b).abs());
    relation_check_with(&table, Relation::B, a, b, order)
}

/// One application of (A) at (a,b): S(a,b) as a combination of its two partners.
pub fn relation_a_rewrite(a: i64, b: i64) -> Vec<(SumSpec, IntSeries)> {
    let ([_, p1, p2], e) = Relation::A.triple(a, b);
    vec![
        (p1, IntSeries::monomial(BigInt::from(1), e)),
        (p2, IntSeries::monomial(BigInt::from(-1), e)),
    ]
}

/// The nine box elements S(a,b), 0 ≤ a,b ≤ 2.
pub fn basis() -> Vec<SumSpec> {
    (0..3)
        .flat_map(|a| (0..3).map(move |b| SumSpec::new(a, b)))
        .collect()
}

/// S(target) = Σ coeffs[k]·S(k) with Laurent-polynomial coefficients over the box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCombination {
    pub target: SumSpec,
    pub terms: BTreeMap<SumSpec, IntSeries>,
    /// Number of points resolved before the target was reached.
    pub steps: usize,
    /// Order through which the combination was checked against S(target).
    pub certified_order: i64,
}

type Combo = BTreeMap<SumSpec, IntSeries>;

fn combo_add(x: &Combo, y: &Combo, ey: i64, sign: i64) -> Combo {
    let mut out = x.clone();
    let unit = IntSeries::monomial(BigInt::from(sign), ey);
    for (k, c) in y {
        let t = c.mul(&unit);
        let v = match out.get(k) {
            Some(old) => old.add(&t),
            None => t,
        };
        if v.is_zero() {
            out.remove(k);
        } else {
            out.insert(*k, v);
        }
    }
    out
}

fn combo_shift(x: &Combo, e: i64) -> Combo {
    x.iter().map(|(k, c)| (*k, c.shift(e))).collect()
}

/// Expresses S(spec) over the 3×3 box and certifies the result numerically
/// through `order`.
///
/// Starting from the box, every instance of (A) or (B) with two expressed
/// points expresses its third point. Instances are scanned in rounds inside a
/// window around the box and the target until the target is reached;
/// `step_budget` caps the number of newly expressed points.
pub fn reduce_to_basis(spec: SumSpec, step_budget: usize, order: i64) -> Result<BasisCombination> {
    if step_budget == 0 {
        return Err(Error::InvalidArgument("step budget must be at least 1".into()));
    }
    let mut known: HashMap<SumSpec, Combo> = basis()
        .into_iter()
        .map(|s| (s, BTreeMap::from([(s, IntSeries::one())])))
        .collect();
    let (alo, ahi) = (spec.a.min(0) - 6, spec.a.max(2) + 6);
    let (blo, bhi) = (spec.b.min(0) - 9, spec.b.max(2) + 9);
    let inside = |s: &SumSpec| (alo..=ahi).contains(&s.a) && (blo..=bhi).contains(&s.b);
    let mut steps = 0usize;
    while !known.contains_key(&spec) {
        let mut fresh: BTreeMap<SumSpec, Combo> = BTreeMap::new();
        for a in alo..=ahi {
            for b in blo..=bhi {
                for rel in [Relation::A, Relation::B] {
                    let (pts, e) = rel.triple(a, b);
                    if !pts.iter().all(inside) {
                        continue;
                    }
                    let have: Vec<bool> = pts.iter().map(|p| known.contains_key(p)).collect();
                    if have.iter().filter(|&&h| h).count() != 2 {
                        continue;
                    }
                    let [p0, p1, p2] = pts;
                    let (target, combo) = if !have[0] {
                        // S(p0) = q^e (S(p1) − S(p2))
                        (p0, combo_shift(&combo_add(&known[&p1], &known[&p2], 0, -1), e))
                    } else if !have[1] {
                        // S(p1) = q^{−e} S(p0) + S(p2)
                        (p1, combo_add(&known[&p2], &known[&p0], -e, 1))
                    } else {
                        // S(p2) = S(p1) − q^{−e} S(p0)
                        (p2, combo_add(&known[&p1], &known[&p0], -e, -1))
                    };
                    fresh.entry(target).or_insert(combo);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        for (k, v) in fresh {
            if steps >= step_budget {
                break;
            }
            if let std::collections::hash_map::Entry::Vacant(slot) = known.entry(k) {
                slot.insert(v);
                steps += 1;
            }
        }
        if steps >= step_budget && !known.contains_key(&spec) {
            break;
        }
    }
    let Some(terms) = known.remove(&spec) else {
        return Err(Error::ReductionFailed {
            a: spec.a,
            b: spec.b,
            budget: step_budget,
            resolved: steps,
        });
    };
    certify(spec, &terms, order)?;
    Ok(BasisCombination {
        target: spec,
        terms,
        steps,
        certified_order: order,
    })
}

/// Checks S(spec) = Σ terms[k]·S(k) through `order`.
pub fn certify(spec: SumSpec, terms: &BTreeMap<SumSpec, IntSeries>, order: i64) -> Result<()> {
    let lhs = s_series(spec, order);
    let mut rhs = IntSeries::zero(order);
    for (k, c) in terms {
        let low = c.valuation().unwrap_or(0);
        let s = s_series(*k, order - low);
        rhs = rhs.add(&c.mul(&s));
    }
    match lhs.agreement(&rhs).first_mismatch {
        None if rhs.order().is_some_and(|p| p >= order) => Ok(()),
        None => Err(Error::CertificateFailed {
            a: spec.a,
            b: spec.b,
            exponent: rhs.order().unwrap_or(order) + 1,
        }),
        Some(e) => Err(Error::CertificateFailed {
            a: spec.a,
            b: spec.b,
            exponent: e,
        }),
    }
}
