//! The static list of identities the lab knows how to check.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::finite::{rk1_bracket_terms, Family, LimitFamily, Rk1Reading};
use crate::sums::KR_RESIDUES;

use super::recipe::{Factor, Recipe, SchurSide};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Proved,
    Conjectural,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Proved => "proved",
            Status::Conjectural => "conjectural",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integer,
    Eisenstein,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Integer => "integer",
            RingKind::Eisenstein => "eisenstein",
        }
    }
}

/// Which of several transcriptions of one display an entry uses. Entries
/// sharing a group are alternatives: the group is satisfied when any member
/// agrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Reading {
    pub group: &'static str,
    pub name: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    Proved,
    Conjectural,
    All,
}

impl Filter {
    pub fn admits(self, s: Status) -> bool {
        match self {
            Filter::All => true,
            Filter::Proved => s == Status::Proved,
            Filter::Conjectural => s == Status::Conjectural,
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "proved" => Ok(Filter::Proved),
            "conjectural" => Ok(Filter::Conjectural),
            "all" => Ok(Filter::All),
            _ => Err(Error::InvalidArgument(format!(
                "filter must be proved, conjectural or all, got `{s}`"
            ))),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::Proved => "proved",
            Filter::Conjectural => "conjectural",
            Filter::All => "all",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityEntry {
    pub id: String,
    pub status: Status,
    pub ring: RingKind,
    pub default_order: i64,
    pub description: String,
    pub lhs: Recipe,
    pub rhs: Recipe,
    pub reading: Option<Reading>,
}

impl IdentityEntry {
    fn new(id: impl Into<String>, status: Status, ring: RingKind, order: i64, lhs: Recipe, rhs: Recipe) -> Self {
        IdentityEntry {
            id: id.into(),
            status,
            ring,
            default_order: order,
            description: String::new(),
            lhs,
            rhs,
            reading: None,
        }
    }

    fn about(mut self, d: &str) -> Self {
        self.description = d.to_string();
        self
    }

    fn reading(mut self, group: &'static str, name: &'static str) -> Self {
        self.reading = Some(Reading { group, name });
        self
    }

    /// The same entry with q^k added to its right side.
    pub fn perturbed(&self, k: i64) -> IdentityEntry {
        let bump = match self.ring {
            RingKind::Integer => Recipe::Const(1).shifted(k),
            RingKind::Eisenstein => Recipe::Const(1).promote().shifted(k),
        };
        IdentityEntry {
            rhs: self.rhs.clone().plus(bump),
            ..self.clone()
        }
    }
}

const SCHUR_MAX_N: i64 = 40;

fn lf(family: Family, r: u8) -> LimitFamily {
    LimitFamily::new(family, r).expect("residue in 0..=2")
}

fn limit(family: Family, r: u8) -> Recipe {
    Recipe::Limit(lf(family, r), Rk1Reading::Corrected)
}

fn reflected(family: Family, r: u8) -> Recipe {
    Recipe::Reflected {
        fam: lf(family, r),
        m: None,
    }
}

fn warnaar(r: u8) -> Recipe {
    let c: [i64; 7] = if r == 0 {
        [3, 9, 12, 21, 30, 36, 39]
    } else {
        [3, 12, 18, 21, 27, 30, 39]
    };
    let mut pairs = vec![(2, 3)];
    pairs.extend(c.iter().map(|&x| (x, 45)));
    Recipe::InvProduct(pairs)
}

fn s(a: i64, b: i64) -> Recipe {
    Recipe::S(a, b)
}

fn se(a: i64, b: i64) -> Recipe {
    Recipe::S(a, b).promote()
}

fn kr_product(i: usize) -> Recipe {
    Recipe::InvProduct(KR_RESIDUES[i - 1].iter().map(|&c| (c, 9)).collect())
}

fn hick1_rhs() -> Recipe {
    Recipe::EisProduct {
        unit: (1, 0),
        num: vec![Factor::plain(6, 9), Factor::omega(1, 3), Factor::omega_sq(3, 3)],
        den: vec![Factor::plain(2, 3)],
    }
}

/// The right side of the second combination with unit `unit`; the display
/// carries ω.
fn hick2_rhs(unit: (i64, i64)) -> Recipe {
    Recipe::EisProduct {
        unit,
        num: vec![Factor::plain(3, 9), Factor::omega_sq(2, 3), Factor::omega(3, 3)],
        den: vec![Factor::plain(1, 3)],
    }
}

fn hick1_lhs() -> Recipe {
    se(1, 1).minus(se(2, 4).times_eis(0, 1).shifted(1))
}

fn hick2_lhs() -> Recipe {
    se(0, -1).plus(se(0, 2).times_eis(-1, -1))
}

/// 1/(q, q², ωq^a, ω²q^b; q³)_∞ times `unit`.
pub fn referee_product(a: i64, b: i64, unit: (i64, i64)) -> Recipe {
    Recipe::EisProduct {
        unit,
        num: vec![],
        den: vec![
            Factor::plain(1, 3),
            Factor::plain(2, 3),
            Factor::omega(a, 3),
            Factor::omega_sq(b, 3),
        ],
    }
}

fn conj1_rhs() -> Recipe {
    let mut num = vec![Factor::plain(15, 45), Factor::omega(3, 3)];
    num.extend([1, 2, 4, 8, 10].map(|e| Factor::omega_sq(e, 15)));
    let mut den: Vec<Factor> = [5, 11, 14].map(|e| Factor::plain(e, 15)).to_vec();
    den.extend([3, 12, 18, 27].map(|e| Factor::plain(e, 45)));
    Recipe::EisProduct {
        unit: (0, -1),
        num,
        den,
    }
}

fn conj2_rhs() -> Recipe {
    let mut num = vec![Factor::plain(30, 45), Factor::omega_sq(3, 3)];
    num.extend([5, 7, 11, 13, 14].map(|e| Factor::omega(e, 15)));
    let mut den: Vec<Factor> = [1, 4, 10].map(|e| Factor::plain(e, 15)).to_vec();
    den.extend([18, 27, 33, 42].map(|e| Factor::plain(e, 45)));
    Recipe::EisProduct {
        unit: (0, -1),
        num,
        den,
    }
}

fn conj1_lhs() -> Recipe {
    limit(Family::F, 1)
        .promote()
        .plus(limit(Family::G, 1).promote().times_eis(0, -1).shifted(-1))
}

fn conj2_lhs() -> Recipe {
    limit(Family::FStar, 0)
        .promote()
        .plus(limit(Family::GStar, 0).promote().times_eis(-1, -1))
}

fn brackets(r: u8, alt: bool) -> Recipe {
    Recipe::Brackets(rk1_bracket_terms(r, alt).expect("r is 0 or 2"))
}

fn schur(k: u8, n: i64) -> IdentityEntry {
    let side = |side| Recipe::Schur { k, n, side };
    // both sides have degree at most that of the j = 0 / λ = 0 term, well below N²
    IdentityEntry::new(
        format!("schur_poly_{k}:N={n}"),
        Status::Proved,
        RingKind::Integer,
        n * n + 2 * n + 1,
        side(SchurSide::Sum),
        side(SchurSide::Alternating),
    )
    .about("Schur polynomial identity, exact for fixed N")
}

fn parse_schur(id: &str) -> Option<IdentityEntry> {
    let rest = id.strip_prefix("schur_poly_")?;
    let (k, n) = rest.split_once(":N=")?;
    let k: u8 = k.parse().ok()?;
    let n: i64 = n.parse().ok()?;
    ((1..=2).contains(&k) && n >= 0).then(|| schur(k, n))
}

/// Every catalog entry, in a fixed order.
pub fn catalog() -> Vec<IdentityEntry> {
    use RingKind::{Eisenstein as E, Integer as Z};
    use Status::{Conjectural as C, Proved as P};
    let mut v = vec![
        IdentityEntry::new("rr1", P, Z, 400, Recipe::RrSum(0), Recipe::InvProduct(vec![(1, 5), (4, 5)]))
            .about("first Rogers-Ramanujan identity"),
        IdentityEntry::new("rr2", P, Z, 400, Recipe::RrSum(1), Recipe::InvProduct(vec![(2, 5), (3, 5)]))
            .about("second Rogers-Ramanujan identity"),
        IdentityEntry::new(
            "rr_iv_1",
            P,
            Z,
            400,
            Recipe::RrIvSum(0),
            Recipe::InvProduct(vec![(1, 2), (4, 20), (16, 20)]),
        )
        .about("sum q^{n^2}/(q)_{2n} as a product"),
        IdentityEntry::new(
            "rr_iv_2",
            P,
            Z,
            400,
            Recipe::RrIvSum(1),
            Recipe::InvProduct(vec![
                (1, 10),
                (2, 10),
                (8, 10),
                (9, 10),
                (5, 20),
                (6, 20),
                (14, 20),
                (15, 20),
            ]),
        )
        .about("sum q^{n^2+n}/(q)_{2n+1} as a product"),
    ];
    for k in 1..=2 {
        v.extend((0..=SCHUR_MAX_N).map(|n| schur(k, n)));
    }
    for i in 1..=5 {
        v.push(
            IdentityEntry::new(format!("kr{i}"), C, Z, 400, Recipe::Kr(i), kr_product(i))
                .about("Kanade-Russell mod 9 identity, double-sum side through S(a,b)"),
        );
    }
    v.push(
        IdentityEntry::new(
            "kr5_simplified",
            P,
            Z,
            400,
            Recipe::Kr(5),
            s(2, 4).shifted(1).plus(s(1, 4)),
        )
        .about("(1+q)S(2,4) + q^2 S(3,7) = q S(2,4) + S(1,4)"),
    );
    v.extend([
        IdentityEntry::new("hick1", C, E, 300, hick1_lhs(), hick1_rhs())
            .about("S(1,1) - w q S(2,4) as a product"),
        IdentityEntry::new("hick1_conj", C, E, 300, hick1_lhs().conj(), hick1_rhs().conj())
            .about("conjugate of hick1"),
        IdentityEntry::new("hick2", C, E, 300, hick2_lhs(), hick2_rhs((0, 1)))
            .about("S(0,-1) + w^2 S(0,2) as a product, sign as printed"),
        IdentityEntry::new("hick2_conj", C, E, 300, hick2_lhs().conj(), hick2_rhs((0, 1)).conj())
            .about("conjugate of hick2, sign as printed"),
        IdentityEntry::new("hick2_signfix", C, E, 300, hick2_lhs(), hick2_rhs((0, -1)))
            .about("hick2 with the product multiplied by -1"),
        IdentityEntry::new(
            "hick2_signfix_conj",
            C,
            E,
            300,
            hick2_lhs().conj(),
            hick2_rhs((0, -1)).conj(),
        )
        .about("conjugate of hick2_signfix"),
    ]);
    let referee = [
        ("referee_hick1", hick1_rhs(), (3, 1), (1, 0)),
        ("referee_hick1_conj", hick1_rhs().conj(), (1, 3), (1, 0)),
        ("referee_hick2", hick2_rhs((0, 1)), (2, 3), (0, 1)),
        ("referee_hick2_conj", hick2_rhs((0, 1)).conj(), (3, 2), (-1, -1)),
        ("referee_kr4", kr_product(4).promote(), (1, 1), (1, 0)),
        ("referee_kr5", kr_product(5).promote(), (2, 2), (1, 0)),
    ];
    for (id, target, (a, b), unit) in referee {
        v.push(
            IdentityEntry::new(id, P, E, 300, target, referee_product(a, b, unit))
                .about("product rewritten as a unit times 1/(q,q^2,w a,w^2 b;q^3)"),
        );
    }
    v.extend([
        IdentityEntry::new("relation_lift_1", P, Z, 400, s(1, 3), s(2, 3).plus(s(3, 6).shifted(2)))
            .about("S(1,3) = S(2,3) + q^2 S(3,6)"),
        IdentityEntry::new("relation_lift_2", P, Z, 400, s(0, 2), s(0, -1).minus(s(3, 5).shifted(2)))
            .about("S(0,2) = S(0,-1) - q^2 S(3,5)"),
        IdentityEntry::new(
            "thm_stats_1",
            P,
            Z,
            500,
            limit(Family::F, 0),
            limit(Family::F, 1)
                .plus(limit(Family::F, 2).shifted(2))
                .plus(Recipe::Const(1)),
        )
        .about("F0 = F1 + q^2 F2 + 1"),
        IdentityEntry::new(
            "thm_stats_2",
            P,
            Z,
            500,
            limit(Family::G, 0),
            limit(Family::G, 1).plus(limit(Family::G, 2).shifted(2)),
        )
        .about("G0 = G1 + q^2 G2"),
        IdentityEntry::new(
            "thm_stats_3",
            P,
            Z,
            500,
            limit(Family::FStar, 2),
            limit(Family::FStar, 0)
                .plus(limit(Family::FStar, 1))
                .plus(Recipe::Const(1)),
        )
        .about("F2* = F0* + F1* + 1"),
        IdentityEntry::new(
            "thm_stats_4",
            P,
            Z,
            500,
            limit(Family::GStar, 2),
            limit(Family::GStar, 0).plus(limit(Family::GStar, 1)),
        )
        .about("G2* = G0* + G1*"),
        IdentityEntry::new("conj1", C, E, 300, conj1_lhs(), conj1_rhs())
            .about("F1 - w q^-1 G1 as a modulus 45 product"),
        IdentityEntry::new("conj1_conj", C, E, 300, conj1_lhs().conj(), conj1_rhs().conj())
            .about("conjugate of conj1"),
        IdentityEntry::new("conj2", C, E, 300, conj2_lhs(), conj2_rhs())
            .about("F0* + w^2 G0* as a modulus 45 product"),
        IdentityEntry::new("conj2_conj", C, E, 300, conj2_lhs().conj(), conj2_rhs().conj())
            .about("conjugate of conj2"),
    ]);
    for fam in LimitFamily::twelve() {
        v.push(
            IdentityEntry::new(
                format!("limit_{}", fam.to_string().replace('*', "star")),
                P,
                Z,
                150,
                Recipe::Reflected { fam, m: None },
                Recipe::Limit(fam, Rk1Reading::Corrected),
            )
            .about("reflected finite versions converge to the double-sum limit"),
        );
    }
    v.extend([
        IdentityEntry::new("warnaar_rk4_0", C, Z, 150, reflected(Family::Rk4, 0), warnaar(0))
            .about("reflected KR4 finite versions, N = 3M, against a modulus 45 product"),
        IdentityEntry::new("warnaar_rk4_1", C, Z, 150, reflected(Family::Rk4, 1), warnaar(1))
            .about("reflected KR4 finite versions, N = 3M+1, against a modulus 45 product"),
        IdentityEntry::new(
            "warnaar_rk4_2",
            C,
            Z,
            150,
            reflected(Family::Rk4, 2),
            reflected(Family::Rk4, 0).plus(reflected(Family::Rk4, 1).shifted(2)),
        )
        .about("RK4(3inf+2) = RK4(3inf) + q^2 RK4(3inf+1)"),
        IdentityEntry::new(
            "rk1_bracket_0",
            C,
            Z,
            300,
            limit(Family::Rk1, 0),
            brackets(0, false),
        )
        .about("RK1(3inf) limit sum against bracket products")
        .reading("rk1_limit_0", Rk1Reading::Corrected.name()),
        IdentityEntry::new(
            "rk1_bracket_0_literal",
            C,
            Z,
            300,
            Recipe::Limit(lf(Family::Rk1, 0), Rk1Reading::Literal),
            brackets(0, false),
        )
        .about("RK1(3inf) limit sum with binomial top 3b-1-1 as printed")
        .reading("rk1_limit_0", Rk1Reading::Literal.name()),
        IdentityEntry::new("rk1_bracket_0_alt", C, Z, 300, brackets(0, false), brackets(0, true))
            .about("the two bracket forms of RK1(3inf)"),
        IdentityEntry::new(
            "rk1_bracket_2",
            C,
            Z,
            300,
            limit(Family::Rk1, 2),
            brackets(2, false),
        )
        .about("RK1(3inf+2) limit sum against bracket products"),
        IdentityEntry::new("rk1_bracket_2_alt", C, Z, 300, brackets(2, false), brackets(2, true))
            .about("the two bracket forms of RK1(3inf+2)"),
        IdentityEntry::new(
            "rk1_linear",
            C,
            Z,
            300,
            limit(Family::Rk1, 1),
            limit(Family::Rk1, 0).shifted(1).plus(limit(Family::Rk1, 2)),
        )
        .about("RK1(3inf+1) = q RK1(3inf) + RK1(3inf+2)"),
    ]);
    v
}

/// The entry with this id. Schur entries exist for every N ≥ 0, not only
/// those listed.
pub fn lookup(id: &str) -> Result<IdentityEntry> {
    catalog()
        .into_iter()
        .find(|e| e.id == id)
        .or_else(|| parse_schur(id))
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}
