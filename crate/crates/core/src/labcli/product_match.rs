use serde::Serialize;

use crate::error::Result;
use crate::ring::{DynSeries, EisSeries, Eisenstein};

use super::catalog::referee_product;
use super::recipe::Recipe;

/// A candidate 1/(q,q²,ωq^a,ω²q^b;q³)_∞ that equals the target after
/// multiplication by `unit`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductMatch {
    pub a: i64,
    pub b: i64,
    /// The unit as (re, omega).
    pub unit: (i64, i64),
}

/// Exponent pairs (a, b) in {1,2,3}² with a + b ∉ {3, 6}.
pub fn candidate_pairs() -> Vec<(i64, i64)> {
    (1..=3)
        .flat_map(|a| (1..=3).map(move |b| (a, b)))
        .filter(|(a, b)| a + b != 3 && a + b != 6)
        .collect()
}

fn units() -> [(i64, i64); 6] {
    [(1, 0), (0, 1), (-1, -1), (-1, 0), (0, -1), (1, 1)]
}

/// All candidates matching `target` through `order`, up to one of the six
/// units of ℤ[ω].
pub fn product_match_search(target: &Recipe, order: i64) -> Result<Vec<ProductMatch>> {
    let t: EisSeries = match target.eval(order)?.promote() {
        DynSeries::Eis(s) => s.truncate(order),
        DynSeries::Int(_) => unreachable!("promote yields the Eisenstein ring"),
    };
    let mut out = Vec::new();
    for (a, b) in candidate_pairs() {
        let DynSeries::Eis(c) = referee_product(a, b, (1, 0)).eval(order)? else {
            unreachable!("referee products are Eisenstein")
        };
        for u in units() {
            let scaled = c.scale(&Eisenstein::new(u.0, u.1));
            if scaled.agreement(&t).agrees() {
                out.push(ProductMatch { a, b, unit: u });
                break;
            }
        }
    }
    Ok(out)
}
