//! Brute-force partition counts used as ground truth for the series code.
//!
//! Enumeration is exponential in the worst case; sizes are capped at
//! [`MAX_N`].

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::finite::Variant;
use crate::par;
use crate::ring::IntSeries;

/// Largest partition size the oracle accepts.
pub const MAX_N: i64 = 80;

/// Difference conditions on partitions, parts listed in increasing order.
///
/// Parts two positions apart differ by at least `distance2_gap`. Two
/// neighbouring parts that differ by at most 1 must have a sum congruent to
/// `close_pair_rule` mod 3, and the smaller of them must be at least
/// `min_pair_part`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapConditionSpec {
    pub max_part: Option<i64>,
    pub min_part: i64,
    pub distance2_gap: i64,
    pub close_pair_rule: i64,
    pub min_pair_part: i64,
    pub variant: Option<Variant>,
}

impl GapConditionSpec {
    /// The conditions whose generating function with largest part ≤ N is
    /// the finite version of `v`.
    pub fn for_variant(v: Variant, max_part: Option<i64>) -> Self {
        let (min_part, rule) = match v {
            Variant::V0m1 => (1, 2),
            Variant::V00 => (1, 0),
            Variant::V11 => (2, 1),
            Variant::V12 => (2, 2),
            Variant::V23 => (3, 0),
            Variant::V24 => (3, 1),
            Variant::V35 => (4, 2),
            Variant::V36 => (4, 0),
            Variant::V13 => (2, 0),
            Variant::V02 => (1, 2),
        };
        GapConditionSpec {
            max_part,
            min_part,
            distance2_gap: 3,
            close_pair_rule: rule,
            min_pair_part: if v == Variant::V02 { 2 } else { min_part },
            variant: Some(v),
        }
    }

    /// Whether `parts` (any order) satisfies the conditions.
    pub fn admits(&self, parts: &[i64]) -> bool {
        let mut p = parts.to_vec();
        p.sort_unstable();
        p.iter().enumerate().all(|(i, &x)| {
            let lo_ok = x >= self.min_part && self.max_part.is_none_or(|n| x <= n);
            let gap_ok = i < 2 || x - p[i - 2] >= self.distance2_gap;
            let pair_ok = i < 1 || self.pair_ok(p[i - 1], x);
            lo_ok && gap_ok && pair_ok
        })
    }

    fn pair_ok(&self, lo: i64, hi: i64) -> bool {
        hi - lo > 1 || ((lo + hi).rem_euclid(3) == self.close_pair_rule && lo >= self.min_pair_part)
    }

    fn part_range(&self, remaining: i64, last: Option<i64>, before: Option<i64>) -> (i64, i64) {
        let mut lo = self.min_part.max(1);
        if let Some(l) = last {
            lo = lo.max(l);
        }
        if let Some(b) = before {
            lo = lo.max(b + self.distance2_gap);
        }
        let hi = self.max_part.map_or(remaining, |n| n.min(remaining));
        (lo, hi)
    }
}

fn check_n(n: i64) -> Result<()> {
    if !(0..=MAX_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "oracle sizes must lie in 0..={MAX_N}, got {n}"
        )));
    }
    Ok(())
}

struct Counter<'a> {
    spec: &'a GapConditionSpec,
    memo: HashMap<(i64, i64, i64), u64>,
}

impl Counter<'_> {
    /// Completions of a partition whose last two parts are `before ≤ last`.
    fn count(&mut self, remaining: i64, last: Option<i64>, before: Option<i64>) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let key = (remaining, last.unwrap_or(0), before.unwrap_or(0));
        if let Some(&c) = self.memo.get(&key) {
            return c;
        }
        let (lo, hi) = self.spec.part_range(remaining, last, before);
        let mut total = 0;
        for p in lo..=hi {
            if last.is_some_and(|l| !self.spec.pair_ok(l, p)) {
                continue;
            }
            total += self.count(remaining - p, Some(p), last);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Number of partitions of n satisfying `spec`.
pub fn count_gap_partitions(spec: &GapConditionSpec, n: i64) -> Result<u64> {
    check_n(n)?;
    let mut c = Counter {
        spec,
        memo: HashMap::new(),
    };
    Ok(c.count(n, None, None))
}

/// The partitions themselves, parts increasing, in lexicographic order.
pub fn list_gap_partitions(spec: &GapConditionSpec, n: i64) -> Result<Vec<Vec<i64>>> {
    check_n(n)?;
    fn walk(
        spec: &GapConditionSpec,
        remaining: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        let last = cur.last().copied();
        let before = cur.len().checked_sub(2).map(|i| cur[i]);
        let (lo, hi) = spec.part_range(remaining, last, before);
        for p in lo..=hi {
            if last.is_some_and(|l| !spec.pair_ok(l, p)) {
                continue;
            }
            cur.push(p);
            walk(spec, remaining - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    walk(spec, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Σ_{n ≤ order} count_gap_partitions(spec, n) qⁿ.
pub fn gap_generating_function(spec: &GapConditionSpec, order: i64) -> Result<IntSeries> {
    check_n(order)?;
    let counts = par::map_range(order as usize + 1, |n| {
        count_gap_partitions(spec, n as i64).map(BigInt::from)
    });
    let counts: Result<Vec<BigInt>> = counts.into_iter().collect();
    Ok(IntSeries::from_coeffs(0, counts?, Some(order)))
}

/// Partitions into parts from given residue classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClassSpec {
    pub modulus: i64,
    pub residues: Vec<i64>,
}

impl ResidueClassSpec {
    pub fn new(modulus: i64, residues: &[i64]) -> Result<Self> {
        if modulus < 1 || residues.is_empty() || residues.iter().any(|&r| !(1..=modulus).contains(&r)) {
            return Err(Error::InvalidArgument(format!(
                "residues must be a nonempty subset of 1..={modulus}"
            )));
        }
        Ok(ResidueClassSpec {
            modulus,
            residues: residues.to_vec(),
        })
    }

    fn allows(&self, part: i64) -> bool {
        let r = part.rem_euclid(self.modulus);
        self.residues
            .iter()
            .any(|&c| c.rem_euclid(self.modulus) == r)
    }
}

/// Counts for all sizes 0..=order by the standard coin DP.
fn residue_counts(spec: &ResidueClassSpec, order: i64) -> Vec<BigInt> {
    let len = order as usize + 1;
    let mut c = vec![BigInt::from(0); len];
    c[0] = BigInt::from(1);
    for part in 1..=order as usize {
        if !spec.allows(part as i64) {
            continue;
        }
        for s in part..len {
            let t = c[s - part].clone();
            c[s] += t;
        }
    }
    c
}

/// Number of partitions of n into parts from the allowed classes.
pub fn count_residue_partitions(spec: &ResidueClassSpec, n: i64) -> Result<BigInt> {
    check_n(n)?;
    Ok(residue_counts(spec, n).pop().unwrap())
}

/// Σ_{n ≤ order} count_residue_partitions(spec, n) qⁿ.
pub fn residue_generating_function(spec: &ResidueClassSpec, order: i64) -> Result<IntSeries> {
    if order < 0 {
        return Err(Error::InvalidArgument(format!("order must be non-negative, got {order}")));
    }
    Ok(IntSeries::from_coeffs(0, residue_counts(spec, order), Some(order)))
}

/// The smallest partition with n pairs and m singletons for a variant,
/// parts increasing. Its weight is the quadratic exponent of the (m,n)
/// summand of S(a,b).
pub fn minimal_configuration(variant: Variant, m: i64, n: i64) -> Result<Vec<i64>> {
    if m < 0 || n < 0 {
        return Err(Error::InvalidArgument(format!(
            "m and n must be non-negative, got m={m}, n={n}"
        )));
    }
    // pair k = (3k + d1, 3k + d2); singletons start at 3n + s and step by 2
    let (d1, d2, s) = match variant {
        Variant::V0m1 => (-2, -2, 1),
        Variant::V00 => (-2, -1, 1),
        Variant::V11 => (-1, -1, 2),
        Variant::V12 => (-1, 0, 2),
        Variant::V23 => (0, 0, 3),
        Variant::V24 => (0, 1, 3),
        Variant::V35 => (1, 1, 4),
        Variant::V36 => (1, 2, 4),
        Variant::V13 | Variant::V02 => {
            return Err(Error::UnknownVariant(format!(
                "{variant} (no minimal configuration is listed for it)"
            )))
        }
    };
    let mut parts = Vec::with_capacity((2 * n + m) as usize);
    for k in 1..=n {
        parts.push(3 * k + d1);
        parts.push(3 * k + d2);
    }
    for j in 0..m {
        parts.push(3 * n + s + 2 * j);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_counts() {
        let s = GapConditionSpec::for_variant(Variant::V0m1, Some(5));
        assert_eq!(count_gap_partitions(&s, 0).unwrap(), 1);
        assert_eq!(count_gap_partitions(&s, 2).unwrap(), 2);
        let k = GapConditionSpec::for_variant(Variant::V00, None);
        assert_eq!(count_gap_partitions(&k, 2).unwrap(), 1);
        assert_eq!(
            list_gap_partitions(&s, 2).unwrap(),
            vec![vec![1, 1], vec![2]]
        );
        assert!(count_gap_partitions(&s, MAX_N + 1).is_err());
    }

    #[test]
    fn residue_counts_small() {
        let r = ResidueClassSpec::new(9, &[1, 3, 6, 8]).unwrap();
        assert_eq!(count_residue_partitions(&r, 0).unwrap(), BigInt::from(1));
        assert_eq!(count_residue_partitions(&r, 6).unwrap(), BigInt::from(4));
        assert_eq!(count_residue_partitions(&r, 3).unwrap(), BigInt::from(2));
    }

    #[test]
    fn minimal_configurations() {
        assert_eq!(minimal_configuration(Variant::V0m1, 0, 1).unwrap(), vec![1, 1]);
        assert_eq!(minimal_configuration(Variant::V24, 1, 1).unwrap(), vec![3, 4, 6]);
        assert!(minimal_configuration(Variant::V11, 0, 0).unwrap().is_empty());
        assert!(minimal_configuration(Variant::V13, 1, 1).is_err());
    }
}
