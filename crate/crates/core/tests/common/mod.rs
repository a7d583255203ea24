//! Helpers shared by the integration tests. Everything in `naive` is written
//! from the definitions with plain machine integers and shares no code with
//! the library kernels.

#![allow(dead_code)]

pub mod props;

use num_bigint::BigInt;
use qlab::ring::IntSeries;

pub mod naive {
    /// Truncated power series c[0..=p] over i128.
    pub type Poly = Vec<i128>;

    pub fn one(p: usize) -> Poly {
        let mut v = vec![0; p + 1];
        v[0] = 1;
        v
    }

    pub fn mul(a: &Poly, b: &Poly) -> Poly {
        let p = a.len().min(b.len());
        let mut out = vec![0; p];
        for (i, x) in a.iter().enumerate().take(p) {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(p - i) {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// Geometric series 1/(1 − q^k) through q^p.
    pub fn geometric(k: usize, p: usize) -> Poly {
        let mut v = vec![0; p + 1];
        let mut e = 0;
        while e <= p {
            v[e] = 1;
            e += k;
        }
        v
    }

    /// q^e / ((q;q)_m (q³;q³)_n) through q^p.
    pub fn term(e: usize, m: usize, n: usize, p: usize) -> Poly {
        let mut t = vec![0; p + 1];
        if e > p {
            return t;
        }
        t[e] = 1;
        for j in 1..=m {
            t = mul(&t, &geometric(j, p));
        }
        for j in 1..=n {
            t = mul(&t, &geometric(3 * j, p));
        }
        t
    }

    /// S(a,b) by direct summation over all (m,n) with exponent ≤ p. Needs the
    /// exponent to be non-negative on the whole quadrant.
    pub fn s_series(a: i64, b: i64, p: usize) -> Poly {
        let mut acc = vec![0; p + 1];
        for n in 0..=p as i64 {
            for m in 0..=p as i64 {
                let e = m * m + 3 * m * n + 3 * n * n + a * m + b * n;
                assert!(e >= 0, "negative exponent in naive S({a},{b})");
                if e as usize > p {
                    continue;
                }
                let t = term(e as usize, m as usize, n as usize, p);
                acc.iter_mut().zip(&t).for_each(|(x, y)| *x += y);
            }
        }
        acc
    }

    /// Gaussian binomial [n, m]_q by the Pascal rule [n,m] = [n−1,m−1] + q^m [n−1,m].
    pub fn gauss(n: i64, m: i64) -> Poly {
        if m < 0 || m > n || n < 0 {
            return vec![];
        }
        let n = n as usize;
        let m = m as usize;
        // rows[k] holds [row, k] for the current row
        let mut rows: Vec<Poly> = vec![vec![1]];
        for row in 1..=n {
            let mut next: Vec<Poly> = Vec::with_capacity(row + 1);
            for k in 0..=row {
                let left = if k >= 1 { rows[k - 1].clone() } else { vec![] };
                let right = if k < row { rows[k].clone() } else { vec![] };
                let len = left.len().max(if right.is_empty() { 0 } else { right.len() + k });
                let mut v = vec![0; len];
                for (i, x) in left.iter().enumerate() {
                    v[i] += x;
                }
                for (i, x) in right.iter().enumerate() {
                    v[i + k] += x;
                }
                next.push(v);
            }
            rows = next;
        }
        rows.swap_remove(m)
    }

    /// Number of partitions of each size ≤ p into parts allowed by `ok`,
    /// counted by recursion over the largest part.
    pub fn partition_counts(ok: impl Fn(usize) -> bool, p: usize) -> Vec<u64> {
        fn count(rem: usize, max: usize, ok: &dyn Fn(usize) -> bool, memo: &mut Vec<Vec<Option<u64>>>) -> u64 {
            if rem == 0 {
                return 1;
            }
            if max == 0 {
                return 0;
            }
            if let Some(c) = memo[rem][max] {
                return c;
            }
            let mut c = count(rem, max - 1, ok, memo);
            if ok(max) && max <= rem {
                c += count(rem - max, max, ok, memo);
            }
            memo[rem][max] = Some(c);
            c
        }
        let mut memo = vec![vec![None; p + 1]; p + 1];
        (0..=p).map(|n| count(n, n, &ok, &mut memo)).collect()
    }
}

/// Coefficients 0..=p of a library series as i128.
pub fn to_poly(s: &IntSeries, p: usize) -> naive::Poly {
    (0..=p as i64)
        .map(|e| i128::try_from(s.coeff(e)).expect("coefficient fits in i128"))
        .collect()
}

pub fn int_series(coeffs: &[i64], order: Option<i64>) -> IntSeries {
    IntSeries::from_i64s(0, coeffs, order)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Writes one line straight to the process stdout, bypassing the test
/// harness capture, so criterion verdicts land in the log of a normal run.
pub fn report_line(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}
