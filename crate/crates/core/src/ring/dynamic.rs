use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{EisSeries, Eisenstein, IntSeries, Scalar, Series};
use crate::error::{Error, Result};

/// A single coefficient tagged with its ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Integer(BigInt),
    Eisenstein(Eisenstein),
}

impl Coefficient {
    pub fn ring(&self) -> &'static str {
        match self {
            Coefficient::Integer(_) => BigInt::RING,
            Coefficient::Eisenstein(_) => Eisenstein::RING,
        }
    }

    /// Embeds into ℤ[ω].
    pub fn to_eisenstein(&self) -> Eisenstein {
        match self {
            Coefficient::Integer(v) => Eisenstein::from_int(v.clone()),
            Coefficient::Eisenstein(e) => e.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Integer(v) => Scalar::is_zero(v),
            Coefficient::Eisenstein(e) => e.is_zero(),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Integer(v) => write!(f, "{v}"),
            Coefficient::Eisenstein(e) => write!(f, "{e}"),
        }
    }
}

/// JSON form: plain integer string, or `{re_a, omega_b}` strings for ℤ[ω].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientJson {
    Integer(String),
    Eisenstein { re_a: String, omega_b: String },
}

impl From<&Coefficient> for CoefficientJson {
    fn from(c: &Coefficient) -> Self {
        match c {
            Coefficient::Integer(v) => CoefficientJson::Integer(v.to_string()),
            Coefficient::Eisenstein(e) => CoefficientJson::Eisenstein {
                re_a: e.re.to_string(),
                omega_b: e.omega.to_string(),
            },
        }
    }
}

/// A series whose ring is only known at run time.
///
/// Arithmetic between an integer and an Eisenstein series is an error;
/// call [`DynSeries::promote`] first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DynSeries {
    Int(IntSeries),
    Eis(EisSeries),
}

macro_rules! same_ring {
    ($l:expr, $r:expr, |$a:ident, $b:ident| $body:expr) => {
        match ($l, $r) {
            (DynSeries::Int($a), DynSeries::Int($b)) => Ok(DynSeries::Int($body)),
            (DynSeries::Eis($a), DynSeries::Eis($b)) => Ok(DynSeries::Eis($body)),
            (l, r) => Err(Error::RingMismatch {
                left: l.ring(),
                right: r.ring(),
            }),
        }
    };
}

macro_rules! each_ring {
    ($s:expr, |$a:ident| $body:expr) => {
        match $s {
            DynSeries::Int($a) => DynSeries::Int($body),
            DynSeries::Eis($a) => DynSeries::Eis($body),
        }
    };
}

impl DynSeries {
    pub fn ring(&self) -> &'static str {
        match self {
            DynSeries::Int(_) => BigInt::RING,
            DynSeries::Eis(_) => Eisenstein::RING,
        }
    }

    /// Explicit ℤ → ℤ[ω] embedding (identity on Eisenstein series).
    pub fn promote(&self) -> DynSeries {
        match self {
            DynSeries::Int(s) => DynSeries::Eis(s.promote()),
            DynSeries::Eis(_) => self.clone(),
        }
    }

    pub fn add(&self, other: &DynSeries) -> Result<DynSeries> {
        same_ring!(self, other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &DynSeries) -> Result<DynSeries> {
        same_ring!(self, other, |a, b| a.sub(b))
    }

    pub fn mul(&self, other: &DynSeries) -> Result<DynSeries> {
        same_ring!(self, other, |a, b| a.mul(b))
    }

    pub fn neg(&self) -> DynSeries {
        each_ring!(self, |a| a.neg())
    }

    pub fn shift(&self, k: i64) -> DynSeries {
        each_ring!(self, |a| a.shift(k))
    }

    pub fn truncate(&self, order: i64) -> DynSeries {
        each_ring!(self, |a| a.truncate(order))
    }

    pub fn conjugate(&self) -> DynSeries {
        each_ring!(self, |a| a.conjugate())
    }

    pub fn substitute_power(&self, k: i64) -> DynSeries {
        each_ring!(self, |a| a.substitute_power(k))
    }

    pub fn reflect_exponents(&self) -> Result<DynSeries> {
        Ok(match self {
            DynSeries::Int(a) => DynSeries::Int(a.reflect_exponents()?),
            DynSeries::Eis(a) => DynSeries::Eis(a.reflect_exponents()?),
        })
    }

    pub fn invert_unit(&self) -> Result<DynSeries> {
        Ok(match self {
            DynSeries::Int(a) => DynSeries::Int(a.invert_unit()?),
            DynSeries::Eis(a) => DynSeries::Eis(a.invert_unit()?),
        })
    }

    /// Multiplies by a scalar; an Eisenstein scalar on an integer series errors.
    pub fn scale(&self, c: &Coefficient) -> Result<DynSeries> {
        match (self, c) {
            (DynSeries::Int(s), Coefficient::Integer(v)) => Ok(DynSeries::Int(s.scale(v))),
            (DynSeries::Eis(s), c) => Ok(DynSeries::Eis(s.scale(&c.to_eisenstein()))),
            (DynSeries::Int(_), Coefficient::Eisenstein(_)) => Err(Error::RingMismatch {
                left: BigInt::RING,
                right: Eisenstein::RING,
            }),
        }
    }

    pub fn order(&self) -> Option<i64> {
        match self {
            DynSeries::Int(s) => s.order(),
            DynSeries::Eis(s) => s.order(),
        }
    }

    pub fn coeff(&self, exp: i64) -> Coefficient {
        match self {
            DynSeries::Int(s) => Coefficient::Integer(s.coeff(exp)),
            DynSeries::Eis(s) => Coefficient::Eisenstein(s.coeff(exp)),
        }
    }

    /// Coefficient comparison; requires matching rings.
    pub fn agreement(&self, other: &DynSeries) -> Result<super::Agreement> {
        match (self, other) {
            (DynSeries::Int(a), DynSeries::Int(b)) => Ok(a.agreement(b)),
            (DynSeries::Eis(a), DynSeries::Eis(b)) => Ok(a.agreement(b)),
            (l, r) => Err(Error::RingMismatch {
                left: l.ring(),
                right: r.ring(),
            }),
        }
    }
}

impl From<IntSeries> for DynSeries {
    fn from(s: IntSeries) -> Self {
        DynSeries::Int(s)
    }
}

impl From<EisSeries> for DynSeries {
    fn from(s: EisSeries) -> Self {
        DynSeries::Eis(s)
    }
}

impl fmt::Display for DynSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynSeries::Int(s) => write!(f, "{s}"),
            DynSeries::Eis(s) => write!(f, "{s}"),
        }
    }
}

impl<C: Scalar> Series<C> {
    /// Dense coefficient list from exponent `lo` through `hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<C> {
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }
}
