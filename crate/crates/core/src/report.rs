//! Coefficient-wise comparison reports.

use serde::Serialize;

use crate::error::Result;
use crate::ring::{CoefficientJson, DynSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: CoefficientJson,
    pub rhs: CoefficientJson,
}

/// Outcome of comparing two evaluated sides.
///
/// `agreement_order` is the last exponent through which the sides are known
/// to agree. It never exceeds the order both sides were evaluated to, so a
/// report without mismatch can still fall short of `requested_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub requested_order: i64,
    pub agreement_order: i64,
    pub first_mismatch: Option<Mismatch>,
    pub reading: Option<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn compare(
        id: impl Into<String>,
        lhs: &DynSeries,
        rhs: &DynSeries,
        requested_order: i64,
    ) -> Result<Self> {
        let lhs = lhs.truncate(requested_order);
        let rhs = rhs.truncate(requested_order);
        let agreement = lhs.agreement(&rhs)?;
        let known = agreement.order.unwrap_or(requested_order).min(requested_order);
        let (agreement_order, first_mismatch) = match agreement.first_mismatch {
            Some(e) => (
                (e - 1).min(known),
                Some(Mismatch {
                    exponent: e,
                    lhs: (&lhs.coeff(e)).into(),
                    rhs: (&rhs.coeff(e)).into(),
                }),
            ),
            None => (known, None),
        };
        Ok(VerificationReport {
            id: id.into(),
            requested_order,
            agreement_order,
            first_mismatch,
            reading: None,
            elapsed_ms: 0,
        })
    }

    /// Both sides agree through the requested order.
    pub fn full_agreement(&self) -> bool {
        self.first_mismatch.is_none() && self.agreement_order >= self.requested_order
    }

    pub fn with_reading(mut self, reading: impl Into<String>) -> Self {
        self.reading = Some(reading.into());
        self
    }

    pub fn with_elapsed(mut self, ms: u64) -> Self {
        self.elapsed_ms = ms;
        self
    }
}
