use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative coefficient ring with exact arithmetic.
///
/// Implemented for [`BigInt`] (ℤ) and [`super::Eisenstein`] (ℤ[ω]).
pub trait Scalar: Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Send + Sync + 'static {
    /// Human-readable ring name, used in mismatch errors.
    const RING: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, rhs: &Self);
    fn sub_assign(&mut self, rhs: &Self);
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self += a * b`, the inner step of every convolution.
    fn add_product(&mut self, a: &Self, b: &Self) {
        self.add_assign(&a.mul(b));
    }
    /// Inverse if `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    /// Complex conjugation (identity on ℤ, ω ↦ ω² on ℤ[ω]).
    fn conj(&self) -> Self;
}

impl Scalar for BigInt {
    const RING: &'static str = "integer";

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self += a * b;
        }
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
}
