//! Coefficient rings ℤ and ℤ[ω] and truncated Laurent series over them.

mod dynamic;
mod eisenstein;
mod scalar;
mod series;

pub use dynamic::{Coefficient, CoefficientJson, DynSeries};
pub use eisenstein::Eisenstein;
pub use scalar::Scalar;
pub use series::{Agreement, EisSeries, IntSeries, Series};
