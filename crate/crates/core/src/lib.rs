//! Exact q-series arithmetic for double sums of Kanade–Russell type.
//!
//! The crate is layered: [`ring`] holds the coefficient rings and truncated
//! Laurent series, [`qkit`] the Pochhammer symbols, products and Gaussian
//! binomials, [`sums`] the double sums S(a,b;q) and their contiguous
//! relations, [`finite`] the polynomial versions and their reflected limits,
//! [`oracle`] brute-force partition counts, and [`labcli`] the identity
//! catalog and command-line front end.

pub mod error;
pub mod finite;
pub mod labcli;
pub mod oracle;
pub mod par;
pub mod qkit;
pub mod report;
pub mod ring;
pub mod sums;

pub use error::{Error, Result};
pub use ring::{Coefficient, DynSeries, EisSeries, Eisenstein, IntSeries, Scalar, Series};

/// Default truncation order.
pub const DEFAULT_ORDER: i64 = 500;
