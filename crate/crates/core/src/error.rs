use thiserror::Error;

/// Errors raised by the series engine, the catalog and the CLI layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: cannot combine {left} and {right} series without explicit promotion")]
    RingMismatch {
        left: &'static str,
        right: &'static str,
    },

    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("series must start at exponent 0 before inversion (min exponent is {0}); shift first")]
    NonzeroMinExp(i64),

    #[error("cannot reflect a truncated series (known only through order {0})")]
    ReflectTruncated(i64),

    #[error("infinite product ({0}) does not converge coefficient-wise")]
    DivergentProduct(String),

    #[error("no finite version for S({a},{b}); reduce it to the basis first")]
    UnsupportedFinite { a: i64, b: i64 },

    #[error("star convention is not meaningful for S({a},{b})")]
    StarNotAllowed { a: i64, b: i64 },

    #[error("normalization leaves exponent {exponent} < 0 (summand m={m}, n={n})")]
    NegativeExponent { exponent: i64, m: i64, n: i64 },

    #[error("reduction of S({a},{b}) did not reach the basis within {budget} steps ({resolved} points resolved)")]
    ReductionFailed {
        a: i64,
        b: i64,
        budget: usize,
        resolved: usize,
    },

    #[error("reduction certificate failed for S({a},{b}) at exponent {exponent}")]
    CertificateFailed { a: i64, b: i64, exponent: i64 },

    #[error("unknown variant `{0}`")]
    UnknownVariant(String),

    #[error("unknown catalog id `{0}`")]
    UnknownId(String),

    #[error("while evaluating `{context}`: {source}")]
    Evaluation {
        context: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
