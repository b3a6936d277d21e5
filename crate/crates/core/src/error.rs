//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count must be positive")]
    ZeroVertexCount,

    #[error("vertex label {label} out of range 1..={n}")]
    VertexOutOfRange { label: u32, n: u32 },

    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(String),

    #[error("the void complex has no faces to analyze")]
    VoidComplex,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime modulus {0} too large (must fit in 31 bits)")]
    PrimeTooLarge(u64),

    #[error("unknown field label '{0}' (expected 'q' or 'fp:<prime>')")]
    BadFieldLabel(String),

    #[error("operation requires a pure complex")]
    PurityRequired,

    #[error("parameter out of range: {0}")]
    ParamRange(String),

    #[error("coefficient matrix is not certified generic")]
    UncertifiedMatrix,

    #[error("genericity certifier refuses matrices with more than {max} rows (got {n})")]
    CertifierRefused { n: usize, max: usize },

    #[error("could not certify a generic {n}x{d} matrix over {field} after {attempts} attempts")]
    CertificationExhausted {
        n: usize,
        d: usize,
        field: String,
        attempts: u32,
    },

    #[error("complex has no isolated singularities (singularity dimension must be exactly 0)")]
    NotIsolatedSingular,

    #[error("linear form coefficient a_{0} is zero")]
    ZeroCoefficient(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
