//! Library error type.

use crate::algebra::GammaBasis;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{what} {value} out of range (max {max})")]
    IndexOutOfRange { what: &'static str, value: usize, max: usize },

    #[error("mass must be non-negative, got {0}")]
    NegativeMass(f64),

    #[error("massless momentum with zero spatial part is not on any shell")]
    MasslessZeroMomentum,

    #[error("infinite rapidity: boost parameters are undefined for massless momenta")]
    InfiniteRapidity,

    #[error("normalization {0} requires a massive momentum")]
    MasslessNormalization(&'static str),

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: GammaBasis, right: GammaBasis },

    #[error("U1 singular direction: a + a3 = 0 (vector on the -z axis); pre-rotate first")]
    SingularDirection,

    #[error("tachyonic mass pair: m2^2 > m1^2 (m1 = {m1}, m2 = {m2})")]
    TachyonicMassPair { m1: f64, m2: f64 },

    #[error("no real non-negative mass roots: discriminant 1 + 4*alpha*beta/m = {0} < 0")]
    ComplexRoots(f64),

    #[error("zero vector where a nonzero spinor is required")]
    ZeroVector,

    #[error("momentum is off the m1/m2 mass shell: |p^2 - (m1^2 - m2^2)| = {0:.3e}")]
    OffShell(f64),

    #[error("normalization factor must be positive, got {0}")]
    NonPositiveNorm(f64),
}
