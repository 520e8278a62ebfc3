use thiserror::Error;

/// Errors raised by grid construction, state factories, gates and decoders.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("n_points must be a power of two >= 16, got {0}")]
    BadPointCount(usize),

    #[error("x_max must be positive, got {0}")]
    BadHalfWidth(f64),

    #[error("no integer samples-per-sqrt(pi) for x_max = {m} * sqrt(pi) with {n} points")]
    NoCommensurateLattice { m: usize, n: usize },

    #[error("operation requires states on the same grid")]
    GridMismatch,

    #[error("operation requires the {expected:?} representation, got {got:?}")]
    RepresentationMismatch {
        expected: crate::grid::Representation,
        got: crate::grid::Representation,
    },

    #[error("grid is not commensurate with sqrt(pi)")]
    NotCommensurate,

    #[error("grid is not self-dual (x_max * dx must equal pi)")]
    NotSelfDual,

    #[error("fold period {period} is not an integer multiple of dx = {dx}")]
    IncommensuratePeriod { period: f64, dx: f64 },

    #[error("folded output would have {0} samples; need a power of two >= 16")]
    BadFoldLattice(usize),

    #[error("state has zero norm and cannot be normalized")]
    ZeroNorm,

    #[error("squeezing parameter must be positive, got {0}")]
    BadSqueezing(f64),

    #[error("logical bit must be 0 or 1, got {0}")]
    BadBit(u8),

    #[error("envelope tail mass {tail:.3e} beyond x_max exceeds 1e-12; widen the grid")]
    EnvelopeTruncation { tail: f64 },

    #[error("bin edges at half-integer multiples of sqrt(pi) are off-grid (samples per sqrt(pi) must be even)")]
    BinEdgesOffGrid,

    #[error("state must be normalized before decoding (norm^2 = {0})")]
    NotNormalized(f64),

    #[error("k_max must be >= 1, got {0}")]
    BadKmax(i64),

    #[error("density matrix is not a valid qubit state: {0}")]
    BadDensityMatrix(String),

    #[error("closed-form input must be positive, got delta_x = {dx}, delta_p = {dp}")]
    BadClosedFormInput { dx: f64, dp: f64 },

    #[error("gaussian_integral requires Re(a) > 0, got {0}")]
    BadGaussianExponent(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
