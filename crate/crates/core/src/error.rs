use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at x = {x}")]
    Pole { function: &'static str, x: f64 },

    #[error("radius {r} outside the radial domain [0, {boundary})")]
    Domain { r: f64, boundary: f64 },

    #[error("invalid physical scales: mass, alpha and hbar must be finite and positive")]
    InvalidScales,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid quantum numbers (n_r = {n_r}, l = {l}, m = {m})")]
    InvalidQuantumNumbers { n_r: u32, l: u32, m: i32 },

    #[error("no bound state with n = {n}: hyperbolic cutoff requires n < {cutoff}")]
    NoBoundState { n: u32, cutoff: f64 },

    #[error("hypergeometric parameters are complex (B = {b} < 0)")]
    ComplexParameters { b: f64 },

    #[error("hypergeometric series does not terminate (a = {a})")]
    NonTerminating { a: f64 },

    #[error("normalization integral diverges for n = {n} (cutoff {cutoff})")]
    DivergentNorm { n: u32, cutoff: f64 },

    #[error("numerical non-convergence: {0}")]
    NonConvergence(String),

    #[error("requested {requested} eigenvalues but only {available} lie below the continuum")]
    ExceedsDiscreteSpectrum { requested: usize, available: usize },

    #[error("trajectory reached the potential wall at t = {t} (r = {r})")]
    WallCollision { t: f64, r: f64 },
}
