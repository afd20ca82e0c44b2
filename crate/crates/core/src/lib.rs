//! Numerical evaluation of generalized power sums, harmonic progressions,
//! and the Riemann and Hurwitz zeta functions for complex arguments.
//!
//! The finite sum `sum_{j=1}^{n} j^k` is an entire function of `k` away
//! from `k = -1`, and this crate evaluates that continuation (and its
//! offset generalization `sum (j+b)^k`) through exact integral
//! representations built from a csch^2-weighted "power-cosine deficit"
//! kernel. The same kernel, taken to the `n -> infinity` limit, yields the
//! Riemann and Hurwitz zeta functions everywhere off their pole, so zeta
//! values, power sums, and harmonic progressions all flow through one
//! error-controlled quadrature core.
//!
//! Everything is cross-checked at runtime: each quantity has at least two
//! arithmetically independent routes (direct summation, exact Bernoulli
//! closed forms, an accelerated series oracle, reflection identities), and
//! [`selftest`] packages those checks for the command-line `selftest`
//! command.
//!
//! Evaluators are generic over the scalar type through [`scalar::Real`]
//! (implemented for `f32` and `f64`); results carry their own error
//! estimate, evaluation count, and convergence flag in
//! [`EvalResult`].

// Coefficient tables and reference constants quote their full published
// precision; the compiler rounds them once, which is the point.
#![allow(clippy::excessive_precision)]

pub mod bernoulli;
pub mod complexfn;
pub mod gamma;
pub mod hurwitz;
mod integrands;
pub mod powersum;
pub mod quadrature;
pub mod scalar;
pub mod selftest;
pub mod zeta;

pub use num_complex::Complex;

pub use quadrature::{EvalResult, QuadratureConfig};
pub use scalar::Real;

/// Complex double-precision value, the default working type.
pub type C64 = Complex<f64>;
/// Complex single-precision value.
pub type C32 = Complex<f32>;

/// Everything that can go wrong in an evaluation. Domain, pole, and
/// singular-parameter rejections are deliberate refusals of inputs the
/// formulas do not cover; capacity marks stated design limits; a NaN from
/// inside an integrand is a hard fault that names the abscissa rather than
/// letting quiet NaNs launder through a quadrature sum.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input outside the validated domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Evaluation at (or numerically too close to) a pole of the function.
    #[error("pole: {0}")]
    Pole(String),
    /// A parameter value at which the whole representation degenerates,
    /// like the harmonic exponent k = -1.
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    /// A stated design limit (table sizes, floating-point range) exceeded.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// The integrand produced NaN; reported instead of corrupting the sum.
    #[error("integrand evaluated to NaN at abscissa {abscissa:e}")]
    IntegrandNan { abscissa: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
