//! Quadrature for finite Hankel transforms
//!
//! Evaluates integrals of the form
//!
//! ```text
//!     H[f] = integral_a^b f(x) J_nu(omega g(x)) dx
//! ```
//!
//! for large `omega`, where `J_nu` is a Bessel function of the first kind.
//! Classical quadrature needs O(omega) points to resolve the oscillation;
//! the methods here instead exploit it, with errors that *decrease* as
//! `omega` grows.

pub mod applications;
pub mod error;
pub mod expr;
pub mod interp;
pub mod jets;
pub mod methods;
pub mod moments;
pub mod oracle;
pub mod sigma;
pub mod specfun;
pub mod transform;

pub use applications::{airy_transform, fourier_bessel_coeffs, FourierBesselSeries, MethodChoice};
pub use num_complex::Complex64;
pub use error::{Error, Result};
pub use expr::{classify_oscillator, CriticalKind, CriticalPoint, ExprFunction, StationaryType};
pub use jets::{Jet, SmoothFn};
pub use methods::{
    asymptotic_plain, asymptotic_stationary, asymptotic_zero, filon, filon_coeffs, FilonBasis,
    FilonPlan, RemainderIntegrand, StationaryPosition,
};
pub use oracle::{integrate_bessel, reference_hankel, OracleResult};
pub use moments::{
    generalized_moments, modified_moments, modified_moments_stationary, moment_power,
    zero_case_moment, MomentTable, Provenance,
};
pub use sigma::{sigma_hat, sigma_hat_boundary, sigma_plain, sigma_tilde, SigmaHatTable};
pub use transform::TransformSpec;
