//! The transform being computed: integral over [a, b] of f(x) J_nu(omega g(x)).

use crate::error::{Error, Result};
use crate::expr::ExprFunction;

/// Full problem statement for one transform evaluation.
///
/// Existence constraints on nu depend on the critical-point structure of g
/// and are enforced by the method constructors, not here.
#[derive(Debug, Clone)]
pub struct TransformSpec {
    pub f: ExprFunction,
    pub g: ExprFunction,
    pub a: f64,
    pub b: f64,
    pub nu: f64,
    pub omega: f64,
}

impl TransformSpec {
    pub fn new(
        f: ExprFunction,
        g: ExprFunction,
        a: f64,
        b: f64,
        nu: f64,
        omega: f64,
    ) -> Result<Self> {
        if !(a < b) {
            return Err(Error::Domain(format!("need a < b, got [{a}, {b}]")));
        }
        if !(omega > 0.0) {
            return Err(Error::Domain(format!("need omega > 0, got {omega}")));
        }
        if !nu.is_finite() {
            return Err(Error::Domain(format!("non-finite order {nu}")));
        }
        Ok(Self { f, g, a, b, nu, omega })
    }

    /// Same transform statement with fresh frequency.
    pub fn with_omega(&self, omega: f64) -> Self {
        Self { omega, ..self.clone() }
    }
}
