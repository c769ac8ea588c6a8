//! Positive zeros of J_nu, by asymptotic seed plus Newton iteration.

use super::bessel::bessel_j;
use crate::error::{Error, Result};

/// Negative zeros of the Airy function Ai, used to seed the first two Bessel
/// zeros once the order is large enough that McMahon's expansion degrades.
const AIRY_NEG_ZEROS: [f64; 2] = [2.338_107_410_459_767_04, 4.087_949_444_130_970_62];

/// McMahon's large-zero expansion: accurate for k well past the order.
fn mcmahon_seed(nu: f64, k: u32) -> f64 {
    let beta = (k as f64 + 0.5 * nu - 0.25) * std::f64::consts::PI;
    let mu = 4.0 * nu * nu;
    let e = 8.0 * beta;
    beta - (mu - 1.0) / e
        - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e.powi(3))
        - 32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * e.powi(5))
}

/// Uniform large-order seed: j_{nu,k} = nu + d k-th-Airy nu^{1/3} + ...,
/// with d = |a_k| / 2^{1/3}.
fn airy_seed(nu: f64, k: u32) -> f64 {
    let delta = AIRY_NEG_ZEROS[(k - 1) as usize] / 2f64.cbrt();
    let c = nu.cbrt();
    nu + delta * c + 0.3 * delta * delta / c
}

/// k-th positive zero of J_nu (k counts from 1), for nu >= 0.
pub fn bessel_zero(nu: f64, k: u32) -> Result<f64> {
    if !(nu >= 0.0) {
        return Err(Error::Domain(format!("bessel_zero needs nu >= 0, got {nu}")));
    }
    if k == 0 {
        return Err(Error::Domain("zeros are indexed from k = 1".into()));
    }
    let mut x = if k <= 2 && nu >= 8.0 {
        airy_seed(nu, k)
    } else {
        mcmahon_seed(nu, k)
    };
    let mut last_dx = f64::INFINITY;
    for _ in 0..40 {
        let j = bessel_j(nu, x);
        let dj = 0.5 * (bessel_j(nu - 1.0, x) - bessel_j(nu + 1.0, x));
        if dj == 0.0 {
            return Err(Error::Numerical(format!("flat Newton step at x = {x}")));
        }
        let dx = j / dj;
        x -= dx;
        if dx.abs() <= 1e-14 * x {
            return Ok(x);
        }
        // Steps that stop shrinking while already tiny are chatter at the
        // evaluation noise floor of J itself; the iterate is as good as it
        // will get.
        if dx.abs() < 1e-8 && dx.abs() >= 0.5 * last_dx {
            return Ok(x);
        }
        last_dx = dx.abs();
    }
    Err(Error::ToleranceUnreachable { tol: 1e-14, best: f64::NAN })
}
