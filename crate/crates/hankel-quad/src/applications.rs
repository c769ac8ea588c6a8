//! Two integral families reduced to the core transform machinery: the Airy
//! transform and Fourier-Bessel series coefficients.
//!
//! The Airy transform I[f] = integral_0^b f(x) Ai(-omega x) dx splits, via
//! Ai(-z) = (sqrt(z)/3)(J_{1/3} + J_{-1/3})((2/3) z^{3/2}) and x = t^2, into
//! two transforms of t^2 f(t^2) with oscillator t^3 on [0, sqrt(b)] at
//! frequency (2/3) omega^{3/2}: an order-2 stationary endpoint case at
//! orders +-1/3. Fourier-Bessel coefficients are endpoint-zero transforms
//! of x f(x) with oscillator x at frequencies j_{nu,k}/b.

use crate::error::{Error, Result};
use crate::expr::ExprFunction;
use crate::jets::SmoothFn;
use crate::methods::{
    asymptotic_stationary, asymptotic_zero, filon, horner, FilonBasis, FilonPlan,
    StationaryPosition,
};
use crate::moments::moment_power;
use crate::oracle::integrate_bessel;
use crate::sigma::{sigma_hat, sigma_hat_boundary};
use crate::specfun::{bessel_j, bessel_zero};
use crate::transform::TransformSpec;

/// How a reduced transform should be evaluated once its effective frequency
/// is past the oracle crossover.
#[derive(Debug, Clone)]
pub enum MethodChoice {
    /// Truncated asymptotic expansion of the matching case.
    Asymptotic { m: usize },
    /// Modified Filon rule; the plan must live on the reduced interval and
    /// carry the basis of the matching case.
    Filon { plan: FilonPlan },
}

/// Below this effective frequency asymptotic machinery has nothing to offer
/// and the reference integrator answers instead.
const ORACLE_CROSSOVER: f64 = 30.0;
const ORACLE_TOL: f64 = 1e-12;

/// Fourier-Bessel expansion data: coefficients a_1..a_K of f against
/// J_nu(j_{nu,k} x / b) on [0, b], together with the Bessel zeros used.
#[derive(Debug, Clone)]
pub struct FourierBesselSeries {
    pub nu: f64,
    pub b: f64,
    pub coeffs: Vec<f64>,
    pub zeros_used: Vec<f64>,
}

/// Airy transform integral_0^b f(x) Ai(-omega x) dx via the two-Bessel
/// reduction.
///
/// The order -1/3 half sits exactly on the existence boundary for an
/// order-2 stationary point: its k = 0, j = 0 expansion moment diverges.
/// The reduction's amplitude t^2 f(t^2) vanishes to second order at t = 0,
/// so that moment always meets an exactly-zero coefficient and is skipped;
/// the marginal half is evaluated by its asymptotic expansion even under
/// `Filon` routing (the Filon moment table would need the divergent entry).
pub fn airy_transform(
    f: &ExprFunction,
    b: f64,
    omega: f64,
    method: &MethodChoice,
) -> Result<f64> {
    if !(b > 0.0) {
        return Err(Error::Domain(format!("need b > 0, got {b}")));
    }
    if !(omega > 0.0) {
        return Err(Error::Domain(format!("need omega > 0, got {omega}")));
    }
    let bhat = b.sqrt();
    let what = 2.0 / 3.0 * omega.powf(1.5);
    let prefactor = 2.0 * omega.sqrt() / 3.0;
    let inner = ExprFunction::parse("x^2")?;
    let fh = inner.product(&f.substitute(&inner));
    let g = ExprFunction::parse("x^3")?;

    if what < ORACLE_CROSSOVER {
        let hp = integrate_bessel(&fh, &g, 0.0, bhat, 1.0 / 3.0, what, ORACLE_TOL)?.value;
        let hm = integrate_bessel(&fh, &g, 0.0, bhat, -1.0 / 3.0, what, ORACLE_TOL)?.value;
        return Ok(prefactor * (hp + hm));
    }

    let sp = TransformSpec::new(fh.clone(), g.clone(), 0.0, bhat, 1.0 / 3.0, what)?;
    let (h_plus, m_minus) = match method {
        MethodChoice::Asymptotic { m } => (
            asymptotic_stationary(&sp, 0.0, 2, *m, StationaryPosition::LeftEndpoint)?,
            *m,
        ),
        MethodChoice::Filon { plan } => {
            if plan.basis() != (FilonBasis::Stationary { r: 2 }) {
                return Err(Error::WrongMethod(
                    "Airy reduction is an order-2 stationary case; the plan needs the \
                     matching fractional-power basis"
                        .into(),
                ));
            }
            (filon(&sp, plan)?.re, 4)
        }
    };
    let h_minus = marginal_stationary_expansion(&fh, &g, -1.0 / 3.0, what, bhat, 2, m_minus)?;
    Ok(prefactor * (h_plus + h_minus))
}

/// Endpoint stationary expansion with term-by-term existence checks, for
/// orders on or past the blanket bound of the standard method. A divergent
/// moment (power p with p + order <= -1) is admitted only against a
/// coefficient that is exactly zero; anything else is a hard error, since
/// no finite value can stand in for that term.
fn marginal_stationary_expansion(
    fh: &ExprFunction,
    g: &ExprFunction,
    nu: f64,
    omega: f64,
    bhat: f64,
    r: u32,
    m: usize,
) -> Result<f64> {
    let rp1 = (r + 1) as f64;
    let table = sigma_hat(fh, g, nu, 0.0, r, m, r as usize)?;
    let big_b = bhat.powi(r as i32 + 1);
    let mut q = 0.0;
    let mut pow = 1.0;
    for k in 0..m {
        if k > 0 {
            pow /= -omega;
        }
        let tc = table.taylor_coeffs(k);
        let scale = tc.iter().fold(0.0f64, |a, c| a.max(c.abs()));
        let nu_k = nu + k as f64;
        for (j, cj) in tc.iter().enumerate() {
            let p = (j as f64 - r as f64) / rp1;
            if p + nu_k <= -1.0 {
                if cj.abs() > 1e-14 * (1.0 + scale) {
                    return Err(Error::Domain(format!(
                        "expansion term k={k}, j={j} pairs a divergent moment with \
                         coefficient {cj}; order {nu} lies outside the method's range \
                         for this amplitude"
                    )));
                }
                continue;
            }
            let mj = bhat.powi(j as i32 + 1) / rp1 * moment_power(p, nu_k, omega * big_b)?;
            q += cj * mj * pow;
        }
    }
    let bvals = sigma_hat_boundary(fh, g, nu, &table, m - 1, bhat)?;
    let gj = g.jet(bhat, 2)?;
    let (gb, gpb) = (gj.coeff(0), gj.coeff(1));
    let mut pw = 1.0;
    for k in 1..=m {
        pw /= -omega;
        let tc = table.taylor_coeffs(k - 1);
        let tb = (bvals[k - 1] - horner(&tc, bhat)) / gpb * bessel_j(nu + k as f64, omega * gb);
        q -= tb * pw;
    }
    Ok(q)
}

/// Coefficients a_1..a_K of the Fourier-Bessel expansion of f on [0, b]:
/// a_k = 2 / (b J_{nu+1}(j_{nu,k}))^2 * integral_0^b x f(x) J_nu(j_{nu,k} x/b) dx.
///
/// Each coefficient is an endpoint-zero transform at effective frequency
/// j_{nu,k}/b; frequencies under the crossover use the reference
/// integrator, the rest go through `method`.
pub fn fourier_bessel_coeffs(
    f: &ExprFunction,
    b: f64,
    nu: f64,
    count: usize,
    method: &MethodChoice,
) -> Result<FourierBesselSeries> {
    if !(b > 0.0) {
        return Err(Error::Domain(format!("need b > 0, got {b}")));
    }
    if !(nu > -1.0) {
        return Err(Error::Domain(format!("need order nu > -1, got {nu}")));
    }
    let x_expr = ExprFunction::parse("x")?;
    let xf = x_expr.product(f);
    let mut coeffs = Vec::with_capacity(count);
    let mut zeros_used = Vec::with_capacity(count);
    for k in 1..=count {
        let jk = bessel_zero(nu, k as u32)?;
        let wk = jk / b;
        let h = if wk < ORACLE_CROSSOVER {
            integrate_bessel(&xf, &x_expr, 0.0, b, nu, wk, ORACLE_TOL)?.value
        } else {
            let sp = TransformSpec::new(xf.clone(), x_expr.clone(), 0.0, b, nu, wk)?;
            match method {
                MethodChoice::Asymptotic { m } => asymptotic_zero(&sp, 0.0, *m)?.re,
                MethodChoice::Filon { plan } => filon(&sp, plan)?.re,
            }
        };
        let denom = b * bessel_j(nu + 1.0, jk);
        let a_k = 2.0 / (denom * denom) * h;
        if !a_k.is_finite() {
            return Err(Error::Numerical(format!(
                "coefficient {k} is not finite (zero {jk}, normalization {denom})"
            )));
        }
        coeffs.push(a_k);
        zeros_used.push(jk);
    }
    Ok(FourierBesselSeries { nu, b, coeffs, zeros_used })
}
