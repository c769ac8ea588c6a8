//! The slowly-varying coefficient sequences that drive every asymptotic
//! method in this crate.
//!
//! Three variants share one recursion shape
//!
//! ```text
//!     next(s) = d/dx[(s - P[s]) / g'] - (nu + k + 1) (s - P[s]) / g
//! ```
//!
//! differing in the projection P: zero for the plain sequence (g nonzero
//! throughout), the value at the oscillator zero for the tilde sequence, and
//! the degree-r Taylor polynomial at the stationary point for the hat
//! sequence. At a critical point the quotients are removable; they are
//! cancelled exactly in jet space by dropping coefficients that the
//! projection has zeroed, never by dividing nearly-equal numbers.

use crate::error::{Error, Result};
use crate::jets::{poly_recenter, Jet, SmoothFn};

/// sigma_k values at x for k = 0..=k_max, for an oscillator with no critical
/// point at x.
///
/// Fails with a method-direction hint if g or g' vanishes at x; those points
/// belong to the tilde/hat variants.
pub fn sigma_plain(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    k_max: usize,
    x: f64,
) -> Result<Vec<f64>> {
    Ok(plain_levels(f, g, nu, k_max, x, 1)?.iter().map(|j| j.coeff(0)).collect())
}

/// Jet of the k_max-th plain sequence member at a regular point, carrying
/// `keep` coefficients.
pub(crate) fn sigma_plain_jet(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    k_max: usize,
    x: f64,
    keep: usize,
) -> Result<Jet> {
    Ok(plain_levels(f, g, nu, k_max, x, keep)?.pop().expect("levels nonempty"))
}

fn plain_levels(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    k_max: usize,
    x: f64,
    keep: usize,
) -> Result<Vec<Jet>> {
    let n0 = k_max + keep.max(1);
    let g_jet = g.jet(x, n0 + 1)?;
    let gp_jet = g_jet.derivative();
    if g_jet.coeff(0) == 0.0 {
        return Err(Error::WrongMethod(format!(
            "oscillator vanishes at x = {x}; use the zero-case coefficients"
        )));
    }
    if gp_jet.coeff(0) == 0.0 {
        return Err(Error::WrongMethod(format!(
            "oscillator is stationary at x = {x}; use the stationary-case coefficients"
        )));
    }
    let mut s = f.jet(x, n0)?;
    let mut levels = Vec::with_capacity(k_max + 1);
    levels.push(s.clone());
    for k in 0..k_max {
        let len = n0 - k;
        let t_deriv = s.div(&gp_jet)?.truncated(len).derivative();
        let t_alg = s.div(&g_jet)?.truncated(len - 1);
        s = t_deriv.sub(&t_alg.scale(nu + k as f64 + 1.0))?.truncated(len - 1);
        levels.push(s.clone());
    }
    Ok(levels)
}

/// Jets of the critical-point sequence at the critical point itself.
/// r = 0 is the oscillator-zero case; r >= 1 the stationary case of order r
/// (all of g', ..., g^(r) vanish there along with g).
fn critical_jets(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    c: f64,
    r: u32,
    k_max: usize,
    keep: usize,
) -> Result<Vec<Jet>> {
    let rp1 = (r + 1) as usize;
    // Each level costs r+1 coefficients; budget so the last level still
    // carries `keep` of them.
    let n0 = k_max * rp1 + keep.max(rp1 + 1) + 1;
    let g_jet = g.jet(c, n0 + rp1)?;
    let gp_full = g_jet.derivative();
    let u = g_jet.shift_div_power(rp1).map_err(wrong_order(c))?;
    let v = gp_full.shift_div_power(r as usize).map_err(wrong_order(c))?;

    let mut s = f.jet(c, n0)?;
    let mut levels = vec![s.clone()];
    for k in 0..k_max {
        let len = s.len();
        // Subtracting the degree-r Taylor polynomial zeroes the first r+1
        // coefficients exactly.
        let mut coeffs = s.coeffs().to_vec();
        for cj in coeffs.iter_mut().take(rp1) {
            *cj = 0.0;
        }
        let w = Jet::new(c, coeffs)?.shift_div_power(rp1)?;
        let t_deriv = w.div(&v)?.truncated(len - rp1).shift_mul_power(1).derivative();
        let t_alg = w.div(&u)?.truncated(len - rp1);
        s = t_deriv.sub(&t_alg.scale(nu + k as f64 + 1.0))?.truncated(len - rp1);
        levels.push(s.clone());
    }
    Ok(levels)
}

fn wrong_order(c: f64) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::NonRemovable(msg) => Error::NonRemovable(format!(
            "oscillator expansion at {c} does not match the declared critical order: {msg}"
        )),
        other => other,
    }
}

/// Jets of the critical sequence away from the critical point, given the
/// Taylor projections precomputed there; the last level keeps `keep`
/// coefficients.
fn boundary_walk(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    c: f64,
    r: u32,
    taylors: &[Vec<f64>],
    k_max: usize,
    x: f64,
    keep: usize,
) -> Result<Vec<Jet>> {
    let n0 = k_max + keep.max(1);
    let g_jet = g.jet(x, n0 + 1)?;
    let gp_jet = g_jet.derivative();
    if g_jet.coeff(0) == 0.0 || gp_jet.coeff(0) == 0.0 {
        return Err(Error::WrongMethod(format!(
            "x = {x} is itself critical; boundary evaluation expects a regular point"
        )));
    }
    let _ = r;
    let mut s = f.jet(x, n0)?;
    let mut levels = Vec::with_capacity(k_max + 1);
    levels.push(s.clone());
    for k in 0..k_max {
        let len = n0 - k;
        let w = s.sub(&poly_recenter(&taylors[k], c, x, len))?;
        let t_deriv = w.div(&gp_jet)?.truncated(len).derivative();
        let t_alg = w.div(&g_jet)?.truncated(len - 1);
        s = t_deriv.sub(&t_alg.scale(nu + k as f64 + 1.0))?.truncated(len - 1);
        levels.push(s.clone());
    }
    Ok(levels)
}

/// Jet of the k_max-th critical-sequence member at a regular point x, given
/// the degree-r Taylor projections at the critical point.
pub(crate) fn critical_boundary_jet(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    c: f64,
    r: u32,
    taylors: &[Vec<f64>],
    k_max: usize,
    x: f64,
    keep: usize,
) -> Result<Jet> {
    Ok(boundary_walk(f, g, nu, c, r, taylors, k_max, x, keep)?
        .pop()
        .expect("levels nonempty"))
}

/// Zero-case sequence: values at x, where x may equal the oscillator zero xi
/// (the removable-singularity evaluation) or lie elsewhere in the interval.
pub fn sigma_tilde(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    xi: f64,
    k_max: usize,
    x: f64,
) -> Result<Vec<f64>> {
    let levels = critical_jets(f, g, nu, xi, 0, k_max, 1)?;
    if x == xi {
        return Ok(levels.iter().map(|j| j.coeff(0)).collect());
    }
    let taylors: Vec<Vec<f64>> = levels.iter().map(|j| vec![j.coeff(0)]).collect();
    Ok(boundary_walk(f, g, nu, xi, 0, &taylors, k_max, x, 1)?
        .iter()
        .map(|j| j.coeff(0))
        .collect())
}

/// Stationary-case sequence and everything the quadrature methods read from
/// it: derivatives at the stationary point and values at regular points.
#[derive(Debug, Clone)]
pub struct SigmaHatTable {
    zeta: f64,
    r: u32,
    jets_at_zeta: Vec<Jet>,
}

impl SigmaHatTable {
    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn order_r(&self) -> u32 {
        self.r
    }

    pub fn k_max(&self) -> usize {
        self.jets_at_zeta.len() - 1
    }

    /// Value of the k-th sequence member at the stationary point.
    pub fn value_at_zeta(&self, k: usize) -> f64 {
        self.jets_at_zeta[k].coeff(0)
    }

    /// j-th derivative of the k-th member at the stationary point.
    pub fn deriv_at_zeta(&self, k: usize, j: usize) -> f64 {
        self.jets_at_zeta[k].derivative_value(j)
    }

    /// Taylor coefficients of degree 0..=r at the stationary point: the
    /// projection subtracted at each recursion level.
    pub fn taylor_coeffs(&self, k: usize) -> Vec<f64> {
        (0..=self.r as usize).map(|j| self.jets_at_zeta[k].coeff(j)).collect()
    }

    /// Stored jet of the k-th member at the stationary point, with every
    /// kept coefficient (not just the degree-r projection).
    pub fn level_jet(&self, k: usize) -> &Jet {
        &self.jets_at_zeta[k]
    }
}

/// Builds the stationary-case table at a type-II stationary point of order r.
/// Derivatives at zeta are reliable for j = 0..=j_max.
pub fn sigma_hat(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    zeta: f64,
    r: u32,
    k_max: usize,
    j_max: usize,
) -> Result<SigmaHatTable> {
    let levels = critical_jets(f, g, nu, zeta, r, k_max, j_max + 1)?;
    Ok(SigmaHatTable { zeta, r, jets_at_zeta: levels })
}

/// Stationary-case values at a regular point x, consistent with `table`.
pub fn sigma_hat_boundary(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    nu: f64,
    table: &SigmaHatTable,
    k_max: usize,
    x: f64,
) -> Result<Vec<f64>> {
    if k_max + 1 > table.jets_at_zeta.len() {
        return Err(Error::Numerical(format!(
            "table holds {} levels, boundary walk wants {}",
            table.jets_at_zeta.len(),
            k_max + 1
        )));
    }
    let taylors: Vec<Vec<f64>> = (0..k_max).map(|k| table.taylor_coeffs(k)).collect();
    Ok(boundary_walk(f, g, nu, table.zeta, table.r, &taylors, k_max, x, 1)?
        .iter()
        .map(|j| j.coeff(0))
        .collect())
}
