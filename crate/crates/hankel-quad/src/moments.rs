//! Moment machinery: Bessel power moments on [0,1], modified-moment tables
//! with stability-gated recurrences, and the special moments consumed by the
//! zero-case and stationary-case methods.
//!
//! All tables carry complex entries so the analytic-continuation phase for
//! negative oscillator values (J_nu(-z) = e^{i nu pi} J_nu(z)) flows through
//! recurrences unchanged; integer orders collapse back to reals and callers
//! can demand that via `real_values`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::interp::{binomial_table, hermite_coeffs};
use crate::jets::{Jet, SmoothFn};
use crate::oracle::integrate_bessel;
use crate::specfun::{bessel_j, gamma, lommel_s, rgamma};

/// x^mu viewed as a smooth function away from the origin (polynomial when mu
/// is a small non-negative integer, so jets at 0 work there too).
struct PowerFn {
    mu: f64,
}

impl SmoothFn for PowerFn {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        if self.mu >= 0.0 && self.mu.fract() == 0.0 && self.mu <= 64.0 {
            return Ok(Jet::variable(center, n).powi(self.mu as u32));
        }
        Jet::variable(center, n).powf(self.mu)
    }
}

/// The identity oscillator g(x) = x.
struct IdentityFn;

impl SmoothFn for IdentityFn {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        Ok(Jet::variable(center, n))
    }
}

/// (x - zeta)^j.
struct ShiftedPower {
    zeta: f64,
    j: u32,
}

impl SmoothFn for ShiftedPower {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        Ok(Jet::variable(center, n).add_scalar(-self.zeta).powi(self.j))
    }
}

/// Constant 1.
struct OneFn;

impl SmoothFn for OneFn {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        Ok(Jet::constant(center, 1.0, n))
    }
}

/// Sign-flipped view of another function.
struct NegFn<'a>(&'a dyn SmoothFn);

impl SmoothFn for NegFn<'_> {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        Ok(self.0.jet(center, n)?.scale(-1.0))
    }
}

/// e^{i nu pi}, exact (+-1) at integer orders.
pub(crate) fn branch_phase(nu: f64) -> Complex64 {
    if nu.fract() == 0.0 {
        let s = if (nu as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        return Complex64::new(s, 0.0);
    }
    Complex64::new((nu * PI).cos(), (nu * PI).sin())
}

/// J_order(w u) continued to negative u through the phase convention.
pub(crate) fn bessel_j_signed(order: f64, wu: f64) -> Complex64 {
    if wu >= 0.0 {
        Complex64::new(bessel_j(order, wu), 0.0)
    } else {
        branch_phase(order) * bessel_j(order, -wu)
    }
}

/// d/dz J_order at w u, continued like `bessel_j_signed`.
fn bessel_jp_signed(order: f64, wu: f64) -> Complex64 {
    (bessel_j_signed(order - 1.0, wu) - bessel_j_signed(order + 1.0, wu)) * 0.5
}

/// int_0^1 x^mu J_nu(omega x) dx.
///
/// Routed through the Gamma/Lommel closed form whenever both asymptotic
/// Lommel evaluations certify themselves, otherwise through a split
/// series-plus-quadrature evaluation. Requires mu + nu > -1.
pub fn moment_power(mu: f64, nu: f64, omega: f64) -> Result<f64> {
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    if !(mu + nu > -1.0) {
        return Err(Error::Domain(format!(
            "power moment needs mu + nu > -1, got mu = {mu}, nu = {nu}"
        )));
    }
    if mu == nu + 1.0 {
        // d/dz [z^{nu+1} J_{nu+1}(z)] = z^{nu+1} J_nu(z) makes this exact.
        return Ok(bessel_j(nu + 1.0, omega) / omega);
    }
    if let Some(v) = moment_power_closed(mu, nu, omega) {
        return Ok(v);
    }
    moment_power_oracle(mu, nu, omega)
}

/// True when `moment_power` resolves through a closed form at these
/// arguments rather than the series-plus-quadrature fallback.
pub(crate) fn moment_power_is_closed(mu: f64, nu: f64, omega: f64) -> bool {
    mu == nu + 1.0 || moment_power_closed(mu, nu, omega).is_some()
}

/// Closed form via the Lommel function; None when the asymptotic series
/// cannot certify 1e-10 relative accuracy at this argument.
pub(crate) fn moment_power_closed(mu: f64, nu: f64, omega: f64) -> Option<f64> {
    let half_sum = (nu + mu + 1.0) / 2.0;
    let lead = match gamma(half_sum) {
        Ok(gv) => 2f64.powf(mu) * gv * rgamma((nu - mu + 1.0) / 2.0) / omega.powf(mu + 1.0),
        Err(_) => return None,
    };
    let s1 = lommel_s(mu - 1.0, nu - 1.0, omega);
    let s2 = lommel_s(mu, nu, omega);
    let jn = bessel_j(nu, omega);
    let jn1 = bessel_j(nu - 1.0, omega);
    let tail = ((mu + nu - 1.0) * jn * s1.value - jn1 * s2.value) / omega.powf(mu);
    let est =
        ((mu + nu - 1.0).abs() * jn.abs() * s1.est + jn1.abs() * s2.est) / omega.powf(mu);
    let scale = lead.abs().max(tail.abs());
    if scale > 0.0 && est <= 1e-10 * scale && (lead + tail).is_finite() {
        Some(lead + tail)
    } else {
        None
    }
}

/// Direct evaluation: Bessel series over [0, delta] (which absorbs any
/// algebraic endpoint singularity from x^mu exactly), oscillation-resolving
/// quadrature over the rest.
pub(crate) fn moment_power_oracle(mu: f64, nu: f64, omega: f64) -> Result<f64> {
    let delta = if omega <= 4.0 { 1.0 } else { 4.0 / omega };
    let half = omega * delta / 2.0;
    let mut sum = 0.0f64;
    let mut coef = rgamma(nu + 1.0) * half.powf(nu) * delta.powf(mu + 1.0);
    for m in 0..400 {
        let fm = m as f64;
        let term = coef / (mu + nu + 2.0 * fm + 1.0);
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() + 1e-300 {
            break;
        }
        coef *= -half * half / ((fm + 1.0) * (nu + fm + 1.0));
    }
    if delta >= 1.0 {
        return Ok(sum);
    }
    let tail = integrate_bessel(
        &PowerFn { mu },
        &IdentityFn,
        delta,
        1.0,
        nu,
        omega,
        1e-13,
    )?;
    Ok(sum + tail.value)
}

/// int_0^c u^k J_nu(omega u) du for integer k >= 0, with the branch phase
/// when c is negative.
fn partial_u_moment(k: usize, nu: f64, omega: f64, c: f64) -> Result<Complex64> {
    if c == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let m = moment_power(k as f64, nu, omega * c.abs())?;
    let scaled = c.powi(k as i32 + 1) * m;
    if c > 0.0 {
        Ok(Complex64::new(scaled, 0.0))
    } else {
        Ok(branch_phase(nu) * scaled)
    }
}

/// How a moment table entry was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    Recurrence,
    Oracle,
}

/// An immutable run of moments mu_0..mu_{n-1} with per-entry provenance.
#[derive(Debug, Clone)]
pub struct MomentTable {
    pub values: Vec<Complex64>,
    pub provenance: Vec<Provenance>,
    /// Largest index the forward recurrence is trusted for at this (nu, omega).
    pub stable_upto: usize,
    /// True when a negative oscillator range and non-integer order make
    /// entries genuinely complex.
    pub complex_flagged: bool,
}

impl MomentTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Real parts, provided every imaginary residue is negligible against
    /// the table's magnitude.
    pub fn real_values(&self) -> Result<Vec<f64>> {
        let mag = self.values.iter().map(|v| v.norm()).fold(0.0f64, f64::max);
        for (k, v) in self.values.iter().enumerate() {
            if v.im.abs() > 1e-10 * mag {
                return Err(Error::Numerical(format!(
                    "moment {k} has imaginary residue {:e} against magnitude {mag:e}",
                    v.im
                )));
            }
        }
        Ok(self.values.iter().map(|v| v.re).collect())
    }
}

fn stable_index_plain(nu: f64, omega: f64) -> usize {
    ((nu * nu + omega * omega).sqrt() - 1.0).floor().max(0.0) as usize
}

/// Modified moments mu_k = int_a^b g'(x) g(x)^k J_nu(omega g(x)) dx.
///
/// The substitution u = g(x) reduces everything to [g(a), g(b)]; initial
/// entries come from `moment_power`, the middle from the three-term
/// recurrence inside its forward-stable range, and the rest from
/// `moment_power`'s self-validating routing (recorded as oracle entries).
/// When the range straddles 0 the negative part carries the branch phase.
pub fn modified_moments(
    g: &dyn SmoothFn,
    a: f64,
    b: f64,
    nu: f64,
    omega: f64,
    n: usize,
) -> Result<MomentTable> {
    if n == 0 {
        return Ok(MomentTable {
            values: vec![],
            provenance: vec![],
            stable_upto: 0,
            complex_flagged: false,
        });
    }
    let stable_upto = stable_index_plain(nu, omega);
    if a == b {
        return Ok(MomentTable {
            values: vec![Complex64::new(0.0, 0.0); n],
            provenance: vec![Provenance::ClosedForm; n],
            stable_upto,
            complex_flagged: false,
        });
    }
    let ga = g.value(a)?;
    let gb = g.value(b)?;
    let complex_flagged = ga.min(gb) < 0.0 && nu.fract() != 0.0;

    let mut values = Vec::with_capacity(n);
    let mut provenance = Vec::with_capacity(n);
    for k in 0..n.min(2) {
        values.push(partial_u_moment(k, nu, omega, gb)? - partial_u_moment(k, nu, omega, ga)?);
        let closed = [ga, gb]
            .iter()
            .filter(|c| **c != 0.0)
            .all(|c| moment_power_is_closed(k as f64, nu, omega * c.abs()));
        provenance.push(if closed { Provenance::ClosedForm } else { Provenance::Oracle });
    }

    // Boundary data for the recurrence, phase-continued where needed.
    let j_a = bessel_j_signed(nu, omega * ga);
    let j_b = bessel_j_signed(nu, omega * gb);
    let jp_a = bessel_jp_signed(nu, omega * ga);
    let jp_b = bessel_jp_signed(nu, omega * gb);

    for k in 2..n {
        if k <= stable_upto {
            let km1 = (k - 1) as f64;
            let head = (nu * nu - km1 * km1) / (omega * omega) * values[k - 2];
            let value_term =
                (km1 / (omega * omega)) * (gb.powi(k as i32 - 1) * j_b - ga.powi(k as i32 - 1) * j_a);
            let deriv_term = (ga.powi(k as i32) * jp_a - gb.powi(k as i32) * jp_b) / omega;
            values.push(head + value_term + deriv_term);
            provenance.push(Provenance::Recurrence);
        } else {
            values
                .push(partial_u_moment(k, nu, omega, gb)? - partial_u_moment(k, nu, omega, ga)?);
            provenance.push(Provenance::Oracle);
        }
    }
    Ok(MomentTable { values, provenance, stable_upto, complex_flagged })
}

/// Modified moments for the stationary basis: mu-hat_k =
/// int_a^b g'(x) s^{(k-r)/(r+1)} J_nu(omega g(x)) dx with s = +-g matching
/// the sign of g^{(r+1)}, for a type-II stationary point of order r at x=a.
pub fn modified_moments_stationary(
    g: &dyn SmoothFn,
    a: f64,
    b: f64,
    nu: f64,
    omega: f64,
    r: u32,
    n: usize,
) -> Result<MomentTable> {
    if r == 0 {
        return Err(Error::WrongMethod(
            "order-0 stationary moments degenerate to the plain basis".into(),
        ));
    }
    let rp1 = (r + 1) as f64;
    let stable_upto = (rp1 * ((nu * nu + omega * omega).sqrt() - 1.0)).floor().max(0.0) as usize;
    if n == 0 {
        return Ok(MomentTable {
            values: vec![],
            provenance: vec![],
            stable_upto,
            complex_flagged: false,
        });
    }
    let ga = g.value(a)?;
    let gb = g.value(b)?;
    let scale = ga.abs().max(gb.abs());
    if ga.abs() > 1e-9 * scale {
        return Err(Error::WrongMethod(format!(
            "stationary moments expect g(a) = 0, got {ga:e}"
        )));
    }
    if gb == 0.0 {
        return Err(Error::Domain("oscillator vanishes at both endpoints".into()));
    }
    let positive = gb > 0.0;
    let bb = gb.abs();
    let w = omega;
    let j_b = bessel_j(nu, w * bb);
    let jp_b = (bessel_j(nu - 1.0, w * bb) - bessel_j(nu + 1.0, w * bb)) * 0.5;

    let two_rp2 = 2 * (r as usize + 1);
    let mut values: Vec<Complex64> = Vec::with_capacity(n);
    let mut provenance = Vec::with_capacity(n);
    for k in 0..n {
        let q = (k as f64 - r as f64) / rp1;
        let p = (k as f64 + 1.0) / rp1;
        if k < two_rp2 || k > stable_upto {
            let v = bb.powf(p) * moment_power(q, nu, w * bb)?;
            values.push(Complex64::new(v, 0.0));
            let closed = k < two_rp2 && moment_power_is_closed(q, nu, w * bb);
            provenance.push(if closed { Provenance::ClosedForm } else { Provenance::Oracle });
        } else {
            let pl = p - 2.0;
            let head = (nu * nu - pl * pl) / (w * w) * values[k - two_rp2];
            let bnd = pl / (w * w) * bb.powf(pl) * j_b - bb.powf(pl + 1.0) * jp_b / w;
            values.push(head + Complex64::new(bnd, 0.0));
            provenance.push(Provenance::Recurrence);
        }
    }
    let complex_flagged = !positive && nu.fract() != 0.0;
    if !positive {
        let factor = -branch_phase(nu);
        for v in &mut values {
            *v *= factor;
        }
    }
    Ok(MomentTable { values, provenance, stable_upto, complex_flagged })
}

/// Locates the single zero of g in [a,b]; endpoints count.
fn locate_zero(g: &dyn SmoothFn, a: f64, b: f64) -> Result<f64> {
    let ga = g.value(a)?;
    let gb = g.value(b)?;
    let scale = ga.abs().max(gb.abs()).max(1e-300);
    if ga.abs() <= 1e-12 * scale {
        return Ok(a);
    }
    if gb.abs() <= 1e-12 * scale {
        return Ok(b);
    }
    if ga * gb > 0.0 {
        return Err(Error::WrongMethod(
            "oscillator has no sign change in the interval".into(),
        ));
    }
    let (mut lo, mut hi, mut flo) = (a, b, ga);
    let mut x = a - ga * (b - a) / (gb - ga);
    for _ in 0..80 {
        let jx = g.jet(x, 2)?;
        let (v, d) = (jx.coeff(0), jx.coeff(1));
        if v == 0.0 {
            return Ok(x);
        }
        if v * flo < 0.0 {
            hi = x;
        } else {
            lo = x;
            flo = v;
        }
        let newton = x - v / d;
        let next = if d != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 1e-15 * (x.abs() + (b - a)) {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

/// True when g is the affine map captured by `jet` over the whole interval.
fn affine_globally(g: &dyn SmoothFn, a: f64, b: f64) -> Result<Option<(f64, f64)>> {
    let mid = 0.5 * (a + b);
    let j = g.jet(mid, 4)?;
    let scale = j.coeffs().iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if j.coeff(2).abs() > 1e-12 * (1.0 + scale) || j.coeff(3).abs() > 1e-12 * (1.0 + scale) {
        return Ok(None);
    }
    let (v, d) = (j.coeff(0), j.coeff(1));
    // Confirm at the endpoints: a local jet cannot vouch for the far field.
    for &x in &[a, b] {
        if (g.value(x)? - (v + d * (x - mid))).abs() > 1e-10 * (1.0 + scale) {
            return Ok(None);
        }
    }
    Ok(Some((v - d * mid, d)))
}

/// Oracle evaluation of int_lo^hi f(x) J_nu(omega g(x)) dx where g may be
/// negative on the subinterval; the branch phase is applied per side.
pub(crate) fn oracle_signed_piece(
    f: &dyn SmoothFn,
    g: &dyn SmoothFn,
    lo: f64,
    hi: f64,
    nu: f64,
    omega: f64,
    tol: f64,
) -> Result<Complex64> {
    if hi - lo <= 1e-14 * (hi.abs() + lo.abs() + 1.0) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let gm = g.value(0.5 * (lo + hi))?;
    if gm >= 0.0 {
        let v = integrate_bessel(f, g, lo, hi, nu, omega, tol)?;
        Ok(Complex64::new(v.value, 0.0))
    } else {
        let neg = NegFn(g);
        let v = integrate_bessel(f, &neg, lo, hi, nu, omega, tol)?;
        Ok(branch_phase(nu) * v.value)
    }
}

/// M(nu, omega) = int_a^b J_nu(omega g(x)) dx for an oscillator with a
/// single zero in [a, b].
///
/// Affine oscillators reduce exactly to power moments; otherwise a small
/// modified Filon rule built from this module's own tables takes over once
/// omega is large enough for it to certify, with direct quadrature below.
pub fn zero_case_moment(
    g: &dyn SmoothFn,
    a: f64,
    b: f64,
    nu: f64,
    omega: f64,
) -> Result<Complex64> {
    if !(nu > -1.0) {
        return Err(Error::Domain(format!("zero-case moment needs nu > -1, got {nu}")));
    }
    if let Some((_c0, slope)) = affine_globally(g, a, b)? {
        let ga = g.value(a)?;
        let gb = g.value(b)?;
        let diff = partial_u_moment(0, nu, omega, gb)? - partial_u_moment(0, nu, omega, ga)?;
        return Ok(diff / slope);
    }
    let xi = locate_zero(g, a, b)?;
    if omega < 100.0 {
        let left = oracle_signed_piece(&OneFn, g, a, xi, nu, omega, 1e-13)?;
        let right = oracle_signed_piece(&OneFn, g, xi, b, nu, omega, 1e-13)?;
        return Ok(left + right);
    }

    // Filon bootstrap on f = 1 with quintuple nodes at a, xi, b; the
    // interpolation defect contributes O(omega^{-5}) relative error, small
    // at the crossover and vanishing fast beyond it.
    let span = b - a;
    let mut nodes = vec![a];
    if xi - a > 1e-12 * span && b - xi > 1e-12 * span {
        nodes.push(xi);
    }
    nodes.push(b);
    let mults = vec![5usize; nodes.len()];
    let n: usize = mults.iter().sum();

    let ga = g.value(a)?;
    let gb = g.value(b)?;
    let alpha = 2.0 / (gb - ga);
    let beta = -(gb + ga) / (gb - ga);

    let mut y = Vec::new();
    let mut lam = Vec::new();
    let mut rhs = Vec::new();
    for (&x, &m) in nodes.iter().zip(&mults) {
        let gj = g.jet(x, m + 1)?;
        y.push(gj.scale(alpha).add_scalar(beta).truncated(m));
        lam.push(gj.derivative().truncated(m));
        rhs.push(1.0);
        rhs.extend(std::iter::repeat(0.0).take(m - 1));
    }
    let c = hermite_coeffs(&y, &lam, &mults, &rhs)?;

    let table = modified_moments(g, a, b, nu, omega, n)?;
    let binom = binomial_table(n);
    let mut total = Complex64::new(0.0, 0.0);
    for (k, ck) in c.iter().enumerate() {
        let mut mk = Complex64::new(0.0, 0.0);
        let mut apow = 1.0;
        for j in 0..=k {
            mk += binom[k][j] * apow * beta.powi((k - j) as i32) * table.values[j];
            apow *= alpha;
        }
        total += ck * mk;
    }
    Ok(total)
}

/// Generalized stationary moments M_j = int_a^b (x - zeta)^j J_nu(omega g) dx
/// for j = 0..=j_max at a type-II stationary point of order r.
pub fn generalized_moments(
    g: &dyn SmoothFn,
    zeta: f64,
    a: f64,
    b: f64,
    nu: f64,
    omega: f64,
    r: u32,
    j_max: u32,
) -> Result<Vec<Complex64>> {
    if r == 0 {
        return Err(Error::WrongMethod(
            "order 0 is not a stationary case; use the zero-case moments".into(),
        ));
    }
    if j_max > r {
        return Err(Error::Domain(format!(
            "generalized moments are defined for j <= r, got j_max = {j_max}, r = {r}"
        )));
    }
    let rp1 = (r + 1) as f64;
    if !(nu > -1.0 / rp1) {
        return Err(Error::Domain(format!(
            "stationary case needs nu > -1/(r+1), got nu = {nu}"
        )));
    }

    // Monomial oscillators at the left endpoint reduce exactly.
    if (zeta - a).abs() <= 1e-14 * (b - a) {
        if let Some(c) = monomial_coefficient(g, zeta, b, r)? {
            let phase = if c > 0.0 { Complex64::new(1.0, 0.0) } else { branch_phase(nu) };
            let mut out = Vec::with_capacity(j_max as usize + 1);
            for j in 0..=j_max {
                let q = (j as f64 - r as f64) / rp1;
                let arg = omega * c.abs() * (b - zeta).powf(rp1);
                let v = (b - zeta).powi(j as i32 + 1) / rp1 * moment_power(q, nu, arg)?;
                out.push(phase * v);
            }
            return Ok(out);
        }
    }

    let mut out = Vec::with_capacity(j_max as usize + 1);
    for j in 0..=j_max {
        let f = ShiftedPower { zeta, j };
        let mut v = Complex64::new(0.0, 0.0);
        if zeta > a {
            v += oracle_signed_piece(&f, g, a, zeta, nu, omega, 1e-13)?;
        }
        if b > zeta {
            v += oracle_signed_piece(&f, g, zeta, b, nu, omega, 1e-13)?;
        }
        out.push(v);
    }
    Ok(out)
}

/// Some(c) when g(x) = c (x - zeta)^{r+1} on [zeta, b] to rounding.
fn monomial_coefficient(g: &dyn SmoothFn, zeta: f64, b: f64, r: u32) -> Result<Option<f64>> {
    let len = (r as usize + 2).max(8);
    let j0 = g.jet(zeta, len)?;
    let scale = j0.coeffs().iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let c = j0.coeff(r as usize + 1);
    for (i, v) in j0.coeffs().iter().enumerate() {
        if i != r as usize + 1 && v.abs() > 1e-12 * scale {
            return Ok(None);
        }
    }
    if c == 0.0 {
        return Ok(None);
    }
    // A local jet is not a global certificate; spot-check away from zeta.
    for &t in &[0.5 * (zeta + b), b] {
        let want = c * (t - zeta).powi(r as i32 + 1);
        if (g.value(t)? - want).abs() > 1e-10 * (1.0 + want.abs()) {
            return Ok(None);
        }
    }
    Ok(Some(c))
}
