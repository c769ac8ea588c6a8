//! The quadrature methods: asymptotic truncations for all three oscillator
//! cases and modified Filon rules on the matching interpolation bases.
//!
//! Case dispatch is explicit. Each entry point re-classifies the oscillator
//! and refuses a mismatched case instead of silently falling back, so a
//! misdeclared critical point surfaces as an error, not a wrong number.
//!
//! Truncated expansions satisfy an exact identity: the transform equals the
//! method value plus (-omega)^{-m} times the transform of the m-th
//! coefficient function at order nu + m. `RemainderIntegrand` packages that
//! coefficient function for direct integration, which makes the identity a
//! non-asymptotic correctness check used heavily by the tests.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::expr::{classify_oscillator, CriticalKind, CriticalPoint, StationaryType};
use crate::interp::{binomial_table, hermite_coeffs};
use crate::jets::{poly_recenter, Jet, SmoothFn};
use crate::moments::{
    bessel_j_signed, generalized_moments, modified_moments, modified_moments_stationary,
    oracle_signed_piece, zero_case_moment, MomentTable,
};
use crate::sigma::{
    critical_boundary_jet, sigma_hat, sigma_hat_boundary, sigma_plain, sigma_plain_jet,
    sigma_tilde,
};
use crate::transform::TransformSpec;
use crate::ExprFunction;

/// Which side of the interval holds the stationary point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StationaryPosition {
    LeftEndpoint,
    Interior,
}

fn ensure_truncation_order(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("truncation order m must be at least 1".into()));
    }
    Ok(())
}

fn describe_critical(points: &[CriticalPoint]) -> String {
    points
        .iter()
        .map(|p| match p.kind {
            CriticalKind::Zero => format!("zero at {}", p.location),
            CriticalKind::Stationary => format!(
                "stationary point (order {:?}) at {}",
                p.order_r, p.location
            ),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Accepts an accumulated complex value whose imaginary part is a rounding
/// residue and returns the real part; a genuine imaginary part is an error.
fn require_real(q: Complex64, what: &str) -> Result<f64> {
    if q.im.abs() > 1e-9 * q.norm() {
        return Err(Error::Numerical(format!(
            "{what} came out complex ({} + {}i); a fractional order with a \
             sign-changing oscillator has no real value",
            q.re, q.im
        )));
    }
    Ok(q.re)
}

fn value_and_slope(g: &ExprFunction, x: f64) -> Result<(f64, f64)> {
    let j = g.jet(x, 2)?;
    Ok((j.coeff(0), j.coeff(1)))
}

pub(crate) fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Truncated asymptotic expansion for an oscillator free of critical points:
/// boundary-only terms built from the plain coefficient sequence.
pub fn asymptotic_plain(spec: &TransformSpec, m: usize) -> Result<f64> {
    ensure_truncation_order(m)?;
    let crit = classify_oscillator(&spec.g, spec.a, spec.b)?;
    if !crit.is_empty() {
        return Err(Error::WrongMethod(format!(
            "oscillator has {}; pick the matching method",
            describe_critical(&crit)
        )));
    }
    let sa = sigma_plain(&spec.f, &spec.g, spec.nu, m - 1, spec.a)?;
    let sb = sigma_plain(&spec.f, &spec.g, spec.nu, m - 1, spec.b)?;
    let (ga, gpa) = value_and_slope(&spec.g, spec.a)?;
    let (gb, gpb) = value_and_slope(&spec.g, spec.b)?;
    let w = spec.omega;
    let mut q = Complex64::new(0.0, 0.0);
    let mut pow = 1.0;
    for k in 1..=m {
        pow /= -w;
        let order = spec.nu + k as f64;
        let term = bessel_j_signed(order, w * gb) * (sb[k - 1] / gpb)
            - bessel_j_signed(order, w * ga) * (sa[k - 1] / gpa);
        q -= term * pow;
    }
    require_real(q, "plain asymptotic value")
}

/// Truncated asymptotic expansion when the oscillator has a single simple
/// zero at xi: moment terms weighted by the zero-subtracted coefficient
/// sequence at xi plus boundary terms.
///
/// An interior zero with fractional order makes the transform genuinely
/// complex, hence the complex return; integer orders and endpoint zeros give
/// an exactly real imaginary part of zero.
pub fn asymptotic_zero(spec: &TransformSpec, xi: f64, m: usize) -> Result<Complex64> {
    ensure_truncation_order(m)?;
    if !(spec.nu > -1.0) {
        return Err(Error::Domain(format!(
            "zero case needs order nu > -1, got {}",
            spec.nu
        )));
    }
    let span = spec.b - spec.a;
    let crit = classify_oscillator(&spec.g, spec.a, spec.b)?;
    let ok = crit.len() == 1
        && crit[0].kind == CriticalKind::Zero
        && (crit[0].location - xi).abs() <= 1e-9 * span;
    if !ok {
        return Err(Error::WrongMethod(format!(
            "expected a single oscillator zero at {xi}, found: {}",
            if crit.is_empty() { "no critical points".into() } else { describe_critical(&crit) }
        )));
    }
    let at_xi = sigma_tilde(&spec.f, &spec.g, spec.nu, xi, m - 1, xi)?;
    let at_a = if (spec.a - xi).abs() <= 1e-9 * span {
        at_xi.clone()
    } else {
        sigma_tilde(&spec.f, &spec.g, spec.nu, xi, m - 1, spec.a)?
    };
    let at_b = if (spec.b - xi).abs() <= 1e-9 * span {
        at_xi.clone()
    } else {
        sigma_tilde(&spec.f, &spec.g, spec.nu, xi, m - 1, spec.b)?
    };
    let (ga, gpa) = value_and_slope(&spec.g, spec.a)?;
    let (gb, gpb) = value_and_slope(&spec.g, spec.b)?;
    let w = spec.omega;

    let mut q = Complex64::new(0.0, 0.0);
    let mut pow = 1.0;
    for (k, s) in at_xi.iter().enumerate().take(m) {
        if k > 0 {
            pow /= -w;
        }
        let mk = zero_case_moment(&spec.g, spec.a, spec.b, spec.nu + k as f64, w)?;
        q += mk * (s * pow);
    }
    pow = 1.0;
    for k in 1..=m {
        pow /= -w;
        let order = spec.nu + k as f64;
        let tb = bessel_j_signed(order, w * gb) * ((at_b[k - 1] - at_xi[k - 1]) / gpb);
        let ta = bessel_j_signed(order, w * ga) * ((at_a[k - 1] - at_xi[k - 1]) / gpa);
        q -= (tb - ta) * pow;
    }
    Ok(q)
}

/// Truncated asymptotic expansion at a type-II stationary point of order r:
/// generalized moments against the Taylor data of the projected coefficient
/// sequence at zeta, plus boundary terms with the degree-r Taylor polynomial
/// subtracted. The interior position adds the block for the x = a boundary.
pub fn asymptotic_stationary(
    spec: &TransformSpec,
    zeta: f64,
    r: u32,
    m: usize,
    position: StationaryPosition,
) -> Result<f64> {
    ensure_truncation_order(m)?;
    let rp1 = (r + 1) as f64;
    if r == 0 {
        return Err(Error::WrongMethod(
            "order 0 is not a stationary case; use the zero-case method".into(),
        ));
    }
    if !(spec.nu > -1.0 / rp1) {
        return Err(Error::Domain(format!(
            "stationary case of order {r} needs nu > -1/{}, got {}",
            r + 1,
            spec.nu
        )));
    }
    let span = spec.b - spec.a;
    let crit = classify_oscillator(&spec.g, spec.a, spec.b)?;
    if crit.len() != 1 || crit[0].kind != CriticalKind::Stationary {
        return Err(Error::WrongMethod(format!(
            "expected a single stationary point at {zeta}, found: {}",
            if crit.is_empty() { "no critical points".into() } else { describe_critical(&crit) }
        )));
    }
    let p = &crit[0];
    if p.stationary_type != Some(StationaryType::II) {
        return Err(Error::UnsupportedStationaryKind {
            zeta: p.location,
            g_value: spec.g.value(p.location)?,
        });
    }
    if p.order_r != Some(r) {
        return Err(Error::WrongMethod(format!(
            "declared stationary order {r} but classification found {:?}",
            p.order_r
        )));
    }
    if (p.location - zeta).abs() > 1e-9 * span {
        return Err(Error::WrongMethod(format!(
            "stationary point sits at {}, not at the declared {zeta}",
            p.location
        )));
    }
    let at_left = (zeta - spec.a).abs() <= 1e-9 * span;
    let at_right = (spec.b - zeta).abs() <= 1e-9 * span;
    if at_right {
        return Err(Error::WrongMethod(
            "stationary point at the right endpoint; reverse the variable first".into(),
        ));
    }
    match position {
        StationaryPosition::LeftEndpoint if !at_left => {
            return Err(Error::WrongMethod(format!(
                "position says left endpoint but the stationary point is interior at {zeta}"
            )));
        }
        StationaryPosition::Interior if at_left => {
            return Err(Error::WrongMethod(format!(
                "position says interior but the stationary point sits at a = {}",
                spec.a
            )));
        }
        _ => {}
    }

    let table = sigma_hat(&spec.f, &spec.g, spec.nu, zeta, r, m, r as usize)?;
    let w = spec.omega;
    let mut q = Complex64::new(0.0, 0.0);
    let mut pow = 1.0;
    for k in 0..m {
        if k > 0 {
            pow /= -w;
        }
        let ms = generalized_moments(&spec.g, zeta, spec.a, spec.b, spec.nu + k as f64, w, r, r)?;
        let tc = table.taylor_coeffs(k);
        for (j, mj) in ms.iter().enumerate() {
            q += mj * (tc[j] * pow);
        }
    }

    let bvals = sigma_hat_boundary(&spec.f, &spec.g, spec.nu, &table, m - 1, spec.b)?;
    let (gb, gpb) = value_and_slope(&spec.g, spec.b)?;
    let avals = if position == StationaryPosition::Interior {
        Some(sigma_hat_boundary(&spec.f, &spec.g, spec.nu, &table, m - 1, spec.a)?)
    } else {
        None
    };
    let (ga, gpa) = value_and_slope(&spec.g, spec.a)?;
    pow = 1.0;
    for k in 1..=m {
        pow /= -w;
        let order = spec.nu + k as f64;
        let tc = table.taylor_coeffs(k - 1);
        let tb = bessel_j_signed(order, w * gb)
            * ((bvals[k - 1] - horner(&tc, spec.b - zeta)) / gpb);
        let ta = match &avals {
            Some(av) => {
                bessel_j_signed(order, w * ga)
                    * ((av[k - 1] - horner(&tc, spec.a - zeta)) / gpa)
            }
            None => Complex64::new(0.0, 0.0),
        };
        q -= (tb - ta) * pow;
    }
    require_real(q, "stationary asymptotic value")
}

/// Interpolation basis for the Filon rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilonBasis {
    /// Powers of the oscillator: p = g' (c_0 + c_1 g + c_2 g^2 + ...).
    Plain,
    /// Fractional powers g^{(k-r)/(r+1)} for an order-r stationary point at
    /// the left endpoint (|g| replaces g on the negative branch).
    Stationary { r: u32 },
}

/// Interpolation layout for a Filon rule: strictly increasing nodes spanning
/// [a, b] with per-node confluency counts.
#[derive(Debug, Clone)]
pub struct FilonPlan {
    nodes: Vec<f64>,
    mults: Vec<usize>,
    basis: FilonBasis,
}

impl FilonPlan {
    pub fn new(nodes: Vec<f64>, mults: Vec<usize>, basis: FilonBasis) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != mults.len() {
            return Err(Error::Domain(format!(
                "need matching non-empty node and multiplicity lists, got {} and {}",
                nodes.len(),
                mults.len()
            )));
        }
        if nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Domain("nodes must be strictly increasing".into()));
        }
        if mults.iter().any(|&m| m == 0) {
            return Err(Error::Domain("every multiplicity must be at least 1".into()));
        }
        if let FilonBasis::Stationary { r: 0 } = basis {
            return Err(Error::Domain(
                "stationary basis needs order r >= 1; order 0 is the plain basis".into(),
            ));
        }
        Ok(Self { nodes, mults, basis })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn basis(&self) -> FilonBasis {
        self.basis
    }

    /// Total number of interpolation conditions (and basis functions).
    pub fn n(&self) -> usize {
        self.mults.iter().sum()
    }
}

/// Prepared interpolation system in the affinely rescaled variable t: node
/// jets of t and of the prefactor, stacked right-hand sides, and the scale
/// map needed to convert moment tables.
struct FilonSystem {
    t: Vec<Jet>,
    lam: Vec<Jet>,
    rhs: Vec<f64>,
    /// t = alpha * y + beta where y is g (plain) or |g|^{1/(r+1)} (stationary).
    alpha: f64,
    beta: f64,
}

fn build_system(spec: &TransformSpec, plan: &FilonPlan) -> Result<FilonSystem> {
    let span = spec.b - spec.a;
    let tol = 1e-9 * span;
    if (plan.nodes[0] - spec.a).abs() > tol
        || (plan.nodes[plan.nodes.len() - 1] - spec.b).abs() > tol
    {
        return Err(Error::Domain(format!(
            "plan must span [{}, {}], got nodes from {} to {}",
            spec.a,
            spec.b,
            plan.nodes[0],
            plan.nodes[plan.nodes.len() - 1]
        )));
    }
    let crit = classify_oscillator(&spec.g, spec.a, spec.b)?;
    if crit.len() > 1 {
        return Err(Error::WrongMethod(format!(
            "oscillator has several critical points ({}); subdivide first",
            describe_critical(&crit)
        )));
    }
    if let Some(p) = crit.first() {
        if p.kind == CriticalKind::Stationary && p.stationary_type != Some(StationaryType::II) {
            return Err(Error::UnsupportedStationaryKind {
                zeta: p.location,
                g_value: spec.g.value(p.location)?,
            });
        }
    }
    match (crit.first(), plan.basis) {
        (None, FilonBasis::Plain) => {}
        (Some(p), FilonBasis::Plain) if p.kind == CriticalKind::Zero => {
            if !plan.nodes.iter().any(|&x| (x - p.location).abs() <= tol) {
                return Err(Error::WrongMethod(format!(
                    "plan needs a node at the oscillator zero {}",
                    p.location
                )));
            }
        }
        (Some(p), FilonBasis::Plain) => {
            return Err(Error::WrongMethod(format!(
                "oscillator has a {}; use the stationary basis",
                describe_critical(std::slice::from_ref(p))
            )));
        }
        (Some(p), FilonBasis::Stationary { r }) if p.kind == CriticalKind::Stationary => {
            if p.order_r != Some(r) {
                return Err(Error::WrongMethod(format!(
                    "basis declares order {r} but classification found {:?}",
                    p.order_r
                )));
            }
            if (p.location - spec.a).abs() > tol {
                return Err(Error::WrongMethod(format!(
                    "stationary basis expects the stationary point at a = {}, found it at {}",
                    spec.a, p.location
                )));
            }
            if !(spec.nu > -1.0 / (r + 1) as f64) {
                return Err(Error::Domain(format!(
                    "stationary case of order {r} needs nu > -1/{}, got {}",
                    r + 1,
                    spec.nu
                )));
            }
        }
        (_, FilonBasis::Stationary { .. }) => {
            return Err(Error::WrongMethod(format!(
                "stationary basis on an oscillator with {}; use the plain basis",
                if crit.is_empty() { "no critical points".into() } else { describe_critical(&crit) }
            )));
        }
    }

    match plan.basis {
        FilonBasis::Plain => build_plain_system(spec, plan),
        FilonBasis::Stationary { r } => build_stationary_system(spec, plan, r),
    }
}

fn build_plain_system(spec: &TransformSpec, plan: &FilonPlan) -> Result<FilonSystem> {
    let ga = spec.g.value(spec.a)?;
    let gb = spec.g.value(spec.b)?;
    let alpha = 2.0 / (gb - ga);
    let beta = -(gb + ga) / (gb - ga);
    let mut t = Vec::new();
    let mut lam = Vec::new();
    let mut rhs = Vec::new();
    for (&x, &mi) in plan.nodes.iter().zip(&plan.mults) {
        let gj = spec.g.jet(x, mi + 1)?;
        t.push(gj.scale(alpha).add_scalar(beta).truncated(mi));
        lam.push(gj.derivative());
        push_rhs(&spec.f, x, mi, &mut rhs)?;
    }
    Ok(FilonSystem { t, lam, rhs, alpha, beta })
}

fn build_stationary_system(
    spec: &TransformSpec,
    plan: &FilonPlan,
    r: u32,
) -> Result<FilonSystem> {
    let rp1 = (r + 1) as f64;
    let gb = spec.g.value(spec.b)?;
    // The sign of g away from the stationary endpoint fixes the branch.
    let sign = if gb > 0.0 { 1.0 } else { -1.0 };
    let y_end = (sign * gb).powf(1.0 / rp1);
    let alpha = 2.0 / y_end;
    let beta = -1.0;

    let mut t = Vec::new();
    let mut lam = Vec::new();
    let mut rhs = Vec::new();
    for (idx, (&x, &mi)) in plan.nodes.iter().zip(&plan.mults).enumerate() {
        if idx == 0 {
            // The stationary node: y = (x - a) * (s / (x - a)^{r+1})^{1/(r+1)}
            // and the prefactor both have removable singularities, resolved
            // by shifting powers out before the fractional root.
            let g_raw = spec.g.jet(x, mi + r as usize + 2)?;
            let s_raw = g_raw.scale(sign);
            let u = s_raw.shift_div_power(r as usize + 1)?;
            let tau = u.powf(1.0 / rp1)?;
            let y = tau.shift_mul_power(1).truncated(mi);
            let gp_sh = g_raw.derivative().shift_div_power(r as usize)?;
            lam.push(gp_sh.mul(&u.powf(-(r as f64) / rp1)?)?.truncated(mi));
            t.push(y.scale(alpha).add_scalar(beta));
        } else {
            let gj = spec.g.jet(x, mi + 1)?;
            let sj = gj.scale(sign);
            let y = sj.powf(1.0 / rp1)?.truncated(mi);
            lam.push(gj.derivative().mul(&sj.powf(-(r as f64) / rp1)?)?.truncated(mi));
            t.push(y.scale(alpha).add_scalar(beta));
        }
        push_rhs(&spec.f, x, mi, &mut rhs)?;
    }
    Ok(FilonSystem { t, lam, rhs, alpha, beta })
}

fn push_rhs(f: &ExprFunction, x: f64, mi: usize, rhs: &mut Vec<f64>) -> Result<()> {
    let fj = f.jet(x, mi)?;
    for j in 0..mi {
        rhs.push(fj.derivative_value(j));
    }
    Ok(())
}

/// Solves the Hermite interpolation system for the plan's basis and returns
/// the coefficients in the rescaled variable (the oscillator range, or its
/// fractional-power image, mapped affinely onto [-1, 1]).
pub fn filon_coeffs(spec: &TransformSpec, plan: &FilonPlan) -> Result<Vec<f64>> {
    let sys = build_system(spec, plan)?;
    hermite_coeffs(&sys.t, &sys.lam, &plan.mults, &sys.rhs)
}

fn dot_scaled(c: &[f64], table: &MomentTable, alpha: f64, beta: f64) -> Complex64 {
    let binom = binomial_table(c.len());
    let mut total = Complex64::new(0.0, 0.0);
    for (k, ck) in c.iter().enumerate() {
        let mut mk = Complex64::new(0.0, 0.0);
        let mut apow = 1.0;
        for j in 0..=k {
            mk += table.values[j] * (binom[k][j] * apow * beta.powi((k - j) as i32));
            apow *= alpha;
        }
        total += mk * *ck;
    }
    total
}

/// Modified Filon rule: interpolate f in the plan's basis and integrate the
/// interpolant exactly via the matching moment table.
pub fn filon(spec: &TransformSpec, plan: &FilonPlan) -> Result<Complex64> {
    let sys = build_system(spec, plan)?;
    let c = hermite_coeffs(&sys.t, &sys.lam, &plan.mults, &sys.rhs)?;
    let table = match plan.basis {
        FilonBasis::Plain => {
            modified_moments(&spec.g, spec.a, spec.b, spec.nu, spec.omega, plan.n())?
        }
        FilonBasis::Stationary { r } => modified_moments_stationary(
            &spec.g,
            spec.a,
            spec.b,
            spec.nu,
            spec.omega,
            r,
            plan.n(),
        )?,
    };
    Ok(dot_scaled(&c, &table, sys.alpha, sys.beta))
}

struct CriticalData {
    c: f64,
    r: u32,
    /// Degree-r Taylor projections of levels 0..m-1, used by the walk.
    projections: Vec<Vec<f64>>,
    /// Long Taylor expansion of level m at c, used inside the switch radius
    /// where the walk would divide by a vanishing oscillator.
    series_m: Vec<f64>,
    switch_radius: f64,
}

/// The m-th coefficient function of a truncated expansion, evaluable
/// anywhere in the interval: integrating it against the order nu + m kernel
/// and scaling by (-omega)^{-m} recovers the exact truncation remainder.
pub struct RemainderIntegrand {
    f: ExprFunction,
    g: ExprFunction,
    nu: f64,
    m: usize,
    critical: Option<CriticalData>,
}

impl RemainderIntegrand {
    /// Remainder of the plain expansion (no critical points).
    pub fn plain(spec: &TransformSpec, m: usize) -> Result<Self> {
        ensure_truncation_order(m)?;
        Ok(Self {
            f: spec.f.clone(),
            g: spec.g.clone(),
            nu: spec.nu,
            m,
            critical: None,
        })
    }

    /// Remainder of the zero-case expansion around the oscillator zero xi.
    pub fn at_zero(spec: &TransformSpec, xi: f64, m: usize) -> Result<Self> {
        Self::at_critical(spec, xi, 0, m)
    }

    /// Remainder of the stationary-case expansion around zeta of order r.
    pub fn at_stationary(spec: &TransformSpec, zeta: f64, r: u32, m: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::WrongMethod(
                "order 0 is the zero case; use the zero-case remainder".into(),
            ));
        }
        Self::at_critical(spec, zeta, r, m)
    }

    fn at_critical(spec: &TransformSpec, c: f64, r: u32, m: usize) -> Result<Self> {
        ensure_truncation_order(m)?;
        // Enough stored coefficients that the Taylor evaluation stays at
        // rounding accuracy across the whole switch disc.
        let keep = 26;
        let table = sigma_hat(&spec.f, &spec.g, spec.nu, c, r, m, keep - 1)?;
        let projections = (0..m).map(|k| table.taylor_coeffs(k)).collect();
        let series_m = table.level_jet(m).coeffs().to_vec();
        Ok(Self {
            f: spec.f.clone(),
            g: spec.g.clone(),
            nu: spec.nu,
            m,
            critical: Some(CriticalData {
                c,
                r,
                projections,
                series_m,
                switch_radius: 0.1 * (spec.b - spec.a),
            }),
        })
    }

    /// Kernel order the remainder integrates against.
    pub fn order(&self) -> f64 {
        self.nu + self.m as f64
    }

    /// Oracle value of the remainder transform itself: the integral of this
    /// function against J_{nu+m}(omega g), split at the critical point with
    /// the analytic-continuation phase on any negative-oscillator side.
    pub fn transform_value(&self, spec: &TransformSpec) -> Result<Complex64> {
        let order = self.order();
        let eps = 1e-12 * (spec.b - spec.a);
        if let Some(cd) = &self.critical {
            if cd.c > spec.a + eps && cd.c < spec.b - eps {
                let left =
                    oracle_signed_piece(self, &self.g, spec.a, cd.c, order, spec.omega, 1e-13)?;
                let right =
                    oracle_signed_piece(self, &self.g, cd.c, spec.b, order, spec.omega, 1e-13)?;
                return Ok(left + right);
            }
        }
        oracle_signed_piece(self, &self.g, spec.a, spec.b, order, spec.omega, 1e-13)
    }
}

impl SmoothFn for RemainderIntegrand {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        match &self.critical {
            None => sigma_plain_jet(&self.f, &self.g, self.nu, self.m, center, n),
            Some(cd) => {
                if (center - cd.c).abs() <= cd.switch_radius {
                    Ok(poly_recenter(&cd.series_m, cd.c, center, n))
                } else {
                    critical_boundary_jet(
                        &self.f,
                        &self.g,
                        self.nu,
                        cd.c,
                        cd.r,
                        &cd.projections,
                        self.m,
                        center,
                        n,
                    )
                }
            }
        }
    }
}
