//! Truncated Taylor-series (jet) arithmetic at a point.
//!
//! A jet stores the coefficients `c[j] = f^(j)(center)/j!` of a smooth
//! function about a center. All derivative bookkeeping in this crate runs
//! through jets: removable singularities are cancelled exactly by dropping
//! leading coefficients instead of dividing nearly-equal numbers, and the
//! higher derivatives consumed by the quadrature methods are read off as
//! scaled coefficients.

use crate::error::{Error, Result};

/// Relative threshold below which a leading coefficient counts as exactly zero
/// when cancelling a removable singularity. Coefficients of terms that vanish
/// identically carry only rounding noise, which sits many orders below this.
pub const REMOVABLE_TOL: f64 = 1e-13;

/// Truncated Taylor expansion of a smooth function about `center`.
///
/// Invariants: at least one coefficient, all coefficients finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    center: f64,
    c: Vec<f64>,
}

impl Jet {
    /// Builds a jet from raw coefficients `c[j] = f^(j)(center)/j!`.
    pub fn new(center: f64, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Numerical("jet needs at least one coefficient".into()));
        }
        if !center.is_finite() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::Numerical("non-finite jet coefficient".into()));
        }
        Ok(Self { center, c: coeffs })
    }

    /// Jet of the constant function `v`.
    pub fn constant(center: f64, v: f64, n: usize) -> Self {
        let mut c = vec![0.0; n.max(1)];
        c[0] = v;
        Self { center, c }
    }

    /// Jet of the identity function x.
    pub fn variable(center: f64, n: usize) -> Self {
        let mut c = vec![0.0; n.max(1)];
        c[0] = center;
        if n > 1 {
            c[1] = 1.0;
        }
        Self { center, c }
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.c
    }

    /// Coefficient `j`, zero past the stored length (zero-padding semantics).
    pub fn coeff(&self, j: usize) -> f64 {
        self.c.get(j).copied().unwrap_or(0.0)
    }

    /// Value of the underlying function at the center.
    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// `f^(j)(center)`, i.e. `j! * c[j]`.
    pub fn derivative_value(&self, j: usize) -> f64 {
        (1..=j).fold(self.coeff(j), |acc, i| acc * i as f64)
    }

    /// Evaluates the truncated polynomial at `x` by Horner's rule.
    pub fn eval_poly(&self, x: f64) -> f64 {
        let t = x - self.center;
        self.c.iter().rev().fold(0.0, |acc, &ci| acc * t + ci)
    }

    /// Keeps the first `n` coefficients.
    pub fn truncated(&self, n: usize) -> Self {
        let n = n.max(1).min(self.c.len());
        Self { center: self.center, c: self.c[..n].to_vec() }
    }

    fn check_center(&self, other: &Self) -> Result<()> {
        if self.center != other.center {
            return Err(Error::Numerical(format!(
                "jet center mismatch: {} vs {}",
                self.center, other.center
            )));
        }
        Ok(())
    }

    /// Coefficient-wise sum, shorter operand zero-padded.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let n = self.len().max(other.len());
        let c = (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect();
        Ok(Self { center: self.center, c })
    }

    /// Coefficient-wise difference, shorter operand zero-padded.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let n = self.len().max(other.len());
        let c = (0..n).map(|j| self.coeff(j) - other.coeff(j)).collect();
        Ok(Self { center: self.center, c })
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { center: self.center, c: self.c.iter().map(|ci| ci * s).collect() }
    }

    pub fn add_scalar(&self, s: f64) -> Self {
        let mut c = self.c.clone();
        c[0] += s;
        Self { center: self.center, c }
    }

    /// Cauchy product truncated to the longer operand's length.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let n = self.len().max(other.len());
        let mut c = vec![0.0; n];
        for (j, cj) in c.iter_mut().enumerate() {
            let lo = j.saturating_sub(other.len() - 1);
            let hi = j.min(self.len() - 1);
            let mut s = 0.0;
            for k in lo..=hi {
                s += self.c[k] * other.c[j - k];
            }
            *cj = s;
        }
        Ok(Self { center: self.center, c })
    }

    /// Series quotient by forward substitution on the lower-triangular system
    /// `sum_k result[k] * den[j-k] = num[j]`. Each result coefficient is a
    /// linear combination of num[0..=j] only.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_center(den)?;
        let b0 = den.c[0];
        if b0 == 0.0 {
            return Err(Error::SingularJetDivision);
        }
        let n = self.len().max(den.len());
        let mut r = vec![0.0; n];
        for j in 0..n {
            let mut s = self.coeff(j);
            for k in 0..j {
                s -= r[k] * den.coeff(j - k);
            }
            r[j] = s / b0;
        }
        Ok(Self { center: self.center, c: r })
    }

    /// Divides by `(x - center)^p` after checking the first `p` coefficients
    /// are numerically zero. This is the exact cancellation step for
    /// removable singularities; `p = 0` returns the input unchanged.
    pub fn shift_div_power(&self, p: usize) -> Result<Self> {
        if p == 0 {
            return Ok(self.clone());
        }
        if p >= self.len() {
            return Err(Error::Numerical(format!(
                "cannot cancel (x - c)^{p} from a jet of length {}",
                self.len()
            )));
        }
        let scale = self.c.iter().fold(0.0f64, |m, ci| m.max(ci.abs()));
        let tol = REMOVABLE_TOL * scale;
        for (j, &cj) in self.c[..p].iter().enumerate() {
            if cj.abs() > tol {
                return Err(Error::NonRemovable(format!(
                    "coefficient {j} is {cj:.3e}, above {tol:.3e}"
                )));
            }
        }
        Ok(Self { center: self.center, c: self.c[p..].to_vec() })
    }

    /// Multiplies by `(x - center)^p`: prepends `p` zero coefficients.
    pub fn shift_mul_power(&self, p: usize) -> Self {
        let mut c = vec![0.0; p + self.len()];
        c[p..].copy_from_slice(&self.c);
        Self { center: self.center, c }
    }

    /// Formal derivative; the result is one coefficient shorter.
    pub fn derivative(&self) -> Self {
        assert!(self.len() >= 2, "derivative of a length-1 jet is unknown");
        let c = (1..self.len()).map(|j| j as f64 * self.c[j]).collect();
        Self { center: self.center, c }
    }

    /// Integer power by repeated squaring. Handles a vanishing constant term,
    /// which fractional powers cannot.
    pub fn powi(&self, k: u32) -> Self {
        let n = self.len();
        let mut result = Jet::constant(self.center, 1.0, n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("same center");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same center");
            }
        }
        result
    }

    /// Real power `u^alpha` for a strictly positive constant term, via the
    /// standard recurrence n*u0*w[n] = sum_{k=1..n} ((alpha+1)k - n) u[k] w[n-k].
    pub fn powf(&self, alpha: f64) -> Result<Self> {
        let u0 = self.c[0];
        if u0 <= 0.0 {
            return Err(Error::Domain(format!(
                "fractional power of a series with constant term {u0}"
            )));
        }
        let n = self.len();
        let mut w = vec![0.0; n];
        w[0] = u0.powf(alpha);
        for j in 1..n {
            let mut s = 0.0;
            for k in 1..=j {
                s += ((alpha + 1.0) * k as f64 - j as f64) * self.coeff(k) * w[j - k];
            }
            w[j] = s / (j as f64 * u0);
        }
        Jet::new(self.center, w)
    }

    pub fn sqrt(&self) -> Result<Self> {
        self.powf(0.5)
    }

    /// exp(u) via e[n] = (1/n) sum_{k=1..n} k u[k] e[n-k].
    pub fn exp(&self) -> Self {
        let n = self.len();
        let mut e = vec![0.0; n];
        e[0] = self.c[0].exp();
        for j in 1..n {
            let mut s = 0.0;
            for k in 1..=j {
                s += k as f64 * self.c[k] * e[j - k];
            }
            e[j] = s / j as f64;
        }
        Self { center: self.center, c: e }
    }

    /// log(u) for a strictly positive constant term.
    pub fn log(&self) -> Result<Self> {
        let u0 = self.c[0];
        if u0 <= 0.0 {
            return Err(Error::Domain(format!("log of a series with constant term {u0}")));
        }
        let n = self.len();
        let mut l = vec![0.0; n];
        l[0] = u0.ln();
        for j in 1..n {
            let mut s = j as f64 * self.c[j];
            for k in 1..j {
                s -= k as f64 * l[k] * self.coeff(j - k);
            }
            l[j] = s / (j as f64 * u0);
        }
        Jet::new(self.center, l)
    }

    /// sin(u) and cos(u), computed jointly from the coupled recurrences.
    pub fn sin_cos(&self) -> (Self, Self) {
        let n = self.len();
        let mut s = vec![0.0; n];
        let mut c = vec![0.0; n];
        s[0] = self.c[0].sin();
        c[0] = self.c[0].cos();
        for j in 1..n {
            let mut ds = 0.0;
            let mut dc = 0.0;
            for k in 1..=j {
                ds += k as f64 * self.c[k] * c[j - k];
                dc += k as f64 * self.c[k] * s[j - k];
            }
            s[j] = ds / j as f64;
            c[j] = -dc / j as f64;
        }
        (Self { center: self.center, c: s }, Self { center: self.center, c })
    }

    /// Composition `outer(inner(x))` as a jet at `inner`'s center. Requires
    /// `inner`'s value to equal `outer`'s center (the expansion point).
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self> {
        let drift = inner.c[0] - outer.center;
        let scale = 1.0 + inner.c[0].abs() + outer.center.abs();
        if drift.abs() > 1e-9 * scale {
            return Err(Error::Numerical(format!(
                "composition centers disagree by {drift:.3e}"
            )));
        }
        // Horner on the shifted inner series, whose constant term is zero by
        // construction so powers gain one order of vanishing each step.
        let mut shifted = inner.clone();
        shifted.c[0] = 0.0;
        let n = inner.len();
        let mut acc = Jet::constant(inner.center, 0.0, n);
        for j in (0..outer.len()).rev() {
            acc = acc.mul(&shifted)?.add_scalar(outer.coeff(j));
        }
        Ok(acc)
    }
}

/// A function smooth enough to expose truncated Taylor expansions anywhere in
/// its domain. Parsed expressions implement this, as do the special-purpose
/// integrands in the applications layer.
pub trait SmoothFn {
    /// Jet of length `n` at `center`.
    fn jet(&self, center: f64, n: usize) -> Result<Jet>;

    /// Plain value; default goes through a length-1 jet.
    fn value(&self, x: f64) -> Result<f64> {
        Ok(self.jet(x, 1)?.value())
    }
}

impl<T: SmoothFn + ?Sized> SmoothFn for &T {
    fn jet(&self, center: f64, n: usize) -> Result<Jet> {
        (**self).jet(center, n)
    }
    fn value(&self, x: f64) -> Result<f64> {
        (**self).value(x)
    }
}

/// Re-centers a polynomial given by coefficients `p[j]` in powers of
/// `(x - from)` as a jet of length `n` at `to`.
pub fn poly_recenter(p: &[f64], from: f64, to: f64, n: usize) -> Jet {
    let mut acc = Jet::constant(to, 0.0, n);
    let x = Jet::variable(to, n).add_scalar(-from);
    for &pj in p.iter().rev() {
        acc = acc.mul(&x).expect("same center").add_scalar(pj);
    }
    acc
}
