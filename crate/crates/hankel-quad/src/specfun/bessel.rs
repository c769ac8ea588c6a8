//! Bessel function of the first kind, real order, real argument.
//!
//! Three regimes, dispatched on (nu, x):
//!  - ascending series for small x or when the order dominates the argument,
//!  - the large-argument amplitude-phase expansion, optimally truncated and
//!    accepted only when its own error estimate clears the accuracy target,
//!  - otherwise upward recurrence in the order, seeded at the fractional part
//!    of nu where the large-argument expansion is always reliable.

use super::gamma::{ln_gamma, rgamma};

/// Absolute accuracy target for the large-argument expansion. Estimates above
/// this reroute to the series or recurrence paths. Kept two orders below the
/// crate-wide 1e-11 evaluation budget because downstream zero-finding divides
/// this noise by |J'| ~ x^{-1/2}.
const ASYMP_ACCEPT: f64 = 2e-13;

/// J_nu(x).
///
/// Negative integer orders reduce through J_{-n} = (-1)^n J_n. Negative x is
/// defined only for integer orders (reduced the same way); non-integer order
/// with x < 0, or negative non-integer order at x = 0, returns NaN.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    if !nu.is_finite() || !x.is_finite() {
        return f64::NAN;
    }
    let mut nu = nu;
    let mut x = x;
    let mut sign = 1.0;
    if x < 0.0 {
        if nu != nu.round() {
            return f64::NAN;
        }
        if (nu.round() as i64) % 2 != 0 {
            sign = -sign;
        }
        x = -x;
    }
    if nu < 0.0 && nu == nu.round() {
        if (nu.round() as i64) % 2 != 0 {
            sign = -sign;
        }
        nu = -nu;
    }
    if x == 0.0 {
        return if nu == 0.0 {
            sign
        } else if nu > 0.0 {
            0.0
        } else {
            f64::NAN
        };
    }

    // The large-argument expansion beats the series' cancellation noise well
    // below the x = 15 series cutoff when the order is small; let its own
    // error estimate decide from x = 10 up.
    if x > 10.0 && nu < 0.9 * x {
        let (val, est) = asymptotic(nu, x);
        if est <= ASYMP_ACCEPT {
            return sign * val;
        }
    }
    if x <= 15.0 {
        return sign * series(nu, x);
    }
    if nu >= 0.9 * x {
        // Order comparable to or above the argument: the ascending series
        // cancels catastrophically and the recurrence direction flips at the
        // turning point, so walk down from nu instead.
        return sign * by_cf_downward(nu, x);
    }
    sign * by_recurrence(nu, x)
}

/// Ascending series sum_m (-1)^m (x/2)^{nu+2m} / (m! Gamma(nu+m+1)).
///
/// The leading term goes through logs once nu is large enough for
/// (x/2)^nu to overflow on its own; successive terms by ratio. Terms can
/// grow before they decay, so convergence is judged against the largest
/// term seen, not the running sum.
fn series(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = -half * half;
    let mut t = if nu > 1.0 {
        (nu * half.ln() - ln_gamma(nu + 1.0).expect("nu + 1 > 2")).exp()
    } else {
        half.powf(nu) * rgamma(nu + 1.0)
    };
    let mut sum = t;
    let mut max_term = t.abs();
    for m in 0..20000u32 {
        t *= q / ((m as f64 + 1.0) * (nu + m as f64 + 1.0));
        sum += t;
        max_term = max_term.max(t.abs());
        if t.abs() <= 1e-20 * max_term {
            break;
        }
    }
    sum
}

/// Amplitude-phase form sqrt(2/(pi x)) (P cos chi - Q sin chi) with
/// chi = x - (nu/2 + 1/4) pi and the standard inverse-power coefficient
/// recurrence. Truncated at the smallest term; the returned estimate is
/// that term's contribution. Half-integer orders terminate exactly.
fn asymptotic(nu: f64, x: f64) -> (f64, f64) {
    let four_nu2 = 4.0 * nu * nu;
    let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();

    // Locate the optimal truncation index: terms may grow first when the
    // order is large, so scan for the global magnitude minimum.
    const KMAX: usize = 80;
    let mut mag = 1.0f64;
    let mut best = 1.0f64;
    let mut best_k = 0usize;
    for k in 1..=KMAX {
        let kf = k as f64;
        mag *= ((four_nu2 - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf * x)).abs();
        if mag < best {
            best = mag;
            best_k = k;
        }
        if mag == 0.0 || mag > 1e8 * best {
            break;
        }
    }

    let mut p = 0.0;
    let mut q_sum = 0.0;
    let mut t = 1.0f64;
    for k in 0..best_k {
        let half_k_sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += half_k_sign * t;
        } else {
            q_sum += half_k_sign * t;
        }
        let kf = (k + 1) as f64;
        t *= (four_nu2 - (2.0 * kf - 1.0).powi(2)) / (8.0 * kf * x);
    }
    let chi = x - (0.5 * nu + 0.25) * std::f64::consts::PI;
    let val = amp * (chi.cos() * p - chi.sin() * q_sum);
    (val, amp * best)
}

/// Upward recurrence J_{mu+1} = (2 mu / x) J_mu - J_{mu-1} from seeds at the
/// fractional part of nu. Only reached with nu < 0.9 x and x > 15, where the
/// recurrence direction is stable and the seeds sit deep inside the
/// large-argument expansion's comfort zone. Negative non-integer orders run
/// the recurrence downward instead; they only land here with an order too
/// large in magnitude for the direct expansion, which keeps the downward
/// walk short in practice.
fn by_recurrence(nu: f64, x: f64) -> f64 {
    let mu0 = nu - nu.floor();
    let steps = nu.floor() as i64;
    let j_lo = asymptotic(mu0, x).0;
    let j_hi = asymptotic(mu0 + 1.0, x).0;
    if steps == 0 {
        return j_lo;
    }
    if steps > 0 {
        let (mut jm1, mut j) = (j_lo, j_hi);
        let mut mu = mu0 + 1.0;
        for _ in 1..steps {
            let next = (2.0 * mu / x) * j - jm1;
            jm1 = j;
            j = next;
            mu += 1.0;
        }
        j
    } else {
        let (mut j, mut jp1) = (j_lo, j_hi);
        let mut mu = mu0;
        for _ in 0..(-steps) {
            let prev = (2.0 * mu / x) * j - jp1;
            jp1 = j;
            j = prev;
            mu -= 1.0;
        }
        j
    }
}

/// Continued fraction for the ratio J_nu / J_{nu-1} by the modified Lentz
/// algorithm. Converges to the ratio of the minimal solution, which is
/// exactly J in the upward direction.
fn cf_ratio(nu: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut f = TINY;
    let mut c = f;
    let mut d = 0.0;
    for k in 0..20000u32 {
        let b = 2.0 * (nu + k as f64) / x;
        let a = if k == 0 { 1.0 } else { -1.0 };
        d = b + a * d;
        if d == 0.0 {
            d = TINY;
        }
        c = b + a / c;
        if c == 0.0 {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() < 1e-15 {
            break;
        }
    }
    f
}

/// J_nu for order at or above the oscillatory band: fix the ratio
/// J_nu / J_{nu-1} by continued fraction, run the recurrence downward
/// (the stable direction for J through the turning point) to the fractional
/// part of nu, and normalize there against the large-argument expansion.
fn by_cf_downward(nu: f64, x: f64) -> f64 {
    let mu0 = nu - nu.floor();
    let steps = nu.floor() as i64;
    debug_assert!(steps >= 1);
    let r = cf_ratio(nu, x);
    let mut j_hi = 1.0;
    let mut j = 1.0 / r;
    let mut mu = nu - 1.0;
    for _ in 1..steps {
        let prev = (2.0 * mu / x) * j - j_hi;
        j_hi = j;
        j = prev;
        mu -= 1.0;
    }
    // (j, j_hi) now hold trial values at (mu0, mu0 + 1). Normalize against
    // whichever true value is farther from a zero of J.
    let t0 = asymptotic(mu0, x).0;
    let t1 = asymptotic(mu0 + 1.0, x).0;
    let scale = if j.abs() >= j_hi.abs() { t0 / j } else { t1 / j_hi };
    scale
}

#[cfg(test)]
mod tests {
    use super::super::bessel_grid::GRID;
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn frozen_grid_absolute_accuracy() {
        let mut worst = 0.0f64;
        let mut worst_at = (0.0, 0.0);
        for &(nu, x, want) in GRID {
            let got = bessel_j(nu, x);
            let err = (got - want).abs();
            if err > worst {
                worst = err;
                worst_at = (nu, x);
            }
            assert!(
                err <= 1e-11,
                "J_{nu}({x}) = {got:e}, want {want:e}, err {err:e}"
            );
        }
        println!("grid: {} points, worst abs err {:.2e} at (nu, x) = {:?}", GRID.len(), worst, worst_at);
    }

    #[test]
    fn half_integer_closed_forms() {
        // J_{1/2} = sqrt(2/(pi x)) sin x, J_{-1/2} = sqrt(2/(pi x)) cos x,
        // J_{3/2} = sqrt(2/(pi x)) (sin x / x - cos x).
        for &x in &[0.1, 0.7, 3.0, 14.9, 15.1, 42.0, 300.0, 4881.0, 1e4] {
            let amp = (2.0 / (std::f64::consts::PI * x)).sqrt();
            assert_abs_diff_eq!(bessel_j(0.5, x), amp * x.sin(), epsilon = 1e-10);
            assert_abs_diff_eq!(bessel_j(-0.5, x), amp * x.cos(), epsilon = 1e-10);
            assert_abs_diff_eq!(
                bessel_j(1.5, x),
                amp * (x.sin() / x - x.cos()),
                epsilon = 1e-10
            );
        }
    }

    #[test]
    fn three_term_recurrence_residual() {
        // J_{nu-1}(x) + J_{nu+1}(x) - (2 nu / x) J_nu(x) must vanish.
        for &nu in &[0.0, 1.0, 2.5, 1.0 / 3.0, 7.0, 16.4] {
            for &x in &[0.3, 2.0, 9.0, 15.5, 40.0, 777.0] {
                let r = bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x)
                    - (2.0 * nu / x) * bessel_j(nu, x);
                println!("nu={nu} x={x} residual={r:e}");
                assert_abs_diff_eq!(r, 0.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn negative_integer_order_reflection() {
        for &x in &[0.4, 3.0, 27.0] {
            assert_relative_eq!(bessel_j(-3.0, x), -bessel_j(3.0, x), max_relative = 1e-13);
            assert_relative_eq!(bessel_j(-4.0, x), bessel_j(4.0, x), max_relative = 1e-13);
        }
    }

    #[test]
    fn negative_argument_rules() {
        assert_relative_eq!(bessel_j(2.0, -5.0), bessel_j(2.0, 5.0), max_relative = 1e-14);
        assert_relative_eq!(bessel_j(3.0, -5.0), -bessel_j(3.0, 5.0), max_relative = 1e-14);
        assert!(bessel_j(0.5, -1.0).is_nan());
    }

    #[test]
    fn at_the_origin() {
        assert_eq!(bessel_j(0.0, 0.0), 1.0);
        assert_eq!(bessel_j(2.5, 0.0), 0.0);
        assert!(bessel_j(-0.5, 0.0).is_nan());
    }

    #[test]
    fn dispatch_seam_is_smooth() {
        // Values straddling the x = 15 series/expansion boundary and the
        // 0.9 x order boundary must agree through the recurrence identity.
        for &nu in &[0.0, 1.0, 5.25, 13.0] {
            for &x in &[14.999, 15.001, 16.6, 16.7] {
                let r = bessel_j(nu - 1.0, x) + bessel_j(nu + 1.0, x)
                    - (2.0 * nu / x) * bessel_j(nu, x);
                assert_abs_diff_eq!(r, 0.0, epsilon = 5e-11);
            }
        }
    }
}
