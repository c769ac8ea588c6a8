//! Lommel function of the second kind, by its large-argument expansion.
//!
//! S_{mu,nu}(z) is the particular solution of the inhomogeneous Bessel
//! equation that decays algebraically; it closes the Bessel moment
//! formulas in this crate. Only large arguments are ever requested (small
//! ones route to direct integration elsewhere), so the divergent expansion
//! with optimal truncation is the whole implementation.

/// Value plus an absolute error estimate (the first omitted term). The
/// expansion terminates exactly, with zero estimate, whenever mu +- nu is an
/// odd positive integer; S is then a polynomial in 1/z times z^{mu-1}.
#[derive(Debug, Clone, Copy)]
pub struct LommelEval {
    pub value: f64,
    pub est: f64,
}

/// S_{mu,nu}(z) for z > 0, by the expansion
/// z^{mu-1} sum_m (-1)^m ((1-mu+nu)/2)_m ((1-mu-nu)/2)_m (2/z)^{2m},
/// truncated at its smallest term.
pub fn lommel_s(mu: f64, nu: f64, z: f64) -> LommelEval {
    let a1 = 0.5 * (1.0 - mu + nu);
    let b1 = 0.5 * (1.0 - mu - nu);
    let q = (2.0 / z) * (2.0 / z);

    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut best_est = f64::INFINITY;
    let mut at_best = 1.0f64;
    for m in 1..=120 {
        let mf = m as f64;
        let next = -term * (a1 + mf - 1.0) * (b1 + mf - 1.0) * q;
        if next == 0.0 {
            // Pochhammer hit a non-positive integer: the series is exact.
            best_est = 0.0;
            at_best = sum;
            break;
        }
        if next.abs() >= term.abs() && m > 1 {
            // Divergence has set in; keep the sum frozen at the smallest term.
            if term.abs() < best_est {
                best_est = term.abs();
                at_best = sum;
            }
            break;
        }
        sum += next;
        term = next;
        if term.abs() < best_est {
            best_est = term.abs();
            at_best = sum;
        }
    }
    let prefactor = z.powf(mu - 1.0);
    LommelEval { value: prefactor * at_best, est: prefactor * best_est }
}
