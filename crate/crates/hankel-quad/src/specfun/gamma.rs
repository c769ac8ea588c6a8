//! Gamma function by Lanczos approximation, with reflection for the left
//! half-line and a reciprocal variant that is entire.

use crate::error::{Error, Result};

/// Lanczos coefficients for g = 5.2421875, truncated at 14 terms. Relative
/// error of the resulting gamma stays below 1e-13 across the range this
/// crate uses (roughly [-30, 60]).
const COF: [f64; 14] = [
    57.156_235_665_862_923_5,
    -59.597_960_355_475_491_2,
    14.136_097_974_741_747_1,
    -0.491_913_816_097_620_199,
    0.339_946_499_848_118_887e-4,
    0.465_236_289_270_485_756e-4,
    -0.983_744_753_048_795_646e-4,
    0.158_088_703_224_912_494e-3,
    -0.210_264_441_724_104_883e-3,
    0.217_439_618_115_212_643e-3,
    -0.164_318_106_536_763_890e-3,
    0.844_182_239_838_527_433e-4,
    -0.261_908_384_015_814_087e-4,
    0.368_991_826_595_316_234e-5,
];

const LANCZOS_G: f64 = 5.2421875;
const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("ln_gamma needs x > 0, got {x}")));
    }
    let mut ser = 0.999_999_999_999_997_092;
    for (j, &c) in COF.iter().enumerate() {
        ser += c / (x + (j + 1) as f64);
    }
    let tmp = x + LANCZOS_G;
    Ok((x + 0.5) * tmp.ln() - tmp + (SQRT_2PI * ser / x).ln())
}

/// sin(pi x) without the catastrophic cancellation of sin(pi * x) for large x.
fn sinpi(x: f64) -> f64 {
    let r = x - x.round();
    let s = (std::f64::consts::PI * r).sin();
    // round() moves by an integer; sin picks up (-1)^round.
    if (x.round() as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Gamma(x) for real x. Poles at non-positive integers are a domain error.
pub fn gamma(x: f64) -> Result<f64> {
    if x >= 0.5 {
        return Ok(ln_gamma(x)?.exp());
    }
    if x == x.round() {
        return Err(Error::Domain(format!("gamma pole at {x}")));
    }
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    let denom = sinpi(x) * ln_gamma(1.0 - x)?.exp();
    Ok(std::f64::consts::PI / denom)
}

/// 1 / Gamma(x), entire in x: returns exactly 0 at the poles of gamma.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.round() {
        return 0.0;
    }
    if x >= 0.5 {
        return (-ln_gamma(x).expect("x >= 0.5")).exp();
    }
    sinpi(x) * ln_gamma(1.0 - x).expect("1 - x > 0.5").exp() / std::f64::consts::PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn integer_factorials() {
        let mut fact = 1.0;
        for n in 1..=20u64 {
            assert_relative_eq!(gamma(n as f64).unwrap(), fact, max_relative = 1e-13);
            fact *= n as f64;
        }
    }

    #[test]
    fn half_integer_values() {
        let spi = std::f64::consts::PI.sqrt();
        assert_relative_eq!(gamma(0.5).unwrap(), spi, max_relative = 1e-14);
        assert_relative_eq!(gamma(1.5).unwrap(), 0.5 * spi, max_relative = 1e-14);
        assert_relative_eq!(gamma(-0.5).unwrap(), -2.0 * spi, max_relative = 1e-13);
        assert_relative_eq!(gamma(-1.5).unwrap(), 4.0 / 3.0 * spi, max_relative = 1e-13);
    }

    #[test]
    fn reference_grid() {
        // Values frozen from a 50-digit evaluation.
        let refs: [(f64, f64); 8] = [
            (0.5, 1.7724538509055160273),
            (1.0 / 3.0, 2.6789385347077476337),
            (4.7, 15.431411600047431712),
            (12.3, 83385367.899969854713),
            (20.5, 540624298233507504.47),
            (49.5, 8.6676018431352723453e+61),
            (-0.75, -4.8341465442958777492),
            (-19.5, 5.8110459775022364864e-18),
        ];
        for &(x, want) in &refs {
            assert_relative_eq!(gamma(x).unwrap(), want, max_relative = 5e-13);
        }
    }

    #[test]
    fn recurrence_identity() {
        // Gamma(x+1) = x Gamma(x) across sign changes and scales.
        for &x in &[0.1, 0.9, 2.7, 8.3, 17.6, -0.3, -2.4, -9.7, -14.2] {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        }
    }

    #[test]
    fn reflection_identity() {
        for &x in &[0.25, 0.7, 1.3, 3.9, -1.6, -6.2] {
            let prod = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
            let want = std::f64::consts::PI / sinpi(x);
            assert_relative_eq!(prod, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn poles_are_errors_and_rgamma_zeros() {
        for &x in &[0.0, -1.0, -2.0, -7.0] {
            assert!(gamma(x).is_err());
            assert_eq!(rgamma(x), 0.0);
        }
    }

    #[test]
    fn rgamma_matches_reciprocal() {
        for &x in &[0.5, 1.0, 3.25, 10.0, -0.5, -3.7, -12.2] {
            assert_relative_eq!(rgamma(x), 1.0 / gamma(x).unwrap(), max_relative = 1e-12);
        }
    }
}
