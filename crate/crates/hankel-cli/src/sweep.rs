//! Omega sweeps: geometric grids, a precision-aware reference policy,
//! least-squares rate fits, and byte-stable CSV convergence reports.
//!
//! The reference at each grid point starts as the adaptive oracle. When a
//! high-order asymptotic evaluation agrees with the oracle to within its
//! noise, the reference switches to that value: its residual truncation
//! error decays several powers of omega faster than anything measured, so
//! high-accuracy columns are not drowned in oracle panel noise. The oracle
//! agreement gate catches a misbehaving high-order rule at exactly the
//! frequencies where it would matter.

use crate::{eval_asymptotic, eval_filon, eval_oracle, expected_rate, MethodDesc, Problem};
use hankel_quad::{Error, OracleResult, Result};
use rayon::prelude::*;

/// Grid and tolerance settings for one sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub omega_min: f64,
    pub omega_max: f64,
    pub points: usize,
    /// Oracle tolerance; also the error floor when the oracle is the reference.
    pub tol: f64,
}

/// Reference value actually used at one grid point.
#[derive(Debug, Clone, Copy)]
pub struct RefPoint {
    pub value: f64,
    /// Smallest error distinguishable from reference noise at this point.
    pub floor: f64,
    /// True when the gated high-order rule replaced the raw oracle value.
    pub refined: bool,
}

/// Least-squares rate fit over the upper half of the grid.
#[derive(Debug, Clone, Copy)]
pub struct RateFit {
    pub slope: f64,
    /// Half-width of the 95 percent confidence interval for the slope.
    pub band95: f64,
    pub points_used: usize,
    pub clamped_in_fit: usize,
}

/// Per-method sweep results in grid order.
#[derive(Debug, Clone)]
pub struct MethodColumn {
    pub desc: MethodDesc,
    pub id: String,
    pub expected_rate: f64,
    pub values: Vec<f64>,
    /// Absolute errors against the reference, clamped from below by the
    /// per-point noise floor; `clamped` records where the floor bit.
    pub abs_errors: Vec<f64>,
    pub scaled_errors: Vec<f64>,
    pub clamped: Vec<bool>,
    pub fit: Option<RateFit>,
}

/// Everything one sweep produced, ready for serialization.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub omegas: Vec<f64>,
    pub reference: Vec<RefPoint>,
    pub methods: Vec<MethodColumn>,
    pub refine_order: usize,
    pub config: SweepConfig,
    pub spec_echo: String,
}

/// Strictly increasing geometric grid; a single point degenerates to the
/// lower bound.
pub fn geometric_grid(omega_min: f64, omega_max: f64, points: usize) -> Result<Vec<f64>> {
    if !(omega_min.is_finite() && omega_min > 0.0) || !omega_max.is_finite() {
        return Err(Error::Domain(format!(
            "need finite positive grid bounds, got [{omega_min}, {omega_max}]"
        )));
    }
    if points == 0 {
        return Err(Error::Domain("grid needs at least one point".into()));
    }
    if points == 1 {
        return Ok(vec![omega_min]);
    }
    if omega_max <= omega_min {
        return Err(Error::Domain(format!(
            "grid needs omega_max > omega_min, got [{omega_min}, {omega_max}]"
        )));
    }
    let span = (omega_max / omega_min).ln();
    Ok((0..points)
        .map(|i| omega_min * (span * i as f64 / (points - 1) as f64).exp())
        .collect())
}

fn choose_reference(oracle: &OracleResult, refined: Option<f64>, tol: f64) -> RefPoint {
    let oracle_floor = oracle
        .est_abs_error
        .max(tol)
        .max(2e-16 * oracle.value.abs());
    if let Some(q) = refined {
        let gate = (20.0 * oracle.est_abs_error).max(1e-12 * (1.0 + oracle.value.abs()));
        if (q - oracle.value).abs() <= gate {
            // Floor at the rounding scale of the summed rule, not the
            // oracle tolerance: the truncation residual is far smaller.
            return RefPoint { value: q, floor: 2e-16 * q.abs() + 1e-23, refined: true };
        }
    }
    RefPoint { value: oracle.value, floor: oracle_floor, refined: false }
}

struct PointRow {
    reference: RefPoint,
    values: Vec<f64>,
}

/// Runs every method over the grid concurrently and assembles columns in
/// grid order, so the output is deterministic for identical inputs.
pub fn run_sweep(
    p: &Problem,
    methods: &[MethodDesc],
    cfg: &SweepConfig,
    spec_echo: &str,
) -> Result<SweepReport> {
    if methods.is_empty() {
        return Err(Error::Domain("sweep needs at least one method".into()));
    }
    let omegas = geometric_grid(cfg.omega_min, cfg.omega_max, cfg.points)?;
    let refine_order = methods
        .iter()
        .filter_map(|d| match d {
            MethodDesc::Asymptotic { m } => Some(*m),
            _ => None,
        })
        .max()
        .unwrap_or(0)
        .max(3)
        + 3;

    let rows: Result<Vec<PointRow>> = omegas
        .par_iter()
        .map(|&w| {
            let oracle = eval_oracle(p, w, cfg.tol)?;
            let refined = eval_asymptotic(p, refine_order, w).ok();
            let reference = choose_reference(&oracle, refined, cfg.tol);
            let mut values = Vec::with_capacity(methods.len());
            for desc in methods {
                values.push(match desc {
                    MethodDesc::Asymptotic { m } => eval_asymptotic(p, *m, w)?,
                    MethodDesc::Filon { nodes, mults } => eval_filon(p, nodes, mults, w)?,
                    MethodDesc::Oracle { tol } => eval_oracle(p, w, *tol)?.value,
                });
            }
            Ok(PointRow { reference, values })
        })
        .collect();
    let rows = rows?;

    let mut columns = Vec::with_capacity(methods.len());
    for (mi, desc) in methods.iter().enumerate() {
        let values: Vec<f64> = rows.iter().map(|r| r.values[mi]).collect();
        let mut abs_errors = Vec::with_capacity(values.len());
        let mut clamped = Vec::with_capacity(values.len());
        for (v, row) in values.iter().zip(&rows) {
            let raw = (v - row.reference.value).abs();
            clamped.push(raw < row.reference.floor);
            abs_errors.push(raw.max(row.reference.floor));
        }
        let rate = expected_rate(p, desc);
        let scaled_errors: Vec<f64> = abs_errors
            .iter()
            .zip(&omegas)
            .map(|(e, w)| e * w.powf(rate))
            .collect();
        let fit = fit_upper_half(&omegas, &abs_errors, &clamped);
        columns.push(MethodColumn {
            desc: desc.clone(),
            id: desc.id(),
            expected_rate: rate,
            values,
            abs_errors,
            scaled_errors,
            clamped,
            fit,
        });
    }
    Ok(SweepReport {
        omegas,
        reference: rows.iter().map(|r| r.reference).collect(),
        methods: columns,
        refine_order,
        config: cfg.clone(),
        spec_echo: spec_echo.into(),
    })
}

/// Two-sided 97.5 percent Student-t quantile for small residual counts.
fn t_quantile_975(df: usize) -> f64 {
    const T: [f64; 30] = [
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228, 2.201, 2.179,
        2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086, 2.080, 2.074, 2.069, 2.064,
        2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
    ];
    if df == 0 {
        f64::INFINITY
    } else if df <= T.len() {
        T[df - 1]
    } else {
        1.96
    }
}

/// Least squares on ln|error| against ln omega over the upper half of the
/// grid, the documented asymptotic-regime convention for every report.
///
/// Oscillatory errors pass through near-nulls, and a raw point fit is at
/// their mercy on a fixed grid. Given enough upper-half points the fit
/// therefore uses envelope samples, maxima over consecutive pairs, which
/// track the decay constant the theory actually bounds.
fn fit_upper_half(omegas: &[f64], errs: &[f64], clamped: &[bool]) -> Option<RateFit> {
    let n = omegas.len();
    let lo = n / 2;
    if n - lo < 3 {
        return None;
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = if n - lo >= 6 {
        omegas[lo..]
            .chunks(2)
            .zip(errs[lo..].chunks(2))
            .map(|(ws, es)| {
                let x = ws.iter().map(|w| w.ln()).sum::<f64>() / ws.len() as f64;
                let y = es.iter().cloned().fold(f64::MIN, f64::max).max(1e-300).ln();
                (x, y)
            })
            .unzip()
    } else {
        (
            omegas[lo..].iter().map(|w| w.ln()).collect(),
            errs[lo..].iter().map(|e| e.max(1e-300).ln()).collect(),
        )
    };
    let m = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / m;
    let ybar = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - xbar).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xbar) * (y - ybar)).sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| (y - (intercept + slope * x)).powi(2))
        .sum();
    let df = xs.len().saturating_sub(2);
    let band95 = if df > 0 {
        t_quantile_975(df) * (ss_res / df as f64 / sxx).sqrt()
    } else {
        f64::INFINITY
    };
    Some(RateFit {
        slope,
        band95,
        points_used: xs.len(),
        clamped_in_fit: clamped[lo..].iter().filter(|c| **c).count(),
    })
}

/// Serializes a report with fixed 17-significant-digit float formatting and
/// `\n` line endings, so identical flags give identical bytes.
pub fn report_csv(r: &SweepReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("# hankel sweep v{}\n", env!("CARGO_PKG_VERSION")));
    out.push_str(&format!("# spec: {}\n", r.spec_echo));
    out.push_str(&format!(
        "# reference: oracle tol={:.3e}; asymptotic m={} where oracle-gated\n",
        r.config.tol, r.refine_order
    ));
    out.push_str("# seeds: none (deterministic)\n");
    out.push_str("omega,method_id,value,abs_error,scaled_error\n");
    for (i, w) in r.omegas.iter().enumerate() {
        for col in &r.methods {
            out.push_str(&format!(
                "{:.16e},{},{:.16e},{:.16e},{:.16e}\n",
                w, col.id, col.values[i], col.abs_errors[i], col.scaled_errors[i]
            ));
        }
    }
    for col in &r.methods {
        match col.fit {
            Some(f) => out.push_str(&format!(
                "# method={} expected_rate={:.3} slope={:.6} band95={:.6} points={} clamped={}\n",
                col.id, col.expected_rate, f.slope, f.band95, f.points_used, f.clamped_in_fit
            )),
            None => out.push_str(&format!(
                "# method={} expected_rate={:.3} slope=na band95=na points=0 clamped=0\n",
                col.id, col.expected_rate
            )),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn fig_problem() -> Problem {
        Problem::new("cos(x)", "x^2+x", 1.0, 2.0, 1.0).unwrap()
    }

    #[test]
    fn grid_shapes() {
        assert_eq!(geometric_grid(10.0, 100.0, 1).unwrap(), vec![10.0]);
        let g = geometric_grid(100.0, 10000.0, 20).unwrap();
        assert_eq!(g.len(), 20);
        assert_relative_eq!(g[0], 100.0, max_relative = 1e-14);
        assert_relative_eq!(g[19], 10000.0, max_relative = 1e-14);
        for w in g.windows(2) {
            assert!(w[1] > w[0], "grid not strictly increasing");
        }
        // Geometric means equal ratios.
        assert_relative_eq!(g[1] / g[0], g[11] / g[10], max_relative = 1e-12);
        assert!(geometric_grid(0.0, 10.0, 3).is_err());
        assert!(geometric_grid(10.0, 10.0, 3).is_err());
        assert!(geometric_grid(10.0, 100.0, 0).is_err());
    }

    #[test]
    fn fit_recovers_a_planted_slope() {
        let omegas: Vec<f64> = (0..12).map(|i| 100.0 * 1.5f64.powi(i)).collect();
        let errs: Vec<f64> = omegas.iter().map(|w| 3.0 * w.powf(-2.5)).collect();
        let clamped = vec![false; omegas.len()];
        let fit = fit_upper_half(&omegas, &errs, &clamped).unwrap();
        assert_relative_eq!(fit.slope, -2.5, max_relative = 1e-12);
        assert!(fit.band95 < 1e-10);
        // Six upper-half points collapse into three pair-envelope samples.
        assert_eq!(fit.points_used, 3);
        // Too few points: no fit.
        assert!(fit_upper_half(&omegas[..4], &errs[..4], &clamped[..4]).is_none());
    }

    #[test]
    fn sweep_measures_the_plain_truncation_rate() {
        let p = fig_problem();
        let methods = vec![MethodDesc::Asymptotic { m: 1 }, MethodDesc::Oracle { tol: 1e-13 }];
        let cfg =
            SweepConfig { omega_min: 100.0, omega_max: 4000.0, points: 16, tol: 1e-13 };
        let report = run_sweep(&p, &methods, &cfg, "test").unwrap();
        let fit = report.methods[0].fit.unwrap();
        println!(
            "m=1 slope {:.3} band {:.3} clamped {}",
            fit.slope, fit.band95, fit.clamped_in_fit
        );
        assert!((fit.slope + 2.5).abs() < 0.4, "slope {}", fit.slope);
        // The oracle column measures itself against the reference, which at
        // low frequency usually is the oracle: everything sits at the floor.
        let osc = &report.methods[1];
        for (e, row) in osc.abs_errors.iter().zip(&report.reference) {
            assert!(*e <= 10.0 * row.floor.max(1e-12), "oracle err {e:e}");
        }
    }

    #[test]
    fn csv_is_byte_stable_and_well_formed() {
        let p = fig_problem();
        let methods = vec![MethodDesc::Asymptotic { m: 2 }];
        let cfg = SweepConfig { omega_min: 80.0, omega_max: 240.0, points: 3, tol: 1e-12 };
        let r1 = report_csv(&run_sweep(&p, &methods, &cfg, "echo").unwrap());
        let r2 = report_csv(&run_sweep(&p, &methods, &cfg, "echo").unwrap());
        assert_eq!(r1, r2, "identical flags must give identical bytes");
        let lines: Vec<&str> = r1.lines().collect();
        let header = lines.iter().position(|l| *l == "omega,method_id,value,abs_error,scaled_error");
        assert!(header.is_some(), "missing header row");
        let data: Vec<&str> = lines.iter().filter(|l| !l.starts_with('#')).skip(1).copied().collect();
        assert_eq!(data.len(), 3);
        for row in data {
            assert_eq!(row.split(',').count(), 5, "row {row}");
            let w: f64 = row.split(',').next().unwrap().parse().unwrap();
            // Endpoint may land an ulp past the bound after exp(ln(..)).
            assert!(w >= 80.0 * (1.0 - 1e-12) && w <= 240.0 * (1.0 + 1e-12), "w {w}");
        }
        assert!(r1.contains("# method=asymptotic:m=2"));
        assert!(!r1.contains('\r'));
    }

    #[test]
    fn single_point_sweep_degenerates_cleanly() {
        let p = fig_problem();
        let methods =
            vec![MethodDesc::Asymptotic { m: 1 }, MethodDesc::Oracle { tol: 1e-12 }];
        let cfg = SweepConfig { omega_min: 150.0, omega_max: 150.0, points: 1, tol: 1e-12 };
        let report = run_sweep(&p, &methods, &cfg, "single").unwrap();
        assert_eq!(report.omegas, vec![150.0]);
        assert!(report.methods.iter().all(|c| c.fit.is_none()));
        let csv = report_csv(&report);
        let rows = csv.lines().filter(|l| !l.starts_with('#')).count();
        assert_eq!(rows, 1 + 2, "header plus one row per method");
        assert!(csv.contains("slope=na"));
    }

    #[test]
    fn reference_gate_rejects_disagreement() {
        let oracle = OracleResult { value: 1.0, est_abs_error: 1e-14, panels_used: 10 };
        let accepted = choose_reference(&oracle, Some(1.0 + 1e-13), 1e-13);
        assert!(accepted.refined);
        assert!(accepted.floor < 1e-14);
        let rejected = choose_reference(&oracle, Some(1.0 + 1e-6), 1e-13);
        assert!(!rejected.refined);
        assert_abs_diff_eq!(rejected.value, 1.0);
        let missing = choose_reference(&oracle, None, 1e-13);
        assert!(!missing.refined);
        assert!(missing.floor >= 1e-13);
    }
}
