//! Front-end engine shared by the `hankel` binary and its test suites.
//!
//! The core rules in `hankel_quad` insist on at most one critical point per
//! interval. This layer parses problems from expression text, classifies the
//! oscillator, cuts multi-critical intervals at the midpoints between
//! neighbouring critical points, dispatches the requested method per segment,
//! and sums. It also defines the compact method descriptors used by the sweep
//! command and the process exit-code policy.

pub mod sweep;

use hankel_quad::{
    asymptotic_plain, asymptotic_stationary, asymptotic_zero, classify_oscillator, filon,
    reference_hankel, Complex64, CriticalKind, CriticalPoint, Error, ExprFunction, FilonBasis,
    FilonPlan, OracleResult, Result, SmoothFn, StationaryPosition, StationaryType, TransformSpec,
};

/// Maps every library error onto the process exit contract: 2 for problems
/// the user can fix in the request (parse, domain, classification mismatch),
/// 3 for numerical failures inside a well-posed request.
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Parse { .. }
        | Error::Domain(_)
        | Error::WrongMethod(_)
        | Error::UnsupportedStationaryKind { .. }
        | Error::SubdivideRequired { .. }
        | Error::NonRemovable(_) => 2,
        _ => 3,
    }
}

/// What governs the oscillation on one segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SegmentCase {
    /// No critical point; endpoint contributions only.
    Plain,
    /// Simple zero of the oscillator.
    Zero { xi: f64 },
    /// Stationary point of order r; type II means the oscillator vanishes there too.
    Stationary { zeta: f64, r: u32, type_ii: bool },
}

/// One classified piece of the integration interval.
#[derive(Debug, Clone)]
pub struct Segment {
    pub a: f64,
    pub b: f64,
    pub case: SegmentCase,
}

/// A parsed problem cut into single-critical-point segments.
#[derive(Debug, Clone)]
pub struct Problem {
    pub f: ExprFunction,
    pub g: ExprFunction,
    pub a: f64,
    pub b: f64,
    pub nu: f64,
    segments: Vec<Segment>,
}

impl Problem {
    pub fn new(f_src: &str, g_src: &str, a: f64, b: f64, nu: f64) -> Result<Self> {
        let f = ExprFunction::parse(f_src)?;
        let g = ExprFunction::parse(g_src)?;
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::Domain(format!("need finite endpoints a < b, got [{a}, {b}]")));
        }
        if !nu.is_finite() {
            return Err(Error::Domain(format!("order nu must be finite, got {nu}")));
        }
        let segments = segment_interval(&g, a, b)?;
        Ok(Self { f, g, a, b, nu, segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// One-line classification summary for diagnostics.
    pub fn case_summary(&self) -> String {
        self.segments
            .iter()
            .map(describe_segment)
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn describe_segment(s: &Segment) -> String {
    match s.case {
        SegmentCase::Plain => format!("plain on [{}, {}]", s.a, s.b),
        SegmentCase::Zero { xi } => format!("zero at xi={xi} on [{}, {}]", s.a, s.b),
        SegmentCase::Stationary { zeta, r, type_ii } => format!(
            "stationary (order {r}, type {}) at zeta={zeta} on [{}, {}]",
            if type_ii { "II" } else { "I" },
            s.a,
            s.b
        ),
    }
}

fn case_of(points: &[CriticalPoint]) -> SegmentCase {
    match points {
        [] => SegmentCase::Plain,
        [p] => match p.kind {
            CriticalKind::Zero => SegmentCase::Zero { xi: p.location },
            CriticalKind::Stationary => SegmentCase::Stationary {
                zeta: p.location,
                r: p.order_r.unwrap_or(1),
                type_ii: p.stationary_type == Some(StationaryType::II),
            },
        },
        _ => unreachable!("classifier reports >1 point only through SubdivideRequired"),
    }
}

fn segment_interval(g: &ExprFunction, a: f64, b: f64) -> Result<Vec<Segment>> {
    match classify_oscillator(g, a, b) {
        Ok(points) => Ok(vec![Segment { a, b, case: case_of(&points) }]),
        Err(Error::SubdivideRequired { points, .. }) => {
            let mut cuts = vec![a];
            for w in points.windows(2) {
                cuts.push(0.5 * (w[0] + w[1]));
            }
            cuts.push(b);
            let mut segments = Vec::with_capacity(cuts.len() - 1);
            for w in cuts.windows(2) {
                // One critical point per piece by construction; a second
                // subdivision demand here is a genuine failure.
                let pts = classify_oscillator(g, w[0], w[1])?;
                segments.push(Segment { a: w[0], b: w[1], case: case_of(&pts) });
            }
            Ok(segments)
        }
        Err(e) => Err(e),
    }
}

fn real_part(z: Complex64, what: &str) -> Result<f64> {
    if z.im.abs() > 1e-9 * z.norm() + 1e-300 {
        return Err(Error::Numerical(format!(
            "{what} is genuinely complex ({:e} + {:e}i); a negative oscillator range with \
             fractional order has no real value to report",
            z.re, z.im
        )));
    }
    Ok(z.re)
}

fn spec_for(p: &Problem, seg: &Segment, omega: f64) -> Result<TransformSpec> {
    TransformSpec::new(p.f.clone(), p.g.clone(), seg.a, seg.b, p.nu, omega)
}

/// Truncated asymptotic rule of order m, summed over the segments.
pub fn eval_asymptotic(p: &Problem, m: usize, omega: f64) -> Result<f64> {
    let mut total = 0.0;
    for seg in p.segments() {
        let spec = spec_for(p, seg, omega)?;
        total += match seg.case {
            SegmentCase::Plain => asymptotic_plain(&spec, m)?,
            SegmentCase::Zero { xi } => real_part(asymptotic_zero(&spec, xi, m)?, "zero-case value")?,
            SegmentCase::Stationary { zeta, r, type_ii } => {
                if !type_ii {
                    return Err(Error::UnsupportedStationaryKind {
                        zeta,
                        g_value: p.g.value(zeta)?,
                    });
                }
                let position = if (zeta - seg.a).abs() <= 1e-12 * (seg.b - seg.a) {
                    StationaryPosition::LeftEndpoint
                } else {
                    StationaryPosition::Interior
                };
                asymptotic_stationary(&spec, zeta, r, m, position)?
            }
        };
    }
    Ok(total)
}

/// Interpolatory rule over the segments. The node pattern is mapped affinely
/// onto each segment and the basis follows the segment's case, so a plan
/// whose nodes miss a required critical point fails with a clear error.
pub fn eval_filon(p: &Problem, nodes: &[f64], mults: &[usize], omega: f64) -> Result<f64> {
    let mut total = 0.0;
    let single = p.segments().len() == 1;
    for seg in p.segments() {
        let mapped: Vec<f64> = if single {
            nodes.to_vec()
        } else {
            let scale = (seg.b - seg.a) / (p.b - p.a);
            nodes.iter().map(|x| seg.a + (x - p.a) * scale).collect()
        };
        let basis = match seg.case {
            SegmentCase::Plain | SegmentCase::Zero { .. } => FilonBasis::Plain,
            SegmentCase::Stationary { zeta, r, type_ii } => {
                if !type_ii {
                    return Err(Error::UnsupportedStationaryKind {
                        zeta,
                        g_value: p.g.value(zeta)?,
                    });
                }
                FilonBasis::Stationary { r }
            }
        };
        let plan = FilonPlan::new(mapped, mults.to_vec(), basis)?;
        let spec = spec_for(p, seg, omega)?;
        total += real_part(filon(&spec, &plan)?, "interpolatory value")?;
    }
    Ok(total)
}

/// Adaptive reference quadrature over the whole interval; classification
/// does not matter here, only oscillation resolution.
pub fn eval_oracle(p: &Problem, omega: f64, tol: f64) -> Result<OracleResult> {
    let spec = TransformSpec::new(p.f.clone(), p.g.clone(), p.a, p.b, p.nu, omega)?;
    reference_hankel(&spec, tol)
}

/// A method request as given on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum MethodDesc {
    Asymptotic { m: usize },
    Filon { nodes: Vec<f64>, mults: Vec<usize> },
    Oracle { tol: f64 },
}

impl MethodDesc {
    /// Parses a compact descriptor: `asymptotic[:M]`, `filon:NODES:MULTS`
    /// (entries separated by commas or `|`, fractions like `4/3` allowed),
    /// or `oracle[:TOL]`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        match (parts[0], parts.len()) {
            ("asymptotic", 1) => Ok(Self::Asymptotic { m: 1 }),
            ("asymptotic", 2) => {
                // Accept both the bare order and the id() spelling "m=2".
                let raw = parts[1].strip_prefix("m=").unwrap_or(parts[1]);
                let m = raw.parse().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad truncation order '{}'", parts[1]),
                })?;
                Ok(Self::Asymptotic { m })
            }
            ("filon", 3) => Ok(Self::Filon {
                nodes: parse_number_list(parts[1])?,
                mults: parse_usize_list(parts[2])?,
            }),
            ("oracle", 1) => Ok(Self::Oracle { tol: 1e-13 }),
            ("oracle", 2) => {
                let tol = parts[1].parse().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad tolerance '{}'", parts[1]),
                })?;
                Ok(Self::Oracle { tol })
            }
            _ => Err(Error::Domain(format!(
                "unknown method descriptor '{s}'; expected asymptotic[:M], filon:NODES:MULTS, \
                 or oracle[:TOL]"
            ))),
        }
    }

    /// Stable identifier for CSV rows; contains no commas.
    pub fn id(&self) -> String {
        match self {
            Self::Asymptotic { m } => format!("asymptotic:m={m}"),
            Self::Filon { nodes, mults } => {
                let ns: Vec<String> = nodes.iter().map(|v| format!("{v}")).collect();
                let ms: Vec<String> = mults.iter().map(|v| format!("{v}")).collect();
                format!("filon:{}:{}", ns.join("|"), ms.join("|"))
            }
            Self::Oracle { .. } => "oracle".into(),
        }
    }
}

/// Parses a numeric literal like `2`, `1.25`, or `4/3`.
pub fn parse_number(s: &str) -> Result<f64> {
    let t = s.trim();
    let bad = || Error::Parse { pos: 0, msg: format!("bad number '{t}'") };
    if let Some((num, den)) = t.split_once('/') {
        let n: f64 = num.trim().parse().map_err(|_| bad())?;
        let d: f64 = den.trim().parse().map_err(|_| bad())?;
        if d == 0.0 || !n.is_finite() || !d.is_finite() {
            return Err(bad());
        }
        return Ok(n / d);
    }
    t.parse().map_err(|_| bad())
}

/// Parses a comma or `|` separated list of numeric literals.
pub fn parse_number_list(s: &str) -> Result<Vec<f64>> {
    s.split(|c| c == ',' || c == '|').map(parse_number).collect()
}

/// Parses a comma or `|` separated list of multiplicities.
pub fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c| c == ',' || c == '|')
        .map(|t| {
            t.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad multiplicity '{}'", t.trim()),
            })
        })
        .collect()
}

/// The error-decay exponent theory predicts for this method on this problem;
/// it only scales the CSV error column so flat means on-rate.
pub fn expected_rate(p: &Problem, desc: &MethodDesc) -> f64 {
    let seg_min = |rate: &dyn Fn(&SegmentCase) -> f64| {
        p.segments()
            .iter()
            .map(|s| rate(&s.case))
            .fold(f64::INFINITY, f64::min)
    };
    match desc {
        MethodDesc::Oracle { .. } => 0.0,
        MethodDesc::Asymptotic { m } => seg_min(&|case| asym_rate(case, *m)),
        MethodDesc::Filon { nodes, mults } => seg_min(&|case| filon_rate(case, nodes, mults)),
    }
}

fn asym_rate(case: &SegmentCase, m: usize) -> f64 {
    let m = m as f64;
    match case {
        SegmentCase::Plain => m + 1.5,
        // Guaranteed rate; vanishing series data at the zero can add more.
        SegmentCase::Zero { .. } => m + 1.0,
        SegmentCase::Stationary { r, .. } => {
            let rp1 = (*r + 1) as f64;
            m + 1.0 - *r as f64 / rp1
        }
    }
}

fn mult_nearest(nodes: &[f64], mults: &[usize], x: f64) -> f64 {
    let mut best = (f64::INFINITY, 0usize);
    for (n, m) in nodes.iter().zip(mults) {
        let d = (n - x).abs();
        if d < best.0 {
            best = (d, *m);
        }
    }
    best.1 as f64
}

fn filon_rate(case: &SegmentCase, nodes: &[f64], mults: &[usize]) -> f64 {
    let edge = (mults[0] as f64).min(*mults.last().unwrap() as f64);
    match case {
        SegmentCase::Plain => edge + 1.5,
        // A captured zero at an interval edge shares the endpoint grading;
        // an interior one is guaranteed only one order past its nodal
        // multiplicity, and an uncaptured zero caps the decay at one order.
        SegmentCase::Zero { xi } => {
            let eps = 1e-9;
            let at_edge = (xi - nodes[0]).abs() <= eps
                || (xi - nodes.last().unwrap()).abs() <= eps;
            let captured = nodes.iter().position(|n| (n - xi).abs() <= eps);
            let zero_part = match (captured, at_edge) {
                (Some(i), true) => mults[i] as f64 + 1.5,
                (Some(i), false) => mults[i] as f64 + 1.0,
                (None, _) => 1.0,
            };
            (edge + 1.5).min(zero_part)
        }
        SegmentCase::Stationary { zeta, r, .. } => {
            let rp1 = (*r + 1) as f64;
            let at = (mult_nearest(nodes, mults, *zeta) / rp1).floor();
            let away = mults
                .iter()
                .zip(nodes)
                .filter(|(_, n)| (**n - *zeta).abs() > 1e-12)
                .map(|(m, _)| *m as f64)
                .fold(f64::INFINITY, f64::min);
            at.min(away) + 1.0 - *r as f64 / rp1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn descriptor_parsing_and_ids() {
        assert_eq!(MethodDesc::parse("asymptotic").unwrap(), MethodDesc::Asymptotic { m: 1 });
        assert_eq!(MethodDesc::parse("asymptotic:3").unwrap(), MethodDesc::Asymptotic { m: 3 });
        // The printed id must parse back to the same descriptor.
        let a = MethodDesc::Asymptotic { m: 2 };
        assert_eq!(MethodDesc::parse(&a.id()).unwrap(), a);
        let f = MethodDesc::parse("filon:1,4/3,5/3,2:1,1,1,2").unwrap();
        match &f {
            MethodDesc::Filon { nodes, mults } => {
                assert_eq!(nodes.len(), 4);
                assert_relative_eq!(nodes[1], 4.0 / 3.0, max_relative = 1e-15);
                assert_eq!(mults, &vec![1, 1, 1, 2]);
            }
            _ => panic!("wrong variant"),
        }
        assert!(f.id().starts_with("filon:1|1.3333333333333333|"));
        assert!(!f.id().contains(','));
        assert_eq!(MethodDesc::parse("oracle").unwrap(), MethodDesc::Oracle { tol: 1e-13 });
        assert!(MethodDesc::parse("levin").is_err());
        assert!(MethodDesc::parse("filon:1,2").is_err());
        assert!(MethodDesc::parse("asymptotic:x").is_err());
    }

    #[test]
    fn number_parsing_accepts_fractions() {
        assert_relative_eq!(parse_number("5/3").unwrap(), 5.0 / 3.0, max_relative = 1e-16);
        assert_relative_eq!(parse_number(" 2.5 ").unwrap(), 2.5, max_relative = 1e-16);
        assert!(parse_number("1/0").is_err());
        assert!(parse_number("one").is_err());
        assert_eq!(parse_number_list("0,1/3|2/3, 1").unwrap().len(), 4);
        assert!(parse_usize_list("1,2,x").is_err());
    }

    #[test]
    fn single_segment_dispatch_matches_core() {
        let p = Problem::new("cos(x)", "x^2+x", 1.0, 2.0, 1.0).unwrap();
        assert_eq!(p.segments().len(), 1);
        assert_eq!(p.segments()[0].case, SegmentCase::Plain);
        let spec = TransformSpec::new(
            p.f.clone(),
            p.g.clone(),
            1.0,
            2.0,
            1.0,
            140.0,
        )
        .unwrap();
        let direct = asymptotic_plain(&spec, 2).unwrap();
        assert_relative_eq!(eval_asymptotic(&p, 2, 140.0).unwrap(), direct, max_relative = 1e-15);

        let nodes = vec![1.0, 2.0];
        let mults = vec![1usize, 1];
        let plan = FilonPlan::new(nodes.clone(), mults.clone(), FilonBasis::Plain).unwrap();
        let direct_f = filon(&spec, &plan).unwrap().re;
        assert_relative_eq!(
            eval_filon(&p, &nodes, &mults, 140.0).unwrap(),
            direct_f,
            max_relative = 1e-15
        );
    }

    #[test]
    fn zero_and_stationary_dispatch() {
        let pz = Problem::new("sin(x)", "x", 0.0, 1.0, 2.0).unwrap();
        assert!(matches!(pz.segments()[0].case, SegmentCase::Zero { .. }));
        let q = eval_asymptotic(&pz, 2, 80.0).unwrap();
        let h = eval_oracle(&pz, 80.0, 1e-12).unwrap().value;
        println!("zero case q={q:.6e} h={h:.6e}");
        assert_abs_diff_eq!(q, h, epsilon = 1e-6);

        let ps = Problem::new("exp(x)", "x^2", 0.0, 1.0, 2.0).unwrap();
        match ps.segments()[0].case {
            SegmentCase::Stationary { zeta, r, type_ii } => {
                assert_abs_diff_eq!(zeta, 0.0, epsilon = 1e-9);
                assert_eq!(r, 1);
                assert!(type_ii);
            }
            ref c => panic!("misclassified: {c:?}"),
        }
        let q = eval_asymptotic(&ps, 2, 90.0).unwrap();
        let h = eval_oracle(&ps, 90.0, 1e-12).unwrap().value;
        assert_abs_diff_eq!(q, h, epsilon = 1e-4);
    }

    #[test]
    fn multi_critical_interval_is_segmented() {
        // Two simple zeros force a type-I stationary point between them
        // (Rolle), so the segmented classification has all three and the
        // asymptotic dispatch refuses the middle piece.
        // Integer order keeps the sign-crossing oscillator range real-valued.
        let p = Problem::new("1", "x^2-2*x+0.75", 0.0, 2.0, 1.0).unwrap();
        let cases: Vec<_> = p.segments().iter().map(|s| s.case).collect();
        println!("segments: {}", p.case_summary());
        assert_eq!(p.segments().len(), 3);
        assert!(matches!(cases[0], SegmentCase::Zero { xi } if (xi - 0.5).abs() < 1e-9));
        assert!(
            matches!(cases[1], SegmentCase::Stationary { zeta, type_ii: false, .. } if (zeta - 1.0).abs() < 1e-9)
        );
        assert!(matches!(cases[2], SegmentCase::Zero { xi } if (xi - 1.5).abs() < 1e-9));
        assert!(matches!(
            eval_asymptotic(&p, 1, 60.0),
            Err(Error::UnsupportedStationaryKind { .. })
        ));
        // The reference integrator does not care about classification.
        assert!(eval_oracle(&p, 60.0, 1e-10).unwrap().est_abs_error <= 1e-10);
    }

    #[test]
    fn expected_rates_match_theory() {
        let plain = Problem::new("cos(x)", "x^2+x", 1.0, 2.0, 1.0).unwrap();
        let zero = Problem::new("sin(x)", "x", 0.0, 1.0, 2.0).unwrap();
        let stat = Problem::new("exp(x)", "x^2", 0.0, 1.0, 2.0).unwrap();
        let a2 = MethodDesc::Asymptotic { m: 2 };
        assert_relative_eq!(expected_rate(&plain, &a2), 3.5);
        assert_relative_eq!(expected_rate(&zero, &a2), 3.0);
        assert_relative_eq!(expected_rate(&stat, &a2), 2.5);
        let f = MethodDesc::Filon { nodes: vec![0.0, 1.0], mults: vec![4, 2] };
        assert_relative_eq!(expected_rate(&stat, &f), 2.5);
        // A zero captured at the edge is graded like a plain endpoint.
        let f = MethodDesc::Filon { nodes: vec![0.0, 0.5, 1.0], mults: vec![1, 1, 1] };
        assert_relative_eq!(expected_rate(&zero, &f), 2.5);
        let f = MethodDesc::Filon { nodes: vec![0.0, 0.5, 1.0], mults: vec![3, 1, 3] };
        assert_relative_eq!(expected_rate(&zero, &f), 4.5);
        let o = MethodDesc::Oracle { tol: 1e-10 };
        assert_relative_eq!(expected_rate(&plain, &o), 0.0);
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(exit_code_for(&Error::Parse { pos: 3, msg: "x".into() }), 2);
        assert_eq!(exit_code_for(&Error::WrongMethod("m".into())), 2);
        assert_eq!(
            exit_code_for(&Error::UnsupportedStationaryKind { zeta: 0.0, g_value: 1.0 }),
            2
        );
        assert_eq!(exit_code_for(&Error::CostGuard(1e9)), 3);
        assert_eq!(exit_code_for(&Error::IllConditioned { cond: 1e16 }), 3);
        assert_eq!(exit_code_for(&Error::Numerical("n".into())), 3);
    }

    #[test]
    fn rejects_bad_problems() {
        assert!(matches!(
            Problem::new("cos(", "x", 0.0, 1.0, 0.0),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Problem::new("1", "x", 1.0, 1.0, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            Problem::new("1", "x", 0.0, 1.0, f64::NAN),
            Err(Error::Domain(_))
        ));
    }
}
