//! `hankel`: evaluate finite Hankel transforms, sweep frequencies into CSV
//! convergence reports, and dump modified-moment tables.

use clap::{Args, Parser, Subcommand};
use hankel_cli::sweep::{report_csv, run_sweep, SweepConfig};
use hankel_cli::{
    eval_asymptotic, eval_filon, eval_oracle, exit_code_for, parse_number_list, parse_usize_list,
    MethodDesc, Problem,
};
use hankel_quad::{
    modified_moments, modified_moments_stationary, Error, ExprFunction, Provenance, Result,
};

#[derive(Parser)]
#[command(name = "hankel", version, about = "Finite Hankel transform quadrature toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one transform with a chosen method
    Eval(EvalArgs),
    /// Sweep omega over a geometric grid and write a CSV convergence report
    Sweep(SweepArgs),
    /// Print a modified-moment table as CSV
    Moments(MomentsArgs),
}

#[derive(Args)]
struct CommonSpec {
    /// Amplitude expression in x
    #[arg(long)]
    f: String,
    /// Oscillator expression in x
    #[arg(long)]
    g: String,
    /// Left endpoint
    #[arg(long)]
    a: f64,
    /// Right endpoint
    #[arg(long)]
    b: f64,
    /// Bessel order
    #[arg(long)]
    nu: f64,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    spec: CommonSpec,
    /// Frequency
    #[arg(long)]
    omega: f64,
    /// asymptotic | filon | oracle
    #[arg(long)]
    method: String,
    /// Truncation order for the asymptotic method (default 1)
    #[arg(long)]
    m: Option<usize>,
    /// Interpolation nodes, comma separated; fractions like 4/3 allowed
    #[arg(long)]
    nodes: Option<String>,
    /// Confluence multiplicities, comma separated, one per node
    #[arg(long)]
    mults: Option<String>,
    /// Oracle tolerance (default 1e-10)
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    spec: CommonSpec,
    /// Grid start
    #[arg(long = "omega-min")]
    omega_min: f64,
    /// Grid end
    #[arg(long = "omega-max")]
    omega_max: f64,
    /// Number of geometric grid points
    #[arg(long)]
    points: usize,
    /// Output CSV path
    #[arg(long)]
    out: std::path::PathBuf,
    /// Method descriptor, repeatable: asymptotic[:M] | filon:NODES:MULTS | oracle[:TOL]
    #[arg(long = "method", required = true)]
    methods: Vec<String>,
    /// Reference oracle tolerance
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
}

#[derive(Args)]
struct MomentsArgs {
    /// Oscillator expression in x
    #[arg(long)]
    g: String,
    /// Left endpoint
    #[arg(long)]
    a: f64,
    /// Right endpoint
    #[arg(long)]
    b: f64,
    /// Bessel order
    #[arg(long)]
    nu: f64,
    /// Frequency
    #[arg(long)]
    omega: f64,
    /// Number of table entries
    #[arg(long)]
    count: usize,
    /// Stationary-point order for the fractional-power basis
    #[arg(long = "stationary-r")]
    stationary_r: Option<u32>,
}

fn check_omega(omega: f64) -> Result<()> {
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::Domain(format!("omega must be positive, got {omega}")));
    }
    Ok(())
}

fn run_eval(args: EvalArgs) -> Result<()> {
    check_omega(args.omega)?;
    let p = Problem::new(&args.spec.f, &args.spec.g, args.spec.a, args.spec.b, args.spec.nu)?;
    println!("case: {}", p.case_summary());
    match args.method.as_str() {
        "asymptotic" => {
            let m = args.m.unwrap_or(1);
            let v = eval_asymptotic(&p, m, args.omega)?;
            println!("method: asymptotic m={m}");
            println!("value: {v:.16e}");
        }
        "filon" => {
            let nodes = parse_number_list(
                args.nodes
                    .as_deref()
                    .ok_or_else(|| Error::Domain("filon needs --nodes".into()))?,
            )?;
            let mults = parse_usize_list(
                args.mults
                    .as_deref()
                    .ok_or_else(|| Error::Domain("filon needs --mults".into()))?,
            )?;
            let v = eval_filon(&p, &nodes, &mults, args.omega)?;
            let id = MethodDesc::Filon { nodes, mults }.id();
            println!("method: {id}");
            println!("value: {v:.16e}");
        }
        "oracle" => {
            let tol = args.tol.unwrap_or(1e-10);
            let r = eval_oracle(&p, args.omega, tol)?;
            println!("method: oracle tol={tol:.3e}");
            println!("value: {:.16e}", r.value);
            println!("est_abs_error: {:.3e}", r.est_abs_error);
            println!("panels: {}", r.panels_used);
        }
        other => {
            return Err(Error::Domain(format!(
                "unknown method '{other}'; expected asymptotic, filon, or oracle"
            )))
        }
    }
    Ok(())
}

fn run_sweep_cmd(args: SweepArgs) -> Result<()> {
    let p = Problem::new(&args.spec.f, &args.spec.g, args.spec.a, args.spec.b, args.spec.nu)?;
    let methods: Vec<MethodDesc> =
        args.methods.iter().map(|s| MethodDesc::parse(s)).collect::<Result<_>>()?;
    let cfg = SweepConfig {
        omega_min: args.omega_min,
        omega_max: args.omega_max,
        points: args.points,
        tol: args.tol,
    };
    let echo = format!(
        "--f '{}' --g '{}' --a {} --b {} --nu {} --omega-min {} --omega-max {} --points {}",
        args.spec.f,
        args.spec.g,
        args.spec.a,
        args.spec.b,
        args.spec.nu,
        args.omega_min,
        args.omega_max,
        args.points
    );
    let report = run_sweep(&p, &methods, &cfg, &echo)?;
    let csv = report_csv(&report);
    std::fs::write(&args.out, &csv)
        .map_err(|e| Error::Numerical(format!("cannot write {}: {e}", args.out.display())))?;
    for col in &report.methods {
        match col.fit {
            Some(f) => println!(
                "method={} slope={:.3} band95={:.3} clamped={}",
                col.id, f.slope, f.band95, f.clamped_in_fit
            ),
            None => println!("method={} slope=na", col.id),
        }
    }
    println!(
        "wrote {} ({} rows)",
        args.out.display(),
        report.omegas.len() * report.methods.len()
    );
    Ok(())
}

fn run_moments(args: MomentsArgs) -> Result<()> {
    check_omega(args.omega)?;
    let g = ExprFunction::parse(&args.g)?;
    let table = match args.stationary_r {
        Some(r) => {
            modified_moments_stationary(&g, args.a, args.b, args.nu, args.omega, r, args.count)?
        }
        None => modified_moments(&g, args.a, args.b, args.nu, args.omega, args.count)?,
    };
    println!("k,re,im,provenance,stable");
    for k in 0..table.len() {
        let v = table.values[k];
        let prov = match table.provenance[k] {
            Provenance::ClosedForm => "closed_form",
            Provenance::Recurrence => "recurrence",
            Provenance::Oracle => "oracle",
        };
        println!("{k},{:.16e},{:.16e},{prov},{}", v.re, v.im, k <= table.stable_upto);
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => run_eval(a),
        Command::Sweep(a) => run_sweep_cmd(a),
        Command::Moments(a) => run_moments(a),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(exit_code_for(&e));
    }
}
