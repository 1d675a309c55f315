//! Command-line surface: sample geodesics and rotation orbits to files,
//! tabulate the quotient Jacobian, report Maxwell/cut data, and run the
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification or runtime failure, 2 usage error.

use clap::{Args, Parser, Subcommand};
use qheis_core::cut_locus;
use qheis_core::geodesic::GeodesicParams;
use qheis_core::io::Table;
use qheis_core::symmetry;
use qheis_core::verify;
use serde_json::json;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qheis", version, about = "Sub-Riemannian geodesics on the 7-dimensional quaternionic Heisenberg group")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a geodesic: t, b1..b4, a2..a4, h1..h4, |b|^2
    Geodesic(GeodesicArgs),
    /// Sample the rotation orbit of a geodesic over an (s, t) grid
    Orbit(OrbitArgs),
    /// Tabulate the quotient Jacobian (expanded and factored) and its inner factor
    Jacobian(JacobianArgs),
    /// Report Maxwell time/point, first conjugate time and cut time
    Maxwell(MaxwellArgs),
    /// Run the deterministic verification suite; exits 1 on any failure
    Verify(VerifyArgs),
}

/// Geodesic parametrization, either by initial covector or by the
/// solution constants of the vertical system (mutually exclusive).
#[derive(Args)]
struct ParamArgs {
    /// Initial horizontal covector h1,h2,h3,h4 (requires --c567)
    #[arg(long, value_name = "H1,H2,H3,H4", allow_hyphen_values = true, requires = "c567")]
    covector: Option<String>,
    /// Vertical covector constants C5,C6,C7
    #[arg(long, value_name = "C5,C6,C7", allow_hyphen_values = true, requires = "covector")]
    c567: Option<String>,
    /// Solution constants C1,...,C7 of the vertical system
    #[arg(
        long,
        alias = "paper-constants",
        value_name = "C1,...,C7",
        allow_hyphen_values = true,
        conflicts_with_all = ["covector", "c567"]
    )]
    constants: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_parser = ["csv", "json"], default_value = "csv")]
    format: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GeodesicArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Final time (defaults to one period 2 pi / C, or 1.0 when degenerate)
    #[arg(long, allow_hyphen_values = true)]
    t_max: Option<f64>,
    /// Number of sample rows (at least 2)
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Rotation family: c (conjugates the vertical block) or d (fixes it)
    #[arg(long, value_parser = ["c", "d"])]
    side: String,
    /// Rotation axis q1,q2,q3 (nonzero)
    #[arg(long, value_name = "Q1,Q2,Q3", allow_hyphen_values = true)]
    axis: String,
    /// Largest rotation parameter s
    #[arg(long, default_value_t = PI)]
    s_max: f64,
    /// Number of s samples (at least 1)
    #[arg(long, default_value_t = 9)]
    s_samples: usize,
    /// Final time (defaults to one period)
    #[arg(long, allow_hyphen_values = true)]
    t_max: Option<f64>,
    /// Number of t samples per orbit curve (at least 2)
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct JacobianArgs {
    /// Left end of the tau range
    #[arg(long, default_value_t = 0.0)]
    tau_min: f64,
    /// Right end of the tau range
    #[arg(long, default_value_t = 4.0 * PI)]
    tau_max: f64,
    /// Number of sample rows (at least 2)
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MaxwellArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Root isolation tolerance for the first conjugate time
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Output format
    #[arg(long, value_parser = ["text", "json"], default_value = "text")]
    format: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Seed for the randomized property checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Scale factor applied to every check tolerance (1.0 = pinned defaults)
    #[arg(long, default_value_t = 1.0)]
    tolerance: f64,
    /// Path for the JSON report (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

enum RunError {
    Usage(String),
    Other(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for RunError {
    fn from(e: E) -> Self {
        RunError::Other(e.into())
    }
}

fn usage(msg: impl Into<String>) -> RunError {
    RunError::Usage(msg.into())
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => match run(cli) {
            Ok(code) => code,
            Err(RunError::Usage(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Err(RunError::Other(e)) => {
                eprintln!("error: {e:#}");
                ExitCode::FAILURE
            }
        },
        Err(e) => {
            let _ = e.print();
            ExitCode::from(e.exit_code().clamp(0, 255) as u8)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, RunError> {
    match cli.command {
        Command::Geodesic(args) => cmd_geodesic(args),
        Command::Orbit(args) => cmd_orbit(args),
        Command::Jacobian(args) => cmd_jacobian(args),
        Command::Maxwell(args) => cmd_maxwell(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn parse_floats(flag: &str, text: &str, n: usize) -> Result<Vec<f64>, RunError> {
    let values: Result<Vec<f64>, _> = text.split(',').map(|s| s.trim().parse::<f64>()).collect();
    match values {
        Ok(v) if v.len() == n => Ok(v),
        Ok(v) => Err(usage(format!(
            "--{flag} expects {n} comma-separated numbers, got {}",
            v.len()
        ))),
        Err(e) => Err(usage(format!("--{flag}: {e}"))),
    }
}

fn params_meta(gp: &GeodesicParams) -> serde_json::Value {
    json!({
        "h0": gp.h0(),
        "c567": gp.c567(),
        "frequency": gp.frequency(),
        "speed_sq": gp.speed_sq(),
        "u": gp.u().to_array(),
        "v": gp.v().to_array(),
        "w": gp.w(),
        "degenerate": gp.is_degenerate(),
    })
}

fn build_params(args: &ParamArgs) -> Result<GeodesicParams, RunError> {
    match (&args.covector, &args.c567, &args.constants) {
        (Some(h), Some(c), None) => {
            let h = parse_floats("covector", h, 4)?;
            let c = parse_floats("c567", c, 3)?;
            Ok(GeodesicParams::from_covector(
                [h[0], h[1], h[2], h[3]],
                [c[0], c[1], c[2]],
            ))
        }
        (None, None, Some(cs)) => {
            let cs = parse_floats("constants", cs, 7)?;
            GeodesicParams::from_solution_constants(
                [cs[0], cs[1], cs[2], cs[3]],
                [cs[4], cs[5], cs[6]],
            )
            .map_err(|_| usage("--constants: C5, C6, C7 must not all vanish"))
        }
        _ => Err(usage(
            "provide either --covector H1,H2,H3,H4 --c567 C5,C6,C7 or --constants C1,...,C7",
        )),
    }
}

fn default_t_max(gp: &GeodesicParams) -> f64 {
    gp.period().unwrap_or(1.0)
}

fn check_samples(samples: usize) -> Result<(), RunError> {
    if samples < 2 {
        return Err(usage("--samples must be at least 2"));
    }
    Ok(())
}

fn emit_table(table: &Table, meta: serde_json::Value, output: &OutputArgs) -> Result<(), RunError> {
    let text = match output.format.as_str() {
        "csv" => table.to_csv(),
        _ => format!("{:#}\n", table.to_json(meta)),
    };
    write_out(&text, &output.out)
}

fn write_out(text: &str, out: &Option<PathBuf>) -> Result<(), RunError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| RunError::Other(anyhow::anyhow!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_geodesic(args: GeodesicArgs) -> Result<ExitCode, RunError> {
    check_samples(args.samples)?;
    let gp = build_params(&args.params)?;
    let t_max = args.t_max.unwrap_or_else(|| default_t_max(&gp));
    if !t_max.is_finite() {
        return Err(usage("--t-max must be finite"));
    }

    let mut table = Table::new(&[
        "t", "b1", "b2", "b3", "b4", "a2", "a3", "a4", "h1", "h2", "h3", "h4", "b_sq",
    ]);
    for k in 0..args.samples {
        let t = t_max * k as f64 / (args.samples - 1) as f64;
        let p = gp.point(t);
        let h = gp.vertical(t);
        let [b1, b2, b3, b4] = p.b.to_array();
        table.push(vec![
            t,
            b1,
            b2,
            b3,
            b4,
            p.a[0],
            p.a[1],
            p.a[2],
            h[0],
            h[1],
            h[2],
            h[3],
            p.b.norm_sq(),
        ]);
    }

    let meta = json!({
        "command": "geodesic",
        "t_max": t_max,
        "samples": args.samples,
        "params": params_meta(&gp),
    });
    emit_table(&table, meta, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_orbit(args: OrbitArgs) -> Result<ExitCode, RunError> {
    check_samples(args.samples)?;
    if args.s_samples < 1 {
        return Err(usage("--s-samples must be at least 1"));
    }
    let gp = build_params(&args.params)?;
    if gp.is_degenerate() {
        return Err(usage("orbit requires non-degenerate parameters (C > 0)"));
    }
    let axis_values = parse_floats("axis", &args.axis, 3)?;
    let axis = [axis_values[0], axis_values[1], axis_values[2]];
    if axis.iter().map(|x| x * x).sum::<f64>() == 0.0 {
        return Err(usage("--axis must be nonzero"));
    }
    let t_max = args.t_max.unwrap_or_else(|| default_t_max(&gp));

    let (c_axis, d_axis) = match args.side.as_str() {
        "c" => (axis, [0.0; 3]),
        _ => ([0.0; 3], axis),
    };

    let mut table = Table::new(&["s", "t", "a2", "a3", "a4", "b1", "b2", "b3", "b4"]);
    for i in 0..args.s_samples {
        let s = if args.s_samples == 1 {
            0.0
        } else {
            args.s_max * i as f64 / (args.s_samples - 1) as f64
        };
        let rotation = symmetry::flow_rotation(c_axis, d_axis, s)
            .map_err(|e| RunError::Other(anyhow::anyhow!("{e}")))?;
        let rotated = symmetry::act_geodesic(rotation, &gp)
            .map_err(|e| RunError::Other(anyhow::anyhow!("{e}")))?;
        for k in 0..args.samples {
            let t = t_max * k as f64 / (args.samples - 1) as f64;
            let coords = rotated.point(t).coords();
            let mut row = vec![s, t];
            row.extend_from_slice(&coords);
            table.push(row);
        }
    }

    let meta = json!({
        "command": "orbit",
        "side": args.side,
        "axis": axis,
        "s_max": args.s_max,
        "s_samples": args.s_samples,
        "t_max": t_max,
        "samples": args.samples,
        "params": params_meta(&gp),
    });
    emit_table(&table, meta, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_jacobian(args: JacobianArgs) -> Result<ExitCode, RunError> {
    check_samples(args.samples)?;
    if !(args.tau_max > args.tau_min) {
        return Err(usage("--tau-max must exceed --tau-min"));
    }

    let mut table = Table::new(&["tau", "j_expanded", "j_factored", "f"]);
    for k in 0..args.samples {
        let tau =
            args.tau_min + (args.tau_max - args.tau_min) * k as f64 / (args.samples - 1) as f64;
        table.push(vec![
            tau,
            cut_locus::jacobian_expanded(tau),
            cut_locus::jacobian_factored(tau),
            cut_locus::jacobian_inner_factor(tau),
        ]);
    }

    let meta = json!({
        "command": "jacobian",
        "tau_min": args.tau_min,
        "tau_max": args.tau_max,
        "samples": args.samples,
        // J is tabulated in rescaled time tau = C t; the positive 1/C^10
        // prefactor of the unscaled Jacobian never vanishes and is omitted.
        "omitted_prefactor": "C^-10",
    });
    emit_table(&table, meta, &args.output)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_maxwell(args: MaxwellArgs) -> Result<ExitCode, RunError> {
    if args.tolerance <= 0.0 {
        return Err(usage("--tolerance must be positive"));
    }
    let gp = build_params(&args.params)?;

    let root = cut_locus::first_conjugate_tau(args.tolerance)
        .map_err(|e| RunError::Other(anyhow::anyhow!("{e}")))?;

    let text = if gp.is_degenerate() {
        match args.format.as_str() {
            "json" => format!(
                "{:#}\n",
                json!({
                    "params": params_meta(&gp),
                    "maxwell_time": null,
                    "maxwell_point": null,
                    "cut_time": null,
                    "first_conjugate_tau": root.root,
                    "note": "degenerate straight-line geodesic: cut time unbounded",
                })
            ),
            _ => "degenerate straight-line geodesic: no Maxwell point, cut time unbounded\n"
                .to_string(),
        }
    } else {
        let t = cut_locus::maxwell_time(&gp).expect("non-degenerate");
        let point = cut_locus::maxwell_point(&gp).expect("non-degenerate");
        match args.format.as_str() {
            "json" => format!(
                "{:#}\n",
                json!({
                    "params": params_meta(&gp),
                    "maxwell_time": t,
                    "maxwell_point": point.coords(),
                    "cut_time": cut_locus::cut_time(&gp).expect("non-degenerate"),
                    "first_conjugate_tau": root.root,
                    "first_conjugate_time": root.root / gp.frequency(),
                    "root_residual": root.residual,
                })
            ),
            _ => {
                let c = point.coords();
                format!(
                    "maxwell time:        {t:.17}\n\
                     maxwell point:       [{}, {}, {}, {}, {}, {}, {}]\n\
                     first conjugate tau: {tau:.17} (residual {res:.3e})\n\
                     cut time:            {t:.17}\n",
                    c[0], c[1], c[2], c[3], c[4], c[5], c[6],
                    tau = root.root,
                    res = root.residual,
                )
            }
        }
    };
    write_out(&text, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, RunError> {
    if args.tolerance <= 0.0 {
        return Err(usage("--tolerance must be positive"));
    }
    let report = verify::run_all(args.seed, args.tolerance);
    for check in &report.checks {
        eprintln!(
            "{} {:<40} residual {:>12.3e}  tolerance {:>9.1e}",
            if check.passed { "ok  " } else { "FAIL" },
            check.name,
            check.residual,
            check.tolerance,
        );
    }
    eprintln!(
        "{}: {}/{} checks passed (seed {})",
        if report.passed { "PASS" } else { "FAIL" },
        report.checks.iter().filter(|c| c.passed).count(),
        report.checks.len(),
        report.seed,
    );

    let text = format!("{:#}\n", serde_json::to_value(&report)?);
    write_out(&text, &args.out)?;
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
