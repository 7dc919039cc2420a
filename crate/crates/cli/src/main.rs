//! `gemini-dilog`: dilogarithm evaluation, named constants, identity verification and
//! gemini-curve geometry from the command line.

mod output;

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout().lock(), $($t)*).is_err() {
            std::process::exit(0);
        }
    }};
}

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use gemini_dilog::analysis::constants_table;
use gemini_dilog::catalog::{verify_all, Group, Status, VerificationReport, VerifyOptions};
use gemini_dilog::gemini::{
    antiderivative, area_decomposition, area_decomposition_at, area_ratio_r, atot_of_a_p, fixed_point,
    median, median_rule_residuals, symmetric_partner, total_area, GeminiParams,
};
use gemini_dilog::geometry::{curvature_profile, geminoid_volume, raw_moment, raw_moment_quadrature, shell_volume};
use gemini_dilog::polylog::{chi2, clausen_cl2, li2_complex, li2_real, li2_unit_circle, li3_real, trigamma};
use gemini_dilog::Complex64;
use serde_json::json;

use output::{complex, csv_row, num, real_or_complex};

const SEED_ENV: &str = "GEMINI_DILOG_SEED";

#[derive(Parser)]
#[command(name = "gemini-dilog", version, about = "Dilogarithm identities and gemini functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Li2,
    Li2c,
    Li3,
    Chi2,
    Cl2,
    Trigamma,
    UnitCircle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Series {
    /// Area ratio r(a) = A_tot/A_0 as CSV `a,r`.
    ROfA,
    /// Total area of the gemini with b = 1/(a + p) as CSV `a,atot`.
    AtotP,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function: li2 x | li2c re im | li3 x | chi2 x | cl2 theta | trigamma x | unit-circle p q
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(required = true, allow_negative_numbers = true)]
        args: Vec<f64>,
    },
    /// Print the named-constant table.
    Constants {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Verify the identity catalog.
    Verify {
        /// Restrict to one group, G1..G14.
        #[arg(long)]
        group: Option<Group>,
        /// Restrict to one entry id.
        #[arg(long)]
        id: Option<String>,
        /// Absolute residual tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Sampling seed; GEMINI_DILOG_SEED takes precedence when set.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Treat flagged-discrepancy entries as failures.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads; 0 picks the available parallelism.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Areas of a gemini function: total, middle square, apex; with --x1 the partner
    /// limit and the area between, with --x1 and --x2 the area between the two.
    Area {
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long)]
        x1: Option<f64>,
        #[arg(long, requires = "x1")]
        x2: Option<f64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Median abscissa and the two median rules.
    Median {
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        a: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Geminoid volume 2πb³[ζ(3) − Li₃(−a)].
    Volume {
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        /// Also compute the shell-method quadrature.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Raw moment Γ(s+1)ζ(s+2) with its quadrature.
    Moment {
        #[arg(long)]
        s: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// CSV series for plotting.
    PlotData {
        #[arg(value_enum)]
        series: Series,
        #[arg(long, allow_negative_numbers = true, default_value_t = -0.99)]
        a_min: f64,
        #[arg(long, allow_negative_numbers = true, default_value_t = 10.0)]
        a_max: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        /// Offset in b = 1/(a + p) for atot-p.
        #[arg(long, allow_negative_numbers = true, default_value_t = 2.0)]
        p: f64,
    },
    /// Curvature along the geminoid as CSV `x,Kg,R1,R2,theta`.
    GeminoidProfile {
        #[arg(long, allow_negative_numbers = true, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 5.0)]
        x_max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Eval { function, args } => eval(function, &args)?,
        Command::Constants { format } => constants(format),
        Command::Verify { group, id, tol, seed, strict, format, jobs } => {
            if !(tol > 0.0) {
                bail!("--tol must be positive, got {tol}");
            }
            let seed = match std::env::var(SEED_ENV) {
                Ok(s) => s.trim().parse().with_context(|| format!("{SEED_ENV}={s:?} is not an unsigned integer"))?,
                Err(_) => seed,
            };
            return Ok(verify(VerifyOptions { tol, seed, jobs, group, id }, strict, format));
        }
        Command::Area { a, b, x1, x2, format } => area(a, b, x1, x2, format)?,
        Command::Median { a, format } => {
            let x = median(a)?;
            let (rect, half) = median_rule_residuals(a)?;
            let rows = [("median", x), ("median_exp", x.exp()), ("rectangle_rule", rect), ("half_square_rule", half)];
            print_record(&rows, format);
        }
        Command::Volume { a, b, check, format } => {
            let p = GeminiParams::new(a, b)?;
            let v = geminoid_volume(&p)?;
            let mut rows = vec![("volume", v)];
            if check {
                let s = shell_volume(&p)?;
                rows.push(("shell_quadrature", s));
                rows.push(("difference", v - s));
            }
            print_record(&rows, format);
        }
        Command::Moment { s, format } => {
            let m = raw_moment(s)?;
            let q = raw_moment_quadrature(s)?;
            print_record(&[("moment", m), ("quadrature", q), ("difference", m - q)], format);
        }
        Command::PlotData { series, a_min, a_max, step, p } => plot(series, a_min, a_max, step, p)?,
        Command::GeminoidProfile { a, b, x_max, step } => {
            let params = GeminiParams::new(a, b)?;
            out!("x,Kg,R1,R2,theta");
            for x in grid(step, x_max, step)? {
                let c = curvature_profile(&params, x)?;
                out!("{}", csv_row(&[x, c.kg, c.r1, c.r2, c.theta]));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn arity(function: &str, args: &[f64], n: usize) -> Result<()> {
    if args.len() != n {
        bail!("{function} takes {n} argument(s), got {}", args.len());
    }
    Ok(())
}

fn eval(function: Function, args: &[f64]) -> Result<()> {
    let out = match function {
        Function::Li2 => {
            arity("li2", args, 1)?;
            real_or_complex(li2_real(args[0])?)
        }
        Function::Li2c => {
            arity("li2c", args, 2)?;
            complex(li2_complex(Complex64::new(args[0], args[1]))?)
        }
        Function::Li3 => {
            arity("li3", args, 1)?;
            num(li3_real(args[0])?)
        }
        Function::Chi2 => {
            arity("chi2", args, 1)?;
            num(chi2(args[0])?)
        }
        Function::Cl2 => {
            arity("cl2", args, 1)?;
            num(clausen_cl2(args[0])?)
        }
        Function::Trigamma => {
            arity("trigamma", args, 1)?;
            num(trigamma(args[0])?)
        }
        Function::UnitCircle => {
            arity("unit-circle", args, 2)?;
            let (p, q) = (args[0], args[1]);
            if p.fract() != 0.0 || q.fract() != 0.0 {
                bail!("unit-circle takes integers p q, got {p} {q}");
            }
            complex(li2_unit_circle(p as i64, q as i64)?)
        }
    };
    out!("{out}");
    Ok(())
}

fn constants(format: Format) {
    let table = constants_table();
    match format {
        Format::Json => {
            let rows: Vec<_> = table
                .iter()
                .map(|c| json!({"id": c.id, "equation": c.defining_equation, "value": c.value, "provenance": c.provenance}))
                .collect();
            out!("{}", serde_json::to_string_pretty(&rows).expect("constants serialize"));
        }
        Format::Csv => {
            out!("id,equation,value,provenance");
            for c in table {
                out!("{},\"{}\",{},{:?}", c.id, c.defining_equation, num(c.value), c.provenance);
            }
        }
        Format::Text => {
            for c in table {
                out!("{:<16} {:>24}  {:<8} {}", c.id, num(c.value), format!("{:?}", c.provenance), c.defining_equation);
            }
        }
    }
}

fn params_cell(r: &VerificationReport) -> String {
    r.worst_params.iter().map(|(k, v)| format!("{k}={}", num(*v))).collect::<Vec<_>>().join(";")
}

fn verify(opts: VerifyOptions, strict: bool, format: Format) -> ExitCode {
    let reports = verify_all(&opts);
    if reports.is_empty() {
        eprintln!("error: no catalog entries match the filter");
        return ExitCode::from(2);
    }
    match format {
        Format::Json => out!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize")),
        Format::Csv => {
            out!("id,group,samples,max_abs_residual,worst_params,status,tol");
            for r in &reports {
                out!(
                    "{},{},{},{},{},{},{}",
                    r.id,
                    r.group,
                    r.samples,
                    num(r.max_abs_residual),
                    params_cell(r),
                    r.status,
                    num(r.tol)
                );
            }
        }
        Format::Text => {
            for r in &reports {
                out!(
                    "{:<20} {:<4} {:>5}  {:>24}  {}",
                    r.status.as_str(),
                    r.group.to_string(),
                    r.samples,
                    num(r.max_abs_residual),
                    r.id
                );
                if let Some(d) = &r.diagnostic {
                    out!("    {d}");
                }
            }
            let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
            for r in &reports {
                *counts.entry(r.status.as_str()).or_default() += 1;
            }
            let summary: Vec<_> = counts.iter().map(|(k, v)| format!("{v} {k}")).collect();
            out!("{} entries: {}", reports.len(), summary.join(", "));
        }
    }
    let failed = reports
        .iter()
        .any(|r| r.status == Status::Fail || (strict && r.status == Status::FlaggedDiscrepancy));
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn area(a: f64, b: f64, x1: Option<f64>, x2: Option<f64>, format: Format) -> Result<()> {
    let p = GeminiParams::new(a, b)?;
    let scale = b * b;
    let mut rows = vec![("total", total_area(&p)?), ("fixed_point", b * fixed_point(a)?)];
    match (x1, x2) {
        (Some(x1), Some(x2)) => {
            if !(x1 > 0.0 && x2 > x1) {
                bail!("need 0 < x1 < x2, got x1 = {x1}, x2 = {x2}");
            }
            rows.push(("between_limits", antiderivative(&p, x2)? - antiderivative(&p, x1)?));
        }
        (Some(x1), None) => {
            let d = area_decomposition_at(a, x1 / b)?;
            let partner = b * symmetric_partner(a, x1 / b)?;
            rows.extend([
                ("partner", partner),
                ("middle_square", scale * d.middle_square),
                ("apex", scale * d.apex),
                ("rectangle", scale * d.rectangle),
                ("between_limits", scale * d.between_limits),
            ]);
        }
        _ => {
            let d = area_decomposition(a)?;
            rows.extend([("middle_square", scale * d.middle_square), ("apex", scale * d.apex)]);
            if a > -1.0 {
                rows.push(("ratio", area_ratio_r(a)?));
            }
        }
    }
    print_record(&rows, format);
    Ok(())
}

fn print_record(rows: &[(&str, f64)], format: Format) {
    match format {
        Format::Json => {
            let map: serde_json::Map<_, _> = rows.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            out!("{}", serde_json::Value::Object(map));
        }
        Format::Csv => {
            out!("{}", rows.iter().map(|r| r.0).collect::<Vec<_>>().join(","));
            out!("{}", csv_row(&rows.iter().map(|r| r.1).collect::<Vec<_>>()));
        }
        Format::Text => {
            for (k, v) in rows {
                out!("{k:<18} {}", num(*v));
            }
        }
    }
}

fn grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !lo.is_finite() || !hi.is_finite() || hi < lo {
        bail!("need a finite range lo <= hi and step > 0, got [{lo}, {hi}] step {step}");
    }
    let n = ((hi - lo) / step + 1e-9).floor() as usize;
    if n > 10_000_000 {
        return Err(anyhow!("{} points requested; raise --step", n + 1));
    }
    Ok((0..=n).map(|i| lo + i as f64 * step).collect())
}

fn plot(series: Series, a_min: f64, a_max: f64, step: f64, p: f64) -> Result<()> {
    let xs = grid(a_min, a_max, step)?;
    match series {
        Series::ROfA => {
            out!("a,r");
            for a in xs {
                out!("{}", csv_row(&[a, area_ratio_r(a)?]));
            }
        }
        Series::AtotP => {
            out!("a,atot");
            for a in xs {
                out!("{}", csv_row(&[a, atot_of_a_p(a, p)?]));
            }
        }
    }
    Ok(())
}
