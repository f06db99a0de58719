use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use hadamard_core::experiments::{run_suite_with, SuiteRegistry, Tolerances};
use hadamard_core::multiplier::{
    bound_ii, bound_iii, bound_lower_i, bound_upper_i, norm_estimate_with, EstimateOptions,
    MultiplierMatrix, MultiplierSequence, NormEstimate, NormMethodRegistry, Support,
};
use hadamard_core::{
    factorize_local, make_kernel, quadrature_dirichlet, AtomicWeightMeasure, CoefficientSeries,
    Complex64, KernelSpec, LocalPoint, QuadratureGrid,
};

#[derive(Parser)]
#[command(name = "hadamard", version, about = "Hadamard multipliers on local Dirichlet spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON-lines report.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the rows as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Bracket the operator norm of T_c.
    Norm {
        #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
        kernel: Option<KernelSpec>,
        /// Series JSON, inline or a file path.
        #[arg(long)]
        coeffs: Option<String>,
        /// Fixed section size instead of the doubling driver.
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Closed-form bounds on the operator norm of T_c.
    Bounds {
        #[arg(long)]
        coeffs: String,
    },
    /// Local Dirichlet integral at a point of the closed disk.
    LocalDirichlet {
        #[arg(long)]
        series: String,
        /// `re,im`
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
    /// Area-quadrature approximation of the weighted Dirichlet integral.
    Quadrature {
        #[arg(long)]
        series: String,
        /// `[{"zeta":[re,im],"mass":m}, ...]`, inline or a file path.
        #[arg(long)]
        atoms: String,
        #[arg(long, default_value_t = QuadratureGrid::default().levels)]
        levels: usize,
    },
}

/// Inline JSON, or the contents of the named file.
fn json_arg(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(Path::new(arg)).with_context(|| format!("reading {arg}"))
}

fn series_arg(arg: &str) -> Result<CoefficientSeries> {
    serde_json::from_str(&json_arg(arg)?).context("series must be a JSON array of [re, im] pairs")
}

fn point_arg(arg: &str) -> Result<LocalPoint> {
    let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
    let (re, im) = match parts.as_slice() {
        [re] => (re.parse()?, 0.0),
        [re, im] => (re.parse()?, im.parse()?),
        _ => bail!("expected re,im"),
    };
    Ok(LocalPoint::new(Complex64::new(re, im))?)
}

fn fixed_section(
    seq: &dyn MultiplierSequence,
    size: usize,
    method: &dyn hadamard_core::multiplier::NormMethod,
) -> Result<NormEstimate> {
    let m = MultiplierMatrix::from_fn(size, |k| seq.coeff(k))?;
    let value = method.largest_singular_value(&m);
    let exact = matches!(seq.support(), Support::Finite { len } if size >= len);
    Ok(NormEstimate {
        lower: value,
        upper: if exact { Some(value) } else { seq.certified_upper() },
        exact,
        truncation: size,
        method: method.name().to_string(),
    })
}

fn print(v: serde_json::Value) {
    println!("{v}");
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { suite, seed, out, csv } => {
            let registry = SuiteRegistry::builtin();
            if registry.get(&suite).is_err() {
                let names: Vec<_> = registry.names().collect();
                bail!("unknown suite {suite:?}; expected one of {}", names.join(", "));
            }
            let report = run_suite_with(&suite, seed, &Tolerances::from_env())?;
            fs::write(&out, report.to_jsonl()).with_context(|| format!("writing {}", out.display()))?;
            if let Some(path) = csv {
                fs::write(&path, report.to_csv())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            for c in report.failures() {
                eprintln!("FAIL {}: observed {} vs {}", c.label, c.observed, c.limit);
            }
            let passed = report.passed();
            eprintln!(
                "{suite}: {} ({} checks)",
                if passed { "pass" } else { "fail" },
                report.checks.len()
            );
            Ok(if passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Norm { kernel, coeffs, trunc, method } => {
            let c = match (kernel, coeffs) {
                (Some(spec), _) => make_kernel(spec)?,
                (None, Some(raw)) => series_arg(&raw)?,
                (None, None) => bail!("one of --kernel or --coeffs is required"),
            };
            let registry = NormMethodRegistry::builtin();
            let method = registry.get(&method)?;
            let est = match trunc {
                Some(size) => fixed_section(&c, size, method)?,
                None => norm_estimate_with(&c, &EstimateOptions::default(), method)?,
            };
            print(json!({
                "lower": est.lower,
                "upper": est.upper,
                "exact": est.exact,
                "truncation": est.truncation,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { coeffs } => {
            let c = series_arg(&coeffs)?;
            let lower_i = bound_lower_i(&c);
            let upper_i = bound_upper_i(&c);
            let ii = bound_ii(&c)?;
            let iii = bound_iii(&c)?;
            print(json!({
                "lower_i": lower_i,
                "upper_i": upper_i,
                "ii": ii,
                "iii": iii,
                "lower": lower_i,
                "upper": upper_i.min(ii).min(iii),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::LocalDirichlet { series, zeta } => {
            let f = series_arg(&series)?;
            let fac = factorize_local(&f, point_arg(&zeta)?)?;
            print(json!({
                "a": [fac.a.re, fac.a.im],
                "g": fac.g,
                "value": fac.local_dirichlet(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Quadrature { series, atoms, levels } => {
            let f = series_arg(&series)?;
            let mu = AtomicWeightMeasure::from_json(&json_arg(&atoms)?)?;
            let q = quadrature_dirichlet(&f, &mu, &QuadratureGrid::with_levels(levels))?;
            print(json!({ "value": q.value, "refinement_gap": q.refinement_gap }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
