//! Command-line front end. Every command writes to caller-supplied streams and
//! returns its exit code: 0 success, 1 verification failure, 2 usage or
//! validation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::{EllipticParams, ExtremalMap, Mapping, MEASUREMENT_RADIUS};
use crate::radii::{solve, SolveRecord, TheoremParams};
use crate::verify::suite::{run_suite, Manifest, Suite, SuiteOptions, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "landau", about = "Landau-type univalence radii for polyharmonic mappings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one radius theorem.
    Radius(RadiusArgs),
    /// Solve a theorem along one parameter axis and write CSV.
    Sweep(SweepArgs),
    /// Run a pinned verification suite.
    Verify(VerifyArgs),
    /// Evaluate an extremal function or write its radial trace.
    Extremal(ExtremalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum TheoremTag {
    #[value(name = "t21")]
    #[serde(rename = "t21")]
    T21,
    #[value(name = "t22")]
    #[serde(rename = "t22")]
    T22,
    #[value(name = "t26")]
    #[serde(rename = "t26")]
    T26,
    #[value(name = "t27")]
    #[serde(rename = "t27")]
    T27,
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "E", alias = "e")]
    E,
    #[value(name = "F", alias = "f")]
    F,
}

/// Parameter values shared by `radius` and `sweep`. `K` defaults to 1, `Kp`
/// to 0 and `p` to 1. A one-element list is repeated to the `p − 1` entries
/// the theorem needs.
#[derive(Debug, Clone, Default, PartialEq, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamValues {
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[arg(long = "K")]
    #[serde(default, rename = "K", skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[arg(long = "Kp")]
    #[serde(default, rename = "Kp", skip_serializing_if = "Option::is_none")]
    pub k_prime: Option<f64>,
    #[arg(long)]
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[arg(long = "Lambda-p")]
    #[serde(default, rename = "Lambda_p", skip_serializing_if = "Option::is_none")]
    pub lambda_p: Option<f64>,
    #[arg(long = "M")]
    #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[arg(long = "M-list", value_delimiter = ',', num_args = 1..)]
    #[serde(default, rename = "M_list", skip_serializing_if = "Option::is_none")]
    pub m_list: Option<Vec<f64>>,
    #[arg(long = "Lambda-list", value_delimiter = ',', num_args = 1..)]
    #[serde(default, rename = "Lambda_list", skip_serializing_if = "Option::is_none")]
    pub lambda_list: Option<Vec<f64>>,
}

fn need(value: Option<f64>, flag: &str, tag: TheoremTag) -> Result<f64> {
    value.ok_or_else(|| Error::validation(format!("{tag:?} requires --{flag}")))
}

fn fit_list(list: &Option<Vec<f64>>, p: usize, flag: &str, tag: TheoremTag) -> Result<Vec<f64>> {
    match list {
        Some(v) if v.len() == 1 && p != 2 => Ok(vec![v[0]; p.saturating_sub(1)]),
        Some(v) => Ok(v.clone()),
        None if p == 1 => Ok(Vec::new()),
        None => Err(Error::validation(format!("{tag:?} with p = {p} requires --{flag}"))),
    }
}

impl ParamValues {
    pub fn to_params(&self, tag: TheoremTag) -> Result<TheoremParams> {
        let p = self.p.unwrap_or(1);
        let elliptic = || EllipticParams::new(self.k.unwrap_or(1.0), self.k_prime.unwrap_or(0.0));
        let params = match tag {
            TheoremTag::T21 => TheoremParams::T21 {
                p,
                elliptic: elliptic()?,
                lambda_p: need(self.lambda_p, "Lambda-p", tag)?,
                m_list: fit_list(&self.m_list, p, "M-list", tag)?,
            },
            TheoremTag::A => TheoremParams::BaselineA {
                p,
                lambda_p: need(self.lambda_p, "Lambda-p", tag)?,
                m_list: fit_list(&self.m_list, p, "M-list", tag)?,
            },
            TheoremTag::T22 => TheoremParams::T22 {
                p,
                elliptic: elliptic()?,
                lambda_list: fit_list(&self.lambda_list, p, "Lambda-list", tag)?,
                m_p: need(self.m, "M", tag)?,
            },
            TheoremTag::B => TheoremParams::BaselineB {
                p,
                lambda_list: fit_list(&self.lambda_list, p, "Lambda-list", tag)?,
                m_p: need(self.m, "M", tag)?,
            },
            TheoremTag::T26 => TheoremParams::T26 { p, elliptic: elliptic()?, lambda: need(self.lambda, "lambda", tag)? },
            TheoremTag::T27 => TheoremParams::T27 { p, elliptic: elliptic()?, lambda: need(self.lambda, "lambda", tag)? },
            TheoremTag::C => TheoremParams::BaselineC { p, m: need(self.m, "M", tag)? },
            TheoremTag::D => TheoremParams::BaselineD { p, m: need(self.m, "M", tag)? },
            TheoremTag::E => TheoremParams::BaselineE { elliptic: elliptic()?, lambda: need(self.lambda, "lambda", tag)? },
            TheoremTag::F => TheoremParams::BaselineF { k: self.k.unwrap_or(1.0), lambda: need(self.lambda, "lambda", tag)? },
        };
        params.validate()?;
        Ok(params)
    }
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[arg(long, value_enum)]
    pub theorem: TheoremTag,
    #[command(flatten)]
    pub values: ParamValues,
    /// Print the result as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Axis {
    #[value(name = "lambda")]
    #[serde(rename = "lambda")]
    Lambda,
    #[value(name = "K")]
    K,
    #[value(name = "Kp")]
    Kp,
    #[value(name = "M")]
    M,
    #[value(name = "Lambda_p")]
    #[serde(rename = "Lambda_p")]
    LambdaP,
    #[value(name = "p")]
    #[serde(rename = "p")]
    P,
}

impl Axis {
    fn name(self) -> &'static str {
        match self {
            Axis::Lambda => "lambda",
            Axis::K => "K",
            Axis::Kp => "Kp",
            Axis::M => "M",
            Axis::LambdaP => "Lambda_p",
            Axis::P => "p",
        }
    }
}

/// One theorem solved along an evenly spaced parameter axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub variant: TheoremTag,
    pub axis: Axis,
    /// `(start, stop, steps)`, endpoints included.
    pub range: (f64, f64, usize),
    #[serde(default)]
    pub fixed: ParamValues,
}

impl SweepSpec {
    pub fn axis_values(&self) -> Vec<f64> {
        let (start, stop, steps) = self.range;
        (0..steps)
            .map(|i| if i + 1 == steps { stop } else { start + (stop - start) * i as f64 / (steps - 1) as f64 })
            .collect()
    }

    /// Parameters of the sweep at one axis value. On `M` and `Lambda_p` axes
    /// the value fills every entry of the matching list where the theorem has
    /// one.
    pub fn params_at(&self, value: f64) -> Result<TheoremParams> {
        let mut v = self.fixed.clone();
        let tag = self.variant;
        match self.axis {
            Axis::Lambda => v.lambda = Some(value),
            Axis::K => v.k = Some(value),
            Axis::Kp => v.k_prime = Some(value),
            Axis::M => match tag {
                TheoremTag::T21 | TheoremTag::A => v.m_list = Some(vec![value]),
                _ => v.m = Some(value),
            },
            Axis::LambdaP => match tag {
                TheoremTag::T22 | TheoremTag::B => v.lambda_list = Some(vec![value]),
                _ => v.lambda_p = Some(value),
            },
            Axis::P => {
                if !(value >= 1.0 && value.fract() == 0.0) {
                    return Err(Error::validation(format!("p axis values must be positive integers, got {value}")));
                }
                v.p = Some(value as usize);
            }
        }
        // A fixed list of length one keeps being repeated when p changes.
        for list in [&mut v.m_list, &mut v.lambda_list] {
            if let Some(l) = list {
                if l.len() == 1 {
                    let p = v.p.unwrap_or(1);
                    *l = vec![l[0]; p.saturating_sub(1)];
                }
            }
        }
        v.to_params(tag)
    }

    pub fn validate(&self) -> Result<()> {
        let (start, stop, steps) = self.range;
        if steps < 2 {
            return Err(Error::validation(format!("steps must be >= 2, got {steps}")));
        }
        if !(start.is_finite() && stop.is_finite()) {
            return Err(Error::validation("sweep endpoints must be finite"));
        }
        self.params_at(start)?;
        self.params_at(stop)?;
        for x in self.axis_values() {
            if self.axis == Axis::P {
                self.params_at(x)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Read the sweep from a JSON file instead of flags.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremTag>,
    #[arg(long, value_enum)]
    pub axis: Option<Axis>,
    #[arg(long, allow_hyphen_values = true)]
    pub start: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub stop: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[command(flatten)]
    pub fixed: ParamValues,
    /// CSV destination; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl SweepArgs {
    fn spec(&self) -> Result<SweepSpec> {
        if let Some(path) = &self.spec {
            return Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?);
        }
        let missing = |flag: &str| Error::validation(format!("sweep requires --{flag} (or --spec)"));
        Ok(SweepSpec {
            variant: self.theorem.ok_or_else(|| missing("theorem"))?,
            axis: self.axis.ok_or_else(|| missing("axis"))?,
            range: (
                self.start.ok_or_else(|| missing("start"))?,
                self.stop.ok_or_else(|| missing("stop"))?,
                self.steps.ok_or_else(|| missing("steps"))?,
            ),
            fixed: self.fixed.clone(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteChoice {
    Reductions,
    Coeff,
    Injectivity,
    Sharpness,
    Parseval,
    All,
}

impl SuiteChoice {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteChoice::Reductions => vec![Suite::Reductions],
            SuiteChoice::Coeff => vec![Suite::Coeff],
            SuiteChoice::Injectivity => vec![Suite::Injectivity],
            SuiteChoice::Sharpness => vec![Suite::Sharpness],
            SuiteChoice::Parseval => vec![Suite::Parseval],
            SuiteChoice::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteChoice,
    /// Use only the first N seeds of the seeded suites.
    #[arg(long)]
    pub seeds: Option<usize>,
    #[arg(long = "grid-n")]
    pub grid_n: Option<usize>,
    /// Manifest to run instead of the built-in one.
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "F1", alias = "f1")]
    F1,
    #[value(name = "F2", alias = "f2")]
    F2,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub p: usize,
    #[arg(long = "Lambda-p")]
    pub lambda_p: Option<f64>,
    #[arg(long = "Lambda-list", value_delimiter = ',', num_args = 1..)]
    pub lambda_list: Option<Vec<f64>>,
    /// Point to evaluate, e.g. `0.3+0.2i`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "trace", required_unless_present = "trace")]
    pub eval: Option<String>,
    /// Write the CSV trace `r, re_F, lambda_F, jacobian` along `[0, 0.999]`.
    #[arg(long)]
    pub trace: bool,
    /// Number of trace samples.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long)]
    pub json: bool,
    /// CSV destination for `--trace`; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Radius(a) => cmd_radius(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Extremal(a) => cmd_extremal(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn cmd_radius(args: &RadiusArgs, out: &mut dyn Write) -> Result<i32> {
    let params = args.values.to_params(args.theorem)?;
    let record = SolveRecord::new(params.clone(), solve(&params)?);
    if args.json {
        writeln!(out, "{}", serde_json::to_string(&record)?)?;
    } else {
        let r = &record.result;
        writeln!(out, "{:<16}{}", "variant", record.variant)?;
        writeln!(out, "{:<16}{}", "radius", r.radius)?;
        writeln!(out, "{:<16}{}", "schlicht_radius", r.schlicht_radius)?;
        writeln!(out, "{:<16}{:e}", "residual", r.residual)?;
        writeln!(out, "{:<16}{}", "iterations", r.iterations)?;
        writeln!(out, "{:<16}{}", "boundary_case", r.boundary_case)?;
    }
    Ok(EXIT_OK)
}

fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

/// Writes the sweep as CSV. A row whose solve fails gets `NaN` fields and the
/// error in `note`; the error is only fatal when every row fails.
pub fn write_sweep<W: Write>(spec: &SweepSpec, sink: W) -> Result<usize> {
    spec.validate()?;
    let mut w = csv::Writer::from_writer(sink);
    w.write_record([spec.axis.name(), "radius", "schlicht_radius", "residual", "boundary_case", "note"])?;
    let mut failures = 0;
    let values = spec.axis_values();
    for &x in &values {
        match spec.params_at(x).and_then(|params| solve(&params)) {
            Ok(r) => w.write_record([
                sci(x),
                sci(r.radius),
                sci(r.schlicht_radius),
                sci(r.residual),
                r.boundary_case.to_string(),
                String::new(),
            ])?,
            Err(e) => {
                failures += 1;
                let nan = sci(f64::NAN);
                w.write_record([sci(x), nan.clone(), nan.clone(), nan, String::new(), e.to_string()])?;
            }
        }
    }
    w.flush()?;
    if failures == values.len() {
        return Err(Error::validation("every sweep row failed"));
    }
    Ok(values.len() - failures)
}

pub fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = args.spec()?;
    spec.validate()?;
    match &args.out {
        Some(path) => write_sweep(&spec, std::fs::File::create(path)?)?,
        None => write_sweep(&spec, &mut *out)?,
    };
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SuiteSummary {
    suite: &'static str,
    checks: usize,
    failed: usize,
    passed: bool,
}

#[derive(Serialize)]
struct VerifySummary {
    suites: Vec<SuiteSummary>,
    passed: bool,
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let manifest = match &args.manifest {
        Some(path) if !path.exists() => {
            return Err(Error::validation(format!("manifest {} not found", path.display())));
        }
        Some(path) => Manifest::from_path(path)?,
        None => Manifest::pinned(),
    };
    let opts = SuiteOptions { seeds: args.seeds, grid_n: args.grid_n };
    let reports: Vec<SuiteReport> = args.suite.suites().into_iter().map(|s| run_suite(&manifest, s, opts)).collect();
    for rep in &reports {
        for c in &rep.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{verdict}  {:<12} {:<58} {}", rep.suite.name(), c.name, c.detail)?;
        }
    }
    let summary = VerifySummary {
        passed: reports.iter().all(|r| r.passed),
        suites: reports
            .iter()
            .map(|r| SuiteSummary {
                suite: r.suite.name(),
                checks: r.checks.len(),
                failed: r.checks.iter().filter(|c| !c.passed).count(),
                passed: r.passed,
            })
            .collect(),
    };
    writeln!(out, "{}", serde_json::to_string(&summary)?)?;
    Ok(if summary.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn extremal_map(args: &ExtremalArgs) -> Result<ExtremalMap> {
    match args.family {
        Family::F1 => {
            let lambda_p = args.lambda_p.ok_or_else(|| Error::validation("F1 requires --Lambda-p"))?;
            ExtremalMap::f1(lambda_p, args.p)
        }
        Family::F2 => {
            let list = match &args.lambda_list {
                Some(l) => l.clone(),
                None if args.p == 1 => Vec::new(),
                None => return Err(Error::validation("F2 with p > 1 requires --Lambda-list")),
            };
            ExtremalMap::f2(list, args.p)
        }
    }
}

pub fn parse_complex(s: &str) -> Result<Complex64> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    cleaned.parse::<Complex64>().map_err(|_| Error::validation(format!("cannot parse {s:?} as a complex number")))
}

#[derive(Serialize)]
struct EvalOutput {
    z: Complex64,
    value: Complex64,
    fz: Complex64,
    fzbar: Complex64,
    big_lambda: f64,
    small_lambda: f64,
    jacobian: f64,
}

pub fn cmd_extremal(args: &ExtremalArgs, out: &mut dyn Write) -> Result<i32> {
    let map = extremal_map(args)?;
    if let Some(text) = &args.eval {
        let z = parse_complex(text)?;
        let value = map.eval(z)?;
        let (fz, fzbar) = map.wirtinger(z)?;
        let d = map.distortions(z)?;
        let row = EvalOutput {
            z,
            value,
            fz,
            fzbar,
            big_lambda: d.big_lambda,
            small_lambda: d.small_lambda,
            jacobian: d.jacobian,
        };
        if args.json {
            writeln!(out, "{}", serde_json::to_string(&row)?)?;
        } else {
            writeln!(out, "{:<14}{}", "value", row.value)?;
            writeln!(out, "{:<14}{}", "F_z", row.fz)?;
            writeln!(out, "{:<14}{}", "F_zbar", row.fzbar)?;
            writeln!(out, "{:<14}{}", "Lambda_F", row.big_lambda)?;
            writeln!(out, "{:<14}{}", "lambda_F", row.small_lambda)?;
            writeln!(out, "{:<14}{}", "J_F", row.jacobian)?;
        }
        return Ok(EXIT_OK);
    }
    if args.samples < 2 {
        return Err(Error::validation("--samples must be >= 2"));
    }
    match &args.out {
        Some(path) => write_trace(&map, args.samples, std::fs::File::create(path)?)?,
        None => write_trace(&map, args.samples, &mut *out)?,
    }
    Ok(EXIT_OK)
}

/// Radial trace along the positive real axis up to the measurement radius.
pub fn write_trace<W: Write>(map: &ExtremalMap, samples: usize, sink: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    w.write_record(["r", "re_F", "lambda_F", "jacobian"])?;
    for i in 0..samples {
        let r = MEASUREMENT_RADIUS * i as f64 / (samples - 1) as f64;
        let z = Complex64::new(r, 0.0);
        let d = map.distortions(z)?;
        w.write_record([sci(r), sci(map.eval(z)?.re), sci(d.small_lambda), sci(d.jacobian)])?;
    }
    w.flush()?;
    Ok(())
}
