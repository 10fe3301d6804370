//! Command-line front end.
//!
//! [`run`] parses arguments and returns the exit status together with the
//! text destined for stdout and stderr, so the binary stays a thin shell and
//! every command can be tested in-process.

mod format;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Signed;

pub use format::{format_bounds, format_interval, points_csv, points_svg, DEFAULT_DIGITS};

use crate::circle::{pi_bounds, PiTarget};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::heron::{heron_area_bounds, heron_area_sq_from_vertices, heron_product, TriangleSides, TriangleVertices};
use crate::mean_prop::{self, CurveKind, CurveSampler, HeronVariant, MeanPropProblem, MeanPropResult};
use crate::numerics::{format_decimal, parse_rational, pow10, rat, Precision, Rational};
use crate::root_extraction::{extract_root, render_trace, DivisorMode, SpecialNumbers};

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "practica",
    version,
    about = "Exact reconstructions of classical measuring and root-finding procedures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certified bounds on pi from inscribed and circumscribed polygons.
    PiBounds(PiBoundsArgs),
    /// Triangle area by Heron's rule.
    Heron(HeronArgs),
    /// Two mean proportionals between two lines.
    Meanprops(MeanpropsArgs),
    /// Digit-by-digit nth root of an integer.
    NthRoot(NthRootArgs),
    /// Sample the cissoid or the conchoid.
    Curve(CurveArgs),
    /// The special numbers C(n,k)·10^(n−k) used to form divisors.
    SpecialNumbers(SpecialNumbersArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Svg,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Working precision in decimal digits for square roots.
    #[arg(long, default_value_t = Precision::DEFAULT_DIGITS, value_parser = clap::value_parser!(u32).range(1..))]
    precision: u32,
    /// Decimal places in rendered values.
    #[arg(long)]
    digits: Option<u32>,
}

impl CommonArgs {
    fn precision(&self) -> Result<Precision> {
        Precision::new(self.precision)
    }

    fn digits(&self) -> u32 {
        self.digits.unwrap_or(DEFAULT_DIGITS)
    }
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["sides", "width"])))]
struct PiBoundsArgs {
    /// Number of polygon sides, 6·2^k.
    #[arg(long)]
    sides: Option<u64>,
    /// Double until upper − lower is at most this width.
    #[arg(long, value_parser = rational_arg)]
    width: Option<Rational>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("triangle").required(true).args(["sides", "vertices"])))]
struct HeronArgs {
    /// Side lengths a b c.
    #[arg(long, num_args = 3, value_parser = rational_arg, allow_negative_numbers = true)]
    sides: Option<Vec<Rational>>,
    /// Vertex coordinates x1 y1 x2 y2 x3 y3.
    #[arg(long, num_args = 6, value_parser = rational_arg, allow_negative_numbers = true)]
    vertices: Option<Vec<Rational>>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Heron,
    Apollonius,
    Philo,
    Diocles,
    Nicomedes,
    All,
}

#[derive(Debug, Args)]
struct MeanpropsArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    method: MethodArg,
    /// The first line.
    #[arg(long, value_parser = rational_arg)]
    ab: Rational,
    /// The second line.
    #[arg(long, value_parser = rational_arg)]
    bc: Rational,
    /// Relative tolerance.
    #[arg(long, value_parser = rational_arg)]
    tol: Option<Rational>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DivisorArg {
    Full,
    Simplified,
}

#[derive(Debug, Args)]
struct NthRootArgs {
    #[arg(long)]
    degree: u32,
    /// Non-negative integer radicand.
    #[arg(long)]
    radicand: BigUint,
    #[arg(long, default_value_t = 0)]
    frac_digits: u32,
    #[arg(long, value_enum, default_value_t = DivisorArg::Full)]
    divisor: DivisorArg,
    /// Print the step-by-step table.
    #[arg(long)]
    trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveType {
    Cissoid,
    Conchoid,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[arg(long = "type", value_enum)]
    kind: CurveType,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Cissoid circle radius.
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    radius: Rational,
    /// Distance from the conchoid's pole to its base line.
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    pole_distance: Rational,
    /// Conchoid offset measured beyond the base line.
    #[arg(long, value_parser = rational_arg, default_value = "1")]
    offset: Rational,
    /// Left end of the conchoid's base-line range.
    #[arg(long, value_parser = rational_arg, default_value = "-10", allow_negative_numbers = true)]
    x_min: Rational,
    /// Right end of the conchoid's base-line range.
    #[arg(long, value_parser = rational_arg, default_value = "10", allow_negative_numbers = true)]
    x_max: Rational,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct SpecialNumbersArgs {
    #[arg(long, default_value_t = 17)]
    max_degree: u32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match &cli.command {
        Command::PiBounds(a) => cmd_pi_bounds(a),
        Command::Heron(a) => cmd_heron(a),
        Command::Meanprops(a) => cmd_meanprops(a),
        Command::NthRoot(a) => cmd_nth_root(a),
        Command::Curve(a) => cmd_curve(a),
        Command::SpecialNumbers(a) => cmd_special_numbers(a),
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::error(&e),
    }
}

/// Places needed so a value of size `w` is visible, with two to spare.
fn digits_for_width(w: &Rational) -> u32 {
    let mut k = 0;
    while &pow10(-(k as i64)) > w {
        k += 1;
    }
    k + 2
}

fn cmd_pi_bounds(a: &PiBoundsArgs) -> Result<String> {
    let p = a.common.precision()?;
    let target = match (&a.sides, &a.width) {
        (Some(n), _) => PiTarget::Sides(*n),
        (_, Some(w)) => PiTarget::Width(w.clone()),
        _ => unreachable!("clap requires one target"),
    };
    let b = pi_bounds(&target, p)?;
    let digits = match (&a.width, a.common.digits) {
        (_, Some(d)) => d,
        (Some(w), None) => digits_for_width(w).max(DEFAULT_DIGITS),
        (None, None) => DEFAULT_DIGITS,
    };
    let sides = b.sides().map(|n| n.to_string()).unwrap_or_default();
    match a.format {
        OutputFormat::Text => Ok(format::table(&[
            vec!["sides".into(), sides],
            vec!["precision".into(), p.decimal_digits().to_string()],
            vec!["lower".into(), format_decimal(b.lower(), digits), b.lower().to_string()],
            vec!["upper".into(), format_decimal(b.upper(), digits), b.upper().to_string()],
            vec!["width".into(), format_decimal(&b.width(), digits)],
        ])),
        OutputFormat::Csv => Ok(format!(
            "sides,lower,upper,lower_exact,upper_exact\n{},{},{},{},{}\n",
            sides,
            format_decimal(b.lower(), digits),
            format_decimal(b.upper(), digits),
            b.lower(),
            b.upper()
        )),
        OutputFormat::Svg => Err(Error::domain("svg output is only available for curves")),
    }
}

fn cmd_heron(a: &HeronArgs) -> Result<String> {
    let p = a.common.precision()?;
    let digits = a.common.digits();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let sides = if let Some(v) = &a.vertices {
        let pt = |i: usize| Point2::new(v[2 * i].clone(), v[2 * i + 1].clone());
        let t = TriangleVertices::new(pt(0), pt(1), pt(2))?;
        let area_sq = heron_area_sq_from_vertices(&t);
        let half = t.twice_signed_area() / rat(2, 1);
        let shoelace = &half * &half;
        rows.push(vec!["area squared".into(), area_sq.to_string()]);
        rows.push(vec![
            "shoelace check".into(),
            shoelace.to_string(),
            if shoelace == area_sq { "agrees" } else { "DISAGREES" }.into(),
        ]);
        if shoelace != area_sq {
            return Err(Error::domain("area identity failed; this is a bug"));
        }
        match t.rational_sides() {
            Some(s) => s,
            None => {
                rows.push(vec!["area".into(), half.abs().to_string()]);
                return Ok(format::table(&rows));
            }
        }
    } else {
        let v = a.sides.as_ref().expect("clap requires a triangle");
        TriangleSides::new(v[0].clone(), v[1].clone(), v[2].clone())?
    };
    let product = heron_product(&sides);
    let area = heron_area_bounds(&sides, p)?;
    rows.push(vec!["semiperimeter".into(), sides.semiperimeter().to_string()]);
    rows.push(vec!["heron product".into(), product.to_string()]);
    rows.push(if area.is_point() {
        vec!["area".into(), area.lo().to_string()]
    } else {
        vec!["area".into(), format_interval(&area, digits)]
    });
    Ok(format::table(&rows))
}

fn cmd_meanprops(a: &MeanpropsArgs) -> Result<String> {
    let p = a.common.precision()?;
    let digits = a.common.digits();
    let tol = a.tol.clone().unwrap_or_else(MeanPropProblem::default_tol);
    let prob = MeanPropProblem::new(a.ab.clone(), a.bc.clone(), tol, p)?;
    let runs: Vec<(&str, Result<MeanPropResult>)> = match a.method {
        MethodArg::Heron => vec![("heron", mean_prop::solve_heron_apollonius(&prob, HeronVariant::EqualDistances))],
        MethodArg::Apollonius => {
            vec![("apollonius", mean_prop::solve_heron_apollonius(&prob, HeronVariant::ChordThroughB))]
        }
        MethodArg::Philo => vec![("philo", mean_prop::solve_philo(&prob))],
        MethodArg::Diocles => vec![("diocles", mean_prop::solve_diocles(&prob))],
        MethodArg::Nicomedes => vec![("nicomedes", mean_prop::solve_nicomedes(&prob))],
        MethodArg::All => mean_prop::Method::ALL.iter().map(|&m| (m.name(), mean_prop::solve(&prob, m))).collect(),
    };
    let mut rows = vec![["method", "x", "y", "|ab*y-x^2|", "|x*bc-y^2|"].map(String::from).to_vec()];
    for (name, r) in runs {
        let r = r?;
        rows.push(vec![
            name.into(),
            format_decimal(&r.x().midpoint(), digits),
            format_decimal(&r.y().midpoint(), digits),
            format::format_magnitude(r.residual1()),
            format::format_magnitude(r.residual2()),
        ]);
    }
    let mut out = String::new();
    let _ = writeln!(out, "two mean proportionals between {} and {}", prob.ab(), prob.bc());
    out.push_str(&format::table(&rows));
    Ok(out)
}

fn cmd_nth_root(a: &NthRootArgs) -> Result<String> {
    let mode = match a.divisor {
        DivisorArg::Full => DivisorMode::Full,
        DivisorArg::Simplified => DivisorMode::Simplified,
    };
    let rx = extract_root(&a.radicand, a.degree, a.frac_digits, mode)?;
    if a.trace {
        Ok(render_trace(&rx))
    } else {
        Ok(format!("root {} remainder {}\n", rx.root_string(), rx.remainder()))
    }
}

fn cmd_curve(a: &CurveArgs) -> Result<String> {
    let p = a.common.precision()?;
    let kind = match a.kind {
        CurveType::Cissoid => CurveKind::Cissoid { radius: a.radius.clone() },
        CurveType::Conchoid => CurveKind::Conchoid {
            pole_distance: a.pole_distance.clone(),
            offset: a.offset.clone(),
            x_range: (a.x_min.clone(), a.x_max.clone()),
        },
    };
    let points = CurveSampler::new(kind, a.samples)?.sample(p)?;
    match a.format {
        OutputFormat::Csv => Ok(points_csv(&points, a.common.digits())),
        OutputFormat::Svg => Ok(points_svg(&points)),
        OutputFormat::Text => Err(Error::domain("curves are written as csv or svg")),
    }
}

fn cmd_special_numbers(a: &SpecialNumbersArgs) -> Result<String> {
    let mut out = String::new();
    for sp in SpecialNumbers::table(a.max_degree)? {
        let values: Vec<String> = sp.values().iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}: {}", sp.degree(), values.join(" "));
    }
    Ok(out)
}
