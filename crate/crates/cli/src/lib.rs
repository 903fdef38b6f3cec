//! Command-line front end: `detect`, `cone`, `structure`, `generate`,
//! `implicitize` and `sections`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use ars_core::diffgeo::Parametrization;
use ars_core::exactmath::linalg::{AffineMap, Mat3};
use ars_core::exactmath::poly::xyz;
use ars_core::exactmath::rational::{parse_rational, to_short_string};
use ars_core::exactmath::{parse_poly, AlgebraicScalar, Rational, Vec3};
use ars_core::generators::GeneratorClass;
use ars_core::parabolic::{classify_cone, highest_form_structure, WFactor};
use ars_core::pipeline::{self, ClassificationReport, Config, Directrix, Plane, SectionFamily, SectionReport, SphereCenter, SurfaceSpec};
use ars_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod json;
mod polyline;

pub const EXIT_REJECTED: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_FAILURE: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "ars", version, about = "Exact detection of affine rotation surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct SurfaceArgs {
    /// Implicit equation F(x,y,z), e.g. "x^2+y^2-z^3-1"
    #[arg(long, allow_hyphen_values = true)]
    implicit: Option<String>,
    /// Rational parametrization "x(u,v); y(u,v); z(u,v)"
    #[arg(long, allow_hyphen_values = true)]
    parametric: Option<String>,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Seed for the random samples
    #[arg(long, env = "ARS_SEED", default_value_t = 0)]
    seed: u64,
    /// Rows per sampling batch of the line system
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(6..))]
    samples: u64,
    /// Largest implicit degree tried for parametric input
    #[arg(long, default_value_t = 12)]
    degree_bound: u32,
}

impl RunArgs {
    fn config(&self) -> Config {
        Config { seed: self.seed, samples: self.samples as usize, degree_bound: self.degree_bound }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TypeArg {
    Elliptic,
    Hyperbolic,
    Parabolic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a surface: axes, their types, and the affine sphere test
    Detect {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[command(flatten)]
        run: RunArgs,
        /// Emit the JSON report
        #[arg(long)]
        json: bool,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the cone y^2 - 2xz - w x^2 = 0
    Cone {
        /// `a`, or `a+b*sqrt(s)` (sqrt(-1) gives complex values)
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Factor structure of a form in y^2 - 2xz and x
    Structure {
        /// Homogeneous polynomial in x, y, z
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        json: bool,
    },
    /// Parametrize an affine rotation surface from a directrix
    Generate {
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        /// "f(s); g(s)", the directrix in the invariant plane
        #[arg(long, allow_hyphen_values = true)]
        directrix: String,
        /// Point of the axis, "x,y,z"
        #[arg(long, allow_hyphen_values = true, default_value = "0,0,0")]
        origin: String,
        #[arg(long)]
        json: bool,
    },
    /// Implicit equation of a rational parametrization
    Implicitize {
        #[arg(long, allow_hyphen_values = true)]
        parametric: String,
        #[arg(long, default_value_t = 12)]
        degree_bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Exact plane section, plus sampled polylines for plotting
    Sections {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// "a,b,c,d" for the plane a x + b y + c z + d = 0
        #[arg(long, allow_hyphen_values = true)]
        plane: String,
        /// Polyline file
        #[arg(long)]
        out: PathBuf,
        /// Half-width of the sampled window around the foot of the plane
        #[arg(long, default_value_t = 10.0)]
        extent: f64,
        /// Grid cells per side
        #[arg(long, default_value_t = 200)]
        grid: usize,
        #[arg(long, default_value_t = 12)]
        degree_bound: u32,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Kernel(Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Kernel(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Kernel(e) => match e {
                Error::Developable
                | Error::PlaneInput
                | Error::ConstantInput
                | Error::ZeroPolynomial
                | Error::ReducibleInput(_)
                | Error::DegenerateParametrization => EXIT_REJECTED,
                Error::ImplicitizationTooLarge(_) | Error::InsufficientSamples | Error::UnsupportedEigenstructure(_) => EXIT_LIMIT,
                Error::Syntax(_) | Error::NonRationalCoefficient(_) => EXIT_USAGE,
                _ => EXIT_FAILURE,
            },
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Io(_) => EXIT_FAILURE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Kernel(e) if self.code() == EXIT_REJECTED => format!("input rejected: {}", e),
            Failure::Kernel(e) if self.code() == EXIT_LIMIT => format!("internal limit reached: {}", e),
            Failure::Kernel(e) => e.to_string(),
            Failure::Usage(m) => m.clone(),
            Failure::Io(e) => format!("i/o error: {}", e),
        }
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code: 0 for a verdict, 2 when a precheck rejects the input,
/// 3 at an internal limit, 64 for usage errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn surface(args: &SurfaceArgs) -> Result<(SurfaceSpec, Value), Failure> {
    match (&args.implicit, &args.parametric) {
        (Some(text), None) => Ok((SurfaceSpec::Implicit(parse_poly(text, &xyz())?), json!({ "implicit": text }))),
        (None, Some(text)) => Ok((SurfaceSpec::Parametric(Parametrization::parse(text)?), json!({ "parametric": text }))),
        _ => Err(Failure::Usage(String::from("give exactly one of --implicit and --parametric"))),
    }
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Detect { surface: s, run, json, out: path } => {
            let (spec, input) = surface(&s)?;
            let report = pipeline::detect(&spec, &run.config())?;
            let text = if json { pretty(&json::report(input, &report)) } else { detect_text(&input, &report) };
            emit(out, path.as_ref(), &text)
        }
        Command::Cone { w, json } => {
            let w = parse_algebraic(&w)?;
            let c = classify_cone(&w);
            let text = if json {
                pretty(&json::cone(&c))
            } else {
                let mut t = format!("w = {}\ncase: {}\n", c.w, c.case.name());
                if let Some(e) = &c.eigenvalues {
                    let _ = writeln!(t, "eigenvalues: {}, {}, {}", e[0], e[1], e[2]);
                }
                if let Some(v) = &c.unit_eigenvector {
                    let _ = writeln!(t, "eigenvector of 1: {}", vec_text(v));
                }
                if let Some(v) = &c.revolution_axis {
                    let _ = writeln!(t, "axis of revolution: {}", vec_text(v));
                }
                t
            };
            emit(out, None, &text)
        }
        Command::Structure { form, json } => {
            let f = parse_poly(&form, &xyz())?;
            let s = highest_form_structure(&f)?;
            let text = if json {
                pretty(&json::structure(&s))
            } else {
                let mut t = format!("degree {}: x^{} * (y^2 - 2xz)^{}", s.degree, s.plane_multiplicity, s.cone_multiplicity);
                if s.w_poly.degree() > 0 {
                    let _ = write!(t, " * product of (y^2 - 2xz - w x^2) over the roots of {}", s.w_poly.to_string_in("w"));
                }
                t.push('\n');
                for r in &s.w_roots {
                    let root = match &r.factor {
                        WFactor::Real(a) => format!("w = {}", a),
                        WFactor::ComplexPair(q) => format!("complex pair, roots of {}", q.to_string_in("w")),
                        WFactor::Unsplit(q) => format!("roots of {}", q.to_string_in("w")),
                    };
                    let _ = writeln!(t, "  {} (multiplicity {})", root, r.multiplicity);
                }
                t
            };
            emit(out, None, &text)
        }
        Command::Generate { kind, directrix, origin, json } => {
            let class = match kind {
                TypeArg::Elliptic => GeneratorClass::Elliptic,
                TypeArg::Hyperbolic => GeneratorClass::Hyperbolic,
                TypeArg::Parabolic => GeneratorClass::Parabolic,
            };
            let d = Directrix::parse(&directrix)?;
            let frame = AffineMap::new(Mat3::identity(), parse_point(&origin)?);
            let x = pipeline::generate_ars(class, &d, &frame)?;
            let axis = pipeline::generated_axis(&frame);
            let coords: Vec<String> = x.coords.iter().map(|c| c.to_string()).collect();
            let text = if json {
                pretty(&json!({
                    "type": class.name(),
                    "parametric": coords.join("; "),
                    "axis": { "moment": json::vec3(&axis.moment), "direction": json::vec3(&axis.direction) },
                }))
            } else {
                format!("{}\naxis: {}\n", coords.join("; "), axis)
            };
            emit(out, None, &text)
        }
        Command::Implicitize { parametric, degree_bound, json } => {
            let x = Parametrization::parse(&parametric)?;
            let f = pipeline::implicitize(&x, degree_bound)?;
            let text = if json { pretty(&json!({ "parametric": parametric, "implicit": json::poly(&f), "text": f.to_string() })) } else { format!("{}\n", f) };
            emit(out, None, &text)
        }
        Command::Sections { surface: s, plane, out: path, extent, grid, degree_bound, json } => {
            if !(extent > 0.0) || grid == 0 {
                return Err(Failure::Usage(String::from("--extent and --grid must be positive")));
            }
            let (spec, _) = surface(&s)?;
            let plane = Plane::parse(&plane)?;
            let report = pipeline::cross_section(&spec, &plane, degree_bound)?;
            let curves = polyline::trace(&report.polynomial, &plane, extent, grid);
            let export = json!({
                "plane": json::rationals(&plane.coefficients()),
                "presentation_only": true,
                "curves": curves,
            });
            std::fs::write(&path, pretty(&export))?;
            let text = if json { pretty(&json::section(&report)) } else { section_text(&report, curves.len(), &path) };
            emit(out, None, &text)
        }
    }
}

fn vec_text(v: &Vec3) -> String {
    let s: Vec<String> = v.0.iter().map(to_short_string).collect();
    format!("({})", s.join(", "))
}

fn parse_point(text: &str) -> Result<Vec3, Failure> {
    let parts: Option<Vec<Rational>> = text.split(',').map(parse_rational).collect();
    match parts {
        Some(p) if p.len() == 3 => Ok(Vec3::from_slice(&p)),
        _ => Err(Failure::Usage(format!("expected a point \"x,y,z\", got {:?}", text))),
    }
}

/// Parses `a`, `a+b*sqrt(s)`, `b*sqrt(s)` or `-sqrt(s)`.
fn parse_algebraic(text: &str) -> Result<AlgebraicScalar, Failure> {
    let bad = || Failure::Usage(format!("expected a rational or a+b*sqrt(s), got {:?}", text));
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(start) = text.find("sqrt(") else {
        return parse_rational(&text).map(AlgebraicScalar::rational).ok_or_else(bad);
    };
    let rest = &text[start + 5..];
    let s = rest.strip_suffix(')').and_then(parse_rational).ok_or_else(bad)?;
    let head = &text[..start];
    let head = head.strip_suffix('*').unwrap_or(head);
    let split = head.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
    let (a, b) = match split {
        Some(i) => (&head[..i], &head[i..]),
        None => ("", head),
    };
    let a = if a.is_empty() { Rational::from_integer(0.into()) } else { parse_rational(a).ok_or_else(bad)? };
    let b = match b {
        "" | "+" => Rational::from_integer(1.into()),
        "-" => Rational::from_integer((-1).into()),
        b => parse_rational(b).ok_or_else(bad)?,
    };
    Ok(AlgebraicScalar::new(a, b, &s))
}

fn center_text(c: &SphereCenter) -> String {
    match c {
        SphereCenter::Point(p) => format!("center {}", vec_text(p)),
        SphereCenter::AtInfinity(d) => format!("center at infinity in direction {}", vec_text(d)),
    }
}

fn detect_text(input: &Value, r: &ClassificationReport) -> String {
    let mut t = String::new();
    for (kind, text) in input.as_object().expect("input object") {
        let _ = writeln!(t, "input ({}): {}", kind, text.as_str().unwrap_or_default());
    }
    let p = &r.prechecks;
    let _ = writeln!(
        t,
        "prechecks: irreducible {}, real point {}, curved {}",
        p.irreducible.name(),
        p.real_point.name(),
        p.curved.name()
    );
    let _ = writeln!(t, "D = {}", r.d);
    let _ = writeln!(t, "verdict: {}", r.verdict());
    if let Some(c) = &r.center {
        let _ = writeln!(t, "affine sphere {}", center_text(c));
    }
    for (k, a) in r.axes.iter().enumerate() {
        let _ = writeln!(t, "axis {}: {} {}", k + 1, a.class, a.line);
        if let Some(n) = &a.normal_direction {
            let _ = writeln!(t, "  normal direction {}", vec_text(n));
        }
        let e = &a.evidence;
        let mut checks = Vec::new();
        for (name, value) in [
            ("line system", Some(e.plucker_system)),
            ("generator identity", Some(e.generator_identity)),
            ("finite element", e.finite_element),
            ("cross section", e.cross_section),
            ("highest form", e.highest_form),
        ] {
            if let Some(v) = value {
                checks.push(format!("{} {}", name, if v { "passed" } else { "failed" }));
            }
        }
        let _ = writeln!(t, "  evidence: {}", checks.join(", "));
    }
    for f in &r.families {
        let _ = writeln!(t, "infinitely many {} axes through the {}", f.class, center_text(&f.center));
    }
    for w in &r.warnings {
        let _ = writeln!(t, "warning: {}", w);
    }
    t
}

fn section_text(r: &SectionReport, curves: usize, path: &std::path::Path) -> String {
    let mut t = format!("section: {} = 0 (degree {})\n", r.polynomial, r.degree);
    if let Some(c) = r.conic {
        let _ = write!(t, "conic: {}", c.name());
        if let Some(p) = &r.conic_center {
            let _ = write!(t, " centered at {}", vec_text(p));
        }
        t.push('\n');
    }
    let _ = match &r.family {
        SectionFamily::ConcentricCircles { center } | SectionFamily::RectangularHyperbolas { center } => {
            writeln!(t, "family: {} at {}", r.family.name(), vec_text(center))
        }
        SectionFamily::Parabolas { axis_direction } => writeln!(t, "family: {}, axis direction {}", r.family.name(), vec_text(axis_direction)),
        SectionFamily::Unrecognized => writeln!(t, "family: {}", r.family.name()),
    };
    let _ = writeln!(t, "{} polylines written to {}", curves, path.display());
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebraic_arguments() {
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(parse_algebraic("-3/2").ok(), Some(AlgebraicScalar::rational(q(-3, 2))));
        assert_eq!(parse_algebraic("1+2*sqrt(3)").ok(), Some(AlgebraicScalar::new(q(1, 1), q(2, 1), &q(3, 1))));
        assert_eq!(parse_algebraic("-1/2 - sqrt(5)").ok(), Some(AlgebraicScalar::new(q(-1, 2), q(-1, 1), &q(5, 1))));
        assert_eq!(parse_algebraic("2*sqrt(-1)").ok(), Some(AlgebraicScalar::new(q(0, 1), q(2, 1), &q(-1, 1))));
        assert_eq!(parse_algebraic("-sqrt(2)").ok(), Some(AlgebraicScalar::new(q(0, 1), q(-1, 1), &q(2, 1))));
        assert!(parse_algebraic("sqrt(").is_err());
        assert!(parse_algebraic("x").is_err());
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("1,-2,1/3").ok(), Some(Vec3::new(Rational::from_integer(1.into()), Rational::from_integer((-2).into()), Rational::new(1.into(), 3.into()))));
        assert!(parse_point("1,2").is_err());
    }
}
