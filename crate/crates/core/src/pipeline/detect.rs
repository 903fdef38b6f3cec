//! Axis detection: the line system proposes, generator identities confirm.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::implicitize::implicitize;
use super::precheck::{precheck_implicit, precheck_parametric, PrecheckReport};
use super::section::{section_of_implicit, Plane, SectionFamily};
use super::tangency::{tangency_space, tangent_identity, Homogenized};
use super::Config;
use crate::diffgeo::Parametrization;
use crate::error::Result;
use crate::exactmath::linalg::{nullspace, rank};
use crate::exactmath::rational::{primitive_integer_vector, rat};
use crate::exactmath::{Mat3, MultiPoly, Rational, Vec3};
use crate::generators::{
    annihilates, canonical_elements, fixes_point_rows, invariance_evidence, kills_direction_rows, space_with, AffineGenerator, GeneratorClass,
};
use crate::parabolic::{canonical_frame, generator_normal_direction, normal_direction_candidates, parabolic_axes, AxisCount, NormalCandidate};
use crate::plucker::{assemble_and_solve, bundle_center, point_on_line, BundleCenter, PluckerLine, Source};

/// Which exact checks support an axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    /// The axis lies in the solution space of the line system.
    pub plucker_system: bool,
    pub generator_identity: bool,
    pub finite_element: Option<bool>,
    /// A section transversal to the axis belongs to the expected family.
    pub cross_section: Option<bool>,
    /// Parabolic axes only: the normal direction is allowed by the highest form.
    pub highest_form: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisReport {
    pub line: PluckerLine,
    pub class: GeneratorClass,
    pub generator: AffineGenerator,
    /// The normal direction `L_A` of a parabolic axis.
    pub normal_direction: Option<Vec3>,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SphereCenter {
    Point(Vec3),
    /// Center at infinity in this direction.
    AtInfinity(Vec3),
}

/// Infinitely many axes of one class, all through the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisFamily {
    pub class: GeneratorClass,
    pub center: SphereCenter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub prechecks: PrecheckReport,
    /// Dimension of the solution space of the line system.
    pub d: usize,
    /// Its canonical basis in `(alpha | beta)` coordinates.
    pub basis: Vec<Vec<Rational>>,
    pub affine_sphere: bool,
    pub center: Option<SphereCenter>,
    /// Non-quadric surface with several axes.
    pub hyperbolic_sphere: bool,
    pub axes: Vec<AxisReport>,
    pub families: Vec<AxisFamily>,
    /// The implicit equation used for evidence, primitive.
    pub implicit: Option<MultiPoly>,
    pub warnings: Vec<String>,
}

impl ClassificationReport {
    pub fn is_ars(&self) -> bool {
        !self.axes.is_empty() || !self.families.is_empty()
    }

    pub fn verdict(&self) -> String {
        let ars = if self.is_ars() { "affine rotation surface" } else { "not an affine rotation surface" };
        if self.affine_sphere {
            let kind = if self.hyperbolic_sphere { "affine sphere of hyperbolic type" } else { "affine sphere" };
            alloc::format!("{}, {}", kind, ars)
        } else if self.d == 0 {
            String::from("not an affine rotation surface nor an affine sphere")
        } else {
            String::from(ars)
        }
    }
}

enum Oracle<'a> {
    Implicit(&'a MultiPoly),
    Parametric { x: &'a Parametrization, h: Homogenized, seed: u64 },
}

impl Oracle<'_> {
    fn space(&self, extra: Vec<Vec<Rational>>) -> Result<Vec<(Mat3, Vec3)>> {
        match self {
            Oracle::Implicit(f) => Ok(space_with(f, extra)),
            Oracle::Parametric { x, h, seed } => tangency_space(x, h, extra, *seed),
        }
    }

    fn identity(&self, g: &AffineGenerator) -> bool {
        match self {
            Oracle::Implicit(f) => annihilates(f, g),
            Oracle::Parametric { h, .. } => tangent_identity(h, &g.m, &g.b),
        }
    }
}

fn axis_rows(line: &PluckerLine) -> Vec<Vec<Rational>> {
    let mut rows = fixes_point_rows(&point_on_line(line).expect("valid line"));
    rows.extend(kills_direction_rows(&line.direction));
    rows
}

fn in_span(basis: &[Vec<Rational>], line: &PluckerLine) -> bool {
    let mut rows = basis.to_vec();
    rows.push(line.to_alpha_beta().to_vec());
    rank(&rows, 6) == rank(basis, 6)
}

/// `ker M^T`, the normal of the invariant planes of the generator.
fn invariant_plane_normal(g: &AffineGenerator) -> Option<Vec3> {
    let k = nullspace(&g.m.transpose().rows(), 3);
    (k.len() == 1).then(|| Vec3::from_slice(&primitive_integer_vector(&k[0])))
}

const SECTION_OFFSETS: [i64; 6] = [1, 2, 3, 5, 7, 11];

/// Sections by invariant planes: circles or rectangular hyperbolas centered
/// on the axis, or parabolas whose axes are parallel to it.
fn section_evidence(f: &MultiPoly, g: &AffineGenerator, axis: &PluckerLine) -> Option<bool> {
    let nu = invariant_plane_normal(g)?;
    let p = point_on_line(axis).ok()?;
    for k in SECTION_OFFSETS {
        let Ok(plane) = Plane::new(nu.clone(), nu.dot(&p) + rat(k)) else { continue };
        let Ok(r) = section_of_implicit(f, &plane) else { continue };
        if r.degree < 2 {
            continue;
        }
        return Some(match (g.class, &r.family) {
            (GeneratorClass::Elliptic, SectionFamily::ConcentricCircles { center }) => axis.contains(center),
            (GeneratorClass::Hyperbolic, SectionFamily::RectangularHyperbolas { center }) => axis.contains(center),
            (GeneratorClass::Parabolic, SectionFamily::Parabolas { axis_direction }) => axis_direction.parallel(&axis.direction),
            _ => false,
        });
    }
    None
}

fn highest_form_evidence(f: &MultiPoly, axis: &PluckerLine, nu: &Vec3) -> Option<bool> {
    let cands = normal_direction_candidates(f, &axis.direction).ok()?;
    Some(cands.iter().any(|c| match c {
        NormalCandidate::Direction(d) => d.parallel(nu),
        NormalCandidate::Plane(n) => n.dot(nu).is_zero(),
    }))
}

struct Detector<'a> {
    oracle: Oracle<'a>,
    implicit: Option<&'a MultiPoly>,
    basis: &'a [Vec<Rational>],
    axes: Vec<AxisReport>,
    families: Vec<AxisFamily>,
    warnings: Vec<String>,
}

impl Detector<'_> {
    /// Records `g` when its exact checks pass.
    fn consider(&mut self, g: AffineGenerator) {
        let Some(line) = g.axis.clone() else { return };
        if self.axes.iter().any(|a| a.line == line && a.class == g.class) {
            return;
        }
        let identity = self.oracle.identity(&g);
        if !identity {
            self.warnings.push(alloc::format!("candidate {} axis {} fails the generator identity", g.class, line));
            return;
        }
        let finite_element = self.implicit.and_then(|f| {
            let e = invariance_evidence(f, &g);
            if e.identity {
                e.finite_element
            } else {
                Some(false)
            }
        });
        if finite_element == Some(false) {
            self.warnings.push(alloc::format!("candidate {} axis {} fails the finite group element check", g.class, line));
            return;
        }
        let normal_direction = generator_normal_direction(&g);
        let cross_section = self.implicit.and_then(|f| section_evidence(f, &g, &line));
        let highest_form = match (&normal_direction, self.implicit) {
            (Some(nu), Some(f)) => highest_form_evidence(f, &line, nu),
            _ => None,
        };
        let evidence = Evidence { plucker_system: in_span(self.basis, &line), generator_identity: true, finite_element, cross_section, highest_form };
        if self.axes.iter().any(|a| a.line == line) {
            self.warnings.push(alloc::format!("axis {} carries more than one type", line));
        }
        self.axes.push(AxisReport { line, class: g.class, generator: g, normal_direction, evidence });
    }

    fn mark_family(&mut self, class: GeneratorClass, center: &SphereCenter) {
        if !self.families.iter().any(|f| f.class == class) {
            self.families.push(AxisFamily { class, center: center.clone() });
        }
    }

    fn single_axis(&mut self) -> Result<()> {
        let line = match PluckerLine::from_alpha_beta(&self.basis[0]) {
            Ok(l) => l,
            Err(_) => {
                self.warnings.push(String::from("the solution of the line system is not a line"));
                return Ok(());
            }
        };
        let space = self.oracle.space(axis_rows(&line))?;
        let found = canonical_elements(&space);
        for g in found.generators {
            if g.axis.as_ref() == Some(&line) {
                self.consider(g);
            }
        }
        if self.axes.is_empty() {
            self.warnings.push(alloc::format!("candidate axis {} carries no affine rotation", line));
        }
        Ok(())
    }

    fn through_center(&mut self, center: &SphereCenter) -> Result<()> {
        let rows = match center {
            SphereCenter::Point(c) => fixes_point_rows(c),
            SphereCenter::AtInfinity(d) => kills_direction_rows(d),
        };
        let space = self.oracle.space(rows)?;
        let found = canonical_elements(&space);
        for c in &found.infinite {
            self.mark_family(*c, center);
        }
        let parabolic: Vec<AffineGenerator> = found.generators.iter().filter(|g| g.class == GeneratorClass::Parabolic).cloned().collect();
        for g in found.generators {
            self.consider(g);
        }
        if let (Some(g), Some(f)) = (parabolic.first(), self.implicit) {
            self.parabolic_bundle(g, f, center)?;
        }
        let before = self.axes.len();
        self.axes.retain(|a| match center {
            SphereCenter::Point(c) => a.line.contains(c),
            SphereCenter::AtInfinity(d) => a.line.direction.parallel(d),
        });
        if self.axes.len() != before {
            self.warnings.push(String::from("dropped axes that miss the center"));
        }
        Ok(())
    }

    /// Exact count of parabolic axes in the canonical frame of `g`.
    fn parabolic_bundle(&mut self, g: &AffineGenerator, f: &MultiPoly, center: &SphereCenter) -> Result<()> {
        let Some(frame) = canonical_frame(g) else { return Ok(()) };
        match parabolic_axes(&frame.pull_back(f)) {
            Ok(bundle) => match bundle.count {
                AxisCount::Infinite => self.mark_family(GeneratorClass::Parabolic, center),
                AxisCount::Two => {
                    for axis in &bundle.axes {
                        let line = axis.transform(&frame.linear, &frame.translation);
                        if self.axes.iter().any(|a| a.line == line && a.class == GeneratorClass::Parabolic) {
                            continue;
                        }
                        let space = self.oracle.space(axis_rows(&line))?;
                        for h in canonical_elements(&space).generators {
                            if h.class == GeneratorClass::Parabolic && h.axis.as_ref() == Some(&line) {
                                self.consider(h);
                            }
                        }
                    }
                }
                AxisCount::One => {}
            },
            Err(e) => self.warnings.push(alloc::format!("parabolic axis count unavailable: {}", e)),
        }
        Ok(())
    }
}

fn class_rank(c: GeneratorClass) -> u8 {
    match c {
        GeneratorClass::Elliptic => 0,
        GeneratorClass::Hyperbolic => 1,
        GeneratorClass::Parabolic => 2,
        GeneratorClass::NonCanonical => 3,
    }
}

fn run(oracle: Oracle<'_>, implicit: Option<&MultiPoly>, prechecks: PrecheckReport, basis: Vec<Vec<Rational>>, mut warnings: Vec<String>) -> Result<ClassificationReport> {
    let d = basis.len();
    let mut det = Detector { oracle, implicit, basis: &basis, axes: Vec::new(), families: Vec::new(), warnings: Vec::new() };
    let mut center = None;
    if d == 1 {
        det.single_axis()?;
    } else if d > 1 {
        match bundle_center(&basis) {
            Ok(c) => {
                let c = match c {
                    BundleCenter::Point(p) => SphereCenter::Point(p),
                    BundleCenter::AtInfinity(v) => SphereCenter::AtInfinity(v),
                };
                det.through_center(&c)?;
                center = Some(c);
            }
            Err(e) => det.warnings.push(alloc::format!("no common center: {}", e)),
        }
    }
    let Detector { mut axes, mut families, warnings: w, .. } = det;
    warnings.extend(w);
    axes.sort_by(|a, b| (class_rank(a.class), a.line.to_alpha_beta()).cmp(&(class_rank(b.class), b.line.to_alpha_beta())));
    families.sort_by_key(|f| class_rank(f.class));
    let affine_sphere = center.is_some();
    let multi = axes.len() + families.len() >= 2 || !families.is_empty();
    let hyperbolic_sphere = affine_sphere && multi && implicit.and_then(MultiPoly::degree).is_some_and(|n| n > 2);
    Ok(ClassificationReport { prechecks, d, basis, affine_sphere, center, hyperbolic_sphere, axes, families, implicit: implicit.cloned(), warnings })
}

/// Runs the prechecks and the detection on an implicit surface `F = 0`.
/// Reports depend on `F` only up to a constant factor.
pub fn detect_implicit(f: &MultiPoly, config: &Config) -> Result<ClassificationReport> {
    let f = f.primitive();
    let prechecks = precheck_implicit(&f, config.seed)?;
    let sys = assemble_and_solve(Source::Implicit(&f), &config.sampling())?;
    let warnings = prechecks.warnings.clone();
    run(Oracle::Implicit(&f), Some(&f), prechecks, sys.basis, warnings)
}

/// Runs the prechecks and the detection on a rational parametrization.
/// Symmetries are confirmed by exact tangency; the implicit equation, when
/// it fits the degree bound, adds section and finite-element evidence.
pub fn detect_parametric(x: &Parametrization, config: &Config) -> Result<ClassificationReport> {
    let prechecks = precheck_parametric(x, config.seed)?;
    let sys = assemble_and_solve(Source::Parametric(x), &config.sampling())?;
    let mut warnings = prechecks.warnings.clone();
    let implicit = match implicitize(x, config.degree_bound) {
        Ok(f) => Some(f),
        Err(e) => {
            warnings.push(alloc::format!("no implicit equation ({}); evidence is limited to exact tangency", e));
            None
        }
    };
    let oracle = Oracle::Parametric { x, h: Homogenized::new(x), seed: config.seed };
    run(oracle, implicit.as_ref(), prechecks, sys.basis, warnings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse::parse_poly;
    use crate::exactmath::poly::xyz;

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s, &xyz()).unwrap()
    }

    #[test]
    fn sphere_has_infinitely_many_elliptic_axes() {
        let r = detect_implicit(&poly("x^2+y^2+z^2-1"), &Config::default()).unwrap();
        assert_eq!(r.d, 3);
        assert!(r.affine_sphere);
        assert_eq!(r.center, Some(SphereCenter::Point(Vec3::zero())));
        assert_eq!(r.families.len(), 1);
        assert_eq!(r.families[0].class, GeneratorClass::Elliptic);
        assert!(!r.hyperbolic_sphere);
        assert!(r.axes.iter().all(|a| a.class == GeneratorClass::Elliptic && a.evidence.generator_identity));
    }

    #[test]
    fn ellipsoid_is_sphere_without_axes() {
        let r = detect_implicit(&poly("4*x^2+16*y^2+z^2-1"), &Config::default()).unwrap();
        assert_eq!(r.d, 3);
        assert!(r.affine_sphere && !r.is_ars());
        assert_eq!(r.verdict(), "affine sphere, not an affine rotation surface");
    }

    #[test]
    fn revolution_quartic() {
        let r = detect_implicit(&poly("(x^2+y^2)^2+z^3-x^2-y^2+z"), &Config::default()).unwrap();
        assert_eq!(r.d, 1);
        assert_eq!(r.axes.len(), 1);
        let a = &r.axes[0];
        assert_eq!(a.class, GeneratorClass::Elliptic);
        assert_eq!(a.line.direction, Vec3::from_i64(0, 0, 1));
        assert_eq!(a.evidence.cross_section, Some(true));
        assert_eq!(a.evidence.finite_element, Some(true));
    }

    #[test]
    fn generic_surface() {
        let r = detect_implicit(&poly("x^3+y^2*z+x*z^2-y+2"), &Config::default()).unwrap();
        assert_eq!(r.d, 0);
        assert_eq!(r.verdict(), "not an affine rotation surface nor an affine sphere");
    }

    #[test]
    fn parabolic_quartic() {
        let f = poly("2*x*y^3-6*x*y^2*z+6*x*y*z^2-2*x*z^3+4*y^3*z-8*y^2*z^2+4*y*z^3-y+z-1");
        let r = detect_implicit(&f, &Config::default()).unwrap();
        assert_eq!(r.d, 1);
        assert_eq!(r.axes.len(), 1);
        let a = &r.axes[0];
        assert_eq!(a.class, GeneratorClass::Parabolic);
        assert_eq!(a.line.direction, Vec3::from_i64(1, 0, 0));
        assert_eq!(a.line.moment, Vec3::zero());
        assert!(a.normal_direction.as_ref().unwrap().parallel(&Vec3::from_i64(0, 1, -1)));
        assert_eq!(a.evidence.highest_form, Some(true));
        assert_eq!(a.evidence.cross_section, Some(true));
    }

    #[test]
    fn hyperbolic_parametrization() {
        let x = Parametrization::parse("-u^3*(v^2+1)/(2*v); u^3*(v^2-1)/(2*v); u^2+1").unwrap();
        let r = detect_parametric(&x, &Config::default()).unwrap();
        assert_eq!(r.d, 1);
        assert_eq!(r.axes.len(), 1);
        assert_eq!(r.axes[0].class, GeneratorClass::Hyperbolic);
        assert_eq!(r.axes[0].line.direction, Vec3::from_i64(0, 0, 1));
        assert!(r.implicit.as_ref().unwrap().proportional_to(&poly("x^2-y^2-(z-1)^3")));
        assert_eq!(r.axes[0].evidence.cross_section, Some(true));
    }

    #[test]
    fn scaling_does_not_change_report() {
        let f = poly("(x^2+y^2)^2+z^3-x^2-y^2+z");
        let r = detect_implicit(&f, &Config::default()).unwrap();
        for c in [rat(-1), rat(2), Rational::new(7.into(), 3.into())] {
            assert_eq!(detect_implicit(&f.scale(&c), &Config::default()).unwrap(), r);
        }
    }
}
