//! Exact JSON encodings. Every number is a `"num/den"` string.

use ars_core::exactmath::rational::to_exact_string;
use ars_core::exactmath::{AlgebraicScalar, Mat3, MultiPoly, Rational, Vec3};
use ars_core::generators::AffineGenerator;
use ars_core::parabolic::{ConeClassification, HighestFormStructure, WFactor};
use ars_core::pipeline::{AxisReport, ClassificationReport, Evidence, PrecheckReport, SectionFamily, SectionReport, SphereCenter};
use serde_json::{json, Value};

pub fn rational(q: &Rational) -> Value {
    Value::String(to_exact_string(q))
}

pub fn rationals<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(qs.into_iter().map(rational).collect())
}

pub fn vec3(v: &Vec3) -> Value {
    rationals(&v.0)
}

fn mat3(m: &Mat3) -> Value {
    Value::Array(m.0.iter().map(|row| rationals(row)).collect())
}

/// Terms as `[[e1, e2, e3], "num/den"]`, leading term first.
pub fn poly(p: &MultiPoly) -> Value {
    Value::Array(p.terms().rev().map(|(m, c)| json!([m.0, to_exact_string(c)])).collect())
}

pub fn algebraic(a: &AlgebraicScalar) -> Value {
    let s = if a.is_rational() { Rational::from_integer(0.into()) } else { a.s.clone() };
    json!({ "text": a.to_string(), "a": rational(&a.a), "b": rational(&a.b), "radicand": rational(&s) })
}

fn generator(g: &AffineGenerator) -> Value {
    json!({ "matrix": mat3(&g.m), "translation": vec3(&g.b) })
}

fn center(c: &SphereCenter) -> Value {
    match c {
        SphereCenter::Point(p) => json!({ "point": vec3(p) }),
        SphereCenter::AtInfinity(d) => json!({ "at_infinity": vec3(d) }),
    }
}

fn evidence(e: &Evidence) -> Value {
    json!({
        "plucker_system": e.plucker_system,
        "generator_identity": e.generator_identity,
        "finite_element": e.finite_element,
        "cross_section": e.cross_section,
        "highest_form": e.highest_form,
    })
}

fn axis(a: &AxisReport) -> Value {
    json!({
        "moment": vec3(&a.line.moment),
        "direction": vec3(&a.line.direction),
        "type": a.class.name(),
        "normal_direction": a.normal_direction.as_ref().map(vec3),
        "generator": generator(&a.generator),
        "evidence": evidence(&a.evidence),
    })
}

pub fn prechecks(p: &PrecheckReport) -> Value {
    json!({
        "irreducible": p.irreducible.name(),
        "real_point": p.real_point.name(),
        "curved": p.curved.name(),
    })
}

pub fn report(input: Value, r: &ClassificationReport) -> Value {
    json!({
        "input": input,
        "prechecks": prechecks(&r.prechecks),
        "D": r.d,
        "basis": Value::Array(r.basis.iter().map(|b| rationals(b)).collect()),
        "affine_sphere": {
            "is": r.affine_sphere,
            "center": r.center.as_ref().map(center),
            "hyperbolic_type": r.hyperbolic_sphere,
        },
        "axes": Value::Array(r.axes.iter().map(axis).collect()),
        "families": Value::Array(r.families.iter().map(|f| json!({ "type": f.class.name(), "center": center(&f.center) })).collect()),
        "implicit": r.implicit.as_ref().map(poly),
        "verdict": r.verdict(),
        "warnings": r.warnings,
    })
}

pub fn section(s: &SectionReport) -> Value {
    let family = match &s.family {
        SectionFamily::ConcentricCircles { center } | SectionFamily::RectangularHyperbolas { center } => {
            json!({ "kind": s.family.name(), "center": vec3(center) })
        }
        SectionFamily::Parabolas { axis_direction } => json!({ "kind": s.family.name(), "axis_direction": vec3(axis_direction) }),
        SectionFamily::Unrecognized => json!({ "kind": s.family.name() }),
    };
    let (origin, a, b) = s.plane.frame();
    json!({
        "plane": rationals(&s.plane.coefficients()),
        "frame": { "origin": vec3(&origin), "s": vec3(&a), "t": vec3(&b) },
        "polynomial": poly(&s.polynomial),
        "degree": s.degree,
        "conic": s.conic.map(|c| c.name()),
        "conic_center": s.conic_center.as_ref().map(vec3),
        "family": family,
    })
}

pub fn cone(c: &ConeClassification) -> Value {
    json!({
        "w": algebraic(&c.w),
        "case": c.case.name(),
        "eigenvalues": c.eigenvalues.as_ref().map(|e| Value::Array(e.iter().map(algebraic).collect())),
        "unit_eigenvector": c.unit_eigenvector.as_ref().map(vec3),
        "revolution_axis": c.revolution_axis.as_ref().map(vec3),
    })
}

pub fn structure(s: &HighestFormStructure) -> Value {
    let roots: Vec<Value> = s
        .w_roots
        .iter()
        .map(|r| {
            let (kind, value) = match &r.factor {
                WFactor::Real(a) => ("real", algebraic(a)),
                WFactor::ComplexPair(q) => ("complex pair", rationals(q.coeffs())),
                WFactor::Unsplit(q) => ("unsplit", rationals(q.coeffs())),
            };
            json!({ "kind": kind, "value": value, "multiplicity": r.multiplicity })
        })
        .collect();
    json!({
        "degree": s.degree,
        "plane_multiplicity": s.plane_multiplicity,
        "cone_multiplicity": s.cone_multiplicity,
        "w_poly": rationals(s.w_poly.coeffs()),
        "w_roots": roots,
    })
}
