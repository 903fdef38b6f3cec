mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ars_core::diffgeo::{conormal_identity_check, covariance_check, mu_at, Parametrization};
use ars_core::exactmath::linalg::{AffineMap, Mat3};
use ars_core::exactmath::rational::{primitive_integer_vector, rat, ratio};
use ars_core::exactmath::{AlgebraicScalar, MultiPoly, Rational, RationalFunction, Vec3};
use ars_core::generators::{annihilates, canonical_elements, generator_space, GeneratorClass};
use ars_core::parabolic::{classify_cone, parabolic_axes, AxisCount, ConeCase};
use ars_core::pipeline::{detect_implicit, detect_parametric, implicitize, ClassificationReport, Config, SphereCenter};
use ars_core::plucker::{complex_row, line_from_point_dir, random_point, PluckerLine};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Primitive integer vector with a positive first nonzero entry.
fn canonical(v: &[Rational]) -> Vec<Rational> {
    let mut p = primitive_integer_vector(v);
    if p.iter().find(|c| **c != rat(0)).is_some_and(|c| *c < rat(0)) {
        p = p.iter().map(|c| -c).collect();
    }
    p
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&c| rat(c)).collect()
}

fn x_axis() -> PluckerLine {
    line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(1, 0, 0)).unwrap()
}

fn z_axis() -> PluckerLine {
    line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 0, 1)).unwrap()
}

fn criterion_1() -> Outcome {
    let f = poly(PARABOLIC_QUARTIC);
    let cases = [
        (Vec3::from_i64(-59, 6, 5), [0, 485, -582, -1909, 204, 170]),
        (Vec3::new(ratio(-322, 27), rat(6), rat(3)), [0, 747, -1494, -17139, 8748, 4374]),
    ];
    for (p, expected) in cases {
        let g = ars_core::diffgeo::gamma_at(&f, &p).map_err(|e| e.to_string())?;
        let row = complex_row(&g.point, &g.gamma);
        check(canonical(&row) == canonical(&ints(&expected)), format!("row at {:?} is {:?}", p, row))?;
    }
    Ok("both rows equal after canonical scaling".into())
}

fn criterion_2() -> Outcome {
    let f = poly(PARABOLIC_QUARTIC);
    let r = detect_implicit(&f, &Config::default()).map_err(|e| e.to_string())?;
    check(r.d == 1, format!("D = {}", r.d))?;
    check(r.axes.len() == 1, format!("{} axes", r.axes.len()))?;
    let a = &r.axes[0];
    check(a.line == x_axis(), format!("axis {}", a.line))?;
    check(a.class == GeneratorClass::Parabolic, format!("type {}", a.class))?;
    let nu = a.normal_direction.clone().ok_or("no normal direction")?;
    check(nu.parallel(&Vec3::from_i64(0, 1, -1)), format!("L_A = {:?}", nu))?;
    check(a.evidence.generator_identity && annihilates(&f, &a.generator), "generator identity")?;
    Ok(format!("parabolic about the x-axis, L_A = {}", fmt_vec(&nu)))
}

fn fmt_vec(v: &Vec3) -> String {
    format!("({}, {}, {})", v.0[0], v.0[1], v.0[2])
}

fn criterion_3() -> Outcome {
    let x = Parametrization::parse(HYPERBOLIC_PARAMETRIZATION).map_err(|e| e.to_string())?;
    let rows = [((1, 1), [0, 10, 0, 6, 0, -2]), ((1, 2), [15, 25, 0, 15, -9, -4])];
    for ((u, v), expected) in rows {
        let s = mu_at(&x, &rat(u), &rat(v)).map_err(|e| e.to_string())?;
        let row = complex_row(&s.point, &s.gamma);
        check(canonical(&row) == canonical(&ints(&expected)), format!("row at ({}, {}) is {:?}", u, v, row))?;
    }
    let r = detect_parametric(&x, &Config::default()).map_err(|e| e.to_string())?;
    check(r.d == 1, format!("D = {}", r.d))?;
    check(r.axes.len() == 1 && r.axes[0].line == z_axis(), "axis is not the z-axis")?;
    check(r.axes[0].class == GeneratorClass::Hyperbolic, format!("type {}", r.axes[0].class))?;
    // Oracle: x^2 - y^2 - (z - 1)^3 vanishes identically on the parametrization.
    let [cx, cy, cz] = x.coords.clone();
    let one = RationalFunction::from_poly(MultiPoly::constant(rat(1), cz.vars().clone()));
    let residual = cx.mul(&cx).sub(&cy.mul(&cy)).sub(&cz.sub(&one).pow(3));
    check(residual.num.is_zero(), "substitution identity fails")?;
    let g = implicitize(&x, 12).map_err(|e| e.to_string())?;
    check(g.proportional_to(&poly("x^2-y^2-(z-1)^3")), format!("implicit equation {}", g))?;
    Ok("hyperbolic about the z-axis; rows and implicit equation match".into())
}

fn criterion_4() -> Outcome {
    let r = detect_implicit(&poly(ELLIPSOID), &Config::default()).map_err(|e| e.to_string())?;
    check(r.d == 3, format!("D = {}", r.d))?;
    check(r.affine_sphere && r.center == Some(SphereCenter::Point(Vec3::zero())), "center is not the origin")?;
    check(r.axes.is_empty() && r.families.is_empty(), format!("{} axes", r.axes.len()))?;
    Ok(r.verdict())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let mut w = rat(0);
        while w == rat(0) {
            w = Rational::new(rng.gen_range(-40..=40i64).into(), rng.gen_range(1..=9i64).into());
        }
        let c = classify_cone(&AlgebraicScalar::rational(w.clone()));
        let ev = c.eigenvalues.ok_or("no eigenvalues")?;
        check(ev[0] == AlgebraicScalar::rational(rat(1)), format!("lambda1 = {} for w = {}", ev[0], w))?;
        check(ev[1].mul(&ev[2]) == AlgebraicScalar::rational(rat(-1)), format!("lambda2 lambda3 != -1 for w = {}", w))?;
        let disc = &w * &w + rat(4);
        let l2 = AlgebraicScalar::new(-&w / rat(2), ratio(1, 2), &disc);
        let l3 = AlgebraicScalar::new(-&w / rat(2), ratio(-1, 2), &disc);
        check((ev[1] == l2 && ev[2] == l3) || (ev[1] == l3 && ev[2] == l2), format!("eigenvalues differ for w = {}", w))?;
        check(c.case == ConeCase::EllipticCone, format!("case {} for w = {}", c.case.name(), w))?;
    }
    let tags = [
        (AlgebraicScalar::rational(rat(0)), ConeCase::RevolutionCone),
        (AlgebraicScalar::rational(rat(3)), ConeCase::EllipticCone),
        (AlgebraicScalar::rational(rat(-5)), ConeCase::EllipticCone),
        (AlgebraicScalar::new(rat(0), rat(2), &rat(-1)), ConeCase::NonDiagonalizable),
    ];
    for (w, case) in tags {
        let c = classify_cone(&w);
        check(c.case == case, format!("w = {}: {} instead of {}", w, c.case.name(), case.name()))?;
    }
    check(classify_cone(&AlgebraicScalar::rational(rat(0))).revolution_axis == Some(Vec3::from_i64(1, 0, 1)), "revolution axis")?;
    Ok("20 random w and the three cases".into())
}

fn criterion_6() -> Outcome {
    for (w, delta) in [(5, 0), (5, 3), (-2, 1)] {
        let f = poly(&format!("y^2-2*x*z-({})*x^2-({})", w, delta));
        let b = parabolic_axes(&f).map_err(|e| e.to_string())?;
        check(b.count == AxisCount::Two, format!("(w, delta) = ({}, {}): {}", w, delta, b.count.name()))?;
        let second = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(2, 0, -w)).unwrap();
        check(b.axes.len() == 2 && b.axes.contains(&z_axis()) && b.axes.contains(&second), format!("axes for w = {}", w))?;
        check(second.contains(&Vec3::from_i64(2, 0, -w)) && second.contains(&Vec3::zero()), "second axis")?;
    }
    for delta in [1, -4] {
        let f = poly(&format!("y^2-2*x*z-({})", delta));
        let b = parabolic_axes(&f).map_err(|e| e.to_string())?;
        check(b.count == AxisCount::Infinite, format!("delta = {}: {}", delta, b.count.name()))?;
    }
    Ok("two axes for w != 0, infinitely many for w = 0".into())
}

fn criterion_7() -> Outcome {
    let corpus = corpus(10, 7);
    let mut failures = Vec::new();
    for (i, s) in corpus.iter().enumerate() {
        match detect_parametric(&s.surface, &Config::default()) {
            Ok(r) => {
                if !r.axes.iter().any(|a| a.class == s.class && a.line == s.axis) {
                    failures.push(format!("#{} {}: got {:?}", i, s.class, r.axes.iter().map(|a| (a.class, a.line.to_string())).collect::<Vec<_>>()));
                }
            }
            Err(e) => failures.push(format!("#{} {}: {}", i, s.class, e)),
        }
    }
    check(failures.is_empty(), failures.join("; "))?;
    Ok(format!("{}/{} surfaces recovered", corpus.len(), corpus.len()))
}

/// Implicit surfaces for the property suites.
fn implicit_corpus() -> Vec<MultiPoly> {
    let mut out = vec![poly(PARABOLIC_QUARTIC), poly(ELLIPSOID), poly("x^2+y^2+z^2-1"), poly("x^2-y^2-(z-1)^3")];
    for s in corpus(2, 8) {
        if let Ok(f) = implicitize(&s.surface, 8) {
            out.push(f);
        }
    }
    out
}

fn unimodular(rng: &mut ChaCha8Rng) -> Mat3 {
    // Product of elementary shears: determinant one, rational entries.
    let mut m = Mat3::identity();
    for _ in 0..4 {
        let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
        if i == j {
            continue;
        }
        let mut e = Mat3::identity();
        e.0[i][j] = Rational::new(rng.gen_range(-3..=3i64).into(), rng.gen_range(1..=2i64).into());
        m = m.mul(&e);
    }
    m
}

fn detect_all(f: &MultiPoly, seed: u64) -> Option<ClassificationReport> {
    detect_implicit(f, &Config { seed, ..Config::default() }).ok()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let surfaces = implicit_corpus();
    // (a) co-normal identity at every valid sample.
    let mut valid = 0;
    for f in &surfaces {
        for _ in 0..6 {
            let p = random_point(&mut rng);
            if let Ok(ok) = conormal_identity_check(f, &p) {
                check(ok, format!("co-normal identity fails for {} at {:?}", f, p))?;
                valid += 1;
            }
        }
    }
    check(valid > 0, "no valid samples")?;
    // (b) covariance of the affine normal line.
    for f in [poly("x^2+y^2+z^2-1"), poly(PARABOLIC_QUARTIC)] {
        for _ in 0..10 {
            let h = AffineMap::new(unimodular(&mut rng), random_point(&mut rng));
            let p = random_point(&mut rng);
            if let Ok(ok) = covariance_check(&f, &h, &p) {
                check(ok, format!("covariance fails for {}", f))?;
            }
        }
    }
    // (c) homogeneous forms of parabolic surfaces.
    let mut parabolic = 0;
    for s in corpus(3, 9).into_iter().filter(|s| s.class == GeneratorClass::Parabolic) {
        let centered = AffineMap::new(s.frame.linear.clone(), Vec3::zero());
        let x = ars_core::pipeline::generate_ars(s.class, &s.directrix, &centered).unwrap();
        let Ok(f) = implicitize(&x, 12) else { continue };
        let r = detect_implicit(&f, &Config::default()).map_err(|e| e.to_string())?;
        let a = r.axes.iter().find(|a| a.class == GeneratorClass::Parabolic).ok_or("parabolic axis missing")?;
        let linear = ars_core::generators::AffineGenerator::new(a.generator.m.clone(), Vec3::zero()).unwrap();
        for (_, part) in f.homogeneous_parts() {
            check(annihilates(&part, &linear), "a homogeneous form is not invariant")?;
        }
        parabolic += 1;
    }
    check(parabolic > 0, "no parabolic surface implicitized")?;
    // (d) the cone carries all three types on distinct lines.
    let found = canonical_elements(&generator_space(&poly("y^2-2*x*z")).iter().map(|g| (g.m.clone(), g.b.clone())).collect::<Vec<_>>());
    let mut lines = Vec::new();
    for class in GeneratorClass::CANONICAL {
        let g = found.generators.iter().find(|g| g.class == class).ok_or(format!("no {} generator on the cone", class))?;
        lines.push(g.axis.clone().unwrap());
    }
    check(lines[0] != lines[1] && lines[1] != lines[2] && lines[0] != lines[2], "fixed lines coincide")?;
    // (e) one type per axis, (f) seed and scale independence.
    let mut detected = 0;
    for f in &surfaces {
        let Some(r) = detect_all(f, 0) else { continue };
        detected += 1;
        for a in &r.axes {
            check(r.axes.iter().filter(|b| b.line == a.line).count() == 1, format!("two types on {}", a.line))?;
        }
        check(detect_all(f, 12345).as_ref() == Some(&r), format!("seed dependence for {}", f))?;
        for c in [rat(-1), rat(2), ratio(7, 3)] {
            check(detect_all(&f.scale(&c), 0).as_ref() == Some(&r), format!("scale dependence for {}", f))?;
        }
    }
    check(detected == surfaces.len(), format!("only {} of {} surfaces detected", detected, surfaces.len()))?;
    Ok(format!("{} surfaces, {} co-normal samples, {} parabolic form checks", surfaces.len(), valid, parabolic))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome, Duration); 8] = [
        (1, criterion_1, Duration::from_secs(1)),
        (2, criterion_2, Duration::from_secs(10)),
        (3, criterion_3, Duration::from_secs(10)),
        (4, criterion_4, Duration::from_secs(5)),
        (5, criterion_5, Duration::from_secs(1)),
        (6, criterion_6, Duration::from_secs(2)),
        (7, criterion_7, Duration::from_secs(300)),
        (8, criterion_8, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (n, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > limit => Err(format!("{} but took {:.2?} (limit {:?})", msg, elapsed, limit)),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {}: PASS ({:.2?}) {}", n, elapsed, msg),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL ({:.2?}) {}", n, elapsed, msg);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
