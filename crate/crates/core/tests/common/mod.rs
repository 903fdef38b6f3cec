#![allow(dead_code)]

use ars_core::exactmath::linalg::{rank, AffineMap, Mat3};
use ars_core::exactmath::parse::parse_poly;
use ars_core::exactmath::poly::xyz;
use ars_core::exactmath::rational::rat;
use ars_core::exactmath::{MultiPoly, Rational, UniPoly, Vec3};
use ars_core::generators::GeneratorClass;
use ars_core::pipeline::{generate_ars, generated_axis, Directrix};
use ars_core::diffgeo::Parametrization;
use ars_core::plucker::PluckerLine;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PARABOLIC_QUARTIC: &str = "2*x*y^3-6*x*y^2*z+6*x*y*z^2-2*x*z^3+4*y^3*z-8*y^2*z^2+4*y*z^3-y+z-1";
pub const HYPERBOLIC_PARAMETRIZATION: &str = "-u^3*(v^2+1)/(2*v); u^3*(v^2-1)/(2*v); u^2+1";
pub const ELLIPSOID: &str = "4*x^2+16*y^2+z^2-1";

pub fn poly(s: &str) -> MultiPoly {
    parse_poly(s, &xyz()).unwrap()
}

/// Rotation from the Cayley transform `(I - S)^-1 (I + S)` of a skew `S`.
pub fn cayley(a: Rational, b: Rational, c: Rational) -> Mat3 {
    let z = rat(0);
    let s = Mat3([[z.clone(), -&c, b.clone()], [c.clone(), z.clone(), -&a], [-&b, a, z]]);
    let i = Mat3::identity();
    i.sub(&s).inverse().unwrap().mul(&i.add(&s))
}

fn small(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rational {
    Rational::new(rng.gen_range(lo..=hi).into(), rng.gen_range(1..=3i64).into())
}

pub fn rigid_frame(rng: &mut ChaCha8Rng) -> AffineMap {
    let q = cayley(small(rng, -3, 3), small(rng, -3, 3), small(rng, -3, 3));
    AffineMap::new(q, Vec3::new(small(rng, -4, 4), small(rng, -4, 4), small(rng, -4, 4)))
}

fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> UniPoly {
    let mut c: Vec<Rational> = (0..=degree).map(|_| rat(rng.gen_range(-3..=3))).collect();
    while c[degree] == rat(0) {
        c[degree] = rat(rng.gen_range(-3..=3));
    }
    UniPoly::new(c)
}

/// Directrix of degree at most four that is not contained in a line and
/// does not sweep a quadric.
pub fn random_directrix(rng: &mut ChaCha8Rng) -> Directrix {
    loop {
        let df = rng.gen_range(1..=4);
        let dg = rng.gen_range(1..=4);
        if df + dg < 4 {
            continue;
        }
        let f = random_poly(rng, df);
        let g = random_poly(rng, dg);
        if on_a_line(&f, &g) {
            continue;
        }
        if let Ok(d) = Directrix::new(f, g) {
            return d;
        }
    }
}

/// True when `1, f, g` are linearly dependent, i.e. the directrix lies on a
/// line and sweeps a developable surface.
fn on_a_line(f: &UniPoly, g: &UniPoly) -> bool {
    let n = f.degree().max(g.degree()) + 1;
    let row = |p: &UniPoly| (1..n).map(|i| p.coeff(i)).collect::<Vec<_>>();
    rank(&[row(f), row(g)], n - 1) < 2
}

pub struct CorpusSurface {
    pub class: GeneratorClass,
    pub directrix: Directrix,
    pub frame: AffineMap,
    pub surface: Parametrization,
    pub axis: PluckerLine,
}

/// `per_type` generated surfaces of each canonical type, deterministic in
/// `seed`.
pub fn corpus(per_type: usize, seed: u64) -> Vec<CorpusSurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for class in GeneratorClass::CANONICAL {
        for _ in 0..per_type {
            let directrix = random_directrix(&mut rng);
            let frame = rigid_frame(&mut rng);
            let surface = generate_ars(class, &directrix, &frame).unwrap();
            out.push(CorpusSurface { class, axis: generated_axis(&frame), directrix, frame, surface });
        }
    }
    out
}
