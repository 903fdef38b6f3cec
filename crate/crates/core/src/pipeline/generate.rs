//! Affine rotation surfaces built from a directrix and a canonical group.

use alloc::vec::Vec;

use num_traits::One;

use crate::diffgeo::Parametrization;
use crate::error::{Error, Result};
use crate::exactmath::linalg::AffineMap;
use crate::exactmath::parse::parse_poly;
use crate::exactmath::poly::{uv, vars};
use crate::exactmath::rational::ratio;
use crate::exactmath::{MultiPoly, Rational, RationalFunction, UniPoly, Vec3};
use crate::generators::GeneratorClass;
use crate::plucker::{line_from_point_dir, PluckerLine};

/// Planar curve `(f(s), 0, g(s))` swept by the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directrix {
    pub f: UniPoly,
    pub g: UniPoly,
}

impl Directrix {
    /// Rejects a directrix on the axis (`f == 0`) and constant ones.
    pub fn new(f: UniPoly, g: UniPoly) -> Result<Self> {
        if f.is_zero() || (f.degree() == 0 && g.degree() == 0) {
            return Err(Error::DegenerateDirectrix);
        }
        Ok(Directrix { f, g })
    }

    /// Parses `"f(s); g(s)"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 2 {
            return Err(Error::Syntax(alloc::format!("expected two ';'-separated polynomials, got {}", parts.len())));
        }
        let s = vars(&["s"]);
        let f = parse_poly(parts[0], &s)?.to_univariate(0).expect("univariate");
        let g = parse_poly(parts[1], &s)?.to_univariate(0).expect("univariate");
        Directrix::new(f, g)
    }
}

/// Rational parametrization in `(u, v)`: `u` runs along the directrix and
/// `v` is the rational group parameter. `frame` is applied last.
pub fn generate_ars(class: GeneratorClass, directrix: &Directrix, frame: &AffineMap) -> Result<Parametrization> {
    let vs = uv();
    let f = MultiPoly::from_univariate(&directrix.f, 0, vs.clone());
    let g = MultiPoly::from_univariate(&directrix.g, 0, vs.clone());
    let v = MultiPoly::var(1, vs.clone());
    let one = MultiPoly::constant(Rational::one(), vs.clone());
    let vv = &v * &v;
    let coords = match class {
        GeneratorClass::Elliptic => {
            let den = &one + &vv;
            [
                RationalFunction::new(&f * &(&one - &vv), den.clone()),
                RationalFunction::new((&f * &v).scale(&ratio(2, 1)), den),
                RationalFunction::from_poly(g),
            ]
        }
        GeneratorClass::Hyperbolic => {
            let den = v.scale(&ratio(2, 1));
            [
                RationalFunction::new(&f * &(&vv + &one), den.clone()),
                RationalFunction::new(&f * &(&vv - &one), den),
                RationalFunction::from_poly(g),
            ]
        }
        GeneratorClass::Parabolic => [
            RationalFunction::from_poly(f.clone()),
            RationalFunction::from_poly(&v * &f),
            RationalFunction::from_poly(&(&vv * &f).scale(&ratio(1, 2)) + &g),
        ],
        GeneratorClass::NonCanonical => return Err(Error::NonCanonicalClass),
    };
    Ok(apply_frame(&coords, frame))
}

fn apply_frame(x: &[RationalFunction; 3], frame: &AffineMap) -> Parametrization {
    let vs = uv();
    let out: [RationalFunction; 3] = core::array::from_fn(|i| {
        let t = MultiPoly::constant(frame.translation.0[i].clone(), vs.clone());
        let mut acc = RationalFunction::from_poly(t);
        for (j, c) in x.iter().enumerate() {
            let a = &frame.linear.0[i][j];
            if !num_traits::Zero::is_zero(a) {
                let scaled = RationalFunction::new(c.num.scale(a), c.den.clone());
                acc = acc.add(&scaled);
            }
        }
        acc
    });
    Parametrization { coords: out }
}

/// The axis of a generated surface: the image of the z-axis.
pub fn generated_axis(frame: &AffineMap) -> PluckerLine {
    let z = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 0, 1)).expect("z-axis");
    z.transform(&frame.linear, &frame.translation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::linalg::Mat3;
    use crate::exactmath::rational::rat;

    fn identity() -> AffineMap {
        AffineMap::linear(Mat3::identity())
    }

    #[test]
    fn hyperbolic_surface_from_directrix() {
        let d = Directrix::parse("s^3; s^2+1").unwrap();
        let x = generate_ars(GeneratorClass::Hyperbolic, &d, &identity()).unwrap();
        let expected = Parametrization::parse("u^3*(v^2+1)/(2*v); u^3*(v^2-1)/(2*v); u^2+1").unwrap();
        for (u, v) in [(1, 1), (2, 3), (-1, 5)] {
            assert_eq!(x.eval(&rat(u), &rat(v)), expected.eval(&rat(u), &rat(v)));
        }
    }

    #[test]
    fn parabolic_orbit_matches_group() {
        let d = Directrix::parse("s; s^2+1").unwrap();
        let x = generate_ars(GeneratorClass::Parabolic, &d, &identity()).unwrap();
        assert_eq!(x, Parametrization::parse("u; v*u; v^2*u/2+u^2+1").unwrap());
    }

    #[test]
    fn elliptic_stays_on_paraboloid() {
        let d = Directrix::parse("s; s^2").unwrap();
        let x = generate_ars(GeneratorClass::Elliptic, &d, &identity()).unwrap();
        for (u, v) in [(1, 1), (2, 3), (-3, 7)] {
            let p = x.eval(&rat(u), &rat(v)).unwrap();
            assert_eq!(&p.0[0] * &p.0[0] + &p.0[1] * &p.0[1], p.0[2]);
        }
    }

    #[test]
    fn frame_moves_axis() {
        let frame = AffineMap::new(Mat3::from_i64([[0, 0, 1], [0, 1, 0], [-1, 0, 0]]), Vec3::from_i64(1, 2, 3));
        let axis = generated_axis(&frame);
        assert_eq!(axis.direction, Vec3::from_i64(1, 0, 0));
        assert!(axis.contains(&Vec3::from_i64(1, 2, 3)));
        let d = Directrix::parse("s; s^3").unwrap();
        let x = generate_ars(GeneratorClass::Parabolic, &d, &frame).unwrap();
        let base = generate_ars(GeneratorClass::Parabolic, &d, &identity()).unwrap();
        let p = base.eval(&rat(2), &rat(-1)).unwrap();
        assert_eq!(x.eval(&rat(2), &rat(-1)).unwrap(), frame.apply(&p));
    }

    #[test]
    fn degenerate_directrices() {
        assert_eq!(Directrix::parse("0; s"), Err(Error::DegenerateDirectrix));
        assert_eq!(Directrix::parse("2; 3"), Err(Error::DegenerateDirectrix));
        assert!(Directrix::parse("s").is_err());
        let d = Directrix::parse("s; 1").unwrap();
        assert_eq!(generate_ars(GeneratorClass::NonCanonical, &d, &identity()), Err(Error::NonCanonicalClass));
    }
}
