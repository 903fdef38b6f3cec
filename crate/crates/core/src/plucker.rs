//! Plücker line coordinates and the linear complex system whose solutions
//! are the lines met by every affine normal.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diffgeo::{mu_at, JetEvaluator, Parametrization};
use crate::error::{Error, Result};
use crate::exactmath::linalg::{nullspace, rank, solve, Mat3, Vec3};
use crate::exactmath::poly::MultiPoly;
use crate::exactmath::rational::{primitive_integer_vector, to_short_string, Rational};

/// A line as moment `P x w` and direction `w`. Stored as coprime integers
/// with the first nonzero direction component positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PluckerLine {
    pub moment: Vec3,
    pub direction: Vec3,
}

impl PluckerLine {
    pub fn new(moment: Vec3, direction: Vec3) -> Result<Self> {
        if direction.is_zero() {
            return Err(Error::ZeroDirection);
        }
        if !moment.dot(&direction).is_zero() {
            return Err(Error::InvalidLine);
        }
        Ok(PluckerLine::canonical(moment, direction))
    }

    fn canonical(moment: Vec3, direction: Vec3) -> Self {
        let mut six = direction.to_vec();
        six.extend(moment.to_vec());
        let mut v = primitive_integer_vector(&six);
        // primitive_integer_vector makes the first nonzero entry positive,
        // which is a direction entry because the direction is nonzero.
        let m = v.split_off(3);
        PluckerLine { moment: Vec3::from_slice(&m), direction: Vec3::from_slice(&v) }
    }

    /// `(direction | moment)`, the unknown order of the linear complex system.
    pub fn to_alpha_beta(&self) -> [Rational; 6] {
        let d = &self.direction.0;
        let m = &self.moment.0;
        [d[0].clone(), d[1].clone(), d[2].clone(), m[0].clone(), m[1].clone(), m[2].clone()]
    }

    /// Inverse of [`PluckerLine::to_alpha_beta`].
    pub fn from_alpha_beta(v: &[Rational]) -> Result<Self> {
        PluckerLine::new(Vec3::from_slice(&v[3..6]), Vec3::from_slice(&v[0..3]))
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        p.cross(&self.direction) == self.moment
    }

    /// True when the two lines meet (possibly at infinity).
    pub fn meets(&self, o: &PluckerLine) -> bool {
        (self.direction.dot(&o.moment) + o.direction.dot(&self.moment)).is_zero()
    }

    /// Image under `x -> A x + t`.
    pub fn transform(&self, a: &Mat3, t: &Vec3) -> PluckerLine {
        let p = point_on_line(self).expect("canonical lines are valid");
        let q = &a.mul_vec(&p) + t;
        line_from_point_dir(&q, &a.mul_vec(&self.direction)).expect("invertible map")
    }
}

impl fmt::Display for PluckerLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<_> = self.moment.0.iter().chain(self.direction.0.iter()).map(to_short_string).collect();
        write!(f, "({}, {}, {} | {}, {}, {})", s[0], s[1], s[2], s[3], s[4], s[5])
    }
}

pub fn line_from_point_dir(p: &Vec3, w: &Vec3) -> Result<PluckerLine> {
    if w.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(PluckerLine::canonical(p.cross(w), w.clone()))
}

/// The point of the line closest to the origin, `(w x m) / |w|^2`.
pub fn point_on_line(l: &PluckerLine) -> Result<Vec3> {
    if l.direction.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if !l.moment.dot(&l.direction).is_zero() {
        return Err(Error::InvalidLine);
    }
    Ok(l.direction.cross(&l.moment).scale(&(Rational::from_integer(1.into()) / l.direction.norm2())))
}

/// Row of the linear complex condition for the normal line through `P` with
/// direction `gamma`, as coefficients of `(alpha | beta)`.
pub fn complex_row(p: &Vec3, gamma: &Vec3) -> [Rational; 6] {
    let m = p.cross(gamma);
    let v = primitive_integer_vector(&[
        m.0[0].clone(),
        m.0[1].clone(),
        m.0[2].clone(),
        gamma.0[0].clone(),
        gamma.0[1].clone(),
        gamma.0[2].clone(),
    ]);
    [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), v[4].clone(), v[5].clone()]
}

/// Rows `-[w]x P = m` for every line, i.e. `P x w = m`.
fn incidence_rows(lines: &[(Vec3, Vec3)]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (m, w) in lines {
        let cx = Mat3::cross_matrix(w);
        for i in 0..3 {
            a.push(cx.0[i].iter().map(|c| -c).collect());
            b.push(m.0[i].clone());
        }
    }
    (a, b)
}

/// The unique point on all of the given lines.
pub fn common_point(lines: &[PluckerLine]) -> Result<Vec3> {
    let pairs: Vec<(Vec3, Vec3)> = lines.iter().map(|l| (l.moment.clone(), l.direction.clone())).collect();
    let (a, b) = incidence_rows(&pairs);
    if rank(&a, 3) < 3 {
        return Err(Error::NoCommonPoint);
    }
    solve(&a, &b, 3).map(|v| Vec3::from_slice(&v)).ok_or(Error::NoCommonPoint)
}

/// Where a multi-dimensional solution space of lines concurs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BundleCenter {
    Point(Vec3),
    /// All lines parallel to this direction.
    AtInfinity(Vec3),
}

/// Center of a bundle given as a basis of `(alpha | beta)` vectors: finds `c`
/// with `beta = c x alpha` for every basis vector, or a common direction.
pub fn bundle_center(basis: &[Vec<Rational>]) -> Result<BundleCenter> {
    let pairs: Vec<(Vec3, Vec3)> = basis.iter().map(|v| (Vec3::from_slice(&v[3..6]), Vec3::from_slice(&v[0..3]))).collect();
    let (a, b) = incidence_rows(&pairs);
    if rank(&a, 3) == 3 {
        if let Some(c) = solve(&a, &b, 3) {
            return Ok(BundleCenter::Point(Vec3::from_slice(&c)));
        }
    }
    let dirs: Vec<&Vec3> = pairs.iter().map(|p| &p.1).filter(|d| !d.is_zero()).collect();
    if let Some(d) = dirs.first() {
        if dirs.iter().all(|e| e.parallel(d)) {
            return Ok(BundleCenter::AtInfinity(Vec3::from_slice(&primitive_integer_vector(&d.0))));
        }
    }
    Err(Error::NoCommonPoint)
}

/// What the detection rows are sampled from.
#[derive(Clone, Copy, Debug)]
pub enum Source<'a> {
    Implicit(&'a MultiPoly),
    Parametric(&'a Parametrization),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { samples: 12, seed: 0 }
    }
}

/// Where a row came from: a point in space or a parameter pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Point(Vec3),
    Parameter(Rational, Rational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearComplexSystem {
    pub rows: Vec<[Rational; 6]>,
    pub provenance: Vec<Provenance>,
    /// Canonical nullspace basis in `(alpha | beta)` order.
    pub basis: Vec<Vec<Rational>>,
    pub d: usize,
}

const MAX_RETRIES: usize = 50;
const MAX_BATCHES: usize = 6;

/// Random rational in `[-8, 8]` with denominator at most 3.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-24..=24);
    let d: i64 = rng.gen_range(1..=3);
    Rational::new(n.into(), d.into())
}

pub fn random_point(rng: &mut ChaCha8Rng) -> Vec3 {
    Vec3::new(random_rational(rng), random_rational(rng), random_rational(rng))
}

/// Draws rows until `count` valid ones are collected.
fn draw_rows(source: &Source<'_>, jets: Option<&JetEvaluator>, rng: &mut ChaCha8Rng, count: usize, out: &mut LinearComplexSystem) -> Result<()> {
    for _ in 0..count {
        let mut ok = false;
        for _ in 0..MAX_RETRIES {
            let sample = match source {
                Source::Implicit(_) => {
                    let p = random_point(rng);
                    crate::diffgeo::gamma_from_jet(&jets.expect("implicit source").at(&p)).map(|s| (Provenance::Point(p), s))
                }
                Source::Parametric(x) => {
                    let (u, v) = (random_rational(rng), random_rational(rng));
                    mu_at(x, &u, &v).map(|s| (Provenance::Parameter(u, v), s))
                }
            };
            if let Ok((prov, s)) = sample {
                out.rows.push(complex_row(&s.point, &s.gamma));
                out.provenance.push(prov);
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::InsufficientSamples);
        }
    }
    Ok(())
}

/// Builds the detection system from random samples and solves it. A second
/// batch of rows confirms that the rank is stable; more batches are drawn
/// while it keeps growing.
pub fn assemble_and_solve(source: Source<'_>, config: &SampleConfig) -> Result<LinearComplexSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let jets = match source {
        Source::Implicit(f) => Some(JetEvaluator::new(f)),
        Source::Parametric(_) => None,
    };
    let mut sys = LinearComplexSystem { rows: Vec::new(), provenance: Vec::new(), basis: Vec::new(), d: 6 };
    draw_rows(&source, jets.as_ref(), &mut rng, config.samples, &mut sys)?;
    let as_rows = |s: &LinearComplexSystem| s.rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let mut r = rank(&as_rows(&sys), 6);
    for _ in 0..MAX_BATCHES {
        draw_rows(&source, jets.as_ref(), &mut rng, config.samples, &mut sys)?;
        let r2 = rank(&as_rows(&sys), 6);
        let stable = r2 == r;
        r = r2;
        if stable {
            break;
        }
    }
    sys.basis = nullspace(&as_rows(&sys), 6);
    sys.d = sys.basis.len();
    Ok(sys)
}

/// Lines in a solution basis that are genuine lines (nonzero direction,
/// orthogonal moment).
pub fn basis_lines(basis: &[Vec<Rational>]) -> Vec<PluckerLine> {
    basis.iter().filter_map(|v| PluckerLine::from_alpha_beta(v).ok()).collect()
}

/// Sign of the first nonzero component; used to compare rows up to scale.
pub fn leading_sign(v: &[Rational]) -> i32 {
    v.iter().find(|c| !c.is_zero()).map(|c| if c.is_positive() { 1 } else { -1 }).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse::parse_poly;
    use crate::exactmath::poly::xyz;
    use crate::exactmath::rational::{rat, ratio};
    use alloc::vec;

    #[test]
    fn construct_lines() {
        let z = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 0, 1)).unwrap();
        assert_eq!(z.moment, Vec3::zero());
        assert_eq!(z.direction, Vec3::from_i64(0, 0, 1));
        let l = line_from_point_dir(&Vec3::from_i64(1, 0, 0), &Vec3::from_i64(0, 1, 0)).unwrap();
        assert_eq!(l.moment, Vec3::from_i64(0, 0, 1));
        let w0 = 5;
        let m = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(2, 0, -w0)).unwrap();
        assert_eq!(m.direction, Vec3::from_i64(2, 0, -5));
        assert_eq!(line_from_point_dir(&Vec3::zero(), &Vec3::zero()), Err(Error::ZeroDirection));
    }

    #[test]
    fn recover_points() {
        let z = PluckerLine::new(Vec3::zero(), Vec3::from_i64(0, 0, 1)).unwrap();
        assert_eq!(point_on_line(&z).unwrap(), Vec3::zero());
        let l = PluckerLine { moment: Vec3::from_i64(0, 0, 1), direction: Vec3::from_i64(0, 1, 0) };
        assert_eq!(point_on_line(&l).unwrap(), Vec3::from_i64(1, 0, 0));
        let bad = PluckerLine { moment: Vec3::from_i64(1, 1, 1), direction: Vec3::from_i64(1, 0, 0) };
        assert_eq!(point_on_line(&bad), Err(Error::InvalidLine));
    }

    #[test]
    fn trivial_row() {
        let r = complex_row(&Vec3::from_i64(0, 0, 1), &Vec3::from_i64(0, 0, 1));
        assert_eq!(r.to_vec(), vec![rat(0), rat(0), rat(0), rat(0), rat(0), rat(1)]);
    }

    #[test]
    fn common_points() {
        let x = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(1, 0, 0)).unwrap();
        let y = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 1, 0)).unwrap();
        assert_eq!(common_point(&[x.clone(), y]).unwrap(), Vec3::zero());
        let z = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 0, 1)).unwrap();
        let other = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(2, 0, -5)).unwrap();
        assert_eq!(common_point(&[z, other]).unwrap(), Vec3::zero());
        let skew = line_from_point_dir(&Vec3::from_i64(0, 0, 1), &Vec3::from_i64(0, 1, 0)).unwrap();
        assert_eq!(common_point(&[x, skew]), Err(Error::NoCommonPoint));
    }

    #[test]
    fn translated_bundle_center() {
        let c = Vec3::new(ratio(1, 2), rat(-3), rat(2));
        let basis: Vec<Vec<Rational>> = (0..3)
            .map(|i| {
                let a = Vec3::unit(i);
                let mut v = a.to_vec();
                v.extend(c.cross(&a).to_vec());
                v
            })
            .collect();
        assert_eq!(bundle_center(&basis).unwrap(), BundleCenter::Point(c));
    }

    #[test]
    fn quartic_system_finds_the_x_axis() {
        let f = parse_poly("2*x*y^3-6*x*y^2*z+6*x*y*z^2-2*x*z^3+4*y^3*z-8*y^2*z^2+4*y*z^3-y+z-1", &xyz()).unwrap();
        let sys = assemble_and_solve(Source::Implicit(&f), &SampleConfig::default()).unwrap();
        assert_eq!(sys.d, 1);
        let axis = PluckerLine::from_alpha_beta(&sys.basis[0]).unwrap();
        assert_eq!(axis, line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(1, 0, 0)).unwrap());
    }

    #[test]
    fn ellipsoid_bundle() {
        let f = parse_poly("4*x^2+16*y^2+z^2-1", &xyz()).unwrap();
        let sys = assemble_and_solve(Source::Implicit(&f), &SampleConfig::default()).unwrap();
        assert_eq!(sys.d, 3);
        assert_eq!(bundle_center(&sys.basis).unwrap(), BundleCenter::Point(Vec3::zero()));
    }

    #[test]
    fn paraboloid_bundle_is_at_infinity() {
        let f = parse_poly("z-x^2-2*y^2", &xyz()).unwrap();
        let sys = assemble_and_solve(Source::Implicit(&f), &SampleConfig::default()).unwrap();
        assert_eq!(sys.d, 3);
        assert_eq!(bundle_center(&sys.basis).unwrap(), BundleCenter::AtInfinity(Vec3::from_i64(0, 0, 1)));
    }
}
