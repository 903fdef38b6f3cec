//! Plane sections and the curve families they belong to.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::linalg::{nullspace, solve};
use crate::exactmath::poly::vars;
use crate::exactmath::rational::{parse_rational, primitive_integer_vector, rat};
use crate::exactmath::{MultiPoly, Rational, Vec3};
use crate::generators::common_binary_roots;

/// The plane `normal . x = offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Plane {
    pub normal: Vec3,
    pub offset: Rational,
}

impl Plane {
    pub fn new(normal: Vec3, offset: Rational) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Plane { normal, offset })
    }

    /// The plane `a x + b y + c z + d = 0`.
    pub fn from_coefficients(c: &[Rational; 4]) -> Result<Self> {
        Plane::new(Vec3::new(c[0].clone(), c[1].clone(), c[2].clone()), -&c[3])
    }

    /// Parses `"a,b,c,d"` for `a x + b y + c z + d = 0`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<Rational> = text
            .split(',')
            .map(|p| parse_rational(p).ok_or_else(|| Error::NonRationalCoefficient(String::from(p.trim()))))
            .collect::<Result<_>>()?;
        if parts.len() != 4 {
            return Err(Error::Syntax(alloc::format!("expected four plane coefficients, got {}", parts.len())));
        }
        Plane::from_coefficients(&[parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone()])
    }

    pub fn coefficients(&self) -> [Rational; 4] {
        [self.normal.0[0].clone(), self.normal.0[1].clone(), self.normal.0[2].clone(), -&self.offset]
    }

    /// Origin and two orthogonal spanning vectors of the plane.
    pub fn frame(&self) -> (Vec3, Vec3, Vec3) {
        let n = &self.normal;
        let origin = n.scale(&(&self.offset / n.norm2()));
        let i = (0..3).min_by_key(|&i| n.0[i].abs()).expect("three components");
        let a = n.cross(&Vec3::unit(i));
        let a = Vec3::from_slice(&primitive_integer_vector(&a.0));
        let b = Vec3::from_slice(&primitive_integer_vector(&n.cross(&a).0));
        (origin, a, b)
    }

    pub fn point(&self, s: &Rational, t: &Rational) -> Vec3 {
        let (o, a, b) = self.frame();
        &(&o + &a.scale(s)) + &b.scale(t)
    }
}

/// Exact type of a degree-two section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicKind {
    Circle,
    Ellipse,
    RectangularHyperbola,
    Hyperbola,
    Parabola,
    Degenerate,
}

impl ConicKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConicKind::Circle => "circle",
            ConicKind::Ellipse => "ellipse",
            ConicKind::RectangularHyperbola => "rectangular hyperbola",
            ConicKind::Hyperbola => "hyperbola",
            ConicKind::Parabola => "parabola",
            ConicKind::Degenerate => "degenerate conic",
        }
    }
}

/// Family of curves the whole section belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionFamily {
    ConcentricCircles { center: Vec3 },
    /// Rectangular hyperbolas sharing center and asymptotes.
    RectangularHyperbolas { center: Vec3 },
    /// Parabolas sharing one axis line with this direction.
    Parabolas { axis_direction: Vec3 },
    Unrecognized,
}

impl SectionFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SectionFamily::ConcentricCircles { .. } => "concentric circles",
            SectionFamily::RectangularHyperbolas { .. } => "rectangular hyperbolas with the same center and asymptotes",
            SectionFamily::Parabolas { .. } => "parabolas with the same axis",
            SectionFamily::Unrecognized => "not a recognized conic product",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionReport {
    pub plane: Plane,
    /// The section in plane coordinates `(s, t)`, see [`Plane::frame`].
    pub polynomial: MultiPoly,
    pub degree: u32,
    pub conic: Option<ConicKind>,
    /// Center of a central conic, in space.
    pub conic_center: Option<Vec3>,
    pub family: SectionFamily,
}

/// Exact section of the implicit surface `f = 0` by `plane`.
pub fn section_of_implicit(f: &MultiPoly, plane: &Plane) -> Result<SectionReport> {
    let (o, a, b) = plane.frame();
    let st = vars(&["s", "t"]);
    let s = MultiPoly::var(0, st.clone());
    let t = MultiPoly::var(1, st.clone());
    let subs: Vec<MultiPoly> = (0..3)
        .map(|i| &(&MultiPoly::constant(o.0[i].clone(), st.clone()) + &s.scale(&a.0[i])) + &t.scale(&b.0[i]))
        .collect();
    let poly = f.compose(&subs);
    if poly.is_zero() {
        return Err(Error::PlaneContainsSurface);
    }
    let poly = poly.primitive();
    let degree = poly.degree().unwrap_or(0);
    let gram = [a.norm2(), b.norm2()];
    let to_space = |c: &[Rational]| &(&o + &a.scale(&c[0])) + &b.scale(&c[1]);
    let (conic, conic_center) = if degree == 2 {
        let (k, c) = classify_conic(&poly, &gram);
        (Some(k), c.map(|c| to_space(&c)))
    } else {
        (None, None)
    };
    let family = if degree >= 2 { family_of(&poly, &gram, &a, &b, &to_space) } else { SectionFamily::Unrecognized };
    Ok(SectionReport { plane: plane.clone(), polynomial: poly, degree, conic, conic_center, family })
}

fn classify_conic(p: &MultiPoly, g: &[Rational; 2]) -> (ConicKind, Option<Vec<Rational>>) {
    let half = rat(1) / rat(2);
    let a11 = p.coeff(&[2, 0]);
    let a22 = p.coeff(&[0, 2]);
    let a12 = p.coeff(&[1, 1]) * &half;
    let b1 = p.coeff(&[1, 0]) * &half;
    let b2 = p.coeff(&[0, 1]) * &half;
    let c = p.coeff(&[0, 0]);
    let det2 = &a11 * &a22 - &a12 * &a12;
    let det3 = &a11 * (&a22 * &c - &b2 * &b2) - &a12 * (&a12 * &c - &b2 * &b1) + &b1 * (&a12 * &b2 - &a22 * &b1);
    if det3.is_zero() {
        return (ConicKind::Degenerate, None);
    }
    if det2.is_zero() {
        return (ConicKind::Parabola, None);
    }
    let center = solve(&[vec![a11.clone(), a12.clone()], vec![a12.clone(), a22.clone()]], &[-&b1, -&b2], 2);
    let kind = if a12.is_zero() && &a11 * &g[1] == &a22 * &g[0] {
        ConicKind::Circle
    } else if (&a11 / &g[0] + &a22 / &g[1]).is_zero() {
        ConicKind::RectangularHyperbola
    } else if det2.is_positive() {
        ConicKind::Ellipse
    } else {
        ConicKind::Hyperbola
    };
    (kind, center)
}

/// Affine vector fields `K (s, t) + k` tangent to every level of `p`, as
/// vectors `(K11, K12, K21, K22, k1, k2)`.
fn planar_symmetries(p: &MultiPoly) -> Vec<Vec<Rational>> {
    let st = p.vars().clone();
    let s = MultiPoly::var(0, st.clone());
    let t = MultiPoly::var(1, st);
    let (ps, pt) = (p.derivative(0), p.derivative(1));
    let polys = [&ps * &s, &ps * &t, &pt * &s, &pt * &t, ps.clone(), pt.clone()];
    let mut mons: Vec<Vec<u32>> = Vec::new();
    for q in &polys {
        for (m, _) in q.terms() {
            if !mons.contains(&m.0) {
                mons.push(m.0.clone());
            }
        }
    }
    let rows: Vec<Vec<Rational>> = mons.iter().map(|m| polys.iter().map(|q| q.coeff(m)).collect()).collect();
    nullspace(&rows, 6)
}

/// Elements of the span of `basis` satisfying the linear conditions `cond`.
fn restrict(basis: &[Vec<Rational>], cond: impl Fn(&[Rational]) -> Vec<Rational>) -> Vec<Vec<Rational>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Rational>> = basis.iter().map(|v| cond(v)).collect();
    let rows: Vec<Vec<Rational>> = (0..cols[0].len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    nullspace(&rows, basis.len())
        .iter()
        .map(|lam| (0..6).map(|k| lam.iter().zip(basis).map(|(l, v)| l * &v[k]).sum()).collect())
        .collect()
}

fn k_is_zero(v: &[Rational]) -> bool {
    v[..4].iter().all(Zero::is_zero)
}

fn fixed_point(v: &[Rational]) -> Option<Vec<Rational>> {
    solve(&[vec![v[0].clone(), v[1].clone()], vec![v[2].clone(), v[3].clone()]], &[-&v[4], -&v[5]], 2)
}

fn family_of(p: &MultiPoly, g: &[Rational; 2], a: &Vec3, b: &Vec3, to_space: &dyn Fn(&[Rational]) -> Vec3) -> SectionFamily {
    let sym = planar_symmetries(p);
    let skew = restrict(&sym, |v| vec![&g[0] * &v[0], &g[1] * &v[3], &g[0] * &v[1] + &g[1] * &v[2]]);
    if let Some(v) = skew.iter().find(|v| !k_is_zero(v)) {
        if let Some(c) = fixed_point(v) {
            return SectionFamily::ConcentricCircles { center: to_space(&c) };
        }
    }
    let selfadj = restrict(&sym, |v| vec![&g[0] * &v[1] - &g[1] * &v[2], &v[0] + &v[3]]);
    if let Some(v) = selfadj.iter().find(|v| !k_is_zero(v)) {
        if let Some(c) = fixed_point(v) {
            return SectionFamily::RectangularHyperbolas { center: to_space(&c) };
        }
    }
    let traceless = restrict(&sym, |v| vec![&v[0] + &v[3]]);
    let mut cands: Vec<Vec<Rational>> = traceless.clone();
    if traceless.len() == 2 {
        let ab = vars(&["a", "b"]);
        let x = MultiPoly::var(0, ab.clone());
        let y = MultiPoly::var(1, ab);
        let entry = |k: usize| &x.scale(&traceless[0][k]) + &y.scale(&traceless[1][k]);
        let det = &(&entry(0) * &entry(3)) - &(&entry(1) * &entry(2));
        if let Some(roots) = common_binary_roots(&[det]) {
            for (r0, r1) in roots {
                cands.push((0..6).map(|k| &r0 * &traceless[0][k] + &r1 * &traceless[1][k]).collect());
            }
        }
    }
    for v in &cands {
        let det = &v[0] * &v[3] - &v[1] * &v[2];
        if k_is_zero(v) || !det.is_zero() {
            continue;
        }
        // k outside the range of the nilpotent K, whose range is its kernel.
        let col = if v[0].is_zero() && v[2].is_zero() { [v[1].clone(), v[3].clone()] } else { [v[0].clone(), v[2].clone()] };
        if (&col[0] * &v[5] - &col[1] * &v[4]).is_zero() {
            continue;
        }
        let dir = &a.scale(&col[0]) + &b.scale(&col[1]);
        return SectionFamily::Parabolas { axis_direction: Vec3::from_slice(&primitive_integer_vector(&dir.0)) };
    }
    SectionFamily::Unrecognized
}
