//! Affine co-normal and affine normal directions at rational points.
//!
//! Everything is evaluated on a Monge patch `w = h(u, v)` of the level surface
//! (or the parametrized surface) through the point. With `m = (-h_u, -h_v, 1)`
//! and `H = h_uu h_vv - h_uv^2`, the co-normal is `|H|^(-1/4) m`, and
//! `nu_u x nu_v` is a positive multiple of
//! `4H (m_u x m_v) - H_u (m x m_v) - H_v (m_u x m)`, which is rational.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::linalg::{AffineMap, Vec3};
use crate::exactmath::parse::parse_rational_function;
use crate::exactmath::poly::{uv, vars, MultiPoly, Vars};
use crate::exactmath::ratfunc::RationalFunction;
use crate::exactmath::rational::{primitive_integer_vector, rat, Rational};

/// Value and partial derivatives up to order three at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct JetData {
    pub point: Vec3,
    pub value: Rational,
    pub gradient: Vec3,
    pub hessian: [[Rational; 3]; 3],
    pub third: [[[Rational; 3]; 3]; 3],
}

/// Caches the symbolic partials of `F` so that many points can be evaluated.
#[derive(Clone, Debug)]
pub struct JetEvaluator {
    f: MultiPoly,
    d1: Vec<MultiPoly>,
    d2: Vec<Vec<MultiPoly>>,
    d3: Vec<Vec<Vec<MultiPoly>>>,
}

impl JetEvaluator {
    pub fn new(f: &MultiPoly) -> Self {
        let d1: Vec<MultiPoly> = (0..3).map(|i| f.derivative(i)).collect();
        let d2: Vec<Vec<MultiPoly>> = (0..3).map(|i| (0..3).map(|j| d1[i].derivative(j)).collect()).collect();
        let d3 = (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| d2[i][j].derivative(k)).collect()).collect()).collect();
        JetEvaluator { f: f.clone(), d1, d2, d3 }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.f
    }

    pub fn gradient(&self, p: &Vec3) -> Vec3 {
        Vec3::new(self.d1[0].eval(&p.0), self.d1[1].eval(&p.0), self.d1[2].eval(&p.0))
    }

    pub fn at(&self, p: &Vec3) -> JetData {
        let zero = Rational::zero;
        let mut hessian: [[Rational; 3]; 3] = Default::default();
        let mut third: [[[Rational; 3]; 3]; 3] = Default::default();
        for i in 0..3 {
            for j in i..3 {
                let v = self.d2[i][j].eval(&p.0);
                hessian[i][j] = v.clone();
                hessian[j][i] = v;
                for k in j..3 {
                    let v = if self.d3[i][j][k].is_zero() { zero() } else { self.d3[i][j][k].eval(&p.0) };
                    for (a, b, c) in [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)] {
                        third[a][b][c] = v.clone();
                    }
                }
            }
        }
        JetData { point: p.clone(), value: self.f.eval(&p.0), gradient: self.gradient(p), hessian, third }
    }
}

/// Exact partials of `F` at `P` up to order three.
pub fn jet_at(f: &MultiPoly, p: &Vec3) -> JetData {
    JetEvaluator::new(f).at(p)
}

/// Affine normal data at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineFrameSample {
    pub point: Vec3,
    /// Proportional to the Euclidean normal.
    pub gradient: Vec3,
    /// The co-normal up to the positive factor `|H|^(-1/4)`.
    pub conormal: Vec3,
    /// Same sign as the Gaussian curvature, zero exactly when it vanishes.
    pub curvature: Rational,
    /// Primitive integer vector along the affine normal.
    pub gamma: Vec3,
}

/// Third-order Taylor data of a Monge graph `w = h(u, v)` at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct MongeJet {
    /// Original coordinate indices playing the roles of `u`, `v`, `w`.
    pub axes: [usize; 3],
    pub hu: Rational,
    pub hv: Rational,
    pub huu: Rational,
    pub huv: Rational,
    pub hvv: Rational,
    pub huuu: Rational,
    pub huuv: Rational,
    pub huvv: Rational,
    pub hvvv: Rational,
}

impl MongeJet {
    fn from_graph(h: &MultiPoly, axes: [usize; 3]) -> Self {
        let c = |e: [u32; 2], f: i64| h.coeff(&e) * rat(f);
        MongeJet {
            axes,
            hu: c([1, 0], 1),
            hv: c([0, 1], 1),
            huu: c([2, 0], 2),
            huv: c([1, 1], 1),
            hvv: c([0, 2], 2),
            huuu: c([3, 0], 6),
            huuv: c([2, 1], 2),
            huvv: c([1, 2], 2),
            hvvv: c([0, 3], 6),
        }
    }

    pub fn curvature(&self) -> Rational {
        &self.huu * &self.hvv - &self.huv * &self.huv
    }

    fn curvature_u(&self) -> Rational {
        &self.huuu * &self.hvv + &self.huu * &self.huvv - rat(2) * &self.huv * &self.huuv
    }

    fn curvature_v(&self) -> Rational {
        &self.huuv * &self.hvv + &self.huu * &self.hvvv - rat(2) * &self.huv * &self.huvv
    }

    fn m(&self) -> Vec3 {
        Vec3::new(-&self.hu, -&self.hv, Rational::one())
    }

    fn m_u(&self) -> Vec3 {
        Vec3::new(-&self.huu, -&self.huv, Rational::zero())
    }

    fn m_v(&self) -> Vec3 {
        Vec3::new(-&self.huv, -&self.hvv, Rational::zero())
    }

    /// `4H (m_u x m_v) - H_u (m x m_v) - H_v (m_u x m)` in local coordinates.
    fn normal_core(&self) -> Vec3 {
        let h = self.curvature();
        let (m, mu, mv) = (self.m(), self.m_u(), self.m_v());
        let a = mu.cross(&mv).scale(&(rat(4) * h));
        let b = m.cross(&mv).scale(&self.curvature_u());
        let c = mu.cross(&m).scale(&self.curvature_v());
        &(&a - &b) - &c
    }

    fn to_global(&self, local: &Vec3) -> Vec3 {
        let mut out = Vec3::zero();
        for k in 0..3 {
            out.0[self.axes[k]] = local.0[k].clone();
        }
        out
    }

    fn sample(&self, point: Vec3, gradient: Vec3) -> Result<AffineFrameSample> {
        let k = self.curvature();
        if k.is_zero() {
            return Err(Error::FlatPoint);
        }
        let gamma = Vec3::from_slice(&primitive_integer_vector(&self.to_global(&self.normal_core()).0));
        Ok(AffineFrameSample { point, gradient, conormal: self.to_global(&self.m()), curvature: k, gamma })
    }
}

/// Index of the largest absolute component (first wins on ties), followed by
/// the remaining two indices in order.
fn monge_axes(v: &Vec3) -> Option<[usize; 3]> {
    let mut best = 0;
    for i in 1..3 {
        if v.0[i].abs() > v.0[best].abs() {
            best = i;
        }
    }
    if v.0[best].is_zero() {
        return None;
    }
    let rest: Vec<usize> = (0..3).filter(|&i| i != best).collect();
    Some([rest[0], rest[1], best])
}

fn local_vars() -> Vars {
    vars(&["s", "t", "r"])
}

/// Solves the level set of the jet's cubic Taylor polynomial for the Monge
/// coordinate, to third order.
pub fn monge_from_jet(jet: &JetData) -> Result<MongeJet> {
    let axes = monge_axes(&jet.gradient).ok_or(Error::SingularPoint)?;
    let lv = local_vars();
    let gw = jet.gradient.0[axes[2]].clone();
    // A(s, t, r) = T(s, t, r) - F(P) - gw * r
    let mut a = MultiPoly::zero(lv.clone());
    for i in 0..2 {
        let mut e = vec![0; 3];
        e[i] = 1;
        a.add_term(crate::exactmath::Monomial(e), jet.gradient.0[axes[i]].clone());
    }
    let half = Rational::new(1.into(), 2.into());
    let sixth = Rational::new(1.into(), 6.into());
    for i in 0..3 {
        for j in 0..3 {
            let mut e = vec![0; 3];
            e[i] += 1;
            e[j] += 1;
            a.add_term(crate::exactmath::Monomial(e), &jet.hessian[axes[i]][axes[j]] * &half);
            for k in 0..3 {
                let mut e = vec![0; 3];
                e[i] += 1;
                e[j] += 1;
                e[k] += 1;
                a.add_term(crate::exactmath::Monomial(e), &jet.third[axes[i]][axes[j]][axes[k]] * &sixth);
            }
        }
    }
    let st = vars(&["s", "t"]);
    let s = MultiPoly::var(0, st.clone());
    let t = MultiPoly::var(1, st.clone());
    let mut r = MultiPoly::zero(st);
    let scale = -(Rational::one() / gw);
    for _ in 0..3 {
        r = a.compose_trunc(&[s.clone(), t.clone(), r], 3).scale(&scale);
    }
    Ok(MongeJet::from_graph(&r, axes))
}

/// Affine normal direction of the level surface of `F` through `P`.
pub fn gamma_at(f: &MultiPoly, p: &Vec3) -> Result<AffineFrameSample> {
    gamma_from_jet(&jet_at(f, p))
}

pub fn gamma_from_jet(jet: &JetData) -> Result<AffineFrameSample> {
    let monge = monge_from_jet(jet)?;
    monge.sample(jet.point.clone(), jet.gradient.clone())
}

/// A rational surface `(x(u,v), y(u,v), z(u,v))`.
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization {
    pub coords: [RationalFunction; 3],
}

impl Parametrization {
    pub fn new(x: RationalFunction, y: RationalFunction, z: RationalFunction) -> Self {
        Parametrization { coords: [x, y, z] }
    }

    pub fn from_polys(x: MultiPoly, y: MultiPoly, z: MultiPoly) -> Self {
        Parametrization::new(RationalFunction::from_poly(x), RationalFunction::from_poly(y), RationalFunction::from_poly(z))
    }

    /// Parses `"x(u,v); y(u,v); z(u,v)"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(';').collect();
        if parts.len() != 3 {
            return Err(Error::Syntax(alloc::format!("expected three ';'-separated coordinates, got {}", parts.len())));
        }
        let v = uv();
        Ok(Parametrization::new(
            parse_rational_function(parts[0], &v)?,
            parse_rational_function(parts[1], &v)?,
            parse_rational_function(parts[2], &v)?,
        ))
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Option<Vec3> {
        let p = [u.clone(), v.clone()];
        Some(Vec3::new(self.coords[0].eval(&p)?, self.coords[1].eval(&p)?, self.coords[2].eval(&p)?))
    }

    pub fn is_polynomial(&self) -> bool {
        self.coords.iter().all(RationalFunction::is_polynomial)
    }

    /// Third-order Taylor series of each coordinate at `(u0, v0)`, in the
    /// offsets `(a, b)`.
    pub fn series(&self, u0: &Rational, v0: &Rational, order: u32) -> Option<[MultiPoly; 3]> {
        let shift = [u0.clone(), v0.clone()];
        let mut out: Vec<MultiPoly> = Vec::with_capacity(3);
        for c in &self.coords {
            let num = c.num.shift(&shift).truncate(order);
            let den = c.den.shift(&shift).truncate(order);
            let inv = den.inverse_trunc(order)?;
            out.push(num.mul_trunc(&inv, order));
        }
        Some([out[0].clone(), out[1].clone(), out[2].clone()])
    }
}

/// Affine normal direction of a parametrized surface at `(u0, v0)`.
pub fn mu_at(x: &Parametrization, u0: &Rational, v0: &Rational) -> Result<AffineFrameSample> {
    let ser = x.series(u0, v0, 3).ok_or(Error::IrregularPoint)?;
    let point = Vec3::new(ser[0].constant_term(), ser[1].constant_term(), ser[2].constant_term());
    let xu = Vec3::new(ser[0].coeff(&[1, 0]), ser[1].coeff(&[1, 0]), ser[2].coeff(&[1, 0]));
    let xv = Vec3::new(ser[0].coeff(&[0, 1]), ser[1].coeff(&[0, 1]), ser[2].coeff(&[0, 1]));
    let normal = xu.cross(&xv);
    let axes = monge_axes(&normal).ok_or(Error::IrregularPoint)?;
    let centered: Vec<MultiPoly> = ser
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.add_term(crate::exactmath::Monomial::one(2), -p.constant_term());
            q
        })
        .collect();
    let (i, j, c) = (axes[0], axes[1], axes[2]);
    // Jacobian of (X_i, X_j) with respect to (a, b) and its inverse.
    let (j11, j12, j21, j22) = (xu.0[i].clone(), xv.0[i].clone(), xu.0[j].clone(), xv.0[j].clone());
    let det = &j11 * &j22 - &j12 * &j21;
    let (k11, k12, k21, k22) = (&j22 / &det, -&j12 / &det, -&j21 / &det, &j11 / &det);
    let lin = |p: &MultiPoly| {
        let mut q = p.clone();
        q.add_term(crate::exactmath::Monomial(vec![1, 0]), -p.coeff(&[1, 0]));
        q.add_term(crate::exactmath::Monomial(vec![0, 1]), -p.coeff(&[0, 1]));
        q
    };
    let ni = lin(&centered[i]);
    let nj = lin(&centered[j]);
    let st = vars(&["s", "t"]);
    let s = MultiPoly::var(0, st.clone());
    let t = MultiPoly::var(1, st.clone());
    let mut a = MultiPoly::zero(st.clone());
    let mut b = MultiPoly::zero(st.clone());
    for _ in 0..3 {
        let ri = &s - &ni.with_vars(uv()).compose_trunc(&[a.clone(), b.clone()], 3);
        let rj = &t - &nj.with_vars(uv()).compose_trunc(&[a.clone(), b.clone()], 3);
        let na = &ri.scale(&k11) + &rj.scale(&k12);
        let nb = &ri.scale(&k21) + &rj.scale(&k22);
        a = na;
        b = nb;
    }
    let h = centered[c].with_vars(uv()).compose_trunc(&[a, b], 3).with_vars(vars(&["s", "t"]));
    MongeJet::from_graph(&h, axes).sample(point, normal)
}

/// Checks the co-normal identity
/// `((nu_u x nu_v) . N)^2 |K| = ((N_u x N_v) . N)^2` with matching signs of
/// the unsquared sides, computed exactly from the Monge patch at `P`.
pub fn conormal_identity_check(f: &MultiPoly, p: &Vec3) -> Result<bool> {
    let monge = monge_from_jet(&jet_at(f, p))?;
    let h = monge.curvature();
    if h.is_zero() {
        return Err(Error::FlatPoint);
    }
    let m = monge.m();
    // (nu_u x nu_v) . N = |H|^(-1/2) (core . m) / (4 H W)
    let lhs = monge.normal_core().dot(&m);
    // N = m / W, so (N_u x N_v) . N = C / W^3 with q = W_u / W.
    let w2 = Rational::one() + &monge.hu * &monge.hu + &monge.hv * &monge.hv;
    let w2u = rat(2) * (&monge.hu * &monge.huu + &monge.hv * &monge.huv);
    let w2v = rat(2) * (&monge.hu * &monge.huv + &monge.hv * &monge.hvv);
    let qu = &w2u / (rat(2) * &w2);
    let qv = &w2v / (rat(2) * &w2);
    let nu = &monge.m_u() - &m.scale(&qu);
    let nv = &monge.m_v() - &m.scale(&qv);
    let c = nu.cross(&nv).dot(&m);
    // Squared: lhs^2 / (16 H^2 W^6) on the left and C^2 / W^6 on the right.
    let squares = &lhs * &lhs == rat(16) * &h * &h * &c * &c;
    let signs = (&lhs * &h).signum() == c.signum();
    Ok(squares && signs)
}

/// Line-level covariance: the affine normal of `h(S)` at `h(P)` is parallel
/// to the image of the affine normal of `S` at `P`.
pub fn covariance_check(f: &MultiPoly, h: &AffineMap, p: &Vec3) -> Result<bool> {
    let g = gamma_at(f, p)?.gamma;
    let image = h.push_forward(f);
    let g2 = gamma_at(&image, &h.apply(p))?.gamma;
    Ok(g2.parallel(&h.linear.mul_vec(&g)))
}
