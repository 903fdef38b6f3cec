//! Structure of parabolic affine rotation surfaces about the z-axis, whose
//! equations are polynomials in `P = y^2 - 2xz` and `x`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::algebraic::AlgebraicScalar;
use crate::exactmath::eigen::eig3;
use crate::exactmath::linalg::{AffineMap, Mat3, Vec3};
use crate::exactmath::poly::{vars, xyz, MultiPoly};
use crate::exactmath::rational::{primitive_integer_vector, rat, Rational};
use crate::exactmath::unipoly::UniPoly;
use crate::generators::{common_binary_roots, AffineGenerator, GeneratorClass};
use crate::plucker::{line_from_point_dir, point_on_line, PluckerLine};

/// `y^2 - 2xz`.
pub fn cone_form() -> MultiPoly {
    let v = xyz();
    let x = MultiPoly::var(0, v.clone());
    let y = MultiPoly::var(1, v.clone());
    let z = MultiPoly::var(2, v);
    &(&y * &y) - &(&x * &z).scale(&rat(2))
}

/// Writes `f(x, y, z)` as `G(p, x)` with `p = y^2 - 2xz`. `G` uses the
/// variables `(p, x)`.
pub fn in_cone_coordinates(f: &MultiPoly) -> Option<MultiPoly> {
    let v = vars(&["p", "x"]);
    let mut g = MultiPoly::zero(v.clone());
    // On y = 0, p = -2xz, so x^i z^k comes from p^k x^(i-k).
    for (m, c) in f.terms() {
        if m.0[1] != 0 {
            continue;
        }
        let (i, k) = (m.0[0], m.0[2]);
        if i < k {
            return None;
        }
        let s = rat(-2).pow(k as i32);
        g = &g + &MultiPoly::monomial(vec![k, i - k], c / &s, v.clone());
    }
    let back = g.compose(&[cone_form(), MultiPoly::var(0, xyz())]);
    (back == *f).then_some(g)
}

/// One factor of the polynomial whose roots are the `w` values.
#[derive(Clone, Debug, PartialEq)]
pub enum WFactor {
    /// A real root, rational or a real quadratic irrational.
    Real(AlgebraicScalar),
    /// Quadratic with complex-conjugate roots.
    ComplexPair(UniPoly),
    /// Square-free factor of degree at least 3 with no rational roots, left
    /// unsplit.
    Unsplit(UniPoly),
}

impl WFactor {
    pub fn degree(&self) -> usize {
        match self {
            WFactor::Real(_) => 1,
            WFactor::ComplexPair(q) | WFactor::Unsplit(q) => q.degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WRoot {
    pub factor: WFactor,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HighestFormStructure {
    pub degree: u32,
    /// Power of `x`.
    pub plane_multiplicity: u32,
    /// Power of `y^2 - 2xz`.
    pub cone_multiplicity: u32,
    pub w_roots: Vec<WRoot>,
    /// `sum a_k w^k` whose roots give the factors `y^2 - 2xz - w x^2`.
    pub w_poly: UniPoly,
}

impl HighestFormStructure {
    /// `x^q (y^2-2xz)^m * prod (y^2 - 2xz - w x^2)`, scaled by the leading
    /// coefficient of `w_poly`; equals the analysed form exactly.
    pub fn reconstruct(&self) -> MultiPoly {
        let v = xyz();
        let x = MultiPoly::var(0, v.clone());
        let p = cone_form();
        let j = self.w_poly.degree() as u32;
        let mut inner = MultiPoly::zero(v);
        for (k, c) in self.w_poly.coeffs().iter().enumerate() {
            let k = k as u32;
            inner = &inner + &(&p.pow(k) * &x.pow(2 * (j - k))).scale(c);
        }
        &(&x.pow(self.plane_multiplicity) * &p.pow(self.cone_multiplicity)) * &inner
    }
}

fn quadratic_roots(q: &UniPoly) -> Vec<WFactor> {
    let (c0, c1, c2) = (q.coeff(0), q.coeff(1), q.coeff(2));
    let disc = &c1 * &c1 - rat(4) * &c2 * &c0;
    if disc.is_negative() {
        return vec![WFactor::ComplexPair(q.monic())];
    }
    let den = Rational::one() / (rat(2) * &c2);
    let a = -&c1 * &den;
    vec![WFactor::Real(AlgebraicScalar::new(a.clone(), den.clone(), &disc)), WFactor::Real(AlgebraicScalar::new(a, -den, &disc))]
}

fn factor_w_poly(g: &UniPoly) -> Vec<WRoot> {
    let mut out = Vec::new();
    let mut rest = g.clone();
    for (r, m) in g.rational_roots() {
        for _ in 0..m {
            rest = rest.divrem(&UniPoly::linear_root(&r)).0;
        }
        out.push(WRoot { factor: WFactor::Real(AlgebraicScalar::rational(r)), multiplicity: m });
    }
    if rest.degree() == 0 {
        return out;
    }
    for (f, m) in rest.square_free() {
        match f.degree() {
            0 => {}
            2 => out.extend(quadratic_roots(&f).into_iter().map(|factor| WRoot { factor, multiplicity: m })),
            _ => out.push(WRoot { factor: WFactor::Unsplit(f.monic()), multiplicity: m }),
        }
    }
    out
}

/// Factor data of a homogeneous form that is a polynomial in `y^2 - 2xz`
/// and `x`.
pub fn highest_form_structure(f_n: &MultiPoly) -> Result<HighestFormStructure> {
    if f_n.is_zero() || !f_n.is_homogeneous() {
        return Err(Error::NotParabolicForm);
    }
    let n = f_n.degree().unwrap_or(0);
    let g = in_cone_coordinates(f_n).ok_or(Error::NotParabolicForm)?;
    // c[k] is the coefficient of p^k x^(n-2k).
    let c: Vec<Rational> = (0..=n / 2).map(|k| g.coeff(&[k, n - 2 * k])).collect();
    let lo = c.iter().position(|a| !a.is_zero()).expect("nonzero form") as u32;
    let hi = c.iter().rposition(|a| !a.is_zero()).expect("nonzero form") as u32;
    let w_poly = UniPoly::new(c[lo as usize..=hi as usize].to_vec());
    Ok(HighestFormStructure {
        degree: n,
        plane_multiplicity: n - 2 * hi,
        cone_multiplicity: lo,
        w_roots: factor_w_poly(&w_poly),
        w_poly,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeCase {
    EllipticCone,
    RevolutionCone,
    NonDiagonalizable,
    Imaginary,
}

impl ConeCase {
    pub fn name(&self) -> &'static str {
        match self {
            ConeCase::EllipticCone => "elliptic-cone",
            ConeCase::RevolutionCone => "revolution-cone",
            ConeCase::NonDiagonalizable => "non-diagonalizable",
            ConeCase::Imaginary => "imaginary",
        }
    }
}

/// The quadric cone `y^2 - 2xz - w x^2 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeClassification {
    pub w: AlgebraicScalar,
    /// `[1, l2, l3]`; `None` when `l2, l3` need a nested radical.
    pub eigenvalues: Option<[AlgebraicScalar; 3]>,
    pub case: ConeCase,
    /// Eigenvector of the simple eigenvalue 1, absent when 1 is double.
    pub unit_eigenvector: Option<Vec3>,
    pub revolution_axis: Option<Vec3>,
}

/// Symmetric matrix of `y^2 - 2xz - w x^2` for rational `w`.
pub fn cone_matrix(w: &Rational) -> Mat3 {
    let mut a = Mat3::from_i64([[0, 0, -1], [0, 1, 0], [-1, 0, 0]]);
    a.0[0][0] = -w;
    a
}

pub fn classify_cone(w: &AlgebraicScalar) -> ConeClassification {
    let one = AlgebraicScalar::rational(rat(1));
    if w.is_zero() {
        return ConeClassification {
            w: w.clone(),
            eigenvalues: Some([one.clone(), one, AlgebraicScalar::rational(rat(-1))]),
            case: ConeCase::RevolutionCone,
            unit_eigenvector: None,
            revolution_axis: Some(Vec3::from_i64(1, 0, 1)),
        };
    }
    let e2 = Vec3::from_i64(0, 1, 0);
    if w.is_rational() {
        // l^2 + w l - 1 = 0
        let disc = &w.a * &w.a + rat(4);
        let half = rat(1) / rat(2);
        let a = -&w.a * &half;
        let l2 = AlgebraicScalar::new(a.clone(), half.clone(), &disc);
        let l3 = AlgebraicScalar::new(a, -half, &disc);
        let one = AlgebraicScalar { a: rat(1), b: Rational::zero(), s: l2.s.clone() };
        return ConeClassification {
            w: w.clone(),
            eigenvalues: Some([one, l2, l3]),
            case: ConeCase::EllipticCone,
            unit_eigenvector: Some(e2),
            revolution_axis: None,
        };
    }
    // w = +-2i makes the discriminant w^2 + 4 vanish.
    let w2 = w.mul(w);
    if w2.is_rational() && w2.a == rat(-4) {
        let l = w.scale(&(rat(-1) / rat(2)));
        let one = AlgebraicScalar { a: rat(1), b: Rational::zero(), s: l.s.clone() };
        return ConeClassification {
            w: w.clone(),
            eigenvalues: Some([one, l.clone(), l]),
            case: ConeCase::NonDiagonalizable,
            unit_eigenvector: Some(e2),
            revolution_axis: None,
        };
    }
    let case = if w.is_real() { ConeCase::EllipticCone } else { ConeCase::Imaginary };
    ConeClassification { w: w.clone(), eigenvalues: None, case, unit_eigenvector: Some(e2), revolution_axis: None }
}

/// What the highest form says about the normal direction of a parabolic axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalCandidate {
    /// The normal direction itself.
    Direction(Vec3),
    /// The normal direction lies in the plane with this normal vector.
    Plane(Vec3),
}

fn drop_first_var(p: &MultiPoly) -> MultiPoly {
    let v = vars(&["s", "t"]);
    MultiPoly::from_terms(v, p.terms().map(|(m, c)| (m.0[1..].to_vec(), c.clone())))
}

fn complete_basis(d: &Vec3) -> (Vec3, Vec3) {
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (a, b) = (Vec3::unit(i), Vec3::unit(j));
        if !Mat3::from_columns(d, &a, &b).det().is_zero() {
            return (a, b);
        }
    }
    unreachable!("nonzero direction")
}

fn linear_poly(l: &Vec3) -> MultiPoly {
    let v = xyz();
    let mut p = MultiPoly::zero(v.clone());
    for i in 0..3 {
        p = &p + &MultiPoly::var(i, v.clone()).scale(&l.0[i]);
    }
    p
}

/// Rational linear factors of a homogeneous form whose planes contain the
/// direction `d`, as primitive normal vectors with multiplicity.
pub fn linear_factors_through(f_n: &MultiPoly, d: &Vec3) -> Vec<(Vec3, u32)> {
    let (a, b) = complete_basis(d);
    let t = Mat3::from_columns(d, &a, &b);
    let tinv = t.inverse().expect("basis");
    let rst = vars(&["r", "s", "t"]);
    let subs: Vec<MultiPoly> = (0..3)
        .map(|i| {
            let mut p = MultiPoly::zero(rst.clone());
            for j in 0..3 {
                p = &p + &MultiPoly::var(j, rst.clone()).scale(&t.0[i][j]);
            }
            p
        })
        .collect();
    let g = f_n.compose(&subs);
    let forms: Vec<MultiPoly> = g.coefficients_in(0).iter().map(drop_first_var).collect();
    let Some(roots) = common_binary_roots(&forms) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (sa, sb) in roots {
        // s:t = sa:sb, so the factor is sb*s - sa*t in the (r,s,t) frame.
        let row = |k: usize| Vec3::new(tinv.0[k][0].clone(), tinv.0[k][1].clone(), tinv.0[k][2].clone());
        let l = &row(1).scale(&sb) - &row(2).scale(&sa);
        let l = Vec3::from_slice(&primitive_integer_vector(&l.0));
        let lp = linear_poly(&l);
        let mut rest = f_n.clone();
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&lp) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((l, mult));
        }
    }
    out
}

fn quadratic_matrix(q: &MultiPoly) -> Mat3 {
    let mut a = Mat3::zero();
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(&e);
            a.0[i][j] = if i == j { c } else { c / rat(2) };
        }
    }
    a
}

fn rational_eigenvector(v: &[AlgebraicScalar; 3]) -> Option<Vec3> {
    if v.iter().any(|c| !c.is_rational()) {
        return None;
    }
    Some(Vec3::from_slice(&primitive_integer_vector(&[v[0].a.clone(), v[1].a.clone(), v[2].a.clone()])))
}

/// Constraint from a quadratic factor `Q`, read in a frame where `Q` is a
/// multiple of `y^2 - 2xz - w x^2`: the eigenvalue playing the role of 1 is
/// the rational `mu` with `mu^3 = -det A`.
fn quadratic_candidate(q: &MultiPoly) -> Option<NormalCandidate> {
    let a = quadratic_matrix(q);
    let target = -a.det();
    if target.is_zero() {
        return None;
    }
    let eig = eig3(&a).ok()?;
    let pair = eig.pairs.iter().find(|p| p.value.is_rational() && &(&p.value.a * &p.value.a) * &p.value.a == target)?;
    if pair.multiplicity == 1 {
        return rational_eigenvector(&pair.vectors[0]).map(NormalCandidate::Plane);
    }
    if eig.diagonalizable {
        let other = eig.pairs.iter().find(|p| p.multiplicity == 1 && p.value.is_rational())?;
        return rational_eigenvector(&other.vectors[0]).map(NormalCandidate::Plane);
    }
    None
}

/// Where the normal direction `L_A` of a parabolic axis with direction
/// `axis_direction` can lie, read off the highest form of `f`. Exact
/// directions come from linear factors; otherwise a quadratic factor left
/// after removing them constrains `L_A` to a plane.
pub fn normal_direction_candidates(f: &MultiPoly, axis_direction: &Vec3) -> Result<Vec<NormalCandidate>> {
    let (_, f_n) = f.homogeneous_parts().into_iter().next().ok_or(Error::ZeroPolynomial)?;
    let linear = linear_factors_through(&f_n, axis_direction);
    if !linear.is_empty() {
        return Ok(linear.into_iter().map(|(l, _)| NormalCandidate::Direction(l)).collect());
    }
    if f_n.degree() == Some(2) {
        if let Some(c) = quadratic_candidate(&f_n) {
            return Ok(vec![c]);
        }
    }
    Err(Error::NoCandidates)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisCount {
    One,
    Two,
    Infinite,
}

impl AxisCount {
    pub fn name(&self) -> &'static str {
        match self {
            AxisCount::One => "one",
            AxisCount::Two => "two",
            AxisCount::Infinite => "infinite",
        }
    }
}

/// Parabolic axes of a surface that is parabolic about the z-axis.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisBundle {
    pub count: AxisCount,
    /// Explicit axes; for the infinite case only the z-axis is listed.
    pub axes: Vec<PluckerLine>,
    /// Normal direction of each listed axis.
    pub normal_directions: Vec<Vec3>,
    /// For the infinite case, the cone whose rulings are the axes.
    pub ruling_cone: Option<MultiPoly>,
    /// `w` with `f` a polynomial in `y^2 - 2xz - w x^2` alone.
    pub w: Option<Rational>,
}

fn depends_only_on_shifted_cone(g: &MultiPoly, w: &Rational) -> bool {
    let v = vars(&["q", "x"]);
    let q = MultiPoly::var(0, v.clone());
    let x = MultiPoly::var(1, v);
    let h = g.compose(&[&q + &(&x * &x).scale(w), x]);
    h.degree_in(1) == 0
}

/// Enumerates the parabolic axes of `f`, assumed parabolic about the z-axis
/// in canonical position.
pub fn parabolic_axes(f: &MultiPoly) -> Result<AxisBundle> {
    let g = in_cone_coordinates(f).ok_or(Error::NotParabolic)?;
    if g.degree_in(0) == 0 {
        return Err(Error::NotParabolic);
    }
    let z_axis = line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 0, 1))?;
    let e1 = Vec3::from_i64(1, 0, 0);
    let (_, f_n) = f.homogeneous_parts().into_iter().next().ok_or(Error::ZeroPolynomial)?;
    let s = highest_form_structure(&f_n)?;
    let w = if s.plane_multiplicity != 0 {
        None
    } else if s.w_roots.is_empty() {
        Some(Rational::zero())
    } else if s.cone_multiplicity == 0 && s.w_roots.len() == 1 {
        match &s.w_roots[0].factor {
            WFactor::Real(r) if r.is_rational() => Some(r.a.clone()),
            _ => None,
        }
    } else {
        None
    };
    let w = w.filter(|w| depends_only_on_shifted_cone(&g, w));
    let one = AxisBundle { count: AxisCount::One, axes: vec![z_axis.clone()], normal_directions: vec![e1.clone()], ruling_cone: None, w: None };
    let Some(w) = w else {
        return Ok(one);
    };
    if w.is_zero() {
        return Ok(AxisBundle {
            count: AxisCount::Infinite,
            axes: vec![z_axis],
            normal_directions: vec![e1],
            ruling_cone: Some(cone_form()),
            w: Some(w),
        });
    }
    // {y = 0, 2z + w x = 0}; the half-turn about the bisector carries e1 to
    // the in-plane perpendicular.
    let second = line_from_point_dir(&Vec3::zero(), &Vec3::new(rat(2), rat(0), -&w))?;
    let n2 = Vec3::from_slice(&primitive_integer_vector(&[w.clone(), rat(0), rat(2)]));
    Ok(AxisBundle { count: AxisCount::Two, axes: vec![z_axis, second], normal_directions: vec![e1, n2], ruling_cone: None, w: Some(w) })
}

/// The `w` for which the plane `alpha x + y + beta z + c = 0` cuts
/// `y^2 - 2xz - w x^2 = 0` in a parabola.
pub fn parabola_plane_condition(alpha: &Rational, beta: &Rational) -> Result<Rational> {
    if beta.is_zero() {
        return Err(Error::BetaZero);
    }
    Ok((rat(2) * alpha * beta - rat(1)) / (beta * beta))
}

/// Normal direction `L_A` of a parabolic generator: the kernel of `M^T`.
pub fn generator_normal_direction(g: &AffineGenerator) -> Option<Vec3> {
    if g.class != GeneratorClass::Parabolic {
        return None;
    }
    let k = crate::exactmath::linalg::nullspace(&g.m.transpose().rows(), 3);
    (k.len() == 1).then(|| Vec3::from_slice(&primitive_integer_vector(&k[0])))
}

/// Affine map `x -> p + T x` taking canonical coordinates (axis = z-axis,
/// generator = the standard nilpotent block) to the generator's frame. `T`
/// is the Jordan chain `(t, M t, M^2 t)`.
pub fn canonical_frame(g: &AffineGenerator) -> Option<AffineMap> {
    if g.class != GeneratorClass::Parabolic {
        return None;
    }
    let p = point_on_line(g.axis.as_ref()?).ok()?;
    let m2 = g.m.mul(&g.m);
    let t1 = (0..3).map(Vec3::unit).find(|e| !m2.mul_vec(e).is_zero())?;
    let t2 = g.m.mul_vec(&t1);
    let t3 = g.m.mul_vec(&t2);
    Some(AffineMap::new(Mat3::from_columns(&t1, &t2, &t3), p))
}
