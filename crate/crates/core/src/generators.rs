//! Infinitesimal affine symmetries `x' = M x + b` (trace-free `M`) of a
//! polynomial, their classification and exact invariance checks.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::linalg::{nullspace, rank, solve, AffineMap, Mat3, Vec3};
use crate::exactmath::poly::{vars, MultiPoly};
use crate::exactmath::rational::{primitive_integer_vector, rat, ratio, Rational};
use crate::exactmath::unipoly::UniPoly;
use crate::plucker::{line_from_point_dir, PluckerLine};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorClass {
    Elliptic,
    Hyperbolic,
    Parabolic,
    NonCanonical,
}

impl GeneratorClass {
    pub fn name(&self) -> &'static str {
        match self {
            GeneratorClass::Elliptic => "elliptic",
            GeneratorClass::Hyperbolic => "hyperbolic",
            GeneratorClass::Parabolic => "parabolic",
            GeneratorClass::NonCanonical => "non-canonical",
        }
    }

    pub const CANONICAL: [GeneratorClass; 3] = [GeneratorClass::Elliptic, GeneratorClass::Hyperbolic, GeneratorClass::Parabolic];
}

impl fmt::Display for GeneratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineGenerator {
    pub m: Mat3,
    pub b: Vec3,
    pub class: GeneratorClass,
    pub axis: Option<PluckerLine>,
}

impl AffineGenerator {
    /// Classifies `(M, b)` and attaches its fixed line when it has one.
    pub fn new(m: Mat3, b: Vec3) -> Result<Self> {
        let class = classify_generator(&m)?;
        let axis = fixed_line(&m, &b).ok();
        Ok(AffineGenerator { m, b, class, axis })
    }

    /// The vector field `M x + b` as three polynomials in x, y, z.
    pub fn field(&self, f: &MultiPoly) -> [MultiPoly; 3] {
        let v = f.vars().clone();
        let comp = |i: usize| {
            let mut p = MultiPoly::constant(self.b.0[i].clone(), v.clone());
            for j in 0..3 {
                p = &p + &MultiPoly::var(j, v.clone()).scale(&self.m.0[i][j]);
            }
            p
        };
        [comp(0), comp(1), comp(2)]
    }
}

/// Trace-free basis matrices: six off-diagonal units, then diag(1,-1,0) and
/// diag(0,1,-1).
pub(crate) fn basis_matrix(k: usize) -> Mat3 {
    const OFF: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
    let mut m = Mat3::zero();
    if k < 6 {
        let (i, j) = OFF[k];
        m.0[i][j] = rat(1);
    } else if k == 6 {
        m.0[0][0] = rat(1);
        m.0[1][1] = rat(-1);
    } else {
        m.0[1][1] = rat(1);
        m.0[2][2] = rat(-1);
    }
    m
}

pub(crate) const UNKNOWNS: usize = 11;

fn unpack(u: &[Rational]) -> (Mat3, Vec3) {
    let mut m = Mat3::zero();
    for (k, c) in u.iter().take(8).enumerate() {
        if !c.is_zero() {
            m = m.add(&basis_matrix(k).scale(c));
        }
    }
    (m, Vec3::from_slice(&u[8..11]))
}

/// Coefficient rows of `grad F . (M x + b) = 0` in the 11 unknowns.
fn annihilation_rows(f: &MultiPoly) -> Vec<Vec<Rational>> {
    let grad: Vec<MultiPoly> = (0..3).map(|i| f.derivative(i)).collect();
    let v = f.vars().clone();
    let mut polys = Vec::with_capacity(UNKNOWNS);
    for k in 0..UNKNOWNS {
        let mut p = MultiPoly::zero(v.clone());
        if k < 8 {
            let m = basis_matrix(k);
            for i in 0..3 {
                for j in 0..3 {
                    if !m.0[i][j].is_zero() {
                        let xj = MultiPoly::var(j, v.clone());
                        p = &p + &(&grad[i] * &xj).scale(&m.0[i][j]);
                    }
                }
            }
        } else {
            p = grad[k - 8].clone();
        }
        polys.push(p);
    }
    let monos: BTreeSet<_> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos
        .into_iter()
        .map(|m| polys.iter().map(|p| p.coeff(&m.0)).collect())
        .collect()
}

fn scaled_pair(u: &[Rational]) -> (Mat3, Vec3) {
    let (m, b) = unpack(&primitive_integer_vector(u));
    (m, b)
}

pub(crate) fn space_with(f: &MultiPoly, extra: Vec<Vec<Rational>>) -> Vec<(Mat3, Vec3)> {
    let mut rows = annihilation_rows(f);
    rows.extend(extra);
    space_from_rows(&rows)
}

/// Solutions `(M, b)` of linear conditions given as rows in the 11 unknowns
/// (eight trace-free matrix coordinates, then `b`).
pub(crate) fn space_from_rows(rows: &[Vec<Rational>]) -> Vec<(Mat3, Vec3)> {
    nullspace(rows, UNKNOWNS).iter().map(|u| scaled_pair(u)).collect()
}

/// Basis of all `(M, b)` with trace-free `M` and `grad F . (M x + b) == 0`.
/// Basis elements that are not canonical are still returned, tagged
/// non-canonical.
pub fn generator_space(f: &MultiPoly) -> Vec<AffineGenerator> {
    space_with(f, Vec::new())
        .into_iter()
        .map(|(m, b)| {
            let class = classify_generator(&m).unwrap_or(GeneratorClass::NonCanonical);
            let axis = fixed_line(&m, &b).ok();
            AffineGenerator { m, b, class, axis }
        })
        .collect()
}

/// Rows expressing `M q + b = 0` for a fixed point `q`.
pub(crate) fn fixes_point_rows(q: &Vec3) -> Vec<Vec<Rational>> {
    (0..3)
        .map(|i| {
            let mut row = vec![Rational::zero(); UNKNOWNS];
            for (k, slot) in row.iter_mut().take(8).enumerate() {
                let m = basis_matrix(k);
                *slot = (0..3).map(|j| &m.0[i][j] * &q.0[j]).sum();
            }
            row[8 + i] = rat(1);
            row
        })
        .collect()
}

/// Rows expressing `M d = 0`.
pub(crate) fn kills_direction_rows(d: &Vec3) -> Vec<Vec<Rational>> {
    (0..3)
        .map(|i| {
            let mut row = vec![Rational::zero(); UNKNOWNS];
            for (k, slot) in row.iter_mut().take(8).enumerate() {
                let m = basis_matrix(k);
                *slot = (0..3).map(|j| &m.0[i][j] * &d.0[j]).sum();
            }
            row
        })
        .collect()
}

/// Symmetries fixing every point of `axis`.
pub fn axis_space(f: &MultiPoly, axis: &PluckerLine) -> Vec<(Mat3, Vec3)> {
    let p = crate::plucker::point_on_line(axis).expect("valid line");
    let mut extra = fixes_point_rows(&p);
    extra.extend(kills_direction_rows(&axis.direction));
    space_with(f, extra)
}

/// Symmetries fixing the point `c`.
pub fn center_space(f: &MultiPoly, c: &Vec3) -> Vec<(Mat3, Vec3)> {
    space_with(f, fixes_point_rows(c))
}

/// Symmetries whose linear part kills `d` (all axes parallel to `d`).
pub fn direction_space(f: &MultiPoly, d: &Vec3) -> Vec<(Mat3, Vec3)> {
    space_with(f, kills_direction_rows(d))
}

/// Class of a trace-free matrix: skew is elliptic, singular symmetric of
/// rank 2 is hyperbolic, nilpotent of rank 2 is parabolic.
pub fn classify_generator(m: &Mat3) -> Result<GeneratorClass> {
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    if m.is_skew() {
        return Ok(GeneratorClass::Elliptic);
    }
    if m.is_symmetric() {
        if m.det().is_zero() && rank(&m.rows(), 3) == 2 {
            return Ok(GeneratorClass::Hyperbolic);
        }
        return Ok(GeneratorClass::NonCanonical);
    }
    let m2 = m.mul(m);
    if !m2.is_zero() && m2.mul(m).is_zero() {
        return Ok(GeneratorClass::Parabolic);
    }
    Ok(GeneratorClass::NonCanonical)
}

/// The line of solutions of `M x + b = 0`.
pub fn fixed_line(m: &Mat3, b: &Vec3) -> Result<PluckerLine> {
    if m.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let kernel = nullspace(&m.rows(), 3);
    if kernel.len() != 1 {
        return Err(Error::NoFixedLine);
    }
    let neg_b: Vec<Rational> = b.0.iter().map(|c| -c).collect();
    let p = solve(&m.rows(), &neg_b, 3).ok_or(Error::NoFixedLine)?;
    line_from_point_dir(&Vec3::from_slice(&p), &Vec3::from_slice(&kernel[0]))
}

/// A finite group element `x -> p + R (x - p)` generated by `(M, b)` with
/// `p` on the fixed line. `R` is `exp(M)` for nilpotent `M` and the Cayley
/// transform `(I - tM)^-1 (I + tM)` otherwise, which is `exp(sM)` for some
/// real `s` because `M` commutes with it.
pub fn group_element(g: &AffineGenerator) -> Option<AffineMap> {
    let p = crate::plucker::point_on_line(g.axis.as_ref()?).ok()?;
    let r = match g.class {
        GeneratorClass::Parabolic => {
            let m2 = g.m.mul(&g.m);
            Mat3::identity().add(&g.m).add(&m2.scale(&ratio(1, 2)))
        }
        _ => {
            let mut t = match g.class {
                GeneratorClass::Hyperbolic => ratio(1, 3),
                _ => ratio(1, 2),
            };
            loop {
                let left = Mat3::identity().sub(&g.m.scale(&t));
                if let Some(inv) = left.inverse() {
                    break inv.mul(&Mat3::identity().add(&g.m.scale(&t)));
                }
                t /= rat(2);
            }
        }
    };
    // x -> R x + (p - R p)
    let shift = &p - &r.mul_vec(&p);
    Some(AffineMap::new(r, shift))
}

/// Which invariance checks passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceEvidence {
    pub identity: bool,
    /// `None` when no finite element could be formed exactly.
    pub finite_element: Option<bool>,
}

impl InvarianceEvidence {
    pub fn passed(&self) -> bool {
        self.identity && self.finite_element != Some(false)
    }
}

/// `grad F . (M x + b) == 0` as a polynomial identity.
pub fn annihilates(f: &MultiPoly, g: &AffineGenerator) -> bool {
    let field = g.field(f);
    let mut acc = MultiPoly::zero(f.vars().clone());
    for (i, comp) in field.iter().enumerate() {
        acc = &acc + &(&f.derivative(i) * comp);
    }
    acc.is_zero()
}

pub fn invariance_evidence(f: &MultiPoly, g: &AffineGenerator) -> InvarianceEvidence {
    let identity = annihilates(f, g);
    let finite_element = if identity && g.class != GeneratorClass::NonCanonical {
        group_element(g).map(|h| h.pull_back(f) == *f)
    } else {
        None
    };
    InvarianceEvidence { identity, finite_element }
}

/// Both exact checks: the infinitesimal identity and invariance under one
/// nontrivial finite group element.
pub fn verify_invariance(f: &MultiPoly, g: &AffineGenerator) -> bool {
    let e = invariance_evidence(f, g);
    e.identity && e.finite_element == Some(true)
}

/// Canonical generators found inside a linear space of symmetries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalElements {
    pub generators: Vec<AffineGenerator>,
    /// Classes realized by infinitely many distinct axes.
    pub infinite: Vec<GeneratorClass>,
}

impl CanonicalElements {
    fn push(&mut self, g: AffineGenerator) {
        if g.axis.is_none() {
            return;
        }
        if !self.generators.iter().any(|h| h.class == g.class && h.axis == g.axis) {
            self.generators.push(g);
        }
    }

    fn mark_infinite(&mut self, c: GeneratorClass) {
        if !self.infinite.contains(&c) {
            self.infinite.push(c);
        }
    }
}

fn combine(space: &[(Mat3, Vec3)], coeffs: &[Rational]) -> (Mat3, Vec3) {
    let mut m = Mat3::zero();
    let mut b = Vec3::zero();
    for ((mi, bi), c) in space.iter().zip(coeffs) {
        m = m.add(&mi.scale(c));
        b = &b + &bi.scale(c);
    }
    let mut flat: Vec<Rational> = m.0.iter().flatten().cloned().collect();
    flat.extend(b.0.iter().cloned());
    let v = primitive_integer_vector(&flat);
    let m = Mat3::from_rows(&[v[0..3].to_vec(), v[3..6].to_vec(), v[6..9].to_vec()]);
    (m, Vec3::from_slice(&v[9..12]))
}

/// Subspace of `space` whose linear parts satisfy a linear condition given as
/// a map from a matrix to a list of scalars that must vanish.
fn linear_subspace(space: &[(Mat3, Vec3)], cond: impl Fn(&Mat3) -> Vec<Rational>) -> Vec<(Mat3, Vec3)> {
    if space.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Rational>> = space.iter().map(|(m, _)| cond(m)).collect();
    let nrows = cols[0].len();
    let rows: Vec<Vec<Rational>> = (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    nullspace(&rows, space.len()).iter().map(|c| combine(space, c)).collect()
}

fn skew_condition(m: &Mat3) -> Vec<Rational> {
    let mut v = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            v.push(&m.0[i][j] + &m.0[j][i]);
        }
    }
    v
}

fn symmetric_condition(m: &Mat3) -> Vec<Rational> {
    let mut v = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            v.push(&m.0[i][j] - &m.0[j][i]);
        }
    }
    v
}

type PolyMat = [[MultiPoly; 3]; 3];

fn pencil(m1: &Mat3, m2: &Mat3) -> PolyMat {
    let v = vars(&["a", "b"]);
    let a = MultiPoly::var(0, v.clone());
    let b = MultiPoly::var(1, v);
    core::array::from_fn(|i| core::array::from_fn(|j| &a.scale(&m1.0[i][j]) + &b.scale(&m2.0[i][j])))
}

fn pmul(x: &PolyMat, y: &PolyMat) -> PolyMat {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            let mut acc = &x[i][0] * &y[0][j];
            acc = &acc + &(&x[i][1] * &y[1][j]);
            &acc + &(&x[i][2] * &y[2][j])
        })
    })
}

fn pdet(x: &PolyMat) -> MultiPoly {
    let t0 = &x[0][0] * &(&(&x[1][1] * &x[2][2]) - &(&x[1][2] * &x[2][1]));
    let t1 = &x[0][1] * &(&(&x[1][0] * &x[2][2]) - &(&x[1][2] * &x[2][0]));
    let t2 = &x[0][2] * &(&(&x[1][0] * &x[2][1]) - &(&x[1][1] * &x[2][0]));
    &(&t0 - &t1) + &t2
}

/// Projective rational zeros `(a : b)` common to binary forms; `None` when
/// every form vanishes identically.
pub(crate) fn common_binary_roots(forms: &[MultiPoly]) -> Option<Vec<(Rational, Rational)>> {
    let nonzero: Vec<&MultiPoly> = forms.iter().filter(|f| !f.is_zero()).collect();
    let first = nonzero.first()?;
    let mut cands: Vec<(Rational, Rational)> = Vec::new();
    if first.eval(&[rat(1), rat(0)]).is_zero() {
        cands.push((rat(1), rat(0)));
    }
    let deg = first.degree_in(0) as usize;
    let uni = UniPoly::new((0..=deg).map(|k| first.coeff(&[k as u32, first.degree().unwrap() - k as u32])).collect());
    for (r, _) in uni.rational_roots() {
        cands.push((r, rat(1)));
    }
    Some(cands.into_iter().filter(|(a, b)| nonzero.iter().all(|f| f.eval(&[a.clone(), b.clone()]).is_zero())).collect())
}

const SEARCH_RANGE: i64 = 2;
const SEARCH_MAX_DIM: usize = 4;

/// Enumerates the canonical generators with a fixed line inside a linear
/// space of symmetries. Classes with infinitely many axes are flagged.
pub fn canonical_elements(space: &[(Mat3, Vec3)]) -> CanonicalElements {
    let mut out = CanonicalElements::default();
    let try_push = |out: &mut CanonicalElements, m: Mat3, b: Vec3, want: GeneratorClass| {
        if m.is_zero() {
            return;
        }
        if let Ok(g) = AffineGenerator::new(m, b) {
            if g.class == want {
                out.push(g);
            }
        }
    };

    let skew = linear_subspace(space, skew_condition);
    match skew.len() {
        0 => {}
        1 => try_push(&mut out, skew[0].0.clone(), skew[0].1.clone(), GeneratorClass::Elliptic),
        _ => {
            for (m, b) in &skew {
                try_push(&mut out, m.clone(), b.clone(), GeneratorClass::Elliptic);
            }
            out.mark_infinite(GeneratorClass::Elliptic);
        }
    }

    let sym = linear_subspace(space, symmetric_condition);
    match sym.len() {
        0 => {}
        1 => try_push(&mut out, sym[0].0.clone(), sym[0].1.clone(), GeneratorClass::Hyperbolic),
        2 => {
            let det = pdet(&pencil(&sym[0].0, &sym[1].0));
            match common_binary_roots(&[det]) {
                Some(roots) => {
                    for (a, b) in roots {
                        let (m, t) = combine(&sym, &[a, b]);
                        try_push(&mut out, m, t, GeneratorClass::Hyperbolic);
                    }
                }
                None => {
                    for (m, b) in &sym {
                        try_push(&mut out, m.clone(), b.clone(), GeneratorClass::Hyperbolic);
                    }
                    out.mark_infinite(GeneratorClass::Hyperbolic);
                }
            }
        }
        _ => {
            for (m, b) in &sym {
                try_push(&mut out, m.clone(), b.clone(), GeneratorClass::Hyperbolic);
            }
            out.mark_infinite(GeneratorClass::Hyperbolic);
        }
    }

    match space.len() {
        0 => {}
        1 => try_push(&mut out, space[0].0.clone(), space[0].1.clone(), GeneratorClass::Parabolic),
        2 => {
            let p = pencil(&space[0].0, &space[1].0);
            let cube = pmul(&pmul(&p, &p), &p);
            let forms: Vec<MultiPoly> = cube.iter().flatten().cloned().collect();
            if let Some(roots) = common_binary_roots(&forms) {
                for (a, b) in roots {
                    let (m, t) = combine(space, &[a, b]);
                    try_push(&mut out, m, t, GeneratorClass::Parabolic);
                }
            }
        }
        k if k <= SEARCH_MAX_DIM => {
            // Bounded search; exact axis counts come from the parabolic
            // structure analysis.
            let width = (2 * SEARCH_RANGE + 1) as usize;
            let total = width.pow(k as u32);
            for idx in 0..total {
                let mut rem = idx;
                let coeffs: Vec<Rational> = (0..k)
                    .map(|_| {
                        let c = (rem % width) as i64 - SEARCH_RANGE;
                        rem /= width;
                        rat(c)
                    })
                    .collect();
                let (m, b) = combine(space, &coeffs);
                try_push(&mut out, m, b, GeneratorClass::Parabolic);
            }
        }
        _ => {}
    }
    out
}

/// Shorthand for a generator from integer data.
pub fn generator_from_i64(m: [[i64; 3]; 3], b: [i64; 3]) -> Result<AffineGenerator> {
    AffineGenerator::new(Mat3::from_i64(m), Vec3::from_i64(b[0], b[1], b[2]))
}

/// True if `x` is fixed by the symmetry.
pub fn fixes(g: &AffineGenerator, x: &Vec3) -> bool {
    (&g.m.mul_vec(x) + &g.b).is_zero()
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
    fn sphere_rotations() {
        let g = generator_space(&poly("x^2+y^2+z^2-1"));
        assert_eq!(g.len(), 3);
        assert!(g.iter().all(|g| g.m.is_skew() && g.b.is_zero()));
        assert!(g.iter().all(|g| verify_invariance(&poly("x^2+y^2+z^2-1"), g)));
    }

    #[test]
    fn cone_form_contains_parabolic_generator() {
        let f = poly("y^2-2*x*z-7");
        let g = generator_space(&f);
        assert_eq!(g.len(), 3);
        let n = generator_from_i64([[0, 0, 0], [1, 0, 0], [0, 1, 0]], [0, 0, 0]).unwrap();
        assert_eq!(n.class, GeneratorClass::Parabolic);
        let rows: Vec<Vec<Rational>> = g.iter().map(|g| g.m.0.iter().flatten().cloned().collect()).collect();
        let mut with_n = rows.clone();
        with_n.push(n.m.0.iter().flatten().cloned().collect());
        assert_eq!(rank(&rows, 9), rank(&with_n, 9));
        assert!(verify_invariance(&f, &n));
    }

    #[test]
    fn classification_examples() {
        let c = |m: [[i64; 3]; 3]| classify_generator(&Mat3::from_i64(m)).unwrap();
        assert_eq!(c([[0, -1, 0], [1, 0, 0], [0, 0, 0]]), GeneratorClass::Elliptic);
        assert_eq!(c([[0, 1, 0], [1, 0, 0], [0, 0, 0]]), GeneratorClass::Hyperbolic);
        let skewed = Mat3::from_rows(&[vec![rat(0), rat(0), rat(0)], vec![rat(2), rat(0), rat(0)], vec![rat(0), ratio(1, 2), rat(0)]]);
        assert_eq!(classify_generator(&skewed).unwrap(), GeneratorClass::Parabolic);
        assert_eq!(c([[0, 0, 0], [1, 0, 0], [0, 0, 0]]), GeneratorClass::NonCanonical);
        assert_eq!(c([[1, 0, 0], [0, 1, 0], [0, 0, -2]]), GeneratorClass::NonCanonical);
        assert_eq!(classify_generator(&Mat3::zero()), Err(Error::ZeroMatrix));
    }

    #[test]
    fn fixed_lines() {
        let n = Mat3::from_i64([[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        assert_eq!(fixed_line(&n, &Vec3::zero()).unwrap(), line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(0, 0, 1)).unwrap());
        let e = Mat3::from_i64([[0, -1, 0], [1, 0, 0], [0, 0, 0]]);
        let b = -&e.mul_vec(&Vec3::from_i64(1, 2, 0));
        assert_eq!(fixed_line(&e, &b).unwrap(), line_from_point_dir(&Vec3::from_i64(1, 2, 0), &Vec3::from_i64(0, 0, 1)).unwrap());
        assert_eq!(fixed_line(&e, &Vec3::from_i64(0, 0, 1)), Err(Error::NoFixedLine));
    }

    #[test]
    fn ellipsoid_is_not_rotation_invariant() {
        let g = generator_from_i64([[0, -1, 0], [1, 0, 0], [0, 0, 0]], [0, 0, 0]).unwrap();
        assert!(!verify_invariance(&poly("4*x^2+16*y^2+z^2-1"), &g));
        assert!(verify_invariance(&poly("x^2+y^2+z^2-1"), &g));
    }

    #[test]
    fn group_elements_use_pythagorean_parameters() {
        let g = generator_from_i64([[0, -1, 0], [1, 0, 0], [0, 0, 0]], [0, 0, 0]).unwrap();
        let r = group_element(&g).unwrap().linear;
        assert_eq!(r.0[0][0], ratio(3, 5));
        assert_eq!(r.0[1][0], ratio(4, 5));
        let h = generator_from_i64([[0, 1, 0], [1, 0, 0], [0, 0, 0]], [0, 0, 0]).unwrap();
        let r = group_element(&h).unwrap().linear;
        assert_eq!(r.0[0][0], ratio(5, 4));
        assert_eq!(r.0[0][1], ratio(3, 4));
    }

    #[test]
    fn quartic_has_one_parabolic_symmetry_about_x() {
        let f = poly("2*x*y^3-6*x*y^2*z+6*x*y*z^2-2*x*z^3+4*y^3*z-8*y^2*z^2+4*y*z^3-y+z-1");
        let g = generator_space(&f);
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].class, GeneratorClass::Parabolic);
        assert_eq!(g[0].axis, Some(line_from_point_dir(&Vec3::zero(), &Vec3::from_i64(1, 0, 0)).unwrap()));
        assert!(verify_invariance(&f, &g[0]));
    }

    #[test]
    fn three_types_on_the_cone_form() {
        let f = poly("y^2-2*x*z");
        let found = canonical_elements(&center_space(&f, &Vec3::zero()));
        let lines: BTreeSet<_> = GeneratorClass::CANONICAL
            .iter()
            .map(|c| found.generators.iter().find(|g| g.class == *c).and_then(|g| g.axis.clone()).map(|l| alloc::format!("{}", l)))
            .collect::<Option<_>>()
            .unwrap();
        assert_eq!(lines.len(), 3);
    }
}
