//! Small exact linear algebra: Gaussian elimination over any exact field and
//! the 3-vectors / 3x3 matrices used throughout the geometry code.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::{rat, Rational};

/// An exact field. Implemented for [`Rational`] and for elements of a fixed
/// quadratic extension.
pub trait Field: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_f(&self, o: &Self) -> Self;
    fn sub_f(&self, o: &Self) -> Self;
    fn mul_f(&self, o: &Self) -> Self;
    /// Panics on division by zero.
    fn div_f(&self, o: &Self) -> Self;
}

impl Field for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_f(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_f(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_f(&self, o: &Self) -> Self {
        self * o
    }
    fn div_f(&self, o: &Self) -> Self {
        self / o
    }
}

/// Reduced row echelon form. Returns the reduced rows and the pivot columns.
pub fn rref<F: Field>(rows: &[Vec<F>], ncols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero_elem()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].one_like().div_f(&m[r][c]);
        for j in c..ncols {
            m[r][j] = m[r][j].mul_f(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero_elem() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let t = f.mul_f(&m[r][j]);
                    m[i][j] = m[i][j].sub_f(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Canonical nullspace basis: one vector per free column, with a 1 in that
/// column and zeros in the other free columns.
pub fn nullspace_over<F: Field>(rows: &[Vec<F>], ncols: usize, unit: &F) -> Vec<Vec<F>> {
    let (red, pivots) = rref(rows, ncols);
    let zero = unit.zero_like();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); ncols];
        v[free] = unit.one_like();
        for (row, &pc) in red.iter().zip(&pivots) {
            v[pc] = zero.sub_f(&row[free]);
        }
        basis.push(v);
    }
    basis
}

/// Nullspace of a rational matrix given by rows with `ncols` columns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    nullspace_over(rows, ncols, &Rational::one())
}

/// One solution of `A x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], ncols: usize) -> Option<Vec<Rational>> {
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &pc) in red.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Column vector in 3-space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vec3(pub [Rational; 3]);

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vec3([x, y, z])
    }
    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Vec3([rat(x), rat(y), rat(z)])
    }
    pub fn zero() -> Self {
        Vec3::from_i64(0, 0, 0)
    }
    pub fn unit(i: usize) -> Self {
        let mut v = Vec3::zero();
        v.0[i] = Rational::one();
        v
    }
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
    pub fn dot(&self, o: &Vec3) -> Rational {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }
    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &o.0;
        Vec3([a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1])
    }
    pub fn scale(&self, c: &Rational) -> Vec3 {
        Vec3([&self.0[0] * c, &self.0[1] * c, &self.0[2] * c])
    }
    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }
    pub fn parallel(&self, o: &Vec3) -> bool {
        self.cross(o).is_zero()
    }
    pub fn to_vec(&self) -> Vec<Rational> {
        self.0.to_vec()
    }
    pub fn from_slice(s: &[Rational]) -> Vec3 {
        Vec3([s[0].clone(), s[1].clone(), s[2].clone()])
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

/// 3x3 matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[Rational; 3]; 3]);

impl Mat3 {
    pub fn zero() -> Self {
        Mat3::from_i64([[0; 3]; 3])
    }
    pub fn identity() -> Self {
        Mat3::from_i64([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }
    pub fn from_i64(m: [[i64; 3]; 3]) -> Self {
        Mat3(m.map(|r| r.map(rat)))
    }
    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = |i: usize| [rows[i][0].clone(), rows[i][1].clone(), rows[i][2].clone()];
        Mat3([r(0), r(1), r(2)])
    }
    pub fn from_columns(c0: &Vec3, c1: &Vec3, c2: &Vec3) -> Self {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.0[i][0] = c0.0[i].clone();
            m.0[i][1] = c1.0[i].clone();
            m.0[i][2] = c2.0[i].clone();
        }
        m
    }
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.0[i][j]
    }
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }
    pub fn column(&self, j: usize) -> Vec3 {
        Vec3([self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()])
    }
    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }
    pub fn transpose(&self) -> Mat3 {
        let mut t = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                t.0[i][j] = self.0[j][i].clone();
            }
        }
        t
    }
    pub fn trace(&self) -> Rational {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }
    pub fn det(&self) -> Rational {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }
    /// Sum of the principal 2x2 minors.
    pub fn minor_sum(&self) -> Rational {
        let m = &self.0;
        (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0])
            + (&m[0][0] * &m[2][2] - &m[0][2] * &m[2][0])
            + (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
    }
    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        let row = |i: usize| &self.0[i][0] * &v.0[0] + &self.0[i][1] * &v.0[1] + &self.0[i][2] * &v.0[2];
        Vec3([row(0), row(1), row(2)])
    }
    pub fn mul(&self, o: &Mat3) -> Mat3 {
        let mut r = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                r.0[i][j] = &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j] + &self.0[i][2] * &o.0[2][j];
            }
        }
        r
    }
    pub fn add(&self, o: &Mat3) -> Mat3 {
        let mut r = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                r.0[i][j] += &o.0[i][j];
            }
        }
        r
    }
    pub fn sub(&self, o: &Mat3) -> Mat3 {
        self.add(&o.scale(&-Rational::one()))
    }
    pub fn scale(&self, c: &Rational) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|x| x * c)))
    }
    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let m = &self.0;
        let cof = |i: usize, j: usize| {
            let (r0, r1) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let (c0, c1) = match j {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            let minor = &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0];
            if (i + j) % 2 == 0 {
                minor
            } else {
                -minor
            }
        };
        let mut inv = Mat3::zero();
        for i in 0..3 {
            for j in 0..3 {
                inv.0[j][i] = cof(i, j) / &d;
            }
        }
        Some(inv)
    }
    pub fn is_symmetric(&self) -> bool {
        self == &self.transpose()
    }
    pub fn is_skew(&self) -> bool {
        self.add(&self.transpose()).is_zero()
    }
    /// Skew matrix `[w]x` with `[w]x v = w x v`.
    pub fn cross_matrix(w: &Vec3) -> Mat3 {
        let [a, b, c] = &w.0;
        let z = Rational::zero();
        Mat3([[z.clone(), -c, b.clone()], [c.clone(), z.clone(), -a], [-b, a.clone(), z]])
    }
    /// Axis vector of a skew matrix.
    pub fn skew_axis(&self) -> Vec3 {
        Vec3([self.0[2][1].clone(), self.0[0][2].clone(), self.0[1][0].clone()])
    }
}

/// `x -> A x + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub linear: Mat3,
    pub translation: Vec3,
}

impl AffineMap {
    pub fn new(linear: Mat3, translation: Vec3) -> Self {
        AffineMap { linear, translation }
    }

    pub fn linear(linear: Mat3) -> Self {
        AffineMap { linear, translation: Vec3::zero() }
    }

    pub fn apply(&self, x: &Vec3) -> Vec3 {
        &self.linear.mul_vec(x) + &self.translation
    }

    pub fn inverse(&self) -> Option<AffineMap> {
        let inv = self.linear.inverse()?;
        let t = -&inv.mul_vec(&self.translation);
        Some(AffineMap { linear: inv, translation: t })
    }

    /// `self ∘ o`.
    pub fn compose(&self, o: &AffineMap) -> AffineMap {
        AffineMap { linear: self.linear.mul(&o.linear), translation: self.apply(&o.translation) }
    }

    /// Substitutes `self(x)` into `f`, giving `f ∘ self`.
    pub fn pull_back(&self, f: &MultiPoly) -> MultiPoly {
        let vars = f.vars().clone();
        let subs: Vec<MultiPoly> = (0..3)
            .map(|i| {
                let mut p = MultiPoly::constant(self.translation.0[i].clone(), vars.clone());
                for j in 0..3 {
                    p = &p + &MultiPoly::var(j, vars.clone()).scale(&self.linear.0[i][j]);
                }
                p
            })
            .collect();
        f.compose(&subs)
    }

    /// Equation of the image surface, `f ∘ self^-1`. Panics if singular.
    pub fn push_forward(&self, f: &MultiPoly) -> MultiPoly {
        self.inverse().expect("singular affine map").pull_back(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::ratio;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn identity_has_empty_nullspace() {
        let id = Mat3::identity().rows();
        assert!(nullspace(&id, 3).is_empty());
    }

    #[test]
    fn rank_one_matrix_has_plane_nullspace() {
        let rows = vec![row(&[1, 1, 1]), row(&[1, 1, 1]), row(&[1, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(rows.iter().all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<Rational>().is_zero()));
        }
    }

    #[test]
    fn two_printed_rows_leave_four_dimensions() {
        // coefficient rows of (a1,a2,a3,b1,b2,b3)
        let rows = vec![row(&[0, 485, -582, -1909, 204, 170]), row(&[0, 747, -1494, -17139, 8748, 4374])];
        let ns = nullspace(&rows, 6);
        assert_eq!(ns.len(), 4);
        // x-axis direction (1,0,0 | 0,0,0) is the first free column's basis vector
        assert_eq!(ns[0], row(&[1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn solve_inconsistent_and_consistent() {
        let a = vec![row(&[1, 1]), row(&[2, 2])];
        assert!(solve(&a, &[rat(1), rat(3)], 2).is_none());
        let x = solve(&a, &[rat(1), rat(2)], 2).unwrap();
        assert_eq!(&x[0] + &x[1], rat(1));
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat3([[rat(2), rat(1), rat(0)], [rat(0), ratio(1, 3), rat(1)], [rat(5), rat(0), rat(1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat3::identity());
    }
}
