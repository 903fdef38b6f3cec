//! Parametrizations over a common denominator, exact identities checked on
//! integer grids, and the tangency conditions for symmetries.

use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diffgeo::Parametrization;
use crate::error::{Error, Result};
use crate::exactmath::poly::uv;
use crate::exactmath::{Mat3, MultiPoly, Rational, Vec3};
use crate::generators::{basis_matrix, space_from_rows, UNKNOWNS};
use crate::plucker::random_rational;

/// `X = N / W` with one shared denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Homogenized {
    pub n: [MultiPoly; 3],
    pub w: MultiPoly,
}

impl Homogenized {
    pub fn new(x: &Parametrization) -> Self {
        let mut dens: Vec<MultiPoly> = Vec::new();
        for c in &x.coords {
            if !c.den.is_constant() && !dens.contains(&c.den) {
                dens.push(c.den.clone());
            }
        }
        let one = MultiPoly::constant(Rational::one(), uv());
        let w = dens.iter().fold(one.clone(), |acc, d| &acc * d);
        let n = x.coords.clone().map(|c| {
            let mut p = c.num.clone();
            if c.den.is_constant() {
                p = p.scale(&(Rational::one() / c.den.constant_term()));
            }
            for d in &dens {
                if *d != c.den {
                    p = &p * d;
                }
            }
            p
        });
        Homogenized { n, w }
    }

    pub fn degrees(&self) -> (u32, u32) {
        let all = self.n.iter().chain(core::iter::once(&self.w));
        let du = all.clone().map(|p| p.degree_in(0)).max().unwrap_or(0);
        let dv = all.map(|p| p.degree_in(1)).max().unwrap_or(0);
        (du, dv)
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> ([Rational; 3], Rational) {
        let p = [u.clone(), v.clone()];
        (self.n.clone().map(|c| c.eval(&p)), self.w.eval(&p))
    }
}

/// Decides whether a polynomial in `(u, v)` of degree at most `du` in `u`
/// and `dv` in `v` is zero, given only its values: it is zero exactly when it
/// vanishes on a `(du + 1) x (dv + 1)` grid.
pub(crate) fn vanishes_on_grid(du: u32, dv: u32, mut value: impl FnMut(&Rational, &Rational) -> Rational) -> bool {
    for i in 0..=du as i64 {
        for j in 0..=dv as i64 {
            if !value(&Rational::from_integer(i.into()), &Rational::from_integer(j.into())).is_zero() {
                return false;
            }
        }
    }
    true
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

/// Exact check that `M x + b` is tangent to the parametrized surface
/// everywhere: `(X_u x X_v) . (M X + b) == 0`.
pub(crate) fn tangent_identity(h: &Homogenized, m: &Mat3, b: &Vec3) -> bool {
    let nu: Vec<MultiPoly> = h.n.iter().map(|p| p.derivative(0)).collect();
    let nv: Vec<MultiPoly> = h.n.iter().map(|p| p.derivative(1)).collect();
    let (wu, wv) = (h.w.derivative(0), h.w.derivative(1));
    let (du, dv) = h.degrees();
    vanishes_on_grid(4 * du, 4 * dv, |u, v| {
        let p = [u.clone(), v.clone()];
        let (n, w) = h.eval(u, v);
        let a: [Rational; 3] = core::array::from_fn(|i| nu[i].eval(&p));
        let c: [Rational; 3] = core::array::from_fn(|i| nv[i].eval(&p));
        let (wu, wv) = (wu.eval(&p), wv.eval(&p));
        // W (N_u x N_v) - W_v (N_u x N) - W_u (N x N_v), the normal times W^3.
        let t1 = cross(&a, &c);
        let t2 = cross(&a, &n);
        let t3 = cross(&n, &c);
        let mut acc = Rational::zero();
        for i in 0..3 {
            let normal = &w * &t1[i] - &wv * &t2[i] - &wu * &t3[i];
            let mut field = &b.0[i] * &w;
            for j in 0..3 {
                field += &m.0[i][j] * &n[j];
            }
            acc += normal * field;
        }
        acc
    })
}

/// One tangency row per regular sample: `n . (B_k X)` for the matrix
/// coordinates, then `n_i` for `b`.
fn tangency_row(x: &Parametrization, u: &Rational, v: &Rational) -> Option<Vec<Rational>> {
    let ser = x.series(u, v, 1)?;
    let point = Vec3::new(ser[0].constant_term(), ser[1].constant_term(), ser[2].constant_term());
    let xu = Vec3::new(ser[0].coeff(&[1, 0]), ser[1].coeff(&[1, 0]), ser[2].coeff(&[1, 0]));
    let xv = Vec3::new(ser[0].coeff(&[0, 1]), ser[1].coeff(&[0, 1]), ser[2].coeff(&[0, 1]));
    let n = xu.cross(&xv);
    if n.is_zero() {
        return None;
    }
    let mut row: Vec<Rational> = (0..8).map(|k| n.dot(&basis_matrix(k).mul_vec(&point))).collect();
    row.extend(n.0.iter().cloned());
    Some(row)
}

const ROUNDS: usize = 6;
const MAX_RETRIES: usize = 50;

/// All `(M, b)` tangent to the surface that also satisfy `extra`. Rows are
/// sampled until every basis element passes the exact identity.
pub(crate) fn tangency_space(x: &Parametrization, h: &Homogenized, extra: Vec<Vec<Rational>>, seed: u64) -> Result<Vec<(Mat3, Vec3)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7461_6e67);
    let mut rows = extra;
    for _ in 0..ROUNDS {
        let mut added = 0;
        let mut misses = 0;
        while added < 2 * UNKNOWNS {
            let (u, v) = (random_rational(&mut rng), random_rational(&mut rng));
            match tangency_row(x, &u, &v) {
                Some(r) => {
                    rows.push(r);
                    added += 1;
                }
                None => {
                    misses += 1;
                    if misses > MAX_RETRIES * 2 * UNKNOWNS {
                        return Err(Error::InsufficientSamples);
                    }
                }
            }
        }
        let space = space_from_rows(&rows);
        if space.iter().all(|(m, b)| tangent_identity(h, m, b)) {
            return Ok(space);
        }
    }
    Err(Error::InsufficientSamples)
}
