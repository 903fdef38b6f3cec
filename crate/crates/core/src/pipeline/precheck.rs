//! Input validation: planes, reducible and developable surfaces, realness.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::tangency::Homogenized;
use crate::diffgeo::{mu_at, Parametrization};
use crate::error::{Error, Result};
use crate::exactmath::linalg::nullspace;
use crate::exactmath::modp::{factor_degrees_mod_p, subset_sums, SMALL_PRIMES};
use crate::exactmath::poly::vars;
use crate::exactmath::{MultiPoly, Rational, UniPoly, Vec3};
use crate::plucker::{random_point, random_rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Certified,
    NotCertified,
    NotApplicable,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::Certified => "certified",
            Certificate::NotCertified => "not certified",
            Certificate::NotApplicable => "not applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecheckReport {
    pub irreducible: Certificate,
    pub real_point: Certificate,
    /// Gaussian curvature not identically zero.
    pub curved: Certificate,
    pub warnings: Vec<String>,
}

const LINE_TRIALS: usize = 64;
const CURVATURE_LINES: usize = 4;

/// `f(p + t v)` as a polynomial in `t`.
fn restrict(f: &MultiPoly, p: &Vec3, v: &Vec3) -> UniPoly {
    let tv = vars(&["t"]);
    let t = MultiPoly::var(0, tv.clone());
    let subs: Vec<MultiPoly> = (0..3).map(|i| &MultiPoly::constant(p.0[i].clone(), tv.clone()) + &t.scale(&v.0[i])).collect();
    f.compose(&subs).to_univariate(0).expect("one variable")
}

fn det4(m: &[[UniPoly; 4]; 4]) -> UniPoly {
    fn det3(m: [[&UniPoly; 3]; 3]) -> UniPoly {
        let a = m[0][0].mul(&m[1][1].mul(m[2][2]).sub(&m[1][2].mul(m[2][1])));
        let b = m[0][1].mul(&m[1][0].mul(m[2][2]).sub(&m[1][2].mul(m[2][0])));
        let c = m[0][2].mul(&m[1][0].mul(m[2][1]).sub(&m[1][1].mul(m[2][0])));
        a.sub(&b).add(&c)
    }
    let mut acc = UniPoly::zero();
    for j in 0..4 {
        if m[0][j].is_zero() {
            continue;
        }
        let cols: Vec<usize> = (0..4).filter(|&c| c != j).collect();
        let minor = det3(core::array::from_fn(|r| core::array::from_fn(|c| &m[r + 1][cols[c]])));
        let term = m[0][j].mul(&minor);
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Bordered Hessian entries, whose determinant vanishes on the surface
/// exactly where the Gaussian curvature does.
struct Bordered {
    entries: [[MultiPoly; 4]; 4],
}

impl Bordered {
    fn new(f: &MultiPoly) -> Self {
        let grad: Vec<MultiPoly> = (0..3).map(|i| f.derivative(i)).collect();
        let zero = MultiPoly::zero(f.vars().clone());
        let entries = core::array::from_fn(|i| {
            core::array::from_fn(|j| match (i, j) {
                (3, 3) => zero.clone(),
                (3, k) | (k, 3) => grad[k].clone(),
                (a, b) => grad[a].derivative(b),
            })
        });
        Bordered { entries }
    }

    fn on_line(&self, p: &Vec3, v: &Vec3) -> UniPoly {
        let m: [[UniPoly; 4]; 4] = core::array::from_fn(|i| core::array::from_fn(|j| restrict(&self.entries[i][j], p, v)));
        det4(&m)
    }
}

/// Checks an implicit surface. Irreducibility over the rationals is
/// certified by factorization patterns of line restrictions modulo small
/// primes; a surface whose restrictions always split is rejected.
pub fn precheck_implicit(f: &MultiPoly, seed: u64) -> Result<PrecheckReport> {
    let n = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantInput),
        Some(1) => return Err(Error::PlaneInput),
        Some(n) => n as usize,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7072_6563);
    let bordered = Bordered::new(f);
    let mut possible = vec![true; n + 1];
    let mut certified = false;
    let mut square_free = 0;
    let mut real = false;
    let mut signs = [false; 2];
    let mut flat_lines = 0;
    let mut curved = false;
    for _ in 0..LINE_TRIALS {
        let p = random_point(&mut rng);
        let v = random_point(&mut rng);
        for q in [p.clone(), p.scale(&Rational::new(1.into(), 16.into()))] {
            let val = f.eval(&q.0);
            if !val.is_zero() {
                signs[usize::from(val > Rational::from_integer(0.into()))] = true;
            }
        }
        real |= signs[0] && signs[1];
        if v.is_zero() {
            continue;
        }
        let r = restrict(f, &p, &v);
        if r.degree() != n || r.gcd(&r.derivative()).degree() > 0 {
            continue;
        }
        square_free += 1;
        real |= r.count_real_roots() > 0;
        if !curved && flat_lines < CURVATURE_LINES {
            if bordered.on_line(&p, &v).divrem(&r).1.is_zero() {
                flat_lines += 1;
            } else {
                curved = true;
            }
        }
        if !certified {
            for &q in &SMALL_PRIMES {
                if let Some(d) = factor_degrees_mod_p(&r, q) {
                    for (slot, ok) in possible.iter_mut().zip(subset_sums(&d)) {
                        *slot &= ok;
                    }
                }
            }
            certified = (1..n).all(|k| !possible[k]);
        }
        if certified && real && (curved || flat_lines == CURVATURE_LINES) {
            break;
        }
    }
    if square_free == 0 {
        return Err(Error::ReducibleInput(String::from("every line restriction has a repeated root, so the polynomial has a repeated factor")));
    }
    if !certified {
        let k = (1..n).find(|&k| possible[k]).expect("uncertified");
        return Err(Error::ReducibleInput(alloc::format!("every line restriction admits a factor of degree {}", k)));
    }
    let mut warnings = Vec::new();
    if !real {
        warnings.push(String::from("no real point found; the real surface may be empty or of lower dimension"));
    }
    if !curved {
        if real {
            return Err(Error::Developable);
        }
        warnings.push(String::from("the complex surface is developable"));
    }
    Ok(PrecheckReport {
        irreducible: Certificate::Certified,
        real_point: if real { Certificate::Certified } else { Certificate::NotCertified },
        curved: if curved { Certificate::Certified } else { Certificate::NotCertified },
        warnings,
    })
}

const PARAMETRIC_SAMPLES: usize = 20;

/// Checks a parametrization: it must describe a surface that is neither a
/// plane nor developable.
pub fn precheck_parametric(x: &Parametrization, seed: u64) -> Result<PrecheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7061_7261);
    let mut points: Vec<Vec3> = Vec::new();
    let mut regular = 0;
    let mut flat = 0;
    let mut curved = 0;
    let mut tries = 0;
    while regular < PARAMETRIC_SAMPLES && tries < 50 * PARAMETRIC_SAMPLES {
        tries += 1;
        let (u, v) = (random_rational(&mut rng), random_rational(&mut rng));
        let Some(ser) = x.series(&u, &v, 1) else { continue };
        let xu = Vec3::new(ser[0].coeff(&[1, 0]), ser[1].coeff(&[1, 0]), ser[2].coeff(&[1, 0]));
        let xv = Vec3::new(ser[0].coeff(&[0, 1]), ser[1].coeff(&[0, 1]), ser[2].coeff(&[0, 1]));
        if xu.cross(&xv).is_zero() {
            continue;
        }
        regular += 1;
        if points.len() < 8 {
            points.push(Vec3::new(ser[0].constant_term(), ser[1].constant_term(), ser[2].constant_term()));
        }
        match mu_at(x, &u, &v) {
            Ok(_) => curved += 1,
            Err(Error::FlatPoint) => flat += 1,
            Err(_) => {}
        }
    }
    if regular == 0 {
        return Err(Error::DegenerateParametrization);
    }
    let rows: Vec<Vec<Rational>> = points.iter().map(|p| vec![p.0[0].clone(), p.0[1].clone(), p.0[2].clone(), Rational::from_integer(1.into())]).collect();
    if let Some(c) = nullspace(&rows, 4).first() {
        let h = Homogenized::new(x);
        let mut acc = h.w.scale(&c[3]);
        for i in 0..3 {
            acc = &acc + &h.n[i].scale(&c[i]);
        }
        if acc.is_zero() {
            return Err(Error::PlaneInput);
        }
    }
    if curved == 0 && flat > 0 {
        return Err(Error::Developable);
    }
    let mut warnings = Vec::new();
    if curved == 0 {
        warnings.push(String::from("no sample with a usable curvature certificate"));
    }
    Ok(PrecheckReport {
        irreducible: Certificate::NotApplicable,
        real_point: Certificate::Certified,
        curved: if curved > 0 { Certificate::Certified } else { Certificate::NotCertified },
        warnings,
    })
}
