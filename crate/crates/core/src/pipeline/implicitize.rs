//! Implicit equations of rational parametrizations by linear algebra on
//! sampled points, with multimodular reconstruction and an exact check.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::tangency::{vanishes_on_grid, Homogenized};
use crate::diffgeo::Parametrization;
use crate::error::{Error, Result};
use crate::exactmath::modp::{crt, kernel_u64, rational_reconstruct, reduce, word_primes};
use crate::exactmath::poly::xyz;
use crate::exactmath::{MultiPoly, Rational};
use crate::plucker::random_rational;

const EXTRA_ROWS: usize = 8;
const MAX_PRIMES: usize = 96;

/// Exponents of all monomials of total degree at most `n` in three variables.
fn monomials(n: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for d in 0..=n {
        for a in (0..=d).rev() {
            for b in (0..=d - a).rev() {
                out.push([a, b, d - a - b]);
            }
        }
    }
    out
}

struct Samples {
    points: Vec<([Rational; 3], Rational)>,
    rng: ChaCha8Rng,
}

impl Samples {
    fn ensure(&mut self, h: &Homogenized, count: usize) {
        while self.points.len() < count {
            let (u, v) = (random_rational(&mut self.rng), random_rational(&mut self.rng));
            let (n, w) = h.eval(&u, &v);
            if !w.is_zero() {
                self.points.push((n, w));
            }
        }
    }
}

fn powers_mod(x: u64, n: u32, p: u64) -> Vec<u64> {
    let mut out = vec![1u64; n as usize + 1];
    for k in 1..=n as usize {
        out[k] = out[k - 1] * x % p;
    }
    out
}

/// Rows `N^a W^(n - |a|)` modulo `p`; points that do not reduce are skipped.
fn rows_mod(points: &[([Rational; 3], Rational)], mons: &[[u32; 3]], n: u32, p: u64) -> Vec<Vec<u64>> {
    let mut rows = Vec::with_capacity(points.len());
    for (nv, w) in points {
        let vals: Option<Vec<u64>> = nv.iter().chain(core::iter::once(w)).map(|q| reduce(q, p)).collect();
        let Some(vals) = vals else { continue };
        let pw: Vec<Vec<u64>> = vals.iter().map(|&x| powers_mod(x, n, p)).collect();
        rows.push(
            mons.iter()
                .map(|e| {
                    let rest = n - e[0] - e[1] - e[2];
                    pw[0][e[0] as usize] * pw[1][e[1] as usize] % p * pw[2][e[2] as usize] % p * pw[3][rest as usize] % p
                })
                .collect(),
        );
    }
    rows
}

/// `G(x(u,v), y(u,v), z(u,v)) == 0` exactly, via a grid large enough for the
/// degree of the composite.
pub(crate) fn vanishes_on(g: &MultiPoly, h: &Homogenized) -> bool {
    let Some(n) = g.degree() else { return true };
    let (du, dv) = h.degrees();
    let terms: Vec<(Vec<u32>, Rational)> = g.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect();
    vanishes_on_grid(n * du, n * dv, |u, v| {
        let (nv, w) = h.eval(u, v);
        let pw: Vec<Vec<Rational>> = nv
            .iter()
            .chain(core::iter::once(&w))
            .map(|x| {
                let mut out = vec![Rational::one()];
                for k in 1..=n as usize {
                    let next = &out[k - 1] * x;
                    out.push(next);
                }
                out
            })
            .collect();
        let mut acc = Rational::zero();
        for (e, c) in &terms {
            let rest = (n - e[0] - e[1] - e[2]) as usize;
            acc += c * &pw[0][e[0] as usize] * &pw[1][e[1] as usize] * &pw[2][e[2] as usize] * &pw[3][rest];
        }
        acc
    })
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reconstructs the rational kernel vector normalized to 1 at `free`. A
/// candidate is checked exactly once two consecutive primes agree on it.
fn lift(points: &[([Rational; 3], Rational)], mons: &[[u32; 3]], n: u32, free: usize, h: &Homogenized) -> Option<MultiPoly> {
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); mons.len()];
    let mut last: Option<Vec<Rational>> = None;
    for p in word_primes(MAX_PRIMES) {
        let mut rows = rows_mod(points, mons, n, p);
        let ker = kernel_u64(&mut rows, mons.len(), p);
        if ker.len() != 1 || ker[0][free] == 0 {
            continue;
        }
        let s = inverse_mod(ker[0][free], p);
        for (a, &r) in acc.iter_mut().zip(&ker[0]) {
            *a = crt(a, &modulus, r * s % p, p);
        }
        modulus *= BigInt::from(p);
        let coeffs: Option<Vec<Rational>> = acc.iter().map(|a| rational_reconstruct(a, &modulus)).collect();
        if coeffs.is_some() && coeffs == last {
            let coeffs = coeffs.expect("checked");
            let g = MultiPoly::from_terms(xyz(), mons.iter().zip(coeffs).map(|(e, c)| (e.to_vec(), c)));
            if vanishes_on(&g, h) {
                return Some(g.primitive());
            }
            last = None;
        } else {
            last = coeffs;
        }
    }
    None
}

/// Implicit equation of the surface of lowest degree, up to `degree_bound`.
pub fn implicitize(x: &Parametrization, degree_bound: u32) -> Result<MultiPoly> {
    let h = Homogenized::new(x);
    if h.n.iter().all(|c| c.degree().unwrap_or(0) == 0) && h.w.is_constant() {
        return Err(Error::DegenerateParametrization);
    }
    let mut samples = Samples { points: Vec::new(), rng: ChaCha8Rng::seed_from_u64(0x696d_706c) };
    let screen = word_primes(2);
    for n in 1..=degree_bound {
        let mons = monomials(n);
        samples.ensure(&h, mons.len() + EXTRA_ROWS);
        let points = &samples.points[..mons.len() + EXTRA_ROWS];
        let mut rows = rows_mod(points, &mons, n, screen[0]);
        let ker = kernel_u64(&mut rows, mons.len(), screen[0]);
        if ker.is_empty() {
            continue;
        }
        if ker.len() > 1 {
            let mut rows = rows_mod(points, &mons, n, screen[1]);
            if kernel_u64(&mut rows, mons.len(), screen[1]).len() > 1 {
                return Err(Error::DegenerateParametrization);
            }
        }
        let free = ker[0].iter().rposition(|&c| c != 0).unwrap_or(0);
        return lift(points, &mons, n, free, &h).ok_or(Error::ImplicitizationTooLarge(degree_bound));
    }
    Err(Error::ImplicitizationTooLarge(degree_bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse::parse_poly;

    fn poly(s: &str) -> MultiPoly {
        parse_poly(s, &xyz()).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(1).len(), 4);
        assert_eq!(monomials(4).len(), 35);
        assert_eq!(monomials(12).len(), 455);
    }

    #[test]
    fn graph_surface() {
        let x = Parametrization::parse("u; v; u^2+v^2").unwrap();
        let g = implicitize(&x, 12).unwrap();
        assert!(g.proportional_to(&poly("z-x^2-y^2")));
    }

    #[test]
    fn cone_from_parabolic_orbit() {
        let x = Parametrization::parse("u; v*u; v^2*u/2").unwrap();
        let g = implicitize(&x, 12).unwrap();
        assert!(g.proportional_to(&poly("y^2-2*x*z")));
    }

    #[test]
    fn rational_sphere() {
        let x = Parametrization::parse("2*u/(1+u^2+v^2); 2*v/(1+u^2+v^2); (u^2+v^2-1)/(1+u^2+v^2)").unwrap();
        let g = implicitize(&x, 12).unwrap();
        assert!(g.proportional_to(&poly("x^2+y^2+z^2-1")));
    }

    #[test]
    fn bound_and_degenerate_inputs() {
        let x = Parametrization::parse("u; v; u^5+v^3*u").unwrap();
        assert_eq!(implicitize(&x, 3), Err(Error::ImplicitizationTooLarge(3)));
        let curve = Parametrization::parse("u+v; (u+v)^2; (u+v)^3").unwrap();
        assert_eq!(implicitize(&curve, 6), Err(Error::DegenerateParametrization));
        let point = Parametrization::parse("1; 2; 3").unwrap();
        assert_eq!(implicitize(&point, 6), Err(Error::DegenerateParametrization));
    }
}
