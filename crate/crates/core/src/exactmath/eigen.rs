//! Exact eigen-decomposition of rational 3x3 matrices whose characteristic
//! polynomial splits over a quadratic extension.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::algebraic::AlgebraicScalar;
use super::linalg::{nullspace_over, Field, Mat3};
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenpair {
    pub value: AlgebraicScalar,
    pub multiplicity: usize,
    /// Basis of the eigenspace.
    pub vectors: Vec<[AlgebraicScalar; 3]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen3 {
    pub char_poly: UniPoly,
    pub pairs: Vec<Eigenpair>,
    pub diagonalizable: bool,
}

impl Eigen3 {
    pub fn value(&self, v: &AlgebraicScalar) -> Option<&Eigenpair> {
        self.pairs.iter().find(|p| &p.value == v)
    }
}

/// `det(l I - A)` as a polynomial in `l`.
pub fn char_poly(a: &Mat3) -> UniPoly {
    UniPoly::new(vec![-a.det(), a.minor_sum(), -a.trace(), Rational::one()])
}

pub fn eig3(a: &Mat3) -> Result<Eigen3> {
    let p = char_poly(a);
    let mut values: Vec<(AlgebraicScalar, usize)> = Vec::new();
    let mut rest = p.clone();
    for (r, m) in p.rational_roots() {
        for _ in 0..m {
            rest = rest.divrem(&UniPoly::linear_root(&r)).0;
        }
        values.push((AlgebraicScalar::rational(r), m));
    }
    match rest.degree() {
        0 => {}
        2 => {
            let (c0, c1, c2) = (rest.coeff(0), rest.coeff(1), rest.coeff(2));
            let disc = &c1 * &c1 - Rational::from_integer(4.into()) * &c2 * &c0;
            let den = Rational::one() / (Rational::from_integer(2.into()) * &c2);
            let a0 = -&c1 * &den;
            values.push((AlgebraicScalar::new(a0.clone(), den.clone(), &disc), 1));
            values.push((AlgebraicScalar::new(a0, -den, &disc), 1));
        }
        _ => return Err(Error::UnsupportedEigenstructure(p.to_string_in("l"))),
    }
    let mut pairs = Vec::new();
    let mut total = 0;
    for (value, multiplicity) in values {
        let rows: Vec<Vec<AlgebraicScalar>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let e = AlgebraicScalar { a: a.0[i][j].clone(), b: Rational::zero(), s: value.s.clone() };
                        if i == j {
                            e.sub(&value)
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        let basis = nullspace_over(&rows, 3, &value.one_like());
        total += basis.len();
        let vectors = basis.into_iter().map(|v| [v[0].clone(), v[1].clone(), v[2].clone()]).collect();
        pairs.push(Eigenpair { value, multiplicity, vectors });
    }
    Ok(Eigen3 { char_poly: p, pairs, diagonalizable: total == 3 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{rat, ratio};

    fn cone_matrix(w: i64) -> Mat3 {
        // Quadratic form of y^2 - 2xz - w x^2.
        Mat3::from_i64([[-w, 0, -1], [0, 1, 0], [-1, 0, 0]])
    }

    fn check_pairs(a: &Mat3, e: &Eigen3) {
        for pair in &e.pairs {
            assert!(char_poly_at(&e.char_poly, &pair.value).is_zero());
            for v in &pair.vectors {
                for i in 0..3 {
                    let mut lhs = v[0].zero_like();
                    for j in 0..3 {
                        lhs = lhs.add(&v[j].scale(&a.0[i][j]));
                    }
                    assert_eq!(lhs, v[i].mul(&pair.value));
                }
            }
        }
    }

    fn char_poly_at(p: &UniPoly, x: &AlgebraicScalar) -> AlgebraicScalar {
        let mut acc = x.zero_like();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add(&AlgebraicScalar::rational(c.clone()));
        }
        acc
    }

    #[test]
    fn revolution_cone() {
        let a = cone_matrix(0);
        let e = eig3(&a).unwrap();
        check_pairs(&a, &e);
        assert!(e.diagonalizable);
        let one = e.value(&AlgebraicScalar::rational(rat(1))).unwrap();
        assert_eq!(one.multiplicity, 2);
        let minus = e.value(&AlgebraicScalar::rational(rat(-1))).unwrap();
        assert_eq!(minus.vectors.len(), 1);
        let v = &minus.vectors[0];
        assert_eq!(v[0], v[2]);
        assert!(v[1].is_zero());
    }

    #[test]
    fn elliptic_cone_w3() {
        let a = cone_matrix(3);
        let e = eig3(&a).unwrap();
        check_pairs(&a, &e);
        let roots: Vec<_> = e.pairs.iter().map(|p| p.value.clone()).collect();
        assert!(roots.contains(&AlgebraicScalar::rational(rat(1))));
        assert!(roots.contains(&AlgebraicScalar::new(ratio(-3, 2), ratio(1, 2), &rat(13))));
        assert!(roots.contains(&AlgebraicScalar::new(ratio(-3, 2), ratio(-1, 2), &rat(13))));
        let one = e.value(&AlgebraicScalar::rational(rat(1))).unwrap();
        let v = &one.vectors[0];
        assert!(v[0].is_zero() && v[2].is_zero() && !v[1].is_zero());
    }

    #[test]
    fn nilpotent_is_not_diagonalizable() {
        let a = Mat3::from_i64([[0, 0, 0], [1, 0, 0], [0, 1, 0]]);
        let e = eig3(&a).unwrap();
        assert_eq!(e.pairs.len(), 1);
        assert_eq!(e.pairs[0].multiplicity, 3);
        assert!(!e.diagonalizable);
    }

    #[test]
    fn complex_pair() {
        let a = Mat3::from_i64([[0, -1, 0], [1, 0, 0], [0, 0, 2]]);
        let e = eig3(&a).unwrap();
        check_pairs(&a, &e);
        assert!(e.value(&AlgebraicScalar::sqrt(&rat(-1))).is_some());
    }

    #[test]
    fn irreducible_cubic_is_unsupported() {
        // companion matrix of l^3 - 2
        let a = Mat3::from_i64([[0, 0, 2], [1, 0, 0], [0, 1, 0]]);
        assert!(matches!(eig3(&a), Err(Error::UnsupportedEigenstructure(_))));
    }
}
