//! Exact arithmetic: rationals, quadratic extensions, polynomials and small
//! linear algebra.

pub mod algebraic;
pub mod eigen;
pub mod linalg;
pub mod modp;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod unipoly;

pub use algebraic::AlgebraicScalar;
pub use eigen::{eig3, Eigen3, Eigenpair};
pub use linalg::{nullspace, Mat3, Vec3};
pub use parse::{parse_poly, parse_rational_function};
pub use poly::{Monomial, MultiPoly, Vars};
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use unipoly::UniPoly;

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Homogeneous components by strictly decreasing degree.
pub fn homogeneous_parts(f: &MultiPoly) -> Result<Vec<(u32, MultiPoly)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.homogeneous_parts())
}
