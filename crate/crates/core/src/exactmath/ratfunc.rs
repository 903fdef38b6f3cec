//! Quotients of multivariate polynomials, used for rational parametrizations.

use core::fmt;

use num_traits::{One, Zero};

use super::poly::{MultiPoly, Vars};
use super::rational::Rational;

/// `num / den` with a nonzero denominator. No cancellation is attempted
/// beyond constant denominators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RationalFunction {
    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::constant(Rational::one(), p.vars().clone());
        RationalFunction { num: p, den }.normalized()
    }

    /// Panics if `den` is zero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalFunction { num, den }.normalized()
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            let one = MultiPoly::constant(Rational::one(), self.num.vars().clone());
            return RationalFunction { num: self.num, den: one };
        }
        if self.den.is_constant() {
            let c = Rational::one() / self.den.constant_term();
            let one = MultiPoly::constant(Rational::one(), self.num.vars().clone());
            return RationalFunction { num: self.num.scale(&c), den: one };
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return RationalFunction::from_poly(q);
        }
        self
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }

    /// `None` when `o` is zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.num.is_zero() {
            return None;
        }
        Some(RationalFunction::new(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFunction { num: self.num.pow(k), den: self.den.pow(k) }.normalized()
    }

    /// `None` at a pole.
    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
