//! Elements `a + b*sqrt(s)` of a quadratic extension of the rationals.

use alloc::format;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::linalg::Field;
use super::rational::{sqrt_split, to_short_string, Rational};

/// `a + b*sqrt(s)` with `s` a square-free integer (negative for complex values)
/// or zero. When `b` is zero the value is rational and `s` only records the
/// extension it lives in.
#[derive(Clone, Debug)]
pub struct AlgebraicScalar {
    pub a: Rational,
    pub b: Rational,
    pub s: Rational,
}

/// Equality of values: the recorded extension is ignored for rationals.
impl PartialEq for AlgebraicScalar {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.s == o.s)
    }
}

impl Eq for AlgebraicScalar {}

impl AlgebraicScalar {
    pub fn rational(a: Rational) -> Self {
        AlgebraicScalar { a, b: Rational::zero(), s: Rational::zero() }
    }

    /// Builds `a + b*sqrt(r)` for any rational `r`, normalizing the radicand.
    pub fn new(a: Rational, b: Rational, r: &Rational) -> Self {
        let (c, m) = sqrt_split(r);
        let s = Rational::from_integer(m);
        if s.is_one() || s.is_zero() || b.is_zero() {
            let extra = if s.is_one() { &b * &c } else { Rational::zero() };
            let keep = if s.is_one() || s.is_zero() { Rational::zero() } else { s };
            return AlgebraicScalar { a: a + extra, b: Rational::zero(), s: keep };
        }
        AlgebraicScalar { a, b: b * c, s }
    }

    /// `sqrt(r)`.
    pub fn sqrt(r: &Rational) -> Self {
        AlgebraicScalar::new(Rational::zero(), Rational::one(), r)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() || !self.s.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        AlgebraicScalar { a: self.a.clone(), b: -&self.b, s: self.s.clone() }
    }

    /// `(a + b√s)(a − b√s)`, a rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * &self.s
    }

    fn common_s(&self, o: &Self) -> Rational {
        if self.s.is_zero() {
            return o.s.clone();
        }
        if o.s.is_zero() {
            return self.s.clone();
        }
        assert_eq!(self.s, o.s, "mixing different quadratic extensions");
        self.s.clone()
    }

    pub fn add(&self, o: &Self) -> Self {
        AlgebraicScalar { a: &self.a + &o.a, b: &self.b + &o.b, s: self.common_s(o) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        AlgebraicScalar { a: &self.a - &o.a, b: &self.b - &o.b, s: self.common_s(o) }
    }

    pub fn neg(&self) -> Self {
        AlgebraicScalar { a: -&self.a, b: -&self.b, s: self.s.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let s = self.common_s(o);
        AlgebraicScalar {
            a: &self.a * &o.a + &self.b * &o.b * &s,
            b: &self.a * &o.b + &self.b * &o.a,
            s,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        AlgebraicScalar { a: &self.a * c, b: &self.b * c, s: self.s.clone() }
    }

    /// Panics on division by zero.
    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero");
        let num = self.mul(&o.conjugate());
        AlgebraicScalar { a: num.a / &n, b: num.b / &n, s: num.s }
    }
}

impl Field for AlgebraicScalar {
    fn zero_like(&self) -> Self {
        AlgebraicScalar { a: Rational::zero(), b: Rational::zero(), s: self.s.clone() }
    }
    fn one_like(&self) -> Self {
        AlgebraicScalar { a: Rational::one(), b: Rational::zero(), s: self.s.clone() }
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_f(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn sub_f(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn mul_f(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn div_f(&self, o: &Self) -> Self {
        self.div(o)
    }
}

impl fmt::Display for AlgebraicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", to_short_string(&self.a));
        }
        let root = if self.s == -Rational::one() { String::from("i") } else { format!("sqrt({})", to_short_string(&self.s)) };
        let bpart = if self.b.abs().is_one() { root } else { format!("{}*{}", to_short_string(&self.b.abs()), root) };
        if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            return write!(f, "{}{}", sign, bpart);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(f, "{} {} {}", to_short_string(&self.a), sign, bpart)
    }
}
