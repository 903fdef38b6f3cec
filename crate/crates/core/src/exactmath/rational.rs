//! Helpers around arbitrary-precision rationals.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Denominators are kept positive and coprime to the
/// numerator by `num_rational`.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Always `num/den`, including `n/1` for integers.
pub fn to_exact_string(q: &Rational) -> String {
    let mut s = String::new();
    let _ = write!(s, "{}/{}", q.numer(), q.denom());
    s
}

/// Short human form: `n` for integers, `n/d` otherwise.
pub fn to_short_string(q: &Rational) -> String {
    let mut s = String::new();
    if q.denom().is_one() {
        let _ = write!(s, "{}", q.numer());
    } else {
        let _ = write!(s, "{}/{}", q.numer(), q.denom());
    }
    s
}

/// Parses `-3`, `7/4` or a terminating decimal such as `1.25`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((n, d)) = text.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return None;
        }
        return Some(n / d);
    }
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit() || c == '.') {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() || frac_part.contains('.') {
        return None;
    }
    let mut digits = String::from(int_part);
    digits.push_str(frac_part);
    let num: BigInt = digits.parse().ok()?;
    let den = num_traits::pow(BigInt::from(10), frac_part.len());
    let q = Rational::new(num, den);
    Some(if neg { -q } else { q })
}

/// Scales a vector to coprime integers whose first nonzero entry is positive.
/// The zero vector is returned unchanged.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<Rational> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return v.to_vec();
    };
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for i in &ints {
        g = g.gcd(i);
    }
    if first.is_negative() {
        g = -g;
    }
    ints.into_iter()
        .map(|i| Rational::from_integer(i / &g))
        .collect()
}

/// True when `a` and `b` are nonzero rational multiples of each other.
pub fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let az = a.iter().all(Zero::is_zero);
    let bz = b.iter().all(Zero::is_zero);
    if az || bz {
        return az && bz;
    }
    // all 2x2 minors vanish
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

/// Exact integer square root when `n` is a perfect square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact rational square root when one exists.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Trial-division limit used when extracting square factors.
const TRIAL_LIMIT: u64 = 1 << 20;

/// Writes `n = c^2 * m` and returns `(c, m)`. `m` is square-free whenever the
/// cofactor left after trial division below `min(n^(1/3), 2^20)` is square-free,
/// which always holds for inputs below roughly `2^60`.
pub fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut m = n.abs();
    let mut c = BigInt::one();
    if m.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut p: u64 = 2;
    loop {
        let pb = BigInt::from(p);
        if &pb * &pb * &pb > m || p > TRIAL_LIMIT {
            break;
        }
        let p2 = &pb * &pb;
        while (&m % &p2).is_zero() {
            m /= &p2;
            c *= &pb;
        }
        if (&m % &pb).is_zero() {
            // single factor p stays in m; strip it for the loop bound then restore
            m /= &pb;
            let (c2, m2) = square_free_split(&m);
            return (c * c2, sign * m2 * pb);
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if let Some(r) = exact_isqrt(&m) {
        c *= r;
        m = BigInt::one();
    }
    (c, sign * m)
}

/// `sqrt(q) = coeff * sqrt(radicand)` with an integer square-free radicand.
pub fn sqrt_split(q: &Rational) -> (Rational, BigInt) {
    // sqrt(n/d) = sqrt(n*d)/d
    let nd = q.numer() * q.denom();
    let (c, m) = square_free_split(&nd);
    (Rational::new(c, q.denom().clone()), m)
}
