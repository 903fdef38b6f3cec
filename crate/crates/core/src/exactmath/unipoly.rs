//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{to_short_string, Rational};

/// Coefficients in ascending order, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        UniPoly::new(vec![-r, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        let mut r = UniPoly::constant(Rational::one());
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Quotient and remainder. Panics when dividing by zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc = d.leading();
        if r.len() < d.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&(Rational::one() / self.leading()))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free decomposition: monic factors `a_i` with
    /// `self = c * prod a_i^i`. Returned as `(factor, multiplicity)` with
    /// constant factors dropped.
    pub fn square_free(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.divrem(&a0).0;
        let mut c = fp.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            if a.degree() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Scaled to coprime integer coefficients with positive leading term.
    pub fn primitive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
        let sign = if self.leading().is_negative() { -BigInt::one() } else { BigInt::one() };
        UniPoly::new(ints.into_iter().map(|c| Rational::from_integer(c / &g * &sign)).collect())
    }

    /// Integer coefficient vector of [`UniPoly::primitive`].
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        self.primitive().coeffs.iter().map(|c| c.to_integer()).collect()
    }

    /// Sturm sequence of a square-free polynomial.
    pub fn sturm_sequence(&self) -> Vec<UniPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].divrem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(r.scale(&-Rational::one()));
        }
        seq
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let sqf = self.divrem(&self.gcd(&self.derivative())).0;
        let seq = sqf.sturm_sequence();
        let at_neg_inf = sign_changes(seq.iter().map(|p| {
            let s = sign_of(&p.leading());
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }));
        let at_pos_inf = sign_changes(seq.iter().map(|p| sign_of(&p.leading())));
        at_neg_inf - at_pos_inf
    }

    /// All rational roots with multiplicity, in increasing order.
    pub fn rational_roots(&self) -> Vec<(Rational, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let mut f = self.clone();
        let mut zero_mult = 0;
        while f.coeff(0).is_zero() {
            f = UniPoly::new(f.coeffs[1..].to_vec());
            zero_mult += 1;
        }
        if zero_mult > 0 {
            out.push((Rational::zero(), zero_mult));
        }
        if f.degree() > 0 {
            let sqf = f.divrem(&f.gcd(&f.derivative())).0;
            let ints = sqf.integer_coeffs();
            let n = ints.len() - 1;
            let lc = ints[n].clone();
            // g(y) = lc^(n-1) f(y / lc) is monic with integer coefficients, so
            // its rational roots are integers.
            let mut g = Vec::with_capacity(n + 1);
            let mut pw = BigInt::one();
            for i in (0..n).rev() {
                g.push((i, ints[i].clone() * &pw));
                pw *= &lc;
            }
            let mut gc = vec![Rational::zero(); n + 1];
            for (i, c) in g {
                gc[i] = Rational::from_integer(c);
            }
            gc[n] = Rational::one();
            let g = UniPoly::new(gc);
            for y in integer_roots(&g) {
                let r = Rational::new(y, lc.clone());
                let mut m = 0;
                let lin = UniPoly::linear_root(&r);
                loop {
                    let (q, rem) = f.divrem(&lin);
                    if !rem.is_zero() {
                        break;
                    }
                    f = q;
                    m += 1;
                }
                out.push((r, m));
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let first = s.is_empty();
            if c.is_negative() {
                s.push_str(if first { "-" } else { " - " });
            } else if !first {
                s.push_str(" + ");
            }
            let a = c.abs();
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                s.push_str(&to_short_string(&a));
            }
            if i > 0 {
                if show_coeff {
                    s.push('*');
                }
                s.push_str(var);
                if i > 1 {
                    let _ = write!(s, "^{}", i);
                }
            }
        }
        s
    }
}

fn sign_of(q: &Rational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sturm_at(seq: &[UniPoly], x: &Rational) -> usize {
    sign_changes(seq.iter().map(|p| sign_of(&p.eval(x))))
}

/// Integer roots of a square-free monic integer polynomial, found by Sturm
/// bisection over integer endpoints.
fn integer_roots(g: &UniPoly) -> Vec<BigInt> {
    let bound = g.coeffs.iter().map(|c| c.abs().to_integer()).max().unwrap_or_default() + BigInt::one();
    let seq = g.sturm_sequence();
    let mut roots = Vec::new();
    let lo = -bound.clone() - BigInt::one();
    let mut stack = vec![(lo, bound)];
    while let Some((a, b)) = stack.pop() {
        let ra = Rational::from_integer(a.clone());
        let rb = Rational::from_integer(b.clone());
        let count = sturm_at(&seq, &ra) as i64 - sturm_at(&seq, &rb) as i64;
        if count <= 0 {
            continue;
        }
        let width = &b - &a;
        if width.is_one() {
            if g.eval(&rb).is_zero() {
                roots.push(b);
            }
            continue;
        }
        let mid = (&a + &b).div_floor(&BigInt::from(2));
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{rat, ratio};

    #[test]
    fn roots_with_multiplicity() {
        // (2x - 1)^2 (x + 3) x
        let p = UniPoly::from_i64(&[-1, 2]).pow(2).mul(&UniPoly::from_i64(&[3, 1])).mul(&UniPoly::from_i64(&[0, 1]));
        assert_eq!(p.rational_roots(), vec![(rat(-3), 1), (rat(0), 1), (ratio(1, 2), 2)]);
    }

    #[test]
    fn irrational_roots_are_skipped() {
        let p = UniPoly::from_i64(&[-2, 0, 1]);
        assert!(p.rational_roots().is_empty());
        assert_eq!(p.count_real_roots(), 2);
        assert_eq!(UniPoly::from_i64(&[1, 0, 1]).count_real_roots(), 0);
    }

    #[test]
    fn yun_decomposition() {
        let a = UniPoly::from_i64(&[1, 0, 1]);
        let b = UniPoly::from_i64(&[-1, 1]);
        let p = a.mul(&b.pow(3));
        let sf = p.square_free();
        assert_eq!(sf, vec![(a, 1), (b, 3)]);
    }

    #[test]
    fn division_identity() {
        let a = UniPoly::from_i64(&[5, -3, 0, 7, 2]);
        let d = UniPoly::from_i64(&[1, 3, 2]);
        let (q, r) = a.divrem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_i64(&[-1, 0, 3]).to_string_in("w"), "3*w^2 - 1");
        assert_eq!(UniPoly::from_i64(&[0, -1, 1]).to_string_in("w"), "w^2 - w");
    }
}
