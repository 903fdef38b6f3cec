//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{to_short_string, Rational};
use super::unipoly::UniPoly;

/// Exponent vector, ordered graded-lexicographically: higher total degree is
/// greater, ties broken by the first differing exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Shared, ordered variable names.
pub type Vars = Arc<Vec<String>>;

pub fn vars(names: &[&str]) -> Vars {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

pub fn xyz() -> Vars {
    vars(&["x", "y", "z"])
}

pub fn uv() -> Vars {
    vars(&["u", "v"])
}

/// Multivariate polynomial. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({})", self)
    }
}

impl MultiPoly {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational, vars: Vars) -> Self {
        let n = vars.len();
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn var(i: usize, vars: Vars) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(e), Rational::one());
        p
    }

    pub fn monomial(exps: Vec<u32>, c: Rational, vars: Vars) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(exps), c);
        p
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.0.len(), self.vars.len());
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars()])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut result = MultiPoly::constant(Rational::one(), self.vars.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let maxdeg: Vec<u32> = (0..self.nvars()).map(|i| self.degree_in(i)).collect();
        let powers: Vec<Vec<Rational>> = point
            .iter()
            .zip(&maxdeg)
            .map(|(x, &d)| {
                let mut v = Vec::with_capacity(d as usize + 1);
                v.push(Rational::one());
                for k in 1..=d as usize {
                    let next = &v[k - 1] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= &powers[i][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `subs[i]` for variable `i`. All substitutes share a variable set,
    /// which becomes the variable set of the result.
    pub fn compose(&self, subs: &[MultiPoly]) -> MultiPoly {
        assert_eq!(subs.len(), self.nvars());
        let target = subs[0].vars.clone();
        let maxdeg: Vec<u32> = (0..self.nvars()).map(|i| self.degree_in(i)).collect();
        let powers: Vec<Vec<MultiPoly>> = subs
            .iter()
            .zip(&maxdeg)
            .map(|(s, &d)| {
                let mut v = Vec::with_capacity(d as usize + 1);
                v.push(MultiPoly::constant(Rational::one(), target.clone()));
                for k in 1..=d as usize {
                    let next = &v[k - 1] * s;
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), target.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// [`MultiPoly::compose`] truncated at total degree `d`. Substitutes must
    /// have no constant term for the truncation to be exact.
    pub fn compose_trunc(&self, subs: &[MultiPoly], d: u32) -> MultiPoly {
        assert_eq!(subs.len(), self.nvars());
        let target = subs[0].vars.clone();
        let maxdeg: Vec<u32> = (0..self.nvars()).map(|i| self.degree_in(i).min(d)).collect();
        let powers: Vec<Vec<MultiPoly>> = subs
            .iter()
            .zip(&maxdeg)
            .map(|(s, &k)| {
                let mut v = Vec::with_capacity(k as usize + 1);
                v.push(MultiPoly::constant(Rational::one(), target.clone()));
                for i in 1..=k as usize {
                    let next = v[i - 1].mul_trunc(s, d);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            if m.degree() > d {
                continue;
            }
            let mut t = MultiPoly::constant(c.clone(), target.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul_trunc(&powers[i][e as usize], d);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Power series inverse truncated at degree `d`; `None` when the
    /// constant term is zero.
    pub fn inverse_trunc(&self, d: u32) -> Option<MultiPoly> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return None;
        }
        let inv0 = Rational::one() / &c0;
        // 1/(c0 + r) = (1/c0) * sum (-r/c0)^k
        let mut r = self.clone();
        r.add_term(Monomial::one(self.nvars()), -c0);
        let q = r.scale(&-inv0.clone());
        let one = MultiPoly::constant(Rational::one(), self.vars.clone());
        let mut acc = one.clone();
        let mut term = one;
        for _ in 0..d {
            term = term.mul_trunc(&q, d);
            acc = &acc + &term;
        }
        Some(acc.scale(&inv0))
    }

    /// Same polynomial over a different variable list of the same length.
    pub fn with_vars(&self, vars: Vars) -> MultiPoly {
        assert_eq!(vars.len(), self.nvars());
        MultiPoly { vars, terms: self.terms.clone() }
    }

    /// `F(x + p)`.
    pub fn shift(&self, p: &[Rational]) -> MultiPoly {
        let subs: Vec<MultiPoly> = (0..self.nvars())
            .map(|i| &MultiPoly::var(i, self.vars.clone()) + &MultiPoly::constant(p[i].clone(), self.vars.clone()))
            .collect();
        self.compose(&subs)
    }

    /// Drops all terms of total degree above `d`.
    pub fn truncate(&self, d: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Product truncated at total degree `d`.
    pub fn mul_trunc(&self, o: &MultiPoly, d: u32) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 > d {
                break;
            }
            for (m2, c2) in &o.terms {
                if d1 + m2.degree() > d {
                    break;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn homogeneous_component(&self, d: u32) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Nonzero homogeneous components by strictly decreasing degree.
    pub fn homogeneous_parts(&self) -> Vec<(u32, MultiPoly)> {
        let mut parts: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| MultiPoly::zero(self.vars.clone()))
                .add_term(m.clone(), c.clone());
        }
        parts.into_iter().rev().collect()
    }

    /// Coefficients of powers of variable `i`, index = power. Coefficients keep
    /// the full variable set with exponent 0 in position `i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![MultiPoly::zero(self.vars.clone()); d + 1];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[i] as usize;
            m2.0[i] = 0;
            out[e].add_term(m2, c.clone());
        }
        out
    }

    /// Univariate view when only variable `i` occurs.
    pub fn to_univariate(&self, i: usize) -> Option<UniPoly> {
        let mut coeffs = vec![Rational::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e != 0) {
                return None;
            }
            coeffs[m.0[i] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn from_univariate(p: &UniPoly, i: usize, vars: Vars) -> MultiPoly {
        let n = vars.len();
        let mut out = MultiPoly::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = k as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.terms.values().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&(c * Rational::from_integer(lcm.clone())).to_integer());
        }
        let mut s = Rational::new(lcm, g);
        if self.leading().unwrap().1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Equality up to a nonzero constant factor.
    pub fn proportional_to(&self, o: &MultiPoly) -> bool {
        self.primitive() == o.primitive()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading()?;
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            let t = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::from([(qm.clone(), qc.clone())]) };
            rem = &rem - &(&t * d);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Polynomial with variables permuted/embedded: variable `i` of `self`
    /// becomes variable `map[i]` of `vars`.
    pub fn embed(&self, vars: Vars, map: &[usize]) -> MultiPoly {
        let n = vars.len();
        let mut out = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &k) in m.0.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text in descending graded-lex order, re-parseable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(to_short_string(&a));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => {
                        let mut s = self.vars[i].clone();
                        s.push('^');
                        s.push_str(&e.to_string());
                        factors.push(s);
                    }
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
