//! Arithmetic modulo word-sized primes: irreducibility certificates for
//! univariate polynomials and fast rank screening.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::unipoly::UniPoly;

/// Primes just below 2^31, used for screening.
pub const PRIMES: [u64; 8] = [2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497];

/// Small primes for factorization patterns, where a random polynomial has a
/// fair chance of staying irreducible.
pub const SMALL_PRIMES: [u64; 10] = [10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079, 10091, 10093];

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    if p < 1 << 32 {
        return (a % p) * (b % p) % p;
    }
    ((a as u128 * b as u128) % p as u128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The `count` largest primes below `2^31`, in decreasing order.
pub fn word_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 31) - 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// Image of a rational in Z/p, or `None` when p divides the denominator.
pub fn reduce(q: &Rational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = q.denom().mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    let n = q.numer().mod_floor(&pb).to_u64()?;
    Some(mul_mod(n, inv_mod(d, p), p))
}

type Poly = Vec<u64>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = *r.last().unwrap();
        if top != 0 {
            let c = mul_mod(top, inv, p);
            let off = r.len() - 1 - dm;
            for (j, mj) in m.iter().enumerate() {
                r[off + j] = (r[off + j] + p - mul_mod(c, *mj, p)) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(*x, *y, p)) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut r: Poly = vec![1];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn sub_x(a: &[u64], p: u64) -> Poly {
    let mut r = a.to_vec();
    if r.len() < 2 {
        r.resize(2, 0);
    }
    r[1] = (r[1] + p - 1) % p;
    trim(r)
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: true when `f` reduced mod `p` keeps its degree and is
/// irreducible over GF(p). Such an `f` is irreducible over the rationals.
pub fn irreducible_mod_p(f: &UniPoly, p: u64) -> bool {
    let n = f.degree();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let Some(m): Option<Poly> = f.coeffs().iter().map(|c| reduce(c, p)).collect() else {
        return false;
    };
    let m = trim(m);
    if m.len() != n + 1 {
        return false;
    }
    let x: Poly = vec![0, 1];
    // frob[k] = x^(p^k) mod m
    let mut frob = vec![poly_rem(&x, &m, p)];
    for k in 1..=n {
        let next = poly_powmod(&frob[k - 1], p, &m, p);
        frob.push(next);
    }
    if !sub_x(&frob[n], p).is_empty() {
        return false;
    }
    for q in prime_factors(n) {
        let g = poly_gcd(&m, &sub_x(&frob[n / q], p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Rank of a rational matrix modulo `p`, or `None` when an entry's
/// denominator vanishes mod `p`.
pub fn rank_mod_p(rows: &[Vec<Rational>], ncols: usize, p: u64) -> Option<usize> {
    let mut m: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for row in rows {
        m.push(row.iter().map(|c| reduce(c, p)).collect::<Option<Vec<u64>>>()?);
    }
    Some(rank_u64(&mut m, ncols, p))
}

/// Rank of a matrix already reduced mod `p`; destroys its input.
pub fn rank_u64(m: &mut [Vec<u64>], ncols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for j in c..ncols {
            m[r][j] = mul_mod(m[r][j], inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for j in c..ncols {
                    row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced row echelon form mod `p` in place; returns pivot columns.
fn rref_u64(m: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for j in c..ncols {
            m[r][j] = mul_mod(m[r][j], inv, p);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for j in c..ncols {
                    row[j] = (row[j] + p - mul_mod(f, pivot_row[j], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis mod `p`, one vector per free column with a 1 there.
pub fn kernel_u64(m: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = rref_u64(m, ncols, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Combines residues `a mod m` and `b mod p` into one residue mod `m p`.
pub fn crt(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let pb = BigInt::from(p);
    let a_mod = a.mod_floor(&pb).to_u64().expect("small");
    let m_mod = m.mod_floor(&pb).to_u64().expect("small");
    let t = mul_mod((b + p - a_mod) % p, inv_mod(m_mod, p), p);
    a + m * BigInt::from(t)
}

/// Rational `n/d` with `|n|, d < sqrt(m/2)` congruent to `a` mod `m`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::from(1));
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = core::mem::replace(&mut r1, r2);
        t0 = core::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn poly_divexact(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    let inv = inv_mod(m[dm], p);
    let mut q = vec![0u64; r.len().saturating_sub(dm)];
    while r.len() > dm {
        let top = *r.last().unwrap();
        let off = r.len() - 1 - dm;
        if top != 0 {
            let c = mul_mod(top, inv, p);
            q[off] = c;
            for (j, mj) in m.iter().enumerate() {
                r[off + j] = (r[off + j] + p - mul_mod(c, *mj, p)) % p;
            }
        }
        r.pop();
    }
    trim(q)
}

fn poly_derivative(a: &[u64], p: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| mul_mod(*c, i as u64 % p, p)).collect())
}

/// Degrees of the irreducible factors of `f` mod `p`, or `None` when the
/// reduction drops degree or is not square-free.
pub fn factor_degrees_mod_p(f: &UniPoly, p: u64) -> Option<Vec<usize>> {
    let n = f.degree();
    let m: Poly = trim(f.coeffs().iter().map(|c| reduce(c, p)).collect::<Option<Vec<u64>>>()?);
    if n == 0 || m.len() != n + 1 {
        return None;
    }
    if poly_gcd(&m, &poly_derivative(&m, p), p).len() != 1 {
        return None;
    }
    let mut rest = m;
    let mut h: Poly = vec![0, 1];
    let mut out = Vec::new();
    let mut d = 1;
    while rest.len() > 1 && 2 * d <= rest.len() - 1 {
        h = poly_powmod(&h, p, &rest, p);
        let g = poly_gcd(&rest, &sub_x(&h, p), p);
        if g.len() > 1 {
            for _ in 0..(g.len() - 1) / d {
                out.push(d);
            }
            rest = poly_divexact(&rest, &g, p);
            h = poly_rem(&h, &rest, p);
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(rest.len() - 1);
    }
    Some(out)
}

/// Set of achievable sums of sub-multisets, as a membership table `0..=total`.
pub fn subset_sums(parts: &[usize]) -> Vec<bool> {
    let total: usize = parts.iter().sum();
    let mut ok = vec![false; total + 1];
    ok[0] = true;
    for &d in parts {
        for s in (d..=total).rev() {
            if ok[s - d] {
                ok[s] = true;
            }
        }
    }
    ok
}

/// True if `q` reduces to zero modulo `p` (numerator divisible by `p`).
pub fn vanishes_mod(q: &Rational, p: u64) -> bool {
    (q.numer() % BigInt::from(p)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::rat;

    #[test]
    fn rabin_test() {
        // x^2 + 1 is irreducible mod 10007 (10007 = 3 mod 4) but not mod 10009.
        let f = UniPoly::from_i64(&[1, 0, 1]);
        assert!(irreducible_mod_p(&f, 10007));
        assert!(!irreducible_mod_p(&f, 10009));
        let g = UniPoly::from_i64(&[-1, 0, 1]);
        assert!(!irreducible_mod_p(&g, 10007));
    }

    #[test]
    fn degree_patterns() {
        // (x^2 + 1)(x - 3) mod 10007: x^2 + 1 stays irreducible.
        let f = UniPoly::from_i64(&[1, 0, 1]).mul(&UniPoly::from_i64(&[-3, 1]));
        let mut d = factor_degrees_mod_p(&f, 10007).unwrap();
        d.sort();
        assert_eq!(d, vec![1, 2]);
        let sq = UniPoly::from_i64(&[-3, 1]).pow(2);
        assert_eq!(factor_degrees_mod_p(&sq, 10007), None);
        assert_eq!(subset_sums(&[1, 2]), vec![true, true, true, true]);
        assert_eq!(subset_sums(&[2, 2]), vec![true, false, true, false, true]);
    }

    #[test]
    fn reconstruction() {
        let q = Rational::new(BigInt::from(-22), BigInt::from(7));
        let mut a = BigInt::from(reduce(&q, PRIMES[0]).unwrap());
        let mut m = BigInt::from(PRIMES[0]);
        a = crt(&a, &m, reduce(&q, PRIMES[1]).unwrap(), PRIMES[1]);
        m *= BigInt::from(PRIMES[1]);
        assert_eq!(rational_reconstruct(&a, &m), Some(q));
    }

    #[test]
    fn modular_kernel() {
        let p = PRIMES[0];
        let mut m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let k = kernel_u64(&mut m, 3, p);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![p - 2, 1, 0]);
    }

    #[test]
    fn prime_list() {
        let ps = word_primes(12);
        assert_eq!(&ps[..8], &PRIMES[..]);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn modular_rank() {
        let rows = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(rank_mod_p(&rows, 2, PRIMES[0]), Some(1));
    }
}
