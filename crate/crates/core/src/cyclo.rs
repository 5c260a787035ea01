//! Exact arithmetic in cyclotomic fields.
//!
//! An [`AlgNumber`] is an element of `Q(ζ_N)` stored in the power basis
//! `1, ζ_N, …, ζ_N^{φ(N)-1}` with a single positive common denominator.
//! Numbers at different levels are combined by lifting both to the least
//! common multiple of their levels, so callers never manage `N` by hand.
//! Square roots of prime powers live inside a large enough cyclotomic field
//! (Gauss), which is how half-integral powers of `q` are represented.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (low degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    if let Some(found) = cyclotomic_cache().lock().unwrap().get(&n) {
        return found.clone();
    }
    // Φ_n = ∏_{d | n} (x^d - 1)^{μ(n/d)}; multiply first, then divide.
    let n64 = n as u64;
    let divisors: Vec<u64> = (1..=n64).filter(|d| n64.is_multiple_of(*d)).collect();
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for &d in &divisors {
        if mobius(n64 / d) == 1 {
            let d = d as usize;
            let mut next = vec![BigInt::zero(); poly.len() + d];
            for (i, c) in poly.iter().enumerate() {
                next[i + d] += c;
                next[i] -= c;
            }
            poly = next;
        }
    }
    for &d in &divisors {
        if mobius(n64 / d) == -1 {
            // exact division by x^d - 1
            let d = d as usize;
            let deg = poly.len() - 1;
            let mut quot = vec![BigInt::zero(); deg + 1 - d];
            let mut rem = poly.clone();
            for i in (d..=deg).rev() {
                let c = rem[i].clone();
                if !c.is_zero() {
                    quot[i - d] = c.clone();
                    rem[i - d] += &c;
                    rem[i] = BigInt::zero();
                }
            }
            debug_assert!(rem.iter().all(Zero::is_zero));
            poly = quot;
        }
    }
    let coeffs: Vec<i64> = poly
        .iter()
        .map(|c| c.to_i64().expect("cyclotomic coefficient overflow"))
        .collect();
    let arc = Arc::new(coeffs);
    cyclotomic_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// Reduce a dense coefficient vector (exponents of ζ_n) to the power basis.
fn reduce(mut dense: Vec<BigInt>, n: u32) -> Vec<BigInt> {
    let n_us = n as usize;
    if dense.len() > n_us {
        for i in n_us..dense.len() {
            let c = std::mem::take(&mut dense[i]);
            if !c.is_zero() {
                dense[i % n_us] += c;
            }
        }
        dense.truncate(n_us);
    }
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    if dense.len() > d {
        for i in (d..dense.len()).rev() {
            if dense[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut dense[i]);
            for (j, &pj) in phi[..d].iter().enumerate() {
                if pj != 0 {
                    dense[i - d + j] -= &c * pj;
                }
            }
        }
    }
    dense.resize(d, BigInt::zero());
    dense
}

/// An exact element of a cyclotomic field `Q(ζ_N)`.
#[derive(Clone, Debug)]
pub struct AlgNumber {
    level: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl AlgNumber {
    fn from_parts(level: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = AlgNumber { level, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in self.num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            self.level = 1;
            self.num = vec![BigInt::zero()];
            return;
        }
        if !g.is_one() && !g.is_zero() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
        // collapse rationals to level 1
        if self.level > 1 && self.num[1..].iter().all(Zero::is_zero) {
            self.num.truncate(1);
            self.level = 1;
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_parts(1, vec![BigInt::from(n)], BigInt::one())
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_parts(1, vec![n], BigInt::one())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_parts(1, vec![BigInt::from(num)], BigInt::from(den))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_parts(1, vec![r.numer().clone()], r.denom().clone())
    }

    /// `ζ_n^j` where `ζ_n = exp(2πi/n)`.
    pub fn root_of_unity(j: i64, n: u32) -> Self {
        assert!(n > 0);
        let j = j.rem_euclid(n as i64) as u32;
        let g = j.gcd(&n).max(1);
        let (j, n) = if j == 0 { (0, 1) } else { (j / g, n / g) };
        let mut dense = vec![BigInt::zero(); j as usize + 1];
        dense[j as usize] = BigInt::one();
        Self::from_parts(n, reduce(dense, n), BigInt::one())
    }

    /// `Σ_j coeffs[j]·ζ_n^j`.
    pub fn from_dense(coeffs: &[i64], n: u32) -> Self {
        let dense = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        Self::from_parts(n, reduce(dense, n), BigInt::one())
    }

    /// The positive square root of an odd prime `p`, via the quadratic Gauss sum.
    pub fn sqrt_prime(p: u64) -> Self {
        assert!(p > 2 && p % 2 == 1, "sqrt_prime needs an odd prime");
        let n = p as u32;
        let mut dense = vec![BigInt::zero(); n as usize];
        for a in 1..p {
            let leg = legendre(a, p);
            dense[a as usize] = BigInt::from(leg);
        }
        let g = Self::from_parts(n, reduce(dense, n), BigInt::one());
        if p % 4 == 1 {
            g
        } else {
            // g = i·√p
            -(Self::root_of_unity(1, 4) * g)
        }
    }

    /// The positive square root of `p^e` for an odd prime `p` and `e ≥ 0`.
    pub fn sqrt_prime_power(p: u64, e: u32) -> Self {
        let half = Self::from_bigint(BigInt::from(p).pow(e / 2));
        if e.is_multiple_of(2) {
            half
        } else {
            half * Self::sqrt_prime(p)
        }
    }

    /// `(√q)^e` for `q = p^f` and any integer `e`.
    pub fn sqrt_q_pow(p: u64, f: u32, e: i64) -> Self {
        let base = Self::sqrt_prime_power(p, f * e.unsigned_abs() as u32);
        if e >= 0 {
            base
        } else {
            base.inv().expect("nonzero")
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.level == 1 && self.num[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.level == 1 && self.den.is_one() && self.num[0].is_one()
    }

    /// Returns the value if this number is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.level == 1 {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// `Some(±1)` if this number is exactly `±1`.
    pub fn to_sign(&self) -> Option<i8> {
        if self.level != 1 || !self.den.is_one() {
            return None;
        }
        if self.num[0].is_one() {
            Some(1)
        } else if self.num[0] == BigInt::from(-1) {
            Some(-1)
        } else {
            None
        }
    }

    fn lifted(&self, m: u32) -> Vec<BigInt> {
        if m == self.level {
            return self.num.clone();
        }
        let step = (m / self.level) as usize;
        let mut dense = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        reduce(dense, m)
    }

    fn common_level(&self, other: &Self) -> u32 {
        self.level.lcm(&other.level)
    }

    /// Complex conjugation: `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.level as usize;
        if n == 1 {
            return self.clone();
        }
        let mut dense = vec![BigInt::zero(); n];
        for (i, c) in self.num.iter().enumerate() {
            dense[(n - i) % n] += c;
        }
        Self::from_parts(self.level, reduce(dense, self.level), self.den.clone())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.to_rational() {
            return Some(Self::from_rational(&r.recip()));
        }
        let c = self * &self.conj();
        if let Some(r) = c.to_rational() {
            return Some(self.conj() * Self::from_rational(&r.recip()));
        }
        Some(self.inv_euclid())
    }

    fn inv_euclid(&self) -> Self {
        let phi: Vec<BigRational> = cyclotomic_poly(self.level)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let a: Vec<BigRational> = self
            .num
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let (mut r0, mut r1) = (trim(phi), trim(a));
        let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        let c = r1[0].clone();
        assert!(!c.is_zero(), "inverse of zero");
        let s: Vec<BigRational> = s1.into_iter().map(|x| x / &c).collect();
        // s / (num / den) = s * den
        let den_l = s.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut dense: Vec<BigInt> = s
            .iter()
            .map(|x| x.numer() * (&den_l / x.denom()) * &self.den)
            .collect();
        dense.resize(self.num.len().max(dense.len()), BigInt::zero());
        Self::from_parts(self.level, reduce(dense, self.level), den_l)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Numerical embedding with `ζ_N = exp(2πi/N)`, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.level as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let t = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    /// Writes this number as `r·ζ_M^j` with `r` rational, if possible.
    pub fn as_monomial(&self) -> Option<(BigRational, i64, u32)> {
        if self.is_zero() {
            return None;
        }
        let n = self.level;
        let d = self.num.len();
        let phi = cyclotomic_poly(n);
        let lead = self.num.iter().position(|c| !c.is_zero())?;
        let mut v = vec![BigInt::zero(); d];
        v[0] = BigInt::one();
        for j in 0..n {
            if let Some(vl) = v.iter().position(|c| !c.is_zero()) {
                if vl == lead {
                    // self = (num[lead]/v[lead]) / den · v ?
                    let ok = self
                        .num
                        .iter()
                        .zip(&v)
                        .all(|(a, b)| a * &v[lead] == b * &self.num[lead]);
                    if ok {
                        let r = BigRational::new(self.num[lead].clone(), &self.den * &v[lead]);
                        return Some((r, j as i64, n));
                    }
                }
            }
            // v ← v·ζ
            let top = v.pop().unwrap_or_default();
            v.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (k, &pk) in phi[..d].iter().enumerate() {
                    if pk != 0 {
                        v[k] -= &top * pk;
                    }
                }
            }
        }
        None
    }

    /// A square root, when this number is `r·ζ^j` with `r` a rational square
    /// or `r = p·(square)` for the odd prime `p` supplied.
    pub fn sqrt(&self, p: Option<u64>) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (r, j, n) = self.as_monomial()?;
        let (abs, unit) = if r.is_negative() {
            // -1 = ζ_2
            (-r, Self::root_of_unity(2 * j + n as i64, 4 * n))
        } else {
            (r, Self::root_of_unity(j, 2 * n))
        };
        if let Some(s) = rational_sqrt(&abs) {
            return Some(Self::from_rational(&s) * unit);
        }
        let p = p?;
        let reduced = abs / BigRational::from_integer(BigInt::from(p));
        let s = rational_sqrt(&reduced)?;
        Some(Self::from_rational(&s) * Self::sqrt_prime(p) * unit)
    }

    /// Parses the small textual syntax used by instance documents:
    /// a `*`-separated product of rationals (`-3/2`), roots of unity
    /// (`zeta(j/N)`), and square roots of odd prime powers (`sqrt(m)`),
    /// optionally raised to an integer power with `^`.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Validation("empty number".into()));
        }
        let mut acc = Self::one();
        let (negate, body) = match text.strip_prefix('-') {
            Some(rest) if rest.starts_with(|c: char| !c.is_ascii_digit()) => (true, rest),
            _ => (false, text),
        };
        for factor in body.split('*') {
            acc = acc * parse_factor(factor.trim())?;
        }
        Ok(if negate { -acc } else { acc })
    }
}

fn parse_factor(text: &str) -> Result<AlgNumber> {
    let bad = || Error::Validation(format!("cannot parse number factor `{text}`"));
    let (base, exp) = match text.rsplit_once(")^") {
        Some((b, e)) => (format!("{b})"), e.parse::<i64>().map_err(|_| bad())?),
        None => (text.to_string(), 1),
    };
    let value = if let Some(inner) = base.strip_prefix("zeta(").and_then(|s| s.strip_suffix(')')) {
        let (j, n) = inner.split_once('/').ok_or_else(bad)?;
        let j: i64 = j.trim().parse().map_err(|_| bad())?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        AlgNumber::root_of_unity(j, n)
    } else if let Some(inner) = base.strip_prefix("sqrt(").and_then(|s| s.strip_suffix(')')) {
        let m: u64 = inner.trim().parse().map_err(|_| bad())?;
        let (p, e) = prime_power(m).ok_or_else(bad)?;
        AlgNumber::sqrt_prime_power(p, e)
    } else {
        let r: BigRational = match base.split_once('/') {
            Some((a, b)) => {
                let a: BigInt = a.trim().parse().map_err(|_| bad())?;
                let b: BigInt = b.trim().parse().map_err(|_| bad())?;
                if b.is_zero() {
                    return Err(bad());
                }
                BigRational::new(a, b)
            }
            None => BigRational::from_integer(base.trim().parse().map_err(|_| bad())?),
        };
        AlgNumber::from_rational(&r)
    };
    if exp != 1 && value.is_zero() && exp < 0 {
        return Err(bad());
    }
    Ok(value.pow(exp))
}

/// `(p, e)` with `m = p^e` for an odd prime `p`.
fn prime_power(m: u64) -> Option<(u64, u32)> {
    if m < 3 {
        return None;
    }
    let mut p = 2;
    while p * p <= m && !m.is_multiple_of(p) {
        p += 1;
    }
    if !m.is_multiple_of(p) {
        p = m;
    }
    if p == 2 {
        return None;
    }
    let (mut rest, mut e) = (m, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let a = r.numer().sqrt();
    let b = r.denom().sqrt();
    (&a * &a == *r.numer() && &b * &b == *r.denom()).then(|| BigRational::new(a, b))
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: u64, p: u64) -> i64 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    let mut e = (p - 1) / 2;
    let (mut base, mut acc) = (a as u128, 1u128);
    let m = p as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if acc == 1 {
        1
    } else {
        -1
    }
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if a.len() < b.len() {
        return (vec![BigRational::zero()], rem);
    }
    let mut quot = vec![BigRational::zero(); a.len() - db];
    let lead = b[db].clone();
    for i in (db..a.len()).rev() {
        let c = &rem[i] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
        quot[i - db] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

impl PartialEq for AlgNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.level == other.level {
            return self.den == other.den && self.num == other.num;
        }
        let m = self.common_level(other);
        let a = self.lifted(m);
        let b = other.lifted(m);
        a.iter()
            .zip(&b)
            .all(|(x, y)| x * &other.den == y * &self.den)
    }
}

impl Eq for AlgNumber {}

impl<'a> Add<&'a AlgNumber> for &'a AlgNumber {
    type Output = AlgNumber;
    fn add(self, rhs: &AlgNumber) -> AlgNumber {
        let m = self.common_level(rhs);
        let a = self.lifted(m);
        let b = rhs.lifted(m);
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x * &rhs.den + y * &self.den)
            .collect();
        AlgNumber::from_parts(m, num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a AlgNumber> for &'a AlgNumber {
    type Output = AlgNumber;
    fn sub(self, rhs: &AlgNumber) -> AlgNumber {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a AlgNumber> for &'a AlgNumber {
    type Output = AlgNumber;
    fn mul(self, rhs: &AlgNumber) -> AlgNumber {
        if self.is_zero() || rhs.is_zero() {
            return AlgNumber::zero();
        }
        if self.level == 1 || rhs.level == 1 {
            let (scalar, other) = if self.level == 1 { (self, rhs) } else { (rhs, self) };
            let num = other.num.iter().map(|c| c * &scalar.num[0]).collect();
            return AlgNumber::from_parts(other.level, num, &self.den * &rhs.den);
        }
        let m = self.common_level(rhs);
        let a = self.lifted(m);
        let b = rhs.lifted(m);
        let mut dense = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] += x * y;
                }
            }
        }
        AlgNumber::from_parts(m, reduce(dense, m), &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a AlgNumber> for &'a AlgNumber {
    type Output = AlgNumber;
    fn div(self, rhs: &AlgNumber) -> AlgNumber {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &AlgNumber {
    type Output = AlgNumber;
    fn neg(self) -> AlgNumber {
        AlgNumber {
            level: self.level,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for AlgNumber {
    type Output = AlgNumber;
    fn neg(self) -> AlgNumber {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<AlgNumber> for AlgNumber {
            type Output = AlgNumber;
            fn $m(self, rhs: AlgNumber) -> AlgNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a AlgNumber> for AlgNumber {
            type Output = AlgNumber;
            fn $m(self, rhs: &AlgNumber) -> AlgNumber {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<AlgNumber> for &'a AlgNumber {
            type Output = AlgNumber;
            fn $m(self, rhs: AlgNumber) -> AlgNumber {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for AlgNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        if let Some((r, j, n)) = self.as_monomial() {
            return if r.is_one() {
                write!(f, "zeta({j}/{n})")
            } else {
                write!(f, "{r}*zeta({j}/{n})")
            };
        }
        let (re, im) = self.to_complex();
        write!(f, "[{re:.6}{im:+.6}i]")
    }
}
