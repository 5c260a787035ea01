//! Residue fields `F_{q^d}` with compatible generators.
//!
//! For a base residue field `F_q` (`q = p^f`) we build one large field
//! `F_{p^{6f}}` from a primitive polynomial and take every residue field of
//! degree `d ∈ {1, 2, 3}` over `F_q` inside it. The generator of the degree-`d`
//! field is `X^{(p^{6f}-1)/(q^d-1)}`, so norms of generators are generators:
//! `g_{F_{q^d}}^{(q^d-1)/(q-1)} = g_{F_q}`. When `f = 1` the primitive
//! polynomial is chosen so that `g_{F_p}` is the smallest primitive root
//! (for `f > 1` the norm of `g_{F_q}` to `F_p` is that root).

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported ambient field size `p^{6f}`.
const MAX_AMBIENT: u128 = 1 << 40;

/// A finite field `F_{q_L}` embedded in the ambient lattice field, with the
/// traces of all powers of its fixed generator.
#[derive(Debug)]
pub struct ResidueField {
    pub p: u64,
    /// Degree over the prime field.
    pub degree: u32,
    /// Number of elements.
    pub size: u64,
    /// `traces[j] = Tr_{F_{q_L}/F_p}(g^j)` for `0 ≤ j < size - 1`.
    traces: Vec<u64>,
    /// `prime_logs[a] = log_g(a)` for `a ∈ F_p^×` (index 0 unused).
    prime_logs: Vec<u64>,
}

impl ResidueField {
    pub fn order(&self) -> u64 {
        self.size - 1
    }

    pub fn trace_of_power(&self, j: u64) -> u64 {
        self.traces[(j % self.order()) as usize]
    }

    /// Discrete logarithm of an element of the prime field.
    pub fn log_prime_element(&self, a: u64) -> u64 {
        let a = a % self.p;
        assert!(a != 0, "log of zero");
        self.prime_logs[a as usize]
    }
}

struct Ambient {
    p: u64,
    modulus: Vec<u64>,
}

impl Ambient {
    fn deg(&self) -> usize {
        self.modulus.len() - 1
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.deg();
        let p = self.p;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for i in (d..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..d {
                let sub = c * self.modulus[j] % p;
                prod[i - d + j] = (prod[i - d + j] + p - sub) % p;
            }
        }
        prod.truncate(d);
        prod
    }

    fn pow(&self, a: &[u64], mut e: u128) -> Vec<u64> {
        let mut acc = self.one();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.deg()];
        v[0] = 1;
        v
    }

    fn x(&self) -> Vec<u64> {
        let mut v = vec![0; self.deg()];
        v[1 % self.deg()] = 1;
        v
    }
}

fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest primitive root modulo an odd prime.
pub fn smallest_primitive_root(p: u64) -> u64 {
    let factors = prime_factors((p - 1) as u128);
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| mod_pow(g, ((p - 1) as u128 / r) as u64, p) != 1)
        })
        .unwrap_or(1)
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u128;
    let mut base = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    b = acc as u64;
    b
}

fn build_ambient(p: u64, f: u32) -> Result<Ambient> {
    let d = 6 * f as usize;
    let size = (p as u128)
        .checked_pow(d as u32)
        .filter(|&s| s <= MAX_AMBIENT)
        .ok_or_else(|| {
            Error::Unsupported(format!("residue lattice F_{{{p}^{d}}} is too large"))
        })?;
    let order = size - 1;
    let factors = prime_factors(order);
    let g_min = smallest_primitive_root(p);
    // the norm of X down to F_p is the constant term (d is even), and it must
    // be a primitive root for X to be primitive
    let constants = [g_min];
    let free = d - 1;
    let total = (p as u128).pow(free as u32);
    for &c0 in &constants {
        for counter in 0..total {
            let mut modulus = vec![0u64; d + 1];
            modulus[0] = c0;
            modulus[d] = 1;
            let mut rest = counter;
            for slot in modulus.iter_mut().take(d).skip(1) {
                *slot = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            let amb = Ambient { p, modulus };
            let x = amb.x();
            if amb.pow(&x, order) != amb.one() {
                continue;
            }
            if factors.iter().all(|&r| amb.pow(&x, order / r) != amb.one()) {
                return Ok(amb);
            }
        }
    }
    Err(Error::Inconsistency(format!(
        "no primitive polynomial of degree {d} over F_{p}"
    )))
}

type Key = (u64, u32, u32);

fn field_cache() -> &'static Mutex<HashMap<Key, Arc<ResidueField>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<ResidueField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ambient_cache() -> &'static Mutex<HashMap<(u64, u32), Arc<Ambient>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<Ambient>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn ambient(p: u64, f: u32) -> Result<Arc<Ambient>> {
    if let Some(a) = ambient_cache().lock().unwrap().get(&(p, f)) {
        return Ok(a.clone());
    }
    let amb = Arc::new(build_ambient(p, f)?);
    ambient_cache()
        .lock()
        .unwrap()
        .entry((p, f))
        .or_insert(amb.clone());
    Ok(amb)
}

/// The residue field of degree `d ∈ {1,2,3}` over `F_{p^f}`.
pub fn residue_field(p: u64, f: u32, d: u32) -> Result<Arc<ResidueField>> {
    if !(1..=3).contains(&d) {
        return Err(Error::Unsupported(format!("residue extension degree {d}")));
    }
    let key = (p, f, d);
    if let Some(found) = field_cache().lock().unwrap().get(&key) {
        return Ok(found.clone());
    }
    let amb = ambient(p, f)?;
    let big = (p as u128).pow(amb.deg() as u32) - 1;
    let degree = f * d;
    let size = p.pow(degree);
    let order = size - 1;
    let g = amb.pow(&amb.x(), big / order as u128);
    let mut traces = Vec::with_capacity(order as usize);
    let mut prime_logs = vec![0u64; p as usize];
    let mut y = amb.one();
    for j in 0..order {
        let mut tr = 0u64;
        let mut z = y.clone();
        for _ in 0..degree {
            tr = (tr + z[0]) % p;
            z = amb.pow(&z, p as u128);
        }
        // trace lies in F_p, so only the constant coefficient can be nonzero
        traces.push(tr);
        if y[1..].iter().all(|&c| c == 0) {
            prime_logs[y[0] as usize] = j;
        }
        y = amb.mul(&y, &g);
    }
    let field = Arc::new(ResidueField {
        p,
        degree,
        size,
        traces,
        prime_logs,
    });
    field_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(field.clone());
    Ok(field)
}
