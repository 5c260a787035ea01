//! The unramified Asai zeta integral for inert `E/F`, evaluated exactly
//! through the Casselman–Shalika formula, and reconstruction of the Asai
//! L-factor from its power series.

use std::fmt;

use crate::asai::quadratic_asai;
use crate::cyclo::AlgNumber;
use crate::error::{Error, Result};
use crate::localfield::{Extension, LocalField, MultChar};
use crate::weildeligne::{poly_mul, WDRep};

/// Satake parameters `(a, b)` of an unramified principal series of `GL_2(E)`,
/// `E/F` the unramified quadratic extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeData {
    pub base: LocalField,
    pub a: AlgNumber,
    pub b: AlgNumber,
}

impl SatakeData {
    pub fn new(base: LocalField, a: AlgNumber, b: AlgNumber) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Validation("Satake parameters must be nonzero".into()));
        }
        Ok(SatakeData { base, a, b })
    }

    pub fn extension(&self) -> Extension {
        Extension::unramified(self.base, 2).expect("quadratic unramified extension")
    }

    /// `ω_π(ϖ) = ab`.
    pub fn central_value(&self) -> AlgNumber {
        &self.a * &self.b
    }

    pub fn is_unitary(&self) -> bool {
        let unit = |x: &AlgNumber| x.conj() * x.clone() == AlgNumber::one();
        unit(&self.a) && unit(&self.b)
    }

    /// `α ⊕ β` as a parameter of `W_E`.
    pub fn parameter(&self) -> Result<WDRep> {
        let e = self.extension();
        WDRep::character(MultChar::unramified(e, self.a.clone()))?
            .direct_sum(&WDRep::character(MultChar::unramified(e, self.b.clone()))?)
    }

    /// `As(α ⊕ β)` from the asai module.
    pub fn asai(&self) -> Result<WDRep> {
        quadratic_asai(self.extension(), &self.parameter()?)
    }

    /// `q_E^{-1/2} = q_F^{-1}`.
    fn q_e_inv_half(&self) -> AlgNumber {
        AlgNumber::from_ratio(1, self.base.q() as i64)
    }
}

impl fmt::Display for SatakeData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a, b) = ({}, {}) over q = {}", self.a, self.b, self.base.q())
    }
}

/// Coefficients `c_0, …, c_M` of a power series in `X = q_F^{-s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub coeffs: Vec<AlgNumber>,
}

impl TruncatedSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn from_polynomial_inverse(den: &[AlgNumber], m: usize) -> Result<Self> {
        Ok(TruncatedSeries {
            coeffs: series_inverse(den, m)?,
        })
    }
}

/// `1/f` to order `m`.
fn series_inverse(f: &[AlgNumber], m: usize) -> Result<Vec<AlgNumber>> {
    let c0 = f
        .first()
        .and_then(AlgNumber::inv)
        .ok_or_else(|| Error::Validation("series has zero constant term".into()))?;
    let mut g = vec![AlgNumber::zero(); m + 1];
    g[0] = c0.clone();
    for n in 1..=m {
        let mut acc = AlgNumber::zero();
        for k in 1..=n.min(f.len() - 1) {
            acc = acc + &f[k] * &g[n - k];
        }
        g[n] = -(acc * c0.clone());
    }
    Ok(g)
}

/// Spherical Whittaker value `W(diag(ϖ^n, 1))`, normalized by `W(1) = 1`.
pub fn whittaker_value(sd: &SatakeData, n: u32) -> AlgNumber {
    let mut h = AlgNumber::zero();
    for i in 0..=n {
        h = h + sd.a.pow(i as i64) * sd.b.pow((n - i) as i64);
    }
    h * sd.q_e_inv_half().pow(n as i64)
}

/// `Z(W, Φ, s)` for spherical `W` and `Φ = 1_{O_F²}`. The Iwasawa
/// decomposition `H = N_H · A_H · K_H` reduces the integral to
/// `Σ_{m,j} W(diag(ϖ^m, 1)) ω_π(ϖ^j) δ^{-1}(diag(ϖ^m, 1)) X^{m+2j}`
/// with `vol(K_H) = 1` and `δ^{-1}(diag(ϖ^m, 1)) = q^m`.
pub fn zeta_series(sd: &SatakeData, m: usize) -> Result<TruncatedSeries> {
    if m < 1 {
        return Err(Error::Validation("need at least one term".into()));
    }
    let q = AlgNumber::from_int(sd.base.q() as i64);
    let w: Vec<AlgNumber> = (0..=m)
        .map(|k| whittaker_value(sd, k as u32) * q.pow(k as i64))
        .collect();
    let ab = sd.central_value();
    let mut coeffs = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let mut c = AlgNumber::zero();
        for j in 0..=n / 2 {
            c = c + &w[n - 2 * j] * &ab.pow(j as i64);
        }
        coeffs.push(c);
    }
    Ok(TruncatedSeries { coeffs })
}

/// `c_n (ab)^{-n/2}`, real for unitary Satake data.
pub fn symmetric_normalization(ts: &TruncatedSeries, sd: &SatakeData) -> Result<Vec<AlgNumber>> {
    let r = sd
        .central_value()
        .sqrt(None)
        .and_then(|r| r.inv())
        .ok_or_else(|| Error::Unsupported("no exact square root of ab".into()))?;
    Ok(ts
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c * &r.pow(n as i64))
        .collect())
}

/// `1/D(X)` with `D(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LFactor {
    /// Coefficients of `D`, low degree first.
    pub denominator: Vec<AlgNumber>,
}

impl LFactor {
    pub fn degree(&self) -> usize {
        self.denominator.len() - 1
    }

    pub fn expand(&self, m: usize) -> Result<TruncatedSeries> {
        TruncatedSeries::from_polynomial_inverse(&self.denominator, m)
    }

    /// Order of the pole at `X = 1` and the value of `D(X)/(1-X)^k` there.
    pub fn pole_at_one(&self) -> (usize, AlgNumber) {
        let mut d = self.denominator.clone();
        let mut k = 0;
        loop {
            let v = d.iter().fold(AlgNumber::zero(), |acc, c| acc + c.clone());
            if !v.is_zero() || d.len() == 1 {
                return (k, v);
            }
            // synthetic division by (1 - X)
            let n = d.len() - 1;
            let mut quot = vec![AlgNumber::zero(); n];
            let mut carry = AlgNumber::zero();
            for i in 0..n {
                carry = carry + d[i].clone();
                quot[i] = carry.clone();
            }
            d = quot;
            k += 1;
        }
    }
}

impl fmt::Display for LFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.denominator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 => format!("({c})X"),
                _ => format!("({c})X^{i}"),
            };
            terms.push(t);
        }
        write!(f, "1 / [{}]", terms.join(" + "))
    }
}

/// The unique `1/D` with `deg D ≤ max_deg` reproducing every coefficient.
pub fn reconstruct_l_factor(ts: &TruncatedSeries, max_deg: usize) -> Result<LFactor> {
    let m = ts.order();
    if m < 2 * max_deg + 2 {
        return Err(Error::Validation(format!(
            "reconstruction to degree {max_deg} needs at least {} terms",
            2 * max_deg + 2
        )));
    }
    let c0 = ts.coeffs[0]
        .inv()
        .ok_or_else(|| Error::Inconsistency("zeta series has zero constant term".into()))?;
    let normalized: Vec<AlgNumber> = ts.coeffs.iter().map(|c| c * &c0).collect();
    let mut den = series_inverse(&normalized, m)?;
    if let Some(k) = den.iter().skip(max_deg + 1).position(|c| !c.is_zero()) {
        return Err(Error::Inconsistency(format!(
            "no L-factor of degree ≤ {max_deg}: coefficient {} of the inverse is nonzero",
            k + max_deg + 1
        )));
    }
    den.truncate(max_deg + 1);
    while den.len() > 1 && den.last().is_some_and(AlgNumber::is_zero) {
        den.pop();
    }
    Ok(LFactor { denominator: den })
}

/// Outcome of comparing a reconstruction with `As(α ⊕ β)`.
#[derive(Clone, Debug)]
pub struct ZetaCheck {
    pub l_factor: LFactor,
    pub asai_polynomial: Vec<AlgNumber>,
    pub asai_eigenvalues: Vec<AlgNumber>,
    pub agrees: bool,
}

/// Reconstructs `L(As(π), s)` from `m` terms and compares its reciprocal
/// roots with the Frobenius eigenvalues of the Asai parameter.
pub fn zeta_check(sd: &SatakeData, m: usize) -> Result<ZetaCheck> {
    let ts = zeta_series(sd, m)?;
    let l = reconstruct_l_factor(&ts, 4)?;
    let asai = sd.asai()?;
    let eig = asai.frobenius_eigenvalues()?;
    let mut from_eig = vec![AlgNumber::one()];
    for x in &eig {
        from_eig = poly_mul(&from_eig, &[AlgNumber::one(), -x.clone()]);
    }
    let lpoly = asai.l_polynomial()?;
    let agrees = l.denominator == from_eig && lpoly == from_eig;
    Ok(ZetaCheck {
        l_factor: l,
        asai_polynomial: lpoly,
        asai_eigenvalues: eig,
        agrees,
    })
}
