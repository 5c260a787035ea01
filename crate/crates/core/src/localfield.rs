//! p-adic fields, their tame extensions, cubic étale algebras, and tame
//! multiplicative characters.
//!
//! A tame character of `L^×` is recorded by its value on the Teichmüller
//! lift of the fixed residue generator (`ζ_{q_L-1}^k`) and its value `u` at
//! the fixed uniformizer `ϖ_L`. Ramified extensions are presented by
//! `ϖ_L^e = c·ϖ_F` with `c ∈ {1, g}` for the residue generator `g`, so both
//! ramified quadratic extensions are available.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cyclo::AlgNumber;
use crate::error::{Error, Result};
use crate::residue::{residue_field, ResidueField};

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// A non-archimedean local field of characteristic zero with odd residue
/// characteristic, recorded by its residue field `F_{p^f}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LocalField {
    p: u64,
    f: u32,
}

impl LocalField {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Validation(format!("{p} is not a prime")));
        }
        if p == 2 {
            return Err(Error::Unsupported(
                "residue characteristic 2 is not supported".into(),
            ));
        }
        if f == 0 {
            return Err(Error::Validation("residue degree must be positive".into()));
        }
        Ok(LocalField { p, f })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.f)
    }
}

impl fmt::Display for LocalField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F(q={})", self.q())
    }
}

/// Presentation of a tamely ramified extension: `ϖ_L^e = c·ϖ_F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RamifiedClass {
    /// `c = 1`.
    Square,
    /// `c = g`, the Teichmüller lift of the residue generator (a non-square).
    NonSquare,
}

impl RamifiedClass {
    /// `log_g(c)`.
    fn log(self) -> u64 {
        match self {
            RamifiedClass::Square => 0,
            RamifiedClass::NonSquare => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    Unramified,
    Ramified(RamifiedClass),
}

/// A quadratic or cubic extension of a base field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Extension {
    base: LocalField,
    degree: u32,
    kind: ExtensionKind,
}

impl Extension {
    pub fn new(base: LocalField, degree: u32, kind: ExtensionKind) -> Result<Self> {
        if degree != 2 && degree != 3 {
            return Err(Error::Validation(format!(
                "extension degree {degree} is not 2 or 3"
            )));
        }
        if matches!(kind, ExtensionKind::Ramified(_)) && base.p.is_multiple_of(degree as u64) {
            return Err(Error::Unsupported(
                "wildly ramified extensions are not supported".into(),
            ));
        }
        Ok(Extension { base, degree, kind })
    }

    pub fn unramified(base: LocalField, degree: u32) -> Result<Self> {
        Self::new(base, degree, ExtensionKind::Unramified)
    }

    pub fn ramified(base: LocalField, degree: u32, class: RamifiedClass) -> Result<Self> {
        Self::new(base, degree, ExtensionKind::Ramified(class))
    }

    pub fn base(&self) -> LocalField {
        self.base
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn kind(&self) -> ExtensionKind {
        self.kind
    }

    pub fn is_unramified(&self) -> bool {
        self.kind == ExtensionKind::Unramified
    }

    /// Ramification index `e`.
    pub fn ramification(&self) -> u32 {
        if self.is_unramified() {
            1
        } else {
            self.degree
        }
    }

    pub fn residue_degree(&self) -> u32 {
        self.degree / self.ramification()
    }

    /// Exponent of the different, `e - 1` for tame extensions.
    pub fn different_exponent(&self) -> u32 {
        self.ramification() - 1
    }

    pub fn is_galois(&self) -> bool {
        match self.kind {
            ExtensionKind::Unramified => true,
            ExtensionKind::Ramified(_) => self.degree == 2 || self.base.q() % 3 == 1,
        }
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ExtensionKind::Unramified => "unramified".to_string(),
            ExtensionKind::Ramified(RamifiedClass::Square) => "ramified(c=1)".to_string(),
            ExtensionKind::Ramified(RamifiedClass::NonSquare) => "ramified(c=g)".to_string(),
        };
        write!(f, "{kind} degree-{} extension of {}", self.degree, self.base)
    }
}

/// Either the base field or one of its recorded extensions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Base(LocalField),
    Ext(Extension),
}

impl Field {
    pub fn base(&self) -> LocalField {
        match self {
            Field::Base(f) => *f,
            Field::Ext(e) => e.base,
        }
    }

    pub fn p(&self) -> u64 {
        self.base().p
    }

    /// Residue degree over the prime field.
    pub fn residue_degree_over_prime(&self) -> u32 {
        match self {
            Field::Base(f) => f.f,
            Field::Ext(e) => e.base.f * e.residue_degree(),
        }
    }

    /// `q_L`, the size of the residue field.
    pub fn q(&self) -> u64 {
        self.p().pow(self.residue_degree_over_prime())
    }

    pub fn unit_order(&self) -> u64 {
        self.q() - 1
    }

    /// Level `n(ψ_L)` of `ψ_L = ψ ∘ Tr_{L/F}` when `n(ψ) = 0`.
    pub fn psi_level(&self) -> u32 {
        match self {
            Field::Base(_) => 0,
            Field::Ext(e) => e.different_exponent(),
        }
    }

    pub fn residue_field(&self) -> Result<Arc<ResidueField>> {
        let base = self.base();
        let d = match self {
            Field::Base(_) => 1,
            Field::Ext(e) => e.residue_degree(),
        };
        residue_field(base.p, base.f, d)
    }

    /// `(√q_L)^e`.
    pub fn sqrt_q_pow(&self, e: i64) -> AlgNumber {
        AlgNumber::sqrt_q_pow(self.p(), self.residue_degree_over_prime(), e)
    }

    pub fn extension(&self) -> Option<Extension> {
        match self {
            Field::Base(_) => None,
            Field::Ext(e) => Some(*e),
        }
    }
}

impl From<LocalField> for Field {
    fn from(f: LocalField) -> Self {
        Field::Base(f)
    }
}

impl From<Extension> for Field {
    fn from(e: Extension) -> Self {
        Field::Ext(e)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Base(b) => b.fmt(f),
            Field::Ext(e) => e.fmt(f),
        }
    }
}

/// A tame quasi-character of `L^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultChar {
    field: Field,
    k: u64,
    u: AlgNumber,
}

impl MultChar {
    pub fn new(field: impl Into<Field>, k: i64, u: AlgNumber) -> Result<Self> {
        let field = field.into();
        if u.is_zero() {
            return Err(Error::Validation(
                "character value at the uniformizer must be nonzero".into(),
            ));
        }
        let m = field.unit_order() as i64;
        Ok(MultChar {
            field,
            k: k.rem_euclid(m) as u64,
            u,
        })
    }

    pub fn trivial(field: impl Into<Field>) -> Self {
        Self::unramified(field, AlgNumber::one())
    }

    pub fn unramified(field: impl Into<Field>, u: AlgNumber) -> Self {
        Self::new(field, 0, u).expect("nonzero unramified value")
    }

    /// `|·|_L^{s}` with `s = half_s / 2`.
    pub fn abs_power(field: impl Into<Field>, half_s: i64) -> Self {
        let field = field.into();
        // |ϖ_L|^s = q_L^{-s} = (√q_L)^{-2s}
        Self::unramified(field, field.sqrt_q_pow(-half_s))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn tame_exponent(&self) -> u64 {
        self.k
    }

    pub fn unram_value(&self) -> &AlgNumber {
        &self.u
    }

    /// Conductor exponent (0 or 1).
    pub fn conductor(&self) -> u32 {
        u32::from(self.k != 0)
    }

    pub fn is_unramified(&self) -> bool {
        self.k == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.k == 0 && self.u.is_one()
    }

    pub fn is_quadratic(&self) -> bool {
        (2 * self.k).is_multiple_of(self.field.unit_order()) && (&self.u * &self.u).is_one()
    }

    /// Order of the restriction to units.
    pub fn tame_order(&self) -> u64 {
        let m = self.field.unit_order();
        m / num_integer::gcd(self.k, m)
    }

    /// `χ(g^j)` for the Teichmüller lift of the residue generator.
    pub fn unit_value(&self, j: i64) -> AlgNumber {
        let m = self.field.unit_order();
        let e = (self.k as i128 * j as i128).rem_euclid(m as i128) as i64;
        AlgNumber::root_of_unity(e, m as u32)
    }

    pub fn at_minus_one(&self) -> AlgNumber {
        AlgNumber::from_int(if self.k.is_multiple_of(2) { 1 } else { -1 })
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Validation(format!(
                "characters live on different fields ({} vs {})",
                self.field, other.field
            )));
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Self::new(
            self.field,
            (self.k + other.k) as i64,
            &self.u * &other.u,
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("characters on the same field")
    }

    pub fn inv(&self) -> Self {
        Self::new(self.field, -(self.k as i64), self.u.inv().expect("nonzero")).unwrap()
    }

    pub fn pow(&self, e: i64) -> Self {
        let m = self.field.unit_order() as i128;
        let k = (self.k as i128 * e as i128).rem_euclid(m) as i64;
        Self::new(self.field, k, self.u.pow(e)).unwrap()
    }

    /// Twist by `|·|_L^{half_s/2}`.
    pub fn twist_abs(&self, half_s: i64) -> Self {
        self.mul(&Self::abs_power(self.field, half_s))
    }

    /// Restriction of a character of an extension `L` to `F^×`.
    pub fn restrict(&self, base: LocalField) -> Result<Self> {
        let ext = match self.field {
            Field::Ext(e) if e.base == base => e,
            Field::Base(b) if b == base => return Ok(self.clone()),
            _ => {
                return Err(Error::Validation(format!(
                    "{} is not a recorded extension of {base}",
                    self.field
                )))
            }
        };
        let qf = base.q() - 1;
        match ext.kind {
            // ϖ_F = ϖ_L and g_F = g_L^{(q^d-1)/(q-1)}
            ExtensionKind::Unramified => {
                MultChar::new(base, (self.k % qf) as i64, self.u.clone())
            }
            // same residue field; ϖ_F = ϖ_L^e / c
            ExtensionKind::Ramified(class) => {
                let chi_c = self.unit_value(class.log() as i64);
                let u = &self.u.pow(ext.ramification() as i64) / &chi_c;
                MultChar::new(base, self.k as i64, u)
            }
        }
    }

    /// `χ^c(x) = χ(x^c)` for a character of a quadratic extension.
    pub fn conjugate(&self) -> Result<Self> {
        let ext = match self.field {
            Field::Ext(e) if e.degree == 2 => e,
            _ => {
                return Err(Error::Validation(
                    "conjugation needs a character of a quadratic extension".into(),
                ))
            }
        };
        match ext.kind {
            // Frobenius acts on the residue field by x ↦ x^q
            ExtensionKind::Unramified => {
                let m = self.field.unit_order() as i128;
                let k = (self.k as i128 * ext.base.q() as i128).rem_euclid(m) as i64;
                MultChar::new(self.field, k, self.u.clone())
            }
            // ϖ_E ↦ -ϖ_E, units fixed modulo p_E
            ExtensionKind::Ramified(_) => {
                MultChar::new(self.field, self.k as i64, &self.u * &self.at_minus_one())
            }
        }
    }

    /// Base change `μ ↦ μ ∘ Nm_{L/F}` of a character of the base field.
    pub fn base_change(&self, ext: Extension) -> Result<Self> {
        if self.field != Field::Base(ext.base) {
            return Err(Error::Validation(format!(
                "base change needs a character of {}",
                ext.base
            )));
        }
        let field = Field::Ext(ext);
        match ext.kind {
            ExtensionKind::Unramified => {
                let q = ext.base.q();
                let m = (q.pow(ext.degree) - 1) / (q - 1);
                MultChar::new(field, (self.k * m) as i64, self.u.pow(ext.degree as i64))
            }
            ExtensionKind::Ramified(class) => {
                let e = ext.ramification() as i64;
                // Nm(ϖ_L) = (-1)^{e+1} c ϖ_F
                let mut at_norm = &self.unit_value(class.log() as i64) * &self.u;
                if e % 2 == 0 {
                    at_norm = &at_norm * &self.at_minus_one();
                }
                MultChar::new(field, self.k as i64 * e, at_norm)
            }
        }
    }

    /// Some character `ξ` of the extension with `ξ|_F = self`, when one can
    /// be written down exactly.
    pub fn extend_to(&self, ext: Extension) -> Result<Self> {
        if self.field != Field::Base(ext.base) {
            return Err(Error::Validation("extension needs a base character".into()));
        }
        let field = Field::Ext(ext);
        match ext.kind {
            ExtensionKind::Unramified => MultChar::new(field, self.k as i64, self.u.clone()),
            ExtensionKind::Ramified(class) => {
                // need u_L^e = u_F · ξ(c)
                if ext.ramification() != 2 {
                    return Err(Error::Unsupported(
                        "extending characters across ramified cubics".into(),
                    ));
                }
                let probe = MultChar::new(field, self.k as i64, AlgNumber::one())?;
                let target = &self.u * &probe.unit_value(class.log() as i64);
                let u = target.sqrt(Some(ext.base.p)).ok_or_else(|| {
                    Error::Unsupported(format!("no exact square root of {target}"))
                })?;
                MultChar::new(field, self.k as i64, u)
            }
        }
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ[k={} mod {}, ϖ↦{}]", self.k, self.field.unit_order(), self.u)
    }
}

/// The quadratic character `ω_{E/F}` of `F^×` attached to a quadratic extension.
pub fn quadratic_character(ext: Extension) -> Result<MultChar> {
    if ext.degree != 2 {
        return Err(Error::Validation("ω_{E/F} needs a quadratic extension".into()));
    }
    let base = ext.base;
    let q = base.q();
    match ext.kind {
        ExtensionKind::Unramified => Ok(MultChar::unramified(base, AlgNumber::from_int(-1))),
        ExtensionKind::Ramified(class) => {
            // Nm(ϖ_E) = -c ϖ_F is a norm, so ω(ϖ_F) = ω(-c) = Legendre(-c)
            let log_minus_c = (q - 1) / 2 + class.log();
            let sign = if log_minus_c.is_multiple_of(2) { 1 } else { -1 };
            MultChar::new(base, ((q - 1) / 2) as i64, AlgNumber::from_int(sign))
        }
    }
}

/// Cyclotomic level bookkeeping for character construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Session {
    level: u64,
}

impl Session {
    pub fn new(level: u64) -> Self {
        Session { level }
    }

    /// A session level large enough for every tame character of every
    /// supported extension of `base` together with its Gauss sums.
    pub fn for_field(base: LocalField) -> Self {
        let q = base.q();
        let l = [q - 1, q * q - 1, q * q * q - 1]
            .into_iter()
            .fold(4 * base.p, num_integer::lcm);
        Session { level: l }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn build_character(&self, field: impl Into<Field>, k: i64, u: AlgNumber) -> Result<MultChar> {
        let chi = MultChar::new(field, k, u)?;
        if !self.level.is_multiple_of(chi.tame_order()) {
            return Err(Error::Unsupported(format!(
                "tame order {} does not divide the session level {}; raise N",
                chi.tame_order(),
                self.level
            )));
        }
        Ok(chi)
    }
}

/// Shape of a cubic étale algebra over `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraShape {
    Split3,
    QuadTimesF(Extension),
    CubicField(Extension),
}

/// A cubic étale algebra `A/F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaleCubicAlgebra {
    base: LocalField,
    shape: AlgebraShape,
    resolvent: Option<MultChar>,
}

impl EtaleCubicAlgebra {
    pub fn split(base: LocalField) -> Self {
        EtaleCubicAlgebra {
            base,
            shape: AlgebraShape::Split3,
            resolvent: None,
        }
    }

    pub fn quad_times_f(ext: Extension) -> Result<Self> {
        if ext.degree != 2 {
            return Err(Error::Validation("E must be quadratic".into()));
        }
        Ok(EtaleCubicAlgebra {
            base: ext.base,
            shape: AlgebraShape::QuadTimesF(ext),
            resolvent: None,
        })
    }

    pub fn cubic_field(ext: Extension, resolvent: Option<MultChar>) -> Result<Self> {
        if ext.degree != 3 {
            return Err(Error::Validation("K must be cubic".into()));
        }
        if let Some(r) = &resolvent {
            if r.field() != Field::Base(ext.base) || !r.is_quadratic() {
                return Err(Error::Validation(
                    "resolvent character must be a quadratic character of F".into(),
                ));
            }
        }
        Ok(EtaleCubicAlgebra {
            base: ext.base,
            shape: AlgebraShape::CubicField(ext),
            resolvent,
        })
    }

    pub fn base(&self) -> LocalField {
        self.base
    }

    pub fn shape(&self) -> AlgebraShape {
        self.shape
    }

    pub fn resolvent(&self) -> Option<&MultChar> {
        self.resolvent.as_ref()
    }

    /// `ω_A`, the quadratic character of the discriminant class.
    pub fn discriminant_character(&self) -> Result<MultChar> {
        match self.shape {
            AlgebraShape::Split3 => Ok(MultChar::trivial(self.base)),
            AlgebraShape::QuadTimesF(e) => quadratic_character(e),
            AlgebraShape::CubicField(k) if k.is_galois() => Ok(MultChar::trivial(self.base)),
            AlgebraShape::CubicField(_) => self.resolvent.clone().ok_or_else(|| {
                Error::Validation(
                    "a non-Galois cubic field needs its resolvent character".into(),
                )
            }),
        }
    }
}

/// The discriminant character of the non-Galois tame cubic `F(∛(cϖ))`:
/// its discriminant is `-27c²ϖ²`, so the class is that of `-3`.
pub fn tame_cubic_resolvent(ext: Extension) -> Result<MultChar> {
    if ext.degree != 3 || ext.is_unramified() {
        return Err(Error::Validation("needs a ramified cubic".into()));
    }
    let base = ext.base;
    let q = base.q();
    if q % 3 == 1 {
        Ok(MultChar::trivial(base))
    } else {
        // -3 is a non-square unit
        Ok(MultChar::unramified(base, AlgNumber::from_int(-1)))
    }
}
