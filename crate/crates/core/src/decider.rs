//! Period-dimension decisions for `H = GL_2(F) ⊂ GL_2(A)`.
//!
//! Every input is decided by a structural rule taken from the case theorems,
//! and, whenever the Asai parameter is constructible, also by the ε-sign of
//! `As(Π)`. The two must agree; disagreement is a hard error.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::asai::{asai_parameter, check_fields};
use crate::cyclo::AlgNumber;
use crate::epsilon::{epsilon_sign, epsilon_wd, AdditiveCharLevel};
use crate::error::{Error, Result};
use crate::langlands::{RepKind, WhittakerRep};
use crate::localfield::{
    quadratic_character, AlgebraShape, EtaleCubicAlgebra, Extension, Field, LocalField,
    MultChar, RamifiedClass,
};

/// Citation anchors of the rule base.
pub mod rules {
    pub const MAIN: &str =
        "Main Theorem: dim Hom_H(Π, 1) + dim Hom_H′(Π′, 1) = 1, with dim Hom_H(Π, 1) = 1 iff ε(As(Π))ω_A(−1) = 1";
    pub const PRASAD: &str =
        "Prasad: for irreducible generic Π, dim Hom_H(Π, 1) = 1 iff ε(As(Π))ω_A(−1) = 1";
    pub const SPLIT_SIGMA: &str =
        "Prasad, Harris–Scholl: if some π_i is a twist of Σ_F, the ε-factor is automatically +1 and dim Hom_H = 1";
    pub const THEOREM_A: &str = "Theorem A: dim Hom_H(π ⊠ Σ_F, 1) = 1";
    pub const THEOREM_A_STEINBERG: &str =
        "Theorem A proof: Hom_H(I_E(α, β) ⊠ St_F, 1) is zero if αβ^c = 1, and one-dimensional otherwise";
    pub const THEOREM_A_TRIVIAL: &str =
        "Theorem A proof: Hom_H(I_E(α, β) ⊠ 1, 1) is one-dimensional if αβ^c = 1, or if α|_F× = β|_F× = 1";
    pub const THEOREM_B: &str =
        "Theorem B: dim Hom_H(Σ_E ⊠ σ, 1) = 1 iff ε(σ)ε(σ × ω_E/F) = ω_E/F(−1)";
    pub const THEOREM_B_STEINBERG: &str = "Theorem B: Hom_H(Σ_E ⊠ St_F, 1) = 0";
    pub const LEMMA: &str = "Lemma: ε(As(Σ_E) × St_F)ω_E/F(−1) = −1";
    pub const THEOREM_C: &str = "Theorem C: dim Hom_H(Σ_E ⊠ Σ_F, η) = 1";
    pub const CUBIC_SIGMA: &str =
        "Cubic fields: ε(As(Σ_E) × λ)ω_E/F(−1) is always +1";
    pub const CUBIC_STEINBERG: &str =
        "Cubic fields: ε(As(St_E) × λ)ω_E/F(−1) is +1 if λ is nontrivial quadratic, and −1 if λ = 1";
    pub const CUBIC_EXT: &str =
        "Cubic fields: the obstruction lies in Ext¹_H(1, λ), which is zero";
    pub const JACQUET_LANGLANDS: &str =
        "Jacquet–Langlands: Π′ = 0 unless the relevant components are discrete series";

    pub const ALL: &[&str] = &[
        MAIN,
        PRASAD,
        SPLIT_SIGMA,
        THEOREM_A,
        THEOREM_A_STEINBERG,
        THEOREM_A_TRIVIAL,
        THEOREM_B,
        THEOREM_B_STEINBERG,
        LEMMA,
        THEOREM_C,
        CUBIC_SIGMA,
        CUBIC_STEINBERG,
        CUBIC_EXT,
        JACQUET_LANGLANDS,
    ];
}

/// A problem instance `(A, Π)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPInput {
    pub algebra: EtaleCubicAlgebra,
    pub components: Vec<WhittakerRep>,
    pub psi: AdditiveCharLevel,
    /// Supplied `ε(As(Π))` for inputs whose Asai parameter is not constructible.
    pub asai_eps_sign: Option<i8>,
}

impl GPInput {
    pub fn new(algebra: EtaleCubicAlgebra, components: Vec<WhittakerRep>) -> Result<Self> {
        let input = GPInput {
            algebra,
            components,
            psi: AdditiveCharLevel::default(),
            asai_eps_sign: None,
        };
        input.validate()?;
        Ok(input)
    }

    pub fn with_asai_eps_sign(mut self, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::Validation(format!("ε sign {sign} is not ±1")));
        }
        self.asai_eps_sign = Some(sign);
        Ok(self)
    }

    fn expected_fields(&self) -> Vec<Field> {
        let base = Field::Base(self.algebra.base());
        match self.algebra.shape() {
            AlgebraShape::Split3 => vec![base; 3],
            AlgebraShape::QuadTimesF(e) => vec![Field::Ext(e), base],
            AlgebraShape::CubicField(k) => vec![Field::Ext(k)],
        }
    }

    /// Shapes and the central-character condition `ω_Π|_F× = 1`.
    pub fn validate(&self) -> Result<()> {
        check_fields(&self.components, &self.expected_fields())?;
        if let Some(s) = self.asai_eps_sign {
            if s != 1 && s != -1 {
                return Err(Error::Validation(format!("ε sign {s} is not ±1")));
            }
        }
        let base = self.algebra.base();
        let mut acc = MultChar::trivial(base);
        for pi in &self.components {
            acc = acc.mul(&pi.central_character()?.restrict(base)?);
        }
        if !acc.is_trivial() {
            return Err(Error::Validation(format!(
                "central character condition fails: ω_Π restricted to F^× is {acc}"
            )));
        }
        Ok(())
    }

    pub fn jl_nonzero(&self) -> bool {
        match self.algebra.shape() {
            AlgebraShape::Split3 | AlgebraShape::CubicField(_) => {
                self.components.iter().all(WhittakerRep::is_discrete_series)
            }
            AlgebraShape::QuadTimesF(_) => self.components[1].is_discrete_series(),
        }
    }
}

impl fmt::Display for GPInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        let shape = match self.algebra.shape() {
            AlgebraShape::Split3 => "F×F×F".to_string(),
            AlgebraShape::QuadTimesF(e) => format!("E×F, E {}", short_ext(e)),
            AlgebraShape::CubicField(k) => format!("K, K {}", short_ext(k)),
        };
        write!(f, "q={} {shape}: {}", self.algebra.base().q(), parts.join(" ⊠ "))
    }
}

fn short_ext(e: Extension) -> &'static str {
    use crate::localfield::ExtensionKind::*;
    match e.kind() {
        Unramified => "unramified",
        Ramified(RamifiedClass::Square) => "ramified (c=1)",
        Ramified(RamifiedClass::NonSquare) => "ramified (c=g)",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EpsSign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
    #[serde(rename = "unknown")]
    Unknown,
}

impl EpsSign {
    fn from_sign(s: Option<i8>) -> Self {
        match s {
            Some(1) => EpsSign::Plus,
            Some(_) => EpsSign::Minus,
            None => EpsSign::Unknown,
        }
    }
}

impl fmt::Display for EpsSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpsSign::Plus => "+1",
            EpsSign::Minus => "-1",
            EpsSign::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relevance {
    FactorsThroughQuotient,
    CarriedBySubrepresentation,
    NotApplicable,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    SplitSigmaTwist,
    SplitIrreducible,
    /// `π` irreducible, `σ` a twist of `Σ_F`.
    QuadIrreducibleSigma,
    /// `π` a twist of `Σ_E`, `σ` irreducible.
    QuadSigmaIrreducible,
    /// `Σ_E ⊠ St_F` up to twist.
    QuadSigmaSteinberg,
    QuadSigmaSigma,
    QuadPrincipalSteinberg,
    QuadIrreducible,
    CubicSigmaTwist,
    CubicSteinbergTwist,
    CubicIrreducible,
}

impl CaseTag {
    /// Whether a structural theorem fixes the dimension, independently of
    /// the ε-sign of `As(Π)`.
    pub fn is_structural(self) -> bool {
        !matches!(
            self,
            CaseTag::SplitIrreducible | CaseTag::QuadIrreducible | CaseTag::CubicIrreducible
        )
    }
}

/// Outcome of [`decide_period`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodReport {
    pub dim_h: u8,
    pub dim_hprime: u8,
    /// `ε(As(Π))ω_A(−1)`.
    pub eps_sign: EpsSign,
    /// The same sign computed from the constructed Asai parameter, when it exists.
    pub constructive_eps: Option<i8>,
    pub jl_nonzero: bool,
    pub case_tag: CaseTag,
    pub citations: Vec<String>,
    pub relevance: Relevance,
}

impl fmt::Display for PeriodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim Hom_H(Π, 1)   = {}", self.dim_h)?;
        writeln!(f, "dim Hom_H′(Π′, 1) = {}", self.dim_hprime)?;
        writeln!(f, "ε(As Π)·ω_A(−1)   = {}", self.eps_sign)?;
        match self.constructive_eps {
            Some(s) => writeln!(f, "constructive ε    = {s:+}")?,
            None => writeln!(f, "constructive ε    = (not constructible)")?,
        }
        writeln!(f, "JL transfer       = {}", if self.jl_nonzero { "nonzero" } else { "zero" })?;
        let tag = serde_json::to_value(self.case_tag).unwrap_or_default();
        let rel = serde_json::to_value(self.relevance).unwrap_or_default();
        writeln!(f, "case              = {}", tag.as_str().unwrap_or("?"))?;
        writeln!(f, "relevance         = {}", rel.as_str().unwrap_or("?"))?;
        writeln!(f, "citations:")?;
        for c in &self.citations {
            writeln!(f, "  - {c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomTarget {
    /// `St_F`.
    Steinberg,
    /// The trivial representation of `GL_2(F)`.
    Trivial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomDim {
    pub dim: u8,
    /// `α|_F× = β|_F× = 1` and `αβ^c ≠ 1`: both rules fire and `π` is tempered.
    pub exceptional_tempered: bool,
}

/// `dim Hom_H(π ⊠ τ, 1)` for `π = I_E(α, β)` and `τ ∈ {St_F, 1}`.
pub fn hom_dim_component(pi: &WhittakerRep, target: HomTarget) -> Result<HomDim> {
    let ext = match pi.field() {
        Field::Ext(e) if e.degree() == 2 => e,
        _ => {
            return Err(Error::Validation(
                "hom_dim_component needs a representation of GL_2(E) for quadratic E".into(),
            ))
        }
    };
    let (alpha, beta) = match pi.kind() {
        RepKind::PrincipalSeries { alpha, beta } => (alpha, beta),
        _ => {
            return Err(Error::Unsupported(
                "hom_dim_component is only tabulated for principal series".into(),
            ))
        }
    };
    let base = ext.base();
    if !alpha.mul(beta).restrict(base)?.is_trivial() {
        return Err(Error::Validation(
            "hom_dim_component needs αβ trivial on F^×".into(),
        ));
    }
    let twisted = alpha.mul(&beta.conjugate()?).is_trivial();
    let both_trivial =
        alpha.restrict(base)?.is_trivial() && beta.restrict(base)?.is_trivial();
    let exceptional = both_trivial && !twisted;
    let dim = match target {
        HomTarget::Steinberg => u8::from(!twisted),
        HomTarget::Trivial => u8::from(twisted || both_trivial),
    };
    Ok(HomDim {
        dim,
        exceptional_tempered: exceptional,
    })
}

struct Ruling {
    dim_h: Option<u8>,
    sign: Option<i8>,
    case: CaseTag,
    relevance: Relevance,
    cites: Vec<&'static str>,
}

impl Ruling {
    fn fixed(dim: u8, case: CaseTag, relevance: Relevance, cites: Vec<&'static str>) -> Self {
        Ruling {
            dim_h: Some(dim),
            sign: Some(if dim == 1 { 1 } else { -1 }),
            case,
            relevance,
            cites,
        }
    }

    fn by_sign(case: CaseTag) -> Self {
        Ruling {
            dim_h: None,
            sign: None,
            case,
            relevance: Relevance::NotApplicable,
            cites: vec![rules::PRASAD],
        }
    }
}

fn sign_of(x: &AlgNumber) -> Result<i8> {
    epsilon_sign(x)
}

fn minus_one_sign(chi: &MultChar) -> i8 {
    if chi.tame_exponent().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn split_ruling(comps: &[WhittakerRep]) -> Ruling {
    if comps.iter().any(WhittakerRep::is_reducible) {
        Ruling::fixed(
            1,
            CaseTag::SplitSigmaTwist,
            Relevance::Unknown,
            vec![rules::SPLIT_SIGMA],
        )
    } else {
        Ruling::by_sign(CaseTag::SplitIrreducible)
    }
}

/// `ε(σ)ε(σ ⊗ ω)ω(−1)` for an irreducible `σ` of `GL_2(F)`.
fn theorem_b_sign(sigma: &WhittakerRep, ext: Extension, psi: AdditiveCharLevel) -> Result<i8> {
    let w = quadratic_character(ext)?;
    let w_minus = minus_one_sign(&w);
    if let RepKind::Supercuspidal(d) = sigma.kind() {
        return match (d.eps_sign, d.twisted_eps_sign) {
            (Some(a), Some(b)) => Ok(a * b * w_minus),
            _ => Err(Error::Unsupported(format!(
                "supercuspidal {} needs eps_sign and twisted_eps_sign",
                d.label
            ))),
        };
    }
    let rho = sigma.langlands_parameter()?;
    let e1 = epsilon_wd(&rho, psi)?;
    let e2 = epsilon_wd(&rho.twist(&w)?, psi)?;
    sign_of(&(&(&e1 * &e2) * &AlgNumber::from_int(w_minus as i64)))
}

fn quad_ruling(ext: Extension, pi: &WhittakerRep, sigma: &WhittakerRep, psi: AdditiveCharLevel) -> Result<Ruling> {
    let base = ext.base();
    match (pi.kind(), sigma.kind()) {
        (RepKind::SigmaTwist(xi), RepKind::SigmaTwist(chi)) => {
            let eta = chi.mul(&xi.restrict(base)?);
            let relevance = if eta.is_trivial() {
                Relevance::FactorsThroughQuotient
            } else {
                Relevance::CarriedBySubrepresentation
            };
            Ok(Ruling::fixed(1, CaseTag::QuadSigmaSigma, relevance, vec![rules::THEOREM_C]))
        }
        (_, RepKind::SigmaTwist(chi)) => {
            // twist to π' ⊠ Σ_F with π' = π ⊗ ξ, ξ|_F = χ
            let relevance = match chi.extend_to(ext).and_then(|xi| pi.twist(&xi)) {
                Ok(p) => match hom_dim_component(&p, HomTarget::Trivial) {
                    Ok(h) if h.dim == 1 => Relevance::FactorsThroughQuotient,
                    Ok(_) => Relevance::CarriedBySubrepresentation,
                    Err(_) => Relevance::Unknown,
                },
                Err(_) => Relevance::Unknown,
            };
            let mut cites = vec![rules::THEOREM_A];
            if relevance != Relevance::Unknown {
                cites.push(rules::THEOREM_A_TRIVIAL);
            }
            Ok(Ruling::fixed(1, CaseTag::QuadIrreducibleSigma, relevance, cites))
        }
        (RepKind::SigmaTwist(xi), _) => {
            let r = xi.restrict(base)?;
            let sigma1 = if r.is_trivial() {
                sigma.clone()
            } else {
                sigma.twist(&r)?
            };
            if sigma1 == WhittakerRep::steinberg(base) {
                return Ok(Ruling::fixed(
                    0,
                    CaseTag::QuadSigmaSteinberg,
                    Relevance::NotApplicable,
                    vec![rules::THEOREM_B_STEINBERG, rules::LEMMA],
                ));
            }
            let s = theorem_b_sign(&sigma1, ext, psi)?;
            let dim = u8::from(s == 1);
            let relevance = if dim == 1 {
                Relevance::CarriedBySubrepresentation
            } else {
                Relevance::NotApplicable
            };
            Ok(Ruling::fixed(dim, CaseTag::QuadSigmaIrreducible, relevance, vec![rules::THEOREM_B]))
        }
        (RepKind::PrincipalSeries { .. }, RepKind::SteinbergTwist(chi)) => {
            match chi.extend_to(ext).and_then(|xi| pi.twist(&xi)) {
                Ok(p) => {
                    let h = hom_dim_component(&p, HomTarget::Steinberg)?;
                    Ok(Ruling {
                        dim_h: Some(h.dim),
                        sign: None,
                        case: CaseTag::QuadPrincipalSteinberg,
                        relevance: Relevance::NotApplicable,
                        cites: vec![rules::THEOREM_A_STEINBERG],
                    })
                }
                Err(Error::Unsupported(_)) => Ok(Ruling::by_sign(CaseTag::QuadIrreducible)),
                Err(e) => Err(e),
            }
        }
        _ => Ok(Ruling::by_sign(CaseTag::QuadIrreducible)),
    }
}

fn cubic_ruling(base: LocalField, pi: &WhittakerRep) -> Result<Ruling> {
    match pi.kind() {
        RepKind::SigmaTwist(eta) => {
            let lambda = eta.restrict(base)?;
            if lambda.is_trivial() {
                Ok(Ruling::fixed(
                    1,
                    CaseTag::CubicSigmaTwist,
                    Relevance::FactorsThroughQuotient,
                    vec![rules::CUBIC_SIGMA, rules::CUBIC_STEINBERG],
                ))
            } else {
                Ok(Ruling::fixed(
                    1,
                    CaseTag::CubicSigmaTwist,
                    Relevance::CarriedBySubrepresentation,
                    vec![rules::CUBIC_SIGMA, rules::CUBIC_STEINBERG, rules::CUBIC_EXT],
                ))
            }
        }
        RepKind::SteinbergTwist(eta) => {
            let lambda = eta.restrict(base)?;
            let dim = u8::from(!lambda.is_trivial());
            Ok(Ruling::fixed(
                dim,
                CaseTag::CubicSteinbergTwist,
                Relevance::NotApplicable,
                vec![rules::CUBIC_STEINBERG],
            ))
        }
        _ => Ok(Ruling::by_sign(CaseTag::CubicIrreducible)),
    }
}

/// Sign of `ε(As(Π))ω_A(−1)` from the constructed Asai parameter, or `None`
/// when the parameter is not constructible.
pub fn constructive_sign(input: &GPInput) -> Result<Option<i8>> {
    let w = input.algebra.discriminant_character()?;
    let rho = match asai_parameter(&input.algebra, &input.components) {
        Ok(r) => r,
        Err(Error::Unsupported(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if rho.dim() != 8 {
        return Err(Error::Inconsistency(format!(
            "Asai parameter has dimension {}",
            rho.dim()
        )));
    }
    let eps = match epsilon_wd(&rho, input.psi) {
        Ok(e) => e,
        Err(Error::Unsupported(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let normalized = &eps * &AlgNumber::from_int(minus_one_sign(&w) as i64);
    sign_of(&normalized).map(Some)
}

pub fn decide_period(input: &GPInput) -> Result<PeriodReport> {
    input.validate()?;
    let w = input.algebra.discriminant_character()?;
    let supplied = input.asai_eps_sign.map(|s| s * minus_one_sign(&w));
    let constructive = constructive_sign(input)?;
    if let (Some(c), Some(s)) = (constructive, supplied) {
        if c != s {
            return Err(Error::Validation(
                "supplied ε(As(Π)) disagrees with the computed value".into(),
            ));
        }
    }
    let comps = &input.components;
    let ruling = match input.algebra.shape() {
        AlgebraShape::Split3 => split_ruling(comps),
        AlgebraShape::QuadTimesF(e) => quad_ruling(e, &comps[0], &comps[1], input.psi)?,
        AlgebraShape::CubicField(_) => cubic_ruling(input.algebra.base(), &comps[0])?,
    };
    let known = constructive.or(supplied).or(ruling.sign);
    let dim_h = match ruling.dim_h {
        Some(d) => d,
        None => match known {
            Some(s) => u8::from(s == 1),
            None => {
                return Err(Error::Unsupported(
                    "ε(As(Π)) is not constructible here; supply asai_eps_sign".into(),
                ))
            }
        },
    };
    if let Some(c) = constructive {
        if (c == 1) != (dim_h == 1) {
            return Err(Error::Inconsistency(format!(
                "structural rule gives dim_H = {dim_h} but the constructive ε-sign is {c:+} for {input}"
            )));
        }
    }
    if let (Some(s), Some(_)) = (supplied, ruling.dim_h) {
        if (s == 1) != (dim_h == 1) {
            return Err(Error::Validation(format!(
                "supplied ε(As(Π)) contradicts {}",
                ruling.cites[0]
            )));
        }
    }
    let jl_nonzero = input.jl_nonzero();
    let dim_hprime = 1 - dim_h;
    if dim_hprime == 1 && !jl_nonzero {
        return Err(Error::Inconsistency(format!(
            "dim_H = 0 but the Jacquet–Langlands transfer vanishes for {input}"
        )));
    }
    let eps = if ruling.dim_h.is_some() && known.is_none() {
        // the Main Theorem fixes the sign from the dimension
        Some(if dim_h == 1 { 1 } else { -1 })
    } else {
        known
    };
    let mut citations: Vec<String> = ruling.cites.iter().map(|s| s.to_string()).collect();
    if !jl_nonzero {
        citations.push(rules::JACQUET_LANGLANDS.to_string());
    }
    citations.push(rules::MAIN.to_string());
    Ok(PeriodReport {
        dim_h,
        dim_hprime,
        eps_sign: EpsSign::from_sign(eps),
        constructive_eps: constructive,
        jl_nonzero,
        case_tag: ruling.case,
        citations,
        relevance: ruling.relevance,
    })
}

/// Algebra shapes for enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeChoice {
    Split3,
    QuadUnramified,
    QuadRamified(RamifiedClass),
    CubicUnramified,
}

impl ShapeChoice {
    pub const ALL: [ShapeChoice; 5] = [
        ShapeChoice::Split3,
        ShapeChoice::QuadUnramified,
        ShapeChoice::QuadRamified(RamifiedClass::Square),
        ShapeChoice::QuadRamified(RamifiedClass::NonSquare),
        ShapeChoice::CubicUnramified,
    ];

    pub fn parse(s: &str) -> Result<Vec<Self>> {
        match s.trim() {
            "split3" => Ok(vec![ShapeChoice::Split3]),
            "quad-unram" => Ok(vec![ShapeChoice::QuadUnramified]),
            "quad-ram" => Ok(vec![
                ShapeChoice::QuadRamified(RamifiedClass::Square),
                ShapeChoice::QuadRamified(RamifiedClass::NonSquare),
            ]),
            "quad" => Ok(vec![
                ShapeChoice::QuadUnramified,
                ShapeChoice::QuadRamified(RamifiedClass::Square),
                ShapeChoice::QuadRamified(RamifiedClass::NonSquare),
            ]),
            "cubic-unram" | "cubic" => Ok(vec![ShapeChoice::CubicUnramified]),
            "all" => Ok(Self::ALL.to_vec()),
            other => Err(Error::Validation(format!(
                "unknown shape '{other}' (split3, quad, quad-unram, quad-ram, cubic-unram, all)"
            ))),
        }
    }

    pub fn algebra(self, base: LocalField) -> Result<EtaleCubicAlgebra> {
        match self {
            ShapeChoice::Split3 => Ok(EtaleCubicAlgebra::split(base)),
            ShapeChoice::QuadUnramified => {
                EtaleCubicAlgebra::quad_times_f(Extension::unramified(base, 2)?)
            }
            ShapeChoice::QuadRamified(c) => {
                EtaleCubicAlgebra::quad_times_f(Extension::ramified(base, 2, c)?)
            }
            ShapeChoice::CubicUnramified => {
                EtaleCubicAlgebra::cubic_field(Extension::unramified(base, 3)?, None)
            }
        }
    }
}

/// Enumeration bounds: characters have tame order dividing `tame_order` and
/// values in `unram_values` at the uniformizer.
#[derive(Clone, Debug)]
pub struct Bounds {
    pub shapes: Vec<ShapeChoice>,
    pub tame_order: u64,
    pub unram_values: Vec<i64>,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            shapes: ShapeChoice::ALL.to_vec(),
            tame_order: 2,
            unram_values: vec![1, -1],
        }
    }
}

fn char_menu(field: Field, bounds: &Bounds) -> Vec<MultChar> {
    let m = field.unit_order();
    let mut out = Vec::new();
    for k in 0..m {
        if !(k * bounds.tame_order).is_multiple_of(m) {
            continue;
        }
        for &u in &bounds.unram_values {
            out.push(MultChar::new(field, k as i64, AlgNumber::from_int(u)).unwrap());
        }
    }
    out
}

fn rep_menu(field: Field, bounds: &Bounds, principal: bool) -> Vec<WhittakerRep> {
    let chars = char_menu(field, bounds);
    let mut out = Vec::new();
    for c in &chars {
        out.push(WhittakerRep::sigma_twist(c.clone()));
    }
    for c in &chars {
        out.push(WhittakerRep::steinberg_twist(c.clone()));
    }
    if principal {
        for (i, a) in chars.iter().enumerate() {
            for b in &chars[i..] {
                if let Ok(ps) = WhittakerRep::principal_series(a.clone(), b.clone()) {
                    out.push(ps);
                }
            }
        }
    }
    out
}

/// Every central-trivial Whittaker-type `Π` within `bounds`, in a fixed order.
pub fn enumerate_cases(base: LocalField, bounds: &Bounds) -> Result<Vec<GPInput>> {
    let mut out = Vec::new();
    for &shape in &bounds.shapes {
        let algebra = shape.algebra(base)?;
        let candidates: Vec<Vec<WhittakerRep>> = match algebra.shape() {
            AlgebraShape::Split3 => {
                let reps = rep_menu(base.into(), bounds, true);
                let mut v = Vec::new();
                for i in 0..reps.len() {
                    for j in i..reps.len() {
                        for k in j..reps.len() {
                            v.push(vec![reps[i].clone(), reps[j].clone(), reps[k].clone()]);
                        }
                    }
                }
                v
            }
            AlgebraShape::QuadTimesF(e) => {
                let pis = rep_menu(e.into(), bounds, true);
                let sigmas = rep_menu(base.into(), bounds, true);
                let mut v = Vec::new();
                for p in &pis {
                    for s in &sigmas {
                        v.push(vec![p.clone(), s.clone()]);
                    }
                }
                v
            }
            AlgebraShape::CubicField(k) => rep_menu(k.into(), bounds, false)
                .into_iter()
                .map(|p| vec![p])
                .collect(),
        };
        for comps in candidates {
            if let Ok(input) = GPInput::new(algebra.clone(), comps) {
                out.push(input);
            }
        }
    }
    Ok(out)
}

/// Decides every input in parallel, preserving order.
pub fn decide_all(inputs: &[GPInput]) -> Vec<Result<PeriodReport>> {
    inputs.par_iter().map(decide_period).collect()
}
