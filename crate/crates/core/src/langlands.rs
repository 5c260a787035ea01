//! Whittaker-type representations of `GL_2(L)` and their parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::localfield::{Field, MultChar};
use crate::weildeligne::{OpaqueParam, WDRep};

/// Invariants of a supercuspidal representation, supplied by the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupercuspidalData {
    pub label: String,
    pub dim: u32,
    /// Central character, equal to the determinant of the parameter.
    pub det: Option<MultChar>,
    /// `ε(ρ)`.
    pub eps_sign: Option<i8>,
    /// `ε(ρ ⊗ ω_{E/F})` for the quadratic extension of the algebra, when the
    /// representation lives on `F` and the algebra is `E × F`.
    pub twisted_eps_sign: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepKind {
    PrincipalSeries { alpha: MultChar, beta: MultChar },
    /// `Σ_L ⊗ χ`.
    SigmaTwist(MultChar),
    /// `St_L ⊗ χ`.
    SteinbergTwist(MultChar),
    Supercuspidal(SupercuspidalData),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerRep {
    field: Field,
    kind: RepKind,
}

impl WhittakerRep {
    /// The irreducible principal series `I(α, β)`.
    pub fn principal_series(alpha: MultChar, beta: MultChar) -> Result<Self> {
        let field = alpha.field();
        if beta.field() != field {
            return Err(Error::Validation(
                "principal series characters live on different fields".into(),
            ));
        }
        let ratio = alpha.mul(&beta.inv());
        for s in [2, -2] {
            if ratio == MultChar::abs_power(field, s) {
                return Err(Error::Validation(
                    "α/β = |·|^{±1}: the principal series is reducible".into(),
                ));
            }
        }
        Ok(WhittakerRep {
            field,
            kind: RepKind::PrincipalSeries { alpha, beta },
        })
    }

    pub fn sigma_twist(chi: MultChar) -> Self {
        WhittakerRep {
            field: chi.field(),
            kind: RepKind::SigmaTwist(chi),
        }
    }

    pub fn sigma(field: impl Into<Field>) -> Self {
        Self::sigma_twist(MultChar::trivial(field))
    }

    pub fn steinberg_twist(chi: MultChar) -> Self {
        WhittakerRep {
            field: chi.field(),
            kind: RepKind::SteinbergTwist(chi),
        }
    }

    pub fn steinberg(field: impl Into<Field>) -> Self {
        Self::steinberg_twist(MultChar::trivial(field))
    }

    pub fn supercuspidal(field: impl Into<Field>, data: SupercuspidalData) -> Result<Self> {
        let field = field.into();
        if data.dim != 2 {
            return Err(Error::Validation(format!(
                "supercuspidal parameter of GL_2 has dimension 2, not {}",
                data.dim
            )));
        }
        if let Some(d) = &data.det {
            if d.field() != field {
                return Err(Error::Validation(
                    "supercuspidal central character on the wrong field".into(),
                ));
            }
        }
        for s in [data.eps_sign, data.twisted_eps_sign].into_iter().flatten() {
            if s != 1 && s != -1 {
                return Err(Error::Validation(format!("ε sign {s} is not ±1")));
            }
        }
        Ok(WhittakerRep {
            field,
            kind: RepKind::Supercuspidal(data),
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn kind(&self) -> &RepKind {
        &self.kind
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self.kind, RepKind::SigmaTwist(_))
    }

    pub fn is_discrete_series(&self) -> bool {
        matches!(
            self.kind,
            RepKind::SteinbergTwist(_) | RepKind::Supercuspidal(_)
        )
    }

    /// Existence of the Jacquet–Langlands transfer to `D^×`.
    pub fn jl_exists(&self) -> bool {
        self.is_discrete_series()
    }

    /// `π ⊗ (χ ∘ det)`.
    pub fn twist(&self, chi: &MultChar) -> Result<Self> {
        match &self.kind {
            RepKind::PrincipalSeries { alpha, beta } => {
                Self::principal_series(alpha.try_mul(chi)?, beta.try_mul(chi)?)
            }
            RepKind::SigmaTwist(x) => Ok(Self::sigma_twist(x.try_mul(chi)?)),
            RepKind::SteinbergTwist(x) => Ok(Self::steinberg_twist(x.try_mul(chi)?)),
            RepKind::Supercuspidal(d) => Err(Error::Unsupported(format!(
                "twisting supercuspidal {} needs new ε data",
                d.label
            ))),
        }
    }

    pub fn langlands_parameter(&self) -> Result<WDRep> {
        match &self.kind {
            RepKind::PrincipalSeries { alpha, beta } => {
                WDRep::character(alpha.clone())?.direct_sum(&WDRep::character(beta.clone())?)
            }
            RepKind::SigmaTwist(chi) => WDRep::character(chi.twist_abs(1))?
                .direct_sum(&WDRep::character(chi.twist_abs(-1))?),
            RepKind::SteinbergTwist(chi) => WDRep::char_sp(chi.clone(), 2),
            RepKind::Supercuspidal(d) => WDRep::opaque(
                self.field,
                OpaqueParam {
                    label: d.label.clone(),
                    dim: d.dim,
                    det: d.det.clone(),
                    eps_sign: d.eps_sign,
                },
            ),
        }
    }

    pub fn central_character(&self) -> Result<MultChar> {
        match &self.kind {
            RepKind::PrincipalSeries { alpha, beta } => Ok(alpha.mul(beta)),
            RepKind::SigmaTwist(chi) | RepKind::SteinbergTwist(chi) => Ok(chi.pow(2)),
            RepKind::Supercuspidal(d) => d.det.clone().ok_or_else(|| {
                Error::Unsupported(format!(
                    "central character of supercuspidal {} was not supplied",
                    d.label
                ))
            }),
        }
    }

    /// The twisting character of a Σ- or Steinberg twist.
    pub fn twisting_character(&self) -> Option<&MultChar> {
        match &self.kind {
            RepKind::SigmaTwist(c) | RepKind::SteinbergTwist(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for WhittakerRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tw = |f: &mut fmt::Formatter<'_>, name: &str, c: &MultChar| {
            if c.is_trivial() {
                write!(f, "{name}")
            } else {
                write!(f, "{name}⊗{c}")
            }
        };
        match &self.kind {
            RepKind::PrincipalSeries { alpha, beta } => write!(f, "I({alpha}, {beta})"),
            RepKind::SigmaTwist(c) => tw(f, "Σ", c),
            RepKind::SteinbergTwist(c) => tw(f, "St", c),
            RepKind::Supercuspidal(d) => write!(f, "sc[{}]", d.label),
        }
    }
}
