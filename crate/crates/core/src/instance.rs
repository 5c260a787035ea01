//! JSON instance documents.
//!
//! ```json
//! {
//!   "field": {"p": 5, "f": 1},
//!   "algebra": {"shape": "quad_times_f", "extension": "unramified"},
//!   "components": [
//!     {"kind": "sigma"},
//!     {"kind": "steinberg", "chi": {"k": 0, "u": "1"}}
//!   ],
//!   "psi_level": 0
//! }
//! ```
//!
//! Character values `u` accept an integer or the textual syntax of
//! [`AlgNumber::parse`], e.g. `"-1"`, `"zeta(1/3)"`, `"sqrt(5)^-1"`.

use serde::{Deserialize, Serialize};

use crate::cyclo::AlgNumber;
use crate::decider::GPInput;
use crate::epsilon::AdditiveCharLevel;
use crate::error::{Error, Result};
use crate::langlands::{SupercuspidalData, WhittakerRep};
use crate::localfield::{
    tame_cubic_resolvent, EtaleCubicAlgebra, Extension, Field, LocalField, MultChar,
    RamifiedClass,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub p: u64,
    #[serde(default = "one")]
    pub f: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeDoc {
    Split3,
    QuadTimesF,
    CubicField,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionDoc {
    Unramified,
    Ramified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub shape: ShapeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<ExtensionDoc>,
    /// `ϖ_L^e = c·ϖ_F` with `c = 1` (`square`) or a non-square unit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<RamifiedClass>,
    /// Discriminant character of a non-Galois cubic field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolvent: Option<CharDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberDoc {
    Int(i64),
    Text(String),
}

impl NumberDoc {
    fn value(&self) -> Result<AlgNumber> {
        match self {
            NumberDoc::Int(n) => Ok(AlgNumber::from_int(*n)),
            NumberDoc::Text(s) => AlgNumber::parse(s),
        }
    }
}

/// `χ(g) = ζ_{q_L-1}^k`, `χ(ϖ_L) = u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharDoc {
    #[serde(default)]
    pub k: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<NumberDoc>,
    /// Conductor exponent; only tame characters (0 or 1) are supported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conductor: Option<u32>,
}

impl CharDoc {
    pub fn build(&self, field: Field) -> Result<MultChar> {
        if let Some(c) = self.conductor {
            if c > 1 {
                return Err(Error::Unsupported(format!(
                    "wild character of conductor exponent {c}"
                )));
            }
            if (c == 0) != (self.k.rem_euclid(field.unit_order() as i64) == 0) {
                return Err(Error::Validation(format!(
                    "conductor {c} does not match tame exponent {}",
                    self.k
                )));
            }
        }
        let u = match &self.u {
            Some(n) => n.value()?,
            None => AlgNumber::one(),
        };
        MultChar::new(field, self.k, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComponentDoc {
    PrincipalSeries {
        alpha: CharDoc,
        beta: CharDoc,
    },
    Sigma {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chi: Option<CharDoc>,
    },
    Steinberg {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chi: Option<CharDoc>,
    },
    Supercuspidal {
        label: String,
        dim: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        det: Option<CharDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eps_sign: Option<i8>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        twisted_eps_sign: Option<i8>,
    },
}

impl ComponentDoc {
    pub fn build(&self, field: Field) -> Result<WhittakerRep> {
        let chi = |c: &Option<CharDoc>| match c {
            Some(c) => c.build(field),
            None => Ok(MultChar::trivial(field)),
        };
        match self {
            ComponentDoc::PrincipalSeries { alpha, beta } => {
                WhittakerRep::principal_series(alpha.build(field)?, beta.build(field)?)
            }
            ComponentDoc::Sigma { chi: c } => Ok(WhittakerRep::sigma_twist(chi(c)?)),
            ComponentDoc::Steinberg { chi: c } => Ok(WhittakerRep::steinberg_twist(chi(c)?)),
            ComponentDoc::Supercuspidal {
                label,
                dim,
                det,
                eps_sign,
                twisted_eps_sign,
            } => WhittakerRep::supercuspidal(
                field,
                SupercuspidalData {
                    label: label.clone(),
                    dim: *dim,
                    det: det.as_ref().map(|d| d.build(field)).transpose()?,
                    eps_sign: *eps_sign,
                    twisted_eps_sign: *twisted_eps_sign,
                },
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub field: FieldDoc,
    pub algebra: AlgebraDoc,
    pub components: Vec<ComponentDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_level: Option<u32>,
    /// `ε(As(Π))`, for inputs whose Asai parameter is not constructible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub asai_eps_sign: Option<i8>,
}

impl InstanceDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Validation(format!("schema: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance documents serialize")
    }

    fn extension(&self, base: LocalField, degree: u32) -> Result<Extension> {
        let a = &self.algebra;
        match a.extension {
            Some(ExtensionDoc::Unramified) => {
                if a.presentation.is_some() {
                    return Err(Error::Validation(
                        "presentation is only meaningful for ramified extensions".into(),
                    ));
                }
                Extension::unramified(base, degree)
            }
            Some(ExtensionDoc::Ramified) => match a.presentation {
                Some(class) => Extension::ramified(base, degree, class),
                None => Err(Error::Validation(
                    "ramified extension needs a presentation (square or non_square)".into(),
                )),
            },
            None => Err(Error::Validation("algebra needs an extension kind".into())),
        }
    }

    pub fn algebra(&self) -> Result<EtaleCubicAlgebra> {
        let base = LocalField::new(self.field.p, self.field.f)?;
        match self.algebra.shape {
            ShapeDoc::Split3 => {
                if self.algebra.extension.is_some() {
                    return Err(Error::Validation("split algebra takes no extension".into()));
                }
                Ok(EtaleCubicAlgebra::split(base))
            }
            ShapeDoc::QuadTimesF => EtaleCubicAlgebra::quad_times_f(self.extension(base, 2)?),
            ShapeDoc::CubicField => {
                let k = self.extension(base, 3)?;
                let resolvent = match (&self.algebra.resolvent, k.is_galois()) {
                    (Some(r), _) => Some(r.build(base.into())?),
                    (None, true) => None,
                    (None, false) => Some(tame_cubic_resolvent(k)?),
                };
                EtaleCubicAlgebra::cubic_field(k, resolvent)
            }
        }
    }

    pub fn to_input(&self) -> Result<GPInput> {
        if let Some(l) = self.psi_level {
            AdditiveCharLevel::new(l)?;
        }
        let algebra = self.algebra()?;
        let fields: Vec<Field> = match algebra.shape() {
            crate::localfield::AlgebraShape::Split3 => vec![algebra.base().into(); 3],
            crate::localfield::AlgebraShape::QuadTimesF(e) => vec![e.into(), algebra.base().into()],
            crate::localfield::AlgebraShape::CubicField(k) => vec![k.into()],
        };
        if fields.len() != self.components.len() {
            return Err(Error::Validation(format!(
                "expected {} components, found {}",
                fields.len(),
                self.components.len()
            )));
        }
        let comps = self
            .components
            .iter()
            .zip(fields)
            .map(|(c, f)| c.build(f))
            .collect::<Result<Vec<_>>>()?;
        let input = GPInput::new(algebra, comps)?;
        match self.asai_eps_sign {
            Some(s) => input.with_asai_eps_sign(s),
            None => Ok(input),
        }
    }
}
