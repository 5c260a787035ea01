//! Asai (multiplicative induction) parameters over cubic étale algebras.

use crate::cyclo::AlgNumber;
use crate::error::{Error, Result};
use crate::localfield::{
    quadratic_character, AlgebraShape, EtaleCubicAlgebra, Extension, Field, MultChar,
};
use crate::langlands::{RepKind, WhittakerRep};
use crate::weildeligne::{sp_product, Atom, WDRep};

/// `As_{E/F}(sp(m)) = ⊕_k ω^k ⊗ sp(2m-1-2k)`.
fn asai_sp(ext: Extension, m: u32) -> Result<Vec<Atom>> {
    let base = ext.base();
    let w = quadratic_character(ext)?;
    Ok(sp_product(m, m)
        .into_iter()
        .enumerate()
        .map(|(k, n)| Atom::CharSp {
            chi: if k % 2 == 0 { MultChar::trivial(base) } else { w.clone() },
            n,
        })
        .collect())
}

fn conjugate_atom(atom: &Atom) -> Result<Atom> {
    match atom {
        Atom::CharSp { chi, n } => Ok(Atom::CharSp {
            chi: chi.conjugate()?,
            n: *n,
        }),
        _ => Err(structural(atom)),
    }
}

fn structural(atom: &Atom) -> Error {
    match atom {
        Atom::Opaque(o) => Error::Unsupported(format!(
            "Asai of opaque parameter {} is not constructible; structural path required",
            o.label
        )),
        _ => Error::Unsupported("Asai of an induced parameter over E".into()),
    }
}

/// `As_{E/F}(ρ)` for a parameter `ρ` of `W_E` built from characters:
/// `As(V ⊕ W) = As(V) ⊕ As(W) ⊕ Ind(V ⊗ W^c)` and
/// `As(χ ⊗ sp(m)) = χ|_F ⊗ As(sp(m))`.
pub fn quadratic_asai(ext: Extension, rho: &WDRep) -> Result<WDRep> {
    if ext.degree() != 2 || rho.field() != Field::Ext(ext) {
        return Err(Error::Validation(
            "quadratic Asai needs a parameter of W_E for a quadratic E".into(),
        ));
    }
    let base = ext.base();
    let atoms = rho.atoms();
    let mut out = Vec::new();
    for (i, a) in atoms.iter().enumerate() {
        let (chi, m) = match a {
            Atom::CharSp { chi, n } => (chi, *n),
            other => return Err(structural(other)),
        };
        let r = chi.restrict(base)?;
        for atom in asai_sp(ext, m)? {
            if let Atom::CharSp { chi: c, n } = atom {
                out.push(Atom::CharSp { chi: c.mul(&r), n });
            }
        }
        for b in &atoms[i + 1..] {
            let (mu, n) = match conjugate_atom(b)? {
                Atom::CharSp { chi, n } => (chi, n),
                _ => unreachable!(),
            };
            for k in sp_product(m, n) {
                out.push(Atom::Induced {
                    ext,
                    chi: chi.mul(&mu),
                    n: k,
                });
            }
        }
    }
    WDRep::from_atoms(base, out)
}

/// `As_{K/F}(π)` for `K/F` unramified cubic and `π` a Σ- or Steinberg twist.
pub fn cubic_asai(ext: Extension, pi: &WhittakerRep) -> Result<WDRep> {
    if ext.degree() != 3 || !ext.is_unramified() {
        return Err(Error::Unsupported(
            "constructive cubic Asai is only available for unramified K".into(),
        ));
    }
    if pi.field() != Field::Ext(ext) {
        return Err(Error::Validation("π must be a representation of GL_2(K)".into()));
    }
    let base = ext.base();
    let nu = MultChar::unramified(base, AlgNumber::root_of_unity(1, 3));
    let nus = [MultChar::trivial(base), nu.clone(), nu.pow(2)];
    let (eta, atoms) = match pi.kind() {
        RepKind::SigmaTwist(eta) => {
            let mut atoms = vec![
                Atom::CharSp {
                    chi: MultChar::abs_power(base, 3),
                    n: 1,
                },
                Atom::CharSp {
                    chi: MultChar::abs_power(base, -3),
                    n: 1,
                },
            ];
            for s in [1, -1] {
                for v in &nus {
                    atoms.push(Atom::CharSp {
                        chi: v.twist_abs(s),
                        n: 1,
                    });
                }
            }
            (eta, atoms)
        }
        RepKind::SteinbergTwist(eta) => (
            eta,
            vec![
                Atom::CharSp {
                    chi: MultChar::trivial(base),
                    n: 4,
                },
                Atom::CharSp { chi: nus[1].clone(), n: 2 },
                Atom::CharSp { chi: nus[2].clone(), n: 2 },
            ],
        ),
        _ => {
            return Err(Error::Unsupported(
                "cubic Asai of principal series or supercuspidal parameters; supply the ε sign"
                    .into(),
            ))
        }
    };
    WDRep::from_atoms(base, atoms)?.twist(&eta.restrict(base)?)
}

/// The 8-dimensional Asai parameter `As(Π)` over `F`.
pub fn asai_parameter(algebra: &EtaleCubicAlgebra, components: &[WhittakerRep]) -> Result<WDRep> {
    let base = algebra.base();
    match algebra.shape() {
        AlgebraShape::Split3 => {
            check_fields(components, &[Field::Base(base); 3])?;
            let mut acc = components[0].langlands_parameter()?;
            for pi in &components[1..] {
                acc = acc.tensor(&pi.langlands_parameter()?)?;
            }
            Ok(acc)
        }
        AlgebraShape::QuadTimesF(e) => {
            check_fields(components, &[Field::Ext(e), Field::Base(base)])?;
            let as_pi = quadratic_asai(e, &components[0].langlands_parameter()?)?;
            as_pi.tensor(&components[1].langlands_parameter()?)
        }
        AlgebraShape::CubicField(k) => {
            check_fields(components, &[Field::Ext(k)])?;
            cubic_asai(k, &components[0])
        }
    }
}

pub(crate) fn check_fields(components: &[WhittakerRep], expected: &[Field]) -> Result<()> {
    if components.len() != expected.len() {
        return Err(Error::Validation(format!(
            "expected {} components, found {}",
            expected.len(),
            components.len()
        )));
    }
    for (pi, f) in components.iter().zip(expected) {
        if pi.field() != *f {
            return Err(Error::Validation(format!(
                "component {pi} lives on {}, expected {f}",
                pi.field()
            )));
        }
    }
    Ok(())
}
