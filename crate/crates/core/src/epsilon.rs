//! Exact Langlands–Deligne ε-factors for tame data.
//!
//! The additive character `ψ` of `F` has level 0 (trivial on `O_F`, not on
//! `p^{-1}`), and on an extension `ψ_L = ψ ∘ Tr_{L/F}` has level `e - 1`.
//! For a character `χ` of `L^×` with conductor `a` and `n = n(ψ_L)`:
//!
//! ```text
//! ε(χ) = χ(ϖ)^n                                   a = 0
//! ε(χ) = χ(ϖ)^{n+1} q_L^{-1/2} Σ_x χ̄^{-1}(x) ψ̄_L(x)    a = 1
//! ```
//!
//! where `ψ̄_L(x) = ψ(ϖ^{-n-1} x)` on Teichmüller lifts.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::cyclo::AlgNumber;
use crate::error::{Error, Result};
use crate::localfield::{quadratic_character, Extension, ExtensionKind, Field, MultChar};
use crate::weildeligne::{Atom, WDRep};

/// Level `n(ψ)` of the fixed additive character of `F`. Only 0 is supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct AdditiveCharLevel {
    pub level: u32,
}

impl AdditiveCharLevel {
    pub fn new(level: u32) -> Result<Self> {
        if level != 0 {
            return Err(Error::Unsupported(format!(
                "additive character level {level}; only level 0 is supported"
            )));
        }
        Ok(AdditiveCharLevel { level })
    }

    /// `n(ψ_L)`.
    pub fn on(&self, field: Field) -> u32 {
        self.level + field.psi_level()
    }
}

/// `(a, t)` such that `ψ̄_L(g^j) = ζ_p^{a·Tr(g^{j+t})}`.
fn residue_additive(field: Field) -> (u64, i64) {
    match field {
        Field::Base(_) => (1, 0),
        Field::Ext(e) => match e.kind() {
            ExtensionKind::Unramified => (1, 0),
            // ψ_E(ϖ_E^{-2} t) = ψ(Tr(t/(cϖ_F))) = ψ(e·t/(cϖ_F))
            ExtensionKind::Ramified(class) => {
                let log_c = match class {
                    crate::localfield::RamifiedClass::Square => 0,
                    crate::localfield::RamifiedClass::NonSquare => 1,
                };
                (e.degree() as u64 % e.base().p(), -log_c)
            }
        },
    }
}

type GaussKey = (Field, u64);

fn gauss_cache() -> &'static Mutex<HashMap<GaussKey, AlgNumber>> {
    static CACHE: OnceLock<Mutex<HashMap<GaussKey, AlgNumber>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Σ_{x ∈ k_L^×} χ̄(x) ψ̄_L(x)` for the residue character `χ̄(g^j) = ζ_{q_L-1}^{kj}`.
pub fn gauss_sum(field: Field, k: i64) -> Result<AlgNumber> {
    let m = field.unit_order();
    let k = k.rem_euclid(m as i64) as u64;
    if let Some(g) = gauss_cache().lock().unwrap().get(&(field, k)) {
        return Ok(g.clone());
    }
    let residue = field.residue_field()?;
    let p = field.p();
    let level = num_integer::lcm(m, p);
    let level32 = u32::try_from(level)
        .map_err(|_| Error::Unsupported(format!("cyclotomic level {level} is too large")))?;
    let (a, t) = residue_additive(field);
    let (sm, sp) = (level / m, level / p);
    let mut dense = vec![0i64; level as usize];
    for j in 0..m {
        let tr = residue.trace_of_power((j as i64 + t).rem_euclid(m as i64) as u64);
        let e = (k * j % m) * sm + (a * tr % p) * sp;
        dense[(e % level) as usize] += 1;
    }
    let g = AlgNumber::from_dense(&dense, level32);
    gauss_cache()
        .lock()
        .unwrap()
        .insert((field, k), g.clone());
    Ok(g)
}

/// `ε(χ, ψ_L)` for a tame character.
pub fn epsilon_character(chi: &MultChar, psi: AdditiveCharLevel) -> Result<AlgNumber> {
    let field = chi.field();
    let n = psi.on(field) as i64;
    let u = chi.unram_value();
    if chi.is_unramified() {
        return Ok(u.pow(n));
    }
    let g = gauss_sum(field, -(chi.tame_exponent() as i64))?;
    Ok(&(&u.pow(n + 1) * &field.sqrt_q_pow(-1)) * &g)
}

/// `ε(χ ⊗ sp(n))`: the semisimple part times `det(-Frob | V^I / V_N^I)` at
/// the central point.
fn epsilon_char_sp(chi: &MultChar, n: u32, psi: AdditiveCharLevel) -> Result<AlgNumber> {
    let mut eps = epsilon_character(chi, psi)?.pow(n as i64);
    if chi.is_unramified() {
        eps = &eps * &(-chi.unram_value().clone()).pow(n as i64 - 1);
    }
    Ok(eps)
}

/// `λ(L/F, ψ) = ε(Ind_L^F 1) / ε_L(1)`.
pub fn lambda_factor(ext: Extension, psi: AdditiveCharLevel) -> Result<AlgNumber> {
    match (ext.degree(), ext.kind()) {
        (_, ExtensionKind::Unramified) => Ok(AlgNumber::one()),
        (2, _) => epsilon_character(&quadratic_character(ext)?, psi),
        _ => Err(Error::Unsupported(
            "λ-factor of a ramified cubic extension".into(),
        )),
    }
}

/// `ε(ρ, ψ)` for a Weil–Deligne representation.
pub fn epsilon_wd(rho: &WDRep, psi: AdditiveCharLevel) -> Result<AlgNumber> {
    let mut acc = AlgNumber::one();
    for atom in rho.atoms() {
        let e = match atom {
            Atom::CharSp { chi, n } => epsilon_char_sp(chi, *n, psi)?,
            Atom::Induced { ext, chi, n } => {
                let lam = lambda_factor(*ext, psi)?;
                &lam.pow(*n as i64) * &epsilon_char_sp(chi, *n, psi)?
            }
            Atom::Opaque(o) => match o.eps_sign {
                Some(s) => AlgNumber::from_int(s as i64),
                None => {
                    return Err(Error::Unsupported(format!(
                        "supply supercuspidal ε data for {}",
                        o.label
                    )))
                }
            },
        };
        acc = &acc * &e;
    }
    Ok(acc)
}

/// `+1` or `-1`, after checking that `x` is exactly one of them.
pub fn epsilon_sign(x: &AlgNumber) -> Result<i8> {
    x.to_sign().ok_or_else(|| {
        Error::Inconsistency(format!("ε value {x} is not self-dual-normalized"))
    })
}
