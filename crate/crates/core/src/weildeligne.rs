//! Frobenius-semisimple Weil–Deligne representations as formal sums of atoms.

use std::fmt;

use crate::cyclo::AlgNumber;
use crate::error::{Error, Result};
use crate::localfield::{quadratic_character, Extension, ExtensionKind, Field, MultChar};

/// Data for an irreducible parameter we do not construct (supercuspidal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpaqueParam {
    pub label: String,
    pub dim: u32,
    pub det: Option<MultChar>,
    pub eps_sign: Option<i8>,
}

/// One summand of a [`WDRep`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `χ ⊗ sp(n)`.
    CharSp { chi: MultChar, n: u32 },
    /// `Ind_{W_E}^{W_F}(χ) ⊗ sp(n)` for a quadratic extension `E`.
    Induced { ext: Extension, chi: MultChar, n: u32 },
    Opaque(OpaqueParam),
}

impl Atom {
    pub fn dim(&self) -> u32 {
        match self {
            Atom::CharSp { n, .. } => *n,
            Atom::Induced { ext, n, .. } => ext.degree() * n,
            Atom::Opaque(o) => o.dim,
        }
    }

    fn sort_key(&self) -> (u8, u32, String) {
        match self {
            Atom::CharSp { chi, n } => (0, u32::MAX - n, chi.to_string()),
            Atom::Induced { ext, chi, n } => (1, u32::MAX - n, format!("{ext}{chi}")),
            Atom::Opaque(o) => (2, o.dim, o.label.clone()),
        }
    }
}

/// Clebsch–Gordan: `sp(m) ⊗ sp(n) = ⊕_{k<min(m,n)} sp(m+n-1-2k)`.
pub fn sp_product(m: u32, n: u32) -> Vec<u32> {
    (0..m.min(n)).map(|k| m + n - 1 - 2 * k).collect()
}

/// A Weil–Deligne representation of `W_F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WDRep {
    field: Field,
    atoms: Vec<Atom>,
}

impl WDRep {
    pub fn zero(field: impl Into<Field>) -> Self {
        WDRep {
            field: field.into(),
            atoms: Vec::new(),
        }
    }

    pub fn from_atoms(field: impl Into<Field>, atoms: Vec<Atom>) -> Result<Self> {
        let mut rep = Self::zero(field);
        for a in atoms {
            rep.push(a)?;
        }
        Ok(rep)
    }

    fn push(&mut self, atom: Atom) -> Result<()> {
        match &atom {
            Atom::CharSp { chi, n } => {
                if chi.field() != self.field {
                    return Err(Error::Validation(format!(
                        "character on {} in a representation of the Weil group of {}",
                        chi.field(),
                        self.field
                    )));
                }
                if *n == 0 {
                    return Err(Error::Validation("sp(0) is not a representation".into()));
                }
            }
            Atom::Induced { ext, chi, n } => {
                if Field::Base(ext.base()) != self.field || ext.degree() != 2 {
                    return Err(Error::Validation(
                        "induced atoms need a quadratic extension of the base".into(),
                    ));
                }
                if chi.field() != Field::Ext(*ext) {
                    return Err(Error::Validation(
                        "induced character must live on the extension".into(),
                    ));
                }
                if *n == 0 {
                    return Err(Error::Validation("sp(0) is not a representation".into()));
                }
            }
            Atom::Opaque(o) => {
                if o.dim < 2 {
                    return Err(Error::Validation("opaque atoms have dimension ≥ 2".into()));
                }
            }
        }
        let key = atom.sort_key();
        let pos = self.atoms.partition_point(|a| a.sort_key() <= key);
        self.atoms.insert(pos, atom);
        Ok(())
    }

    pub fn character(chi: MultChar) -> Result<Self> {
        Self::char_sp(chi, 1)
    }

    pub fn char_sp(chi: MultChar, n: u32) -> Result<Self> {
        Self::from_atoms(chi.field(), vec![Atom::CharSp { chi, n }])
    }

    /// `sp(n)`.
    pub fn sp(n: u32, field: impl Into<Field>) -> Result<Self> {
        Self::char_sp(MultChar::trivial(field), n)
    }

    pub fn induced(ext: Extension, chi: MultChar, n: u32) -> Result<Self> {
        Self::from_atoms(ext.base(), vec![Atom::Induced { ext, chi, n }])
    }

    pub fn opaque(field: impl Into<Field>, param: OpaqueParam) -> Result<Self> {
        Self::from_atoms(field, vec![Atom::Opaque(param)])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn dim(&self) -> u32 {
        self.atoms.iter().map(Atom::dim).sum()
    }

    pub fn has_opaque(&self) -> bool {
        self.atoms.iter().any(|a| matches!(a, Atom::Opaque(_)))
    }

    pub fn has_monodromy(&self) -> bool {
        self.atoms.iter().any(|a| match a {
            Atom::CharSp { n, .. } | Atom::Induced { n, .. } => *n > 1,
            Atom::Opaque(_) => false,
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::Validation("direct sum over different fields".into()));
        }
        let mut out = self.clone();
        for a in &other.atoms {
            out.push(a.clone())?;
        }
        Ok(out)
    }

    /// `ρ ⊗ χ`.
    pub fn twist(&self, chi: &MultChar) -> Result<Self> {
        self.tensor(&Self::character(chi.clone())?)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::Validation("tensor product over different fields".into()));
        }
        let mut out = Self::zero(self.field);
        for a in &self.atoms {
            for b in &other.atoms {
                for atom in tensor_atoms(a, b)? {
                    out.push(atom)?;
                }
            }
        }
        Ok(out)
    }

    pub fn dual(&self) -> Self {
        let atoms = self
            .atoms
            .iter()
            .map(|a| match a {
                Atom::CharSp { chi, n } => Atom::CharSp {
                    chi: chi.inv(),
                    n: *n,
                },
                Atom::Induced { ext, chi, n } => Atom::Induced {
                    ext: *ext,
                    chi: chi.inv(),
                    n: *n,
                },
                Atom::Opaque(o) => {
                    // ε(ρ^∨) = det ρ(-1) / ε(ρ)
                    let eps_sign = match (&o.det, o.eps_sign) {
                        (Some(d), Some(e)) => d.at_minus_one().to_sign().map(|s| s * e),
                        _ => None,
                    };
                    let label = match o.label.strip_suffix('∨') {
                        Some(l) => l.to_string(),
                        None => format!("{}∨", o.label),
                    };
                    Atom::Opaque(OpaqueParam {
                        label,
                        dim: o.dim,
                        det: o.det.as_ref().map(MultChar::inv),
                        eps_sign,
                    })
                }
            })
            .collect();
        Self::from_atoms(self.field, atoms).expect("dual preserves validity")
    }

    pub fn det(&self) -> Result<MultChar> {
        let mut acc = MultChar::trivial(self.field);
        for a in &self.atoms {
            let d = match a {
                Atom::CharSp { chi, n } => chi.pow(*n as i64),
                Atom::Induced { ext, chi, n } => {
                    let w = quadratic_character(*ext)?;
                    w.mul(&chi.restrict(ext.base())?).pow(*n as i64)
                }
                Atom::Opaque(o) => o.det.clone().ok_or_else(|| {
                    Error::Unsupported(format!(
                        "determinant of opaque parameter {} was not supplied",
                        o.label
                    ))
                })?,
            };
            acc = acc.mul(&d);
        }
        Ok(acc)
    }

    /// Replaces every conjugation-invariant induced atom `Ind(μ∘Nm)` by
    /// `μ ⊕ μω_{E/F}`.
    pub fn expand(&self) -> Result<Self> {
        let mut out = Self::zero(self.field);
        for a in &self.atoms {
            match a {
                Atom::Induced { ext, chi, n } if chi.conjugate()? == *chi => {
                    let mu = norm_descent(chi, *ext)?;
                    let w = quadratic_character(*ext)?;
                    out.push(Atom::CharSp {
                        chi: mu.mul(&w),
                        n: *n,
                    })?;
                    out.push(Atom::CharSp { chi: mu, n: *n })?;
                }
                other => out.push(other.clone())?,
            }
        }
        Ok(out)
    }

    /// Isomorphism of representations (after expansion).
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        if self.field != other.field || self.dim() != other.dim() {
            return Ok(false);
        }
        let a = self.expand()?;
        let b = other.expand()?;
        let mut pool: Vec<Option<&Atom>> = b.atoms.iter().map(Some).collect();
        for x in &a.atoms {
            let hit = pool
                .iter()
                .position(|y| y.is_some_and(|y| atoms_isomorphic(x, y)));
            match hit {
                Some(i) => pool[i] = None,
                None => return Ok(false),
            }
        }
        Ok(pool.iter().all(Option::is_none))
    }

    /// `det(1 - Frob·X | (V^I)^{N=0})`, low degree first, with `X = q^{-s}`.
    pub fn l_polynomial(&self) -> Result<Vec<AlgNumber>> {
        let mut poly = vec![AlgNumber::one()];
        let expanded = self.expand()?;
        for a in &expanded.atoms {
            match a {
                Atom::CharSp { chi, n } if chi.is_unramified() => {
                    let root = chi.unram_value() * &self.q_half_pow(1 - *n as i64);
                    poly = poly_mul(&poly, &[AlgNumber::one(), -root]);
                }
                Atom::Opaque(o) => {
                    return Err(Error::Unsupported(format!(
                        "L-factor of opaque parameter {}",
                        o.label
                    )))
                }
                // ramified characters and irreducible induced atoms have no
                // inertia invariants
                _ => {}
            }
        }
        Ok(poly)
    }

    /// Frobenius eigenvalues of the semisimplification, for atoms built from
    /// characters. Induced atoms contribute `±√(χ(ϖ_E))` times the weights
    /// when `E` is unramified.
    pub fn frobenius_eigenvalues(&self) -> Result<Vec<AlgNumber>> {
        let mut out = Vec::new();
        for a in &self.atoms {
            match a {
                Atom::CharSp { chi, n } => {
                    for i in 0..*n as i64 {
                        out.push(chi.unram_value() * &self.q_half_pow(1 - *n as i64 + 2 * i));
                    }
                }
                Atom::Induced { ext, chi, n } if ext.is_unramified() => {
                    let r = chi.unram_value().sqrt(Some(self.field.p())).ok_or_else(|| {
                        Error::Unsupported("no exact square root for Frobenius".into())
                    })?;
                    for i in 0..*n as i64 {
                        let w = self.q_half_pow(1 - *n as i64 + 2 * i);
                        out.push(&r * &w);
                        out.push(-(&r * &w));
                    }
                }
                _ => {
                    return Err(Error::Unsupported(
                        "Frobenius eigenvalues need character atoms".into(),
                    ))
                }
            }
        }
        Ok(out)
    }

    fn q_half_pow(&self, e: i64) -> AlgNumber {
        self.field.sqrt_q_pow(e)
    }
}

fn atoms_isomorphic(x: &Atom, y: &Atom) -> bool {
    match (x, y) {
        (Atom::CharSp { chi: a, n: m }, Atom::CharSp { chi: b, n }) => m == n && a == b,
        (
            Atom::Induced {
                ext: e1,
                chi: a,
                n: m,
            },
            Atom::Induced {
                ext: e2,
                chi: b,
                n,
            },
        ) => {
            e1 == e2
                && m == n
                && (a == b || a.conjugate().is_ok_and(|c| c == *b))
        }
        (Atom::Opaque(a), Atom::Opaque(b)) => a == b,
        _ => false,
    }
}

fn tensor_atoms(a: &Atom, b: &Atom) -> Result<Vec<Atom>> {
    let opaque = |o: &OpaqueParam| {
        Error::Unsupported(format!(
            "tensor with opaque parameter {} is not constructible; structural path required",
            o.label
        ))
    };
    match (a, b) {
        (Atom::Opaque(o), _) | (_, Atom::Opaque(o)) => Err(opaque(o)),
        (Atom::CharSp { chi, n: m }, Atom::CharSp { chi: mu, n }) => Ok(sp_product(*m, *n)
            .into_iter()
            .map(|k| Atom::CharSp {
                chi: chi.mul(mu),
                n: k,
            })
            .collect()),
        (Atom::Induced { ext, chi, n: m }, Atom::CharSp { chi: mu, n })
        | (Atom::CharSp { chi: mu, n }, Atom::Induced { ext, chi, n: m }) => {
            let twisted = chi.mul(&mu.base_change(*ext)?);
            Ok(sp_product(*m, *n)
                .into_iter()
                .map(|k| Atom::Induced {
                    ext: *ext,
                    chi: twisted.clone(),
                    n: k,
                })
                .collect())
        }
        (
            Atom::Induced { ext, chi, n: m },
            Atom::Induced {
                ext: ext2,
                chi: mu,
                n,
            },
        ) => {
            if ext != ext2 {
                return Err(Error::Unsupported(
                    "tensor of inductions from different extensions".into(),
                ));
            }
            // Mackey: Ind χ ⊗ Ind μ = Ind(χμ) ⊕ Ind(χμ^c)
            let mut out = Vec::new();
            for c in [chi.mul(mu), chi.mul(&mu.conjugate()?)] {
                for k in sp_product(*m, *n) {
                    out.push(Atom::Induced {
                        ext: *ext,
                        chi: c.clone(),
                        n: k,
                    });
                }
            }
            Ok(out)
        }
    }
}

/// Some `μ` with `μ ∘ Nm_{E/F} = χ`, for a conjugation-invariant `χ`.
pub fn norm_descent(chi: &MultChar, ext: Extension) -> Result<MultChar> {
    let base = ext.base();
    let q = base.q();
    let k = chi.tame_exponent();
    match ext.kind() {
        ExtensionKind::Unramified => {
            if !k.is_multiple_of(q + 1) {
                return Err(Error::Validation(format!("{chi} is not a base change")));
            }
            let u = chi.unram_value().sqrt(Some(base.p())).ok_or_else(|| {
                Error::Unsupported(format!("no exact square root of {}", chi.unram_value()))
            })?;
            MultChar::new(base, (k / (q + 1)) as i64, u)
        }
        ExtensionKind::Ramified(_) => {
            if !k.is_multiple_of(2) {
                return Err(Error::Validation(format!("{chi} is not a base change")));
            }
            let probe = MultChar::new(base, (k / 2) as i64, AlgNumber::one())?;
            // μ∘Nm(ϖ_E) = μ(-c)·μ(ϖ_F)
            let at_norm = probe.base_change(ext)?;
            let u = chi.unram_value() / at_norm.unram_value();
            let mu = MultChar::new(base, (k / 2) as i64, u)?;
            if mu.base_change(ext)? != *chi {
                return Err(Error::Validation(format!("{chi} is not a base change")));
            }
            Ok(mu)
        }
    }
}

pub(crate) fn poly_mul(a: &[AlgNumber], b: &[AlgNumber]) -> Vec<AlgNumber> {
    let mut out = vec![AlgNumber::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::CharSp { chi, n } if chi.is_trivial() => write!(f, "sp({n})"),
            Atom::CharSp { chi, n: 1 } => write!(f, "{chi}"),
            Atom::CharSp { chi, n } => write!(f, "{chi}⊗sp({n})"),
            Atom::Induced { chi, n: 1, .. } => write!(f, "Ind({chi})"),
            Atom::Induced { chi, n, .. } => write!(f, "Ind({chi})⊗sp({n})"),
            Atom::Opaque(o) => write!(f, "[{} dim {}]", o.label, o.dim),
        }
    }
}

impl fmt::Display for WDRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return write!(f, "0");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::LocalField;
    use crate::localfield::RamifiedClass;

    fn f5() -> LocalField {
        LocalField::new(5, 1).unwrap()
    }

    fn sps(rep: &WDRep) -> Vec<u32> {
        rep.atoms()
            .iter()
            .map(|a| match a {
                Atom::CharSp { n, .. } => *n,
                _ => 0,
            })
            .collect()
    }

    #[test]
    fn sp_eigenvalues() {
        let f = f5();
        let one = WDRep::sp(1, f).unwrap();
        assert_eq!(one.frobenius_eigenvalues().unwrap(), vec![AlgNumber::one()]);
        let two = WDRep::sp(2, f).unwrap().frobenius_eigenvalues().unwrap();
        assert_eq!(two, vec![AlgNumber::sqrt_q_pow(5, 1, -1), AlgNumber::sqrt_q_pow(5, 1, 1)]);
        let three = WDRep::sp(3, f).unwrap().frobenius_eigenvalues().unwrap();
        assert_eq!(
            three,
            vec![AlgNumber::from_ratio(1, 5), AlgNumber::one(), AlgNumber::from_int(5)]
        );
    }

    #[test]
    fn clebsch_gordan() {
        let f = f5();
        let s2 = WDRep::sp(2, f).unwrap();
        assert_eq!(sps(&s2.tensor(&s2).unwrap()), vec![3, 1]);
        assert_eq!(sps(&s2.tensor(&s2).unwrap().tensor(&s2).unwrap()), vec![4, 2, 2]);
        let a = MultChar::new(f, 1, AlgNumber::one()).unwrap();
        let b = MultChar::new(f, 2, AlgNumber::from_int(-1)).unwrap();
        let t = WDRep::character(a.clone())
            .unwrap()
            .tensor(&WDRep::character(b.clone()).unwrap())
            .unwrap();
        assert!(t.equivalent(&WDRep::character(a.mul(&b)).unwrap()).unwrap());
    }

    #[test]
    fn det_and_dual() {
        let f = f5();
        assert!(WDRep::sp(2, f).unwrap().det().unwrap().is_trivial());
        for n in 1..5 {
            let s = WDRep::sp(n, f).unwrap();
            assert!(s.dual().equivalent(&s).unwrap());
        }
        let e = Extension::ramified(f, 2, RamifiedClass::NonSquare).unwrap();
        let ind = WDRep::induced(e, MultChar::trivial(e), 1).unwrap();
        assert_eq!(ind.det().unwrap(), quadratic_character(e).unwrap());
        let w = quadratic_character(e).unwrap();
        let expanded = WDRep::character(MultChar::trivial(f))
            .unwrap()
            .direct_sum(&WDRep::character(w).unwrap())
            .unwrap();
        assert!(ind.equivalent(&expanded).unwrap());
    }

    #[test]
    fn opaque_blocks_tensor() {
        let f = f5();
        let o = WDRep::opaque(
            f,
            OpaqueParam {
                label: "sc".into(),
                dim: 2,
                det: None,
                eps_sign: Some(1),
            },
        )
        .unwrap();
        let err = o.tensor(&WDRep::sp(1, f).unwrap()).unwrap_err();
        assert!(err.to_string().contains("structural path required"));
        assert!(o.det().is_err());
    }

    #[test]
    fn induced_twists_and_mackey() {
        let f = f5();
        let e = Extension::unramified(f, 2).unwrap();
        let chi = MultChar::new(e, 1, AlgNumber::one()).unwrap();
        let ind = WDRep::induced(e, chi.clone(), 1).unwrap();
        assert!(ind
            .equivalent(&WDRep::induced(e, chi.conjugate().unwrap(), 1).unwrap())
            .unwrap());
        let sq = ind.tensor(&ind).unwrap();
        assert_eq!(sq.dim(), 4);
        // det(V ⊗ W) = det V^{dim W} det W^{dim V}
        assert_eq!(sq.det().unwrap(), ind.det().unwrap().pow(4));
        let mu = MultChar::unramified(f, AlgNumber::root_of_unity(1, 3));
        let tw = ind.twist(&mu).unwrap();
        assert_eq!(tw.det().unwrap(), ind.det().unwrap().mul(&mu.pow(2)));
    }

    #[test]
    fn l_polynomial_of_unramified_induction() {
        let f = f5();
        let e = Extension::unramified(f, 2).unwrap();
        let ind = WDRep::induced(e, MultChar::trivial(e), 1).unwrap();
        let l = ind.l_polynomial().unwrap();
        // (1 - X)(1 + X)
        assert_eq!(l, vec![AlgNumber::one(), AlgNumber::zero(), AlgNumber::from_int(-1)]);
        let st = WDRep::sp(2, f).unwrap().l_polynomial().unwrap();
        assert_eq!(st[1], -AlgNumber::sqrt_q_pow(5, 1, -1));
    }
}
