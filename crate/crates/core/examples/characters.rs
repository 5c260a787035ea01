//! Tame characters of a p-adic field and its quadratic extensions:
//! restriction, conjugation, base change and the quadratic character ω_{E/F}.

use asai_periods::cyclo::AlgNumber;
use asai_periods::localfield::{
    quadratic_character, Extension, LocalField, MultChar, RamifiedClass,
};

fn main() -> asai_periods::error::Result<()> {
    let f = LocalField::new(5, 1)?;
    let exts = [
        Extension::unramified(f, 2)?,
        Extension::ramified(f, 2, RamifiedClass::Square)?,
        Extension::ramified(f, 2, RamifiedClass::NonSquare)?,
    ];
    for e in exts {
        println!("{e}");
        let chi = MultChar::new(e, 3, AlgNumber::root_of_unity(1, 4))?;
        let conj = chi.conjugate()?;
        println!("  χ       = {chi}");
        println!("  χ^c     = {conj}");
        println!("  χ|_F    = {}", chi.restrict(f)?);
        println!("  χ^c|_F  = {}", conj.restrict(f)?);
        println!("  χ(-1)   = {}", chi.at_minus_one());

        let w = quadratic_character(e)?;
        println!("  ω_E/F   = {w}, ω(-1) = {}", w.at_minus_one());
        println!("  ω∘N trivial: {}", w.base_change(e)?.is_trivial());

        let mu = MultChar::new(f, 1, AlgNumber::from_int(-1))?;
        let bc = mu.base_change(e)?;
        println!("  μ = {mu}, μ∘N = {bc}, conjugation-invariant: {}", bc.conjugate()? == bc);
    }
    Ok(())
}
