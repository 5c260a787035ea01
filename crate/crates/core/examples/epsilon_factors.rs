//! Epsilon factors of tame characters and of Weil–Deligne representations,
//! including the Langlands λ-constant of a quadratic extension.

use asai_periods::cyclo::AlgNumber;
use asai_periods::epsilon::{
    epsilon_character, epsilon_sign, epsilon_wd, gauss_sum, lambda_factor, AdditiveCharLevel,
};
use asai_periods::localfield::{quadratic_character, Extension, Field, LocalField, MultChar, RamifiedClass};
use asai_periods::weildeligne::WDRep;

fn main() -> asai_periods::error::Result<()> {
    let psi = AdditiveCharLevel::default();
    for q in [3, 5, 7] {
        let f = LocalField::new(q, 1)?;
        let g = gauss_sum(Field::from(f), (q as i64 - 1) / 2)?;
        println!("q = {q}: quadratic Gauss sum G = {g}, G² = {}", &g * &g);

        for e in [
            Extension::unramified(f, 2)?,
            Extension::ramified(f, 2, RamifiedClass::Square)?,
            Extension::ramified(f, 2, RamifiedClass::NonSquare)?,
        ] {
            let w = quadratic_character(e)?;
            let lambda = lambda_factor(e, psi)?;
            println!("  {e}: λ = {lambda}, ε(ω) = {}", epsilon_character(&w, psi)?);

            let chi = MultChar::new(e, 1, AlgNumber::one())?;
            let ind = WDRep::induced(e, chi, 1)?;
            println!("    ε(Ind χ) = {}", epsilon_wd(&ind, psi)?);
        }

        let st = WDRep::sp(2, f)?;
        let eps = epsilon_wd(&st, psi)?;
        println!("  ε(sp(2)) = {eps} (sign {})", epsilon_sign(&eps)?);
    }
    Ok(())
}
