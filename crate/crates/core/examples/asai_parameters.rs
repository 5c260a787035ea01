//! Asai parameters: As(sp(2)) for each quadratic extension, a principal
//! series, and the 8-dimensional parameter of a cubic étale algebra.

use asai_periods::asai::{asai_parameter, cubic_asai, quadratic_asai};
use asai_periods::cyclo::AlgNumber;
use asai_periods::langlands::WhittakerRep;
use asai_periods::localfield::{
    tame_cubic_resolvent, EtaleCubicAlgebra, Extension, LocalField, MultChar, RamifiedClass,
};
use asai_periods::weildeligne::WDRep;

fn main() -> asai_periods::error::Result<()> {
    let f = LocalField::new(5, 1)?;
    for e in [
        Extension::unramified(f, 2)?,
        Extension::ramified(f, 2, RamifiedClass::Square)?,
        Extension::ramified(f, 2, RamifiedClass::NonSquare)?,
    ] {
        println!("{e}");
        println!("  As(sp(2))  = {}", quadratic_asai(e, &WDRep::sp(2, e)?)?);
        let a = MultChar::new(e, 1, AlgNumber::one())?;
        let b = MultChar::new(e, 2, AlgNumber::from_int(-1))?;
        let ps = WhittakerRep::principal_series(a, b)?;
        println!("  As({ps}) = {}", quadratic_asai(e, &ps.langlands_parameter()?)?);

        let algebra = EtaleCubicAlgebra::quad_times_f(e)?;
        let comps = vec![WhittakerRep::sigma(e), WhittakerRep::steinberg(f)];
        let rho = asai_parameter(&algebra, &comps)?;
        println!("  As(Σ_E ⊠ St_F): dim {} = {rho}", rho.dim());
    }

    let k = Extension::unramified(f, 3)?;
    println!("{k}");
    println!("  As(St_K) = {}", cubic_asai(k, &WhittakerRep::steinberg(k))?);
    let kr = Extension::ramified(f, 3, RamifiedClass::Square)?;
    println!("{kr}: resolvent {}", tame_cubic_resolvent(kr)?);

    let split = EtaleCubicAlgebra::split(f);
    let comps = vec![WhittakerRep::sigma(f), WhittakerRep::sigma(f), WhittakerRep::steinberg(f)];
    println!("F×F×F: As(Σ ⊠ Σ ⊠ St) = {}", asai_parameter(&split, &comps)?);
    Ok(())
}
