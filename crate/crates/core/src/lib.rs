//! Exact ε-factors, Asai parameters and period dimensions for `GL_2` over
//! cubic étale algebras `A/F` of a p-adic field, p odd.
//!
//! The decider in [`decider`] reports `dim Hom_H(Π, 1)` and
//! `dim Hom_H′(Π′, 1)` with the theorem anchors used, and cross-checks the
//! structural answer against `ε(As Π)·ω_A(−1)` computed in [`epsilon`].
//! See `examples/` for one program per capability.
//!
//! ```
//! use asai_periods::decider::{decide_period, GPInput};
//! use asai_periods::langlands::WhittakerRep;
//! use asai_periods::localfield::{EtaleCubicAlgebra, Extension, LocalField};
//!
//! let f = LocalField::new(5, 1)?;
//! let e = Extension::unramified(f, 2)?;
//! let input = GPInput::new(
//!     EtaleCubicAlgebra::quad_times_f(e)?,
//!     vec![WhittakerRep::sigma(e), WhittakerRep::steinberg(f)],
//! )?;
//! let report = decide_period(&input)?;
//! assert_eq!((report.dim_h, report.dim_hprime), (0, 1));
//! # Ok::<(), asai_periods::error::Error>(())
//! ```

pub mod asai;
pub mod cli;
pub mod cyclo;
pub mod decider;
pub mod epsilon;
pub mod error;
pub mod instance;
pub mod langlands;
pub mod localfield;
pub mod residue;
pub mod weildeligne;
pub mod zetalab;
