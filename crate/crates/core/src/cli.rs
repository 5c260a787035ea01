//! The `asai-periods` command line: `decide`, `epsilon`, `enumerate`, `zeta`.
//!
//! Exit codes: 0 success, 2 schema or validation error, 3 unsupported input,
//! 1 internal inconsistency.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::cyclo::AlgNumber;
use crate::decider::{
    constructive_sign, decide_all, decide_period, enumerate_cases, Bounds, PeriodReport,
    ShapeChoice,
};
use crate::epsilon::{epsilon_wd, AdditiveCharLevel};
use crate::error::{Error, Result};
use crate::instance::InstanceDocument;
use crate::localfield::LocalField;
use crate::zetalab::{zeta_check, SatakeData};

#[derive(Parser, Debug)]
#[command(name = "asai-periods", version, about = "Periods and ε-factors for GL_2 over cubic étale algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide dim Hom_H(Π, 1) and dim Hom_H′(Π′, 1) for an instance document.
    Decide {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        /// Emit `{"instance": …, "report": …}` as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exact ε-factors of the Asai parameter or of each component.
    Epsilon {
        #[arg(short = 'i', long = "input")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::As)]
        target: Target,
    },
    /// Enumerate central-trivial instances and decide each one.
    Enumerate {
        #[arg(long)]
        q: u64,
        /// Comma-separated: split3, quad, quad-unram, quad-ram, cubic-unram, all.
        #[arg(long, default_value = "all")]
        shapes: String,
        #[arg(long, default_value_t = 10)]
        max_report: usize,
        /// Run the invariant suite and print pass counts.
        #[arg(long)]
        check: bool,
    },
    /// Reconstruct the unramified Asai L-factor from the zeta integral.
    Zeta {
        /// Satake parameters `A,B`, e.g. `1,1` or `zeta(1/4),zeta(1/12)`.
        #[arg(long)]
        satake: String,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    As,
    Component,
}

/// The document emitted by `decide --json`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionDocument {
    pub instance: InstanceDocument,
    pub report: PeriodReport,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Validation(_) => 2,
        Error::Unsupported(_) => 3,
        Error::Inconsistency(_) => 1,
    }
}

/// Runs the command line, writing reports to `out` and errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Inconsistency(format!("i/o: {e}"))
}

fn read_instance(path: &PathBuf) -> Result<InstanceDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Validation(format!("cannot read {}: {e}", path.display())))?;
    InstanceDocument::from_json(&text)
}

/// `q = p^f`.
pub fn field_of_q(q: u64) -> Result<LocalField> {
    if q < 2 {
        return Err(Error::Validation(format!("q = {q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut f = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        f += 1;
    }
    if r != 1 {
        return Err(Error::Validation(format!("q = {q} is not a prime power")));
    }
    LocalField::new(p, f)
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Decide { input, json } => {
            let doc = read_instance(&input)?;
            let report = decide_period(&doc.to_input()?)?;
            if json {
                let d = DecisionDocument {
                    instance: doc,
                    report,
                };
                let text = serde_json::to_string_pretty(&d)
                    .map_err(|e| Error::Inconsistency(e.to_string()))?;
                writeln!(out, "{text}").map_err(io)?;
            } else {
                write!(out, "{report}").map_err(io)?;
            }
            Ok(0)
        }
        Command::Epsilon { input, target } => {
            let doc = read_instance(&input)?;
            let gp = doc.to_input()?;
            match target {
                Target::As => {
                    let rho = crate::asai::asai_parameter(&gp.algebra, &gp.components)?;
                    let eps = epsilon_wd(&rho, gp.psi)?;
                    writeln!(out, "As(Π) = {rho}").map_err(io)?;
                    writeln!(out, "ε(As(Π)) = {eps}").map_err(io)?;
                    if let Some(s) = constructive_sign(&gp)? {
                        writeln!(out, "ε(As(Π))·ω_A(−1) = {s:+}").map_err(io)?;
                    }
                }
                Target::Component => {
                    for (i, pi) in gp.components.iter().enumerate() {
                        let rho = pi.langlands_parameter()?;
                        let eps = epsilon_wd(&rho, AdditiveCharLevel::default())?;
                        writeln!(out, "π_{} = {pi}: ε = {eps}", i + 1).map_err(io)?;
                    }
                }
            }
            Ok(0)
        }
        Command::Enumerate {
            q,
            shapes,
            max_report,
            check,
        } => {
            let base = field_of_q(q)?;
            let mut chosen = Vec::new();
            for s in shapes.split(',') {
                for c in ShapeChoice::parse(s)? {
                    if !chosen.contains(&c) {
                        chosen.push(c);
                    }
                }
            }
            let bounds = Bounds {
                shapes: chosen,
                ..Bounds::default()
            };
            let inputs = enumerate_cases(base, &bounds)?;
            let results = decide_all(&inputs);
            for (input, r) in inputs.iter().zip(&results).take(max_report) {
                match r {
                    Ok(r) => writeln!(
                        out,
                        "{input}  →  ({}, {})  ε={}",
                        r.dim_h, r.dim_hprime, r.eps_sign
                    ),
                    Err(e) => writeln!(out, "{input}  →  error: {e}"),
                }
                .map_err(io)?;
            }
            writeln!(out, "{} instances", inputs.len()).map_err(io)?;
            if !check {
                return Ok(0);
            }
            let n = inputs.len();
            let mut decided = 0;
            let mut dichotomy = 0;
            let mut jl = 0;
            let mut both = 0;
            let mut agree = 0;
            for r in results.iter().flatten() {
                decided += 1;
                dichotomy += usize::from(r.dim_h + r.dim_hprime == 1);
                jl += usize::from(r.jl_nonzero || r.dim_hprime == 0);
                if let (Some(c), true) = (r.constructive_eps, r.case_tag.is_structural()) {
                    both += 1;
                    agree += usize::from((c == 1) == (r.dim_h == 1));
                }
            }
            writeln!(out, "decided: {decided}/{n}").map_err(io)?;
            writeln!(out, "dichotomy holds: {dichotomy}/{n}").map_err(io)?;
            writeln!(out, "JL vanishing respected: {jl}/{n}").map_err(io)?;
            writeln!(out, "structural and constructive ε paths agree: {agree}/{both}").map_err(io)?;
            let ok = decided == n && dichotomy == n && jl == n && agree == both;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Zeta { satake, q, terms } => {
            let base = field_of_q(q)?;
            let parts: Vec<&str> = satake.split(',').collect();
            if parts.len() != 2 {
                return Err(Error::Validation("--satake expects A,B".into()));
            }
            let sd = SatakeData::new(base, AlgNumber::parse(parts[0])?, AlgNumber::parse(parts[1])?)?;
            let check = zeta_check(&sd, terms)?;
            writeln!(out, "{sd}").map_err(io)?;
            writeln!(out, "L(As(π), s) = {}   (X = q^-s)", check.l_factor).map_err(io)?;
            let eig: Vec<String> = check.asai_eigenvalues.iter().map(|x| x.to_string()).collect();
            writeln!(out, "Frobenius eigenvalues of As(α ⊕ β): {}", eig.join(", ")).map_err(io)?;
            let (k, v) = check.l_factor.pole_at_one();
            writeln!(out, "pole order at s = 0: {k}, leading value {v}").map_err(io)?;
            if check.agrees {
                writeln!(out, "reciprocal roots match the Asai parameter").map_err(io)?;
                Ok(0)
            } else {
                writeln!(out, "MISMATCH with the Asai parameter").map_err(io)?;
                Ok(1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(field_of_q(9).unwrap(), LocalField::new(3, 2).unwrap());
        assert!(field_of_q(6).is_err());
    }
}
