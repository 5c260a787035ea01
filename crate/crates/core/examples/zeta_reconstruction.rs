//! Expands the unramified Asai zeta integral and recovers L(As π, s) from
//! its power series, comparing with the Asai parameter.

use asai_periods::cyclo::AlgNumber;
use asai_periods::localfield::LocalField;
use asai_periods::zetalab::{symmetric_normalization, zeta_check, zeta_series, SatakeData};

fn main() -> asai_periods::error::Result<()> {
    let samples = [
        (3, AlgNumber::one(), AlgNumber::one()),
        (3, AlgNumber::root_of_unity(1, 4), AlgNumber::root_of_unity(3, 4)),
        (5, AlgNumber::root_of_unity(1, 3), AlgNumber::from_int(-1)),
        (7, AlgNumber::from_int(2), AlgNumber::from_ratio(1, 8)),
    ];
    for (q, a, b) in samples {
        let sd = SatakeData::new(LocalField::new(q, 1)?, a, b)?;
        let ts = zeta_series(&sd, 12)?;
        let head: Vec<String> = ts.coeffs.iter().take(5).map(|c| c.to_string()).collect();
        println!("{sd}");
        println!("  Z = {} + …", head.join(", "));
        if sd.is_unitary() {
            let sym = symmetric_normalization(&ts, &sd)?;
            println!("  c_n (ab)^(-n/2) real: {}", sym.iter().all(|c| c.conj() == *c));
        }
        let check = zeta_check(&sd, 40)?;
        let (k, v) = check.l_factor.pole_at_one();
        println!("  L = {}", check.l_factor);
        println!("  pole order at s = 0: {k}, leading value {v}");
        println!("  matches As(α ⊕ β): {}", check.agrees);
    }
    Ok(())
}
