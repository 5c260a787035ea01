//! Enumerates bounded tame instances over Q_3 and Q_5 and checks the
//! dichotomy dim Hom_H + dim Hom_H′ = 1 together with agreement of the
//! structural and constructive sign.

use std::collections::BTreeMap;

use asai_periods::decider::{decide_all, enumerate_cases, Bounds};
use asai_periods::localfield::LocalField;

fn main() -> asai_periods::error::Result<()> {
    for q in [3, 5] {
        let base = LocalField::new(q, 1)?;
        let inputs = enumerate_cases(base, &Bounds::default())?;
        let reports = decide_all(&inputs);
        let mut by_case: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        let mut dichotomy = 0;
        for r in reports.iter().flatten() {
            if r.dim_h + r.dim_hprime == 1 {
                dichotomy += 1;
            }
            let slot = by_case.entry(format!("{:?}", r.case_tag)).or_default();
            slot.0 += 1;
            if r.dim_h == 1 {
                slot.1 += 1;
            }
        }
        println!("q = {q}: {} instances, dichotomy holds for {dichotomy}", inputs.len());
        for (case, (n, h)) in by_case {
            println!("  {case:<24} {n:>4} instances, {h:>4} with an H-period");
        }
    }
    Ok(())
}
