//! Degree distributions and dimension bounds on a two-component central
//! fibre.

use secant_core::oracle::{
    admissible_distributions, base_point_report, central_fiber_bound, component_dj_dims,
    FactorReading,
};
use secant_core::secant::SecantProblem;

fn main() -> secant_core::Result<()> {
    let p = SecantProblem::from_tuple(12, 5, 15, 4, 1)?;
    println!("{p}");
    println!("  d1 d1' d2 d2'  c1 c2");
    for dd in admissible_distributions(&p)? {
        println!(
            "  {:>2} {:>3} {:>2} {:>3}  {:>2} {:>2}{}",
            dd.d1,
            dd.d1p,
            dd.d2,
            dd.d2p,
            dd.c1,
            dd.c2,
            if dd.is_base_point_witness() {
                "  *"
            } else {
                ""
            }
        );
    }
    let report = base_point_report(&p)?;
    println!(
        "{} admissible, {} with a zero coefficient",
        report.admissible,
        report.witnesses.len()
    );

    for (g, r, d, e, f) in [(12, 5, 15, 4, 1), (10, 4, 12, 4, 1), (21, 6, 24, 6, 2)] {
        let p = SecantProblem::from_tuple(g, r, d, e, f)?;
        let printed = component_dj_dims(&p, FactorReading::Printed)?;
        let derived = component_dj_dims(&p, FactorReading::Derived)?;
        let bound = central_fiber_bound(&p)?;
        println!(
            "{p}: first component {} / {}, bound {} / {}",
            printed.first, derived.first, bound.printed, bound.derived
        );
    }
    Ok(())
}
