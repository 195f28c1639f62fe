//! Classifies a few secant problems and prints every rule that fired.

use secant_core::secant::{classify, expected_secant_dim, SecantProblem};

fn main() -> secant_core::Result<()> {
    let tuples = [
        (12, 5, 15, 4, 1),
        (12, 5, 15, 5, 1),
        (21, 6, 24, 6, 2),
        (8, 3, 9, 4, 2),
        (4, 1, 3, 1, 0),
        (12, 3, 12, 3, 1),
    ];
    println!(
        "{:<18} {:>6} {:>3}  {:<18} rules",
        "(g,r,d,e,f)", "expdim", "r'", "verdict"
    );
    for (g, r, d, e, f) in tuples {
        let p = SecantProblem::from_tuple(g, r, d, e, f)?;
        let v = classify(&p);
        println!(
            "{:<18} {:>6} {:>3}  {:<18} {}",
            p.to_string(),
            expected_secant_dim(&p),
            p.r_prime(),
            v.tag.name(),
            v.rules_string()
        );
    }
    Ok(())
}
