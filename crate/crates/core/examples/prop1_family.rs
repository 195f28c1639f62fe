//! The two-parameter family of empty secant varieties with expected
//! dimension zero.

use secant_core::secant::{classify, expected_secant_dim, prop1_family};

fn main() -> secant_core::Result<()> {
    for e in (2..=10).step_by(2) {
        for rho in 0..=3 {
            let p = prop1_family(e, rho)?;
            println!(
                "e={e:<2} rho={rho}  {:<20} expdim={} residual rho={} {}",
                p.to_string(),
                expected_secant_dim(&p),
                p.residual_rho(),
                classify(&p).tag
            );
        }
    }
    Ok(())
}
