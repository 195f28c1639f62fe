//! Runs every invariant over a small box and prints one line per check.

use secant_core::sweep::SweepBounds;
use secant_core::verify::{verify_all, VerifyBounds};

fn main() -> secant_core::Result<()> {
    let bounds = VerifyBounds {
        sweep: SweepBounds::genus_capped(12, 5, 8)?,
        ..VerifyBounds::default()
    };
    let report = verify_all(&bounds);
    for check in &report.checks {
        println!("{check}");
    }
    println!("sound: {}", report.passed());
    Ok(())
}
