//! Brill-Noether numbers, speciality and residual series.
//!
//! cargo run --example brill_noether -- 12 5 15

use secant_core::bn::{RamificationSequence, SeriesParams};

fn main() -> secant_core::Result<()> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (g, r, d) = match args.as_slice() {
        [g, r, d] => (*g, *r, *d),
        _ => (12, 5, 15),
    };

    let p = SeriesParams::new(g, r, d)?;
    println!(
        "g^{r}_{d} on genus {g}: rho = {}, s = {}",
        p.rho(),
        p.speciality()
    );

    match p.residual() {
        Ok(res) => println!("residual {res}: rho = {}", res.rho()),
        Err(err) => println!("no residual: {err}"),
    }

    // imposing ramification (0, ..., 0, 1) at a point costs one dimension
    let mut entries = vec![0; r as usize];
    entries.push(1);
    let alpha = RamificationSequence::new(entries, d)?;
    println!(
        "ramification {alpha}: adjusted rho = {}",
        p.adjusted_rho(&alpha)?
    );
    Ok(())
}
