//! Refined limit linear series on two components glued at a node.

use secant_core::bn::SeriesParams;
use secant_core::limit_series::{
    enumerate_refined_pairs, enumerate_refined_pairs_with, induction_datum, EhReading, NodalSplit,
};

fn main() -> secant_core::Result<()> {
    for (g1, g2, r, d) in [(1, 1, 1, 2), (2, 2, 1, 3), (3, 3, 2, 6)] {
        let split = NodalSplit::new(g1, g2, r, d)?;
        let pairs = enumerate_refined_pairs(&split)?;
        let literal = enumerate_refined_pairs_with(&split, EhReading::FirstComponentGenus)?;
        println!(
            "genera ({g1},{g2}) g^{r}_{d}: {} pairs ({} with g1 in both sums)",
            pairs.len(),
            literal.len()
        );
        for pair in &pairs {
            println!("  {pair}");
        }
    }

    let p = SeriesParams::new(12, 5, 15)?;
    let datum = induction_datum(&p)?;
    println!(
        "\n{p} degenerates to genera ({}, {}) with aspects {} + {}p and {} + {}p",
        datum.split.g1(),
        datum.split.g2(),
        datum.aspect1,
        datum.twist1,
        datum.aspect2,
        datum.twist2
    );
    Ok(())
}
