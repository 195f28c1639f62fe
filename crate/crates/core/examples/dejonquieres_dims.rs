//! Expected dimensions of de Jonquieres loci, for secant problems and for
//! decompositions of canonical divisors.

use secant_core::bn::SeriesParams;
use secant_core::dejonq::{
    canonical_dj_dim, canonical_pair_count, cor5_empty, dj_ef_expected, dj_lower_bound, thm4_dim,
    DJPattern,
};
use secant_core::secant::SecantProblem;

fn main() -> secant_core::Result<()> {
    for (g, r, d, e, f) in [(12, 5, 15, 4, 1), (21, 6, 24, 6, 2), (10, 4, 12, 4, 1)] {
        let p = SecantProblem::from_tuple(g, r, d, e, f)?;
        let pattern = DJPattern::secant(&p)?;
        println!(
            "{p}: expected {} (pattern bound {}), dimension {:?}, empty {}",
            dj_ef_expected(&p)?,
            dj_lower_bound(&p.base(), &pattern)?,
            thm4_dim(&p),
            cor5_empty(&p)
        );
    }

    let g = 6;
    let k = SeriesParams::canonical(g)?;
    println!("\ncanonical series {k}");
    for (d2, r2) in [(4, 1), (5, 1), (6, 2)] {
        println!(
            "  D2 in C^{r2}_{d2}: dimension {}, parameter count {}",
            canonical_dj_dim(g, d2, r2)?,
            canonical_pair_count(g, d2, r2)?
        );
    }
    Ok(())
}
