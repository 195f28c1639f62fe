//! Sweeps a parameter box, tallies verdicts and writes the table as CSV.
//!
//! cargo run --release --example parameter_sweep -- 20 8 12 > sweep.csv

use std::io;

use secant_core::report::{emit, Format, SweepRow};
use secant_core::sweep::{sweep, SweepBounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (g, r, e) = match args.as_slice() {
        [g, r, e] => (*g, *r, *e),
        _ => (12, 5, 6),
    };

    let report = sweep(&SweepBounds::genus_capped(g, r, e)?);
    for (tag, count) in report.tally() {
        eprintln!("{:<18} {count}", tag.name());
    }
    if let Err(err) = report.ensure_consistent() {
        eprintln!("{} conflicts, first: {err}", report.conflict_count());
    }

    let rows: Vec<SweepRow> = report.entries.iter().map(SweepRow::from).collect();
    emit(&rows, Format::Csv, &mut io::stdout().lock())?;
    Ok(())
}
