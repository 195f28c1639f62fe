//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 invalid parameters,
//! 3 internal inconsistency. Tables go to stdout unless `--out` is given.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bn::{RamificationSequence, SeriesParams};
use crate::dejonq::{
    canonical_dj_dim, canonical_dj_dim_ram, canonical_pair_count, cor5_empty, dj_ef_expected,
    dj_ef_expected_ram, dj_lower_bound, thm4_dim, DJPattern,
};
use crate::error::Error;
use crate::limit_series::{enumerate_refined_pairs_with, induction_datum, EhReading, NodalSplit};
use crate::oracle::{
    admissible_distributions, base_point_report, central_fiber_bound, component_dj_dims,
    FactorReading,
};
use crate::report::{
    emit, join_entries, BasePointRow, BoundRow, CanonicalRow, CheckRow, DistributionRow,
    DjExpectedRow, Format, InductionRow, PairRow, Record, ResidualRow, RhoRow, SpecialityRow,
    SweepRow,
};
use crate::secant::{classify, prop1_family, SecantProblem, VerdictTag};
use crate::sweep::{sweep, SweepBounds};
use crate::verify::{verify_all, VerifyBounds};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "secant-tool",
    version,
    about = "Brill-Noether and secant-variety calculator"
)]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Brill-Noether numbers and residual series
    #[command(subcommand)]
    Bn(BnCmd),
    /// Secant varieties: classification, sweeps, family generation
    #[command(subcommand)]
    Secant(SecantCmd),
    /// de Jonquieres divisor dimensions
    #[command(subcommand)]
    Dj(DjCmd),
    /// Limit linear series on two-component curves
    #[command(subcommand)]
    Lls(LlsCmd),
    /// Central fibre bookkeeping
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Run every invariant over bounded domains
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum BnCmd {
    Rho {
        #[command(flatten)]
        series: SeriesArgs,
        /// Ramification at a point, imposed on the series
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        alpha: Option<Vec<i64>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    Speciality {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    Residual {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
enum SecantCmd {
    Classify {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classify every tuple up to the given maxima; without --d the degree
    /// runs up to 2g-2+r
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
    Prop1 {
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, allow_negative_numbers = true)]
        rho: i64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
enum DjCmd {
    Expected {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Ramification imposed on the residual series
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        alpha: Option<Vec<i64>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    Canonical {
        #[arg(long, allow_negative_numbers = true)]
        g: i64,
        #[arg(long, allow_negative_numbers = true)]
        d2: i64,
        #[arg(long, allow_negative_numbers = true)]
        r2: i64,
        /// Ramification imposed on the series of the second part
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        alpha: Option<Vec<i64>>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
enum LlsCmd {
    /// Refined pairs of vanishing sequences at the node
    Pairs {
        #[arg(long, allow_negative_numbers = true)]
        g1: i64,
        #[arg(long, allow_negative_numbers = true)]
        g2: i64,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        /// `printed` uses g1 in both existence sums; `derived` (default)
        /// uses each component's own genus
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        #[command(flatten)]
        output: OutputArgs,
    },
    Induction {
        #[command(flatten)]
        series: SeriesArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    Distributions {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    Basepoint {
        #[command(flatten)]
        tuple: TupleArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    Bound {
        #[command(flatten)]
        tuple: TupleArgs,
        /// Factor used for the first component dimension (default printed)
        #[arg(long, value_enum)]
        variant: Option<Variant>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Genus bound of the sweep (default 20)
    #[arg(long, allow_negative_numbers = true)]
    g: Option<i64>,
    /// Dimension bound of the sweep (default 8)
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
    /// Secant degree bound of the sweep (default 12)
    #[arg(long, allow_negative_numbers = true)]
    e: Option<i64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug, Clone, Copy)]
struct SeriesArgs {
    #[arg(long, allow_negative_numbers = true)]
    g: i64,
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
}

#[derive(Args, Debug, Clone, Copy)]
struct TupleArgs {
    #[command(flatten)]
    series: SeriesArgs,
    #[arg(long, allow_negative_numbers = true)]
    e: i64,
    #[arg(long, allow_negative_numbers = true)]
    f: i64,
}

impl SeriesArgs {
    fn params(self) -> Result<SeriesParams, Error> {
        SeriesParams::new(self.g, self.r, self.d)
    }
}

impl TupleArgs {
    fn problem(self) -> Result<SecantProblem, Error> {
        SecantProblem::from_tuple(self.series.g, self.series.r, self.series.d, self.e, self.f)
    }
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Write the table to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Variant {
    Printed,
    Derived,
}

/// A rendered table plus an optional inconsistency to report.
struct Outcome {
    output: OutputArgs,
    body: Vec<u8>,
    inconsistency: Option<String>,
}

impl Outcome {
    fn table<R: Record>(output: &OutputArgs, rows: &[R]) -> Self {
        let mut body = Vec::new();
        emit(rows, output.format, &mut body).expect("writing to a Vec cannot fail");
        Self {
            output: output.clone(),
            body,
            inconsistency: None,
        }
    }

    fn inconsistent_if(mut self, message: Option<String>) -> Self {
        self.inconsistency = message;
        self
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };

    let outcome = match dispatch(cli.group) {
        Ok(outcome) => outcome,
        Err(Error::Inconsistent { problem, rules }) => {
            let _ = writeln!(stderr, "inconsistent: {problem} fires {rules}");
            return EXIT_INCONSISTENT;
        }
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            return EXIT_MATH;
        }
    };

    let written = match &outcome.output.out {
        Some(path) => fs::write(path, &outcome.body)
            .map_err(|err| format!("cannot write {}: {err}", path.display())),
        None => stdout
            .write_all(&outcome.body)
            .and_then(|()| stdout.flush())
            .map_err(|err| format!("cannot write output: {err}")),
    };
    if let Err(message) = written {
        let _ = writeln!(stderr, "error: {message}");
        return EXIT_USAGE;
    }

    match outcome.inconsistency {
        Some(message) => {
            let _ = writeln!(stderr, "inconsistent: {message}");
            EXIT_INCONSISTENT
        }
        None => EXIT_OK,
    }
}

fn dispatch(group: Group) -> Result<Outcome, Error> {
    match group {
        Group::Bn(cmd) => bn(cmd),
        Group::Secant(cmd) => secant(cmd),
        Group::Dj(cmd) => dj(cmd),
        Group::Lls(cmd) => lls(cmd),
        Group::Oracle(cmd) => oracle(cmd),
        Group::Verify(args) => verify(args),
    }
}

fn bn(cmd: BnCmd) -> Result<Outcome, Error> {
    match cmd {
        BnCmd::Rho {
            series,
            alpha,
            output,
        } => {
            let p = series.params()?;
            let adjusted_rho = match alpha {
                Some(entries) => Some(p.adjusted_rho(&RamificationSequence::new(entries, p.d())?)?),
                None => None,
            };
            let row = RhoRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                rho: p.rho(),
                adjusted_rho,
            };
            Ok(Outcome::table(&output, &[row]))
        }
        BnCmd::Speciality { series, output } => {
            let p = series.params()?;
            let row = SpecialityRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                s: p.speciality(),
            };
            Ok(Outcome::table(&output, &[row]))
        }
        BnCmd::Residual { series, output } => {
            let p = series.params()?;
            let res = p.residual()?;
            let row = ResidualRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                residual_g: res.g(),
                residual_r: res.r(),
                residual_d: res.d(),
                rho: res.rho(),
            };
            Ok(Outcome::table(&output, &[row]))
        }
    }
}

fn conflict_message(p: &SecantProblem, rules: &str) -> String {
    format!("{p} fires {rules}")
}

fn secant(cmd: SecantCmd) -> Result<Outcome, Error> {
    match cmd {
        SecantCmd::Classify { tuple, output } => {
            let p = tuple.problem()?;
            let verdict = classify(&p);
            let conflict = (verdict.tag == VerdictTag::Conflict)
                .then(|| conflict_message(&p, &verdict.rules_string()));
            Ok(Outcome::table(&output, &[SweepRow::new(&p, &verdict)]).inconsistent_if(conflict))
        }
        SecantCmd::Sweep { g, r, d, e, output } => {
            let bounds = match d {
                Some(d) => SweepBounds::new(g, r, d, e)?,
                None => SweepBounds::genus_capped(g, r, e)?,
            };
            let report = sweep(&bounds);
            let rows: Vec<SweepRow> = report.entries.iter().map(SweepRow::from).collect();
            let conflict = report.conflicts().next().map(|first| {
                format!(
                    "{} conflicts, first {}",
                    report.conflict_count(),
                    conflict_message(&first.problem, &first.verdict.rules_string())
                )
            });
            Ok(Outcome::table(&output, &rows).inconsistent_if(conflict))
        }
        SecantCmd::Prop1 { e, rho, output } => {
            let p = prop1_family(e, rho)?;
            let verdict = classify(&p);
            let unexpected = (verdict.tag != VerdictTag::EmptyProp1).then(|| {
                format!(
                    "{p} classified {} instead of EmptyProp1",
                    verdict.tag.name()
                )
            });
            Ok(Outcome::table(&output, &[SweepRow::new(&p, &verdict)]).inconsistent_if(unexpected))
        }
    }
}

fn dj(cmd: DjCmd) -> Result<Outcome, Error> {
    match cmd {
        DjCmd::Expected {
            tuple,
            alpha,
            output,
        } => {
            let p = tuple.problem()?;
            let dj_expected = dj_ef_expected(&p)?;
            let dj_expected_ram = match alpha {
                Some(entries) => Some(dj_ef_expected_ram(
                    &p,
                    &RamificationSequence::new(entries, p.d_prime())?,
                )?),
                None => None,
            };
            let row = DjExpectedRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                e: p.e(),
                f: p.f(),
                r_prime: p.r_prime(),
                dj_expected,
                dj_expected_ram,
                thm4_dim: thm4_dim(&p),
                cor5_empty: cor5_empty(&p),
            };
            Ok(Outcome::table(&output, &[row]))
        }
        DjCmd::Canonical {
            g,
            d2,
            r2,
            alpha,
            output,
        } => {
            let canonical_dim = canonical_dj_dim(g, d2, r2)?;
            let pattern_bound = dj_lower_bound(
                &SeriesParams::canonical(g)?,
                &DJPattern::canonical(g, d2, r2)?,
            )?;
            let canonical_dim_ram = match alpha {
                Some(entries) => Some(canonical_dj_dim_ram(
                    g,
                    d2,
                    r2,
                    &RamificationSequence::new(entries, d2)?,
                )?),
                None => None,
            };
            let row = CanonicalRow {
                g,
                d2,
                r2,
                canonical_dim,
                pattern_bound,
                pair_count: canonical_pair_count(g, d2, r2)?,
                canonical_dim_ram,
            };
            let mismatch = (pattern_bound != canonical_dim).then(|| {
                format!("canonical formula {canonical_dim} != pattern bound {pattern_bound}")
            });
            Ok(Outcome::table(&output, &[row]).inconsistent_if(mismatch))
        }
    }
}

fn lls(cmd: LlsCmd) -> Result<Outcome, Error> {
    match cmd {
        LlsCmd::Pairs {
            g1,
            g2,
            r,
            d,
            variant,
            output,
        } => {
            let split = NodalSplit::new(g1, g2, r, d)?;
            let reading = match variant.unwrap_or(Variant::Derived) {
                Variant::Printed => EhReading::FirstComponentGenus,
                Variant::Derived => EhReading::ComponentGenus,
            };
            let rows: Vec<PairRow> = enumerate_refined_pairs_with(&split, reading)?
                .iter()
                .map(|pair| PairRow {
                    g1,
                    g2,
                    r,
                    d,
                    first: join_entries(pair.first.entries()),
                    second: join_entries(pair.second.entries()),
                })
                .collect();
            Ok(Outcome::table(&output, &rows))
        }
        LlsCmd::Induction { series, output } => {
            let p = series.params()?;
            let datum = induction_datum(&p)?;
            let row = InductionRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                g1: datum.split.g1(),
                g2: datum.split.g2(),
                aspect1_d: datum.aspect1.d(),
                twist1: datum.twist1,
                aspect2_d: datum.aspect2.d(),
                twist2: datum.twist2,
                aspect1_s: datum.aspect1.speciality(),
                aspect2_s: datum.aspect2.speciality(),
            };
            Ok(Outcome::table(&output, &[row]))
        }
    }
}

fn oracle(cmd: OracleCmd) -> Result<Outcome, Error> {
    match cmd {
        OracleCmd::Distributions { tuple, output } => {
            let p = tuple.problem()?;
            let rows: Vec<DistributionRow> = admissible_distributions(&p)?
                .iter()
                .map(DistributionRow::from)
                .collect();
            let broken = rows
                .iter()
                .find(|row| row.c1 + row.c2 != p.r() - p.e())
                .map(|row| format!("c1 + c2 != r - e at {p} {row:?}"));
            Ok(Outcome::table(&output, &rows).inconsistent_if(broken))
        }
        OracleCmd::Basepoint { tuple, output } => {
            let p = tuple.problem()?;
            let report = base_point_report(&p)?;
            let row = BasePointRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                e: p.e(),
                f: p.f(),
                admissible: report.admissible,
                witnesses: report.witnesses.len(),
                holds_everywhere: report.holds_everywhere,
            };
            Ok(Outcome::table(&output, &[row]))
        }
        OracleCmd::Bound {
            tuple,
            variant,
            output,
        } => {
            let p = tuple.problem()?;
            let (reading, name) = match variant.unwrap_or(Variant::Printed) {
                Variant::Printed => (FactorReading::Printed, "printed"),
                Variant::Derived => (FactorReading::Derived, "derived"),
            };
            let dims = component_dj_dims(&p, reading)?;
            let bound = central_fiber_bound(&p)?;
            let row = BoundRow {
                g: p.g(),
                r: p.r(),
                d: p.d(),
                e: p.e(),
                f: p.f(),
                variant: name.to_string(),
                first_dim: dims.first,
                second_dim: dims.second,
                first_ramified: dims.first_ramified,
                second_ramified: dims.second_ramified,
                bound_printed: bound.printed,
                bound_derived: bound.derived,
                dj_expected: dj_ef_expected(&p)?,
            };
            Ok(Outcome::table(&output, &[row]))
        }
    }
}

fn verify(args: VerifyArgs) -> Result<Outcome, Error> {
    let defaults = VerifyBounds::default();
    let sweep_bounds = SweepBounds::genus_capped(
        args.g.unwrap_or(defaults.sweep.g_max),
        args.r.unwrap_or(defaults.sweep.r_max),
        args.e.unwrap_or(defaults.sweep.e_max),
    )?;
    let report = verify_all(&VerifyBounds {
        sweep: sweep_bounds,
        ..defaults
    });
    let rows: Vec<CheckRow> = report
        .checks
        .iter()
        .map(|c| CheckRow {
            name: c.name.to_string(),
            kind: c.kind.name().to_string(),
            status: c.status.name().to_string(),
            checked: c.checked,
            detail: c.detail.clone(),
        })
        .collect();
    let unsound: Vec<_> = report.soundness_failures().map(|c| c.name).collect();
    let message =
        (!unsound.is_empty()).then(|| format!("failed soundness checks: {}", unsound.join(", ")));
    Ok(Outcome::table(&args.output, &rows).inconsistent_if(message))
}
