//! Row types and CSV/JSON emission.
//!
//! Every row type has a fixed column order, given by [`Record::HEADER`], so
//! CSV output always starts with the same header even when there are no rows.
//! JSON output is a pretty-printed array of objects with the same keys.

use std::io::{self, Write};
use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::dejonq::dj_ef_expected;
use crate::oracle::DegreeDistribution;
use crate::secant::{eq2_sides, expected_secant_dim, SecantProblem, Verdict};
use crate::sweep::SweepEntry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

pub trait Record: Serialize {
    const HEADER: &'static [&'static str];
}

pub fn emit<R: Record>(rows: &[R], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            w.write_record(R::HEADER)?;
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)
        }
    }
}

pub fn to_string<R: Record>(rows: &[R], format: Format) -> String {
    let mut buf = Vec::new();
    emit(rows, format, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("emitters produce UTF-8")
}

pub fn parse_csv<R: DeserializeOwned>(text: &str) -> csv::Result<Vec<R>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect()
}

pub fn parse_json<R: DeserializeOwned>(text: &str) -> serde_json::Result<Vec<R>> {
    serde_json::from_str(text)
}

/// One classified tuple. `eq2_gap` and `dj_expected` are empty when `r' < 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub rho: i64,
    pub s: i64,
    pub expdim: i64,
    pub r_prime: i64,
    pub verdict: String,
    pub rules: String,
    pub eq2_gap: Option<i64>,
    pub dj_expected: Option<i64>,
}

impl Record for SweepRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "r",
        "d",
        "e",
        "f",
        "rho",
        "s",
        "expdim",
        "r_prime",
        "verdict",
        "rules",
        "eq2_gap",
        "dj_expected",
    ];
}

impl SweepRow {
    pub fn new(p: &SecantProblem, verdict: &Verdict) -> Self {
        Self {
            g: p.g(),
            r: p.r(),
            d: p.d(),
            e: p.e(),
            f: p.f(),
            rho: p.rho(),
            s: p.speciality(),
            expdim: expected_secant_dim(p),
            r_prime: p.r_prime(),
            verdict: verdict.tag.name().to_string(),
            rules: verdict.rules_string(),
            eq2_gap: eq2_sides(p).ok().map(|s| s.gap()),
            dj_expected: dj_ef_expected(p).ok(),
        }
    }
}

impl From<&SweepEntry> for SweepRow {
    fn from(entry: &SweepEntry) -> Self {
        Self::new(&entry.problem, &entry.verdict)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub rho: i64,
    pub adjusted_rho: Option<i64>,
}

impl Record for RhoRow {
    const HEADER: &'static [&'static str] = &["g", "r", "d", "rho", "adjusted_rho"];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialityRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub s: i64,
}

impl Record for SpecialityRow {
    const HEADER: &'static [&'static str] = &["g", "r", "d", "s"];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub residual_g: i64,
    pub residual_r: i64,
    pub residual_d: i64,
    pub rho: i64,
}

impl Record for ResidualRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "r",
        "d",
        "residual_g",
        "residual_r",
        "residual_d",
        "rho",
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DjExpectedRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub r_prime: i64,
    pub dj_expected: i64,
    pub dj_expected_ram: Option<i64>,
    pub thm4_dim: Option<i64>,
    pub cor5_empty: bool,
}

impl Record for DjExpectedRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "r",
        "d",
        "e",
        "f",
        "r_prime",
        "dj_expected",
        "dj_expected_ram",
        "thm4_dim",
        "cor5_empty",
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalRow {
    pub g: i64,
    pub d2: i64,
    pub r2: i64,
    pub canonical_dim: i64,
    pub pattern_bound: i64,
    pub pair_count: i64,
    pub canonical_dim_ram: Option<i64>,
}

impl Record for CanonicalRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "d2",
        "r2",
        "canonical_dim",
        "pattern_bound",
        "pair_count",
        "canonical_dim_ram",
    ];
}

/// One refined pair; sequences are written as `a0 a1 ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub g1: i64,
    pub g2: i64,
    pub r: i64,
    pub d: i64,
    pub first: String,
    pub second: String,
}

impl Record for PairRow {
    const HEADER: &'static [&'static str] = &["g1", "g2", "r", "d", "first", "second"];
}

pub fn join_entries(entries: &[i64]) -> String {
    entries
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub g1: i64,
    pub g2: i64,
    pub aspect1_d: i64,
    pub twist1: i64,
    pub aspect2_d: i64,
    pub twist2: i64,
    pub aspect1_s: i64,
    pub aspect2_s: i64,
}

impl Record for InductionRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "r",
        "d",
        "g1",
        "g2",
        "aspect1_d",
        "twist1",
        "aspect2_d",
        "twist2",
        "aspect1_s",
        "aspect2_s",
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionRow {
    pub d1: i64,
    pub d1p: i64,
    pub d2: i64,
    pub d2p: i64,
    pub c1: i64,
    pub c2: i64,
    pub witness: bool,
}

impl Record for DistributionRow {
    const HEADER: &'static [&'static str] = &["d1", "d1p", "d2", "d2p", "c1", "c2", "witness"];
}

impl From<&DegreeDistribution> for DistributionRow {
    fn from(dd: &DegreeDistribution) -> Self {
        Self {
            d1: dd.d1,
            d1p: dd.d1p,
            d2: dd.d2,
            d2p: dd.d2p,
            c1: dd.c1,
            c2: dd.c2,
            witness: dd.is_base_point_witness(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePointRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub admissible: usize,
    pub witnesses: usize,
    pub holds_everywhere: bool,
}

impl Record for BasePointRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "r",
        "d",
        "e",
        "f",
        "admissible",
        "witnesses",
        "holds_everywhere",
    ];
}

/// Component dimensions follow the selected factor reading; both bounds are
/// always present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    pub variant: String,
    pub first_dim: i64,
    pub second_dim: i64,
    pub first_ramified: i64,
    pub second_ramified: i64,
    pub bound_printed: i64,
    pub bound_derived: i64,
    pub dj_expected: i64,
}

impl Record for BoundRow {
    const HEADER: &'static [&'static str] = &[
        "g",
        "r",
        "d",
        "e",
        "f",
        "variant",
        "first_dim",
        "second_dim",
        "first_ramified",
        "second_ramified",
        "bound_printed",
        "bound_derived",
        "dj_expected",
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub kind: String,
    pub status: String,
    pub checked: usize,
    pub detail: String,
}

impl Record for CheckRow {
    const HEADER: &'static [&'static str] = &["name", "kind", "status", "checked", "detail"];
}
