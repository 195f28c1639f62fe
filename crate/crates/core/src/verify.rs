//! Runs every invariant of the library over bounded domains.
//!
//! Checks come in three kinds. Only a failed `Soundness` check makes the
//! report fail. A failed `Property` is reported but not fatal, and a
//! `Finding` records a measurement.

use std::collections::BTreeMap;
use std::fmt;

use crate::bn::{
    brill_noether_number, ramification_from_vanishing, vanishing_from_ramification, SeriesParams,
    VanishingSequence,
};
use crate::dejonq::{
    canonical_dj_dim, cor5_empty, dj_ef_expected, dj_lower_bound, thm4_dim, DJPattern,
};
use crate::limit_series::{enumerate_refined_pairs, induction_datum, NodalSplit, RefinedPair};
use crate::oracle::{
    admissible_distributions, base_point_report, central_fiber_bound, raw_distributions,
};
use crate::secant::{
    cm_nonempty, eq2_sides, expected_secant_dim, farkas_empty, prop1_family, thm1_empty,
    SecantProblem, VerdictTag,
};
use crate::sweep::{sweep, SweepBounds, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    pub sweep: SweepBounds,
    pub canonical_g_max: i64,
    pub prop1_e_max: i64,
    pub prop1_rho_max: i64,
    pub induction_r_max: i64,
    pub induction_s_max: i64,
    pub sequence_r_max: i64,
    pub sequence_d_max: i64,
    pub pairs_g_max: i64,
    pub pairs_r_max: i64,
    pub pairs_d_max: i64,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        Self {
            sweep: SweepBounds::genus_capped(20, 8, 12).expect("default bounds are positive"),
            canonical_g_max: 12,
            prop1_e_max: 20,
            prop1_rho_max: 10,
            induction_r_max: 8,
            induction_s_max: 5,
            sequence_r_max: 4,
            sequence_d_max: 10,
            pairs_g_max: 4,
            pairs_r_max: 3,
            pairs_d_max: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    Soundness,
    Property,
    Finding,
}

impl CheckKind {
    pub const fn name(self) -> &'static str {
        match self {
            Self::Soundness => "soundness",
            Self::Property => "property",
            Self::Finding => "finding",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub const fn name(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Info => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub kind: CheckKind,
    pub status: Status,
    pub checked: usize,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}] checked={} {}",
            self.status.name(),
            self.name,
            self.kind.name(),
            self.checked,
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn soundness_failures(&self) -> impl Iterator<Item = &Check> {
        self.failures().filter(|c| c.kind == CheckKind::Soundness)
    }

    pub fn passed(&self) -> bool {
        self.soundness_failures().next().is_none()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Counts cases and keeps the first counterexample.
#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(case());
            }
        }
    }

    fn into_check(self, name: &'static str, kind: CheckKind) -> Check {
        let (status, detail) = match self.first {
            None => (Status::Pass, String::new()),
            Some(first) => (
                Status::Fail,
                format!("{} counterexamples, first {first}", self.failed),
            ),
        };
        Check {
            name,
            kind,
            status,
            checked: self.checked,
            detail,
        }
    }
}

fn finding(name: &'static str, checked: usize, detail: String) -> Check {
    Check {
        name,
        kind: CheckKind::Finding,
        status: Status::Info,
        checked,
        detail,
    }
}

pub fn verify_all(bounds: &VerifyBounds) -> VerifyReport {
    let report = sweep(&bounds.sweep);
    let mut checks = Vec::new();
    checks.extend(series_checks(bounds));
    checks.extend(secant_checks(bounds, &report));
    checks.extend(dejonq_checks(bounds, &report));
    checks.extend(limit_series_checks(bounds));
    checks.extend(oracle_checks(&report));
    VerifyReport { checks }
}

fn series_in(g_max: i64, r_max: i64) -> impl Iterator<Item = SeriesParams> {
    (0..=g_max).flat_map(move |g| {
        (0..=r_max).flat_map(move |r| {
            (r..=(2 * g - 2 + r).max(r)).filter_map(move |d| SeriesParams::new(g, r, d).ok())
        })
    })
}

/// All strictly increasing sequences of length `len` in `0..=d`.
fn vanishing_sequences(len: usize, d: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, start: i64, d: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for a in start..=d {
            prefix.push(a);
            go(len, a + 1, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 0, d, &mut Vec::new(), &mut out);
    out
}

fn series_checks(bounds: &VerifyBounds) -> Vec<Check> {
    let g_max = bounds.sweep.g_max;
    let r_max = bounds.sweep.r_max;

    let mut symmetry = Tally::default();
    let mut involution = Tally::default();
    let mut step = Tally::default();
    for p in series_in(g_max, r_max) {
        if let Ok(res) = p.residual() {
            symmetry.record(res.rho() == p.rho(), || p.to_string());
            if let Ok(back) = res.residual() {
                involution.record(back == p, || p.to_string());
            }
        }
        let (g, r, d) = (p.g(), p.r(), p.d());
        step.record(
            brill_noether_number(g, r, d + 1) - brill_noether_number(g, r, d) == r + 1,
            || p.to_string(),
        );
    }

    let mut round_trip = Tally::default();
    for r in 0..=bounds.sequence_r_max {
        for d in r..=bounds.sequence_d_max {
            for entries in vanishing_sequences((r + 1) as usize, d) {
                let a = VanishingSequence::new(entries, d).expect("generated sequences are valid");
                let alpha = ramification_from_vanishing(&a);
                let ok = vanishing_from_ramification(&alpha) == a
                    && ramification_from_vanishing(&vanishing_from_ramification(&alpha)) == alpha;
                round_trip.record(ok, || a.to_string());
            }
        }
    }

    vec![
        symmetry.into_check("residual_rho_symmetry", CheckKind::Property),
        involution.into_check("residual_involution", CheckKind::Property),
        step.into_check("rho_step_in_degree", CheckKind::Property),
        round_trip.into_check("sequence_round_trip", CheckKind::Soundness),
    ]
}

fn secant_checks(bounds: &VerifyBounds, report: &SweepReport) -> Vec<Check> {
    let mut family = Tally::default();
    for e in (2..=bounds.prop1_e_max).step_by(2) {
        for rho in 0..=bounds.prop1_rho_max {
            match prop1_family(e, rho) {
                Ok(p) => {
                    let ok = expected_secant_dim(&p) == 0
                        && p.speciality() == 2
                        && p.r_prime() == 1
                        && p.residual_rho() == p.rho()
                        && !cm_nonempty(&p)
                        && !farkas_empty(&p)
                        && crate::secant::classify(&p).tag == VerdictTag::EmptyProp1;
                    family.record(ok, || p.to_string());
                }
                Err(err) => family.record(false, || format!("e={e} rho={rho}: {err}")),
            }
        }
    }

    let mut conflicts = Tally::default();
    let mut f0 = Tally::default();
    let mut f0_small_e = 0usize;
    let mut guard = Tally::default();
    for entry in &report.entries {
        let p = &entry.problem;
        conflicts.record(entry.verdict.tag != VerdictTag::Conflict, || {
            format!("{p} rules {}", entry.verdict.rules_string())
        });
        if p.f() == 0 && p.r_prime() >= 0 {
            let ok = expected_secant_dim(p) == p.e() && (p.d() < 2 * p.e() - 1 || cm_nonempty(p));
            f0.record(ok, || p.to_string());
            if !ok && 2 * p.e() < p.r() {
                f0_small_e += 1;
            }
        }
        if p.rho() != 0 {
            guard.record(thm1_empty(p).is_none(), || p.to_string());
        }
    }

    let mut conflict_kinds: BTreeMap<&'static str, usize> = BTreeMap::new();
    for entry in report.conflicts() {
        let kind = if entry.problem.f() == 0 { "f=0" } else { "f>0" };
        *conflict_kinds.entry(kind).or_default() += 1;
    }
    let breakdown = conflict_kinds
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ");

    let mut gaps = Tally::default();
    for entry in &report.entries {
        if let Ok(sides) = eq2_sides(&entry.problem) {
            gaps.record(sides.gap() == entry.problem.f(), || {
                entry.problem.to_string()
            });
        }
    }
    let gap_detail = match &gaps.first {
        None => format!("gap = f at all {} tuples", gaps.checked),
        Some(first) => format!("gap != f at {} tuples, first {first}", gaps.failed),
    };

    vec![
        family.into_check("prop1_family", CheckKind::Property),
        conflicts.into_check("sweep_conflicts", CheckKind::Soundness),
        finding(
            "sweep_conflict_breakdown",
            report.entries.len(),
            format!("{} conflicts {breakdown}", report.conflict_count())
                .trim_end()
                .to_string(),
        ),
        finding(
            "f_zero_cm_failures_with_2e_below_r",
            f0.failed,
            format!("{f0_small_e} of {} failures have 2e < r", f0.failed),
        ),
        f0.into_check("f_zero_expdim_and_cm", CheckKind::Property),
        guard.into_check("thm1_rho_guard", CheckKind::Property),
        finding("eq2_gap", gaps.checked, gap_detail),
    ]
}

fn dejonq_checks(bounds: &VerifyBounds, report: &SweepReport) -> Vec<Check> {
    let mut canonical = Tally::default();
    for g in 1..=bounds.canonical_g_max {
        let k = SeriesParams::canonical(g).expect("canonical series is valid for g >= 1");
        for d2 in 0..=2 * g - 2 {
            for r2 in 0..=d2 {
                let Ok(dim) = canonical_dj_dim(g, d2, r2) else {
                    continue;
                };
                let bound =
                    DJPattern::canonical(g, d2, r2).and_then(|pat| dj_lower_bound(&k, &pat));
                canonical.record(bound == Ok(dim), || {
                    format!("(g,d2,r2)=({g},{d2},{r2}) formula {dim} bound {bound:?}")
                });
            }
        }
    }

    let mut specialization = Tally::default();
    let mut cor5 = Tally::default();
    let mut bridge = Tally::default();
    let mut bridge_high = Tally::default();
    for entry in &report.entries {
        let p = &entry.problem;
        if p.r_prime() >= 0 && brill_noether_number(p.g(), p.r_prime(), p.d_prime()) >= 0 {
            let bound = DJPattern::secant(p).and_then(|pat| dj_lower_bound(&p.base(), &pat));
            let expected = dj_ef_expected(p);
            specialization.record(bound.is_ok() && bound == expected, || {
                format!("{p} expected {expected:?} bound {bound:?}")
            });
        }
        if cor5_empty(p) {
            cor5.record(thm4_dim(p).is_some_and(|v| v < 0), || p.to_string());
        }
        if p.rho() == 0 {
            let same = thm1_empty(p).is_some() == cor5_empty(p);
            bridge.record(same, || format!("{p} s={}", p.speciality()));
            if p.speciality() >= 2 {
                bridge_high.record(same, || p.to_string());
            }
        }
    }
    let high_detail = match &bridge_high.first {
        None => format!(
            "agreement at every tuple with rho = 0 and s >= 2 ({})",
            bridge_high.checked
        ),
        Some(first) => format!(
            "{} disagreements with s >= 2, first {first}",
            bridge_high.failed
        ),
    };
    let high_checked = bridge_high.checked;

    vec![
        canonical.into_check("canonical_consistency", CheckKind::Soundness),
        specialization.into_check("secant_pattern_specialization", CheckKind::Soundness),
        cor5.into_check("cor5_implies_negative_dimension", CheckKind::Property),
        bridge.into_check("thm1_cor5_bridge", CheckKind::Property),
        finding("thm1_cor5_bridge_s_at_least_2", high_checked, high_detail),
    ]
}

fn swap(pair: &RefinedPair) -> RefinedPair {
    RefinedPair {
        first: pair.second.clone(),
        second: pair.first.clone(),
    }
}

fn limit_series_checks(bounds: &VerifyBounds) -> Vec<Check> {
    let mut ramification = Tally::default();
    let mut symmetry = Tally::default();
    for g1 in 0..=bounds.pairs_g_max {
        for g2 in 0..=bounds.pairs_g_max {
            for r in 0..=bounds.pairs_r_max {
                for d in r..=bounds.pairs_d_max {
                    let split = NodalSplit::new(g1, g2, r, d).expect("enumerated splits are valid");
                    let pairs = enumerate_refined_pairs(&split).expect("within enumeration caps");
                    for pair in &pairs {
                        let a = pair.first.ramification();
                        let b = pair.second.ramification();
                        let ru = r as usize;
                        let ok = (0..=ru).all(|i| a.entries()[i] + b.entries()[ru - i] == d - r);
                        ramification.record(ok, || format!("{split:?} {pair}"));
                    }
                    let swapped = enumerate_refined_pairs(&split.swapped()).expect("within caps");
                    let mut mirrored: Vec<_> = pairs.iter().map(swap).collect();
                    mirrored.sort();
                    symmetry.record(mirrored == swapped, || format!("{split:?}"));
                }
            }
        }
    }

    let mut anchors = Tally::default();
    for (g1, g2, r, d, count) in [(1, 1, 1, 2, 1), (2, 2, 1, 3, 2)] {
        let found = NodalSplit::new(g1, g2, r, d)
            .and_then(|s| enumerate_refined_pairs(&s))
            .map(|p| p.len());
        anchors.record(found == Ok(count), || {
            format!("({g1},{g2},{r},{d}) expected {count} found {found:?}")
        });
    }

    let mut datum = Tally::default();
    for r in 0..=bounds.induction_r_max {
        for s in 2..=bounds.induction_s_max {
            let g = s * (r + 1);
            let d = g - s + r;
            let result = SeriesParams::new(g, r, d).and_then(|p| induction_datum(&p));
            let ok = result.as_ref().is_ok_and(|dat| {
                dat.split.g1() + dat.split.g2() == g
                    && dat.aspect1.rho() == 0
                    && dat.aspect1.speciality() == s - 1
                    && dat.aspect2.rho() == 0
                    && dat.aspect2.speciality() == 1
                    && SeriesParams::canonical(dat.split.g2()) == Ok(dat.aspect2)
            });
            datum.record(ok, || format!("({g},{r},{d}): {result:?}"));
        }
    }

    vec![
        ramification.into_check("refined_pair_ramification", CheckKind::Property),
        symmetry.into_check("refined_pair_symmetry", CheckKind::Property),
        anchors.into_check("enumeration_anchors", CheckKind::Property),
        datum.into_check("induction_datum", CheckKind::Property),
    ]
}

fn in_degeneration_regime(p: &SecantProblem) -> bool {
    p.rho() == 0 && p.speciality() >= 2 && p.r_prime() >= 0
}

fn in_dimension_regime(p: &SecantProblem) -> bool {
    in_degeneration_regime(p) && expected_secant_dim(p) <= p.r_prime() + 2 && p.e() < 2 * p.r()
}

fn oracle_checks(report: &SweepReport) -> Vec<Check> {
    let mut identity = Tally::default();
    let mut both_nonpositive = Tally::default();
    let mut holds_gap = Tally::default();
    let mut bound_shift = Tally::default();
    let mut derived_closes = Tally::default();
    let mut printed_closes = Tally::default();
    let mut witness_tuples = 0usize;
    let mut first_witness: Option<String> = None;
    let mut regime = 0usize;

    for entry in &report.entries {
        let p = &entry.problem;
        if !in_degeneration_regime(p) {
            continue;
        }
        regime += 1;
        let all = admissible_distributions(p).unwrap_or_default();
        for dd in &all {
            identity.record(dd.c1 + dd.c2 == p.r() - p.e(), || format!("{p} {dd:?}"));
        }
        let raw = raw_distributions(p).unwrap_or_default();
        let exists = raw.iter().any(|dd| dd.c1 <= 0 && dd.c2 <= 0);
        both_nonpositive.record(exists == (p.r() <= p.e()), || p.to_string());

        if let Ok(bp) = base_point_report(p) {
            if bp.admissible > 0 && bp.holds_everywhere {
                holds_gap.record(p.r() - p.e() >= 2, || p.to_string());
            }
            if !bp.witnesses.is_empty() {
                witness_tuples += 1;
                if first_witness.is_none() {
                    first_witness = Some(format!("{p} {:?}", bp.witnesses[0]));
                }
            }
        }

        if in_dimension_regime(p) {
            let bound = central_fiber_bound(p);
            let expected = dj_ef_expected(p);
            match (bound, expected) {
                (Ok(b), Ok(dj)) => {
                    let x = expected_secant_dim(p);
                    bound_shift.record(b.derived == b.printed - 2, || p.to_string());
                    derived_closes.record(b.derived <= dj, || p.to_string());
                    printed_closes
                        .record((b.printed <= dj) == (x <= p.r_prime()), || p.to_string());
                }
                _ => bound_shift.record(false, || format!("{p}: bound unavailable")),
            }
        }
    }

    let witness_detail = match first_witness {
        Some(first) => format!(
            "{witness_tuples} of {regime} tuples have a zero node coefficient, first {first}"
        ),
        None => format!("no zero node coefficient in {regime} tuples"),
    };

    vec![
        identity.into_check("coefficient_identity", CheckKind::Soundness),
        both_nonpositive.into_check("both_nonpositive_regime", CheckKind::Property),
        holds_gap.into_check("positivity_requires_gap", CheckKind::Property),
        bound_shift.into_check("derived_bound_shift", CheckKind::Property),
        derived_closes.into_check("derived_bound_closes", CheckKind::Property),
        printed_closes.into_check(
            "printed_bound_closes_iff_expdim_le_r_prime",
            CheckKind::Property,
        ),
        finding("base_point_witnesses", regime, witness_detail),
    ]
}
