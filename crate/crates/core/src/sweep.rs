//! Exhaustive sweeps over boxes of `(g, r, d, e, f)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::secant::{classify, eq2_sides, SecantProblem, Verdict, VerdictTag};

/// Box of parameters. Tuples run over `0 <= g <= g_max`, `0 <= r <= r_max`,
/// `r <= d <= d_max`, `1 <= e <= min(e_max, d)`, `0 <= f < e`. Without an
/// explicit `d_max` the degree is capped per genus at `2g - 2 + r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepBounds {
    pub g_max: i64,
    pub r_max: i64,
    pub d_max: Option<i64>,
    pub e_max: i64,
}

impl SweepBounds {
    pub fn new(g_max: i64, r_max: i64, d_max: i64, e_max: i64) -> Result<Self> {
        Self::checked(g_max, r_max, Some(d_max), e_max)
    }

    pub fn genus_capped(g_max: i64, r_max: i64, e_max: i64) -> Result<Self> {
        Self::checked(g_max, r_max, None, e_max)
    }

    fn checked(g_max: i64, r_max: i64, d_max: Option<i64>, e_max: i64) -> Result<Self> {
        let all = [Some(g_max), Some(r_max), d_max, Some(e_max)];
        if all.iter().flatten().any(|&b| b < 1) {
            return Err(Error::InvalidBounds(format!(
                "bounds must be positive (g={g_max}, r={r_max}, d={d_max:?}, e={e_max})"
            )));
        }
        Ok(Self {
            g_max,
            r_max,
            d_max,
            e_max,
        })
    }

    fn degree_cap(&self, g: i64, r: i64) -> i64 {
        self.d_max.unwrap_or(2 * g - 2 + r)
    }

    /// Valid tuples of genus `g` in lexicographic order.
    pub fn problems_for_genus(&self, g: i64) -> Vec<SecantProblem> {
        let mut out = Vec::new();
        for r in 0..=self.r_max {
            for d in r..=self.degree_cap(g, r) {
                for e in 1..=self.e_max.min(d) {
                    for f in 0..e {
                        if let Ok(p) = SecantProblem::from_tuple(g, r, d, e, f) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn problems(&self) -> impl Iterator<Item = SecantProblem> + '_ {
        (0..=self.g_max).flat_map(move |g| self.problems_for_genus(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub problem: SecantProblem,
    pub verdict: Verdict,
}

/// Classified tuples in lexicographic order. Conflicts are kept in place so
/// the full table is always available; [`SweepReport::ensure_consistent`]
/// turns the first one into an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
}

impl SweepReport {
    pub fn conflicts(&self) -> impl Iterator<Item = &SweepEntry> {
        self.entries
            .iter()
            .filter(|e| e.verdict.tag == VerdictTag::Conflict)
    }

    pub fn conflict_count(&self) -> usize {
        self.conflicts().count()
    }

    pub fn ensure_consistent(&self) -> Result<()> {
        match self.conflicts().next() {
            Some(entry) => Err(Error::Inconsistent {
                problem: entry.problem.to_string(),
                rules: entry.verdict.rules_string(),
            }),
            None => Ok(()),
        }
    }

    pub fn find(&self, g: i64, r: i64, d: i64, e: i64, f: i64) -> Option<&SweepEntry> {
        self.entries
            .iter()
            .find(|entry| entry.problem.tuple() == (g, r, d, e, f))
    }

    /// Number of entries per verdict tag.
    pub fn tally(&self) -> BTreeMap<VerdictTag, usize> {
        let mut out = BTreeMap::new();
        for entry in &self.entries {
            *out.entry(entry.verdict.tag).or_default() += 1;
        }
        out
    }
}

/// Classifies every tuple in `bounds`. Genera are processed in parallel and
/// concatenated in order, so the output does not depend on scheduling.
pub fn sweep(bounds: &SweepBounds) -> SweepReport {
    let per_genus: Vec<Vec<SweepEntry>> = (0..=bounds.g_max)
        .into_par_iter()
        .map(|g| {
            bounds
                .problems_for_genus(g)
                .into_iter()
                .map(|problem| SweepEntry {
                    verdict: classify(&problem),
                    problem,
                })
                .collect()
        })
        .collect();
    SweepReport {
        entries: per_genus.into_iter().flatten().collect(),
    }
}

/// Observed gaps `lhs - rhs` of the expected-dimension identity, keyed by
/// `(e, f, r, s)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Eq2GapTable {
    pub gaps: BTreeMap<(i64, i64, i64, i64), BTreeSet<i64>>,
}

impl Eq2GapTable {
    pub fn from_bounds(bounds: &SweepBounds) -> Self {
        let mut gaps: BTreeMap<_, BTreeSet<i64>> = BTreeMap::new();
        for p in bounds.problems() {
            if let Ok(sides) = eq2_sides(&p) {
                gaps.entry((p.e(), p.f(), p.r(), p.speciality()))
                    .or_default()
                    .insert(sides.gap());
            }
        }
        Self { gaps }
    }

    /// `e,f,r,s,gap`, one line per observed gap, sorted by key.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("e,f,r,s,gap\n");
        for (&(e, f, r, s), gaps) in &self.gaps {
            for gap in gaps {
                writeln!(out, "{e},{f},{r},{s},{gap}").unwrap();
            }
        }
        out
    }

    /// Keys whose observed gap set is not exactly `{f}`.
    pub fn keys_not_equal_to_f(&self) -> Vec<(i64, i64, i64, i64)> {
        self.gaps
            .iter()
            .filter(|(&(_, f, _, _), gaps)| gaps.len() != 1 || !gaps.contains(&f))
            .map(|(&k, _)| k)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_must_be_positive() {
        assert!(SweepBounds::new(0, 5, 15, 5).is_err());
        assert!(SweepBounds::new(12, 5, 0, 5).is_err());
        assert!(SweepBounds::genus_capped(12, 5, 0).is_err());
    }

    #[test]
    fn problems_are_lexicographic() {
        let bounds = SweepBounds::new(5, 3, 6, 3).unwrap();
        let all: Vec<_> = bounds.problems().map(|p| p.tuple()).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|&(_, r, d, e, f)| r <= d && e <= d && f < e));
    }

    #[test]
    fn genus_cap() {
        let bounds = SweepBounds::genus_capped(3, 2, 4).unwrap();
        assert!(bounds.problems().all(|p| p.d() <= 2 * p.g() - 2 + p.r()));
        assert!(bounds.problems().any(|p| p.tuple() == (3, 2, 6, 4, 0)));
    }

    #[test]
    fn sweep_examples() {
        let report = sweep(&SweepBounds::new(12, 5, 15, 5).unwrap());
        assert_eq!(
            report.find(12, 5, 15, 4, 1).unwrap().verdict.tag,
            VerdictTag::EmptyThm1i
        );
        assert_eq!(
            report.find(12, 5, 15, 5, 1).unwrap().verdict.tag,
            VerdictTag::NonEmptyCM
        );

        let report = sweep(&SweepBounds::new(7, 2, 7, 2).unwrap());
        assert_eq!(
            report.find(7, 2, 7, 2, 1).unwrap().verdict.tag,
            VerdictTag::EmptyProp1
        );

        let report = sweep(&SweepBounds::new(4, 1, 3, 1).unwrap());
        let entry = report.find(4, 1, 3, 1, 0).unwrap();
        assert_eq!(entry.verdict.tag, VerdictTag::NonEmptyCM);
        assert_eq!(entry.verdict.rules_string(), "CM;Trivial");
    }

    #[test]
    fn sweep_matches_sequential_classification() {
        let bounds = SweepBounds::new(9, 4, 12, 6).unwrap();
        let report = sweep(&bounds);
        let sequential: Vec<_> = bounds.problems().map(|p| (p, classify(&p))).collect();
        assert_eq!(report.entries.len(), sequential.len());
        for (entry, (p, v)) in report.entries.iter().zip(&sequential) {
            assert_eq!(&entry.problem, p);
            assert_eq!(&entry.verdict, v);
        }
    }

    #[test]
    fn conflicts_surface_as_error() {
        let report = sweep(&SweepBounds::new(12, 3, 12, 3).unwrap());
        assert!(report.find(12, 3, 12, 3, 1).is_some());
        let err = report.ensure_consistent().unwrap_err();
        assert!(matches!(err, Error::Inconsistent { .. }));

        let clean = sweep(&SweepBounds::new(4, 1, 3, 1).unwrap());
        assert!(clean.ensure_consistent().is_ok());
    }

    #[test]
    fn gap_anchors() {
        let table = Eq2GapTable::from_bounds(&SweepBounds::genus_capped(12, 5, 4).unwrap());
        // (12,5,15,4,1): s = 2
        assert_eq!(table.gaps[&(4, 1, 5, 2)], BTreeSet::from([1]));
    }
}
