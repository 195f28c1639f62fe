use proptest::prelude::*;

use secant_core::bn::{
    brill_noether_number, ramification_from_vanishing, vanishing_from_ramification, SeriesParams,
    VanishingSequence,
};
use secant_core::dejonq::{cor5_empty, dj_ef_expected, dj_lower_bound, thm4_dim, DJPattern};
use secant_core::limit_series::{
    enumerate_refined_pairs, induction_datum, NodalSplit, RefinedPair,
};
use secant_core::oracle::{admissible_distributions, base_point_report, central_fiber_bound};
use secant_core::report::{parse_csv, parse_json, to_string, Format, SweepRow};
use secant_core::secant::{
    classify, cm_nonempty, eq2_sides, expected_secant_dim, farkas_empty, thm1_empty, Rule,
    SecantProblem, VerdictTag,
};
use secant_core::sweep::{sweep, SweepBounds};

fn series() -> impl Strategy<Value = SeriesParams> {
    (0i64..=30, 0i64..=10, 0i64..=60).prop_filter_map("invalid series", |(g, r, d)| {
        SeriesParams::new(g, r, d).ok()
    })
}

fn problem() -> impl Strategy<Value = SecantProblem> {
    (0i64..=25, 0i64..=9, 0i64..=50, 1i64..=14, 0i64..=13)
        .prop_filter_map("invalid problem", |(g, r, d, e, f)| {
            SecantProblem::from_tuple(g, r, d, e, f).ok()
        })
}

/// `rho = 0`, `s >= 2`, `r' >= 0`, built from `g = s(r+1)`, `d = g - s + r`.
fn regime_problem() -> impl Strategy<Value = SecantProblem> {
    (1i64..=8, 2i64..=5, 1i64..=16, 0i64..=15).prop_filter_map("outside regime", |(r, s, e, f)| {
        let g = s * (r + 1);
        let p = SecantProblem::from_tuple(g, r, g - s + r, e, f).ok()?;
        (p.r_prime() >= 0).then_some(p)
    })
}

fn vanishing() -> impl Strategy<Value = VanishingSequence> {
    (0usize..=6, 0i64..=12).prop_flat_map(|(len, extra)| {
        let d = len as i64 + extra;
        proptest::sample::subsequence((0..=d).collect::<Vec<_>>(), len + 1)
            .prop_map(move |entries| VanishingSequence::new(entries, d).unwrap())
    })
}

proptest! {
    #[test]
    fn rho_steps_by_r_plus_one(p in series()) {
        let (g, r, d) = (p.g(), p.r(), p.d());
        prop_assert_eq!(brill_noether_number(g, r, d + 1) - p.rho(), r + 1);
    }

    #[test]
    fn residual_preserves_rho_and_inverts(p in series()) {
        if let Ok(res) = p.residual() {
            prop_assert_eq!(res.rho(), p.rho());
            prop_assert_eq!(res.speciality(), p.r() + 1);
            if let Ok(back) = res.residual() {
                prop_assert_eq!(back, p);
            }
        }
    }

    #[test]
    fn sequence_conversions_invert(a in vanishing()) {
        let alpha = ramification_from_vanishing(&a);
        prop_assert!(alpha.entries().windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(vanishing_from_ramification(&alpha), a);
    }

    #[test]
    fn f_zero_gives_symmetric_product(p in problem()) {
        if p.f() == 0 {
            prop_assert_eq!(expected_secant_dim(&p), p.e());
        }
    }

    #[test]
    fn eq2_gap_is_f(p in problem()) {
        if let Ok(sides) = eq2_sides(&p) {
            prop_assert_eq!(sides.gap(), p.f());
        }
    }

    #[test]
    fn verdict_agrees_with_predicates(p in problem()) {
        let v = classify(&p);
        prop_assert_eq!(v.fired(Rule::Farkas), farkas_empty(&p));
        prop_assert_eq!(v.fired(Rule::CoppensMartens), p.rho() >= 0 && cm_nonempty(&p));
        prop_assert_eq!(v.fired(Rule::Cor5), cor5_empty(&p));
        let any_empty = v.notes.iter().any(|r| r.is_empty_rule());
        let any_nonempty = v.notes.iter().any(|r| r.is_nonempty_rule());
        match v.tag {
            VerdictTag::Conflict => prop_assert!(any_empty && any_nonempty),
            VerdictTag::Undetermined => prop_assert!(!any_empty && !any_nonempty),
            tag if tag.is_empty() => prop_assert!(any_empty && !any_nonempty),
            _ => prop_assert!(any_nonempty && !any_empty),
        }
    }

    #[test]
    fn thm1_needs_rho_zero(p in problem()) {
        if p.rho() != 0 {
            prop_assert!(thm1_empty(&p).is_none());
        }
    }

    #[test]
    fn cor5_means_negative_dimension(p in problem()) {
        if cor5_empty(&p) {
            prop_assert!(thm4_dim(&p).is_some_and(|v| v < 0));
        }
    }

    #[test]
    fn secant_pattern_specializes(p in problem()) {
        if p.r_prime() >= 0 && brill_noether_number(p.g(), p.r_prime(), p.d_prime()) >= 0 {
            let pattern = DJPattern::secant(&p).unwrap();
            prop_assert_eq!(dj_lower_bound(&p.base(), &pattern), dj_ef_expected(&p));
        }
    }

    #[test]
    fn refined_pairs_swap(g1 in 0i64..=3, g2 in 0i64..=3, r in 0i64..=3, extra in 0i64..=4) {
        let split = NodalSplit::new(g1, g2, r, r + extra).unwrap();
        let mut mirrored: Vec<RefinedPair> = enumerate_refined_pairs(&split)
            .unwrap()
            .into_iter()
            .map(|p| RefinedPair { first: p.second, second: p.first })
            .collect();
        mirrored.sort();
        prop_assert_eq!(mirrored, enumerate_refined_pairs(&split.swapped()).unwrap());
    }

    #[test]
    fn refined_pairs_complement(g1 in 0i64..=3, g2 in 0i64..=3, r in 0i64..=3, extra in 0i64..=4) {
        let d = r + extra;
        let split = NodalSplit::new(g1, g2, r, d).unwrap();
        for pair in enumerate_refined_pairs(&split).unwrap() {
            let a = pair.first.ramification();
            let b = pair.second.ramification();
            let ru = r as usize;
            for i in 0..=ru {
                prop_assert_eq!(a.entries()[i] + b.entries()[ru - i], d - r);
            }
        }
    }

    #[test]
    fn induction_datum_splits_genus(r in 0i64..=8, s in 2i64..=5) {
        let g = s * (r + 1);
        let p = SeriesParams::new(g, r, g - s + r).unwrap();
        let datum = induction_datum(&p).unwrap();
        prop_assert_eq!(datum.split.g1() + datum.split.g2(), g);
        prop_assert_eq!(datum.aspect1.rho(), 0);
        prop_assert_eq!(datum.aspect1.speciality(), s - 1);
        prop_assert_eq!(datum.aspect2, SeriesParams::canonical(r + 1).unwrap());
        prop_assert_eq!(datum.twist1 + datum.aspect1.d(), p.d());
        prop_assert_eq!(datum.twist2 + datum.aspect2.d(), p.d());
    }

    #[test]
    fn node_coefficients_sum(p in regime_problem()) {
        for dd in admissible_distributions(&p).unwrap() {
            prop_assert_eq!(dd.c1 + dd.c2, p.r() - p.e());
            prop_assert_eq!(dd.d1 + dd.d2, p.e());
            prop_assert_eq!(dd.d1p + dd.d2p, p.d_prime());
        }
    }

    #[test]
    fn positivity_everywhere_needs_gap(p in regime_problem()) {
        let report = base_point_report(&p).unwrap();
        if report.admissible > 0 && report.holds_everywhere {
            prop_assert!(p.r() - p.e() >= 2);
        }
    }

    #[test]
    fn derived_bound_is_two_below_printed(p in regime_problem()) {
        let bound = central_fiber_bound(&p).unwrap();
        prop_assert_eq!(bound.derived, bound.printed - 2);
        let x = expected_secant_dim(&p);
        if x <= p.r_prime() + 2 && p.e() < 2 * p.r() {
            prop_assert!(bound.derived <= dj_ef_expected(&p).unwrap());
        }
    }

    #[test]
    fn sweep_rows_round_trip(g in 1i64..=10, r in 1i64..=4, e in 1i64..=5) {
        let bounds = SweepBounds::genus_capped(g, r, e).unwrap();
        let rows: Vec<SweepRow> = sweep(&bounds).entries.iter().map(SweepRow::from).collect();
        let csv_text = to_string(&rows, Format::Csv);
        let json_text = to_string(&rows, Format::Json);
        prop_assert_eq!(&parse_csv::<SweepRow>(&csv_text).unwrap(), &rows);
        prop_assert_eq!(&parse_json::<SweepRow>(&json_text).unwrap(), &rows);
    }
}

#[test]
fn sweep_is_deterministic() {
    let bounds = SweepBounds::genus_capped(20, 8, 12).unwrap();
    let first = sweep(&bounds);
    for _ in 0..3 {
        assert_eq!(sweep(&bounds), first);
    }
}
