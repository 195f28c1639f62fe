//! Secant-variety parameters `V_e^{e-f}(l)` and the emptiness and
//! non-emptiness criteria that can be evaluated from numbers alone.
//!
//! A [`SecantProblem`] is a series type `(g, r, d)` together with `(e, f)`:
//! degree-`e` divisors imposing at most `e - f` conditions on a `g^r_d`.
//! [`classify`] runs every criterion and records which ones fired.

use std::fmt;

use crate::bn::{brill_noether_number, SeriesParams};
use crate::dejonq;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SecantProblem {
    base: SeriesParams,
    e: i64,
    f: i64,
}

impl SecantProblem {
    pub fn new(base: SeriesParams, e: i64, f: i64) -> Result<Self> {
        let reason = if e < 1 {
            Some("e must be positive")
        } else if f < 0 {
            Some("f must be nonnegative")
        } else if f >= e {
            Some("f must be smaller than e")
        } else if e > base.d() {
            Some("e exceeds the degree d")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidProblem {
                g: base.g(),
                r: base.r(),
                d: base.d(),
                e,
                f,
                reason,
            }),
            None => Ok(Self { base, e, f }),
        }
    }

    pub fn from_tuple(g: i64, r: i64, d: i64, e: i64, f: i64) -> Result<Self> {
        Self::new(SeriesParams::new(g, r, d)?, e, f)
    }

    pub const fn base(&self) -> SeriesParams {
        self.base
    }

    pub const fn g(&self) -> i64 {
        self.base.g()
    }

    pub const fn r(&self) -> i64 {
        self.base.r()
    }

    pub const fn d(&self) -> i64 {
        self.base.d()
    }

    pub const fn e(&self) -> i64 {
        self.e
    }

    pub const fn f(&self) -> i64 {
        self.f
    }

    pub const fn rho(&self) -> i64 {
        self.base.rho()
    }

    pub const fn speciality(&self) -> i64 {
        self.base.speciality()
    }

    /// `r' = r - e + f`, the dimension required of `l - D`.
    pub const fn r_prime(&self) -> i64 {
        self.base.r() - self.e + self.f
    }

    /// `d' = d - e`.
    pub const fn d_prime(&self) -> i64 {
        self.base.d() - self.e
    }

    /// `s' = s + f`, the speciality of `l - D` when `l` is complete.
    pub const fn s_prime(&self) -> i64 {
        self.base.speciality() + self.f
    }

    /// `(g, r', d')` when it is a well-formed series type.
    pub fn residual_params(&self) -> Option<SeriesParams> {
        SeriesParams::new(self.g(), self.r_prime(), self.d_prime()).ok()
    }

    /// `rho(g, r', d')`, computed on raw integers.
    pub const fn residual_rho(&self) -> i64 {
        brill_noether_number(self.g(), self.r_prime(), self.d_prime())
    }

    pub fn tuple(&self) -> (i64, i64, i64, i64, i64) {
        (self.g(), self.r(), self.d(), self.e, self.f)
    }
}

impl fmt::Display for SecantProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.g(),
            self.r(),
            self.d(),
            self.e,
            self.f
        )
    }
}

/// `e - f(r + 1 - e + f)`.
pub const fn expected_secant_dim(p: &SecantProblem) -> i64 {
    p.e - p.f * (p.r_prime() + 1)
}

/// Both sides of the identity relating the expected dimension to the
/// Brill-Noether numbers of `l` and `l - D`, evaluated exactly as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Eq2Sides {
    pub lhs: i64,
    pub rhs: i64,
}

impl Eq2Sides {
    pub const fn gap(&self) -> i64 {
        self.lhs - self.rhs
    }
}

/// LHS `e - f(r+1-e+f)` and RHS `rho(g,r',d') - rho(g,r,d) - (e-f)(s-1)`.
/// Requires `r' >= 0`.
pub fn eq2_sides(p: &SecantProblem) -> Result<Eq2Sides> {
    if p.r_prime() < 0 {
        return Err(Error::Hypothesis(format!(
            "r' = {} < 0 at {p}",
            p.r_prime()
        )));
    }
    let lhs = expected_secant_dim(p);
    let rhs = p.residual_rho() - p.rho() - (p.e - p.f) * (p.speciality() - 1);
    Ok(Eq2Sides { lhs, rhs })
}

/// Farkas: empty for every `l` once the expected dimension drops below `-rho`.
pub const fn farkas_empty(p: &SecantProblem) -> bool {
    expected_secant_dim(p) < -p.rho()
}

/// Coppens-Martens: `d >= 2e - 1` and `expdim >= r'` give a non-empty
/// secant variety. False when `r' < 0`.
pub const fn cm_nonempty(p: &SecantProblem) -> bool {
    p.r_prime() >= 0 && p.d() >= 2 * p.e - 1 && expected_secant_dim(p) >= p.r_prime()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Thm1Case {
    /// `s = 2` and `expdim < r'`.
    I,
    /// `s >= 3` and `expdim < min(r' + 2, (s-1) r')`.
    II,
}

/// Emptiness for `rho = 0` and `e < 2r`. Returns which part applies, if any.
pub fn thm1_empty(p: &SecantProblem) -> Option<Thm1Case> {
    let rp = p.r_prime();
    if p.rho() != 0 || rp < 0 || p.e >= 2 * p.r() {
        return None;
    }
    let x = expected_secant_dim(p);
    let s = p.speciality();
    if s == 2 && x < rp {
        Some(Thm1Case::I)
    } else if s >= 3 && x < (rp + 2).min((s - 1) * rp) {
        Some(Thm1Case::II)
    } else {
        None
    }
}

/// Member of the two-parameter family with `expdim = 0` and empty secant
/// variety: `f = e/2`, `r = f + 1`, `s = 2`, `g = rho + 2(r+1)`, `d = g + r - 2`.
pub fn prop1_family(e: i64, rho_target: i64) -> Result<SecantProblem> {
    if e < 2 || e % 2 != 0 {
        return Err(Error::Hypothesis(format!(
            "family needs a positive even e, got {e}"
        )));
    }
    if rho_target < 0 {
        return Err(Error::Hypothesis(format!(
            "family needs rho >= 0, got {rho_target}"
        )));
    }
    let f = e / 2;
    let r = f + 1;
    let g = rho_target + 2 * (r + 1);
    let d = g + r - 2;
    SecantProblem::from_tuple(g, r, d, e, f)
}

/// Inverts the family equations instead of regenerating tuples.
pub fn is_prop1_member(p: &SecantProblem) -> bool {
    let (g, r, d, e, f) = p.tuple();
    let rho = p.rho();
    e >= 2
        && e % 2 == 0
        && f == e / 2
        && r == f + 1
        && p.speciality() == 2
        && rho >= 0
        && g == rho + 2 * (r + 1)
        && d == g + r - 2
}

/// A criterion that fired during classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Farkas,
    Prop1,
    Thm1i,
    Thm1ii,
    Cor5,
    CoppensMartens,
    Trivial,
}

impl Rule {
    pub const fn name(self) -> &'static str {
        match self {
            Rule::Farkas => "Farkas",
            Rule::Prop1 => "Prop1",
            Rule::Thm1i => "Thm1i",
            Rule::Thm1ii => "Thm1ii",
            Rule::Cor5 => "Cor5",
            Rule::CoppensMartens => "CM",
            Rule::Trivial => "Trivial",
        }
    }

    /// Rules whose firing carries an `Empty*` verdict.
    pub const fn is_empty_rule(self) -> bool {
        matches!(
            self,
            Rule::Farkas | Rule::Prop1 | Rule::Thm1i | Rule::Thm1ii
        )
    }

    pub const fn is_nonempty_rule(self) -> bool {
        matches!(self, Rule::CoppensMartens | Rule::Trivial)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictTag {
    EmptyFarkas,
    EmptyThm1i,
    EmptyThm1ii,
    EmptyProp1,
    NonEmptyCM,
    NonEmptyTrivial,
    Undetermined,
    Conflict,
}

impl VerdictTag {
    pub const fn name(self) -> &'static str {
        match self {
            VerdictTag::EmptyFarkas => "EmptyFarkas",
            VerdictTag::EmptyThm1i => "EmptyThm1i",
            VerdictTag::EmptyThm1ii => "EmptyThm1ii",
            VerdictTag::EmptyProp1 => "EmptyProp1",
            VerdictTag::NonEmptyCM => "NonEmptyCM",
            VerdictTag::NonEmptyTrivial => "NonEmptyTrivial",
            VerdictTag::Undetermined => "Undetermined",
            VerdictTag::Conflict => "Conflict",
        }
    }

    pub const fn is_empty(self) -> bool {
        matches!(
            self,
            VerdictTag::EmptyFarkas
                | VerdictTag::EmptyThm1i
                | VerdictTag::EmptyThm1ii
                | VerdictTag::EmptyProp1
        )
    }

    pub const fn is_nonempty(self) -> bool {
        matches!(self, VerdictTag::NonEmptyCM | VerdictTag::NonEmptyTrivial)
    }
}

impl fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classification outcome. `notes` always lists every rule that fired, in
/// the fixed order of [`Rule`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Verdict {
    pub tag: VerdictTag,
    pub notes: Vec<Rule>,
}

impl Verdict {
    pub fn fired(&self, rule: Rule) -> bool {
        self.notes.contains(&rule)
    }

    /// Fired rules joined by `;`.
    pub fn rules_string(&self) -> String {
        self.notes
            .iter()
            .map(|r| r.name())
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Fires every applicable criterion and picks a tag by precedence:
/// `Conflict > EmptyFarkas > EmptyProp1 > EmptyThm1i > EmptyThm1ii >
/// NonEmptyCM > NonEmptyTrivial > Undetermined`.
///
/// The non-emptiness rules assert the existence of divisors for a given
/// series, so they only fire when `rho >= 0` (a general curve carries no
/// `g^r_d` otherwise). `r' < 0` and `f = 0` count as trivially non-empty.
/// `Cor5` is recorded in the notes but never decides the tag.
pub fn classify(p: &SecantProblem) -> Verdict {
    let mut notes = Vec::with_capacity(4);
    if farkas_empty(p) {
        notes.push(Rule::Farkas);
    }
    if is_prop1_member(p) {
        notes.push(Rule::Prop1);
    }
    match thm1_empty(p) {
        Some(Thm1Case::I) => notes.push(Rule::Thm1i),
        Some(Thm1Case::II) => notes.push(Rule::Thm1ii),
        None => {}
    }
    if dejonq::cor5_empty(p) {
        notes.push(Rule::Cor5);
    }
    if p.rho() >= 0 {
        if cm_nonempty(p) {
            notes.push(Rule::CoppensMartens);
        }
        if p.f() == 0 || p.r_prime() < 0 {
            notes.push(Rule::Trivial);
        }
    }

    let any_empty = notes.iter().any(|r| r.is_empty_rule());
    let any_nonempty = notes.iter().any(|r| r.is_nonempty_rule());
    let tag = if any_empty && any_nonempty {
        VerdictTag::Conflict
    } else {
        notes
            .iter()
            .find_map(|r| match r {
                Rule::Farkas => Some(VerdictTag::EmptyFarkas),
                Rule::Prop1 => Some(VerdictTag::EmptyProp1),
                Rule::Thm1i => Some(VerdictTag::EmptyThm1i),
                Rule::Thm1ii => Some(VerdictTag::EmptyThm1ii),
                Rule::CoppensMartens => Some(VerdictTag::NonEmptyCM),
                Rule::Trivial => Some(VerdictTag::NonEmptyTrivial),
                Rule::Cor5 => None,
            })
            .unwrap_or(VerdictTag::Undetermined)
    };
    Verdict { tag, notes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(g: i64, r: i64, d: i64, e: i64, f: i64) -> SecantProblem {
        SecantProblem::from_tuple(g, r, d, e, f).unwrap()
    }

    #[test]
    fn problem_validation() {
        assert!(SecantProblem::from_tuple(12, 5, 15, 0, 0).is_err());
        assert!(SecantProblem::from_tuple(12, 5, 15, 3, 3).is_err());
        assert!(SecantProblem::from_tuple(12, 5, 15, 3, -1).is_err());
        assert!(SecantProblem::from_tuple(12, 5, 15, 16, 1).is_err());
        assert!(SecantProblem::from_tuple(12, 5, 15, 15, 14).is_ok());
    }

    #[test]
    fn derived_residual_parameters() {
        let p = sp(12, 5, 15, 4, 1);
        assert_eq!(p.r_prime(), 2);
        assert_eq!(p.d_prime(), 11);
        assert_eq!(p.s_prime(), 3);
        assert_eq!(p.residual_params(), SeriesParams::new(12, 2, 11).ok());
        assert_eq!(p.residual_rho(), 3);
    }

    #[test]
    fn expected_dim_examples() {
        assert_eq!(expected_secant_dim(&sp(12, 5, 15, 4, 1)), 1);
        assert_eq!(expected_secant_dim(&sp(7, 2, 7, 2, 1)), 0);
        for e in 1..=15 {
            assert_eq!(expected_secant_dim(&sp(12, 5, 15, e, 0)), e);
        }
    }

    #[test]
    fn eq2_examples() {
        let s = eq2_sides(&sp(12, 5, 15, 4, 1)).unwrap();
        assert_eq!((s.lhs, s.rhs, s.gap()), (1, 0, 1));
        let s = eq2_sides(&sp(7, 2, 7, 2, 1)).unwrap();
        assert_eq!((s.lhs, s.rhs, s.gap()), (0, -1, 1));
        // f = 0, s = 1: canonical series on genus 5
        for e in 1..=4 {
            assert_eq!(eq2_sides(&sp(5, 4, 8, e, 0)).unwrap().gap(), 0);
        }
        assert!(eq2_sides(&sp(12, 5, 15, 8, 1)).is_err());
    }

    #[test]
    fn farkas_examples() {
        assert!(farkas_empty(&sp(12, 5, 15, 4, 2)));
        assert!(!farkas_empty(&sp(12, 5, 15, 4, 1)));
        assert!(!farkas_empty(&sp(7, 2, 7, 2, 1)));
    }

    #[test]
    fn cm_examples() {
        assert!(cm_nonempty(&sp(12, 5, 15, 5, 1)));
        assert!(!cm_nonempty(&sp(12, 5, 15, 4, 1)));
        assert!(cm_nonempty(&sp(4, 1, 3, 1, 0)));
        // r' < 0 never counts
        assert!(!cm_nonempty(&sp(12, 5, 15, 8, 1)));
    }

    #[test]
    fn thm1_examples() {
        assert_eq!(thm1_empty(&sp(12, 5, 15, 4, 1)), Some(Thm1Case::I));
        assert_eq!(thm1_empty(&sp(21, 6, 24, 6, 2)), Some(Thm1Case::II));
        assert_eq!(thm1_empty(&sp(12, 5, 15, 5, 1)), None);
        // rho = 1
        assert_eq!(thm1_empty(&sp(7, 2, 7, 2, 1)), None);
    }

    #[test]
    fn prop1_examples() {
        assert_eq!(prop1_family(2, 1).unwrap(), sp(7, 2, 7, 2, 1));
        assert_eq!(prop1_family(4, 0).unwrap(), sp(8, 3, 9, 4, 2));
        assert_eq!(prop1_family(2, 0).unwrap(), sp(6, 2, 6, 2, 1));
        assert_eq!(SeriesParams::new(8, 1, 5).unwrap().rho(), 0);
        assert!(prop1_family(3, 0).is_err());
        assert!(prop1_family(0, 0).is_err());
        assert!(prop1_family(4, -1).is_err());
    }

    #[test]
    fn prop1_membership_inverts_generator() {
        for e in (2..=20).step_by(2) {
            for rho in 0..=10 {
                assert!(is_prop1_member(&prop1_family(e, rho).unwrap()));
            }
        }
        assert!(!is_prop1_member(&sp(12, 5, 15, 4, 1)));
        assert!(!is_prop1_member(&sp(7, 2, 7, 2, 0)));
    }

    #[test]
    fn classify_examples() {
        let v = classify(&sp(12, 5, 15, 4, 1));
        assert_eq!(v.tag, VerdictTag::EmptyThm1i);
        assert_eq!(v.notes, vec![Rule::Thm1i, Rule::Cor5]);

        let v = classify(&sp(12, 5, 15, 5, 1));
        assert_eq!(v.tag, VerdictTag::NonEmptyCM);

        let v = classify(&sp(8, 3, 9, 4, 2));
        assert_eq!(v.tag, VerdictTag::EmptyProp1);
        assert!(v.fired(Rule::Thm1i));

        let v = classify(&sp(4, 1, 3, 1, 0));
        assert_eq!(v.tag, VerdictTag::NonEmptyCM);
        assert_eq!(v.rules_string(), "CM;Trivial");

        assert_eq!(classify(&sp(21, 6, 24, 6, 2)).tag, VerdictTag::EmptyThm1ii);
    }

    #[test]
    fn classify_negative_rho_only_fires_farkas() {
        // rho(2,1,1) = -2
        let v = classify(&sp(2, 1, 1, 1, 0));
        assert_eq!(v.tag, VerdictTag::EmptyFarkas);
        assert_eq!(v.notes, vec![Rule::Farkas]);
    }

    #[test]
    fn classify_reports_conflicts() {
        // Thm1ii and CM both fire
        let v = classify(&sp(12, 3, 12, 3, 1));
        assert_eq!(v.tag, VerdictTag::Conflict);
        assert!(v.fired(Rule::Thm1ii) && v.fired(Rule::CoppensMartens));
        // f = 0: Thm1i and Trivial both fire
        let v = classify(&sp(8, 3, 9, 1, 0));
        assert_eq!(v.tag, VerdictTag::Conflict);
        assert!(v.fired(Rule::Thm1i) && v.fired(Rule::Trivial));
    }

    #[test]
    fn trivial_for_negative_residual_dimension() {
        let v = classify(&sp(12, 5, 15, 8, 1));
        assert_eq!(v.tag, VerdictTag::NonEmptyTrivial);
    }
}
