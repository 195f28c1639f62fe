//! Brute-force checks of the degeneration bookkeeping on `X = C_1 ∪_p C_2`.
//!
//! For a secant problem with `rho = 0` and `s >= 2`, a divisor `D + D'`
//! specialises to `X` with `D` split as `d1 + d2` and `D'` as `d1' + d2'`.
//! The coefficients of the node in the two aspects of `l'` are
//! `c1 = d - r - e - d1'` and `c2 = 2r - e - d2'`. They always satisfy
//! `c1 + c2 = r - e`, so whether both are positive depends on the parameters;
//! this module measures it instead of assuming it.

use crate::dejonq::dj_ef_expected;
use crate::error::{Error, Result};
use crate::limit_series::induction_datum;
use crate::secant::{expected_secant_dim, SecantProblem};

/// Degrees of `D_1, D'_1, D_2, D'_2` and the node coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeDistribution {
    pub d1: i64,
    pub d1p: i64,
    pub d2: i64,
    pub d2p: i64,
    pub c1: i64,
    pub c2: i64,
}

impl DegreeDistribution {
    fn from_split(p: &SecantProblem, d1: i64, d1p: i64) -> Self {
        let d2 = p.e() - d1;
        let d2p = p.d_prime() - d1p;
        Self {
            d1,
            d1p,
            d2,
            d2p,
            c1: p.d() - p.r() - p.e() - d1p,
            c2: 2 * p.r() - p.e() - d2p,
        }
    }

    /// Node coefficients nonnegative and the ramification ranges
    /// `d-2r <= d1+d1' <= d-r`, `r <= d2+d2' <= 2r`.
    pub fn is_admissible(&self, p: &SecantProblem) -> bool {
        let (r, d, e) = (p.r(), p.d(), p.e());
        let first = self.d1 + self.d1p;
        let second = self.d2 + self.d2p;
        self.c1 >= 0
            && self.c2 >= 0
            && (d - 2 * r..=d - r).contains(&first)
            && (r..=2 * r).contains(&second)
            && (0..=e).contains(&self.d1)
            && (0..=e).contains(&self.d2)
    }

    pub fn is_base_point_witness(&self) -> bool {
        self.c1 == 0 || self.c2 == 0
    }
}

fn require_degeneration_regime(p: &SecantProblem) -> Result<()> {
    if p.rho() != 0 {
        return Err(Error::Hypothesis(format!("rho = {} != 0 at {p}", p.rho())));
    }
    if p.speciality() < 2 {
        return Err(Error::Hypothesis(format!(
            "speciality {} < 2 at {p}",
            p.speciality()
        )));
    }
    if p.r_prime() < 0 {
        return Err(Error::Hypothesis(format!(
            "r' = {} < 0 at {p}",
            p.r_prime()
        )));
    }
    Ok(())
}

/// Every split of the degrees of `D` and `D'` between the components, with
/// no admissibility filter. Ordered by `(d1, d1')`.
pub fn raw_distributions(p: &SecantProblem) -> Result<Vec<DegreeDistribution>> {
    require_degeneration_regime(p)?;
    let mut out = Vec::new();
    for d1 in 0..=p.e() {
        for d1p in 0..=p.d_prime() {
            out.push(DegreeDistribution::from_split(p, d1, d1p));
        }
    }
    Ok(out)
}

/// The admissible distributions, ordered by `(d1, d1')`.
pub fn admissible_distributions(p: &SecantProblem) -> Result<Vec<DegreeDistribution>> {
    Ok(raw_distributions(p)?
        .into_iter()
        .filter(|dd| dd.is_admissible(p))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePointReport {
    pub admissible: usize,
    /// Every admissible distribution has `c1 >= 1` and `c2 >= 1`.
    pub holds_everywhere: bool,
    pub witnesses: Vec<DegreeDistribution>,
}

pub fn base_point_report(p: &SecantProblem) -> Result<BasePointReport> {
    let all = admissible_distributions(p)?;
    let witnesses: Vec<_> = all
        .iter()
        .copied()
        .filter(DegreeDistribution::is_base_point_witness)
        .collect();
    Ok(BasePointReport {
        admissible: all.len(),
        holds_everywhere: witnesses.is_empty(),
        witnesses,
    })
}

/// How the `(s-2)` factor of the `C_1` dimension is multiplied out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FactorReading {
    /// `(s-2)(r+1-e+f)`.
    #[default]
    Printed,
    /// `(s-2)(r-e+f)`, matching the induction hypothesis.
    Derived,
}

/// Component dimensions of the refined de Jonquieres loci, with and without
/// the forced base point `alpha = (1, ..., 1)` (which subtracts `r' + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentDims {
    pub first: i64,
    pub second: i64,
    pub first_ramified: i64,
    pub second_ramified: i64,
}

impl ComponentDims {
    pub const fn ramified_sum(&self) -> i64 {
        self.first_ramified + self.second_ramified
    }
}

pub fn component_dj_dims(p: &SecantProblem, reading: FactorReading) -> Result<ComponentDims> {
    require_degeneration_regime(p)?;
    induction_datum(&p.base())?;
    let x = expected_secant_dim(p);
    let rp = p.r_prime();
    let factor = match reading {
        FactorReading::Printed => rp + 1,
        FactorReading::Derived => rp,
    };
    let first = x - (p.speciality() - 2) * factor;
    let second = x;
    Ok(ComponentDims {
        first,
        second,
        first_ramified: first - (rp + 1),
        second_ramified: second - (rp + 1),
    })
}

/// Upper bounds for `dim DJ_{e,f}(X, l)` on the central fibre.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberBound {
    /// `2 expdim - s r'`.
    pub printed: i64,
    /// Sum of the two ramified component dimensions under the derived factor
    /// reading: `2 expdim - s r' - 2`.
    pub derived: i64,
}

pub fn central_fiber_bound(p: &SecantProblem) -> Result<FiberBound> {
    let dims = component_dj_dims(p, FactorReading::Derived)?;
    let x = expected_secant_dim(p);
    Ok(FiberBound {
        printed: 2 * x - p.speciality() * p.r_prime(),
        derived: dims.ramified_sum(),
    })
}

/// Whether the central-fibre bound closes the induction step:
/// `min(printed, derived) <= dj_ef_expected`. Requires the hypotheses of the
/// dimension theorem (`rho = 0`, `expdim <= r'+2`, `e < 2r`) and `s >= 2`.
pub fn thm4_via_degeneration(p: &SecantProblem) -> Result<bool> {
    require_degeneration_regime(p)?;
    let x = expected_secant_dim(p);
    if x > p.r_prime() + 2 {
        return Err(Error::Hypothesis(format!(
            "expdim {x} > r' + 2 = {} at {p}",
            p.r_prime() + 2
        )));
    }
    if p.e() >= 2 * p.r() {
        return Err(Error::Hypothesis(format!("e >= 2r at {p}")));
    }
    let bound = central_fiber_bound(p)?;
    Ok(bound.printed.min(bound.derived) <= dj_ef_expected(p)?)
}
