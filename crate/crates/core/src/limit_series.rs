//! Limit linear series on a two-component curve of compact type
//! `X = C_1 ∪_p C_2`.
//!
//! The enumeration here counts compatible *pairs* of vanishing sequences at
//! the node, not linear series: a component may carry several series with
//! the same ramification.

use std::fmt;

use crate::bn::{RamificationSequence, SeriesParams, VanishingSequence};
use crate::error::{Error, Result};

/// Largest `r` accepted by [`enumerate_refined_pairs`].
pub const MAX_ENUM_R: i64 = 10;
/// Largest `d` accepted by [`enumerate_refined_pairs`].
pub const MAX_ENUM_D: i64 = 30;

fn check_same_shape(a_y: &VanishingSequence, a_z: &VanishingSequence, d: i64) -> Result<()> {
    if a_y.len() != a_z.len() {
        return Err(Error::LengthMismatch {
            expected: a_y.len(),
            found: a_z.len(),
        });
    }
    for a in [a_y, a_z] {
        if a.degree() != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: a.degree(),
            });
        }
    }
    Ok(())
}

fn node_sums<'a>(
    a_y: &'a VanishingSequence,
    a_z: &'a VanishingSequence,
) -> impl Iterator<Item = i64> + 'a {
    a_y.entries()
        .iter()
        .zip(a_z.entries().iter().rev())
        .map(|(y, z)| y + z)
}

/// `a_i(l_Y, p) + a_{r-i}(l_Z, p) >= d` for every `i`.
pub fn crude_compatible(a_y: &VanishingSequence, a_z: &VanishingSequence, d: i64) -> Result<bool> {
    check_same_shape(a_y, a_z, d)?;
    Ok(node_sums(a_y, a_z).all(|s| s >= d))
}

/// Equality in every node inequality.
pub fn refined_compatible(
    a_y: &VanishingSequence,
    a_z: &VanishingSequence,
    d: i64,
) -> Result<bool> {
    check_same_shape(a_y, a_z, d)?;
    Ok(node_sums(a_y, a_z).all(|s| s == d))
}

/// Which genus enters the summand of the existence criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EhReading {
    /// `(alpha_j + g_i - d + r)_+` on component `i`.
    #[default]
    ComponentGenus,
    /// `(alpha_j + g_1 - d + r)_+` on both components, taken literally.
    FirstComponentGenus,
}

fn eh_sum(summand_genus: i64, alpha: &RamificationSequence) -> i64 {
    let shift = summand_genus - alpha.degree() + alpha.r();
    alpha.entries().iter().map(|a| (a + shift).max(0)).sum()
}

/// Whether a general pointed curve of genus `genus` carries a `g^r_d` with
/// ramification at least `alpha` at the point: `sum_j (alpha_j + g - d + r)_+ <= g`.
/// `r` and `d` are read off `alpha`.
pub fn eh_existence(genus: i64, alpha: &RamificationSequence) -> bool {
    eh_sum(genus, alpha) <= genus
}

/// The literal variant: the summand uses `g1` while the bound uses `genus`.
pub fn eh_existence_literal(g1: i64, genus: i64, alpha: &RamificationSequence) -> bool {
    eh_sum(g1, alpha) <= genus
}

/// `X = C_1 ∪_p C_2` with a series type `g^r_d` on each component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodalSplit {
    g1: i64,
    g2: i64,
    r: i64,
    d: i64,
}

impl NodalSplit {
    pub fn new(g1: i64, g2: i64, r: i64, d: i64) -> Result<Self> {
        if g1 < 0 || g2 < 0 {
            return Err(Error::Hypothesis(format!(
                "component genera must be nonnegative, got ({g1}, {g2})"
            )));
        }
        // validates 0 <= r <= d
        SeriesParams::new(g1 + g2, r, d)?;
        Ok(Self { g1, g2, r, d })
    }

    pub const fn g1(&self) -> i64 {
        self.g1
    }

    pub const fn g2(&self) -> i64 {
        self.g2
    }

    pub const fn r(&self) -> i64 {
        self.r
    }

    pub const fn d(&self) -> i64 {
        self.d
    }

    pub const fn genus(&self) -> i64 {
        self.g1 + self.g2
    }

    pub fn swapped(&self) -> Self {
        Self {
            g1: self.g2,
            g2: self.g1,
            ..*self
        }
    }
}

/// Vanishing sequences of the two aspects at the node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RefinedPair {
    pub first: VanishingSequence,
    pub second: VanishingSequence,
}

impl fmt::Display for RefinedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// All refined pairs on `split` whose aspects both pass the existence
/// criterion, in lexicographic order.
pub fn enumerate_refined_pairs(split: &NodalSplit) -> Result<Vec<RefinedPair>> {
    enumerate_refined_pairs_with(split, EhReading::default())
}

pub fn enumerate_refined_pairs_with(
    split: &NodalSplit,
    reading: EhReading,
) -> Result<Vec<RefinedPair>> {
    let NodalSplit { g1, g2, r, d } = *split;
    if r > MAX_ENUM_R || d > MAX_ENUM_D {
        return Err(Error::EnumerationTooLarge {
            r,
            d,
            r_cap: MAX_ENUM_R,
            d_cap: MAX_ENUM_D,
        });
    }
    let (summand1, summand2) = match reading {
        EhReading::ComponentGenus => (g1, g2),
        EhReading::FirstComponentGenus => (g1, g1),
    };
    let mut search = PairSearch {
        r,
        d,
        shift1: summand1 - d + r,
        shift2: summand2 - d + r,
        cap1: g1,
        cap2: g2,
        prefix: Vec::with_capacity((r + 1) as usize),
        out: Vec::new(),
    };
    search.extend(0, 0, 0);
    Ok(search.out)
}

/// Depth-first search over the first sequence. Refinement pins the second
/// sequence (`b_{r-i} = d - a_i`), so each `a_i` adds one term to each of
/// the two existence sums; both sums only grow, which allows pruning.
struct PairSearch {
    r: i64,
    d: i64,
    shift1: i64,
    shift2: i64,
    cap1: i64,
    cap2: i64,
    prefix: Vec<i64>,
    out: Vec<RefinedPair>,
}

impl PairSearch {
    fn extend(&mut self, start: i64, sum1: i64, sum2: i64) {
        let i = self.prefix.len() as i64;
        if i == self.r + 1 {
            let first = self.prefix.clone();
            let second = first.iter().rev().map(|a| self.d - a).collect();
            self.out.push(RefinedPair {
                first: VanishingSequence::new(first, self.d).expect("search keeps sequences valid"),
                second: VanishingSequence::new(second, self.d)
                    .expect("search keeps sequences valid"),
            });
            return;
        }
        // leave room for the remaining r - i entries
        let last = self.d - (self.r - i);
        for a in start..=last {
            let alpha1 = a - i;
            let alpha2 = (self.d - a) - (self.r - i);
            let s1 = sum1 + (alpha1 + self.shift1).max(0);
            let s2 = sum2 + (alpha2 + self.shift2).max(0);
            // alpha1 grows with a, so once s1 overflows it stays overflowed
            if s1 > self.cap1 {
                break;
            }
            if s2 > self.cap2 {
                continue;
            }
            self.prefix.push(a);
            self.extend(a + 1, s1, s2);
            self.prefix.pop();
        }
    }
}

/// Degeneration datum for a series with `rho = 0` and `s >= 2`: genera
/// `g1 = (s-1)(r+1)`, `g2 = r+1`, aspect `l_1(r p)` on `C_1` with
/// `l_1 = g^r_{d-r}`, and aspect `l_2((d-2r) p)` on `C_2` with `l_2` canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct InductionDatum {
    pub split: NodalSplit,
    pub aspect1: SeriesParams,
    pub twist1: i64,
    pub aspect2: SeriesParams,
    pub twist2: i64,
}

pub fn induction_datum(p: &SeriesParams) -> Result<InductionDatum> {
    if p.rho() != 0 {
        return Err(Error::Hypothesis(format!("rho{p} = {} != 0", p.rho())));
    }
    let s = p.speciality();
    if s < 2 {
        return Err(Error::Hypothesis(format!("speciality of {p} is {s} < 2")));
    }
    let (r, d) = (p.r(), p.d());
    let g1 = (s - 1) * (r + 1);
    let g2 = r + 1;
    let datum = InductionDatum {
        split: NodalSplit::new(g1, g2, r, d)?,
        aspect1: SeriesParams::new(g1, r, d - r)?,
        twist1: r,
        aspect2: SeriesParams::new(g2, r, 2 * r)?,
        twist2: d - 2 * r,
    };
    debug_assert_eq!(g1 + g2, p.g());
    debug_assert_eq!(datum.aspect1.speciality(), s - 1);
    debug_assert_eq!(datum.aspect2.speciality(), 1);
    debug_assert_eq!(datum.aspect1.rho(), 0);
    Ok(datum)
}
