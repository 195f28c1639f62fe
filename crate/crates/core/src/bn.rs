//! Brill-Noether arithmetic for a linear series `g^r_d` and the algebra of
//! vanishing and ramification sequences at a point.
//!
//! Everything here is exact signed integer arithmetic. `rho` and the index of
//! speciality are recomputed from `(g, r, d)` on every call.

use std::fmt;

use crate::error::{Error, Result};

/// `g - (r+1)(g-d+r)` on raw integers. Callers that have a validated
/// [`SeriesParams`] should prefer [`SeriesParams::rho`].
pub const fn brill_noether_number(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// The numeric type `(g, r, d)` of a linear series of degree `d` and
/// dimension `r` on a curve of genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeriesParams {
    g: i64,
    r: i64,
    d: i64,
}

impl SeriesParams {
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        let reason = if g < 0 {
            Some("genus must be nonnegative")
        } else if r < 0 {
            Some("dimension must be nonnegative")
        } else if r > d {
            Some("dimension exceeds degree")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidSeries { g, r, d, reason }),
            None => Ok(Self { g, r, d }),
        }
    }

    /// The canonical series `g^{g-1}_{2g-2}`; needs `g >= 1`.
    pub fn canonical(g: i64) -> Result<Self> {
        Self::new(g, g - 1, 2 * g - 2)
    }

    pub const fn g(&self) -> i64 {
        self.g
    }

    pub const fn r(&self) -> i64 {
        self.r
    }

    pub const fn d(&self) -> i64 {
        self.d
    }

    /// Brill-Noether number. Negative values are meaningful and returned as is.
    pub const fn rho(&self) -> i64 {
        brill_noether_number(self.g, self.r, self.d)
    }

    /// Index of speciality `s = g - d + r`.
    pub const fn speciality(&self) -> i64 {
        self.g - self.d + self.r
    }

    /// Residual series type `(g, s-1, 2g-2-d)`. Requires `s >= 1`.
    pub fn residual(&self) -> Result<Self> {
        let s = self.speciality();
        if s < 1 {
            return Err(Error::InvalidSeries {
                g: self.g,
                r: self.r,
                d: self.d,
                reason: "residual series needs speciality >= 1",
            });
        }
        Self::new(self.g, s - 1, 2 * self.g - 2 - self.d)
    }

    /// `rho - sum(alpha)`: expected dimension of series with ramification at
    /// least `alpha` at a general point.
    pub fn adjusted_rho(&self, alpha: &RamificationSequence) -> Result<i64> {
        if alpha.r() != self.r {
            return Err(Error::LengthMismatch {
                expected: (self.r + 1) as usize,
                found: alpha.len(),
            });
        }
        if alpha.degree() != self.d {
            return Err(Error::DegreeMismatch {
                expected: self.d,
                found: alpha.degree(),
            });
        }
        Ok(self.rho() - alpha.sum())
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.g, self.r, self.d)
    }
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, a) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{a}")?;
    }
    f.write_str(")")
}

/// Orders of vanishing `0 <= a_0 < a_1 < ... < a_r <= d` at a point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VanishingSequence {
    entries: Vec<i64>,
    d: i64,
}

impl VanishingSequence {
    pub fn new(entries: Vec<i64>, d: i64) -> Result<Self> {
        let reason = if entries.is_empty() {
            Some("sequence must have at least one entry")
        } else if entries[0] < 0 {
            Some("first entry must be nonnegative")
        } else if entries.windows(2).any(|w| w[0] >= w[1]) {
            Some("entries must be strictly increasing")
        } else if *entries.last().unwrap() > d {
            Some("last entry exceeds the degree")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidSequence { entries, d, reason }),
            None => Ok(Self { entries, d }),
        }
    }

    /// `(0, 1, ..., r)`: the vanishing sequence at a non-ramified point.
    pub fn unramified(r: i64, d: i64) -> Result<Self> {
        Self::new((0..=r).collect(), d)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn r(&self) -> i64 {
        self.entries.len() as i64 - 1
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn ramification(&self) -> RamificationSequence {
        RamificationSequence {
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(i, a)| a - i as i64)
                .collect(),
            d: self.d,
        }
    }
}

impl fmt::Display for VanishingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

/// `alpha_i = a_i - i`, so `0 <= alpha_0 <= ... <= alpha_r <= d - r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RamificationSequence {
    entries: Vec<i64>,
    d: i64,
}

impl RamificationSequence {
    pub fn new(entries: Vec<i64>, d: i64) -> Result<Self> {
        let r = entries.len() as i64 - 1;
        let reason = if entries.is_empty() {
            Some("sequence must have at least one entry")
        } else if entries[0] < 0 {
            Some("first entry must be nonnegative")
        } else if entries.windows(2).any(|w| w[0] > w[1]) {
            Some("entries must be nondecreasing")
        } else if *entries.last().unwrap() > d - r {
            Some("last entry exceeds d - r")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidSequence { entries, d, reason }),
            None => Ok(Self { entries, d }),
        }
    }

    /// Constant sequence `(value, ..., value)` of length `r + 1`.
    pub fn constant(r: i64, d: i64, value: i64) -> Result<Self> {
        Self::new(vec![value; (r + 1).max(0) as usize], d)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn r(&self) -> i64 {
        self.entries.len() as i64 - 1
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn vanishing(&self) -> VanishingSequence {
        VanishingSequence {
            entries: self
                .entries
                .iter()
                .enumerate()
                .map(|(i, a)| a + i as i64)
                .collect(),
            d: self.d,
        }
    }
}

impl fmt::Display for RamificationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

/// Entry-wise `a_i - i`.
pub fn ramification_from_vanishing(a: &VanishingSequence) -> RamificationSequence {
    a.ramification()
}

/// Entry-wise `alpha_i + i`; inverse of [`ramification_from_vanishing`].
pub fn vanishing_from_ramification(alpha: &RamificationSequence) -> VanishingSequence {
    alpha.vanishing()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(g: i64, r: i64, d: i64) -> SeriesParams {
        SeriesParams::new(g, r, d).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(sp(4, 1, 3).rho(), 0);
        assert_eq!(sp(12, 5, 15).rho(), 0);
        assert_eq!(sp(7, 2, 7).rho(), 1);
    }

    #[test]
    fn speciality_examples() {
        assert_eq!(sp(12, 5, 15).speciality(), 2);
        assert_eq!(sp(4, 3, 6).speciality(), 1);
        assert_eq!(sp(21, 6, 24).speciality(), 3);
    }

    #[test]
    fn residual_examples() {
        assert_eq!(sp(4, 1, 3).residual().unwrap(), sp(4, 1, 3));
        let res = sp(7, 2, 7).residual().unwrap();
        assert_eq!(res, sp(7, 1, 5));
        assert_eq!(res.rho(), 1);
        for g in 1..15 {
            let k = SeriesParams::canonical(g).unwrap();
            assert_eq!(k.residual().unwrap(), sp(g, 0, 0));
        }
    }

    #[test]
    fn residual_rejects_nonspecial() {
        // s = 0
        assert!(sp(3, 1, 4).residual().is_err());
        // s < 0
        assert!(sp(2, 3, 6).residual().is_err());
    }

    #[test]
    fn adjusted_rho_examples() {
        let p = sp(4, 1, 3);
        let zero = RamificationSequence::new(vec![0, 0], 3).unwrap();
        let one = RamificationSequence::new(vec![0, 1], 3).unwrap();
        assert_eq!(p.adjusted_rho(&zero).unwrap(), 0);
        assert_eq!(p.adjusted_rho(&one).unwrap(), -1);
        let q = sp(6, 1, 4);
        let ones = RamificationSequence::new(vec![1, 1], 4).unwrap();
        assert_eq!(q.rho(), 0);
        assert_eq!(q.adjusted_rho(&ones).unwrap(), -2);
    }

    #[test]
    fn adjusted_rho_rejects_length_mismatch() {
        let alpha = RamificationSequence::new(vec![0, 0, 0], 3).unwrap();
        assert!(matches!(
            sp(4, 1, 3).adjusted_rho(&alpha),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn ramification_examples() {
        let a = VanishingSequence::new(vec![0, 1, 2, 3], 3).unwrap();
        assert_eq!(ramification_from_vanishing(&a).entries(), &[0, 0, 0, 0]);
        let a = VanishingSequence::new(vec![1, 2], 2).unwrap();
        assert_eq!(a.ramification().entries(), &[1, 1]);
        let a = VanishingSequence::new(vec![0, 3], 4).unwrap();
        assert_eq!(a.ramification().entries(), &[0, 2]);
    }

    #[test]
    fn sequence_validation() {
        assert!(VanishingSequence::new(vec![], 3).is_err());
        assert!(VanishingSequence::new(vec![-1, 2], 3).is_err());
        assert!(VanishingSequence::new(vec![1, 1], 3).is_err());
        assert!(VanishingSequence::new(vec![0, 4], 3).is_err());
        assert!(RamificationSequence::new(vec![1, 0], 3).is_err());
        assert!(RamificationSequence::new(vec![0, 3], 3).is_err());
        assert!(RamificationSequence::new(vec![2, 2], 3).is_ok());
    }

    #[test]
    fn invalid_series_rejected() {
        assert!(SeriesParams::new(-1, 0, 0).is_err());
        assert!(SeriesParams::new(2, -1, 0).is_err());
        assert!(SeriesParams::new(2, 3, 2).is_err());
    }

    #[test]
    fn rho_step_in_degree() {
        for g in 0..12 {
            for r in 0..6 {
                for d in r..30 {
                    assert_eq!(sp(g, r, d + 1).rho() - sp(g, r, d).rho(), r + 1);
                }
            }
        }
    }
}
