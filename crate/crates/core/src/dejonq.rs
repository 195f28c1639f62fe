//! Refined de Jonquieres patterns and their dimension counts.
//!
//! A pattern `(lambda, mu, nu)` asks for divisors `a_1 D_1 + ... + a_k D_k`
//! in a series `l`, with `D_i` of degree `d_i` moving in a series of
//! dimension at least `r_i`. The formulas below are expected dimensions; a
//! negative value means the locus is expected to be empty.

use crate::bn::{brill_noether_number, RamificationSequence, SeriesParams};
use crate::error::{Error, Result};
use crate::secant::{expected_secant_dim, SecantProblem};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DJPattern {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    nu: Vec<i64>,
}

impl DJPattern {
    /// `lambda` holds the degrees `d_i`, `mu` the dimensions `r_i`, `nu` the
    /// multiplicities `a_i`.
    pub fn new(lambda: Vec<i64>, mu: Vec<i64>, nu: Vec<i64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidPattern(
                "pattern must have at least one part".into(),
            ));
        }
        if lambda.len() != mu.len() || lambda.len() != nu.len() {
            return Err(Error::InvalidPattern(format!(
                "lambda, mu, nu have lengths {}, {}, {}",
                lambda.len(),
                mu.len(),
                nu.len()
            )));
        }
        if lambda.iter().chain(&mu).any(|&x| x < 0) {
            return Err(Error::InvalidPattern(
                "degrees and dimensions must be nonnegative".into(),
            ));
        }
        if nu.iter().any(|&a| a < 1) {
            return Err(Error::InvalidPattern(
                "multiplicities must be positive".into(),
            ));
        }
        Ok(Self { lambda, mu, nu })
    }

    /// `lambda = (e, d-e)`, `mu = (0, r')`, `nu = (1, 1)`.
    pub fn secant(p: &SecantProblem) -> Result<Self> {
        Self::new(vec![p.e(), p.d_prime()], vec![0, p.r_prime()], vec![1, 1])
    }

    /// `lambda = (2g-2-d2, d2)`, `mu = (0, r2)`, `nu = (1, 1)` inside `|K_C|`.
    pub fn canonical(g: i64, d2: i64, r2: i64) -> Result<Self> {
        Self::new(vec![2 * g - 2 - d2, d2], vec![0, r2], vec![1, 1])
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn nu(&self) -> &[i64] {
        &self.nu
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// `N = sum d_i`.
    pub fn length(&self) -> i64 {
        self.lambda.iter().sum()
    }

    /// `sum a_i d_i`.
    pub fn total_degree(&self) -> i64 {
        self.lambda.iter().zip(&self.nu).map(|(d, a)| d * a).sum()
    }

    fn parts(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.lambda
            .iter()
            .zip(&self.mu)
            .zip(&self.nu)
            .map(|((&d, &r), &a)| (d, r, a))
    }

    /// Every part must be a well-formed series type with `rho(g, r_i, d_i) >= 0`.
    pub fn validate_for_genus(&self, g: i64) -> Result<()> {
        for (d_i, r_i, _) in self.parts() {
            let part =
                SeriesParams::new(g, r_i, d_i).map_err(|e| Error::InvalidPattern(e.to_string()))?;
            if part.rho() < 0 {
                return Err(Error::InvalidPattern(format!(
                    "rho{part} = {} < 0",
                    part.rho()
                )));
            }
        }
        Ok(())
    }

    /// Genus check plus `sum a_i d_i = d`, `N <= d` and `r_i <= r`.
    pub fn validate_against(&self, p: &SeriesParams) -> Result<()> {
        self.validate_for_genus(p.g())?;
        if self.total_degree() != p.d() {
            return Err(Error::InvalidPattern(format!(
                "sum a_i d_i = {} but d = {}",
                self.total_degree(),
                p.d()
            )));
        }
        if self.length() > p.d() {
            return Err(Error::InvalidPattern(format!(
                "N = {} exceeds d = {}",
                self.length(),
                p.d()
            )));
        }
        if let Some(&r_i) = self.mu.iter().find(|&&r_i| r_i > p.r()) {
            return Err(Error::InvalidPattern(format!(
                "r_i = {r_i} exceeds r = {}",
                p.r()
            )));
        }
        Ok(())
    }
}

/// `dim Delta = sum (rho(g, r_i, d_i) + r_i)`.
pub fn delta_dim(g: i64, pattern: &DJPattern) -> Result<i64> {
    pattern.validate_for_genus(g)?;
    Ok(pattern
        .parts()
        .map(|(d_i, r_i, _)| brill_noether_number(g, r_i, d_i) + r_i)
        .sum())
}

/// Degeneracy-locus lower bound `dim Delta - d + r`.
pub fn dj_lower_bound(p: &SeriesParams, pattern: &DJPattern) -> Result<i64> {
    pattern.validate_against(p)?;
    Ok(delta_dim(p.g(), pattern)? - p.d() + p.r())
}

fn require_nonnegative_residual(p: &SecantProblem) -> Result<()> {
    if p.r_prime() < 0 {
        return Err(Error::Hypothesis(format!(
            "r' = {} < 0 at {p}",
            p.r_prime()
        )));
    }
    Ok(())
}

/// `e - f(r+1-e+f) - (s-1)(r-e+f)`.
pub fn dj_ef_expected(p: &SecantProblem) -> Result<i64> {
    require_nonnegative_residual(p)?;
    Ok(expected_secant_dim(p) - (p.speciality() - 1) * p.r_prime())
}

/// [`dj_ef_expected`] when `l'` carries ramification at least `alpha` at a
/// general point; `alpha` has length `r' + 1`.
pub fn dj_ef_expected_ram(p: &SecantProblem, alpha: &RamificationSequence) -> Result<i64> {
    let base = dj_ef_expected(p)?;
    let expected = (p.r_prime() + 1) as usize;
    if alpha.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: alpha.len(),
        });
    }
    Ok(base - alpha.sum())
}

fn canonical_preconditions(g: i64, d2: i64, r2: i64) -> Result<()> {
    let part = SeriesParams::new(g, r2, d2)?;
    if part.rho() < 0 {
        return Err(Error::Hypothesis(format!("rho{part} = {} < 0", part.rho())));
    }
    if d2 > 2 * g - 2 {
        return Err(Error::Hypothesis(format!(
            "d2 = {d2} exceeds 2g-2 = {}",
            2 * g - 2
        )));
    }
    if g - d2 + r2 - 1 < 0 {
        return Err(Error::Hypothesis(format!(
            "g - d2 + r2 - 1 = {} < 0",
            g - d2 + r2 - 1
        )));
    }
    Ok(())
}

/// Dimension of refined de Jonquieres divisors `D_1 + D_2` in `|K_C|` with
/// `D_2` in `C^{r2}_{d2}`, as the closed formula `rho(g,r2,d2) + g-d2+r2-1`.
pub fn canonical_dj_dim(g: i64, d2: i64, r2: i64) -> Result<i64> {
    canonical_preconditions(g, d2, r2)?;
    Ok(brill_noether_number(g, r2, d2) + g - d2 + r2 - 1)
}

/// Parameter count over (class of `D_2`, `D_2` in its series, `D_1` in the
/// residual series): `rho + r2 + (g-d2+r2-1)`. Differs from
/// [`canonical_dj_dim`] by `r2`.
pub fn canonical_pair_count(g: i64, d2: i64, r2: i64) -> Result<i64> {
    canonical_preconditions(g, d2, r2)?;
    Ok(brill_noether_number(g, r2, d2) + r2 + (g - d2 + r2 - 1))
}

/// [`canonical_dj_dim`] with ramification at least `alpha` imposed on the
/// series of `D_2`; `alpha` has length `r2 + 1`.
pub fn canonical_dj_dim_ram(g: i64, d2: i64, r2: i64, alpha: &RamificationSequence) -> Result<i64> {
    let base = canonical_dj_dim(g, d2, r2)?;
    let expected = (r2 + 1) as usize;
    if alpha.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: alpha.len(),
        });
    }
    Ok(base - alpha.sum())
}

/// Dimension of `DJ_{e,f}(C, l)` for `rho = 0`, `expdim <= r' + 2` and
/// `e < 2r`; `None` outside that regime.
pub fn thm4_dim(p: &SecantProblem) -> Option<i64> {
    let rp = p.r_prime();
    if p.rho() != 0 || rp < 0 || expected_secant_dim(p) > rp + 2 || p.e() >= 2 * p.r() {
        return None;
    }
    dj_ef_expected(p).ok()
}

/// Emptiness of `DJ_{e,f}(C, l)` for `rho = 0`: `expdim <= r'+2`,
/// `expdim < min((s-1) r', r'+2)` and `e < 2r`.
pub fn cor5_empty(p: &SecantProblem) -> bool {
    let rp = p.r_prime();
    if p.rho() != 0 || rp < 0 {
        return false;
    }
    let x = expected_secant_dim(p);
    let s = p.speciality();
    x <= rp + 2 && x < ((s - 1) * rp).min(rp + 2) && p.e() < 2 * p.r()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(l: &[i64], m: &[i64], n: &[i64]) -> DJPattern {
        DJPattern::new(l.to_vec(), m.to_vec(), n.to_vec()).unwrap()
    }

    fn sp(g: i64, r: i64, d: i64) -> SeriesParams {
        SeriesParams::new(g, r, d).unwrap()
    }

    fn prob(g: i64, r: i64, d: i64, e: i64, f: i64) -> SecantProblem {
        SecantProblem::from_tuple(g, r, d, e, f).unwrap()
    }

    fn ram(v: &[i64], d: i64) -> RamificationSequence {
        RamificationSequence::new(v.to_vec(), d).unwrap()
    }

    #[test]
    fn delta_dim_examples() {
        assert_eq!(delta_dim(4, &pat(&[3, 3], &[0, 1], &[1, 1])).unwrap(), 4);
        assert_eq!(delta_dim(4, &pat(&[6], &[3], &[1])).unwrap(), 3);
        assert_eq!(delta_dim(6, &pat(&[4, 8], &[0, 3], &[1, 1])).unwrap(), 9);
    }

    #[test]
    fn delta_dim_rejects_negative_rho_part() {
        // rho(4, 2, 4) = 4 - 3*2 = -2
        assert!(delta_dim(4, &pat(&[4, 2], &[2, 0], &[1, 1])).is_err());
    }

    #[test]
    fn pattern_shape_errors() {
        assert!(DJPattern::new(vec![1, 2], vec![0], vec![1, 1]).is_err());
        assert!(DJPattern::new(vec![], vec![], vec![]).is_err());
        assert!(DJPattern::new(vec![3], vec![0], vec![0]).is_err());
        assert!(DJPattern::new(vec![-1], vec![0], vec![1]).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let k4 = sp(4, 3, 6);
        assert_eq!(
            dj_lower_bound(&k4, &pat(&[3, 3], &[0, 1], &[1, 1])).unwrap(),
            1
        );
        assert_eq!(dj_lower_bound(&k4, &pat(&[6], &[3], &[1])).unwrap(), 0);
        for g in 1..12 {
            let k = SeriesParams::canonical(g).unwrap();
            let full = pat(&[2 * g - 2], &[g - 1], &[1]);
            assert_eq!(dj_lower_bound(&k, &full).unwrap(), 0);
        }
    }

    #[test]
    fn lower_bound_rejects_wrong_total_degree() {
        assert!(dj_lower_bound(&sp(4, 3, 6), &pat(&[3, 2], &[0, 1], &[1, 1])).is_err());
        // r_i above r
        assert!(dj_lower_bound(&sp(4, 1, 6), &pat(&[6], &[3], &[1])).is_err());
    }

    #[test]
    fn dj_expected_examples() {
        assert_eq!(dj_ef_expected(&prob(12, 5, 15, 4, 1)).unwrap(), -1);
        assert_eq!(dj_ef_expected(&prob(10, 4, 12, 4, 1)).unwrap(), 1);
        // s = 1: canonical series on genus 6
        let p = prob(6, 5, 10, 3, 1);
        assert_eq!(p.speciality(), 1);
        assert_eq!(dj_ef_expected(&p).unwrap(), expected_secant_dim(&p));
        assert!(dj_ef_expected(&prob(12, 5, 15, 8, 1)).is_err());
    }

    #[test]
    fn dj_expected_ram_examples() {
        let p = prob(12, 5, 15, 4, 1);
        assert_eq!(dj_ef_expected_ram(&p, &ram(&[0, 0, 0], 11)).unwrap(), -1);
        assert_eq!(dj_ef_expected_ram(&p, &ram(&[1, 1, 1], 11)).unwrap(), -4);
        let q = prob(10, 4, 12, 4, 1);
        assert_eq!(dj_ef_expected_ram(&q, &ram(&[1, 1], 8)).unwrap(), -1);
        assert!(matches!(
            dj_ef_expected_ram(&q, &ram(&[1, 1, 1], 8)),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_dj_dim(4, 3, 1).unwrap(), 1);
        assert_eq!(canonical_dj_dim(5, 4, 1).unwrap(), 2);
        assert_eq!(canonical_dj_dim(6, 4, 1).unwrap(), 2);
        assert_eq!(canonical_pair_count(4, 3, 1).unwrap(), 2);
        assert_eq!(canonical_pair_count(6, 4, 1).unwrap(), 3);
    }

    #[test]
    fn canonical_precondition_errors() {
        // rho(4, 1, 2) < 0
        assert!(canonical_dj_dim(4, 2, 1).is_err());
        // d2 > 2g - 2
        assert!(canonical_dj_dim(2, 3, 0).is_err());
        // g - d2 + r2 - 1 < 0
        assert!(canonical_dj_dim(3, 4, 1).is_err());
    }

    #[test]
    fn canonical_ram_examples() {
        assert_eq!(canonical_dj_dim_ram(4, 3, 1, &ram(&[0, 0], 3)).unwrap(), 1);
        assert_eq!(canonical_dj_dim_ram(4, 3, 1, &ram(&[1, 1], 3)).unwrap(), -1);
        assert_eq!(canonical_dj_dim_ram(5, 4, 1, &ram(&[0, 1], 4)).unwrap(), 1);
        assert!(canonical_dj_dim_ram(5, 4, 1, &ram(&[0], 4)).is_err());
    }

    #[test]
    fn thm4_examples() {
        assert_eq!(thm4_dim(&prob(12, 5, 15, 4, 1)), Some(-1));
        assert_eq!(thm4_dim(&prob(10, 4, 12, 4, 1)), Some(1));
        assert_eq!(thm4_dim(&prob(4, 3, 6, 4, 1)), None);
    }

    #[test]
    fn cor5_examples() {
        assert!(cor5_empty(&prob(12, 5, 15, 4, 1)));
        assert!(!cor5_empty(&prob(10, 4, 12, 4, 1)));
        assert!(cor5_empty(&prob(21, 6, 24, 6, 2)));
        // rho != 0
        assert!(!cor5_empty(&prob(7, 2, 7, 2, 1)));
    }

    #[test]
    fn secant_pattern_matches_expected() {
        let p = prob(12, 5, 15, 4, 1);
        let pattern = DJPattern::secant(&p).unwrap();
        assert_eq!(
            dj_lower_bound(&p.base(), &pattern).unwrap(),
            dj_ef_expected(&p).unwrap()
        );
    }
}
