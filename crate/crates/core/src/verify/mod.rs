//! Verification harness for catalogued Thom polynomials.
//!
//! Every entry is checked for three structural properties: it is a
//! polynomial in the relative classes alone after restriction to its size
//! (`check_damon`), its relative form is Schur-positive, and it is the
//! restriction of the next size up (`check_stabilization`). A fourth check
//! substitutes `c ↦ c·e`, `c' ↦ c'·e` for a symbolic unit series `e`.

mod catalogue;
mod oracle;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chern::{relative_chern, stabilize_substitute, twist_by_line, ChernSeries};
use crate::error::{Error, Result};
use crate::symfunc::{expand_in_schur, Family};
use crate::{Expansion, Gf2, Mod2Polynomial, Polynomial, Rational};

pub use catalogue::{catalogue_from_str, catalogue_load, catalogue_store, catalogue_to_string};
pub use oracle::{sigma1_oracle, sigma1_oracle_at, sigma1_polynomial, ORACLE_SOURCE, SIGMA1};

/// A Thom polynomial written for maps `C^n -> C^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogueEntry {
    pub name: String,
    /// `k − n`.
    pub l: i64,
    pub n: usize,
    pub k: usize,
    pub codim: usize,
    pub poly: Polynomial,
    pub source: String,
}

impl CatalogueEntry {
    /// Checks homogeneity, `l = k − n`, and that only `c` and `c'` occur.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if self.l != self.k as i64 - self.n as i64 {
            return Err(format!("l = {} but k - n = {}", self.l, self.k as i64 - self.n as i64));
        }
        if !self.poly.is_homogeneous_of(self.codim) {
            let found = self.poly.degree().map_or("an inhomogeneous polynomial".to_string(), |d| format!("degree {d}"));
            if self.poly.is_homogeneous() {
                return Err(format!("poly has {found}, expected degree {} = codim", self.codim));
            }
            return Err(format!("poly is not homogeneous of degree {}", self.codim));
        }
        if let Some(f) = self.poly.families().into_iter().find(|f| f != &Family::C && f != &Family::C_PRIME) {
            return Err(format!("unexpected variable family {f}"));
        }
        Ok(())
    }

    fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub damon_ok: bool,
    pub relative_form: Option<Expansion>,
    pub positive_ok: bool,
    pub stabilization_ok: bool,
    pub substitution_ok: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.damon_ok && self.positive_ok && self.stabilization_ok && self.substitution_ok
    }
}

/// The part of `p` free of source classes, read in the relative letter.
fn relative_candidate(p: &Polynomial) -> Polynomial {
    p.set_zero(|v| v.family == Family::C)
        .rename(|v| if v.family == Family::C_PRIME { Family::C_TILDE.var(v.index) } else { v.clone() })
}

/// Rewrites a polynomial in `ctilde` in terms of symbolic `c`, `c'` through degree `truncation`.
pub fn lift_relative(q: &Polynomial, truncation: usize) -> Result<Polynomial> {
    let rel = relative_chern(
        &ChernSeries::symbolic(&Family::C_PRIME, truncation),
        &ChernSeries::symbolic(&Family::C, truncation),
    )?;
    rel.substitute_into(q, &Family::C_TILDE)
}

/// Decides whether the entry is a polynomial in the relative classes once
/// restricted to its size, returning the Schur expansion of that polynomial.
pub fn check_damon(entry: &CatalogueEntry, truncation: usize) -> Result<(bool, Expansion)> {
    let degree = entry.degree();
    if truncation < degree {
        return Err(Error::DegreeOverflow { needed: degree, truncation });
    }
    let q = relative_candidate(&entry.poly);
    let lifted = lift_relative(&q, truncation)?;
    let expressible = stabilize_substitute(&lifted, entry.n, entry.k) == stabilize_substitute(&entry.poly, entry.n, entry.k);
    if !expressible {
        return Ok((false, Expansion::new()));
    }
    Ok((true, expand_in_schur(&q, &Family::C_TILDE)?))
}

/// True iff every coefficient is nonnegative.
pub fn check_positive(expansion: &Expansion) -> bool {
    expansion.iter().all(|(_, c)| c >= &Rational::from_integer(0.into()))
}

/// Compares the entry with the next size up, restricted back down.
///
/// The larger polynomial is taken from `catalogue` when an entry of the same
/// name and offset is present at `(n + 1, k + 1)`; otherwise Σ¹ entries are
/// regenerated by the oracle.
pub fn check_stabilization(entry: &CatalogueEntry, catalogue: &[CatalogueEntry]) -> Result<bool> {
    if entry.degree() == 0 {
        return Ok(true);
    }
    let bigger = catalogue
        .iter()
        .find(|e| e.name == entry.name && e.l == entry.l && e.n == entry.n + 1 && e.k == entry.k + 1)
        .map(|e| e.poly.clone());
    let bigger = match bigger {
        Some(p) => p,
        None if entry.name == SIGMA1 => sigma1_polynomial(entry.n + 1, entry.k + 1)?,
        None => {
            return Err(Error::NoSecondSize(format!(
                "{} at size ({}, {})",
                entry.name,
                entry.n + 1,
                entry.k + 1
            )))
        }
    };
    Ok(stabilize_substitute(&bigger, entry.n, entry.k) == entry.poly)
}

/// The universal form of an entry: its relative lift when one exists,
/// otherwise the raw polynomial.
fn universal_form(entry: &CatalogueEntry, truncation: usize) -> Result<Polynomial> {
    match check_damon(entry, truncation)? {
        (true, _) => lift_relative(&relative_candidate(&entry.poly), truncation),
        (false, _) => Ok(entry.poly.clone()),
    }
}

/// Substitutes `c ↦ c·e`, `c' ↦ c'·e` into the entry's universal form and
/// compares through degree `truncation`.
pub fn substitution_invariance(entry: &CatalogueEntry, e: &ChernSeries<Rational>, truncation: usize) -> Result<bool> {
    if e.truncation() != truncation {
        return Err(Error::TruncationMismatch { left: e.truncation(), right: truncation });
    }
    let u = universal_form(entry, truncation)?;
    let source = ChernSeries::symbolic(&Family::C, truncation).multiply(e)?;
    let target = ChernSeries::symbolic(&Family::C_PRIME, truncation).multiply(e)?;
    let substituted = u.substitute(|v| {
        if v.family == Family::C {
            Some(source.component(v.index as usize).clone())
        } else if v.family == Family::C_PRIME {
            Some(target.component(v.index as usize).clone())
        } else {
            None
        }
    });
    Ok(substituted.truncate(truncation) == u.truncate(truncation))
}

/// A unit series `1 + t_1 + ... + t_D` in fresh symbols.
pub fn fresh_unit_series(truncation: usize) -> ChernSeries<Rational> {
    ChernSeries::symbolic(&Family::T, truncation)
}

/// Twists both bundles of the entry's size by `L^alpha` and returns the
/// difference `UTp(twisted) − UTp` together with its quotient by `alpha`.
pub fn twist_difference(entry: &CatalogueEntry, truncation: usize) -> Result<(Polynomial, Option<Polynomial>)> {
    let u = stabilize_substitute(&universal_form(entry, truncation)?, entry.n, entry.k);
    let (m, alpha) = (Family::M.var(1), Family::ALPHA.var(1));
    let source = twist_by_line(&ChernSeries::symbolic_with_rank(&Family::C, entry.n, truncation)?, &m, &alpha)?;
    let target = twist_by_line(&ChernSeries::symbolic_with_rank(&Family::C_PRIME, entry.k, truncation)?, &m, &alpha)?;
    let twisted = u.substitute(|v| {
        if v.family == Family::C {
            Some(source.component(v.index as usize).clone())
        } else if v.family == Family::C_PRIME {
            Some(target.component(v.index as usize).clone())
        } else {
            None
        }
    });
    let difference = &twisted - &u;
    let quotient = difference.divide_by_var(&alpha);
    Ok((difference, quotient))
}

/// Reduces integer coefficients mod 2 and renames Chern letters to
/// Stiefel–Whitney letters.
pub fn reduce_mod2(p: &Polynomial) -> Result<Mod2Polynomial> {
    let renamed = p.rename(|v| {
        let fam = if v.family == Family::C {
            Family::W
        } else if v.family == Family::C_PRIME {
            Family::W_PRIME
        } else if v.family == Family::C_TILDE {
            Family::W_TILDE
        } else {
            v.family.clone()
        };
        fam.var(v.index)
    });
    renamed.try_map_coeffs(|c| {
        if !c.is_integer() {
            return Err(Error::NonIntegral(c.to_string()));
        }
        Ok(Gf2::new(!(c.numer() % 2u8).is_zero()))
    })
}

/// Runs every check on one entry.
pub fn verify_entry(entry: &CatalogueEntry, catalogue: &[CatalogueEntry], truncation: usize) -> VerificationReport {
    let mut notes = Vec::new();
    let truncation = truncation.max(entry.degree());
    let (damon_ok, relative_form) = match check_damon(entry, truncation) {
        Ok((true, form)) => (true, Some(form)),
        Ok((false, _)) => {
            notes.push("not expressible in the relative classes".to_string());
            (false, None)
        }
        Err(e) => {
            notes.push(format!("damon check failed: {e}"));
            (false, None)
        }
    };
    let positive_ok = relative_form.as_ref().is_some_and(check_positive);
    if damon_ok && !positive_ok {
        notes.push("relative form has a negative Schur coefficient".to_string());
    }
    let stabilization_ok = match check_stabilization(entry, catalogue) {
        Ok(ok) => {
            if !ok {
                notes.push(format!("restriction from size ({}, {}) differs", entry.n + 1, entry.k + 1));
            }
            ok
        }
        Err(e) => {
            notes.push(format!("stabilization unavailable: {e}"));
            false
        }
    };
    let substitution_ok = match substitution_invariance(entry, &fresh_unit_series(truncation), truncation) {
        Ok(ok) => {
            if !ok {
                notes.push("changes under c -> c*e, c' -> c'*e".to_string());
            }
            ok
        }
        Err(e) => {
            notes.push(format!("substitution check failed: {e}"));
            false
        }
    };
    VerificationReport {
        name: entry.name.clone(),
        n: entry.n,
        k: entry.k,
        damon_ok,
        relative_form,
        positive_ok,
        stabilization_ok,
        substitution_ok,
        notes,
    }
}

/// Verifies all entries concurrently; reports keep catalogue order.
pub fn verify_catalogue(entries: &[CatalogueEntry], truncation: usize) -> Vec<VerificationReport> {
    entries.par_iter().map(|e| verify_entry(e, entries, truncation)).collect()
}

/// `PASS m/n`, with `m` the number of passing reports.
pub fn summary_line(reports: &[VerificationReport]) -> String {
    format!("PASS {}/{}", reports.iter().filter(|r| r.passed()).count(), reports.len())
}

/// Twice the largest entry degree, and never below one.
pub fn default_truncation(entries: &[CatalogueEntry]) -> usize {
    (2 * entries.iter().map(CatalogueEntry::degree).max().unwrap_or(0)).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Partition;

    fn c(i: u32) -> Polynomial {
        Polynomial::var(Family::C.var(i))
    }

    fn cp(i: u32) -> Polynomial {
        Polynomial::var(Family::C_PRIME.var(i))
    }

    fn entry(n: usize, k: usize, codim: usize, poly: Polynomial) -> CatalogueEntry {
        CatalogueEntry { name: "test".into(), l: k as i64 - n as i64, n, k, codim, poly, source: "unit test".into() }
    }

    fn one() -> Rational {
        Rational::from_integer(1.into())
    }

    #[test]
    fn damon_examples() {
        let (ok, form) = check_damon(&entry(1, 1, 1, &cp(1) - &c(1)), 2).unwrap();
        assert!(ok);
        assert_eq!(form, Expansion::single(Partition::new(vec![1]).unwrap(), one()));
        let (ok, _) = check_damon(&entry(1, 1, 1, c(1)), 2).unwrap();
        assert!(!ok);
        let (ok, form) = check_damon(&entry(1, 1, 0, Polynomial::one()), 0).unwrap();
        assert!(ok);
        assert_eq!(form, Expansion::single(Partition::empty(), one()));
        assert!(matches!(check_damon(&entry(1, 1, 1, c(1)), 0), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn positivity_examples() {
        assert!(check_positive(&Expansion::new()));
        let p1 = Partition::new(vec![1]).unwrap();
        let p21 = Partition::new(vec![2, 1]).unwrap();
        let three = Rational::from_integer(3.into());
        assert!(check_positive(&[(p1.clone(), one()), (p21, three)].into_iter().collect()));
        assert!(!check_positive(&Expansion::single(p1, -one())));
    }

    #[test]
    fn substitution_examples() {
        let sigma = entry(1, 1, 1, &cp(1) - &c(1));
        assert!(substitution_invariance(&sigma, &ChernSeries::one(4), 4).unwrap());
        assert!(substitution_invariance(&sigma, &fresh_unit_series(4), 4).unwrap());
        assert!(!substitution_invariance(&entry(1, 1, 1, c(1)), &fresh_unit_series(4), 4).unwrap());
    }

    #[test]
    fn stabilization_of_constants_and_missing_sizes() {
        assert!(check_stabilization(&entry(1, 1, 0, Polynomial::one()), &[]).unwrap());
        assert!(matches!(check_stabilization(&entry(1, 1, 1, c(1)), &[]), Err(Error::NoSecondSize(_))));
        let small = sigma1_oracle(2, 4).unwrap();
        assert!(check_stabilization(&small, &[]).unwrap());
    }

    #[test]
    fn mod2_examples() {
        let r = reduce_mod2(&(&cp(1) - &c(1))).unwrap();
        let w = Mod2Polynomial::var(Family::W.var(1));
        let wp = Mod2Polynomial::var(Family::W_PRIME.var(1));
        assert_eq!(r, &wp + &w);
        assert!(reduce_mod2(&c(2).scale(&Rational::from_integer(2.into()))).unwrap().is_zero());
        let half = c(1).scale(&Rational::new(1.into(), 2.into()));
        assert!(matches!(reduce_mod2(&half), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn twist_difference_is_divisible() {
        for k in 1..=3 {
            let e = sigma1_oracle(k, 2 * k).unwrap();
            let (diff, quotient) = twist_difference(&e, 2 * k).unwrap();
            assert!(diff.set_zero(|v| v.family == Family::ALPHA).is_zero());
            assert!(quotient.is_some());
        }
    }

    #[test]
    fn validation_messages() {
        assert!(entry(1, 2, 2, sigma1_polynomial(1, 2).unwrap()).validate().is_ok());
        let mut bad = entry(1, 2, 3, sigma1_polynomial(1, 2).unwrap());
        assert!(bad.validate().unwrap_err().contains("codim"));
        bad.codim = 2;
        bad.l = 0;
        assert!(bad.validate().unwrap_err().contains("k - n"));
    }

    #[test]
    fn report_for_oracle_entry() {
        let e = sigma1_oracle(2, 4).unwrap();
        let r = verify_entry(&e, &[], 4);
        assert!(r.passed(), "{r:?}");
        assert_eq!(summary_line(&[r]), "PASS 1/1");
    }
}
