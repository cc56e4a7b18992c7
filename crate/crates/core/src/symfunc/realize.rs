//! Realization of elementary-letter polynomials in formal variables
//! `x_1..x_N`, where the letter `b_i` becomes `e_i(x)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalar::Scalar;
use crate::symfunc::poly::{Family, GradedPolynomial, Monomial};

/// Dense-exponent polynomial in `numvars` formal variables.
///
/// Keys are exponent vectors of length `numvars`; the map order is
/// lexicographic, so the last key is the lex-leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly<T> {
    numvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MonomialPoly<T> {
    pub fn zero(numvars: usize) -> Self {
        MonomialPoly { numvars, terms: BTreeMap::new() }
    }

    pub fn one(numvars: usize) -> Self {
        let mut p = Self::zero(numvars);
        p.add_term(vec![0; numvars], T::one());
        p
    }

    pub fn numvars(&self) -> usize {
        self.numvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, T> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: T) {
        debug_assert_eq!(exps.len(), self.numvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + coeff;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.numvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * factor.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.numvars, other.numvars, "variable count mismatch");
        let mut acc: BTreeMap<Vec<u32>, T> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = acc.entry(e).or_insert_with(T::zero);
                *slot = slot.clone() + ca.clone() * cb.clone();
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MonomialPoly { numvars: self.numvars, terms: acc }
    }

    /// The elementary symmetric polynomial `e_i` in `numvars` variables.
    pub fn elementary(numvars: usize, i: usize) -> Self {
        let mut p = Self::zero(numvars);
        if i > numvars {
            return p;
        }
        let mut chosen = vec![0u32; numvars];
        fn walk<T: Scalar>(start: usize, left: usize, chosen: &mut Vec<u32>, out: &mut MonomialPoly<T>) {
            if left == 0 {
                out.add_term(chosen.clone(), T::one());
                return;
            }
            for v in start..chosen.len() {
                if chosen.len() - v < left {
                    break;
                }
                chosen[v] = 1;
                walk(v + 1, left - 1, chosen, out);
                chosen[v] = 0;
            }
        }
        walk(0, i, &mut chosen, &mut p);
        p
    }

    /// True when every variable permutation fixes the polynomial.
    pub fn is_symmetric(&self) -> bool {
        let dominant = self.dominant_part();
        for (e, c) in &self.terms {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if dominant.get(&sorted) != Some(c) {
                return false;
            }
        }
        let expected: usize = dominant.keys().map(|s| distinct_permutations(s)).sum();
        expected == self.terms.len()
    }

    /// Terms whose exponent vector is weakly decreasing.
    pub fn dominant_part(&self) -> BTreeMap<Vec<u32>, T> {
        self.terms
            .iter()
            .filter(|(e, _)| e.windows(2).all(|w| w[0] >= w[1]))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }
}

fn distinct_permutations(exps: &[u32]) -> usize {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for e in exps {
        *counts.entry(*e).or_default() += 1;
    }
    let mut result: u128 = 1;
    let mut placed = 0u128;
    for count in counts.values() {
        for j in 1..=*count as u128 {
            placed += 1;
            result = result * placed / j;
        }
    }
    result as usize
}

/// Substitutes `b_i -> e_i(x_1..x_numvars)` in a polynomial in the single
/// indexed family `fam`.
pub fn realize_in_monomials<T: Scalar>(p: &GradedPolynomial<T>, fam: &Family, numvars: usize) -> Result<MonomialPoly<T>> {
    check_single_family(p, fam)?;
    let degree = p.degree().unwrap_or(0);
    if numvars < degree {
        return Err(Error::UnfaithfulRealization { numvars, degree });
    }
    Ok(realize_unchecked(p, numvars))
}

/// Realization without the faithfulness check; `p` must lie in one indexed family.
pub(crate) fn realize_unchecked<T: Scalar>(p: &GradedPolynomial<T>, numvars: usize) -> MonomialPoly<T> {
    let mut elementary: Vec<Option<MonomialPoly<T>>> = Vec::new();
    let mut out = MonomialPoly::zero(numvars);
    for (mono, coeff) in p.terms() {
        let mut acc = MonomialPoly::one(numvars).scale(coeff);
        for (var, exp) in mono.factors() {
            let i = var.index as usize;
            if elementary.len() <= i {
                elementary.resize(i + 1, None);
            }
            let e = elementary[i].get_or_insert_with(|| MonomialPoly::elementary(numvars, i)).clone();
            for _ in 0..*exp {
                acc = acc.mul(&e);
            }
            if acc.is_zero() {
                break;
            }
        }
        out = out.add(&acc);
    }
    out
}

pub(crate) fn check_single_family<T: Scalar>(p: &GradedPolynomial<T>, fam: &Family) -> Result<()> {
    match p.variables().into_iter().find(|v| &v.family != fam) {
        Some(v) => Err(Error::ForeignVariable(v.key())),
        None => Ok(()),
    }
}

/// Rewrites a polynomial that is symmetric in the roots `roots_1..roots_count`
/// as a polynomial in the elementary classes `target_1..target_count`.
/// Variables of other families are carried along as coefficients.
pub fn symmetric_to_elementary<T: Scalar>(
    p: &GradedPolynomial<T>,
    roots: &Family,
    count: usize,
    target: &Family,
) -> Result<GradedPolynomial<T>> {
    let mut pending: BTreeMap<Vec<u32>, GradedPolynomial<T>> = BTreeMap::new();
    for (mono, coeff) in p.terms() {
        let mut exps = vec![0u32; count];
        let mut rest = Vec::new();
        for (var, e) in mono.factors() {
            if &var.family == roots {
                let slot = exps
                    .get_mut(var.index as usize - 1)
                    .ok_or_else(|| Error::ForeignVariable(var.key()))?;
                *slot = *e;
            } else {
                rest.push((var.clone(), *e));
            }
        }
        pending.entry(exps).or_default().add_term(Monomial::from_factors(rest), coeff.clone());
    }
    pending.retain(|_, c| !c.is_zero());

    let elementary: Vec<MonomialPoly<T>> = (0..=count).map(|i| MonomialPoly::elementary(count, i)).collect();
    let mut out = GradedPolynomial::zero();
    while let Some((lead, coeff)) = pending.pop_last() {
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonSymmetric);
        }
        // lex-leading root monomial y^a comes from prod e_i^(a_i - a_{i+1})
        let mut product = MonomialPoly::one(count);
        let mut letters = Vec::new();
        for i in 0..count {
            let next = lead.get(i + 1).copied().unwrap_or(0);
            let power = lead[i] - next;
            for _ in 0..power {
                product = product.mul(&elementary[i + 1]);
            }
            letters.push((target.var(i as u32 + 1), power));
        }
        out = &out + &coeff.mul_monomial(&Monomial::from_factors(letters), &T::one());
        for (e, c) in product.terms() {
            if e == &lead {
                continue;
            }
            let slot = pending.entry(e.clone()).or_default();
            *slot = &*slot - &coeff.scale(c);
        }
        pending.retain(|_, c| !c.is_zero());
    }
    Ok(out)
}

/// Reads a dominant exponent vector as a partition.
pub(crate) fn exps_to_partition(exps: &[u32]) -> Partition {
    Partition::from_unsorted(exps.iter().map(|&e| e as usize).collect())
}
