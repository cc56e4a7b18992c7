//! Schur polynomials in the elementary letter and expansion in the Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalar::Scalar;
use crate::symfunc::poly::{Family, GradedPolynomial};
use crate::symfunc::realize::{check_single_family, exps_to_partition, realize_in_monomials, realize_unchecked, MonomialPoly};

/// Coefficients of a polynomial in the Schur basis. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion<T> {
    coeffs: BTreeMap<Partition, T>,
}

impl<T: Scalar> Default for SchurExpansion<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> SchurExpansion<T> {
    pub fn new() -> Self {
        SchurExpansion { coeffs: BTreeMap::new() }
    }

    pub fn single(lambda: Partition, coeff: T) -> Self {
        let mut out = Self::new();
        out.add(lambda, coeff);
        out
    }

    pub fn add(&mut self, lambda: Partition, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(lambda.clone()).or_insert_with(T::zero);
        *slot = slot.clone() + coeff;
        if slot.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn get(&self, lambda: &Partition) -> T {
        self.coeffs.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Partition, &T) -> bool) {
        self.coeffs.retain(|p, c| keep(p, c));
    }

    /// Rebuilds `sum coeff * s_lambda` in the elementary letter of `fam`.
    pub fn to_polynomial(&self, fam: &Family) -> GradedPolynomial<T> {
        let mut out = GradedPolynomial::zero();
        for (lambda, coeff) in &self.coeffs {
            out = &out + &schur_in_elementary::<T>(lambda, fam).scale(coeff);
        }
        out
    }
}

impl<T: Scalar> FromIterator<(Partition, T)> for SchurExpansion<T> {
    fn from_iter<I: IntoIterator<Item = (Partition, T)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (p, c) in iter {
            out.add(p, c);
        }
        out
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for SchurExpansion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*s{lambda}")?;
        }
        Ok(())
    }
}

impl<T: Scalar + fmt::Display> Serialize for SchurExpansion<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (lambda, c) in &self.coeffs {
            map.serialize_entry(&lambda.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for SchurExpansion<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut out = SchurExpansion::new();
        for (key, value) in raw {
            let lambda: Partition = serde_json::from_str(&key).map_err(D::Error::custom)?;
            let coeff = value.parse::<T>().map_err(|_| D::Error::custom(format!("bad coefficient {value:?}")))?;
            out.add(lambda, coeff);
        }
        Ok(out)
    }
}

/// `s_lambda = det(b_{lambda*_i + j - i})` over the conjugate partition,
/// with `b_0 = 1` and `b_k = 0` for negative `k`.
pub fn schur_in_elementary<T: Scalar>(lambda: &Partition, fam: &Family) -> GradedPolynomial<T> {
    let conj = lambda.conjugate();
    let n = conj.len();
    let matrix: Vec<Vec<GradedPolynomial<T>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let index = conj.part(i) as i64 + j as i64 - i as i64;
                    match index {
                        i64::MIN..=-1 => GradedPolynomial::zero(),
                        0 => GradedPolynomial::one(),
                        k => GradedPolynomial::var(fam.var(k as u32)),
                    }
                })
                .collect()
        })
        .collect();
    determinant(&matrix)
}

/// Laplace expansion along rows, memoized on the set of used columns.
pub(crate) fn determinant<T: Scalar>(matrix: &[Vec<GradedPolynomial<T>>]) -> GradedPolynomial<T> {
    let n = matrix.len();
    assert!(n < 64, "determinant too large");
    let mut memo: HashMap<u64, GradedPolynomial<T>> = HashMap::new();
    minor(matrix, 0, &mut memo)
}

fn minor<T: Scalar>(
    matrix: &[Vec<GradedPolynomial<T>>],
    used: u64,
    memo: &mut HashMap<u64, GradedPolynomial<T>>,
) -> GradedPolynomial<T> {
    let n = matrix.len();
    let row = used.count_ones() as usize;
    if row == n {
        return GradedPolynomial::one();
    }
    if let Some(hit) = memo.get(&used) {
        return hit.clone();
    }
    let mut acc = GradedPolynomial::zero();
    let mut position = 0;
    for col in 0..n {
        if used & (1 << col) != 0 {
            continue;
        }
        let entry = &matrix[row][col];
        if !entry.is_zero() {
            let sub = minor(matrix, used | (1 << col), memo);
            let term = entry * &sub;
            acc = if position % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Schur-basis expansion by leading-monomial reduction in a fixed number of
/// formal variables. Realized Schur polynomials are cached, so one expander
/// can be reused for many inputs.
pub struct SchurExpander<T> {
    numvars: usize,
    cache: HashMap<Partition, BTreeMap<Vec<u32>, T>>,
}

impl<T: Scalar> SchurExpander<T> {
    pub fn new(numvars: usize) -> Self {
        SchurExpander { numvars, cache: HashMap::new() }
    }

    pub fn numvars(&self) -> usize {
        self.numvars
    }

    /// Expands a polynomial already realized in `numvars` variables.
    pub fn expand_realized(&mut self, realized: &MonomialPoly<T>) -> Result<SchurExpansion<T>> {
        assert_eq!(realized.numvars(), self.numvars, "realization width mismatch");
        if !realized.is_symmetric() {
            return Err(Error::NonSymmetric);
        }
        // A symmetric polynomial is determined by its dominant monomials.
        let mut pending = realized.dominant_part();
        let mut out = SchurExpansion::new();
        while let Some((lead, coeff)) = pending.pop_last() {
            let lambda = exps_to_partition(&lead);
            let numvars = self.numvars;
            let kostka = self.cache.entry(lambda.clone()).or_insert_with(|| kostka_row(&lambda, numvars));
            for (e, c) in kostka.iter() {
                if e == &lead {
                    continue;
                }
                let slot = pending.entry(e.clone()).or_insert_with(T::zero);
                *slot = slot.clone() - coeff.clone() * c.clone();
            }
            pending.retain(|_, c| !c.is_zero());
            out.add(lambda, coeff);
        }
        Ok(out)
    }

    pub fn expand(&mut self, p: &GradedPolynomial<T>, fam: &Family) -> Result<SchurExpansion<T>> {
        check_single_family(p, fam)?;
        let realized = realize_in_monomials(p, fam, self.numvars)?;
        self.expand_realized(&realized)
    }
}

/// Dominant monomial coefficients of `s_lambda` in `numvars` variables.
/// These are Kostka numbers, so the realization runs over machine integers.
fn kostka_row<T: Scalar>(lambda: &Partition, numvars: usize) -> BTreeMap<Vec<u32>, T> {
    let s = schur_in_elementary::<i64>(lambda, &Family::C);
    realize_unchecked(&s, numvars)
        .dominant_part()
        .into_iter()
        .map(|(e, c)| (e, T::from_i64(c)))
        .collect()
}

/// Unique coefficients with `p = sum alpha_lambda * s_lambda` in the
/// elementary letter `fam`.
pub fn expand_in_schur<T: Scalar>(p: &GradedPolynomial<T>, fam: &Family) -> Result<SchurExpansion<T>> {
    check_single_family(p, fam)?;
    let numvars = p.degree().unwrap_or(0);
    SchurExpander::new(numvars).expand(p, fam)
}
