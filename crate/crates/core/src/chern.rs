//! Truncated total Chern classes.
//!
//! A [`ChernSeries`] is `1 + g_1 + ... + g_D` with `g_i` homogeneous of
//! degree `i`. The truncation `D` is explicit: combining series with
//! different truncations is an error, never a silent re-truncation.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::symfunc::{Family, GradedPolynomial, Monomial, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernSeries<T> {
    truncation: usize,
    rank: Option<usize>,
    components: Vec<GradedPolynomial<T>>,
}

impl<T: Scalar> ChernSeries<T> {
    /// The unit series `1` truncated at `truncation`.
    pub fn one(truncation: usize) -> Self {
        let mut components = vec![GradedPolynomial::zero(); truncation + 1];
        components[0] = GradedPolynomial::one();
        ChernSeries { truncation, rank: Some(0), components }
    }

    /// `1 + b_1 + b_2 + ... + b_D` with independent symbols from `fam`.
    pub fn symbolic(fam: &Family, truncation: usize) -> Self {
        let mut components = vec![GradedPolynomial::one()];
        components.extend((1..=truncation).map(|i| GradedPolynomial::var(fam.var(i as u32))));
        ChernSeries { truncation, rank: None, components }
    }

    /// `1 + b_1 + ... + b_r` for a bundle of rank `r`.
    pub fn symbolic_with_rank(fam: &Family, rank: usize, truncation: usize) -> Result<Self> {
        if rank > truncation {
            return Err(Error::RankExceedsTruncation { rank, truncation });
        }
        let mut s = Self::symbolic(fam, truncation);
        for g in s.components.iter_mut().skip(rank + 1) {
            *g = GradedPolynomial::zero();
        }
        s.rank = Some(rank);
        Ok(s)
    }

    /// Validates the unit constant and per-degree homogeneity.
    pub fn from_components(components: Vec<GradedPolynomial<T>>, rank: Option<usize>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::NonUnitSeries);
        };
        if first != &GradedPolynomial::one() {
            return Err(Error::NonUnitSeries);
        }
        for (i, g) in components.iter().enumerate() {
            if !g.is_homogeneous_of(i) {
                return Err(Error::InhomogeneousComponent { index: i });
            }
        }
        let truncation = components.len() - 1;
        if let Some(r) = rank {
            if components.iter().skip(r + 1).any(|g| !g.is_zero()) {
                return Err(Error::Parse(format!("components above rank {r} must vanish")));
            }
        }
        Ok(ChernSeries { truncation, rank, components })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub fn with_rank(mut self, rank: Option<usize>) -> Result<Self> {
        if let Some(r) = rank {
            if self.components.iter().skip(r + 1).any(|g| !g.is_zero()) {
                return Err(Error::Parse(format!("components above rank {r} must vanish")));
            }
        }
        self.rank = rank;
        Ok(self)
    }

    pub fn components(&self) -> &[GradedPolynomial<T>] {
        &self.components
    }

    /// Component `i`; only defined for `i <= truncation`.
    pub fn component(&self, i: usize) -> &GradedPolynomial<T> {
        &self.components[i]
    }

    /// Highest index of a nonzero component.
    pub fn degree(&self) -> usize {
        self.components.iter().rposition(|g| !g.is_zero()).unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.components.iter().skip(1).all(GradedPolynomial::is_zero)
    }

    /// Explicit re-truncation: drops or zero-pads components.
    pub fn retruncate(&self, truncation: usize) -> Self {
        let mut components = self.components.clone();
        components.resize(truncation + 1, GradedPolynomial::zero());
        let rank = self.rank.filter(|&r| r <= truncation || self.components.len() <= truncation + 1);
        ChernSeries { truncation, rank, components }
    }

    fn check_same_truncation(&self, other: &Self) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch { left: self.truncation, right: other.truncation });
        }
        Ok(())
    }

    /// Degreewise convolution truncated at `D`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_truncation(other)?;
        let d = self.truncation;
        let components = (0..=d)
            .map(|i| {
                let mut acc = GradedPolynomial::zero();
                for j in 0..=i {
                    let (a, b) = (&self.components[j], &other.components[i - j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect();
        let rank = match (self.rank, other.rank) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        Ok(ChernSeries { truncation: d, rank, components })
    }

    /// `b_i = -sum_{j=1..i} a_j b_{i-j}`, so that `a * b = 1` through `D`.
    pub fn invert(&self) -> Self {
        let d = self.truncation;
        let mut inv: Vec<GradedPolynomial<T>> = vec![GradedPolynomial::one()];
        for i in 1..=d {
            let mut acc = GradedPolynomial::zero();
            for j in 1..=i {
                let a = &self.components[j];
                if !a.is_zero() && !inv[i - j].is_zero() {
                    acc = &acc - &(a * &inv[i - j]);
                }
            }
            inv.push(acc);
        }
        let rank = if self.is_one() { Some(0) } else { None };
        ChernSeries { truncation: d, rank, components: inv }
    }

    /// Replaces each `fam_i` in `p` by component `i` of this series.
    pub fn substitute_into(&self, p: &GradedPolynomial<T>, fam: &Family) -> Result<GradedPolynomial<T>> {
        if let Some(v) = p.variables().iter().find(|v| &v.family == fam && v.index as usize > self.truncation) {
            return Err(Error::DegreeOverflow { needed: v.index as usize, truncation: self.truncation });
        }
        Ok(p.substitute(|v| (&v.family == fam).then(|| self.components[v.index as usize].clone())))
    }
}

/// Relative classes: the series `cprime / c` truncated at `D`.
pub fn relative_chern<T: Scalar>(cprime: &ChernSeries<T>, c: &ChernSeries<T>) -> Result<ChernSeries<T>> {
    cprime.check_same_truncation(c)?;
    cprime.multiply(&c.invert())
}

/// Sets `c_i = 0` for `i > n` and `c'_j = 0` for `j > k`.
pub fn stabilize_substitute<T: Scalar>(p: &GradedPolynomial<T>, n: usize, k: usize) -> GradedPolynomial<T> {
    p.set_zero(|v| {
        (v.family == Family::C && v.index as usize > n) || (v.family == Family::C_PRIME && v.index as usize > k)
    })
}

/// Total Chern class of `E (x) L^alpha` for `E` of rank `r` and a line
/// bundle with first Chern class `line`, via
/// `c_j = sum_i binomial(r - i, j - i) e_i (alpha * line)^(j - i)`.
pub fn twist_by_line<T: Scalar>(e: &ChernSeries<T>, line: &Var, alpha: &Var) -> Result<ChernSeries<T>> {
    let r = e.rank.ok_or(Error::MissingRank)?;
    if r > e.truncation {
        return Err(Error::RankExceedsTruncation { rank: r, truncation: e.truncation });
    }
    let shift = Monomial::from_factors([(line.clone(), 1), (alpha.clone(), 1)]);
    let shift: GradedPolynomial<T> = GradedPolynomial::term(shift, T::one());
    let shift_powers: Vec<GradedPolynomial<T>> =
        std::iter::successors(Some(GradedPolynomial::one()), |p| Some(p * &shift)).take(r + 1).collect();
    let mut components = vec![GradedPolynomial::zero(); e.truncation + 1];
    for (j, slot) in components.iter_mut().enumerate().take(r + 1) {
        let mut acc = GradedPolynomial::zero();
        for i in 0..=j {
            let coeff = T::from_i64(binomial(r - i, j - i) as i64);
            acc = &acc + &(&e.components[i] * &shift_powers[j - i]).scale(&coeff);
        }
        *slot = acc;
    }
    Ok(ChernSeries { truncation: e.truncation, rank: Some(r), components })
}

/// The `alpha`-dependent part of a twist divided by `alpha`, componentwise:
/// `P(alpha)_j = (c_j(E (x) L^alpha) - e_j) / alpha`.
pub fn twist_remainder<T: Scalar>(e: &ChernSeries<T>, line: &Var, alpha: &Var) -> Result<Vec<GradedPolynomial<T>>> {
    let twisted = twist_by_line(e, line, alpha)?;
    twisted
        .components
        .iter()
        .zip(&e.components)
        .map(|(t, u)| {
            (t - u)
                .divide_by_var(alpha)
                .ok_or_else(|| Error::Parse("twist remainder is not divisible by alpha".into()))
        })
        .collect()
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

impl<T: Scalar + fmt::Display> fmt::Display for ChernSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.components.iter().enumerate() {
            writeln!(f, "[{i}] {g}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr<P> {
    truncation: usize,
    rank: Option<usize>,
    components: Vec<P>,
}

impl<T: Scalar + fmt::Display> Serialize for ChernSeries<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr { truncation: self.truncation, rank: self.rank, components: self.components.iter().collect() }
            .serialize(serializer)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for ChernSeries<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::<GradedPolynomial<T>>::deserialize(deserializer)?;
        if repr.components.len() != repr.truncation + 1 {
            return Err(D::Error::custom(format!(
                "expected {} components for truncation {}, found {}",
                repr.truncation + 1,
                repr.truncation,
                repr.components.len()
            )));
        }
        ChernSeries::from_components(repr.components, repr.rank).map_err(D::Error::custom)
    }
}
