//! Sparse polynomials in graded variable families.

use std::borrow::Cow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How a family assigns degrees to its members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Grading {
    /// `deg(b_i) = i`, as for Chern classes.
    Indexed,
    /// Every member has degree 1 (line-bundle classes, splitting roots).
    Unit,
    /// Formal degree-0 parameters.
    Zero,
}

/// A tagged family of variables, e.g. `c`, `c'` or `ctilde`.
///
/// The grading is a function of the tag: `m`, `x`, `y` are degree-one
/// families, `alpha` has degree zero and every other tag is indexed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family(Cow<'static, str>);

impl Family {
    pub const C: Family = Family(Cow::Borrowed("c"));
    pub const C_PRIME: Family = Family(Cow::Borrowed("c'"));
    pub const C_TILDE: Family = Family(Cow::Borrowed("ctilde"));
    pub const W: Family = Family(Cow::Borrowed("w"));
    pub const W_PRIME: Family = Family(Cow::Borrowed("w'"));
    pub const W_TILDE: Family = Family(Cow::Borrowed("wtilde"));
    pub const M: Family = Family(Cow::Borrowed("m"));
    pub const ALPHA: Family = Family(Cow::Borrowed("alpha"));
    /// Splitting roots of a source bundle.
    pub const X: Family = Family(Cow::Borrowed("x"));
    /// Splitting roots of a target bundle.
    pub const Y: Family = Family(Cow::Borrowed("y"));
    /// Fresh classes of an auxiliary unit series.
    pub const T: Family = Family(Cow::Borrowed("t"));
    /// Chern classes of a twisted quotient bundle.
    pub const Q: Family = Family(Cow::Borrowed("q"));

    pub fn new(tag: impl Into<String>) -> Result<Self> {
        let tag = tag.into();
        if tag.is_empty() || tag.contains('.') || tag.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("invalid family tag {tag:?}")));
        }
        Ok(Family(Cow::Owned(tag)))
    }

    pub fn tag(&self) -> &str {
        &self.0
    }

    pub fn grading(&self) -> Grading {
        match self.tag() {
            "m" | "x" | "y" => Grading::Unit,
            "alpha" => Grading::Zero,
            _ => Grading::Indexed,
        }
    }

    pub fn var(&self, index: u32) -> Var {
        Var { family: self.clone(), index }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One member of a family; indices start at 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub family: Family,
    pub index: u32,
}

impl Var {
    pub fn degree(&self) -> usize {
        match self.family.grading() {
            Grading::Indexed => self.index as usize,
            Grading::Unit => 1,
            Grading::Zero => 0,
        }
    }

    /// The `family.index` key used in the JSON form.
    pub fn key(&self) -> String {
        format!("{}.{}", self.family, self.index)
    }

    pub fn parse_key(key: &str) -> Result<Var> {
        let (tag, index) = key
            .rsplit_once('.')
            .ok_or_else(|| Error::Parse(format!("variable key {key:?} lacks an index")))?;
        let index: u32 = index
            .parse()
            .map_err(|_| Error::Parse(format!("variable key {key:?} has a bad index")))?;
        if index == 0 {
            return Err(Error::Parse(format!("variable key {key:?} has index 0")));
        }
        Ok(Family::new(tag)?.var(index))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.grading() {
            Grading::Indexed => write!(f, "{}{}", self.family, self.index),
            _ if self.index == 1 => write!(f, "{}", self.family),
            _ => write!(f, "{}{}", self.family, self.index),
        }
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_var(var: Var, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(var, exp)])
        }
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in factors {
            *acc.entry(v).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|(v, e)| v.degree() * *e as usize).sum()
    }

    pub fn exponent(&self, var: &Var) -> u32 {
        self.0.iter().find(|(v, _)| v == var).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Removes `exp` copies of `var`, if present.
    pub fn without(&self, var: &Var, exp: u32) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut found = exp == 0;
        for (v, e) in &self.0 {
            if v == var {
                if *e < exp {
                    return None;
                }
                found = true;
                if *e > exp {
                    out.push((v.clone(), e - exp));
                }
            } else {
                out.push((v.clone(), *e));
            }
        }
        found.then_some(Monomial(out))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPolynomial<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for GradedPolynomial<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> GradedPolynomial<T> {
    pub fn zero() -> Self {
        GradedPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(var: Var) -> Self {
        Self::term(Monomial::from_var(var, 1), T::one())
    }

    pub fn term(mono: Monomial, coeff: T) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        GradedPolynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> T {
        self.terms.get(mono).cloned().unwrap_or_else(T::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> T {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: T) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
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

    /// Highest degree of a stored term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.is_homogeneous_of(d),
        }
    }

    pub fn homogeneous_component(&self, degree: usize) -> Self {
        self.filter_terms(|m| m.degree() == degree)
    }

    /// Drops all terms of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        self.filter_terms(|m| m.degree() <= max_degree)
    }

    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        GradedPolynomial {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &T) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone() * factor.clone())))
    }

    pub fn mul_monomial(&self, mono: &Monomial, coeff: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone() * coeff.clone())))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(v, _)| v.clone())).collect()
    }

    pub fn families(&self) -> BTreeSet<Family> {
        self.variables().into_iter().map(|v| v.family).collect()
    }

    /// Replaces variables for which `image` returns a polynomial; other
    /// variables are kept. Powers of each image are computed once.
    pub fn substitute(&self, mut image: impl FnMut(&Var) -> Option<GradedPolynomial<T>>) -> Self {
        let mut images: BTreeMap<Var, Option<Vec<GradedPolynomial<T>>>> = BTreeMap::new();
        let mut out = Self::zero();
        for (mono, coeff) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(coeff.clone());
            for (var, exp) in mono.factors() {
                let entry = images.entry(var.clone()).or_insert_with(|| image(var).map(|p| vec![Self::one(), p]));
                match entry {
                    None => kept.push((var.clone(), *exp)),
                    Some(powers) => {
                        while powers.len() <= *exp as usize {
                            let next = &powers[powers.len() - 1] * &powers[1];
                            powers.push(next);
                        }
                        acc = &acc * &powers[*exp as usize];
                    }
                }
                if acc.is_zero() {
                    break;
                }
            }
            if acc.is_zero() {
                continue;
            }
            let rest = Monomial::from_factors(kept);
            for (m, c) in acc.terms {
                out.add_term(m.mul(&rest), c);
            }
        }
        out
    }

    /// Sets every variable matching `kill` to zero.
    pub fn set_zero(&self, mut kill: impl FnMut(&Var) -> bool) -> Self {
        self.filter_terms(|m| !m.factors().iter().any(|(v, _)| kill(v)))
    }

    /// Renames variables; the map must be injective on the variables present.
    pub fn rename(&self, mut map: impl FnMut(&Var) -> Var) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (Monomial::from_factors(m.factors().iter().map(|(v, e)| (map(v), *e))), c.clone())),
        )
    }

    /// Changes the coefficient ring, failing on the first coefficient `f` rejects.
    pub fn try_map_coeffs<U: Scalar, E>(&self, mut f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<GradedPolynomial<U>, E> {
        let mut out = GradedPolynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Groups terms by the exponent of `var`: the result maps `e` to the
    /// coefficient of `var^e`.
    pub fn coefficients_in(&self, var: &Var) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let rest = m.without(var, e).unwrap_or_else(|| m.clone());
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Exact division by a single variable, `None` if some term lacks it.
    pub fn divide_by_var(&self, var: &Var) -> Option<Self> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.without(var, 1)?, c.clone());
        }
        Some(out)
    }
}

impl<T: Scalar> From<Var> for GradedPolynomial<T> {
    fn from(var: Var) -> Self {
        Self::var(var)
    }
}

impl<T: Scalar> Add for &GradedPolynomial<T> {
    type Output = GradedPolynomial<T>;
    fn add(self, rhs: &GradedPolynomial<T>) -> GradedPolynomial<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &GradedPolynomial<T> {
    type Output = GradedPolynomial<T>;
    fn sub(self, rhs: &GradedPolynomial<T>) -> GradedPolynomial<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &GradedPolynomial<T> {
    type Output = GradedPolynomial<T>;
    fn mul(self, rhs: &GradedPolynomial<T>) -> GradedPolynomial<T> {
        let mut out = GradedPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &GradedPolynomial<T> {
    type Output = GradedPolynomial<T>;
    fn neg(self) -> GradedPolynomial<T> {
        GradedPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr for GradedPolynomial<T> {
            type Output = GradedPolynomial<T>;
            fn $method(self, rhs: GradedPolynomial<T>) -> GradedPolynomial<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: Scalar> $tr<&GradedPolynomial<T>> for GradedPolynomial<T> {
            type Output = GradedPolynomial<T>;
            fn $method(self, rhs: &GradedPolynomial<T>) -> GradedPolynomial<T> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for GradedPolynomial<T> {
    type Output = GradedPolynomial<T>;
    fn neg(self) -> GradedPolynomial<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for GradedPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&magnitude)?;
            } else if magnitude == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    mono: BTreeMap<String, u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<TermRepr>,
}

impl<T: Scalar + fmt::Display> Serialize for GradedPolynomial<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr {
                mono: m.factors().iter().map(|(v, e)| (v.key(), *e)).collect(),
                coeff: c.to_string(),
            })
            .collect();
        PolyRepr { terms }.serialize(serializer)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for GradedPolynomial<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let mut out = GradedPolynomial::zero();
        for term in repr.terms {
            let mut factors = Vec::new();
            for (key, exp) in term.mono {
                factors.push((Var::parse_key(&key).map_err(D::Error::custom)?, exp));
            }
            let coeff = term
                .coeff
                .parse::<T>()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", term.coeff)))?;
            out.add_term(Monomial::from_factors(factors), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn c(i: u32) -> GradedPolynomial<Rational> {
        GradedPolynomial::var(Family::C.var(i))
    }

    fn cp(i: u32) -> GradedPolynomial<Rational> {
        GradedPolynomial::var(Family::C_PRIME.var(i))
    }

    #[test]
    fn degrees_follow_grading() {
        let p = &(&c(1) * &c(2)) + &cp(3);
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_homogeneous());
        let m = GradedPolynomial::<Rational>::var(Family::M.var(1));
        let alpha = GradedPolynomial::<Rational>::var(Family::ALPHA.var(1));
        assert_eq!((&m * &alpha).degree(), Some(1));
        assert!(!(&c(1) + &c(2)).is_homogeneous());
        assert_eq!(GradedPolynomial::<Rational>::zero().degree(), None);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &c(1) - &c(1);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn substitution_and_kill() {
        let p = &(&c(2) * &cp(2)) + &c(3);
        let killed = p.set_zero(|v| v.family == Family::C && v.index > 2);
        assert_eq!(killed, &c(2) * &cp(2));
        let sub = p.substitute(|v| (v == &Family::C.var(2)).then(|| &c(1) * &c(1)));
        assert_eq!(sub, &(&(&c(1) * &c(1)) * &cp(2)) + &c(3));
    }

    #[test]
    fn divide_and_group() {
        let a = Family::ALPHA.var(1);
        let av = GradedPolynomial::<Rational>::var(a.clone());
        let p = &(&av * &c(1)) + &(&(&av * &av) * &c(2));
        let q = p.divide_by_var(&a).unwrap();
        assert_eq!(q, &c(1) + &(&av * &c(2)));
        assert!((&p + &c(1)).divide_by_var(&a).is_none());
        let grouped = p.coefficients_in(&a);
        assert_eq!(grouped[&1], c(1));
        assert_eq!(grouped[&2], c(2));
    }

    #[test]
    fn json_round_trip_and_format() {
        let p = &(&c(1).pow(2) * &cp(3)).scale(&r(-3, 4)) + &GradedPolynomial::constant(r(2, 1));
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains(r#"{"mono":{"c'.3":1,"c.1":2},"coeff":"-3/4"}"#), "{text}");
        let back: GradedPolynomial<Rational> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "-3/4*c1^2*c'3 + 2");
    }

    #[test]
    fn rejects_malformed_keys() {
        assert!(Var::parse_key("c").is_err());
        assert!(Var::parse_key("c.0").is_err());
        assert_eq!(Var::parse_key("ctilde.4").unwrap(), Family::C_TILDE.var(4));
    }
}
