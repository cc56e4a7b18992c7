//! Map-jets `J_d^{n,k}`: polynomial maps `C^n -> C^k` without constant
//! term, truncated above degree `d`.
//!
//! Composition follows the usual order: [`compose`]`(inner, outer)` is
//! `outer ∘ inner`. The left-right action of `Diff_d^n × Diff_d^k` on a jet
//! `Ψ: C^n -> C^k` is `(Δn, Δk)·Ψ = Δk ∘ Ψ ∘ Δn⁻¹`, which satisfies
//! `g2·(g1·Ψ) = (g2 g1)·Ψ` with the componentwise product
//! `(Δn2 ∘ Δn1, Δk2 ∘ Δk1)`.

mod local;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub use local::{contact_invariants_equal, local_algebra, LocalAlgebraReport};

/// Exponent vector of a source monomial `z_1^{a_1} ... z_n^{a_n}`.
pub type Exponents = Vec<u32>;

/// A truncated polynomial in the source variables.
pub type JetPoly<T> = BTreeMap<Exponents, T>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetMap<T> {
    n: usize,
    k: usize,
    d: usize,
    coeffs: Vec<JetPoly<T>>,
}

pub(crate) fn total_degree(e: &[u32]) -> usize {
    e.iter().map(|&a| a as usize).sum()
}

fn unit_exponent(n: usize, i: usize) -> Exponents {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

fn add_into<T: Scalar>(acc: &mut JetPoly<T>, e: Exponents, c: T) {
    if c.is_zero() {
        return;
    }
    match acc.entry(e) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            let sum = slot.get().clone() + c;
            if sum.is_zero() {
                slot.remove();
            } else {
                *slot.get_mut() = sum;
            }
        }
    }
}

/// Product of truncated polynomials, discarding degrees above `d`.
pub(crate) fn mul_truncated<T: Scalar>(a: &JetPoly<T>, b: &JetPoly<T>, d: usize) -> JetPoly<T> {
    let mut out = JetPoly::new();
    for (ea, ca) in a {
        let da = total_degree(ea);
        for (eb, cb) in b {
            if da + total_degree(eb) > d {
                continue;
            }
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca.clone() * cb.clone());
        }
    }
    out
}

fn constant_one<T: Scalar>(n: usize) -> JetPoly<T> {
    JetPoly::from([(vec![0; n], T::one())])
}

impl<T: Scalar> JetMap<T> {
    /// Validates the shape and drops zero coefficients.
    pub fn new(n: usize, k: usize, d: usize, coeffs: Vec<JetPoly<T>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidJet("jet order must be at least 1".into()));
        }
        if coeffs.len() != k {
            return Err(Error::InvalidJet(format!("expected {k} components, found {}", coeffs.len())));
        }
        let mut clean = Vec::with_capacity(k);
        for comp in coeffs {
            let mut c = JetPoly::new();
            for (e, v) in comp {
                if e.len() != n {
                    return Err(Error::InvalidJet(format!("multi-index {e:?} has length {}, expected {n}", e.len())));
                }
                let deg = total_degree(&e);
                if deg == 0 {
                    return Err(Error::InvalidJet("jets have no constant term".into()));
                }
                if deg > d {
                    return Err(Error::InvalidJet(format!("term of degree {deg} exceeds jet order {d}")));
                }
                add_into(&mut c, e, v);
            }
            clean.push(c);
        }
        Ok(JetMap { n, k, d, coeffs: clean })
    }

    /// Convenience constructor from `(component, exponents, coefficient)` triples.
    pub fn from_terms(n: usize, k: usize, d: usize, terms: impl IntoIterator<Item = (usize, Exponents, T)>) -> Result<Self> {
        let mut coeffs = vec![JetPoly::new(); k];
        for (j, e, c) in terms {
            let slot = coeffs
                .get_mut(j)
                .ok_or_else(|| Error::InvalidJet(format!("component {j} out of range for k = {k}")))?;
            if let Some(old) = slot.remove(&e) {
                add_into(slot, e, old + c);
            } else {
                add_into(slot, e, c);
            }
        }
        Self::new(n, k, d, coeffs)
    }

    pub fn identity(n: usize, d: usize) -> Self {
        let coeffs = (0..n).map(|i| JetPoly::from([(unit_exponent(n, i), T::one())])).collect();
        JetMap { n, k: n, d: d.max(1), coeffs }
    }

    /// The linear jet `z -> A z` for a `k × n` matrix.
    pub fn linear(a: &Matrix<T>, d: usize) -> Self {
        let (k, n) = (a.rows(), a.cols());
        let coeffs = (0..k)
            .map(|j| {
                let mut c = JetPoly::new();
                for i in 0..n {
                    add_into(&mut c, unit_exponent(n, i), a[(j, i)].clone());
                }
                c
            })
            .collect();
        JetMap { n, k, d: d.max(1), coeffs }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn components(&self) -> &[JetPoly<T>] {
        &self.coeffs
    }

    pub fn component(&self, j: usize) -> &JetPoly<T> {
        &self.coeffs[j]
    }

    pub fn coefficient(&self, j: usize, e: &[u32]) -> T {
        self.coeffs[j].get(e).cloned().unwrap_or_else(T::zero)
    }

    /// `k × n` matrix of degree-one coefficients.
    pub fn linear_part(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.k, self.n);
        for (j, comp) in self.coeffs.iter().enumerate() {
            for i in 0..self.n {
                if let Some(c) = comp.get(&unit_exponent(self.n, i)) {
                    m[(j, i)] = c.clone();
                }
            }
        }
        m
    }

    pub fn is_diff(&self) -> Result<bool> {
        if self.n != self.k {
            return Err(Error::JetMismatch(format!("Diff requires a square jet, got n = {} and k = {}", self.n, self.k)));
        }
        Ok(!self.linear_part().determinant().is_zero())
    }

    fn is_identity(&self) -> bool {
        self == &JetMap::identity(self.n, self.d)
    }
}

/// `outer ∘ inner`: substitutes the components of `inner` into `outer`.
pub fn compose<T: Scalar>(inner: &JetMap<T>, outer: &JetMap<T>) -> Result<JetMap<T>> {
    if inner.k != outer.n {
        return Err(Error::JetMismatch(format!(
            "inner target dimension {} differs from outer source dimension {}",
            inner.k, outer.n
        )));
    }
    if inner.d != outer.d {
        return Err(Error::JetMismatch(format!("jet orders differ: {} and {}", inner.d, outer.d)));
    }
    let d = inner.d;
    // powers[i][a] = (inner_i)^a truncated, built lazily
    let mut powers: Vec<Vec<JetPoly<T>>> = vec![vec![constant_one(inner.n)]; inner.k];
    let power = |i: usize, a: usize, powers: &mut Vec<Vec<JetPoly<T>>>| {
        while powers[i].len() <= a {
            let next = mul_truncated(powers[i].last().unwrap(), &inner.coeffs[i], d);
            powers[i].push(next);
        }
        powers[i][a].clone()
    };
    let mut coeffs = Vec::with_capacity(outer.k);
    for comp in &outer.coeffs {
        let mut acc = JetPoly::new();
        for (e, c) in comp {
            let mut term = JetPoly::from([(vec![0; inner.n], c.clone())]);
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    let p = power(i, a as usize, &mut powers);
                    term = mul_truncated(&term, &p, d);
                }
            }
            for (te, tc) in term {
                add_into(&mut acc, te, tc);
            }
        }
        acc.retain(|e, _| total_degree(e) > 0);
        coeffs.push(acc);
    }
    Ok(JetMap { n: inner.n, k: outer.k, d, coeffs })
}

/// Two-sided inverse in `Diff_d^n`.
///
/// Writing `Δ = A z + H(z)` with `H` of order at least two, the inverse is
/// the fixed point of `G ↦ A⁻¹ (z − H(G))`; each pass fixes one more degree.
pub fn invert_jet<T: Scalar>(delta: &JetMap<T>) -> Result<JetMap<T>> {
    if !delta.is_diff()? {
        return Err(Error::NotDiffeomorphism);
    }
    let n = delta.n;
    let d = delta.d;
    let a_inv = delta.linear_part().inverse().ok_or(Error::NotDiffeomorphism)?;
    let a_inv_jet = JetMap::linear(&a_inv, d);
    let mut higher = delta.clone();
    for comp in &mut higher.coeffs {
        comp.retain(|e, _| total_degree(e) >= 2);
    }
    let mut g = a_inv_jet.clone();
    for _ in 1..d {
        let h_of_g = compose(&g, &higher)?;
        let mut rhs = JetMap::identity(n, d);
        for (comp, h) in rhs.coeffs.iter_mut().zip(&h_of_g.coeffs) {
            for (e, c) in h {
                add_into(comp, e.clone(), -c.clone());
            }
        }
        g = compose(&rhs, &a_inv_jet)?;
    }
    Ok(g)
}

/// `(Δn, Δk)·Ψ = Δk ∘ Ψ ∘ Δn⁻¹` for `Ψ ∈ J_d^{n,k}`.
pub fn left_right_act<T: Scalar>(delta_n: &JetMap<T>, delta_k: &JetMap<T>, psi: &JetMap<T>) -> Result<JetMap<T>> {
    if delta_n.n != psi.n || delta_n.k != psi.n {
        return Err(Error::JetMismatch(format!("source diffeomorphism must act on C^{}", psi.n)));
    }
    if delta_k.n != psi.k || delta_k.k != psi.k {
        return Err(Error::JetMismatch(format!("target diffeomorphism must act on C^{}", psi.k)));
    }
    if !delta_k.is_diff()? {
        return Err(Error::NotDiffeomorphism);
    }
    let source = if delta_n.is_identity() { delta_n.clone() } else { invert_jet(delta_n)? };
    compose(&compose(&source, psi)?, delta_k)
}

fn format_monomial(e: &[u32]) -> String {
    let factors: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .map(|(i, &a)| if a == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, a) })
        .collect();
    factors.join("*")
}

impl<T: Scalar + fmt::Display> fmt::Display for JetMap<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    return "0".to_string();
                }
                let mut terms: Vec<(&Exponents, &T)> = comp.iter().collect();
                terms.sort_by_key(|(e, _)| total_degree(e));
                terms
                    .iter()
                    .map(|(e, c)| {
                        let c = c.to_string();
                        match c.as_str() {
                            "1" => format_monomial(e),
                            "-1" => format!("-{}", format_monomial(e)),
                            _ => format!("{c}*{}", format_monomial(e)),
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
                    .replace("+ -", "- ")
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn exponent_key(e: &[u32]) -> String {
    let inner: Vec<String> = e.iter().map(u32::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn parse_exponent_key(key: &str) -> Option<Exponents> {
    let body = key.trim().strip_prefix('[')?.strip_suffix(']')?;
    if body.trim().is_empty() {
        return Some(Vec::new());
    }
    body.split(',').map(|s| s.trim().parse().ok()).collect()
}

#[derive(Serialize, Deserialize)]
struct JetRepr {
    n: usize,
    k: usize,
    d: usize,
    coeffs: Vec<BTreeMap<String, String>>,
}

impl<T: Scalar + fmt::Display> Serialize for JetMap<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|comp| comp.iter().map(|(e, c)| (exponent_key(e), c.to_string())).collect())
            .collect();
        JetRepr { n: self.n, k: self.k, d: self.d, coeffs }.serialize(serializer)
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for JetMap<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = JetRepr::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for comp in repr.coeffs {
            let mut c = JetPoly::new();
            for (key, value) in comp {
                let e = parse_exponent_key(&key).ok_or_else(|| D::Error::custom(format!("bad multi-index {key:?}")))?;
                let v = value.parse::<T>().map_err(|_| D::Error::custom(format!("bad coefficient {value:?}")))?;
                c.insert(e, v);
            }
            coeffs.push(c);
        }
        JetMap::new(repr.n, repr.k, repr.d, coeffs).map_err(D::Error::custom)
    }
}
