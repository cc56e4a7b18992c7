//! Σ¹ at jet order one, from first principles.
//!
//! In `J_1^{n,k} = Hom(C^n, C^k)` the locus `Σ¹` is the set of maps with a
//! kernel. Over the projective space of lines `ℓ ⊂ C^n` it lifts to the
//! zero locus of `Hom(ℓ, C^k)`, whose equivariant class is the Euler class
//! `∏_j (y_j − x_i)` at the fixed line `ℓ = ⟨e_i⟩`. Pushing forward to a
//! point divides by the tangent weights `∏_{a≠i} (x_a − x_i)` and sums over
//! the fixed points.
//!
//! Roots `x` are those of the source bundle and `y` those of the target,
//! with `c = e(x)` and `c' = e(y)`. Signs are fixed so that `n = k = 1`
//! yields `c'_1 − c_1`.

use crate::error::{Error, Result};
use crate::symfunc::{symmetric_to_elementary, Family, GradedPolynomial, Var};
use crate::Polynomial;

use super::CatalogueEntry;

pub const SIGMA1: &str = "Sigma1";
pub const ORACLE_SOURCE: &str = "Euler-class oracle";

fn root(fam: &Family, i: usize) -> Polynomial {
    GradedPolynomial::var(fam.var(i as u32))
}

fn difference(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a - b
}

/// Exact quotient of `p` by `var − shift`, or `None` when it does not divide.
pub(crate) fn divide_by_linear(p: &Polynomial, var: &Var, shift: &Polynomial) -> Option<Polynomial> {
    let layers = p.coefficients_in(var);
    let Some(&top) = layers.keys().next_back() else {
        return Some(Polynomial::zero());
    };
    let coeff = |i: u32| layers.get(&i).cloned().unwrap_or_else(Polynomial::zero);
    // synthetic division from the top power down
    let mut quotient = vec![Polynomial::zero(); top as usize];
    let mut carry = Polynomial::zero();
    for i in (1..=top).rev() {
        carry = &coeff(i) + &(shift * &carry);
        quotient[i as usize - 1] = carry.clone();
    }
    let remainder = &coeff(0) + &(shift * &carry);
    if !remainder.is_zero() {
        return None;
    }
    let mut out = Polynomial::zero();
    for (i, q) in quotient.into_iter().enumerate() {
        let power = Polynomial::var(var.clone()).pow(i as u32);
        out = &out + &(&q * &power);
    }
    Some(out)
}

fn vandermonde_without(x: &Family, n: usize, skip: usize) -> Polynomial {
    let mut v = Polynomial::one();
    for a in 1..=n {
        for b in a + 1..=n {
            if a != skip && b != skip {
                v = &v * &difference(&root(x, b), &root(x, a));
            }
        }
    }
    v
}

/// The class of Σ¹ in `J_1^{n,k}` as a polynomial in `c_1..c_n, c'_1..c'_k`.
pub fn sigma1_polynomial(n: usize, k: usize) -> Result<Polynomial> {
    if n == 0 || k < n {
        return Err(Error::Parse(format!("the kernel locus needs 1 <= n <= k, got n = {n}, k = {k}")));
    }
    let (x, y) = (Family::X, Family::Y);
    let mut total = Polynomial::zero();
    for i in 1..=n {
        let mut euler = Polynomial::one();
        for j in 1..=k {
            euler = &euler * &difference(&root(&y, j), &root(&x, i));
        }
        let mut term = &euler * &vandermonde_without(&x, n, i);
        if i % 2 == 0 {
            term = -term;
        }
        total = &total + &term;
    }
    for a in 1..=n {
        for b in a + 1..=n {
            total = divide_by_linear(&total, &x.var(b as u32), &root(&x, a))
                .ok_or_else(|| Error::Parse("push-forward numerator is not divisible by the Vandermonde".into()))?;
        }
    }
    let in_target = symmetric_to_elementary(&total, &y, k, &Family::C_PRIME)?;
    symmetric_to_elementary(&in_target, &x, n, &Family::C)
}

/// Catalogue entry for Σ¹ with a one-dimensional source.
pub fn sigma1_oracle(k: usize, truncation: usize) -> Result<CatalogueEntry> {
    sigma1_oracle_at(1, k, truncation)
}

/// Catalogue entry for Σ¹ in `J_1^{n,k}`; codimension `k − n + 1`.
pub fn sigma1_oracle_at(n: usize, k: usize, truncation: usize) -> Result<CatalogueEntry> {
    let poly = sigma1_polynomial(n, k)?;
    let codim = k + 1 - n;
    if truncation < codim {
        return Err(Error::DegreeOverflow { needed: codim, truncation });
    }
    Ok(CatalogueEntry {
        name: SIGMA1.to_string(),
        l: k as i64 - n as i64,
        n,
        k,
        codim,
        poly,
        source: ORACLE_SOURCE.to_string(),
    })
}
