//! Local algebras `A_Ψ = J_d^n / I⟨Ψ_1, ..., Ψ_k⟩` by linear algebra over
//! the monomial basis of `J_d^n`.
//!
//! Columns are ordered by degree, then by descending grevlex within a
//! degree, so each echelon pivot is the leading monomial of the lowest-degree
//! form of an ideal element. The non-pivot monomials then give a basis of
//! the associated graded algebra, and the Hilbert function counts them per
//! degree.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{mul_truncated, total_degree, Exponents, JetMap, JetPoly};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalAlgebraReport {
    pub dimension: usize,
    /// `hilbert[i - 1]` is the dimension of the degree-`i` graded piece.
    pub hilbert: Vec<usize>,
    pub nilpotency_index: usize,
    /// Entry `i - 1` is the rank of `A/A² -> Hom(A^i/A^{i+1}, A^{i+1}/A^{i+2})`.
    pub pairing_ranks: Vec<usize>,
}

fn grevlex_desc(a: &Exponents, b: &Exponents) -> Ordering {
    // a precedes b when the last nonzero entry of a - b is negative
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Less => return Ordering::Less,
            Ordering::Greater => return Ordering::Greater,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

/// All exponent vectors of total degree exactly `deg` in `n` variables.
fn monomials_of_degree(n: usize, deg: usize) -> Vec<Exponents> {
    fn go(n: usize, left: usize, prefix: &mut Exponents, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == n {
            prefix.push(left as u32);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=left).rev() {
            prefix.push(a as u32);
            go(n, left - a, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    go(n, deg, &mut Vec::new(), &mut out);
    out.sort_by(grevlex_desc);
    out
}

struct Quotient<T> {
    columns: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
    echelon: Matrix<T>,
    pivots: Vec<usize>,
    standard: Vec<bool>,
}

impl<T: Scalar> Quotient<T> {
    fn build(psi: &JetMap<T>) -> Self {
        let (n, d) = (psi.n(), psi.d());
        let columns: Vec<Exponents> = (1..=d).flat_map(|deg| monomials_of_degree(n, deg)).collect();
        let index: HashMap<Exponents, usize> = columns.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::new();
        for deg in 0..d {
            for m in monomials_of_degree(n, deg) {
                let mono: JetPoly<T> = JetPoly::from([(m, T::one())]);
                for comp in psi.components() {
                    let product = mul_truncated(&mono, comp, d);
                    if product.is_empty() {
                        continue;
                    }
                    let mut row = vec![T::zero(); columns.len()];
                    for (e, c) in product {
                        row[index[&e]] = c;
                    }
                    rows.push(row);
                }
            }
        }
        let generators = if rows.is_empty() { Matrix::zeros(0, columns.len()) } else { Matrix::from_rows(rows) };
        let ech = generators.echelon();
        let mut standard = vec![true; columns.len()];
        for &p in &ech.pivots {
            standard[p] = false;
        }
        Quotient { columns, index, echelon: ech.matrix, pivots: ech.pivots, standard }
    }

    /// Reduces a monomial modulo the ideal; the result is supported on standard monomials.
    fn normal_form(&self, e: &Exponents) -> Vec<T> {
        let mut v = vec![T::zero(); self.columns.len()];
        v[self.index[e]] = T::one();
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in self.echelon.row(r).iter().enumerate().skip(p) {
                if !x.is_zero() {
                    v[j] = v[j].clone() - f.clone() * x.clone();
                }
            }
        }
        v
    }

    fn standard_of_degree(&self, deg: usize) -> Vec<usize> {
        (0..self.columns.len()).filter(|&i| self.standard[i] && total_degree(&self.columns[i]) == deg).collect()
    }
}

/// Dimension, Hilbert function, nilpotency index and pairing ranks of `A_Ψ`.
pub fn local_algebra<T: Scalar>(psi: &JetMap<T>) -> LocalAlgebraReport {
    let (n, d) = (psi.n(), psi.d());
    let quotient = Quotient::build(psi);
    let hilbert: Vec<usize> = (1..=d).map(|deg| quotient.standard_of_degree(deg).len()).collect();
    let dimension = hilbert.iter().sum();
    let nilpotency_index = 1 + hilbert.iter().rposition(|&h| h > 0).map_or(0, |i| i + 1);

    let mut pairing_ranks = Vec::new();
    for i in 1..nilpotency_index {
        if i + 1 > d {
            pairing_ranks.push(0);
            continue;
        }
        let source = quotient.standard_of_degree(i);
        let target = quotient.standard_of_degree(i + 1);
        if source.is_empty() || target.is_empty() {
            pairing_ranks.push(0);
            continue;
        }
        let rows: Vec<Vec<T>> = (0..n)
            .map(|a| {
                let mut row = Vec::with_capacity(source.len() * target.len());
                for &u in &source {
                    let mut e = quotient.columns[u].clone();
                    e[a] += 1;
                    let nf = quotient.normal_form(&e);
                    row.extend(target.iter().map(|&w| nf[w].clone()));
                }
                row
            })
            .collect();
        pairing_ranks.push(Matrix::from_rows(rows).rank());
    }
    LocalAlgebraReport { dimension, hilbert, nilpotency_index, pairing_ranks }
}

/// Compares every field of the two reports: a necessary condition for
/// isomorphic local algebras.
pub fn contact_invariants_equal<T: Scalar>(a: &JetMap<T>, b: &JetMap<T>) -> Result<bool> {
    if a.n() != b.n() || a.d() != b.d() {
        return Err(Error::JetMismatch(format!(
            "contact invariants need equal source dimension and order, got (n={}, d={}) and (n={}, d={})",
            a.n(),
            a.d(),
            b.n(),
            b.d()
        )));
    }
    Ok(local_algebra(a) == local_algebra(b))
}
