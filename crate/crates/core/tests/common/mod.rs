//! Independent reference computations shared by the integration tests and
//! the acceptance suite. None of these reuse the algorithms under test.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thom_core::jets::{Exponents, JetPoly};
use thom_core::symfunc::{symmetric_to_elementary, MonomialPoly, SchurExpander};
use thom_core::{Family, JetMap, Partition, Polynomial, Rational, SchurExpansion};

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

pub fn var(fam: &Family, i: u32) -> Polynomial {
    Polynomial::var(fam.var(i))
}

/// Generating polynomial of semistandard tableaux of shape `lambda` with
/// entries in `1..=numvars`, filled cell by cell in row-major order.
pub fn ssyt_polynomial(lambda: &Partition, numvars: usize) -> MonomialPoly<i64> {
    let shape = lambda.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&w| vec![0; w]).collect();
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &w)| (0..w).map(move |c| (r, c))).collect();
    let mut out = MonomialPoly::zero(numvars);
    fn fill(
        at: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        numvars: usize,
        content: &mut Vec<u32>,
        out: &mut MonomialPoly<i64>,
    ) {
        if at == cells.len() {
            out.add_term(content.clone(), 1);
            return;
        }
        let (r, c) = cells[at];
        let low_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let low_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in low_row.max(low_col)..=numvars {
            grid[r][c] = v;
            content[v - 1] += 1;
            fill(at + 1, cells, grid, numvars, content, out);
            content[v - 1] -= 1;
        }
        grid[r][c] = 0;
    }
    let mut content = vec![0u32; numvars];
    fill(0, &cells, &mut grid, numvars, &mut content, &mut out);
    out
}

/// `s_lambda * s_mu` by multiplying tableau realizations and re-expanding.
/// Every `nu` in the product has at most `len(lambda) + len(mu)` parts, so
/// that many variables keep the realization faithful.
pub fn lr_by_realization(lambda: &Partition, mu: &Partition) -> SchurExpansion<i64> {
    let numvars = (lambda.len() + mu.len()).max(1);
    let product = ssyt_polynomial(lambda, numvars).mul(&ssyt_polynomial(mu, numvars));
    SchurExpander::new(numvars).expand_realized(&product).expect("symmetric product")
}

/// `c'/c` through degree `d` by expanding `1/c = sum_m (1 - c)^m` and
/// multiplying out, with no recurrence.
pub fn relative_by_geometric_series(d: usize) -> Vec<Polynomial> {
    let mut tail = Polynomial::zero();
    for i in 1..=d {
        tail = &tail + &var(&Family::C, i as u32);
    }
    let minus_tail = -tail;
    let mut inverse = Polynomial::zero();
    let mut power = Polynomial::one();
    for _ in 0..=d {
        inverse = &inverse + &power;
        power = (&power * &minus_tail).truncate(d);
    }
    let mut cprime = Polynomial::one();
    for i in 1..=d {
        cprime = &cprime + &var(&Family::C_PRIME, i as u32);
    }
    let quotient = (&cprime * &inverse).truncate(d);
    (0..=d).map(|i| quotient.homogeneous_component(i)).collect()
}

/// `prod_i (1 + x_i + alpha*m)` over `rank` roots, rewritten in the
/// elementary letter `Q`.
pub fn twist_by_roots(rank: usize) -> Vec<Polynomial> {
    let shift = &var(&Family::ALPHA, 1) * &var(&Family::M, 1);
    let mut total = Polynomial::one();
    for i in 1..=rank {
        let factor = &(&Polynomial::one() + &var(&Family::X, i as u32)) + &shift;
        total = &total * &factor;
    }
    let in_q = symmetric_to_elementary(&total, &Family::X, rank, &Family::Q).expect("symmetric in roots");
    // alpha has degree zero, so alpha*m sits in degree one
    (0..=rank).map(|j| in_q.homogeneous_component(j)).collect()
}

/// A random jet with small integer coefficients; `density` is the chance
/// each monomial appears.
pub fn random_jet(rng: &mut ChaCha8Rng, n: usize, k: usize, d: usize, density: f64) -> JetMap<Rational> {
    let monomials = monomials_up_to(n, d);
    let coeffs = (0..k)
        .map(|_| {
            let mut comp = JetPoly::new();
            for e in &monomials {
                if rng.gen_bool(density) {
                    let c: i64 = rng.gen_range(-3..=3);
                    if c != 0 {
                        comp.insert(e.clone(), q(c));
                    }
                }
            }
            comp
        })
        .collect();
    JetMap::new(n, k, d, coeffs).expect("valid jet")
}

/// A random element of `Diff_d^n`: an invertible integer linear part plus
/// random higher terms.
pub fn random_diff(rng: &mut ChaCha8Rng, n: usize, d: usize) -> JetMap<Rational> {
    loop {
        let jet = random_jet(rng, n, n, d, 0.5);
        if jet.is_diff().expect("square") {
            return jet;
        }
    }
}

pub fn monomials_up_to(n: usize, d: usize) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    fn go(i: usize, left: usize, e: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if i == e.len() {
            if e.iter().any(|&a| a > 0) {
                out.push(e.clone());
            }
            return;
        }
        for a in 0..=left {
            e[i] = a as u32;
            go(i + 1, left - a, e, out);
        }
        e[i] = 0;
    }
    go(0, d, &mut e, &mut out);
    out
}

/// Rewrites a family-`C` Schur expansion over the integers as rationals.
pub fn to_rational(e: &SchurExpansion<i64>) -> SchurExpansion<Rational> {
    e.iter().map(|(p, c)| (p.clone(), q(*c))).collect()
}
