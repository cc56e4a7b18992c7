//! Littlewood–Richardson products of Schur classes.
//!
//! `c^nu_{lambda,mu}` is the number of semistandard fillings of the skew
//! shape `nu / lambda` with content `mu` whose reverse reading word
//! (right to left along rows, top to bottom) is a lattice word.

use crate::partitions::{partitions_of, Partition};
use crate::scalar::Scalar;
use crate::symfunc::schur::SchurExpansion;

/// `s_lambda * s_mu = sum_nu c^nu_{lambda,mu} s_nu`.
pub fn lr_product<T: Scalar>(lambda: &Partition, mu: &Partition) -> SchurExpansion<T> {
    let total = lambda.weight() + mu.weight();
    let mut out = SchurExpansion::new();
    for nu in partitions_of(total) {
        if !nu.contains(lambda) || !nu.contains(mu) || nu.len() > lambda.len() + mu.len() {
            continue;
        }
        let count = lr_coefficient(lambda, mu, &nu);
        if count > 0 {
            out.add(nu, T::from_i64(count as i64));
        }
    }
    out
}

/// A single LR coefficient; zero unless `lambda` is inside `nu` with matching weight.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|row| (lambda.part(row)..nu.part(row)).rev().map(move |col| (row, col)))
        .collect();
    let mut filling = Filling {
        lambda,
        nu,
        content: mu.parts(),
        grid: nu.parts().iter().map(|&w| vec![0usize; w]).collect(),
        used: vec![0; mu.len() + 1],
    };
    filling.count(&cells, 0)
}

struct Filling<'a> {
    lambda: &'a Partition,
    nu: &'a Partition,
    content: &'a [usize],
    grid: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl Filling<'_> {
    fn count(&mut self, cells: &[(usize, usize)], at: usize) -> u64 {
        if at == cells.len() {
            return 1;
        }
        let (row, col) = cells[at];
        let mut total = 0;
        for label in 1..=self.content.len() {
            if self.used[label] == self.content[label - 1] {
                continue;
            }
            if label > 1 && self.used[label] >= self.used[label - 1] {
                continue;
            }
            // weakly increasing along the row; the right neighbour is already filled
            if col + 1 < self.nu.part(row) && label > self.grid[row][col + 1] {
                continue;
            }
            // strictly increasing down columns inside the skew shape
            if row > 0 && col >= self.lambda.part(row - 1) && label <= self.grid[row - 1][col] {
                continue;
            }
            self.grid[row][col] = label;
            self.used[label] += 1;
            total += self.count(cells, at + 1);
            self.used[label] -= 1;
            self.grid[row][col] = 0;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn expansion(items: &[(&[usize], i64)]) -> SchurExpansion<Rational> {
        items.iter().map(|(parts, c)| (p(parts), Rational::from_integer((*c).into()))).collect()
    }

    #[test]
    fn unit_products() {
        for lambda in [p(&[]), p(&[2, 1]), p(&[3, 3, 1])] {
            assert_eq!(lr_product::<Rational>(&lambda, &p(&[])), expansion(&[(lambda.parts(), 1)]));
            assert_eq!(lr_product::<Rational>(&p(&[]), &lambda), expansion(&[(lambda.parts(), 1)]));
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(lr_product::<Rational>(&p(&[1]), &p(&[1])), expansion(&[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(lr_product::<Rational>(&p(&[2]), &p(&[1])), expansion(&[(&[3], 1), (&[2, 1], 1)]));
    }

    #[test]
    fn classic_multiplicity_two() {
        // s21 * s21 contains s321 with coefficient 2
        let prod = lr_product::<Rational>(&p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(prod.get(&p(&[3, 2, 1])), Rational::from_integer(2.into()));
        assert_eq!(prod.get(&p(&[4, 2])), Rational::from_integer(1.into()));
        let dims: i64 = prod.iter().map(|(_, c)| c.to_integer().try_into().unwrap_or(0i64)).sum();
        assert_eq!(dims, 8);
    }

    #[test]
    fn products_commute() {
        let shapes = [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2])];
        for a in &shapes {
            for b in &shapes {
                assert_eq!(lr_product::<Rational>(a, b), lr_product::<Rational>(b, a), "{a} {b}");
            }
        }
    }
}
