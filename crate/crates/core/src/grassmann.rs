//! Cohomology of the Grassmannian `Gr(n, N)` in the Schubert basis.
//!
//! Classes are indexed by partitions inside the `n × (N − n)` box; products
//! are Littlewood–Richardson products with every partition outside the box
//! deleted.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{partitions_in_box, Partition};
use crate::scalar::Scalar;
use crate::symfunc::{lr_product, SchurExpansion};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrassmannianRing {
    n: usize,
    ambient: usize,
    basis: Vec<Partition>,
}

impl GrassmannianRing {
    /// `Gr(n, ambient)`: `n`-planes in `C^ambient`.
    pub fn new(n: usize, ambient: usize) -> Result<Self> {
        if n > ambient {
            return Err(Error::InvalidGrassmannian { n, ambient });
        }
        let basis = partitions_in_box(n, ambient - n);
        Ok(GrassmannianRing { n, ambient, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.ambient - self.n
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.rows() * self.cols()
    }

    /// The class of a point: the full box.
    pub fn top_class(&self) -> Partition {
        Partition::new(vec![self.cols(); if self.cols() == 0 { 0 } else { self.rows() }]).expect("box shape is a partition")
    }

    fn check(&self, lambda: &Partition) -> Result<()> {
        if lambda.fits_in_box(self.rows(), self.cols()) {
            Ok(())
        } else {
            Err(Error::NotInBox { partition: lambda.clone(), rows: self.rows(), cols: self.cols() })
        }
    }

    pub fn cup_product<T: Scalar>(&self, lambda: &Partition, mu: &Partition) -> Result<SchurExpansion<T>> {
        self.check(lambda)?;
        self.check(mu)?;
        let mut prod = lr_product::<T>(lambda, mu);
        prod.retain(|nu, _| nu.fits_in_box(self.rows(), self.cols()));
        Ok(prod)
    }

    /// Poincaré pairing; zero unless the degrees are complementary.
    pub fn intersection_number(&self, lambda: &Partition, mu: &Partition) -> Result<u64> {
        self.check(lambda)?;
        self.check(mu)?;
        if lambda.weight() + mu.weight() != self.dimension() {
            return Ok(0);
        }
        let top = self.top_class();
        let prod = self.cup_product::<i64>(lambda, mu)?;
        Ok(prod.get(&top) as u64)
    }
}
