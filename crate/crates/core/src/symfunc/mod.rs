//! Graded polynomials, Schur polynomials in the elementary letter, Schur
//! expansion and Littlewood–Richardson products.

mod lr;
mod poly;
mod realize;
mod schur;

pub use lr::{lr_coefficient, lr_product};
pub use poly::{Family, GradedPolynomial, Grading, Monomial, Var};
pub use realize::{realize_in_monomials, symmetric_to_elementary, MonomialPoly};
pub use schur::{expand_in_schur, schur_in_elementary, SchurExpander, SchurExpansion};
