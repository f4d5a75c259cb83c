//! Exact polynomials, rational Hilbert series and numerical semigroups.

mod poly;
mod semigroup;
mod series;

pub use poly::IntPolynomial;
pub use semigroup::{
    sg_frobenius, sg_membership, sg_minimal_generators, value_semigroup_from_series,
    NumericalSemigroup, ValueSemigroup,
};
pub use series::{
    coefficient_list, complete_intersection_degrees, pg_difference, pg_from_series,
    series_difference, HilbertSeries,
};
