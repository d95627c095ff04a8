//! Polynomials in one and two complex variables, Blaschke products, rational
//! inner functions, homogenization and resultants.

mod bi;
mod blaschke;
mod inner;
mod proj;
mod resultant;
mod uni;

pub use bi::{BiPoly, COEFF_FLOOR};
pub use blaschke::{blaschke_eval, blaschke_to_fraction, graph_poly, Blaschke};
pub use inner::{make_rational_inner, torus_grid, RationalInner, INNER_GRID, TORUS_GRID};
pub use proj::{homogenize, ProjPoly};
pub use resultant::{coprime, sylvester_resultant, Variable};
pub use uni::UniPoly;
