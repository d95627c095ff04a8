//! Nevanlinna-Pick interpolation on the disk and the bidisk.
//!
//! The crate decides solvability, extremality and uniqueness of Pick problems
//! on `D` and `D^2`, and checks strong Pick set certificates for rational
//! inner functions against inner varieties:
//!
//! * [`linalg`] and [`roots`]: deterministic complex linear algebra (cyclic
//!   Jacobi eigensolver) and Aberth-Ehrlich root finding.
//! * [`poly`]: bivariate polynomials, rational inner functions, Blaschke
//!   products, homogenization and Sylvester resultants.
//! * [`pick1d`]: the classical one-variable Pick theory.
//! * [`agler`]: bidisk data matrices, Agler decompositions via Dykstra
//!   projections, admissible kernel certificates, and the rank-one
//!   non-uniqueness certificate.
//! * [`hardy`]: Hardy space `H^2(D^2)` inner products and the monomial
//!   certificate.
//! * [`bezout`]: intersection counting for curves attached to rational inner
//!   functions.
//! * [`classify`]: the degree gate and the complete classifier for problems
//!   solved by a function of one variable.
//!
//! The crate is `no_std` (it needs `alloc`); enable the `std` feature to use
//! the platform math library instead of `libm`.
#![cfg_attr(not(any(feature = "std", test)), no_std)]
// `!(x < y)` is deliberate: NaN must fail every check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod agler;
pub mod bezout;
pub mod classify;
mod error;
pub mod hardy;
pub mod linalg;
pub mod pick1d;
pub mod poly;
pub mod rng;
pub mod roots;
mod tol;

pub use error::{Error, Result};
pub use linalg::{CMatrix, Cplx, EigenDecomposition, HermitianMatrix, PsdStatus};
pub use tol::Tolerances;
