use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::ZERO;
use crate::roots::{eval_poly, poly_roots, Roots};
use crate::{Cplx, Result, Tolerances};

use super::bi::COEFF_FLOOR;

/// Univariate complex polynomial, coefficients in ascending powers.
///
/// Trailing coefficients below [`COEFF_FLOOR`] in modulus are dropped, so the
/// last stored coefficient is the leading one. The zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct UniPoly {
    coeffs: Vec<Cplx>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Cplx>) -> Self {
        while coeffs.last().is_some_and(|c| c.norm() < COEFF_FLOOR) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Cplx) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear factor `z - a`.
    pub fn linear(a: Cplx) -> Self {
        Self::new(vec![-a, Cplx::new(1.0, 0.0)])
    }

    pub fn coeffs(&self) -> &[Cplx] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Cplx {
        self.coeffs.last().copied().unwrap_or(ZERO)
    }

    pub fn eval(&self, z: Cplx) -> Cplx {
        eval_poly(&self.coeffs, z)
    }

    pub fn scale(&self, s: Cplx) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[Cplx], k: usize| v.get(k).copied().unwrap_or(ZERO);
        Self::new((0..n).map(|k| get(&self.coeffs, k) + get(&other.coeffs, k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Cplx::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `sum |c_k|`, the magnitude scale used for residual checks.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn roots(&self, tol: &Tolerances) -> Result<Roots> {
        poly_roots(&self.coeffs, tol)
    }

    /// The monic polynomial with the given roots.
    pub fn from_roots(roots: &[Cplx]) -> Self {
        roots
            .iter()
            .fold(Self::constant(Cplx::new(1.0, 0.0)), |acc, r| acc.mul(&Self::linear(*r)))
    }
}
