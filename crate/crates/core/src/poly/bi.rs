use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{ONE, ZERO};
use crate::{Cplx, Error, Result};

use super::uni::UniPoly;

/// Coefficients with modulus below this are not stored.
pub const COEFF_FLOOR: f64 = 1e-14;

/// Sparse polynomial in `z1, z2`, keyed by the exponent pair `(i, j)` of
/// `z1^i z2^j`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Cplx>,
}

impl BiPoly {
    /// Sums repeated exponents and drops negligible coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), Cplx)>) -> Self {
        let mut map: BTreeMap<(usize, usize), Cplx> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert(ZERO) += c;
        }
        map.retain(|_, c| c.norm() >= COEFF_FLOOR);
        BiPoly { terms: map }
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: Cplx) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(ONE)
    }

    pub fn monomial(i: usize, j: usize, c: Cplx) -> Self {
        Self::from_terms([((i, j), c)])
    }

    pub fn z1() -> Self {
        Self::monomial(1, 0, ONE)
    }

    pub fn z2() -> Self {
        Self::monomial(0, 1, ONE)
    }

    /// `u(z1)` viewed as a polynomial in two variables.
    pub fn from_z1(u: &UniPoly) -> Self {
        Self::from_terms(u.coeffs().iter().enumerate().map(|(i, c)| ((i, 0), *c)))
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), Cplx)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    pub fn coeff(&self, i: usize, j: usize) -> Cplx {
        self.terms.get(&(i, j)).copied().unwrap_or(ZERO)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `(max i, max j)` over stored terms; `(0, 0)` for the zero polynomial.
    pub fn bidegree(&self) -> (usize, usize) {
        self.terms.keys().fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn eval(&self, z1: Cplx, z2: Cplx) -> Cplx {
        let (n1, _) = self.bidegree();
        let rows = self.dense_rows(n1);
        rows.iter().rev().fold(ZERO, |acc, row| {
            acc * z1 + row.iter().rev().fold(ZERO, |a, c| a * z2 + c)
        })
    }

    fn dense_rows(&self, n1: usize) -> Vec<Vec<Cplx>> {
        let mut rows: Vec<Vec<Cplx>> = vec![Vec::new(); n1 + 1];
        for (&(i, j), &c) in &self.terms {
            let row = &mut rows[i];
            if row.len() <= j {
                row.resize(j + 1, ZERO);
            }
            row[j] = c;
        }
        rows
    }

    /// `sum |c_ij| |z1|^i |z2|^j`, the scale for residual checks at a point.
    pub fn coeff_scale_at(&self, z1: Cplx, z2: Cplx) -> f64 {
        let (a1, a2) = (z1.norm(), z2.norm());
        self.terms
            .iter()
            .map(|(&(i, j), c)| c.norm() * a1.powi(i as i32) * a2.powi(j as i32))
            .sum()
    }

    /// Largest coefficient modulus.
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficients in `z2` (ascending, length `n2 + 1`) with `z1` fixed.
    pub fn in_z2_at(&self, z1: Cplx) -> Vec<Cplx> {
        let (_, n2) = self.bidegree();
        let mut out = vec![ZERO; n2 + 1];
        for (&(i, j), &c) in &self.terms {
            out[j] += c * z1.powu(i as u32);
        }
        out
    }

    /// Coefficients in `z1` (ascending, length `n1 + 1`) with `z2` fixed.
    pub fn in_z1_at(&self, z2: Cplx) -> Vec<Cplx> {
        self.swap_vars().in_z2_at(z2)
    }

    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((j, i), c)).collect(),
        }
    }

    pub fn scale(&self, s: Cplx) -> Self {
        Self::from_terms(self.terms().map(|(k, c)| (k, c * s)))
    }

    pub fn neg(&self) -> Self {
        self.scale(Cplx::new(-1.0, 0.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(self.terms().chain(other.terms()))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<(usize, usize), Cplx> = BTreeMap::new();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                *out.entry((i + k, j + l)).or_insert(ZERO) += a * b;
            }
        }
        Self::from_terms(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `z1^n1 z2^n2 conj(p)(1/z1, 1/z2)` for the bidegree `(n1, n2)` of `p`.
    pub fn reflect(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (n1, n2) = self.bidegree();
        Ok(Self::from_terms(
            self.terms().map(|((i, j), c)| ((n1 - i, n2 - j), c.conj())),
        ))
    }

    /// True when no term involves `z2`.
    pub fn depends_only_on_z1(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j == 0)
    }

    /// The coefficients in `z1` of a polynomial not involving `z2`.
    pub fn as_z1_poly(&self) -> Result<UniPoly> {
        if !self.depends_only_on_z1() {
            return Err(Error::Precondition("polynomial depends on z2"));
        }
        let (n1, _) = self.bidegree();
        Ok(UniPoly::new((0..=n1).map(|i| self.coeff(i, 0)).collect()))
    }

    /// The polynomial `p(x + t y, y)`.
    pub fn shear(&self, t: Cplx) -> Self {
        let mut out: BTreeMap<(usize, usize), Cplx> = BTreeMap::new();
        for (&(i, j), &c) in &self.terms {
            // (x + t y)^i = sum_k C(i, k) x^(i-k) t^k y^k
            let mut binom = 1.0;
            for k in 0..=i {
                *out.entry((i - k, j + k)).or_insert(ZERO) += c * binom * t.powu(k as u32);
                binom = binom * (i - k) as f64 / (k + 1) as f64;
            }
        }
        Self::from_terms(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    fn close(a: Cplx, b: Cplx) -> bool {
        (a - b).norm() < 1e-14
    }

    #[test]
    fn eval_examples() {
        let p = BiPoly::monomial(1, 1, ONE);
        assert!(close(p.eval(c(0.5), c(0.5)), c(0.25)));
        let d = BiPoly::from_terms([((2, 0), ONE), ((0, 2), c(-1.0))]);
        let t = Cplx::new(0.3, -0.7);
        assert!(close(d.eval(t, t), ZERO));
        let g = BiPoly::from_terms([((0, 1), ONE), ((2, 0), c(-1.0))]);
        assert!(close(g.eval(c(0.5), c(0.25)), ZERO));
    }

    #[test]
    fn reflect_examples() {
        let p = BiPoly::from_terms([((0, 0), c(2.0)), ((1, 0), c(-1.0))]);
        assert_eq!(
            p.reflect().unwrap(),
            BiPoly::from_terms([((1, 0), c(2.0)), ((0, 0), c(-1.0))])
        );
        assert_eq!(BiPoly::one().reflect().unwrap(), BiPoly::one());
        let p = BiPoly::from_terms([((0, 0), c(4.0)), ((1, 0), c(-1.0)), ((0, 1), c(-1.0))]);
        let want = BiPoly::from_terms([((1, 1), c(4.0)), ((0, 1), c(-1.0)), ((1, 0), c(-1.0))]);
        assert_eq!(p.reflect().unwrap(), want);
        assert_eq!(BiPoly::zero().reflect(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn zero_terms_dropped() {
        let p = BiPoly::z1().sub(&BiPoly::z1());
        assert!(p.is_zero());
        assert_eq!(p.bidegree(), (0, 0));
    }

    #[test]
    fn shear_matches_substitution() {
        let p = BiPoly::from_terms([((2, 1), c(1.5)), ((0, 2), Cplx::new(0.0, 1.0)), ((1, 0), c(-2.0))]);
        let t = Cplx::new(0.4, 0.9);
        let s = p.shear(t);
        let (x, y) = (Cplx::new(0.2, -0.3), Cplx::new(-0.7, 0.1));
        assert!((s.eval(x, y) - p.eval(x + t * y, y)).norm() < 1e-13);
    }
}
