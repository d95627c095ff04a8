use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::ZERO;
use crate::{Cplx, Error, Result};

use super::bi::{BiPoly, COEFF_FLOOR};

/// Homogeneous polynomial in `X, Y, Z`, keyed by exponent triples `(a, b, c)`
/// with `a + b + c = degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoly {
    terms: BTreeMap<(usize, usize, usize), Cplx>,
    degree: usize,
}

impl ProjPoly {
    pub fn new(degree: usize, terms: impl IntoIterator<Item = ((usize, usize, usize), Cplx)>) -> Result<Self> {
        let mut map: BTreeMap<(usize, usize, usize), Cplx> = BTreeMap::new();
        for ((a, b, c), v) in terms {
            if a + b + c != degree {
                return Err(Error::Precondition("projective terms must share one total degree"));
            }
            *map.entry((a, b, c)).or_insert(ZERO) += v;
        }
        map.retain(|_, v| v.norm() >= COEFF_FLOOR);
        Ok(ProjPoly { terms: map, degree })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), Cplx)> + '_ {
        self.terms.iter().map(|(k, v)| (*k, *v))
    }

    pub fn eval(&self, x: Cplx, y: Cplx, z: Cplx) -> Cplx {
        self.terms
            .iter()
            .map(|(&(a, b, c), v)| v * x.powu(a as u32) * y.powu(b as u32) * z.powu(c as u32))
            .sum()
    }

    /// `P(x, y, 1)`.
    pub fn dehomogenize(&self) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|((a, b, _), v)| ((a, b), v)))
    }

    /// Coefficients of the binary form `P(X, Y, 0)`, indexed by the power of
    /// `X`; its zeros are the points of the curve on the line at infinity.
    pub fn at_infinity_form(&self) -> Vec<Cplx> {
        let mut out = vec![ZERO; self.degree + 1];
        for (&(a, _, c), v) in &self.terms {
            if c == 0 {
                out[a] += v;
            }
        }
        out
    }
}

/// `z^n p(x/z, y/z)` with `n` the total degree of `p`.
pub fn homogenize(p: &BiPoly) -> Result<ProjPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.total_degree();
    ProjPoly::new(n, p.terms().map(|((i, j), v)| ((i, j, n - i - j), v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    #[test]
    fn homogenize_examples() {
        let p = BiPoly::from_terms([((1, 0), c(1.0)), ((0, 1), c(-1.0))]);
        let h = homogenize(&p).unwrap();
        assert_eq!(
            h,
            ProjPoly::new(1, [((1, 0, 0), c(1.0)), ((0, 1, 0), c(-1.0))]).unwrap()
        );

        let p = BiPoly::from_terms([((2, 0), c(1.0)), ((0, 2), c(1.0)), ((0, 0), c(-1.0))]);
        let want = ProjPoly::new(2, [((2, 0, 0), c(1.0)), ((0, 2, 0), c(1.0)), ((0, 0, 2), c(-1.0))]);
        assert_eq!(homogenize(&p).unwrap(), want.unwrap());

        let p = BiPoly::from_terms([((1, 1), c(1.0)), ((1, 0), c(-1.0)), ((0, 0), c(1.0))]);
        let want = ProjPoly::new(2, [((1, 1, 0), c(1.0)), ((1, 0, 1), c(-1.0)), ((0, 0, 2), c(1.0))]);
        let h = homogenize(&p).unwrap();
        assert_eq!(h, want.unwrap());
        assert_eq!(h.dehomogenize(), p);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(homogenize(&BiPoly::zero()), Err(Error::ZeroPolynomial));
    }
}
