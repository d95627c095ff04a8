use alloc::vec::Vec;

use crate::linalg::ONE;
use crate::{Cplx, Error, Result};

use super::bi::BiPoly;
use super::uni::UniPoly;

/// A finite Blaschke product `u * prod (z - a_k) / (1 - conj(a_k) z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Blaschke {
    unimodular: Cplx,
    zeros: Vec<Cplx>,
}

impl Blaschke {
    /// `|unimodular|` must be 1 within `1e-12` and every zero strictly inside
    /// the unit disk.
    pub fn new(unimodular: Cplx, zeros: Vec<Cplx>) -> Result<Self> {
        let m = unimodular.norm();
        if !m.is_finite() || (m - 1.0).abs() > 1e-12 {
            return Err(Error::Precondition("Blaschke constant must be unimodular"));
        }
        if zeros.iter().any(|a| !(a.norm() < 1.0)) {
            return Err(Error::Precondition("Blaschke zeros must lie in the open unit disk"));
        }
        Ok(Blaschke {
            unimodular: unimodular / m,
            zeros,
        })
    }

    pub fn identity() -> Self {
        Blaschke {
            unimodular: ONE,
            zeros: alloc::vec![Cplx::new(0.0, 0.0)],
        }
    }

    pub fn unimodular(&self) -> Cplx {
        self.unimodular
    }

    pub fn zeros(&self) -> &[Cplx] {
        &self.zeros
    }

    pub fn degree(&self) -> usize {
        self.zeros.len()
    }

    pub fn eval(&self, z: Cplx) -> Cplx {
        blaschke_eval(self, z)
    }
}

pub fn blaschke_eval(m: &Blaschke, z: Cplx) -> Cplx {
    m.zeros
        .iter()
        .fold(m.unimodular, |acc, a| acc * (z - a) / (ONE - a.conj() * z))
}

/// `(q, r)` with `m = q / r`: `q = u * prod (z - a_k)`, `r = prod (1 - conj(a_k) z)`.
pub fn blaschke_to_fraction(m: &Blaschke) -> (UniPoly, UniPoly) {
    let q = UniPoly::from_roots(&m.zeros).scale(m.unimodular);
    let r = m.zeros.iter().fold(UniPoly::constant(ONE), |acc, a| {
        acc.mul(&UniPoly::new(alloc::vec![ONE, -a.conj()]))
    });
    (q, r)
}

/// `z2 r(z1) - q(z1)`, whose zero set is the graph of `m`.
pub fn graph_poly(m: &Blaschke) -> BiPoly {
    let (q, r) = blaschke_to_fraction(m);
    BiPoly::from_z1(&r).mul(&BiPoly::z2()).sub(&BiPoly::from_z1(&q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ZERO;

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Blaschke::identity().eval(c(0.5)), c(0.5));
        let sq = Blaschke::new(ONE, alloc::vec![ZERO, ZERO]).unwrap();
        let z = Cplx::new(0.3, 0.4);
        assert!((sq.eval(z) - z * z).norm() < 1e-15);
        let m = Blaschke::new(Cplx::new(0.0, 1.0), alloc::vec![c(0.5), Cplx::new(-0.2, 0.6)]).unwrap();
        assert_eq!(m.eval(Cplx::new(-0.2, 0.6)).norm(), 0.0);
        let on_circle = Cplx::from_polar(1.0, 2.0);
        assert!((m.eval(on_circle).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fraction_examples() {
        let (q, r) = blaschke_to_fraction(&Blaschke::new(ONE, alloc::vec![ZERO, ZERO]).unwrap());
        assert_eq!(q.coeffs(), &[ZERO, ZERO, ONE]);
        assert_eq!(r.coeffs(), &[ONE]);
        let (q, r) = blaschke_to_fraction(&Blaschke::new(ONE, alloc::vec![c(0.5)]).unwrap());
        assert_eq!(q.coeffs(), &[c(-0.5), ONE]);
        assert_eq!(r.coeffs(), &[ONE, c(-0.5)]);
        let k = Cplx::new(0.6, 0.8);
        let (q, r) = blaschke_to_fraction(&Blaschke::new(k, alloc::vec![]).unwrap());
        assert_eq!((q.coeffs(), r.coeffs()), (&[k][..], &[ONE][..]));
    }

    #[test]
    fn graph_examples() {
        let g = graph_poly(&Blaschke::new(ONE, alloc::vec![ZERO, ZERO]).unwrap());
        assert_eq!(g, BiPoly::from_terms([((0, 1), ONE), ((2, 0), c(-1.0))]));
        assert_eq!(
            graph_poly(&Blaschke::identity()),
            BiPoly::from_terms([((0, 1), ONE), ((1, 0), c(-1.0))])
        );
        let g = graph_poly(&Blaschke::new(ONE, alloc::vec![c(0.5)]).unwrap());
        let want = BiPoly::from_terms([((0, 1), ONE), ((1, 1), c(-0.5)), ((1, 0), c(-1.0)), ((0, 0), c(0.5))]);
        assert_eq!(g, want);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Blaschke::new(c(2.0), alloc::vec![]).is_err());
        assert!(Blaschke::new(ONE, alloc::vec![c(1.0)]).is_err());
    }
}
