//! The Hardy space `H^2(D^2)` on polynomials, and the strong Pick set
//! certificates built from it.
//!
//! For a polynomial `p` and a rational inner `f`, the inequality
//! `2 Re <f, p g> < ||p g||^2` for every nonzero `g` makes `Z_p` a strong Pick
//! set for `f`. When `f` is a monomial and every monomial of `p` exceeds it in
//! some coordinate, `<f, p g> = 0` for every `g`, which settles the
//! inequality exactly.

use alloc::vec::Vec;

use rand::Rng;

use crate::linalg::ZERO;
use crate::poly::{torus_grid, BiPoly, RationalInner};
use crate::rng::uniform_disk;
use crate::{Cplx, Error, Result};

/// Smallest torus grid accepted by the quadrature routines.
pub const MIN_GRID: usize = 64;
/// Largest bidegree of sampled test functions.
pub const TEST_BIDEGREE: (usize, usize) = (4, 4);

/// `sum a_ij conj(b_ij)`: linear in `f`, conjugate linear in `g`.
pub fn h2_inner(f: &BiPoly, g: &BiPoly) -> Cplx {
    f.terms().map(|((i, j), a)| a * g.coeff(i, j).conj()).sum()
}

pub fn h2_norm_sq(f: &BiPoly) -> f64 {
    f.terms().map(|(_, a)| a.norm_sqr()).sum()
}

/// `(1/n^2) sum f(z) conj(g(z))` over the `n x n` torus grid; exact for
/// polynomials whose bidegrees sum to less than `n` in each variable.
pub fn torus_inner(f: &dyn Fn(Cplx, Cplx) -> Cplx, g: &dyn Fn(Cplx, Cplx) -> Cplx, grid_n: usize) -> Result<Cplx> {
    if grid_n < MIN_GRID {
        return Err(Error::Precondition(
            "torus grid must have at least 64 points per circle",
        ));
    }
    let pts = torus_grid(grid_n);
    let mut sum = ZERO;
    for a in &pts {
        for b in &pts {
            sum += f(*a, *b) * g(*a, *b).conj();
        }
    }
    Ok(sum / (grid_n * grid_n) as f64)
}

/// Torus quadrature of `||p||^2` for a polynomial.
pub fn torus_norm_sq_poly(p: &BiPoly, grid_n: usize) -> Result<f64> {
    let f = |a, b| p.eval(a, b);
    Ok(torus_inner(&f, &f, grid_n)?.re)
}

/// Torus quadrature of `||f||^2` for a rational inner function; the
/// denominator must stay away from zero on the grid.
pub fn torus_norm_sq_inner(f: &RationalInner, grid_n: usize) -> Result<f64> {
    let pts = torus_grid(grid_n.max(1));
    let den = f.denominator();
    let floor = 1e-12 * den.max_coeff();
    for a in &pts {
        for b in &pts {
            let d = den.eval(*a, *b).norm();
            if !(d > floor) {
                return Err(Error::NotStable { min_modulus: d });
            }
        }
    }
    let e = |a, b| f.eval(a, b);
    Ok(torus_inner(&e, &e, grid_n)?.re)
}

/// One sampled `g` in the Hardy space test.
#[derive(Debug, Clone, PartialEq)]
pub struct HsSample {
    /// `2 Re <f, p g>`.
    pub lhs: f64,
    /// `||p g||^2`.
    pub rhs: f64,
    pub passes: bool,
    /// `g = 0`, excluded from the verdict.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HsVerdict {
    /// Every nonzero sample passes; sampling cannot prove the hypothesis.
    Supported,
    Violated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HsReport {
    pub samples: Vec<HsSample>,
    pub verdict: HsVerdict,
}

/// Evaluates `2 Re <f, p g> < ||p g||^2` for each sampled `g`.
pub fn hs_condition_sample(f: &BiPoly, p: &BiPoly, gs: &[BiPoly]) -> Result<HsReport> {
    if f.total_degree() == 0 {
        return Err(Error::Precondition("f must be nonconstant"));
    }
    let samples: Vec<HsSample> = gs
        .iter()
        .map(|g| {
            let pg = p.mul(g);
            let lhs = 2.0 * h2_inner(f, &pg).re;
            let rhs = h2_norm_sq(&pg);
            HsSample {
                lhs,
                rhs,
                passes: lhs < rhs,
                degenerate: g.is_zero(),
            }
        })
        .collect();
    let verdict = if samples.iter().all(|s| s.degenerate || s.passes) {
        HsVerdict::Supported
    } else {
        HsVerdict::Violated
    };
    Ok(HsReport { samples, verdict })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialCertificate {
    Certified,
    /// Exponents of the monomials of `p` that do not exceed `f` in either
    /// coordinate.
    Fail(Vec<(usize, usize)>),
}

/// For `f = c z1^d1 z2^d2`: certified iff every monomial `z1^i z2^j` of `p`
/// has `d1 < i` or `d2 < j`.
pub fn monomial_certificate(f: &BiPoly, p: &BiPoly) -> Result<MonomialCertificate> {
    let (d1, d2) = monomial_exponent(f)?;
    let offending: Vec<(usize, usize)> = p
        .terms()
        .map(|(k, _)| k)
        .filter(|&(i, j)| !(d1 < i || d2 < j))
        .collect();
    Ok(if offending.is_empty() {
        MonomialCertificate::Certified
    } else {
        MonomialCertificate::Fail(offending)
    })
}

fn monomial_exponent(f: &BiPoly) -> Result<(usize, usize)> {
    if !f.is_monomial() {
        return Err(Error::NotMonomial);
    }
    Ok(f.terms().next().map(|(k, _)| k).expect("one term"))
}

/// `|<f, p g>|` for a certified pair; zero by exact coefficient bookkeeping.
pub fn orthogonality_check(f: &BiPoly, p: &BiPoly, g: &BiPoly) -> Result<f64> {
    if monomial_certificate(f, p)? != MonomialCertificate::Certified {
        return Err(Error::Precondition("monomial certificate does not hold"));
    }
    Ok(h2_inner(f, &p.mul(g)).norm())
}

/// A test function with random bidegree up to `max` and coefficients uniform
/// on the unit disk.
pub fn random_test_function<R: Rng + ?Sized>(rng: &mut R, max: (usize, usize)) -> BiPoly {
    let a = rng.gen_range(0..=max.0);
    let b = rng.gen_range(0..=max.1);
    let mut terms = Vec::with_capacity((a + 1) * (b + 1));
    for i in 0..=a {
        for j in 0..=b {
            terms.push(((i, j), uniform_disk(rng, 1.0)));
        }
    }
    BiPoly::from_terms(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ONE;
    use crate::poly::make_rational_inner;
    use crate::rng::{stream, streams};

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    fn bp(terms: &[((usize, usize), f64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|(k, v)| (*k, c(*v))))
    }

    fn z1z2() -> BiPoly {
        bp(&[((1, 1), 1.0)])
    }

    fn hyperbola() -> BiPoly {
        bp(&[((2, 0), 1.0), ((0, 2), -1.0)])
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(h2_inner(&z1z2(), &z1z2()), ONE);
        assert_eq!(h2_inner(&BiPoly::z1(), &BiPoly::z2()), ZERO);
        assert_eq!(h2_inner(&z1z2(), &hyperbola()), ZERO);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(h2_norm_sq(&z1z2()), 1.0);
        assert_eq!(h2_norm_sq(&BiPoly::z1().add(&BiPoly::z2())), 2.0);
        assert_eq!(h2_norm_sq(&bp(&[((2, 0), 2.0), ((0, 1), -1.0)])), 5.0);
    }

    #[test]
    fn torus_norms() {
        assert!((torus_norm_sq_poly(&BiPoly::one(), 64).unwrap() - 1.0).abs() < 1e-12);
        assert!((torus_norm_sq_poly(&z1z2(), 64).unwrap() - 1.0).abs() < 1e-12);
        let f = make_rational_inner(&bp(&[((0, 0), 4.0), ((1, 0), -1.0), ((0, 1), -1.0)])).unwrap();
        assert!((torus_norm_sq_inner(&f, 128).unwrap() - 1.0).abs() < 1e-6);
        assert!(torus_norm_sq_poly(&z1z2(), 32).is_err());
    }

    #[test]
    fn hardy_condition_examples() {
        let r = hs_condition_sample(&z1z2(), &hyperbola(), &[BiPoly::one()]).unwrap();
        assert_eq!((r.samples[0].lhs, r.samples[0].rhs), (0.0, 2.0));
        assert_eq!(r.verdict, HsVerdict::Supported);
        let r = hs_condition_sample(&z1z2(), &hyperbola(), &[BiPoly::zero()]).unwrap();
        assert!(r.samples[0].degenerate && !r.samples[0].passes);
        assert_eq!(r.verdict, HsVerdict::Supported);
        let mut rng = stream(11, streams::TEST_FUNCTIONS);
        let gs: Vec<BiPoly> = (0..100)
            .map(|_| random_test_function(&mut rng, TEST_BIDEGREE))
            .collect();
        let r = hs_condition_sample(&z1z2(), &hyperbola(), &gs).unwrap();
        assert!(r.samples.iter().all(|s| s.lhs == 0.0));
        assert!(hs_condition_sample(&BiPoly::one(), &hyperbola(), &gs).is_err());
    }

    #[test]
    fn certificate_examples() {
        assert_eq!(
            monomial_certificate(&z1z2(), &hyperbola()).unwrap(),
            MonomialCertificate::Certified
        );
        let diag = bp(&[((1, 0), 1.0), ((0, 1), -1.0)]);
        assert_eq!(
            monomial_certificate(&z1z2(), &diag).unwrap(),
            MonomialCertificate::Fail(alloc::vec![(0, 1), (1, 0)])
        );
        assert_eq!(
            monomial_certificate(&BiPoly::one(), &diag).unwrap(),
            MonomialCertificate::Certified
        );
        assert_eq!(monomial_certificate(&diag, &diag), Err(Error::NotMonomial));
    }

    #[test]
    fn orthogonality_examples() {
        let g = bp(&[((1, 0), 1.0), ((0, 3), 1.0)]);
        assert_eq!(orthogonality_check(&z1z2(), &hyperbola(), &g).unwrap(), 0.0);
        assert_eq!(
            orthogonality_check(&z1z2(), &hyperbola(), &BiPoly::zero()).unwrap(),
            0.0
        );
        let f = bp(&[((2, 1), 1.0)]);
        let p = bp(&[((3, 0), 1.0), ((0, 2), 1.0)]);
        let mut rng = stream(3, streams::TEST_FUNCTIONS);
        for _ in 0..20 {
            let g = random_test_function(&mut rng, TEST_BIDEGREE);
            assert_eq!(orthogonality_check(&f, &p, &g).unwrap(), 0.0);
        }
    }
}
