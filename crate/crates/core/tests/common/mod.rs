#![allow(dead_code)]

use pickset_core::linalg::ONE;
use pickset_core::poly::{make_rational_inner, BiPoly, Blaschke, RationalInner};
use pickset_core::rng::{stream, uniform_disk, PickRng};
use pickset_core::{Cplx, HermitianMatrix};
use rand::Rng;

pub fn rng(seed: u64) -> PickRng {
    stream(seed, 1000)
}

pub fn c(re: f64) -> Cplx {
    Cplx::new(re, 0.0)
}

pub fn random_hermitian(rng: &mut PickRng, n: usize) -> HermitianMatrix {
    let m: Vec<Vec<Cplx>> = (0..n)
        .map(|_| (0..n).map(|_| uniform_disk(rng, 1.0)).collect())
        .collect();
    HermitianMatrix::from_fn(n, |i, j| 0.5 * (m[i][j] + m[j][i].conj())).unwrap()
}

/// Sum of `rank` random rank-one terms.
pub fn random_psd(rng: &mut PickRng, n: usize, rank: usize) -> HermitianMatrix {
    let mut h = HermitianMatrix::zeros(n);
    for _ in 0..rank {
        let v: Vec<Cplx> = (0..n).map(|_| uniform_disk(rng, 1.0)).collect();
        h = h.add(&HermitianMatrix::outer(&v).unwrap()).unwrap();
    }
    h
}

pub fn random_blaschke(rng: &mut PickRng, degree: usize) -> Blaschke {
    let zeros = (0..degree).map(|_| uniform_disk(rng, 0.8)).collect();
    let u = Cplx::from_polar(1.0, std::f64::consts::TAU * rng.gen::<f64>());
    Blaschke::new(u, zeros).unwrap()
}

/// A polynomial of exact bidegree `d` with `|p(0,0)|` above the sum of the
/// other coefficients, hence without zeros on the closed bidisk.
pub fn random_stable(rng: &mut PickRng, d: (usize, usize)) -> BiPoly {
    let mut terms = Vec::new();
    let mut sum = 0.0;
    for i in 0..=d.0 {
        for j in 0..=d.1 {
            if (i, j) != (0, 0) {
                let mut v = uniform_disk(rng, 1.0);
                if (i, j) == d && v.norm() < 0.1 {
                    v = Cplx::new(0.5, 0.0);
                }
                sum += v.norm();
                terms.push(((i, j), v));
            }
        }
    }
    terms.push(((0, 0), c(sum * (1.05 + rng.gen::<f64>()))));
    BiPoly::from_terms(terms)
}

pub fn random_inner(rng: &mut PickRng, d: (usize, usize)) -> RationalInner {
    make_rational_inner(&random_stable(rng, d)).unwrap()
}

/// Dense polynomial with every monomial up to bidegree `d`.
pub fn random_dense(rng: &mut PickRng, d: (usize, usize)) -> BiPoly {
    let mut terms = Vec::new();
    for i in 0..=d.0 {
        for j in 0..=d.1 {
            terms.push(((i, j), uniform_disk(rng, 1.0) + 0.1 * ONE));
        }
    }
    BiPoly::from_terms(terms)
}
