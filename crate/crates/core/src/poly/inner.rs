use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::roots::find_roots;
use crate::{Cplx, Error, Result, Tolerances};

use super::bi::BiPoly;
use super::blaschke::{blaschke_to_fraction, Blaschke};
use super::resultant::coprime;
use super::uni::UniPoly;

/// Points per circle of the torus grid used to certify inner functions.
pub const TORUS_GRID: usize = 128;
/// Points per coordinate of the interior grid of the closed bidisk.
pub const INNER_GRID: usize = 64;

const STABILITY_FLOOR: f64 = 1e-6;
const MODULUS_TOL: f64 = 1e-6;
const INTERIOR_RADIUS: f64 = 0.999;

/// `n` equally spaced points `exp(2 pi i k / n)` on the unit circle.
pub fn torus_grid(n: usize) -> Vec<Cplx> {
    (0..n)
        .map(|k| Cplx::from_polar(1.0, core::f64::consts::TAU * k as f64 / n as f64))
        .collect()
}

/// `INNER_GRID` points of the closed disk of radius 0.999: 8 radii from 0 to
/// 0.999 times 8 angles.
fn interior_grid() -> Vec<Cplx> {
    let side = 8;
    let mut pts = Vec::with_capacity(INNER_GRID);
    for r in 0..side {
        let radius = INTERIOR_RADIUS * r as f64 / (side - 1) as f64;
        for a in 0..side {
            let theta = core::f64::consts::TAU * (a as f64 + 0.5) / side as f64;
            pts.push(Cplx::from_polar(radius, theta));
        }
    }
    pts
}

/// Smallest `|z2|` among zeros of `p(z1, .)` for `z1` in `pts`, or infinity
/// when every slice is a nonzero constant.
fn min_slice_root(p: &BiPoly, pts: &[Cplx]) -> Result<f64> {
    let tol = Tolerances::default();
    let mut best = f64::INFINITY;
    for z1 in pts {
        let slice = UniPoly::new(p.in_z2_at(*z1));
        match slice.degree() {
            None => return Ok(0.0),
            Some(0) => {}
            Some(_) => {
                let r = find_roots(slice.coeffs(), &tol)?;
                best = r.iter().map(|z| z.norm()).fold(best, f64::min);
            }
        }
    }
    Ok(best)
}

fn min_modulus(p: &BiPoly, pts: &[Cplx]) -> f64 {
    pts.iter()
        .flat_map(|a| pts.iter().map(move |b| (a, b)))
        .map(|(a, b)| p.eval(*a, *b).norm())
        .fold(f64::INFINITY, f64::min)
}

/// A rational inner function `numerator / denominator` on the bidisk.
///
/// Construction checks, numerically: the denominator does not vanish on the
/// bidisk of radius 0.999 (grid values plus slice roots), numerator and denominator are coprime, and `|f| = 1` within
/// `1e-6` on the `128 x 128` torus grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalInner {
    numerator: BiPoly,
    denominator: BiPoly,
}

impl RationalInner {
    pub fn new(numerator: BiPoly, denominator: BiPoly) -> Result<Self> {
        if numerator.is_zero() || denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let floor = STABILITY_FLOOR * denominator.max_coeff();
        let grid = interior_grid();
        let interior = min_modulus(&denominator, &grid);
        if !(interior > floor) || min_slice_root(&denominator, &grid)? <= INTERIOR_RADIUS {
            return Err(Error::NotStable { min_modulus: interior });
        }
        if !coprime(&numerator, &denominator) {
            return Err(Error::CommonFactor);
        }
        let f = RationalInner { numerator, denominator };
        if !(f.max_torus_deviation() <= MODULUS_TOL) {
            return Err(Error::NotInner("modulus on the torus differs from 1"));
        }
        Ok(f)
    }

    /// The one-variable inner function `m(z1)`.
    pub fn from_blaschke(m: &Blaschke) -> Result<Self> {
        let (q, r) = blaschke_to_fraction(m);
        Self::new(BiPoly::from_z1(&q), BiPoly::from_z1(&r))
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &BiPoly {
        &self.denominator
    }

    /// Bidegree of the numerator.
    pub fn bidegree(&self) -> (usize, usize) {
        self.numerator.bidegree()
    }

    pub fn eval(&self, z1: Cplx, z2: Cplx) -> Cplx {
        self.numerator.eval(z1, z2) / self.denominator.eval(z1, z2)
    }

    pub fn depends_only_on_z1(&self) -> bool {
        self.numerator.depends_only_on_z1() && self.denominator.depends_only_on_z1()
    }

    /// `max ||f| - 1|` over the torus grid.
    pub fn max_torus_deviation(&self) -> f64 {
        let grid = torus_grid(TORUS_GRID);
        grid.iter()
            .flat_map(|a| grid.iter().map(move |b| (a, b)))
            .map(|(a, b)| (self.eval(*a, *b).norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// `max |f|` over the interior grid.
    pub fn max_interior_modulus(&self) -> f64 {
        let grid = interior_grid();
        grid.iter()
            .flat_map(|a| grid.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.eval(*a, *b).norm())
            .fold(0.0, f64::max)
    }

    /// Minimum of `|denominator|` over the closed bidisk grid (torus and
    /// interior), relative to its largest coefficient.
    pub fn denominator_margin(&self) -> f64 {
        let torus = torus_grid(TORUS_GRID);
        let m = min_modulus(&self.denominator, &torus).min(min_modulus(&self.denominator, &interior_grid()));
        m / self.denominator.max_coeff()
    }
}

/// `reflect(p) / p` for a polynomial `p` with no zeros on the closed bidisk.
///
/// Stability is checked on the torus grid and the interior grid: `|p| > 1e-6`
/// at every grid pair, and for every grid value of `z1` all zeros of
/// `p(z1, .)` lie outside the closed unit disk.
pub fn make_rational_inner(p: &BiPoly) -> Result<RationalInner> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut grid = torus_grid(TORUS_GRID);
    grid.extend(interior_grid());
    let m = min_modulus(p, &grid);
    if !(m > STABILITY_FLOOR) || min_slice_root(p, &grid)? <= 1.0 {
        return Err(Error::NotStable { min_modulus: m });
    }
    RationalInner::new(p.reflect()?, p.clone())
}
