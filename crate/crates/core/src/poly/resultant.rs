use alloc::vec::Vec;

use crate::linalg::{determinant, CMatrix};
use crate::{Cplx, Error, Result};

use super::bi::BiPoly;
use super::uni::UniPoly;

/// Interpolation nodes lie on the circle of this radius.
const RADIUS: f64 = 1.1;
/// Relative size below which every sampled determinant counts as zero.
const ZERO_RESULTANT: f64 = 1e-11;
/// Relative size below which a top coefficient is trimmed.
const TRIM: f64 = 1e-9;

/// The variable removed by elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    Z1,
    Z2,
}

/// Sylvester resultant of `p` and `q` with respect to `eliminate`, as a
/// polynomial in the other variable.
///
/// Uses the convention `Res(a, b) = lead(a)^deg(b) * prod b(roots of a)` with
/// the formal degrees of `p` and `q` in the eliminated variable. The result is
/// recovered from determinants at scaled roots of unity by an inverse DFT; an
/// identically vanishing resultant is returned as the zero polynomial.
pub fn sylvester_resultant(p: &BiPoly, q: &BiPoly, eliminate: Variable) -> Result<UniPoly> {
    match eliminate {
        Variable::Z2 => resultant_in_z2(p, q),
        Variable::Z1 => resultant_in_z2(&p.swap_vars(), &q.swap_vars()),
    }
}

fn resultant_in_z2(p: &BiPoly, q: &BiPoly) -> Result<UniPoly> {
    let ((px, m), (qx, n)) = (p.bidegree(), q.bidegree());
    if p.is_zero() || q.is_zero() || m == 0 || n == 0 {
        return Err(Error::DegenerateElimination);
    }
    let bound = (m * qx + n * px).min(p.total_degree() * q.total_degree());
    let count = bound + 2;
    let step = core::f64::consts::TAU / count as f64;

    let mut values = Vec::with_capacity(count);
    let mut hadamard: f64 = 0.0;
    for k in 0..count {
        let x = Cplx::from_polar(RADIUS, step * k as f64);
        let syl = sylvester_matrix(&p.in_z2_at(x), &q.in_z2_at(x));
        let rows = syl.to_rows();
        let h: f64 = rows
            .iter()
            .map(|r| r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
            .product();
        hadamard = hadamard.max(h);
        values.push(determinant(&syl)?);
    }
    let vmax = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if vmax <= ZERO_RESULTANT * hadamard {
        return Ok(UniPoly::zero());
    }

    let mut coeffs: Vec<Cplx> = (0..=bound)
        .map(|j| {
            let sum: Cplx = values
                .iter()
                .enumerate()
                .map(|(k, v)| v * Cplx::from_polar(1.0, -step * (j * k) as f64))
                .sum();
            sum / (count as f64 * RADIUS.powi(j as i32))
        })
        .collect();
    while coeffs
        .last()
        .is_some_and(|c| c.norm() * RADIUS.powi(coeffs.len() as i32 - 1) <= TRIM * vmax)
    {
        coeffs.pop();
    }
    Ok(UniPoly::new(coeffs))
}

/// Sylvester matrix of `a` (degree `m`) and `b` (degree `n`), coefficients
/// ascending; rows hold coefficients highest power first.
fn sylvester_matrix(a: &[Cplx], b: &[Cplx]) -> CMatrix {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let mut s = CMatrix::zeros(size, size);
    for r in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            s[(r, r + k)] = *c;
        }
    }
    for r in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            s[(n + r, r + k)] = *c;
        }
    }
    s
}

/// True when `p` and `q` share no non-constant factor.
///
/// A common factor has positive degree in some variable, and then both
/// polynomials have positive degree there and their resultant in that
/// variable vanishes identically. Variables in which either polynomial is
/// constant are skipped.
pub fn coprime(p: &BiPoly, q: &BiPoly) -> bool {
    if p.is_zero() || q.is_zero() {
        let other = if p.is_zero() { q } else { p };
        return !other.is_zero() && other.total_degree() == 0;
    }
    let (pd, qd) = (p.bidegree(), q.bidegree());
    let checks = [
        (pd.1 > 0 && qd.1 > 0, Variable::Z2),
        (pd.0 > 0 && qd.0 > 0, Variable::Z1),
    ];
    checks
        .iter()
        .filter(|(both, _)| *both)
        .all(|(_, v)| sylvester_resultant(p, q, *v).is_ok_and(|r| !r.is_zero()))
}
