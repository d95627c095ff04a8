//! Nevanlinna-Pick interpolation on the unit disk.
//!
//! A problem `{l_i -> w_i}` is solvable iff its Pick matrix
//! `((1 - conj(w_i) w_j) / (1 - conj(l_i) l_j))` is positive semidefinite,
//! the solution is unique iff the matrix is singular, and the unique solution
//! is a Blaschke product whose degree is the rank.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{herm_eigen, null_vector, numeric_rank, psd_status, PsdStatus, ONE};
use crate::poly::{Blaschke, UniPoly};
use crate::roots::find_roots;
use crate::{Cplx, Error, HermitianMatrix, Result, Tolerances};

/// Minimum pairwise distance between nodes.
pub const NODE_SEPARATION: f64 = 1e-8;
/// Residual accepted for a constructed interpolant.
pub const INTERPOLATION_TOL: f64 = 1e-8;
/// Targets this close to the unit circle are treated as unimodular.
const UNIMODULAR_TOL: f64 = 1e-12;
const SCHUR_RETRIES: usize = 5;

/// Nodes in the open unit disk with targets in the closed unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct PickProblem1D {
    nodes: Vec<Cplx>,
    targets: Vec<Cplx>,
}

impl PickProblem1D {
    pub fn new(nodes: Vec<Cplx>, targets: Vec<Cplx>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidProblem("at least one node is required"));
        }
        if nodes.len() != targets.len() {
            return Err(Error::DimensionMismatch {
                expected: nodes.len(),
                found: targets.len(),
            });
        }
        let finite = |z: &Cplx| z.re.is_finite() && z.im.is_finite();
        if !nodes.iter().chain(&targets).all(finite) {
            return Err(Error::InvalidProblem("nodes and targets must be finite"));
        }
        if nodes.iter().any(|z| !(z.norm() < 1.0)) {
            return Err(Error::InvalidProblem("nodes must lie in the open unit disk"));
        }
        if targets.iter().any(|w| w.norm() > 1.0 + UNIMODULAR_TOL) {
            return Err(Error::InvalidProblem("targets must lie in the closed unit disk"));
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                if (nodes[i] - nodes[j]).norm() <= NODE_SEPARATION {
                    return Err(Error::InvalidProblem("nodes must be pairwise distinct"));
                }
            }
        }
        Ok(PickProblem1D { nodes, targets })
    }

    pub fn nodes(&self) -> &[Cplx] {
        &self.nodes
    }

    pub fn targets(&self) -> &[Cplx] {
        &self.targets
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The common target when every target is the same unimodular constant.
    fn constant_unimodular(&self) -> Option<Cplx> {
        let w0 = self.targets[0];
        let unimodular = (w0.norm() - 1.0).abs() <= UNIMODULAR_TOL;
        let all_same = self.targets.iter().all(|w| (w - w0).norm() <= UNIMODULAR_TOL);
        (unimodular && all_same).then_some(w0 / w0.norm())
    }

    fn has_unimodular_target(&self) -> bool {
        self.targets.iter().any(|w| (w.norm() - 1.0).abs() <= UNIMODULAR_TOL)
    }
}

pub fn pick_matrix(prob: &PickProblem1D) -> HermitianMatrix {
    let (l, w) = (&prob.nodes, &prob.targets);
    HermitianMatrix::from_fn(prob.len(), |i, j| {
        (ONE - w[i].conj() * w[j]) / (ONE - l[i].conj() * l[j])
    })
    .expect("pick matrix entries are finite for nodes in the open disk")
}

pub fn solvable(prob: &PickProblem1D, tol: &Tolerances) -> Result<bool> {
    Ok(psd_status(&pick_matrix(prob), tol)?.is_psd())
}

pub fn unique(prob: &PickProblem1D, tol: &Tolerances) -> Result<bool> {
    match psd_status(&pick_matrix(prob), tol)?.status {
        PsdStatus::Indefinite => Err(Error::Unsolvable),
        status => Ok(status == PsdStatus::PsdSingular),
    }
}

/// `max |m(l_i) - w_i|`.
pub fn interpolation_residual(m: &Blaschke, prob: &PickProblem1D) -> f64 {
    prob.nodes
        .iter()
        .zip(&prob.targets)
        .map(|(l, w)| (m.eval(*l) - w).norm())
        .fold(0.0, f64::max)
}

/// The unique solution of a problem with singular PSD Pick matrix.
///
/// For a null vector `g` of the Pick matrix, the solution is
/// `f(z) = sum conj(g_j) / (1 - conj(l_j) z)` divided by
/// `sum conj(w_j g_j) / (1 - conj(l_j) z)`. After clearing denominators the
/// numerator and denominator may share factors; the Blaschke zeros are the
/// `rank(P)` numerator roots in the disk where the denominator is largest.
pub fn solve_singular(prob: &PickProblem1D, tol: &Tolerances) -> Result<Blaschke> {
    if let Some(c) = prob.constant_unimodular() {
        return Blaschke::new(c, Vec::new());
    }
    if prob.has_unimodular_target() {
        return Err(Error::Unsolvable);
    }
    let p = pick_matrix(prob);
    let gamma = null_vector(&p, tol)?;
    let rank = numeric_rank(&p, tol)?;
    let n = prob.len();

    // cleared forms: sum_j c_j prod_{k != j} (1 - conj(l_k) z)
    let cleared = |weights: &dyn Fn(usize) -> Cplx| -> UniPoly {
        (0..n).fold(UniPoly::zero(), |acc, j| {
            let others = (0..n).filter(|&k| k != j).fold(UniPoly::constant(ONE), |f, k| {
                f.mul(&UniPoly::new(vec![ONE, -prob.nodes[k].conj()]))
            });
            acc.add(&others.scale(weights(j)))
        })
    };
    let num = cleared(&|j| gamma[j].conj());
    let den = cleared(&|j| (prob.targets[j] * gamma[j]).conj());

    let zeros = if rank == 0 {
        Vec::new()
    } else {
        let roots = match num.degree() {
            Some(d) if d >= 1 => find_roots(num.coeffs(), tol)?,
            _ => Vec::new(),
        };
        let mut scored: Vec<(f64, Cplx)> = roots
            .into_iter()
            .filter(|a| a.norm() < 1.0)
            .map(|a| (den.eval(a).norm() / den.coeff_scale().max(f64::MIN_POSITIVE), a))
            .collect();
        scored.sort_by(|x, y| y.0.total_cmp(&x.0));
        if scored.len() < rank || scored[rank - 1].0 <= 1e-8 {
            return Err(Error::DegreeMismatch {
                expected: rank,
                found: scored.iter().filter(|s| s.0 > 1e-8).count(),
            });
        }
        scored.truncate(rank);
        scored.into_iter().map(|(_, a)| a).collect()
    };
    let m = with_fitted_constant(zeros, &num, &den)?;
    check_residual(m, prob)
}

/// Solves a problem with positive definite Pick matrix by the Schur
/// algorithm, returning a Blaschke product of degree exactly `N`.
///
/// Each step peels one node: `f = (b f1 + w1) / (1 + conj(w1) b f1)` with
/// `b` the disk automorphism vanishing at `l1`. The innermost function is a
/// unimodular constant; if the result does not have `N` zeros in the disk the
/// constant is rotated by multiples of `pi/3` up to five times.
pub fn solve_schur(prob: &PickProblem1D, tol: &Tolerances) -> Result<Blaschke> {
    let def = psd_status(&pick_matrix(prob), tol)?;
    if def.status != PsdStatus::PositiveDefinite {
        return Err(Error::Precondition(
            "Schur algorithm needs a positive definite Pick matrix",
        ));
    }
    let steps = schur_parameters(prob)?;
    let n = prob.len();
    let mut last = Error::InternalCheck("Schur recursion produced no candidate");
    for attempt in 0..=SCHUR_RETRIES {
        let tau = Cplx::from_polar(1.0, core::f64::consts::PI * attempt as f64 / 3.0);
        let (num, den) = unwind(&steps, tau);
        let roots = find_roots(num.coeffs(), tol)?;
        let inside: Vec<Cplx> = roots.iter().copied().filter(|a| a.norm() < 1.0).collect();
        if num.degree() != Some(n) || inside.len() != n {
            last = Error::DegreeMismatch {
                expected: n,
                found: inside.len(),
            };
            continue;
        }
        let m = with_fitted_constant(inside, &num, &den)?;
        match check_residual(m, prob) {
            Ok(m) => return Ok(m),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// `(l_k, w_k)` pairs of the successive peeled problems.
fn schur_parameters(prob: &PickProblem1D) -> Result<Vec<(Cplx, Cplx)>> {
    let mut nodes = prob.nodes.clone();
    let mut vals = prob.targets.clone();
    let mut steps = Vec::with_capacity(nodes.len());
    while !nodes.is_empty() {
        let (l1, w1) = (nodes[0], vals[0]);
        if !(w1.norm() < 1.0) {
            return Err(Error::Unsolvable);
        }
        steps.push((l1, w1));
        let mut next_nodes = Vec::with_capacity(nodes.len() - 1);
        let mut next_vals = Vec::with_capacity(nodes.len() - 1);
        for (l, w) in nodes.iter().zip(&vals).skip(1) {
            let b = (l - l1) / (ONE - l1.conj() * l);
            let m = (w - w1) / (ONE - w1.conj() * w);
            next_nodes.push(*l);
            next_vals.push(m / b);
        }
        nodes = next_nodes;
        vals = next_vals;
    }
    Ok(steps)
}

/// Builds `num / den` from the innermost constant outward.
fn unwind(steps: &[(Cplx, Cplx)], tau: Cplx) -> (UniPoly, UniPoly) {
    let mut a = UniPoly::constant(tau);
    let mut b = UniPoly::constant(ONE);
    for &(l, w) in steps.iter().rev() {
        let zl = UniPoly::linear(l);
        let one_minus = UniPoly::new(vec![ONE, -l.conj()]);
        let za = zl.mul(&a);
        let na = za.add(&one_minus.mul(&b).scale(w));
        let nb = one_minus.mul(&b).add(&za.scale(w.conj()));
        a = na;
        b = nb;
    }
    (a, b)
}

/// Blaschke product with the given zeros and the constant of `num / den`,
/// read off on the unit circle where `|den|` is largest among a few samples.
fn with_fitted_constant(zeros: Vec<Cplx>, num: &UniPoly, den: &UniPoly) -> Result<Blaschke> {
    let base = Blaschke::new(ONE, zeros)?;
    let z = (0..8)
        .map(|k| Cplx::from_polar(1.0, core::f64::consts::TAU * (k as f64 + 0.3) / 8.0))
        .max_by(|a, b| den.eval(*a).norm().total_cmp(&den.eval(*b).norm()))
        .expect("nonempty sample set");
    let u = num.eval(z) / den.eval(z) / base.eval(z);
    if !(u.norm() > 0.0 && u.norm().is_finite()) {
        return Err(Error::InterpolationFailed {
            residual: f64::INFINITY,
        });
    }
    Blaschke::new(u / u.norm(), base.zeros().to_vec())
}

fn check_residual(m: Blaschke, prob: &PickProblem1D) -> Result<Blaschke> {
    let residual = interpolation_residual(&m, prob);
    if residual <= INTERPOLATION_TOL {
        Ok(m)
    } else {
        Err(Error::InterpolationFailed { residual })
    }
}

/// A Blaschke product `m` with `m(nodes1[i]) = nodes2[i]` whose degree is the
/// rank of the Pick matrix: the singular case gives the unique solution, the
/// definite case the Schur solution of degree `N`.
pub fn interpolate_blaschke(nodes1: &[Cplx], nodes2: &[Cplx], tol: &Tolerances) -> Result<Blaschke> {
    let prob = PickProblem1D::new(nodes1.to_vec(), nodes2.to_vec())?;
    let p = pick_matrix(&prob);
    match psd_status(&p, tol)?.status {
        PsdStatus::Indefinite => Err(Error::Unsolvable),
        PsdStatus::PsdSingular => solve_singular(&prob, tol),
        PsdStatus::PositiveDefinite => solve_schur(&prob, tol),
    }
}

/// Smallest eigenvalue of the Pick matrix.
pub fn pick_lambda_min(prob: &PickProblem1D) -> Result<f64> {
    Ok(herm_eigen(&pick_matrix(prob))?.values[0])
}
