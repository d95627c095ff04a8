//! Pick interpolation on the bidisk.
//!
//! A problem `{(l_i^1, l_i^2) -> w_i}` is solvable iff there are positive
//! semidefinite `G`, `D` with `W = G o L1 + D o L2`, where
//! `W = (1 - conj(w_i) w_j)`, `Lk = (1 - conj(l_i^k) l_j^k)` and `o` is the
//! entrywise product. Equivalently `W o K >= 0` for every admissible kernel
//! `K` (positive definite, with `L1 o K >= 0` and `L2 o K >= 0`).
//!
//! Solvability is certified in one direction by an explicit pair found with
//! Dykstra's alternating projections, and in the other by an admissible
//! kernel from a finite library with `W o K` indefinite. Anything else is
//! reported as undecided.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{
    cholesky_succeeds, complex_null_space, herm_eigen, herm_eigen_from, null_vector, numeric_rank, psd_status,
    schur_product, vec_norm, CMatrix, Definiteness, PsdStatus, ONE,
};
use crate::poly::Blaschke;
use crate::{Cplx, Error, HermitianMatrix, Result, Tolerances};

/// Minimum distance between nodes in `C^2`.
pub const NODE_SEPARATION: f64 = 1e-8;
/// Default Dykstra iteration budget.
pub const DEFAULT_BUDGET: usize = 200_000;
/// Default target shrink factor for the extremality test.
pub const DEFAULT_EPSILON: f64 = 1e-2;
/// Shrink factors of the refined extremality test, coarsest first.
pub const REFINED_EPSILONS: [f64; 3] = [1e-1, 1e-2, 1e-3];
/// A hint applies when every node satisfies `|m(l^1) - l^2| <= HINT_TOL`.
pub const HINT_TOL: f64 = 1e-8;
/// Both halves of a pair must exceed this Frobenius norm to flag non-uniqueness.
pub const NONZERO_PAIR: f64 = 1e-8;
/// How often Dykstra checks the affine iterate for positivity.
const CHECK_EVERY: usize = 8;
/// How often the warm-start eigenbases are reset to the identity.
const REBASE_EVERY: usize = 1024;

/// A Pick problem on the bidisk.
#[derive(Debug, Clone, PartialEq)]
pub struct PickProblem2D {
    nodes: Vec<(Cplx, Cplx)>,
    targets: Vec<Cplx>,
}

impl PickProblem2D {
    pub fn new(nodes: Vec<(Cplx, Cplx)>, targets: Vec<Cplx>) -> Result<Self> {
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
        if !nodes.iter().flat_map(|(a, b)| [a, b]).chain(&targets).all(finite) {
            return Err(Error::InvalidProblem("nodes and targets must be finite"));
        }
        if nodes.iter().any(|(a, b)| !(a.norm() < 1.0 && b.norm() < 1.0)) {
            return Err(Error::InvalidProblem("nodes must lie in the open bidisk"));
        }
        if targets.iter().any(|w| w.norm() > 1.0 + 1e-12) {
            return Err(Error::InvalidProblem("targets must lie in the closed unit disk"));
        }
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let d = ((nodes[i].0 - nodes[j].0).norm_sqr() + (nodes[i].1 - nodes[j].1).norm_sqr()).sqrt();
                if d <= NODE_SEPARATION {
                    return Err(Error::InvalidProblem("nodes must be pairwise distinct"));
                }
            }
        }
        Ok(PickProblem2D { nodes, targets })
    }

    pub fn nodes(&self) -> &[(Cplx, Cplx)] {
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

    /// The same nodes with new targets.
    pub fn with_targets(&self, targets: Vec<Cplx>) -> Result<Self> {
        Self::new(self.nodes.clone(), targets)
    }

    /// The problem with node `skip` removed.
    pub fn without(&self, skip: usize) -> Result<Self> {
        let keep = (0..self.len()).filter(|&k| k != skip);
        Self::new(
            keep.clone().map(|k| self.nodes[k]).collect(),
            keep.map(|k| self.targets[k]).collect(),
        )
    }
}

/// `W`, `Lambda^1` and `Lambda^2` of a problem.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrices {
    pub w: HermitianMatrix,
    pub lambda1: HermitianMatrix,
    pub lambda2: HermitianMatrix,
}

fn gram_one_minus(v: &[Cplx]) -> HermitianMatrix {
    HermitianMatrix::from_fn(v.len(), |i, j| ONE - v[i].conj() * v[j]).expect("finite entries")
}

pub fn data_matrices(prob: &PickProblem2D) -> DataMatrices {
    let l1: Vec<Cplx> = prob.nodes.iter().map(|n| n.0).collect();
    let l2: Vec<Cplx> = prob.nodes.iter().map(|n| n.1).collect();
    DataMatrices {
        w: gram_one_minus(&prob.targets),
        lambda1: gram_one_minus(&l1),
        lambda2: gram_one_minus(&l2),
    }
}

/// `||W - G o L1 - D o L2||_F`.
pub fn pair_residual(data: &DataMatrices, gamma: &HermitianMatrix, delta: &HermitianMatrix) -> f64 {
    let n = data.w.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let r = data.w[(i, j)] - gamma[(i, j)] * data.lambda1[(i, j)] - delta[(i, j)] * data.lambda2[(i, j)];
            sum += r.norm_sqr();
        }
    }
    sum.sqrt()
}

/// An Agler decomposition `W = G o L1 + D o L2`.
#[derive(Debug, Clone, PartialEq)]
pub struct AglerPair {
    pub gamma: HermitianMatrix,
    pub delta: HermitianMatrix,
    pub residual: f64,
}

impl AglerPair {
    pub fn new(data: &DataMatrices, gamma: HermitianMatrix, delta: HermitianMatrix) -> Self {
        let residual = pair_residual(data, &gamma, &delta);
        AglerPair { gamma, delta, residual }
    }

    /// Rechecks positivity of both halves and the residual from scratch.
    pub fn verify(&self, data: &DataMatrices, tol: &Tolerances) -> Result<()> {
        if !psd_status(&self.gamma, tol)?.is_psd() || !psd_status(&self.delta, tol)?.is_psd() {
            return Err(Error::InternalCheck("Agler pair has an indefinite half"));
        }
        if !(pair_residual(data, &self.gamma, &self.delta) <= tol.residual_tol) {
            return Err(Error::InternalCheck("Agler pair residual exceeds tolerance"));
        }
        Ok(())
    }
}

/// True when both halves of the pair are nonzero, so a solution depending on
/// both variables exists.
pub fn nonuniqueness_flag(pair: &AglerPair) -> bool {
    pair.gamma.frobenius_norm() > NONZERO_PAIR && pair.delta.frobenius_norm() > NONZERO_PAIR
}

/// The Szegő kernel `1 / ((1 - conj(l_i^1) l_j^1)(1 - conj(l_i^2) l_j^2))`.
pub fn szego_kernel(nodes: &[(Cplx, Cplx)]) -> HermitianMatrix {
    HermitianMatrix::from_fn(nodes.len(), |i, j| {
        ONE / ((ONE - nodes[i].0.conj() * nodes[j].0) * (ONE - nodes[i].1.conj() * nodes[j].1))
    })
    .expect("finite entries")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SzegoVerdict {
    Unique,
    Inconclusive,
}

/// Outcome of the Szegő test: `W o K` singular PSD certifies uniqueness; an
/// indefinite `W o K` additionally certifies that the problem is unsolvable.
#[derive(Debug, Clone, PartialEq)]
pub struct SzegoTest {
    pub verdict: SzegoVerdict,
    pub wk: HermitianMatrix,
    pub definiteness: Definiteness,
    pub rank: usize,
}

impl SzegoTest {
    pub fn flags_unsolvable(&self) -> bool {
        self.definiteness.status == PsdStatus::Indefinite
    }
}

pub fn szego_uniqueness_test(prob: &PickProblem2D, tol: &Tolerances) -> Result<SzegoTest> {
    let data = data_matrices(prob);
    let wk = schur_product(&data.w, &szego_kernel(&prob.nodes))?;
    let definiteness = psd_status(&wk, tol)?;
    let verdict = if definiteness.status == PsdStatus::PsdSingular {
        SzegoVerdict::Unique
    } else {
        SzegoVerdict::Inconclusive
    };
    Ok(SzegoTest {
        verdict,
        rank: numeric_rank(&wk, tol)?,
        wk,
        definiteness,
    })
}

/// `K` positive definite with `L1 o K` and `L2 o K` not indefinite.
pub fn admissible_check(k: &HermitianMatrix, data: &DataMatrices, tol: &Tolerances) -> Result<bool> {
    if k.dim() != data.w.dim() {
        return Err(Error::DimensionMismatch {
            expected: data.w.dim(),
            found: k.dim(),
        });
    }
    Ok(psd_status(k, tol)?.status == PsdStatus::PositiveDefinite
        && psd_status(&schur_product(&data.lambda1, k)?, tol)?.is_psd()
        && psd_status(&schur_product(&data.lambda2, k)?, tol)?.is_psd())
}

/// Where a library kernel came from.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelProvenance {
    Szego,
    /// `1 / (1 - conj(m(l_i^1)) m(l_j^1))` for a hint `m` through the nodes.
    Graph(Blaschke),
    /// `1 / (1 - conj(l_i^1) l_j^1)`, the one-variable Szegő kernel pulled
    /// back along a hint `m` through the nodes; `L2 o K` is the Pick matrix
    /// of `m`.
    GraphPullback(Blaschke),
    User,
}

/// An admissible kernel with the smallest eigenvalue of `W o K`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelCertificate {
    pub k: HermitianMatrix,
    pub lambda_min_wk: f64,
    pub scale_wk: f64,
    pub provenance: KernelProvenance,
}

impl KernelCertificate {
    fn build(k: HermitianMatrix, provenance: KernelProvenance, data: &DataMatrices, tol: &Tolerances) -> Result<Self> {
        let wk = schur_product(&data.w, &k)?;
        let def = psd_status(&wk, tol)?;
        Ok(KernelCertificate {
            k,
            lambda_min_wk: def.lambda_min,
            scale_wk: def.scale,
            provenance,
        })
    }

    /// Whether `W o K` is indefinite, which rules out every solution.
    pub fn refutes(&self, tol: &Tolerances) -> bool {
        self.lambda_min_wk < -tol.psd_tol * self.scale_wk
    }
}

/// True when every node lies on the graph of `m`.
pub fn hint_applies(m: &Blaschke, prob: &PickProblem2D) -> bool {
    prob.nodes.iter().all(|(a, b)| (m.eval(*a) - b).norm() <= HINT_TOL)
}

/// The Szegő kernel plus, for each hint through all nodes, the graph kernel
/// and the pulled-back disk kernel; only admissible kernels are kept.
pub fn kernel_library(prob: &PickProblem2D, hints: &[Blaschke], tol: &Tolerances) -> Result<Vec<KernelCertificate>> {
    let data = data_matrices(prob);
    let mut candidates = vec![(szego_kernel(&prob.nodes), KernelProvenance::Szego)];
    for m in hints.iter().filter(|m| hint_applies(m, prob)) {
        let img: Vec<Cplx> = prob.nodes.iter().map(|n| m.eval(n.0)).collect();
        let graph = HermitianMatrix::from_fn(img.len(), |i, j| ONE / (ONE - img[i].conj() * img[j]))?;
        candidates.push((graph, KernelProvenance::Graph(m.clone())));
        let l1: Vec<Cplx> = prob.nodes.iter().map(|n| n.0).collect();
        let pull = HermitianMatrix::from_fn(l1.len(), |i, j| ONE / (ONE - l1[i].conj() * l1[j]))?;
        candidates.push((pull, KernelProvenance::GraphPullback(m.clone())));
    }
    let mut out = Vec::new();
    for (k, prov) in candidates {
        if admissible_check(&k, &data, tol)? {
            out.push(KernelCertificate::build(k, prov, &data, tol)?);
        }
    }
    Ok(out)
}

/// First library kernel with `W o K` indefinite.
pub fn unsolvability_certificate(library: &[KernelCertificate], tol: &Tolerances) -> Option<KernelCertificate> {
    library.iter().find(|c| c.refutes(tol)).cloned()
}

/// Result of the projection search.
#[derive(Debug, Clone, PartialEq)]
pub enum DykstraOutcome {
    Feasible(AglerPair),
    Undecided { iterations: usize, best_residual: f64 },
}

/// Projection of the pair onto `{G o L1 + D o L2 = W}`, entry by entry.
fn project_affine(data: &DataMatrices, g: &mut CMatrix, d: &mut CMatrix) {
    let n = data.w.dim();
    for i in 0..n {
        for j in i..n {
            let (a, b, w) = (data.lambda1[(i, j)], data.lambda2[(i, j)], data.w[(i, j)]);
            let r = (a * g[(i, j)] + b * d[(i, j)] - w) / (a.norm_sqr() + b.norm_sqr());
            let gn = g[(i, j)] - a.conj() * r;
            let dn = d[(i, j)] - b.conj() * r;
            if i == j {
                g[(i, i)] = Cplx::new(gn.re, 0.0);
                d[(i, i)] = Cplx::new(dn.re, 0.0);
            } else {
                g[(i, j)] = gn;
                g[(j, i)] = gn.conj();
                d[(i, j)] = dn;
                d[(j, i)] = dn.conj();
            }
        }
    }
}

/// Nearest PSD matrix to `s` by eigenvalue clipping, written to `out`.
/// `basis` carries the eigenvectors between calls as a warm start.
fn project_psd(s: &CMatrix, basis: &mut CMatrix, out: &mut CMatrix) -> Result<()> {
    let n = s.rows();
    let values = herm_eigen_from(s, basis)?;
    for i in 0..n {
        for j in 0..n {
            out[(i, j)] = s[(i, j)];
        }
    }
    for (k, &l) in values.iter().enumerate() {
        if l < 0.0 {
            for i in 0..n {
                let vi = basis[(i, k)] * l;
                for j in 0..n {
                    out[(i, j)] -= vi * basis[(j, k)].conj();
                }
            }
        }
    }
    for i in 0..n {
        out[(i, i)].im = 0.0;
        for j in i + 1..n {
            let z = 0.5 * (out[(i, j)] + out[(j, i)].conj());
            out[(i, j)] = z;
            out[(j, i)] = z.conj();
        }
    }
    Ok(())
}

fn to_herm(m: &CMatrix) -> Result<HermitianMatrix> {
    HermitianMatrix::from_matrix(m)
}

/// Cheap Cholesky screen first; the eigensolver has the final word.
fn is_psd_within(m: &CMatrix, tol: &Tolerances) -> Result<bool> {
    if !cholesky_succeeds(m, 2.0 * tol.psd_tol * m.frobenius_norm().max(1.0)) {
        return Ok(false);
    }
    Ok(psd_status(&to_herm(m)?, tol)?.is_psd())
}

fn residual(data: &DataMatrices, g: &CMatrix, d: &CMatrix) -> f64 {
    let n = data.w.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            let r = data.w[(i, j)] - g[(i, j)] * data.lambda1[(i, j)] - d[(i, j)] * data.lambda2[(i, j)];
            sum += r.norm_sqr();
        }
    }
    sum.sqrt()
}

/// Dykstra's alternating projections between the affine set
/// `{G o L1 + D o L2 = W}` and the cone of PSD pairs, started from
/// `G = W / (2 L1)`, `D = W / (2 L2)`.
///
/// Returns a pair as soon as either the PSD iterate meets the residual
/// tolerance or the affine iterate is PSD within tolerance; every returned
/// pair is rechecked from scratch.
pub fn dykstra_decompose(prob: &PickProblem2D, tol: &Tolerances, budget: usize) -> Result<DykstraOutcome> {
    let data = data_matrices(prob);
    let n = prob.len();
    let half = Cplx::new(0.5, 0.0);
    let mut g = CMatrix::from_fn(n, n, |i, j| half * data.w[(i, j)] / data.lambda1[(i, j)]);
    let mut d = CMatrix::from_fn(n, n, |i, j| half * data.w[(i, j)] / data.lambda2[(i, j)]);
    let (mut pg, mut pd) = (CMatrix::zeros(n, n), CMatrix::zeros(n, n));
    let (mut sg, mut sd) = (CMatrix::zeros(n, n), CMatrix::zeros(n, n));
    let (mut vg, mut vd) = (CMatrix::identity(n), CMatrix::identity(n));
    let mut best = f64::INFINITY;

    for it in 0..budget {
        // affine step: the set is affine, so its Dykstra correction vanishes
        project_affine(&data, &mut g, &mut d);
        if it % CHECK_EVERY == 0 && is_psd_within(&g, tol)? && is_psd_within(&d, tol)? {
            return finish(&data, &g, &d, tol);
        }
        if it % REBASE_EVERY == 0 {
            // drop accumulated rounding in the warm-start bases
            vg = CMatrix::identity(n);
            vd = CMatrix::identity(n);
        }
        for i in 0..n {
            for j in 0..n {
                sg[(i, j)] = g[(i, j)] + pg[(i, j)];
                sd[(i, j)] = d[(i, j)] + pd[(i, j)];
            }
        }
        project_psd(&sg, &mut vg, &mut g)?;
        project_psd(&sd, &mut vd, &mut d)?;
        for i in 0..n {
            for j in 0..n {
                pg[(i, j)] = sg[(i, j)] - g[(i, j)];
                pd[(i, j)] = sd[(i, j)] - d[(i, j)];
            }
        }
        let res = residual(&data, &g, &d);
        best = best.min(res);
        if res <= tol.residual_tol {
            return finish(&data, &g, &d, tol);
        }
    }
    Ok(DykstraOutcome::Undecided {
        iterations: budget,
        best_residual: best,
    })
}

fn finish(data: &DataMatrices, g: &CMatrix, d: &CMatrix, tol: &Tolerances) -> Result<DykstraOutcome> {
    let pair = AglerPair::new(data, to_herm(g)?, to_herm(d)?);
    pair.verify(data, tol)?;
    Ok(DykstraOutcome::Feasible(pair))
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solvability {
    Solvable(AglerPair),
    Unsolvable(KernelCertificate),
    Undecided { iterations: usize, best_residual: f64 },
}

/// Kernel certificate first, then the projection search.
pub fn solvability_status(
    prob: &PickProblem2D,
    hints: &[Blaschke],
    tol: &Tolerances,
    budget: usize,
) -> Result<Solvability> {
    let library = kernel_library(prob, hints, tol)?;
    if let Some(cert) = unsolvability_certificate(&library, tol) {
        return Ok(Solvability::Unsolvable(cert));
    }
    Ok(match dykstra_decompose(prob, tol, budget)? {
        DykstraOutcome::Feasible(pair) => Solvability::Solvable(pair),
        DykstraOutcome::Undecided {
            iterations,
            best_residual,
        } => Solvability::Undecided {
            iterations,
            best_residual,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extremality {
    Extremal,
    NotExtremal,
    Undecided,
}

/// Shrinks the targets by `1 / (1 - eps)`: a solution of the shrunk problem
/// has norm at most `1 - eps` (not extremal), while a kernel certificate
/// against it means no solution of norm `<= 1 - eps` exists (extremal at
/// resolution `eps`). Targets that would leave the disk give `Undecided`.
pub fn extremality_test(
    prob: &PickProblem2D,
    hints: &[Blaschke],
    eps: f64,
    tol: &Tolerances,
    budget: usize,
) -> Result<Extremality> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Precondition("extremality shrink factor must lie in (0, 1)"));
    }
    match solvability_status(prob, hints, tol, budget)? {
        Solvability::Unsolvable(_) => return Err(Error::Unsolvable),
        Solvability::Undecided { .. } => return Ok(Extremality::Undecided),
        Solvability::Solvable(_) => {}
    }
    shrunk_verdict(prob, hints, eps, tol, budget)
}

fn shrunk_verdict(
    prob: &PickProblem2D,
    hints: &[Blaschke],
    eps: f64,
    tol: &Tolerances,
    budget: usize,
) -> Result<Extremality> {
    let scaled: Vec<Cplx> = prob.targets.iter().map(|w| w / (1.0 - eps)).collect();
    if scaled.iter().any(|w| !(w.norm() < 1.0)) {
        return Ok(Extremality::Undecided);
    }
    Ok(
        match solvability_status(&prob.with_targets(scaled)?, hints, tol, budget)? {
            Solvability::Solvable(_) => Extremality::NotExtremal,
            Solvability::Unsolvable(_) => Extremality::Extremal,
            Solvability::Undecided { .. } => Extremality::Undecided,
        },
    )
}

/// Runs the shrink test at `eps = 1e-1, 1e-2, 1e-3`: any solvable shrink
/// proves the problem is not extremal; a certificate at the finest `eps`
/// reports extremal.
pub fn extremality_refined(
    prob: &PickProblem2D,
    hints: &[Blaschke],
    tol: &Tolerances,
    budget: usize,
) -> Result<Extremality> {
    match solvability_status(prob, hints, tol, budget)? {
        Solvability::Unsolvable(_) => return Err(Error::Unsolvable),
        Solvability::Undecided { .. } => return Ok(Extremality::Undecided),
        Solvability::Solvable(_) => {}
    }
    let mut last = Extremality::Undecided;
    for eps in REFINED_EPSILONS {
        last = shrunk_verdict(prob, hints, eps, tol, budget)?;
        if last == Extremality::NotExtremal {
            return Ok(last);
        }
    }
    Ok(last)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Minimality {
    Minimal,
    NotMinimal,
    Undecided,
}

/// An extremal problem is minimal when no subproblem with one node removed
/// is extremal.
pub fn minimality_test(
    prob: &PickProblem2D,
    hints: &[Blaschke],
    eps: f64,
    tol: &Tolerances,
    budget: usize,
) -> Result<Minimality> {
    if extremality_test(prob, hints, eps, tol, budget)? != Extremality::Extremal {
        return Err(Error::Precondition("minimality is defined for extremal problems"));
    }
    let mut undecided = false;
    // a single-node problem has no proper subproblems to test
    let subproblems = if prob.len() > 1 { prob.len() } else { 0 };
    for skip in 0..subproblems {
        match extremality_test(&prob.without(skip)?, hints, eps, tol, budget)? {
            Extremality::Extremal => return Ok(Minimality::NotMinimal),
            Extremality::Undecided => undecided = true,
            Extremality::NotExtremal => {}
        }
    }
    Ok(if undecided {
        Minimality::Undecided
    } else {
        Minimality::Minimal
    })
}

/// The rank-one certificate of non-uniqueness.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseIICertificate {
    /// Unit null vector of `G0 = W / L1`.
    pub u: Vec<Cplx>,
    /// Factors `x^r` with `A = sum x^r (x^r)*`.
    pub xr: Vec<Vec<Cplx>>,
    /// Unit vector with `sum_i v_i x_i^r conj(u_i) = 0` for every `r`.
    pub v: Vec<Cplx>,
    pub epsilon: f64,
    /// `D = eps v v*`, `G = G0 - A o D`.
    pub pair: AglerPair,
}

/// Builds `(G0 - A o D, D)` with `D = eps v v*` from `G0 = W / L1` singular of
/// rank `N - 1` and `A = L2 / L1` PSD of rank `M < N`.
///
/// `eps` is the largest step keeping `G0 - eps A o (v v*)` PSD, located by
/// bisection on `[0, 2 ||G0||_F / ||A o (v v*)||_F]` to relative width `1e-6`.
pub fn case_ii_certificate(
    data: &DataMatrices,
    gamma0: &HermitianMatrix,
    a: &HermitianMatrix,
    tol: &Tolerances,
) -> Result<CaseIICertificate> {
    let n = gamma0.dim();
    if a.dim() != n || data.w.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.dim(),
        });
    }
    if psd_status(gamma0, tol)?.status != PsdStatus::PsdSingular {
        return Err(Error::Precondition("G0 must be singular positive semidefinite"));
    }
    let rank_g = numeric_rank(gamma0, tol)?;
    if rank_g + 1 != n {
        return Err(Error::ExtremalMinimalViolated {
            rank: rank_g,
            expected: n - 1,
        });
    }
    if !psd_status(a, tol)?.is_psd() {
        return Err(Error::IndefiniteInput("A = L2 / L1"));
    }
    let ea = herm_eigen(a)?;
    let thr = tol.rank_tol * a.threshold_scale();
    let xr: Vec<Vec<Cplx>> = (0..n)
        .filter(|&k| ea.values[k].abs() > thr)
        .map(|k| {
            ea.vector(k)
                .into_iter()
                .map(|z| z * ea.values[k].max(0.0).sqrt())
                .collect()
        })
        .collect();
    if xr.len() >= n {
        return Err(Error::Precondition("A must be rank deficient"));
    }
    let u = null_vector(gamma0, tol)?;
    let constraints = CMatrix::from_fn(xr.len(), n, |r, i| xr[r][i] * u[i].conj());
    let v = if xr.is_empty() {
        let mut e = vec![Cplx::new(0.0, 0.0); n];
        e[0] = ONE;
        e
    } else {
        complex_null_space(&constraints, tol)?.swap_remove(0)
    };
    let vv = HermitianMatrix::outer(&v)?;
    let avv = schur_product(a, &vv)?;
    let denom = avv.frobenius_norm();
    if !(denom > 0.0) {
        return Err(Error::InternalCheck("A o (v v*) vanishes"));
    }
    let step = |eps: f64| gamma0.sub(&avv.scale(eps));
    let mut lo = 0.0;
    let mut hi = 2.0 * gamma0.frobenius_norm() / denom;
    if psd_status(&step(hi)?, tol)?.is_psd() {
        lo = hi;
    } else {
        while hi - lo > 1e-6 * hi {
            let mid = 0.5 * (lo + hi);
            if psd_status(&step(mid)?, tol)?.is_psd() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }
    if !(lo > 1e-8) {
        return Err(Error::InternalCheck("rank-one certificate step vanished"));
    }
    let delta = vv.scale(lo);
    let gamma = step(lo)?;
    let pair = AglerPair::new(data, gamma, delta);
    pair.verify(data, tol)?;
    Ok(CaseIICertificate {
        u,
        xr,
        v,
        epsilon: lo,
        pair,
    })
}

/// Unit-norm check used by tests and reports.
pub fn is_unit(v: &[Cplx]) -> bool {
    (vec_norm(v) - 1.0).abs() < 1e-10
}
