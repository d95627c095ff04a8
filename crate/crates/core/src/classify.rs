//! Strong Pick set verdicts.
//!
//! [`degree_gate`] compares degrees and lists which exact criteria apply.
//! [`one_variable_classifier`] decides uniqueness completely for targets
//! taken from a rational inner function of `z1` alone, and returns the
//! evidence: a singular Szegő matrix for an auxiliary problem when the
//! solution is unique, or a rank-one Agler pair depending on `z2` otherwise.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::agler::{
    case_ii_certificate, data_matrices, szego_uniqueness_test, CaseIICertificate, PickProblem2D, SzegoTest,
    SzegoVerdict,
};
use crate::bezout::residual_scale;
use crate::hardy::{
    monomial_certificate, orthogonality_check, random_test_function, MonomialCertificate, TEST_BIDEGREE,
};
use crate::linalg::{entrywise_quotient, numeric_rank, psd_status, HermitianMatrix, PsdStatus};
use crate::pick1d::interpolate_blaschke;
use crate::poly::{blaschke_to_fraction, graph_poly, BiPoly, Blaschke, RationalInner, UniPoly};
use crate::rng::{stream, streams, uniform_disk, PickRng};
use crate::{Cplx, Error, Result, Tolerances};

/// Sampled nodes lie in the disk of this radius.
pub const SAMPLE_RADIUS: f64 = 0.9;
/// Minimum distance between sampled nodes.
pub const NODE_GAP: f64 = 1e-3;
/// Minimum distance between the preimages `l_j` of the auxiliary point.
pub const PREIMAGE_GAP: f64 = 1e-4;
/// Denominator margin above which `f` counts as regular.
pub const REGULAR_MARGIN: f64 = 1e-3;
const ON_VARIETY: f64 = 1e-8;
const DRAWS_PER_NODE: usize = 10_000;
const AUX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateVerdict {
    /// `deg_i f < deg_i p` for both `i`.
    StrongByConjecture,
    /// `deg_i f >= deg_i p` for both `i`.
    NotStrongByConjecture,
    MixedUndetermined,
}

/// Exact criteria that settle the strong Pick property for a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// `f` is a monomial that every monomial of `p` exceeds somewhere.
    MonomialCertificate,
    /// The denominator of `f` has no zeros on the closed bidisk.
    RegularInner,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGateVerdict {
    pub verdict: GateVerdict,
    pub f_degree: (usize, usize),
    pub p_degree: (usize, usize),
    pub applicable: Vec<Criterion>,
}

pub fn degree_gate(f: &RationalInner, p: &BiPoly) -> DegreeGateVerdict {
    let (d, n) = (f.bidegree(), p.bidegree());
    let verdict = if d.0 < n.0 && d.1 < n.1 {
        GateVerdict::StrongByConjecture
    } else if d.0 >= n.0 && d.1 >= n.1 {
        GateVerdict::NotStrongByConjecture
    } else {
        GateVerdict::MixedUndetermined
    };
    let mut applicable = Vec::new();
    if monomial_certified(f, p) {
        applicable.push(Criterion::MonomialCertificate);
    }
    if f.denominator_margin() >= REGULAR_MARGIN {
        applicable.push(Criterion::RegularInner);
    }
    DegreeGateVerdict {
        verdict,
        f_degree: d,
        p_degree: n,
        applicable,
    }
}

fn monomial_certified(f: &RationalInner, p: &BiPoly) -> bool {
    f.denominator().total_degree() == 0
        && monomial_certificate(f.numerator(), p).is_ok_and(|c| c == MonomialCertificate::Certified)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Uniqueness {
    Unique,
    NotUnique,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Evidence {
    /// Nodes `(l_j, w)` with `m(l_j) = w` and targets `f(l_j)`, whose Szegő
    /// matrix is singular.
    SzegoSingular {
        problem: PickProblem2D,
        w: Cplx,
        test: SzegoTest,
    },
    CaseII(CaseIICertificate),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub problem: PickProblem2D,
    pub f: RationalInner,
    /// `W / L1`.
    pub gamma0: HermitianMatrix,
    /// `L2 / L1`.
    pub a: HermitianMatrix,
    pub n1: usize,
    /// The Blaschke product whose graph passes through the nodes.
    pub m: Blaschke,
    pub p: BiPoly,
    pub verdict: Uniqueness,
    pub evidence: Evidence,
}

/// Decides whether the problem with targets `f(nodes)` has a unique solution,
/// for `f` a rational inner function of `z1` alone.
///
/// The problem must be extremal and minimal, which here means `W / L1` is
/// positive semidefinite of rank `N - 1`.
pub fn one_variable_classifier(
    f: &RationalInner,
    nodes: &[(Cplx, Cplx)],
    seed: u64,
    tol: &Tolerances,
) -> Result<ClassificationReport> {
    if !f.depends_only_on_z1() {
        return Err(Error::Precondition("f must depend on z1 only"));
    }
    let n = nodes.len();
    if n < 2 {
        return Err(Error::Precondition("at least two nodes are required"));
    }
    let targets = nodes.iter().map(|&(a, b)| f.eval(a, b)).collect();
    let problem = PickProblem2D::new(nodes.to_vec(), targets)?;
    let data = data_matrices(&problem);

    let gamma0 = entrywise_quotient(&data.w, &data.lambda1)?;
    let rank_g = numeric_rank(&gamma0, tol)?;
    if psd_status(&gamma0, tol)?.status == PsdStatus::Indefinite || rank_g + 1 != n {
        return Err(Error::ExtremalMinimalViolated {
            rank: rank_g,
            expected: n - 1,
        });
    }
    let a = entrywise_quotient(&data.lambda2, &data.lambda1)?;
    if psd_status(&a, tol)?.status == PsdStatus::Indefinite {
        return Err(Error::IndefiniteInput("A = L2 / L1"));
    }
    let n1 = numeric_rank(&a, tol)?;
    let l1: Vec<Cplx> = nodes.iter().map(|z| z.0).collect();
    let l2: Vec<Cplx> = nodes.iter().map(|z| z.1).collect();
    let m = interpolate_blaschke(&l1, &l2, tol)?;
    if m.degree() != n1 {
        return Err(Error::DegreeMismatch {
            expected: n1,
            found: m.degree(),
        });
    }
    let p = graph_poly(&m);
    if nodes
        .iter()
        .any(|&(x, y)| p.eval(x, y).norm() > ON_VARIETY * residual_scale(&p, x, y))
    {
        return Err(Error::InternalCheck("nodes do not lie on the graph of m"));
    }

    let (verdict, evidence) = if f.bidegree().0 < n1 {
        let mut rng = stream(seed, streams::CASE_I_POINT);
        (Uniqueness::Unique, szego_evidence(f, &m, &mut rng, tol)?)
    } else {
        (
            Uniqueness::NotUnique,
            Evidence::CaseII(case_ii_certificate(&data, &gamma0, &a, tol)?),
        )
    };
    Ok(ClassificationReport {
        problem,
        f: f.clone(),
        gamma0,
        a,
        n1,
        m,
        p,
        verdict,
        evidence,
    })
}

fn szego_evidence(f: &RationalInner, m: &Blaschke, rng: &mut PickRng, tol: &Tolerances) -> Result<Evidence> {
    let (q, r) = blaschke_to_fraction(m);
    for _ in 0..AUX_ATTEMPTS {
        let w = uniform_disk(rng, SAMPLE_RADIUS);
        let fiber = q.sub(&r.scale(w));
        let ls: Vec<Cplx> = fiber.roots(tol)?.roots;
        if ls.len() != m.degree() || !well_separated(&ls, PREIMAGE_GAP) {
            continue;
        }
        if ls.iter().any(|l| !(l.norm() < 1.0)) {
            return Err(Error::InternalCheck("preimage of an interior point left the disk"));
        }
        let nodes: Vec<(Cplx, Cplx)> = ls.iter().map(|&l| (l, w)).collect();
        let targets = ls.iter().map(|&l| f.eval(l, w)).collect();
        let problem = PickProblem2D::new(nodes, targets)?;
        let test = szego_uniqueness_test(&problem, tol)?;
        if test.verdict != SzegoVerdict::Unique {
            return Err(Error::InternalCheck("auxiliary Szegő test inconclusive"));
        }
        return Ok(Evidence::SzegoSingular { problem, w, test });
    }
    Err(Error::SamplingExhausted)
}

fn well_separated(pts: &[Cplx], gap: f64) -> bool {
    pts.iter()
        .enumerate()
        .all(|(i, a)| pts[i + 1..].iter().all(|b| (*a - *b).norm() > gap))
}

/// Draws `count` nodes on the graph of `map`, skipping draws where the map is
/// undefined or leaves the disk.
fn sample_graph(map: impl Fn(Cplx) -> Option<Cplx>, count: usize, rng: &mut PickRng) -> Result<Vec<(Cplx, Cplx)>> {
    if count == 0 {
        return Err(Error::Precondition("count must be positive"));
    }
    let mut out: Vec<(Cplx, Cplx)> = Vec::with_capacity(count);
    for _ in 0..DRAWS_PER_NODE * count {
        if out.len() == count {
            break;
        }
        let l = uniform_disk(rng, SAMPLE_RADIUS);
        let Some(v) = map(l) else { continue };
        if !(v.norm() < 1.0) || out.iter().any(|p| (p.0 - l).norm() <= NODE_GAP) {
            continue;
        }
        out.push((l, v));
    }
    if out.len() < count {
        return Err(Error::SamplingExhausted);
    }
    Ok(out)
}

/// Points `(l, m(l))` with `l` uniform in the disk of radius `0.9`.
pub fn sample_variety_nodes(m: &Blaschke, count: usize, seed: u64) -> Result<Vec<(Cplx, Cplx)>> {
    let mut rng = stream(seed, streams::VARIETY_NODES);
    sample_graph(|l| Some(m.eval(l)), count, &mut rng)
}

/// `p = z2 r(z1) - q(z1)` with `r` nonzero, as `(q, r)`.
fn graph_form(p: &BiPoly) -> Option<(UniPoly, UniPoly)> {
    let (n1, n2) = p.bidegree();
    if n2 != 1 {
        return None;
    }
    let q = UniPoly::new((0..=n1).map(|i| -p.coeff(i, 0)).collect());
    let r = UniPoly::new((0..=n1).map(|i| p.coeff(i, 1)).collect());
    Some((q, r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SzegoTally {
    pub trials: usize,
    pub unique: usize,
    pub inconclusive: usize,
    pub unsolvable: usize,
    /// Trials skipped because sampling or the test failed numerically.
    pub failed: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SweepNote {
    /// A constant `f` is trivially the unique solution.
    ConstantTarget,
    /// `p` is not of the form `z2 r(z1) - q(z1)`; no nodes were sampled.
    NotGraph,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub gate: DegreeGateVerdict,
    pub monomial: Option<MonomialCertificate>,
    /// Largest `|<f, p g>|` over the sampled `g`, when certified.
    pub orthogonality_max: Option<f64>,
    pub szego: Option<SzegoTally>,
    pub notes: Vec<SweepNote>,
}

/// Collects the available evidence for a pair `(f, p)`. Never settles the
/// degree comparison on its own.
pub fn conjecture_sweep(
    f: &RationalInner,
    p: &BiPoly,
    trials: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<SweepReport> {
    let gate = degree_gate(f, p);
    let mut notes = Vec::new();
    if f.bidegree() == (0, 0) {
        notes.push(SweepNote::ConstantTarget);
    }
    let monomial = if f.denominator().total_degree() == 0 {
        monomial_certificate(f.numerator(), p).ok()
    } else {
        None
    };
    let orthogonality_max = if gate.applicable.contains(&Criterion::MonomialCertificate) {
        let mut rng = stream(seed, streams::TEST_FUNCTIONS);
        let mut worst: f64 = 0.0;
        for _ in 0..trials {
            let g = random_test_function(&mut rng, TEST_BIDEGREE);
            worst = worst.max(orthogonality_check(f.numerator(), p, &g)?);
        }
        Some(worst)
    } else {
        None
    };
    let szego = match graph_form(p) {
        Some((q, r)) => Some(szego_sweep(f, p, &q, &r, trials, seed, tol)),
        None => {
            notes.push(SweepNote::NotGraph);
            None
        }
    };
    Ok(SweepReport {
        gate,
        monomial,
        orthogonality_max,
        szego,
        notes,
    })
}

fn szego_sweep(
    f: &RationalInner,
    p: &BiPoly,
    q: &UniPoly,
    r: &UniPoly,
    trials: usize,
    seed: u64,
    tol: &Tolerances,
) -> SzegoTally {
    let ((d1, d2), (n1, n2)) = (f.bidegree(), p.bidegree());
    let count = d1 * n2 + d2 * n1 + 1;
    let mut rng = stream(seed, streams::SWEEP);
    let mut tally = SzegoTally {
        trials,
        ..SzegoTally::default()
    };
    let map = |l: Cplx| {
        let den = r.eval(l);
        (den.norm() > 1e-12).then(|| q.eval(l) / den)
    };
    for _ in 0..trials {
        let outcome = sample_graph(map, count, &mut rng).and_then(|nodes| {
            let targets = nodes.iter().map(|&(a, b)| f.eval(a, b)).collect();
            szego_uniqueness_test(&PickProblem2D::new(nodes, targets)?, tol)
        });
        match outcome {
            Ok(t) if t.flags_unsolvable() => tally.unsolvable += 1,
            Ok(t) if t.verdict == SzegoVerdict::Unique => tally.unique += 1,
            Ok(_) => tally.inconclusive += 1,
            Err(_) => tally.failed += 1,
        }
    }
    tally
}
