//! Report types emitted by every subcommand, as JSON or text.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::formats::{BlaschkeDto, ComplexDto, MatrixDto, NodeDto, PolyDto};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Solve1d(Solve1dReport),
    Check(CheckReport),
    Classify(ClassifyReport),
    Strongpick(StrongPickReport),
    Bezout(BezoutReport),
    Hardy(HardyReport),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: String,
    pub exit_code: i32,
}

/// Non-finite values serialize as `null`.
pub fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Solve1dReport {
    pub solvable: bool,
    pub unique: Option<bool>,
    pub pick_matrix: MatrixDto,
    pub pick_lambda_min: Option<f64>,
    pub pick_rank: usize,
    pub blaschke: Option<BlaschkeDto>,
    /// `|m(l_i) - w_i|` per node.
    pub residuals: Vec<Option<f64>>,
    pub max_residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDto {
    pub gamma: MatrixDto,
    pub delta: MatrixDto,
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelDto {
    /// `Szego`, `Graph`, `GraphPullback` or `User`.
    pub provenance: String,
    pub hint: Option<BlaschkeDto>,
    pub k: MatrixDto,
    pub lambda_min_wk: Option<f64>,
    pub scale_wk: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SzegoDto {
    /// `UNIQUE` or `INCONCLUSIVE`.
    pub verdict: String,
    pub definiteness: String,
    pub rank: usize,
    pub lambda_min: Option<f64>,
    pub scale: Option<f64>,
    pub wk: MatrixDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    /// `SOLVABLE`, `UNSOLVABLE` or `UNDECIDED`.
    pub solvability: String,
    pub pair: Option<PairDto>,
    /// `true` when `||D||_F` is nonzero, which rules out uniqueness.
    pub nonuniqueness_flag: Option<bool>,
    pub kernel: Option<KernelDto>,
    pub iterations: Option<usize>,
    pub best_residual: Option<f64>,
    pub szego: SzegoDto,
    pub extremality: Option<String>,
    pub minimality: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum EvidenceDto {
    SzegoSingular {
        w: ComplexDto,
        nodes: Vec<NodeDto>,
        targets: Vec<ComplexDto>,
        szego: SzegoDto,
    },
    CaseII {
        u: Vec<ComplexDto>,
        v: Vec<ComplexDto>,
        epsilon: f64,
        pair: PairDto,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    /// `UNIQUE` or `NOT_UNIQUE`.
    pub verdict: String,
    pub f_degree: [usize; 2],
    pub n1: usize,
    pub nodes: Vec<NodeDto>,
    pub targets: Vec<ComplexDto>,
    pub gamma0: MatrixDto,
    pub a: MatrixDto,
    pub m: BlaschkeDto,
    pub p: PolyDto,
    /// Named results the verdict rests on, in order of use.
    pub theorems: Vec<String>,
    /// Hypotheses taken as given rather than tested.
    pub assumptions: Vec<String>,
    pub evidence: EvidenceDto,
    /// Present with `--extremal`: the kernel-based cross-check.
    pub extremality: Option<String>,
    pub minimality: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonomialDto {
    /// `CERTIFIED` or `FAIL`.
    pub verdict: String,
    pub offending: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyDto {
    pub trials: usize,
    pub unique: usize,
    pub inconclusive: usize,
    pub unsolvable: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrongPickReport {
    pub gate: String,
    pub f_degree: [usize; 2],
    pub p_degree: [usize; 2],
    pub applicable: Vec<String>,
    pub monomial: Option<MonomialDto>,
    pub orthogonality_max: Option<f64>,
    pub szego: Option<TallyDto>,
    /// Hypotheses taken as given rather than tested.
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointDto {
    pub x: ComplexDto,
    pub y: ComplexDto,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundDto {
    /// `d1 e2 + d2 e1`.
    pub bound: usize,
    /// `d1 e1 + d2 e2`.
    pub inner_infinity: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BezoutReport {
    pub total: usize,
    pub at_infinity: usize,
    pub finite_total: usize,
    pub finite_points: Vec<PointDto>,
    pub bound: Option<BoundDto>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleDto {
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub passes: bool,
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HardyReport {
    /// `CERTIFIED`, `FAIL` or `NOT_MONOMIAL`.
    pub certificate: String,
    pub offending: Vec<[usize; 2]>,
    pub orthogonality_max: Option<f64>,
    /// `SUPPORTED` or `VIOLATED`; sampling never proves the inequality.
    pub verdict: String,
    pub trials: usize,
    pub failures: usize,
    pub note: String,
    pub samples: Vec<SampleDto>,
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| format!("{v:.6e}"))
}

fn cplx(z: &ComplexDto) -> String {
    format!("{:.10}{:+.10}i", z.re, z.im)
}

fn blaschke(m: &BlaschkeDto) -> String {
    let zeros: Vec<String> = m.zeros.iter().map(cplx).collect();
    format!("unimodular {} zeros [{}]", cplx(&m.unimodular), zeros.join(", "))
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Solve1d(r) => {
                let _ = writeln!(s, "solvable: {}", r.solvable);
                if let Some(u) = r.unique {
                    let _ = writeln!(s, "unique: {u}");
                }
                let _ = writeln!(s, "pick lambda_min: {}  rank: {}", opt(r.pick_lambda_min), r.pick_rank);
                if let Some(m) = &r.blaschke {
                    let _ = writeln!(s, "blaschke: {}", blaschke(m));
                    let _ = writeln!(s, "max residual: {}", opt(r.max_residual));
                }
            }
            Report::Check(r) => {
                let _ = writeln!(s, "solvability: {}", r.solvability);
                if let Some(p) = &r.pair {
                    let _ = writeln!(s, "pair residual: {}", opt(p.residual));
                }
                if let Some(flag) = r.nonuniqueness_flag {
                    let _ = writeln!(s, "nonzero delta: {flag}");
                }
                if let Some(k) = &r.kernel {
                    let _ = writeln!(
                        s,
                        "kernel: {}  lambda_min(W o K): {}",
                        k.provenance,
                        opt(k.lambda_min_wk)
                    );
                }
                if let Some(it) = r.iterations {
                    let _ = writeln!(s, "iterations: {it}  best residual: {}", opt(r.best_residual));
                }
                let _ = writeln!(
                    s,
                    "szego: {} ({}, rank {})",
                    r.szego.verdict, r.szego.definiteness, r.szego.rank
                );
                if let Some(e) = &r.extremality {
                    let _ = writeln!(s, "extremality: {e}");
                }
                if let Some(m) = &r.minimality {
                    let _ = writeln!(s, "minimality: {m}");
                }
            }
            Report::Classify(r) => {
                let _ = writeln!(s, "verdict: {}", r.verdict);
                let _ = writeln!(s, "deg1 f: {}  n1: {}", r.f_degree[0], r.n1);
                let _ = writeln!(s, "m: {}", blaschke(&r.m));
                let _ = writeln!(s, "theorems: {}", r.theorems.join(" -> "));
                match &r.evidence {
                    EvidenceDto::SzegoSingular { w, szego, .. } => {
                        let _ = writeln!(
                            s,
                            "auxiliary slice w = {}: szego {} rank {} lambda_min {}",
                            cplx(w),
                            szego.definiteness,
                            szego.rank,
                            opt(szego.lambda_min)
                        );
                    }
                    EvidenceDto::CaseII { epsilon, pair, .. } => {
                        let _ = writeln!(
                            s,
                            "rank-one pair: epsilon {epsilon:.6e}  residual {}",
                            opt(pair.residual)
                        );
                    }
                }
                if let Some(e) = &r.extremality {
                    let _ = writeln!(s, "extremality: {e}");
                }
                if let Some(m) = &r.minimality {
                    let _ = writeln!(s, "minimality: {m}");
                }
            }
            Report::Strongpick(r) => {
                let _ = writeln!(
                    s,
                    "gate: {}  deg f = {:?}  deg p = {:?}",
                    r.gate, r.f_degree, r.p_degree
                );
                let _ = writeln!(s, "applicable: [{}]", r.applicable.join(", "));
                if let Some(m) = &r.monomial {
                    let _ = writeln!(s, "monomial certificate: {}", m.verdict);
                }
                if r.orthogonality_max.is_some() {
                    let _ = writeln!(s, "max |<f, pg>|: {}", opt(r.orthogonality_max));
                }
                if let Some(t) = &r.szego {
                    let _ = writeln!(
                        s,
                        "szego sweep: {} trials, {} unique, {} inconclusive, {} unsolvable, {} failed",
                        t.trials, t.unique, t.inconclusive, t.unsolvable, t.failed
                    );
                }
                for a in &r.assumptions {
                    let _ = writeln!(s, "assumed: {a}");
                }
                for n in &r.notes {
                    let _ = writeln!(s, "note: {n}");
                }
            }
            Report::Bezout(r) => {
                let _ = writeln!(
                    s,
                    "total: {}  finite: {}  at infinity: {}",
                    r.total, r.finite_total, r.at_infinity
                );
                for p in &r.finite_points {
                    let _ = writeln!(s, "  ({}, {}) x{}", cplx(&p.x), cplx(&p.y), p.multiplicity);
                }
                if let Some(b) = &r.bound {
                    let _ = writeln!(
                        s,
                        "bound: {}  holds: {}  inner at infinity: {}",
                        b.bound, b.holds, b.inner_infinity
                    );
                }
            }
            Report::Hardy(r) => {
                let _ = writeln!(s, "certificate: {}", r.certificate);
                if !r.offending.is_empty() {
                    let _ = writeln!(s, "offending monomials: {:?}", r.offending);
                }
                if r.orthogonality_max.is_some() {
                    let _ = writeln!(s, "max |<f, pg>|: {}", opt(r.orthogonality_max));
                }
                let _ = writeln!(
                    s,
                    "sampled inequality: {} ({} of {} failed)",
                    r.verdict, r.failures, r.trials
                );
                let _ = writeln!(s, "note: {}", r.note);
            }
        }
        s
    }
}
