//! Subcommand dispatch.

use pickset_core::agler::{
    extremality_test, minimality_test, nonuniqueness_flag, solvability_status, szego_uniqueness_test, AglerPair,
    Extremality, KernelCertificate, KernelProvenance, Minimality, PickProblem2D, Solvability, SzegoTest, SzegoVerdict,
    DEFAULT_BUDGET, DEFAULT_EPSILON,
};
use pickset_core::bezout::{common_zero_bound_check, intersect, IntersectionReport};
use pickset_core::classify::{
    conjecture_sweep, one_variable_classifier, Criterion, Evidence, GateVerdict, SweepNote, Uniqueness,
};
use pickset_core::hardy::{
    hs_condition_sample, monomial_certificate, orthogonality_check, random_test_function, HsVerdict,
    MonomialCertificate, TEST_BIDEGREE,
};
use pickset_core::linalg::{numeric_rank, psd_status};
use pickset_core::pick1d::{interpolation_residual, pick_matrix, solve_schur, solve_singular};
use pickset_core::poly::{BiPoly, Blaschke};
use pickset_core::rng::{stream, streams};
use pickset_core::{Error, PsdStatus, Tolerances};
use serde::de::DeserializeOwned;

use crate::formats::{
    cplx_vec, herm_dto, node_dtos, BezoutFile, ClassifyFile, HardyFile, Problem1dFile, Problem2dFile, StrongPickFile,
};
use crate::report::*;
use crate::{exit, CliError};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_TRIALS: usize = 200;
const P_IRREDUCIBLE: &str = "p irreducible";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Solve1d,
    Check,
    Classify,
    Strongpick,
    Bezout,
    Hardy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Output {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub tolerances: Tolerances,
    pub seed: u64,
    pub max_iter: usize,
    pub output: Output,
    pub hints: Vec<Blaschke>,
    /// Also run the kernel-based extremality and minimality tests.
    pub extremal: bool,
    pub trials: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            tolerances: Tolerances::default(),
            seed: DEFAULT_SEED,
            max_iter: DEFAULT_BUDGET,
            output: Output::Text,
            hints: Vec::new(),
            extremal: false,
            trials: DEFAULT_TRIALS,
        }
    }
}

impl RunConfig {
    pub fn render(&self, report: &Report) -> String {
        match self.output {
            Output::Json => report.to_json(),
            Output::Text => report.to_text(),
        }
    }
}

fn parse<T: DeserializeOwned>(input: &str) -> Result<T, CliError> {
    serde_json::from_str(input).map_err(CliError::parse)
}

/// Runs one subcommand on the contents of an input file. Returns the report
/// and the exit code it maps to.
pub fn execute(cmd: Command, input: &str, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    cfg.tolerances.validate().map_err(CliError::parse)?;
    match cmd {
        Command::Solve1d => solve1d(parse(input)?, cfg),
        Command::Check => check(parse(input)?, cfg),
        Command::Classify => classify(parse(input)?, cfg),
        Command::Strongpick => strongpick(parse(input)?, cfg),
        Command::Bezout => bezout(parse(input)?, cfg),
        Command::Hardy => hardy(parse(input)?, cfg),
    }
}

fn solve1d(file: Problem1dFile, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    let tol = &cfg.tolerances;
    let prob = file.to_problem()?;
    let pm = pick_matrix(&prob);
    let def = psd_status(&pm, tol)?;
    let mut report = Solve1dReport {
        solvable: def.is_psd(),
        unique: None,
        pick_matrix: herm_dto(&pm),
        pick_lambda_min: finite(def.lambda_min),
        pick_rank: numeric_rank(&pm, tol)?,
        blaschke: None,
        residuals: Vec::new(),
        max_residual: None,
    };
    if !def.is_psd() {
        return Ok((Report::Solve1d(report), exit::UNSOLVABLE));
    }
    let unique = def.status == PsdStatus::PsdSingular;
    let m = if unique {
        solve_singular(&prob, tol)?
    } else {
        solve_schur(&prob, tol)?
    };
    report.unique = Some(unique);
    report.residuals = prob
        .nodes()
        .iter()
        .zip(prob.targets())
        .map(|(l, w)| finite((m.eval(*l) - w).norm()))
        .collect();
    report.max_residual = finite(interpolation_residual(&m, &prob));
    report.blaschke = Some((&m).into());
    Ok((Report::Solve1d(report), exit::OK))
}

fn pair_dto(p: &AglerPair) -> PairDto {
    PairDto {
        gamma: herm_dto(&p.gamma),
        delta: herm_dto(&p.delta),
        residual: finite(p.residual),
    }
}

fn kernel_dto(k: &KernelCertificate) -> KernelDto {
    let (provenance, hint) = match &k.provenance {
        KernelProvenance::Szego => ("Szego", None),
        KernelProvenance::Graph(m) => ("Graph", Some(m.into())),
        KernelProvenance::GraphPullback(m) => ("GraphPullback", Some(m.into())),
        KernelProvenance::User => ("User", None),
    };
    KernelDto {
        provenance: provenance.to_string(),
        hint,
        k: herm_dto(&k.k),
        lambda_min_wk: finite(k.lambda_min_wk),
        scale_wk: finite(k.scale_wk),
    }
}

fn psd_name(s: PsdStatus) -> &'static str {
    match s {
        PsdStatus::PositiveDefinite => "PD",
        PsdStatus::PsdSingular => "PSD_SINGULAR",
        PsdStatus::Indefinite => "INDEFINITE",
    }
}

fn szego_dto(t: &SzegoTest) -> SzegoDto {
    SzegoDto {
        verdict: match t.verdict {
            SzegoVerdict::Unique => "UNIQUE",
            SzegoVerdict::Inconclusive => "INCONCLUSIVE",
        }
        .to_string(),
        definiteness: psd_name(t.definiteness.status).to_string(),
        rank: t.rank,
        lambda_min: finite(t.definiteness.lambda_min),
        scale: finite(t.definiteness.scale),
        wk: herm_dto(&t.wk),
    }
}

fn extremality_name(e: Extremality) -> &'static str {
    match e {
        Extremality::Extremal => "EXTREMAL",
        Extremality::NotExtremal => "NOT_EXTREMAL",
        Extremality::Undecided => "UNDECIDED",
    }
}

fn minimality_name(m: Minimality) -> &'static str {
    match m {
        Minimality::Minimal => "MINIMAL",
        Minimality::NotMinimal => "NOT_MINIMAL",
        Minimality::Undecided => "UNDECIDED",
    }
}

/// Kernel-based extremality, then minimality for extremal problems.
/// Returns the names and whether either test was undecided.
fn extremal_minimal(
    prob: &PickProblem2D,
    hints: &[Blaschke],
    cfg: &RunConfig,
) -> Result<(String, Option<String>, bool), CliError> {
    let tol = &cfg.tolerances;
    let e = extremality_test(prob, hints, DEFAULT_EPSILON, tol, cfg.max_iter)?;
    let m = if e == Extremality::Extremal {
        Some(minimality_test(prob, hints, DEFAULT_EPSILON, tol, cfg.max_iter)?)
    } else {
        None
    };
    let undecided = e == Extremality::Undecided || m == Some(Minimality::Undecided);
    Ok((
        extremality_name(e).to_string(),
        m.map(|m| minimality_name(m).to_string()),
        undecided,
    ))
}

fn check(file: Problem2dFile, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    let tol = &cfg.tolerances;
    let prob = file.to_problem()?;
    let szego = szego_dto(&szego_uniqueness_test(&prob, tol)?);
    let mut report = CheckReport {
        solvability: String::new(),
        pair: None,
        nonuniqueness_flag: None,
        kernel: None,
        iterations: None,
        best_residual: None,
        szego,
        extremality: None,
        minimality: None,
    };
    let code = match solvability_status(&prob, &cfg.hints, tol, cfg.max_iter)? {
        Solvability::Solvable(pair) => {
            report.solvability = "SOLVABLE".into();
            report.nonuniqueness_flag = Some(nonuniqueness_flag(&pair));
            report.pair = Some(pair_dto(&pair));
            if cfg.extremal {
                let (e, m, undecided) = extremal_minimal(&prob, &cfg.hints, cfg)?;
                report.extremality = Some(e);
                report.minimality = m;
                if undecided {
                    exit::UNDECIDED
                } else {
                    exit::OK
                }
            } else {
                exit::OK
            }
        }
        Solvability::Unsolvable(cert) => {
            report.solvability = "UNSOLVABLE".into();
            report.kernel = Some(kernel_dto(&cert));
            exit::UNSOLVABLE
        }
        Solvability::Undecided {
            iterations,
            best_residual,
        } => {
            report.solvability = "UNDECIDED".into();
            report.iterations = Some(iterations);
            report.best_residual = finite(best_residual);
            exit::UNDECIDED
        }
    };
    Ok((Report::Check(report), code))
}

fn classify(file: ClassifyFile, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    let tol = &cfg.tolerances;
    let f = file.f.to_inner()?;
    let r = one_variable_classifier(&f, &file.nodes(), cfg.seed, tol)?;
    let mut theorems = vec!["ExtremalMinimalRank".to_string(), "GraphInterpolation".to_string()];
    let evidence = match &r.evidence {
        Evidence::SzegoSingular { problem, w, test } => {
            theorems.extend(["OneVariableReduction".to_string(), "SzegoSingularity".to_string()]);
            EvidenceDto::SzegoSingular {
                w: (*w).into(),
                nodes: node_dtos(problem.nodes()),
                targets: cplx_vec(problem.targets()),
                szego: szego_dto(test),
            }
        }
        Evidence::CaseII(c) => {
            theorems.push("RankOneDecomposition".to_string());
            EvidenceDto::CaseII {
                u: cplx_vec(&c.u),
                v: cplx_vec(&c.v),
                epsilon: c.epsilon,
                pair: pair_dto(&c.pair),
            }
        }
    };
    let mut report = ClassifyReport {
        verdict: match r.verdict {
            Uniqueness::Unique => "UNIQUE",
            Uniqueness::NotUnique => "NOT_UNIQUE",
        }
        .to_string(),
        f_degree: [f.bidegree().0, f.bidegree().1],
        n1: r.n1,
        nodes: node_dtos(r.problem.nodes()),
        targets: cplx_vec(r.problem.targets()),
        gamma0: herm_dto(&r.gamma0),
        a: herm_dto(&r.a),
        m: (&r.m).into(),
        p: (&r.p).into(),
        theorems,
        assumptions: vec![P_IRREDUCIBLE.to_string()],
        evidence,
        extremality: None,
        minimality: None,
    };
    let mut code = exit::OK;
    if cfg.extremal {
        let mut hints = vec![r.m.clone()];
        hints.extend(cfg.hints.iter().cloned());
        let (e, m, undecided) = extremal_minimal(&r.problem, &hints, cfg)?;
        if e == extremality_name(Extremality::NotExtremal)
            || m.as_deref() == Some(minimality_name(Minimality::NotMinimal))
        {
            code = exit::HYPOTHESIS_VIOLATED;
        } else if undecided {
            code = exit::UNDECIDED;
        }
        report.extremality = Some(e);
        report.minimality = m;
    }
    Ok((Report::Classify(report), code))
}

fn gate_name(g: GateVerdict) -> &'static str {
    match g {
        GateVerdict::StrongByConjecture => "STRONG_BY_CONJECTURE",
        GateVerdict::NotStrongByConjecture => "NOT_STRONG_BY_CONJECTURE",
        GateVerdict::MixedUndetermined => "MIXED_UNDETERMINED",
    }
}

fn monomial_dto(c: &MonomialCertificate) -> MonomialDto {
    match c {
        MonomialCertificate::Certified => MonomialDto {
            verdict: "CERTIFIED".into(),
            offending: Vec::new(),
        },
        MonomialCertificate::Fail(v) => MonomialDto {
            verdict: "FAIL".into(),
            offending: v.iter().map(|&(i, j)| [i, j]).collect(),
        },
    }
}

fn strongpick(file: StrongPickFile, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    let f = file.f.to_inner()?;
    let p = file.p.to_bipoly();
    if p.is_zero() {
        return Err(CliError::from_core(Error::ZeroPolynomial));
    }
    let s = conjecture_sweep(&f, &p, cfg.trials, cfg.seed, &cfg.tolerances)?;
    let report = StrongPickReport {
        gate: gate_name(s.gate.verdict).to_string(),
        f_degree: [s.gate.f_degree.0, s.gate.f_degree.1],
        p_degree: [s.gate.p_degree.0, s.gate.p_degree.1],
        applicable: s
            .gate
            .applicable
            .iter()
            .map(|c| {
                match c {
                    Criterion::MonomialCertificate => "MonomialCertificate",
                    Criterion::RegularInner => "RegularInner",
                }
                .to_string()
            })
            .collect(),
        monomial: s.monomial.as_ref().map(monomial_dto),
        orthogonality_max: s.orthogonality_max.and_then(finite),
        szego: s.szego.map(|t| TallyDto {
            trials: t.trials,
            unique: t.unique,
            inconclusive: t.inconclusive,
            unsolvable: t.unsolvable,
            failed: t.failed,
        }),
        assumptions: vec![P_IRREDUCIBLE.to_string()],
        notes: s
            .notes
            .iter()
            .map(|n| {
                match n {
                    SweepNote::ConstantTarget => "constant f is trivially the unique solution",
                    SweepNote::NotGraph => "p is not a graph over z1; no Szego sweep",
                }
                .to_string()
            })
            .collect(),
    };
    Ok((Report::Strongpick(report), exit::OK))
}

fn intersection_dto(r: &IntersectionReport, bound: Option<BoundDto>) -> BezoutReport {
    BezoutReport {
        total: r.total,
        at_infinity: r.at_infinity,
        finite_total: r.finite_total,
        finite_points: r
            .finite_points
            .iter()
            .map(|p| PointDto {
                x: p.point.0.into(),
                y: p.point.1.into(),
                multiplicity: p.multiplicity,
            })
            .collect(),
        bound,
    }
}

fn bezout(file: BezoutFile, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    let tol = &cfg.tolerances;
    let report = match file {
        BezoutFile::Curves { p, q } => {
            intersection_dto(&intersect(&p.to_bipoly(), &q.to_bipoly(), cfg.seed, tol)?, None)
        }
        BezoutFile::Inner { f, g } => {
            let b = common_zero_bound_check(&f.to_inner()?, &g.to_inner()?, cfg.seed, tol)?;
            let bound = BoundDto {
                bound: b.bound,
                inner_infinity: b.inner_infinity,
                holds: b.intersections.finite_total <= b.bound,
            };
            intersection_dto(&b.intersections, Some(bound))
        }
    };
    Ok((Report::Bezout(report), exit::OK))
}

fn hardy(file: HardyFile, cfg: &RunConfig) -> Result<(Report, i32), CliError> {
    let (f, p) = (file.f.to_bipoly(), file.p.to_bipoly());
    let mut rng = stream(cfg.seed, streams::TEST_FUNCTIONS);
    let gs: Vec<BiPoly> = (0..cfg.trials)
        .map(|_| random_test_function(&mut rng, TEST_BIDEGREE))
        .collect();
    let (certificate, offending, orthogonality_max) = match monomial_certificate(&f, &p) {
        Ok(MonomialCertificate::Certified) => {
            let mut worst: f64 = 0.0;
            for g in &gs {
                worst = worst.max(orthogonality_check(&f, &p, g)?);
            }
            ("CERTIFIED", Vec::new(), finite(worst))
        }
        Ok(MonomialCertificate::Fail(v)) => ("FAIL", v.iter().map(|&(i, j)| [i, j]).collect(), None),
        Err(Error::NotMonomial) => ("NOT_MONOMIAL", Vec::new(), None),
        Err(e) => return Err(e.into()),
    };
    let hs = hs_condition_sample(&f, &p, &gs)?;
    let samples: Vec<SampleDto> = hs
        .samples
        .iter()
        .map(|s| SampleDto {
            lhs: finite(s.lhs),
            rhs: finite(s.rhs),
            passes: s.passes,
            degenerate: s.degenerate,
        })
        .collect();
    let report = HardyReport {
        certificate: certificate.to_string(),
        offending,
        orthogonality_max,
        verdict: match hs.verdict {
            HsVerdict::Supported => "SUPPORTED",
            HsVerdict::Violated => "VIOLATED",
        }
        .to_string(),
        trials: cfg.trials,
        failures: samples.iter().filter(|s| !s.degenerate && !s.passes).count(),
        note: "finitely many sampled g cannot prove the inequality for every g".to_string(),
        samples,
    };
    let code = if hs.verdict == HsVerdict::Violated {
        exit::HYPOTHESIS_VIOLATED
    } else {
        exit::OK
    };
    Ok((Report::Hardy(report), code))
}
