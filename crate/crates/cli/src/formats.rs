//! JSON input formats.
//!
//! Complex numbers are `{"re": x, "im": y}` objects. Polynomials are
//! `{"terms": [{"i": 1, "j": 0, "re": 1.0, "im": 0.0}, ...]}`; a term without
//! `j` belongs to a polynomial in one variable.

use pickset_core::agler::PickProblem2D;
use pickset_core::pick1d::PickProblem1D;
use pickset_core::poly::{make_rational_inner, BiPoly, Blaschke, RationalInner, UniPoly};
use pickset_core::{CMatrix, Cplx, HermitianMatrix};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDto {
    pub re: f64,
    pub im: f64,
}

impl From<Cplx> for ComplexDto {
    fn from(z: Cplx) -> Self {
        ComplexDto { re: z.re, im: z.im }
    }
}

impl From<ComplexDto> for Cplx {
    fn from(z: ComplexDto) -> Self {
        Cplx::new(z.re, z.im)
    }
}

pub fn cplx_vec(v: &[Cplx]) -> Vec<ComplexDto> {
    v.iter().map(|z| (*z).into()).collect()
}

/// Row-major complex matrix.
pub type MatrixDto = Vec<Vec<ComplexDto>>;

pub fn matrix_dto(m: &CMatrix) -> MatrixDto {
    m.to_rows().iter().map(|r| cplx_vec(r)).collect()
}

pub fn herm_dto(h: &HermitianMatrix) -> MatrixDto {
    matrix_dto(h.as_matrix())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDto {
    pub i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDto {
    pub terms: Vec<TermDto>,
}

impl PolyDto {
    pub fn to_bipoly(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|t| ((t.i, t.j.unwrap_or(0)), Cplx::new(t.re, t.im))),
        )
    }

    pub fn to_unipoly(&self) -> Result<UniPoly, CliError> {
        if self.terms.iter().any(|t| t.j.is_some_and(|j| j > 0)) {
            return Err(CliError::parse("univariate polynomial has a term with j > 0"));
        }
        let n = self.terms.iter().map(|t| t.i).max().unwrap_or(0);
        let mut c = vec![Cplx::new(0.0, 0.0); n + 1];
        for t in &self.terms {
            c[t.i] += Cplx::new(t.re, t.im);
        }
        Ok(UniPoly::new(c))
    }
}

impl From<&BiPoly> for PolyDto {
    fn from(p: &BiPoly) -> Self {
        PolyDto {
            terms: p
                .terms()
                .map(|((i, j), v)| TermDto {
                    i,
                    j: Some(j),
                    re: v.re,
                    im: v.im,
                })
                .collect(),
        }
    }
}

impl From<&UniPoly> for PolyDto {
    fn from(p: &UniPoly) -> Self {
        PolyDto {
            terms: p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, v)| v.norm() > 0.0)
                .map(|(i, v)| TermDto {
                    i,
                    j: None,
                    re: v.re,
                    im: v.im,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlaschkeDto {
    pub unimodular: ComplexDto,
    pub zeros: Vec<ComplexDto>,
}

impl BlaschkeDto {
    pub fn to_blaschke(&self) -> Result<Blaschke, CliError> {
        Blaschke::new(self.unimodular.into(), self.zeros.iter().map(|z| (*z).into()).collect())
            .map_err(CliError::invalid)
    }
}

impl From<&Blaschke> for BlaschkeDto {
    fn from(m: &Blaschke) -> Self {
        BlaschkeDto {
            unimodular: m.unimodular().into(),
            zeros: cplx_vec(m.zeros()),
        }
    }
}

/// A rational inner function: `reflect(p) / p` from a stable `p`, an explicit
/// fraction, a Blaschke product in `z1`, or a polynomial that is inner on its
/// own (a monomial with a unimodular coefficient).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InnerDto {
    Stable { stable: PolyDto },
    Fraction { numerator: PolyDto, denominator: PolyDto },
    Blaschke { blaschke: BlaschkeDto },
    Polynomial { polynomial: PolyDto },
}

impl InnerDto {
    pub fn to_inner(&self) -> Result<RationalInner, CliError> {
        let r = match self {
            InnerDto::Stable { stable } => make_rational_inner(&stable.to_bipoly()),
            InnerDto::Fraction { numerator, denominator } => {
                RationalInner::new(numerator.to_bipoly(), denominator.to_bipoly())
            }
            InnerDto::Blaschke { blaschke } => RationalInner::from_blaschke(&blaschke.to_blaschke()?),
            InnerDto::Polynomial { polynomial } => RationalInner::new(polynomial.to_bipoly(), BiPoly::one()),
        };
        r.map_err(CliError::from_core)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem1dFile {
    pub nodes: Vec<ComplexDto>,
    pub targets: Vec<ComplexDto>,
}

impl Problem1dFile {
    pub fn to_problem(&self) -> Result<PickProblem1D, CliError> {
        PickProblem1D::new(
            self.nodes.iter().map(|z| (*z).into()).collect(),
            self.targets.iter().map(|z| (*z).into()).collect(),
        )
        .map_err(CliError::invalid)
    }
}

pub type NodeDto = [ComplexDto; 2];

pub fn node_dtos(nodes: &[(Cplx, Cplx)]) -> Vec<NodeDto> {
    nodes.iter().map(|(a, b)| [(*a).into(), (*b).into()]).collect()
}

fn nodes_from(nodes: &[NodeDto]) -> Vec<(Cplx, Cplx)> {
    nodes.iter().map(|[a, b]| ((*a).into(), (*b).into())).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem2dFile {
    pub nodes: Vec<NodeDto>,
    pub targets: Vec<ComplexDto>,
}

impl Problem2dFile {
    pub fn to_problem(&self) -> Result<PickProblem2D, CliError> {
        PickProblem2D::new(
            nodes_from(&self.nodes),
            self.targets.iter().map(|z| (*z).into()).collect(),
        )
        .map_err(CliError::invalid)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyFile {
    pub f: InnerDto,
    pub nodes: Vec<NodeDto>,
}

impl ClassifyFile {
    pub fn nodes(&self) -> Vec<(Cplx, Cplx)> {
        nodes_from(&self.nodes)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StrongPickFile {
    pub f: InnerDto,
    pub p: PolyDto,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BezoutFile {
    Curves { p: PolyDto, q: PolyDto },
    Inner { f: InnerDto, g: InnerDto },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardyFile {
    /// A polynomial; the certificate path needs a monomial.
    pub f: PolyDto,
    pub p: PolyDto,
}

pub type HintsFile = Vec<BlaschkeDto>;
