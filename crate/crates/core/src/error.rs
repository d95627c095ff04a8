use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An iterative method ran out of budget.
    NonConvergence {
        what: &'static str,
        iterations: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Entrywise division hit an entry with modulus below `1e-12`.
    NearZeroDenominator {
        row: usize,
        col: usize,
    },
    /// A null vector was requested from a matrix that is not singular PSD.
    NotSingular {
        lambda_min: f64,
    },
    TrivialNullSpace,
    /// Root finding on a constant polynomial.
    DegreeZero,
    ZeroPolynomial,
    /// A polynomial has degree zero in the variable being eliminated.
    DegenerateElimination,
    /// A polynomial vanishes on or near the closed bidisk.
    NotStable {
        min_modulus: f64,
    },
    NotInner(&'static str),
    InvalidProblem(&'static str),
    Precondition(&'static str),
    /// A problem was required to be solvable and is not.
    Unsolvable,
    InterpolationFailed {
        residual: f64,
    },
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    NotMonomial,
    /// The inputs share a curve component.
    CommonFactor,
    ShearRetriesExhausted,
    /// A finite intersection count exceeded the inner-function bound.
    BoundViolated {
        finite: usize,
        bound: usize,
    },
    /// The rank of `W / Lambda^1` is not `N - 1`.
    ExtremalMinimalViolated {
        rank: usize,
        expected: usize,
    },
    IndefiniteInput(&'static str),
    /// An internal cross-check failed; never reported as a positive verdict.
    InternalCheck(&'static str),
    SamplingExhausted,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonConvergence { what, iterations } => {
                write!(f, "{what} did not converge after {iterations} iterations")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NearZeroDenominator { row, col } => {
                write!(f, "near-zero denominator at entry ({row}, {col})")
            }
            Error::NotSingular { lambda_min } => {
                write!(
                    f,
                    "matrix is not singular positive semidefinite (lambda_min = {lambda_min:e})"
                )
            }
            Error::TrivialNullSpace => f.write_str("null space is trivial"),
            Error::DegreeZero => f.write_str("polynomial has degree zero"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::DegenerateElimination => f.write_str("polynomial has degree zero in the eliminated variable"),
            Error::NotStable { min_modulus } => write!(
                f,
                "polynomial vanishes on or near the closed bidisk (min modulus {min_modulus:e})"
            ),
            Error::NotInner(why) => write!(f, "not a rational inner function: {why}"),
            Error::InvalidProblem(why) => write!(f, "invalid problem: {why}"),
            Error::Precondition(why) => write!(f, "precondition failed: {why}"),
            Error::Unsolvable => f.write_str("problem is not solvable"),
            Error::InterpolationFailed { residual } => {
                write!(f, "interpolation residual {residual:e} exceeds tolerance")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotMonomial => f.write_str("function is not a monomial"),
            Error::CommonFactor => f.write_str("polynomials share a common factor"),
            Error::ShearRetriesExhausted => f.write_str("no generic shear found for intersection computation"),
            Error::BoundViolated { finite, bound } => write!(
                f,
                "finite intersection count {finite} exceeds bound {bound} (numerical failure)"
            ),
            Error::ExtremalMinimalViolated { rank, expected } => write!(
                f,
                "extremal-minimal hypothesis violated: rank {rank}, expected {expected}"
            ),
            Error::IndefiniteInput(what) => write!(f, "{what} is indefinite"),
            Error::InternalCheck(what) => write!(f, "internal check failed: {what}"),
            Error::SamplingExhausted => f.write_str("rejection sampling exhausted"),
        }
    }
}

impl core::error::Error for Error {}
