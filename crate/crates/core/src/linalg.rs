//! Dense complex linear algebra for small Hermitian problems.
//!
//! Every matrix handled by the Pick machinery is Hermitian and small (a few
//! dozen rows at most), so the eigensolver is a cyclic complex Jacobi sweep:
//! slow asymptotically, but deterministic and accurate to working precision.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, Tolerances};

pub type Cplx = num_complex::Complex64;

pub const ZERO: Cplx = Cplx::new(0.0, 0.0);
pub const ONE: Cplx = Cplx::new(1.0, 0.0);

/// Threshold below which an entry of a divisor matrix is treated as zero.
const QUOTIENT_FLOOR: f64 = 1e-12;

/// A general dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Cplx>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cplx) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<Cplx>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(CMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Cplx> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn conj_transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        Ok(CMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self[(i, k)] * other[(k, j)]).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[Cplx]) -> Result<Vec<Cplx>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|k| self[(i, k)] * v[k]).sum())
            .collect())
    }

    /// Row-major copy of the entries.
    pub fn to_rows(&self) -> Vec<Vec<Cplx>> {
        self.data.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect()
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Cplx;

    fn index(&self, (i, j): (usize, usize)) -> &Cplx {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cplx {
        &mut self.data[i * self.cols + j]
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &CMatrix) -> Result<Cplx> {
    if m.rows != m.cols {
        return Err(Error::DimensionMismatch {
            expected: m.rows,
            found: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = ONE;
    for k in 0..n {
        let (piv, mag) = (k..n)
            .map(|i| (i, a[(i, k)].norm()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if mag == 0.0 {
            return Ok(ZERO);
        }
        if piv != k {
            for j in 0..n {
                let t = a[(k, j)];
                a[(k, j)] = a[(piv, j)];
                a[(piv, j)] = t;
            }
            det = -det;
        }
        let pivot = a[(k, k)];
        det *= pivot;
        for i in k + 1..n {
            let factor = a[(i, k)] / pivot;
            if factor == ZERO {
                continue;
            }
            for j in k + 1..n {
                let t = a[(k, j)];
                a[(i, j)] -= factor * t;
            }
        }
    }
    Ok(det)
}

/// A complex Hermitian matrix stored in full.
///
/// Hermitian symmetry is exact: construction averages the input with its
/// conjugate transpose and zeroes the imaginary part of the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: CMatrix,
}

impl HermitianMatrix {
    /// Symmetrizes `m` as `(m + m*) / 2`.
    pub fn from_matrix(m: &CMatrix) -> Result<Self> {
        if m.rows != m.cols {
            return Err(Error::DimensionMismatch {
                expected: m.rows,
                found: m.cols,
            });
        }
        if m.rows == 0 {
            return Err(Error::Precondition("Hermitian matrix must have positive dimension"));
        }
        if m.data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Precondition("matrix entries must be finite"));
        }
        let n = m.rows;
        let inner = CMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Cplx::new(m[(i, i)].re, 0.0)
            } else if i < j {
                (m[(i, j)] + m[(j, i)].conj()) * 0.5
            } else {
                (m[(j, i)] + m[(i, j)].conj()).conj() * 0.5
            }
        });
        Ok(HermitianMatrix { inner })
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize, usize) -> Cplx) -> Result<Self> {
        Self::from_matrix(&CMatrix::from_fn(n, n, f))
    }

    pub fn identity(n: usize) -> Self {
        HermitianMatrix {
            inner: CMatrix::identity(n),
        }
    }

    /// The all-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        HermitianMatrix {
            inner: CMatrix::from_fn(n, n, |_, _| ONE),
        }
    }

    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            inner: CMatrix::zeros(n, n),
        }
    }

    pub fn diagonal(d: &[f64]) -> Result<Self> {
        Self::from_fn(d.len(), |i, j| if i == j { Cplx::new(d[i], 0.0) } else { ZERO })
    }

    /// The rank-one matrix `v ⊗ v` with entries `v_i conj(v_j)`.
    pub fn outer(v: &[Cplx]) -> Result<Self> {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.inner.rows
    }

    pub fn as_matrix(&self) -> &CMatrix {
        &self.inner
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }

    /// `max(1, ||H||_F)`, the scale used by all relative thresholds.
    pub fn threshold_scale(&self) -> f64 {
        self.frobenius_norm().max(1.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        HermitianMatrix {
            inner: CMatrix::from_fn(self.dim(), self.dim(), |i, j| self[(i, j)] * s),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Self::from_fn(self.dim(), |i, j| self[(i, j)] + other[(i, j)])
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Self::from_fn(self.dim(), |i, j| self[(i, j)] - other[(i, j)])
    }

    /// Principal submatrix keeping the listed indices.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<Self> {
        Self::from_fn(keep.len(), |i, j| self[(keep[i], keep[j])])
    }

    pub fn mul_vec(&self, v: &[Cplx]) -> Result<Vec<Cplx>> {
        self.inner.mul_vec(v)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        }
    }

    pub fn eigen(&self) -> Result<EigenDecomposition> {
        herm_eigen(self)
    }
}

impl Index<(usize, usize)> for HermitianMatrix {
    type Output = Cplx;

    fn index(&self, idx: (usize, usize)) -> &Cplx {
        &self.inner[idx]
    }
}

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl EigenDecomposition {
    pub fn vector(&self, k: usize) -> Vec<Cplx> {
        self.vectors.column(k)
    }

    /// `V diag(values) V*`.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.values.len();
        CMatrix::from_fn(n, n, |i, j| {
            (0..n)
                .map(|k| self.vectors[(i, k)] * self.values[k] * self.vectors[(j, k)].conj())
                .sum()
        })
    }
}

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// Sweeps visit pairs `(p, q)` in row order. Each rotation first removes the
/// phase of `a_pq` and then applies the real symmetric Jacobi rotation, so
/// the result is a pure function of the input. Fails after `100 N^2`
/// rotations.
pub fn herm_eigen(h: &HermitianMatrix) -> Result<EigenDecomposition> {
    let n = h.dim();
    let mut a = h.inner.clone();
    let mut v = CMatrix::identity(n);
    jacobi(&mut a, &mut v, h.frobenius_norm())?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition { values, vectors })
}

/// Sweeps until the off-diagonal mass of `a` is below `4 eps norm`,
/// accumulating the rotations into `v`.
fn jacobi(a: &mut CMatrix, v: &mut CMatrix, norm: f64) -> Result<()> {
    let n = a.rows;
    if !(norm > 0.0) {
        return Ok(());
    }
    let budget = 100 * n * n;
    let mut rotations = 0usize;
    let target = 4.0 * f64::EPSILON * norm;
    loop {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| 2.0 * a[(p, q)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if off <= target {
            return Ok(());
        }
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let beta = apq.norm();
                if beta <= f64::MIN_POSITIVE * norm {
                    continue;
                }
                rotations += 1;
                if rotations > budget {
                    return Err(Error::NonConvergence {
                        what: "Hermitian Jacobi eigensolver",
                        iterations: rotations - 1,
                    });
                }
                rotated = true;
                rotate(a, v, p, q, apq / beta, beta);
            }
        }
        if !rotated {
            return Ok(());
        }
    }
}

/// Eigenvalues of the Hermitian `h`, starting the sweeps from the unitary
/// `basis`, which is overwritten with the eigenvectors (unsorted, matching
/// the returned values). Converges in a sweep or two when `basis` nearly
/// diagonalizes `h`.
pub(crate) fn herm_eigen_from(h: &CMatrix, basis: &mut CMatrix) -> Result<Vec<f64>> {
    let n = h.rows;
    let mut a = CMatrix::zeros(n, n);
    let mut hv = CMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            hv[(i, j)] = (0..n).map(|k| h[(i, k)] * basis[(k, j)]).sum();
        }
    }
    for i in 0..n {
        for j in i..n {
            let z: Cplx = (0..n).map(|k| basis[(k, i)].conj() * hv[(k, j)]).sum();
            if i == j {
                a[(i, i)] = Cplx::new(z.re, 0.0);
            } else {
                a[(i, j)] = z;
                a[(j, i)] = z.conj();
            }
        }
    }
    jacobi(&mut a, basis, h.frobenius_norm())?;
    Ok((0..n).map(|i| a[(i, i)].re).collect())
}

/// Whether `h + shift I` admits a Cholesky factorization.
pub(crate) fn cholesky_succeeds(h: &CMatrix, shift: f64) -> bool {
    let n = h.rows;
    let mut l = CMatrix::zeros(n, n);
    for j in 0..n {
        let d = h[(j, j)].re + shift - (0..j).map(|k| l[(j, k)].norm_sqr()).sum::<f64>();
        if !(d > 0.0) {
            return false;
        }
        let djj = d.sqrt();
        l[(j, j)] = Cplx::new(djj, 0.0);
        for i in j + 1..n {
            let s = h[(i, j)] - (0..j).map(|k| l[(i, k)] * l[(j, k)].conj()).sum::<Cplx>();
            l[(i, j)] = s / djj;
        }
    }
    true
}

/// One Jacobi rotation annihilating `a[p][q]`, where `a[p][q] = beta * phase`.
fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize, phase: Cplx, beta: f64) {
    let n = a.rows;
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;
    let theta = (gamma - alpha) / (2.0 * beta);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let sp = phase.conj() * s;
    let cp = phase.conj() * c;

    // A <- A G, V <- V G with G = [[c, s], [-s conj(e), c conj(e)]] on (p, q).
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * c - akq * sp;
        a[(k, q)] = akp * s + akq * cp;
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * c - vkq * sp;
        v[(k, q)] = vkp * s + vkq * cp;
    }
    // A <- G* A.
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = apk * c - aqk * sp.conj();
        a[(q, k)] = apk * s + aqk * cp.conj();
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Cplx::new(alpha - t * beta, 0.0);
    a[(q, q)] = Cplx::new(gamma + t * beta, 0.0);
}

/// Definiteness classification of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PsdStatus {
    PositiveDefinite,
    /// Positive semidefinite with an eigenvalue indistinguishable from zero.
    PsdSingular,
    Indefinite,
}

/// Result of [`psd_status`]: the class, the smallest eigenvalue, and the scale
/// `max(1, ||H||_F)` the threshold was measured against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Definiteness {
    pub status: PsdStatus,
    pub lambda_min: f64,
    pub scale: f64,
}

impl Definiteness {
    pub fn is_psd(&self) -> bool {
        self.status != PsdStatus::Indefinite
    }
}

pub fn psd_status(h: &HermitianMatrix, tol: &Tolerances) -> Result<Definiteness> {
    let eig = herm_eigen(h)?;
    Ok(classify_definiteness(eig.values[0], h.threshold_scale(), tol))
}

pub(crate) fn classify_definiteness(lambda_min: f64, scale: f64, tol: &Tolerances) -> Definiteness {
    let thr = tol.psd_tol * scale;
    let status = if lambda_min > thr {
        PsdStatus::PositiveDefinite
    } else if lambda_min < -thr {
        PsdStatus::Indefinite
    } else {
        PsdStatus::PsdSingular
    };
    Definiteness {
        status,
        lambda_min,
        scale,
    }
}

/// Number of eigenvalues with modulus above `rank_tol * max(1, ||H||_F)`.
pub fn numeric_rank(h: &HermitianMatrix, tol: &Tolerances) -> Result<usize> {
    let eig = herm_eigen(h)?;
    let thr = tol.rank_tol * h.threshold_scale();
    Ok(eig.values.iter().filter(|l| l.abs() > thr).count())
}

/// Unit eigenvector of the smallest eigenvalue of a singular PSD matrix.
///
/// The phase is fixed so the largest-modulus component is real and positive.
pub fn null_vector(h: &HermitianMatrix, tol: &Tolerances) -> Result<Vec<Cplx>> {
    let eig = herm_eigen(h)?;
    let def = classify_definiteness(eig.values[0], h.threshold_scale(), tol);
    if def.status != PsdStatus::PsdSingular {
        return Err(Error::NotSingular {
            lambda_min: def.lambda_min,
        });
    }
    Ok(normalize_phase(eig.vector(0)))
}

pub(crate) fn normalize_phase(mut v: Vec<Cplx>) -> Vec<Cplx> {
    let mut best = 0;
    for (i, z) in v.iter().enumerate() {
        if z.norm() > v[best].norm() * (1.0 + 1e-12) {
            best = i;
        }
    }
    let m = v[best].norm();
    if m > 0.0 {
        let rot = v[best].conj() / m;
        for z in &mut v {
            *z *= rot;
        }
    }
    v
}

/// Entrywise (Schur / Hadamard) product.
pub fn schur_product(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix> {
    a.check_dim(b)?;
    HermitianMatrix::from_fn(a.dim(), |i, j| a[(i, j)] * b[(i, j)])
}

/// Entrywise quotient `a_ij / b_ij`; every `|b_ij|` must exceed `1e-12`.
pub fn entrywise_quotient(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<HermitianMatrix> {
    a.check_dim(b)?;
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            if b[(i, j)].norm() <= QUOTIENT_FLOOR {
                return Err(Error::NearZeroDenominator { row: i, col: j });
            }
        }
    }
    HermitianMatrix::from_fn(n, |i, j| a[(i, j)] / b[(i, j)])
}

/// Orthonormal basis of `{v : M v = 0}` from the eigenvectors of `M* M`.
///
/// A Gram eigenvector is kept when its singular value is at most
/// `10 rank_tol ||M||_F`. The zero matrix yields the standard basis.
pub fn complex_null_space(m: &CMatrix, tol: &Tolerances) -> Result<Vec<Vec<Cplx>>> {
    let n = m.cols();
    if n == 0 {
        return Err(Error::TrivialNullSpace);
    }
    let norm = m.frobenius_norm();
    if norm == 0.0 {
        return Ok((0..n)
            .map(|k| (0..n).map(|i| if i == k { ONE } else { ZERO }).collect())
            .collect());
    }
    let gram = HermitianMatrix::from_matrix(&m.conj_transpose().mul(m)?)?;
    let eig = herm_eigen(&gram)?;
    let thr = 10.0 * tol.rank_tol * norm;
    let basis: Vec<Vec<Cplx>> = eig
        .values
        .iter()
        .enumerate()
        .filter(|(_, l)| l.max(0.0).sqrt() <= thr)
        .map(|(k, _)| normalize_phase(eig.vector(k)))
        .collect();
    if basis.is_empty() {
        Err(Error::TrivialNullSpace)
    } else {
        Ok(basis)
    }
}

pub fn vec_norm(v: &[Cplx]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    fn real_sym(rows: &[&[f64]]) -> HermitianMatrix {
        HermitianMatrix::from_fn(rows.len(), |i, j| c(rows[i][j])).unwrap()
    }

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn eigen_identity_and_diagonal() {
        let e = herm_eigen(&HermitianMatrix::identity(2)).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0]);
        let e = herm_eigen(&HermitianMatrix::diagonal(&[2.0, 1.0]).unwrap()).unwrap();
        assert_eq!(e.values, vec![1.0, 2.0]);
    }

    #[test]
    fn eigen_all_ones() {
        // characteristic polynomial l^2 - 2l
        let e = herm_eigen(&HermitianMatrix::ones(2)).unwrap();
        assert_close(e.values[0], 0.0, 1e-15);
        assert_close(e.values[1], 2.0, 1e-15);
    }

    #[test]
    fn eigen_complex_entries_reconstruct() {
        let h = HermitianMatrix::from_fn(3, |i, j| match (i, j) {
            (0, 0) => c(2.0),
            (1, 1) => c(-1.0),
            (2, 2) => c(0.5),
            (0, 1) => Cplx::new(0.3, -0.7),
            (1, 0) => Cplx::new(0.3, 0.7),
            (0, 2) => Cplx::new(0.0, 1.1),
            (2, 0) => Cplx::new(0.0, -1.1),
            (1, 2) => Cplx::new(-0.2, 0.25),
            _ => Cplx::new(-0.2, -0.25),
        })
        .unwrap();
        let e = herm_eigen(&h).unwrap();
        let r = e.reconstruct();
        let diff = CMatrix::from_fn(3, 3, |i, j| r[(i, j)] - h[(i, j)]);
        assert!(diff.frobenius_norm() < 1e-13);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn hermitian_construction_averages() {
        let m = CMatrix::from_rows(&[
            vec![Cplx::new(1.0, 5.0), Cplx::new(2.0, 1.0)],
            vec![Cplx::new(4.0, 1.0), c(3.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::from_matrix(&m).unwrap();
        assert_eq!(h[(0, 0)], c(1.0));
        assert_eq!(h[(0, 1)], Cplx::new(3.0, 0.0));
        assert_eq!(h[(1, 0)], h[(0, 1)].conj());
    }

    #[test]
    fn psd_examples() {
        let tol = Tolerances::default();
        let s = |h: &HermitianMatrix| psd_status(h, &tol).unwrap().status;
        assert_eq!(s(&HermitianMatrix::identity(2)), PsdStatus::PositiveDefinite);
        assert_eq!(s(&HermitianMatrix::ones(2)), PsdStatus::PsdSingular);
        assert_eq!(
            s(&HermitianMatrix::diagonal(&[1.0, -1.0]).unwrap()),
            PsdStatus::Indefinite
        );
    }

    #[test]
    fn rank_examples() {
        let tol = Tolerances::default();
        for n in 1..6 {
            assert_eq!(numeric_rank(&HermitianMatrix::ones(n), &tol).unwrap(), 1);
        }
        assert_eq!(numeric_rank(&HermitianMatrix::identity(3), &tol).unwrap(), 3);
        // det = 1/4
        assert_eq!(numeric_rank(&real_sym(&[&[1.0, 1.0], &[1.0, 1.25]]), &tol).unwrap(), 2);
    }

    #[test]
    fn null_vector_examples() {
        let tol = Tolerances::default();
        let v = null_vector(&HermitianMatrix::ones(2), &tol).unwrap();
        let r = core::f64::consts::FRAC_1_SQRT_2;
        assert!((v[0] - c(r)).norm() < 1e-12 && (v[1] + c(r)).norm() < 1e-12, "{v:?}");

        let v = null_vector(&HermitianMatrix::diagonal(&[0.0, 1.0]).unwrap(), &tol).unwrap();
        assert_eq!(v, vec![c(1.0), c(0.0)]);

        let v = null_vector(&HermitianMatrix::ones(3), &tol).unwrap();
        let sum: Cplx = v.iter().sum();
        assert!(sum.norm() < 1e-12);
        assert!((vec_norm(&v) - 1.0).abs() < 1e-12);

        assert!(matches!(
            null_vector(&HermitianMatrix::identity(2), &tol),
            Err(Error::NotSingular { .. })
        ));
    }

    #[test]
    fn schur_product_examples() {
        let a = real_sym(&[&[1.0, 1.0], &[1.0, 1.25]]);
        assert_eq!(schur_product(&a, &HermitianMatrix::ones(2)).unwrap(), a);
        assert_eq!(
            schur_product(&HermitianMatrix::identity(2), &a).unwrap(),
            HermitianMatrix::diagonal(&[1.0, 1.25]).unwrap()
        );
        let b = real_sym(&[&[1.0, 1.0], &[1.0, 4.0 / 3.0]]);
        let p = schur_product(&a, &b).unwrap();
        assert_close(p[(1, 1)].re, 5.0 / 3.0, 1e-15);
        assert!(schur_product(&a, &HermitianMatrix::ones(3)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let a = real_sym(&[&[1.0, 0.5], &[0.5, 2.0]]);
        assert_eq!(entrywise_quotient(&a, &a).unwrap(), HermitianMatrix::ones(2));
        let twos = HermitianMatrix::ones(2).scale(2.0);
        assert_eq!(
            entrywise_quotient(&HermitianMatrix::ones(2), &twos).unwrap(),
            HermitianMatrix::ones(2).scale(0.5)
        );
        // Lambda^2 / Lambda^1 for nodes (0,0), (1/2, 1/4)
        let l1 = real_sym(&[&[1.0, 1.0], &[1.0, 0.75]]);
        let l2 = real_sym(&[&[1.0, 1.0], &[1.0, 15.0 / 16.0]]);
        let q = entrywise_quotient(&l2, &l1).unwrap();
        assert_close(q[(1, 1)].re, 1.25, 1e-15);
        assert_eq!(q[(0, 1)], c(1.0));
        assert!(matches!(
            entrywise_quotient(&l1, &HermitianMatrix::diagonal(&[1.0, 1.0]).unwrap()),
            Err(Error::NearZeroDenominator { row: 0, col: 1 })
        ));
    }

    #[test]
    fn null_space_examples() {
        let tol = Tolerances::default();
        let m = CMatrix::from_rows(&[vec![c(1.0), c(-1.0)]]).unwrap();
        let b = complex_null_space(&m, &tol).unwrap();
        assert_eq!(b.len(), 1);
        let r = core::f64::consts::FRAC_1_SQRT_2;
        assert!((b[0][0] - c(r)).norm() < 1e-12 && (b[0][1] - c(r)).norm() < 1e-12);

        let b = complex_null_space(&CMatrix::zeros(2, 3), &tol).unwrap();
        assert_eq!(b.len(), 3);

        let m = CMatrix::from_rows(&[vec![c(1.0), c(0.0), c(0.0)]]).unwrap();
        let b = complex_null_space(&m, &tol).unwrap();
        assert_eq!(b.len(), 2);
        for v in &b {
            assert!(v[0].norm() < 1e-12);
            assert!((vec_norm(v) - 1.0).abs() < 1e-12);
        }

        assert_eq!(
            complex_null_space(&CMatrix::identity(2), &tol),
            Err(Error::TrivialNullSpace)
        );
    }

    #[test]
    fn determinant_small() {
        let m = CMatrix::from_rows(&[
            vec![c(0.0), c(2.0), c(1.0)],
            vec![c(1.0), c(0.0), c(0.0)],
            vec![c(0.0), c(1.0), Cplx::new(0.0, 1.0)],
        ])
        .unwrap();
        // expand along the second row: -1 * (2i - 1)
        let d = determinant(&m).unwrap();
        assert!((d - Cplx::new(1.0, -2.0)).norm() < 1e-15);
    }
}
