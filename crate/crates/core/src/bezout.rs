//! Intersection counts for plane curves attached to rational inner functions.
//!
//! Finite intersections come from the roots of `Res_y` after a random shear
//! `(x, y) -> (x + t y, y)`, which puts distinct points on distinct vertical
//! lines and makes resultant-root multiplicity equal intersection
//! multiplicity. Intersections at infinity come from a second resultant in
//! the affine chart `X' = 1` of a sheared projective frame, where the line at
//! infinity is `z = 0` and its points are counted by the vanishing order of
//! the resultant at `z = 0`.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::ONE;
use crate::poly::{coprime, homogenize, sylvester_resultant, BiPoly, ProjPoly, RationalInner, UniPoly, Variable};
use crate::rng::{stream, streams, uniform_disk};
use crate::{Cplx, Error, Result, Tolerances};

/// Shears tried before giving up.
pub const SHEAR_ATTEMPTS: usize = 5;
/// Residual bound for returned points, relative to the coefficient scale.
pub const POINT_RESIDUAL: f64 = 1e-6;
/// `y`-candidates closer than this (relative) are the same point.
const SAME_POINT: f64 = 1e-3;
/// A leading coefficient below this (relative) means the shear is not generic.
const GENERIC_LEAD: f64 = 1e-6;
/// Low resultant coefficients below this (relative) count as zero.
const VANISHING: f64 = 1e-9;
/// Points with a coordinate this close to the unit circle are flagged.
pub const BOUNDARY_BAND: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntersectionPoint {
    pub point: (Cplx, Cplx),
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionReport {
    /// Product of the total degrees.
    pub total: usize,
    pub at_infinity: usize,
    pub finite_points: Vec<IntersectionPoint>,
    pub finite_total: usize,
}

/// `deg P * deg Q` for coprime curves.
pub fn bezout_total(p: &ProjPoly, q: &ProjPoly) -> Result<usize> {
    if !coprime(&p.dehomogenize(), &q.dehomogenize()) {
        return Err(Error::CommonFactor);
    }
    Ok(p.degree() * q.degree())
}

/// `d1 e1 + d2 e2` for numerators of bidegrees `(d1, d2)` and `(e1, e2)`
/// carrying their top monomials `z1^d1 z2^d2` and `z1^e1 z2^e2`.
pub fn inner_infinity_count(q: &BiPoly, r: &BiPoly) -> Result<usize> {
    let (d, e) = (q.bidegree(), r.bidegree());
    if q.coeff(d.0, d.1).norm() < GENERIC_LEAD * q.max_coeff()
        || r.coeff(e.0, e.1).norm() < GENERIC_LEAD * r.max_coeff()
    {
        return Err(Error::NotInner("leading monomial z1^d1 z2^d2 absent"));
    }
    Ok(d.0 * e.0 + d.1 * e.1)
}

fn check_pair(p: &BiPoly, q: &BiPoly) -> Result<bool> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !coprime(p, q) {
        return Err(Error::CommonFactor);
    }
    Ok(p.total_degree() > 0 && q.total_degree() > 0)
}

fn sample_shear(rng: &mut crate::rng::PickRng) -> Cplx {
    let mut t = uniform_disk(rng, 1.0);
    while t.norm() < 0.1 {
        t = uniform_disk(rng, 1.0);
    }
    t
}

/// Common zeros of `p` and `q` in `C^2` with intersection multiplicities.
pub fn finite_common_zeros(p: &BiPoly, q: &BiPoly, seed: u64, tol: &Tolerances) -> Result<Vec<IntersectionPoint>> {
    if !check_pair(p, q)? {
        return Ok(Vec::new());
    }
    let mut rng = stream(seed, streams::SHEAR);
    for _ in 0..SHEAR_ATTEMPTS {
        let t = sample_shear(&mut rng);
        if let Some(points) = try_shear(p, q, t, tol)? {
            return Ok(points);
        }
    }
    Err(Error::ShearRetriesExhausted)
}

fn try_shear(p: &BiPoly, q: &BiPoly, t: Cplx, tol: &Tolerances) -> Result<Option<Vec<IntersectionPoint>>> {
    let (ps, qs) = (p.shear(t), q.shear(t));
    let (np, nq) = (p.total_degree(), q.total_degree());
    if ps.coeff(0, np).norm() < GENERIC_LEAD * ps.max_coeff() || qs.coeff(0, nq).norm() < GENERIC_LEAD * qs.max_coeff()
    {
        return Ok(None);
    }
    let res = sylvester_resultant(&ps, &qs, Variable::Z2)?;
    if res.is_zero() {
        return Err(Error::CommonFactor);
    }
    if res.degree() == Some(0) {
        return Ok(Some(Vec::new()));
    }
    let mut points = Vec::new();
    for cl in res.roots(tol)?.clusters {
        let u = cl.center;
        let fiber = UniPoly::new(ps.in_z2_at(u));
        let Ok(ys) = fiber.roots(tol) else {
            return Ok(None);
        };
        let mut common: Vec<Cplx> = Vec::new();
        for y in ys.clusters.iter().map(|c| c.center) {
            let r = qs.eval(u, y).norm() / residual_scale(&qs, u, y);
            if r <= POINT_RESIDUAL && !common.iter().any(|c| rel_dist(*c, y) <= SAME_POINT) {
                common.push(y);
            }
        }
        if common.len() != 1 {
            return Ok(None);
        }
        let y = common[0];
        let x = u + t * y;
        let ok = [p, q]
            .iter()
            .all(|f| f.eval(x, y).norm() <= POINT_RESIDUAL * residual_scale(f, x, y));
        if !ok {
            return Ok(None);
        }
        points.push(IntersectionPoint {
            point: (x, y),
            multiplicity: cl.multiplicity,
        });
    }
    Ok(Some(points))
}

/// Coefficient scale at `(max(|x|, 1), max(|y|, 1))`, so residuals near the
/// origin are not judged against vanishing monomials.
pub fn residual_scale(f: &BiPoly, x: Cplx, y: Cplx) -> f64 {
    f.coeff_scale_at(Cplx::new(x.norm().max(1.0), 0.0), Cplx::new(y.norm().max(1.0), 0.0))
}

fn rel_dist(a: Cplx, b: Cplx) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

/// Number of intersections on the line at infinity, with multiplicity.
pub fn infinity_count(p: &BiPoly, q: &BiPoly, seed: u64) -> Result<usize> {
    if !check_pair(p, q)? {
        return Ok(0);
    }
    let (hp, hq) = (homogenize(p)?, homogenize(q)?);
    let mut rng = stream(seed, streams::INFINITY_CHART);
    for _ in 0..SHEAR_ATTEMPTS {
        let s = sample_shear(&mut rng);
        let lead = |h: &ProjPoly| h.eval(s, ONE, Cplx::new(0.0, 0.0)).norm() >= GENERIC_LEAD * max_coeff(h);
        if !(lead(&hp) && lead(&hq)) {
            continue;
        }
        let (cp, cq) = (chart(&hp, s), chart(&hq, s));
        let res = sylvester_resultant(&cp, &cq, Variable::Z1)?;
        if res.is_zero() {
            return Err(Error::CommonFactor);
        }
        let c = res.coeffs();
        let vmax = c.iter().map(|v| v.norm()).fold(0.0, f64::max);
        return Ok(c.iter().take_while(|v| v.norm() <= VANISHING * vmax).count());
    }
    Err(Error::ShearRetriesExhausted)
}

fn max_coeff(h: &ProjPoly) -> f64 {
    h.terms().map(|(_, v)| v.norm()).fold(0.0, f64::max)
}

/// `P(1 + s y, y, z)` as a polynomial in `(y, z)`.
fn chart(h: &ProjPoly, s: Cplx) -> BiPoly {
    let one_sy = BiPoly::from_terms([((0, 0), ONE), ((1, 0), s)]);
    let mut out = BiPoly::zero();
    for ((a, b, c), v) in h.terms() {
        let mono = BiPoly::monomial(b, c, v);
        out = out.add(&one_sy.pow(a as u32).mul(&mono));
    }
    out
}

/// Finite and infinite intersections of the curves `p = 0` and `q = 0`.
pub fn intersect(p: &BiPoly, q: &BiPoly, seed: u64, tol: &Tolerances) -> Result<IntersectionReport> {
    let total = bezout_total(&homogenize(p)?, &homogenize(q)?)?;
    let finite_points = finite_common_zeros(p, q, seed, tol)?;
    let finite_total = finite_points.iter().map(|pt| pt.multiplicity).sum();
    let at_infinity = infinity_count(p, q, seed)?;
    Ok(IntersectionReport {
        total,
        at_infinity,
        finite_points,
        finite_total,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub intersections: IntersectionReport,
    /// `d1 e2 + d2 e1`.
    pub bound: usize,
    /// `d1 e1 + d2 e2`.
    pub inner_infinity: usize,
}

/// Counts the finite common zeros of the numerators of `f` and `g` and checks
/// them against `d1 e2 + d2 e1`. Exceeding the bound is an error.
pub fn common_zero_bound_check(
    f: &RationalInner,
    g: &RationalInner,
    seed: u64,
    tol: &Tolerances,
) -> Result<BoundReport> {
    let (q, r) = (f.numerator(), g.numerator());
    let intersections = intersect(q, r, seed, tol)?;
    let (d, e) = (f.bidegree(), g.bidegree());
    let bound = d.0 * e.1 + d.1 * e.0;
    let inner_infinity = inner_infinity_count(q, r)?;
    if intersections.finite_total > bound {
        return Err(Error::BoundViolated {
            finite: intersections.finite_total,
            bound,
        });
    }
    if intersections.finite_total + intersections.at_infinity > intersections.total {
        return Err(Error::InternalCheck("more intersections than the Bezout total"));
    }
    Ok(BoundReport {
        intersections,
        bound,
        inner_infinity,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Bidisk,
    All,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VarietyZeros {
    /// Zeros counted with multiplicity.
    pub count: usize,
    pub points: Vec<IntersectionPoint>,
    /// Points with a coordinate within `BOUNDARY_BAND` of the unit circle.
    pub near_boundary: usize,
    /// `d1 n2 + d2 n1`, the count expected when `p` is inner.
    pub formula: usize,
}

/// Zeros of `f` on `Z_p`, with multiplicity.
pub fn zeros_on_variety(
    f: &RationalInner,
    p: &BiPoly,
    domain: Domain,
    seed: u64,
    tol: &Tolerances,
) -> Result<VarietyZeros> {
    let all = finite_common_zeros(f.numerator(), p, seed, tol)?;
    let inside = |z: Cplx| z.norm() < 1.0;
    let points: Vec<IntersectionPoint> = all
        .into_iter()
        .filter(|pt| domain == Domain::All || (inside(pt.point.0) && inside(pt.point.1)))
        .collect();
    let near = |z: Cplx| (z.norm() - 1.0).abs() < BOUNDARY_BAND;
    let near_boundary = points.iter().filter(|pt| near(pt.point.0) || near(pt.point.1)).count();
    let ((d1, d2), (n1, n2)) = (f.bidegree(), p.bidegree());
    Ok(VarietyZeros {
        count: points.iter().map(|pt| pt.multiplicity).sum(),
        points,
        near_boundary,
        formula: d1 * n2 + d2 * n1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{graph_poly, make_rational_inner, Blaschke};

    fn c(re: f64) -> Cplx {
        Cplx::new(re, 0.0)
    }

    fn bp(terms: &[((usize, usize), f64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|(k, v)| (*k, c(*v))))
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn bezout_totals() {
        let conic = homogenize(&bp(&[((2, 0), 1.0), ((0, 2), 1.0), ((0, 0), -1.0)])).unwrap();
        let line = homogenize(&bp(&[((1, 0), 1.0), ((0, 1), -1.0)])).unwrap();
        assert_eq!(bezout_total(&conic, &line).unwrap(), 2);
        assert_eq!(bezout_total(&line, &homogenize(&BiPoly::z1()).unwrap()).unwrap(), 1);
        let q = bp(&[((1, 1), 1.0), ((0, 0), 0.5)]);
        let r = bp(&[((2, 1), 1.0), ((0, 0), 0.5)]);
        assert_eq!(
            bezout_total(&homogenize(&q).unwrap(), &homogenize(&r).unwrap()).unwrap(),
            6
        );
        assert_eq!(bezout_total(&line, &line), Err(Error::CommonFactor));
    }

    #[test]
    fn rudin_infinity() {
        let q = bp(&[((1, 1), 1.0), ((0, 0), 0.5)]);
        let r = bp(&[((2, 1), 1.0), ((0, 0), 0.5)]);
        assert_eq!(inner_infinity_count(&q, &r).unwrap(), 3);
        assert_eq!(inner_infinity_count(&BiPoly::z1(), &BiPoly::z2()).unwrap(), 0);
        assert_eq!(inner_infinity_count(&BiPoly::one(), &q).unwrap(), 0);
        assert!(inner_infinity_count(&bp(&[((1, 0), 1.0), ((0, 1), 1.0)]), &q).is_err());
    }

    #[test]
    fn line_meets_circle() {
        let p = bp(&[((1, 0), 1.0), ((0, 1), -1.0)]);
        let q = bp(&[((2, 0), 1.0), ((0, 2), 1.0), ((0, 0), -1.0)]);
        let pts = finite_common_zeros(&p, &q, 1, &tol()).unwrap();
        assert_eq!(pts.len(), 2);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        for pt in &pts {
            assert_eq!(pt.multiplicity, 1);
            let (x, y) = pt.point;
            assert!((x - y).norm() < 1e-9 && (x.norm() - h).abs() < 1e-9 && x.im.abs() < 1e-9);
        }
        let rep = intersect(&p, &q, 1, &tol()).unwrap();
        assert_eq!((rep.total, rep.finite_total, rep.at_infinity), (2, 2, 0));
    }

    #[test]
    fn tangent_triple_point() {
        let p = bp(&[((0, 1), 1.0), ((2, 0), -1.0)]);
        let q = bp(&[((1, 1), 1.0)]);
        let pts = finite_common_zeros(&p, &q, 2, &tol()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].multiplicity, 3);
        assert!(pts[0].point.0.norm() < 1e-5 && pts[0].point.1.norm() < 1e-5);
        let rep = intersect(&p, &q, 2, &tol()).unwrap();
        assert_eq!((rep.total, rep.finite_total, rep.at_infinity), (4, 3, 1));
    }

    #[test]
    fn axes_meet_once() {
        let pts = finite_common_zeros(&BiPoly::z1(), &BiPoly::z2(), 0, &tol()).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].multiplicity, 1);
        assert!(pts[0].point.0.norm() < 1e-12);
    }

    #[test]
    fn constant_has_no_zeros() {
        assert!(finite_common_zeros(&BiPoly::one(), &BiPoly::z2(), 0, &tol())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bound_examples() {
        let f = make_rational_inner(&bp(&[((0, 0), 4.0), ((1, 0), -1.0), ((0, 1), -1.0)])).unwrap();
        let g = make_rational_inner(&bp(&[((0, 0), 8.0), ((2, 0), -2.0), ((0, 1), -1.0)])).unwrap();
        let rep = common_zero_bound_check(&f, &g, 5, &tol()).unwrap();
        assert_eq!(rep.bound, 3);
        assert!(rep.intersections.finite_total <= 3);
        assert_eq!(rep.intersections.at_infinity, rep.inner_infinity);
        assert_eq!(rep.intersections.finite_total + rep.intersections.at_infinity, 6);
        assert_eq!(common_zero_bound_check(&f, &f, 5, &tol()), Err(Error::CommonFactor));

        let z1 = RationalInner::new(BiPoly::z1(), BiPoly::one()).unwrap();
        let z2 = RationalInner::new(BiPoly::z2(), BiPoly::one()).unwrap();
        let rep = common_zero_bound_check(&z1, &z2, 5, &tol()).unwrap();
        assert_eq!((rep.bound, rep.intersections.finite_total), (1, 1));
    }

    #[test]
    fn variety_examples() {
        let tol = tol();
        let z1z2 = RationalInner::new(bp(&[((1, 1), 1.0)]), BiPoly::one()).unwrap();
        let parabola = bp(&[((0, 1), 1.0), ((2, 0), -1.0)]);
        let diag = bp(&[((0, 1), 1.0), ((1, 0), -1.0)]);
        let z = zeros_on_variety(&z1z2, &parabola, Domain::Bidisk, 0, &tol).unwrap();
        assert_eq!((z.count, z.formula), (3, 3));
        let z = zeros_on_variety(&z1z2, &diag, Domain::Bidisk, 0, &tol).unwrap();
        assert_eq!((z.count, z.formula), (2, 2));
        let z1 = RationalInner::new(BiPoly::z1(), BiPoly::one()).unwrap();
        let z = zeros_on_variety(&z1, &diag, Domain::Bidisk, 0, &tol).unwrap();
        assert_eq!((z.count, z.formula), (1, 1));
    }

    #[test]
    fn graph_variety_count() {
        let m = Blaschke::new(ONE, alloc::vec![c(0.3), Cplx::new(-0.2, 0.5)]).unwrap();
        let p = graph_poly(&m);
        let f = make_rational_inner(&bp(&[((0, 0), 3.0), ((1, 0), -1.0), ((1, 1), 0.5)])).unwrap();
        let z = zeros_on_variety(&f, &p, Domain::Bidisk, 9, &tol()).unwrap();
        assert_eq!(z.count, z.formula);
    }
}
