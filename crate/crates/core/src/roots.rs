//! Simultaneous root finding for complex univariate polynomials.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::ZERO;
use crate::{Cplx, Error, Result, Tolerances};

const MAX_ITER: usize = 500;

/// Cluster diameters for a group of `m` roots may grow to `SMEAR^(1/m)`
/// (relative), since an `m`-fold root perturbed by `e` spreads as `e^(1/m)`.
const SMEAR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCluster {
    pub center: Cplx,
    pub multiplicity: usize,
}

/// All roots with repetition, plus the same roots grouped into clusters.
#[derive(Debug, Clone, PartialEq)]
pub struct Roots {
    pub roots: Vec<Cplx>,
    pub clusters: Vec<RootCluster>,
}

impl Roots {
    pub fn degree(&self) -> usize {
        self.roots.len()
    }
}

/// Roots of `sum coeffs[k] z^k` by Aberth-Ehrlich iteration.
///
/// Exact zero coefficients at the top are stripped; exact zeros at the bottom
/// are returned as exact roots at the origin. Every root satisfies
/// `|p(z)| <= root_tol * sum |c_k| |z|^k`. Numerically coincident roots are
/// grouped by [`cluster_roots`]; multiple-root centers are then polished by
/// Newton steps on the `(m-1)`-th derivative, where the root is simple.
pub fn poly_roots(coeffs: &[Cplx], tol: &Tolerances) -> Result<Roots> {
    let roots = find_roots(coeffs, tol)?;
    let mut clusters = cluster_roots(&roots, 1e3 * tol.root_tol);
    for cl in clusters
        .iter_mut()
        .filter(|cl| cl.multiplicity > 1 && cl.center != ZERO)
    {
        let deriv = derivative_n(coeffs, cl.multiplicity - 1);
        let spread = roots
            .iter()
            .map(|r| (*r - cl.center).norm())
            .filter(|d| *d <= allowed_diameter(cl.multiplicity, 1e3 * tol.root_tol) * cl.center.norm().max(1.0))
            .fold(0.0, f64::max);
        let mut z = cl.center;
        for _ in 0..8 {
            let (p, dp, _) = horner(&deriv, z);
            if dp == ZERO {
                break;
            }
            let step = p / dp;
            z -= step;
            if step.norm() <= f64::EPSILON * z.norm().max(1.0) {
                break;
            }
        }
        if (z - cl.center).norm() <= spread.max(f64::EPSILON) {
            cl.center = z;
        }
    }
    Ok(Roots { roots, clusters })
}

fn derivative_n(c: &[Cplx], n: usize) -> Vec<Cplx> {
    let mut d = c.to_vec();
    for _ in 0..n {
        if d.len() <= 1 {
            return vec![ZERO];
        }
        d = d.iter().enumerate().skip(1).map(|(k, ck)| *ck * k as f64).collect();
    }
    d
}

/// Roots with repetition, unclustered.
pub fn find_roots(coeffs: &[Cplx], tol: &Tolerances) -> Result<Vec<Cplx>> {
    if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
        return Err(Error::Precondition("polynomial coefficients must be finite"));
    }
    let top = coeffs.iter().rposition(|c| *c != ZERO).ok_or(Error::DegreeZero)?;
    if top == 0 {
        return Err(Error::DegreeZero);
    }
    let low = coeffs.iter().position(|c| *c != ZERO).unwrap_or(0);
    let c = &coeffs[low..=top];
    let mut roots = vec![ZERO; low];
    let d = c.len() - 1;
    match d {
        0 => {}
        1 => roots.push(-c[0] / c[1]),
        _ => roots.extend(aberth(c, tol)?),
    }
    Ok(roots)
}

fn horner(c: &[Cplx], z: Cplx) -> (Cplx, Cplx, f64) {
    let mut p = ZERO;
    let mut dp = ZERO;
    let mut scale = 0.0;
    let az = z.norm();
    for &ck in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
        scale = scale * az + ck.norm();
    }
    (p, dp, scale)
}

pub fn eval_poly(c: &[Cplx], z: Cplx) -> Cplx {
    c.iter().rev().fold(ZERO, |acc, &ck| acc * z + ck)
}

fn aberth(c: &[Cplx], tol: &Tolerances) -> Result<Vec<Cplx>> {
    let d = c.len() - 1;
    let radius = (c[0].norm() / c[d].norm()).powf(1.0 / d as f64);
    let mut z: Vec<Cplx> = (0..d)
        .map(|k| Cplx::from_polar(radius, core::f64::consts::TAU * k as f64 / d as f64 + 0.25))
        .collect();
    let mut done = vec![false; d];
    let floor = 2.0 * d as f64 * f64::EPSILON;

    for _ in 0..MAX_ITER {
        if done.iter().all(|&x| x) {
            break;
        }
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (p, dp, scale) = horner(c, z[i]);
            if p.norm() <= floor * scale {
                done[i] = true;
                continue;
            }
            let repulsion: Cplx = (0..d)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff == ZERO {
                        ZERO
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = if dp == ZERO {
                // stationary point: nudge off it
                Cplx::new(1e-8 * radius.max(1.0), 1e-8 * radius.max(1.0))
            } else {
                let ratio = p / dp;
                let denom = Cplx::new(1.0, 0.0) - ratio * repulsion;
                if denom == ZERO {
                    ratio
                } else {
                    ratio / denom
                }
            };
            z[i] -= step;
            if step.norm() <= f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
    }

    for zi in &z {
        let (p, _, scale) = horner(c, *zi);
        if !(p.norm() <= tol.root_tol * scale) {
            return Err(Error::NonConvergence {
                what: "Aberth-Ehrlich root finder",
                iterations: MAX_ITER,
            });
        }
    }
    Ok(z)
}

/// Groups numerically coincident roots.
///
/// Roots are split top-down into single-linkage components with a shrinking
/// linking radius. A component of `m` roots is accepted as one cluster once
/// its diameter is at most `max(base_radius, SMEAR^(1/m))` times
/// `max(1, |root|)`. Cluster centers are group means, which are far more
/// accurate than the individual smeared roots.
pub fn cluster_roots(roots: &[Cplx], base_radius: f64) -> Vec<RootCluster> {
    let n = roots.len();
    if n == 0 {
        return Vec::new();
    }
    let members: Vec<usize> = (0..n).collect();
    let mut groups = Vec::new();
    split_groups(
        roots,
        &members,
        allowed_diameter(n, base_radius),
        base_radius,
        &mut groups,
    );
    groups.sort_by_key(|g| g[0]);
    groups
        .into_iter()
        .map(|g| {
            let sum: Cplx = g.iter().map(|&k| roots[k]).sum();
            RootCluster {
                center: sum / g.len() as f64,
                multiplicity: g.len(),
            }
        })
        .collect()
}

fn allowed_diameter(m: usize, base_radius: f64) -> f64 {
    base_radius.max(SMEAR.powf(1.0 / m as f64))
}

fn rel_dist(a: Cplx, b: Cplx) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn split_groups(roots: &[Cplx], members: &[usize], radius: f64, base_radius: f64, out: &mut Vec<Vec<usize>>) {
    for comp in linkage_components(roots, members, radius) {
        let m = comp.len();
        let diameter = comp
            .iter()
            .flat_map(|&a| comp.iter().map(move |&b| (a, b)))
            .map(|(a, b)| rel_dist(roots[a], roots[b]))
            .fold(0.0, f64::max);
        if m == 1 || diameter <= allowed_diameter(m, base_radius) {
            out.push(comp);
        } else if radius <= 0.1 * base_radius {
            out.extend(comp.into_iter().map(|k| alloc::vec![k]));
        } else {
            split_groups(roots, &comp, radius * 0.25, base_radius, out);
        }
    }
}

fn linkage_components(roots: &[Cplx], members: &[usize], radius: f64) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..members.len()).collect();
    // union-find without path compression; member lists are tiny
    fn find(label: &mut [usize], mut x: usize) -> usize {
        while label[x] != x {
            x = label[x];
        }
        x
    }
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if rel_dist(roots[members[a]], roots[members[b]]) <= radius {
                let (ra, rb) = (find(&mut label, a), find(&mut label, b));
                if ra != rb {
                    label[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = alloc::vec![None; members.len()];
    for (a, &m) in members.iter().enumerate() {
        let r = find(&mut label, a);
        match root_of[r] {
            Some(idx) => comps[idx].push(m),
            None => {
                root_of[r] = Some(comps.len());
                comps.push(alloc::vec![m]);
            }
        }
    }
    comps
}
