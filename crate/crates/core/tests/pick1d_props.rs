mod common;

use common::*;
use pickset_core::linalg::{numeric_rank, psd_status, PsdStatus};
use pickset_core::pick1d::{pick_matrix, solve_schur, solve_singular, PickProblem1D};
use pickset_core::poly::Blaschke;
use pickset_core::rng::{uniform_disk, PickRng};
use pickset_core::{Cplx, Tolerances};
use proptest::prelude::*;

fn separated_nodes(r: &mut PickRng, n: usize) -> Vec<Cplx> {
    let mut out: Vec<Cplx> = Vec::new();
    while out.len() < n {
        let z = uniform_disk(r, 0.85);
        if out.iter().all(|w| (z - w).norm() > 0.1) {
            out.push(z);
        }
    }
    out
}

fn restriction(m: &Blaschke, nodes: Vec<Cplx>) -> PickProblem1D {
    let targets = nodes.iter().map(|z| m.eval(*z)).collect();
    PickProblem1D::new(nodes, targets).unwrap()
}

fn max_gap(a: &Blaschke, b: &Blaschke, r: &mut PickRng) -> f64 {
    (0..50)
        .map(|_| uniform_disk(r, 1.0))
        .map(|z| (a.eval(z) - b.eval(z)).norm())
        .fold(0.0, f64::max)
}

fn unimodular_on_circle(m: &Blaschke) -> bool {
    (0..64).all(|k| {
        let z = Cplx::from_polar(1.0, std::f64::consts::TAU * k as f64 / 64.0);
        (m.eval(z).norm() - 1.0).abs() <= 1e-8
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn singular_round_trip(seed in any::<u64>(), d in 0usize..=4, extra in 1usize..=3) {
        let mut r = rng(seed);
        let m = random_blaschke(&mut r, d);
        let prob = restriction(&m, separated_nodes(&mut r, d + extra));
        let tol = Tolerances::default();
        let p = pick_matrix(&prob);
        prop_assert_eq!(psd_status(&p, &tol).unwrap().status, PsdStatus::PsdSingular);
        prop_assert_eq!(numeric_rank(&p, &tol).unwrap(), d);
        let got = solve_singular(&prob, &tol).unwrap();
        prop_assert_eq!(got.degree(), d);
        prop_assert!(max_gap(&got, &m, &mut r) <= 1e-7);
        prop_assert!(unimodular_on_circle(&got));
    }

    #[test]
    fn few_nodes_leave_uniqueness(seed in any::<u64>(), d in 1usize..=4, n in 1usize..=4) {
        prop_assume!(n <= d);
        let mut r = rng(seed);
        let m = random_blaschke(&mut r, d);
        let prob = restriction(&m, separated_nodes(&mut r, n));
        let tol = Tolerances::default();
        prop_assert_eq!(psd_status(&pick_matrix(&prob), &tol).unwrap().status, PsdStatus::PositiveDefinite);
        let got = solve_schur(&prob, &tol).unwrap();
        prop_assert_eq!(got.degree(), n);
        prop_assert!(unimodular_on_circle(&got));
        for (z, w) in prob.nodes().iter().zip(prob.targets()) {
            prop_assert!((got.eval(*z) - w).norm() <= 1e-8);
        }
    }
}
