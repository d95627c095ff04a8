mod common;

use common::*;
use pickset_core::agler::*;
use pickset_core::linalg::{entrywise_quotient, psd_status, schur_product, PsdStatus};
use pickset_core::rng::{uniform_disk, PickRng};
use pickset_core::{Cplx, Tolerances};
use proptest::prelude::*;
use rand::Rng;

const BUDGET: usize = 20_000;

fn bidisk_nodes(r: &mut PickRng, n: usize) -> Vec<(Cplx, Cplx)> {
    let mut out: Vec<(Cplx, Cplx)> = Vec::new();
    while out.len() < n {
        let z = (uniform_disk(r, 0.9), uniform_disk(r, 0.9));
        if out.iter().all(|w| (z.0 - w.0).norm() + (z.1 - w.1).norm() > 0.05) {
            out.push(z);
        }
    }
    out
}

fn inner_problem(r: &mut PickRng, n: usize) -> PickProblem2D {
    let d = (r.gen_range(0..=2), r.gen_range(0..=2));
    let f = random_inner(r, if d == (0, 0) { (1, 0) } else { d });
    let nodes = bidisk_nodes(r, n);
    let targets = nodes.iter().map(|&(a, b)| f.eval(a, b)).collect();
    PickProblem2D::new(nodes, targets).unwrap()
}

fn recheck(prob: &PickProblem2D, pair: &AglerPair, tol: &Tolerances) -> bool {
    let data = data_matrices(prob);
    let psd = |h| {
        let d = psd_status(h, tol).unwrap();
        d.lambda_min >= -tol.psd_tol * d.scale
    };
    psd(&pair.gamma) && psd(&pair.delta) && pair_residual(&data, &pair.gamma, &pair.delta) <= tol.residual_tol
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn inner_restrictions_are_never_unsolvable(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let prob = inner_problem(&mut r, n);
        let tol = Tolerances::default();
        match solvability_status(&prob, &[], &tol, BUDGET).unwrap() {
            Solvability::Unsolvable(_) => prop_assert!(false, "false unsolvability certificate"),
            Solvability::Solvable(pair) => prop_assert!(recheck(&prob, &pair, &tol)),
            Solvability::Undecided { .. } => {}
        }
    }

    #[test]
    fn feasible_outputs_recheck(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let nodes = bidisk_nodes(&mut r, n);
        let targets = (0..n).map(|_| uniform_disk(&mut r, 0.6)).collect();
        let prob = PickProblem2D::new(nodes, targets).unwrap();
        let tol = Tolerances::default();
        if let DykstraOutcome::Feasible(pair) = dykstra_decompose(&prob, &tol, BUDGET).unwrap() {
            prop_assert!(recheck(&prob, &pair, &tol));
        }
    }

    #[test]
    fn szego_unique_is_never_unsolvable(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        // targets of a one-variable Blaschke product at nodes sharing z2 force
        // a singular Szegő matrix
        let m = random_blaschke(&mut r, n - 1);
        let w = uniform_disk(&mut r, 0.9);
        let mut nodes: Vec<(Cplx, Cplx)> = Vec::new();
        while nodes.len() < n {
            let l = uniform_disk(&mut r, 0.9);
            if nodes.iter().all(|z| (z.0 - l).norm() > 0.05) {
                nodes.push((l, w));
            }
        }
        let targets = nodes.iter().map(|z| m.eval(z.0)).collect();
        let prob = PickProblem2D::new(nodes, targets).unwrap();
        let tol = Tolerances::default();
        let test = szego_uniqueness_test(&prob, &tol).unwrap();
        if test.verdict == SzegoVerdict::Unique {
            let s = solvability_status(&prob, &[], &tol, BUDGET).unwrap();
            prop_assert!(!matches!(s, Solvability::Unsolvable(_)));
        }
    }

    #[test]
    fn szego_kernel_is_admissible(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let nodes = bidisk_nodes(&mut r, n);
        let k = szego_kernel(&nodes);
        let prob = PickProblem2D::new(nodes, vec![Cplx::new(0.0, 0.0); n]).unwrap();
        let data = data_matrices(&prob);
        let tol = Tolerances::default();
        for l in [&data.lambda1, &data.lambda2] {
            let s = psd_status(&schur_product(l, &k).unwrap(), &tol).unwrap();
            prop_assert_ne!(s.status, PsdStatus::Indefinite);
        }
    }

    #[test]
    fn case_ii_pairs_reconstruct_w(seed in any::<u64>(), d in 1usize..=3, n in 1usize..=3) {
        prop_assume!(n <= d);
        let mut r = rng(seed);
        let f = random_blaschke(&mut r, d);
        let m = random_blaschke(&mut r, n);
        let mut nodes: Vec<(Cplx, Cplx)> = Vec::new();
        while nodes.len() < d + 1 {
            let l = uniform_disk(&mut r, 0.9);
            if nodes.iter().all(|z| (z.0 - l).norm() > 0.1) {
                nodes.push((l, m.eval(l)));
            }
        }
        let targets = nodes.iter().map(|z| f.eval(z.0)).collect();
        let prob = PickProblem2D::new(nodes, targets).unwrap();
        let data = data_matrices(&prob);
        let tol = Tolerances::default();
        let g0 = entrywise_quotient(&data.w, &data.lambda1).unwrap();
        let a = entrywise_quotient(&data.lambda2, &data.lambda1).unwrap();
        let cert = case_ii_certificate(&data, &g0, &a, &tol).unwrap();
        prop_assert!(pair_residual(&data, &cert.pair.gamma, &cert.pair.delta) <= tol.residual_tol);
        prop_assert!(cert.pair.delta.frobenius_norm() > 1e-8);
        prop_assert!(is_unit(&cert.v));
    }
}
