use ntd_core::solve::{solve_with, SolveOptions};
use ntd_core::{
    enumerate_trees, ntd_number_tree_dp, solve_exact, Graph, Method, ParamKind, SolveError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Duration;

const KINDS: [ParamKind; 3] = [
    ParamKind::Domination,
    ParamKind::TotalDomination,
    ParamKind::Ntd,
];

fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for v in 1..n {
        g.add_edge(rng.gen_range(0..v), v).unwrap();
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn branch_and_bound_matches_brute_force_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.0..0.5);
        let g = random_connected(&mut rng, n, p);
        for kind in KINDS {
            let brute = solve_exact(&g, kind, Method::BruteForce).unwrap();
            let bnb = solve_exact(&g, kind, Method::BranchAndBound).unwrap();
            assert_eq!(brute.value, bnb.value, "{kind:?} on {g:?}");
            assert!(kind.accepts(&g, bnb.witness));
            assert_eq!(bnb.witness.len(), bnb.value);
        }
    }
}

#[test]
fn tree_dp_matches_branch_and_bound_on_trees() {
    for n in 2..=12 {
        for t in enumerate_trees(n).unwrap() {
            let dp = ntd_number_tree_dp(&t).unwrap();
            let bnb = solve_exact(&t, ParamKind::Ntd, Method::BranchAndBound).unwrap();
            assert_eq!(dp.value, bnb.value, "{t:?}");
            assert!(ParamKind::Ntd.accepts(&t, dp.witness));
        }
    }
}

#[test]
fn larger_random_graphs_agree_between_exact_methods() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let g = random_connected(&mut rng, 18, 0.15);
        let brute = solve_exact(&g, ParamKind::Ntd, Method::BruteForce).unwrap();
        let bnb = solve_exact(&g, ParamKind::Ntd, Method::BranchAndBound).unwrap();
        assert_eq!(brute.value, bnb.value);
    }
}

#[test]
fn zero_budget_reports_an_incumbent() {
    let g = ntd_core::families::worked_member_tree();
    let opts = SolveOptions {
        method: Method::BranchAndBound,
        budget: Some(Duration::ZERO),
    };
    match solve_with(&g, ParamKind::Ntd, &opts) {
        Err(SolveError::BudgetExhausted { best, .. }) => {
            assert!(ParamKind::Ntd.accepts(&g, best));
            assert!(best.len() >= 18);
        }
        Ok(r) => assert_eq!(r.value, 18),
        Err(e) => panic!("{e}"),
    }
}
