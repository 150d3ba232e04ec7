//! End-to-end acceptance run: one PASS/FAIL line per criterion, non-zero exit
//! if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use ntd_core::enumerate::prufer_oracle_count;
use ntd_core::families::{
    build_member, certificate_ntd_set, random_spec, recognize_t, validate_certificate,
    worked_member_certificate, worked_member_tree,
};
use ntd_core::harness::{
    named_exceptional_graphs, verify, Theorem, VerificationReport, VerifyOptions,
};
use ntd_core::solve::{solve_with, SolveOptions};
use ntd_core::{
    enumerate_trees, is_ntd_set, ntd_number_tree_dp, solve_exact, Method, ParamKind, SolveError,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn run(theorem: Theorem, max_order: usize) -> VerificationReport {
    let parallelism = std::thread::available_parallelism().map_or(1, |n| n.get());
    verify(
        theorem,
        &VerifyOptions {
            max_order,
            parallelism,
        },
    )
    .expect("verification runs")
}

fn mismatch_summary(report: &VerificationReport) -> String {
    report
        .rows
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("n={}: {:?}", r.order, r.mismatches))
        .collect::<Vec<_>>()
        .join("; ")
}

fn even_characterization() -> Outcome {
    let report = run(Theorem::EvenCharacterization, 14);
    let examined: Vec<usize> = report.rows.iter().map(|r| r.examined).collect();
    if examined != [2, 6, 23, 106, 551, 3159] {
        return Err(format!("unexpected class counts {examined:?}"));
    }
    let extremal: Vec<_> = report.rows.iter().map(|r| r.extremal.unwrap()).collect();
    if report.passed {
        Ok(format!(
            "{} trees, extremal per order {extremal:?}, 0 mismatches",
            report.totals.examined
        ))
    } else {
        Err(mismatch_summary(&report))
    }
}

fn odd_characterization() -> Outcome {
    let report = run(Theorem::OddCharacterization, 13);
    let extremal: Vec<_> = report.rows.iter().map(|r| r.extremal.unwrap()).collect();
    if !report.passed {
        return Err(mismatch_summary(&report));
    }
    if extremal.iter().any(|&e| e != 1) || report.rows.len() != 6 {
        return Err(format!("extremal counts {extremal:?}"));
    }
    Ok(format!(
        "{} trees, one extremal tree per order",
        report.totals.examined
    ))
}

fn half_bound() -> Outcome {
    let report = run(Theorem::HalfBound, 14);
    if report.passed {
        Ok(format!("{} trees, 0 violations", report.totals.examined))
    } else {
        Err(mismatch_summary(&report))
    }
}

fn chain() -> Outcome {
    let report = run(Theorem::Chain, 12);
    if report.passed {
        Ok(format!("{} trees, 0 violations", report.totals.examined))
    } else {
        Err(mismatch_summary(&report))
    }
}

fn exceptional_values() -> Outcome {
    let expected = [
        ("B1", 2),
        ("B2", 3),
        ("B3", 4),
        ("B4", 4),
        ("B5", 4),
        ("C5", 3),
    ];
    let mut seen = Vec::new();
    for ((label, g), (want_label, want)) in named_exceptional_graphs().into_iter().zip(expected) {
        assert_eq!(label, want_label);
        let value = solve_exact(&g, ParamKind::Ntd, Method::BruteForce)
            .map_err(|e| e.to_string())?
            .value;
        seen.push(format!("{label}={value}"));
        if value != want {
            return Err(format!("{label}: got {value}, expected {want}"));
        }
    }
    Ok(seen.join(" "))
}

fn spanning_corollary() -> Outcome {
    let report =
        verify(Theorem::SpanningCorollary, &VerifyOptions::default()).map_err(|e| e.to_string())?;
    let classes: Vec<String> = report
        .rows
        .iter()
        .map(|r| format!("{}:{}", r.label.as_deref().unwrap_or("?"), r.examined))
        .collect();
    if report.passed {
        Ok(format!(
            "spanning tree classes {}, 0 rejections",
            classes.join(" ")
        ))
    } else {
        Err(mismatch_summary(&report))
    }
}

fn generator_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..500 {
        let spec = random_spec(&mut rng, 24);
        let fail = |why: &str| {
            Err(format!(
                "sample {i} ({}): {why}",
                serde_json::to_string(&spec).unwrap()
            ))
        };
        let (tree, cert) = match build_member(&spec) {
            Ok(built) => built,
            Err(e) => return fail(&e.to_string()),
        };
        let n = tree.order();
        if n % 2 != 0 || !(4..=24).contains(&n) {
            return fail("order out of range");
        }
        let value = ntd_number_tree_dp(&tree).map_err(|e| e.to_string())?.value;
        if 2 * value != n {
            return fail(&format!("gamma_nt = {value}"));
        }
        if !validate_certificate(&tree, &cert).is_valid() {
            return fail("certificate invalid");
        }
        match certificate_ntd_set(&tree, &cert) {
            Ok(d) if 2 * d.len() == n && is_ntd_set(&tree, d) => {}
            _ => return fail("certificate set is not an NTD-set of size n/2"),
        }
        match recognize_t(&tree) {
            Ok(Some(found)) if validate_certificate(&tree, &found).is_valid() => {}
            _ => return fail("recognizer rejects"),
        }
    }
    Ok("500 samples of order <= 24, 0 failures".to_string())
}

fn worked_member() -> Outcome {
    let tree = worked_member_tree();
    let cert = worked_member_certificate();
    if tree.order() != 36 {
        return Err(format!("order {}", tree.order()));
    }
    let dp = ntd_number_tree_dp(&tree).map_err(|e| e.to_string())?.value;
    if dp != 18 {
        return Err(format!("tree DP gives {dp}"));
    }
    if !validate_certificate(&tree, &cert).is_valid() {
        return Err("certificate does not validate".into());
    }
    let d = certificate_ntd_set(&tree, &cert).map_err(|e| e.to_string())?;
    if d.len() != 18 || !is_ntd_set(&tree, d) {
        return Err(format!("certificate set {d} is not an NTD-set of size 18"));
    }
    let start = Instant::now();
    let opts = SolveOptions {
        method: Method::BranchAndBound,
        budget: Some(Duration::from_secs(600)),
    };
    let bnb = match solve_with(&tree, ParamKind::Ntd, &opts) {
        Ok(r) if r.value == dp && is_ntd_set(&tree, r.witness) => {
            format!("branch-and-bound agrees ({} nodes)", r.nodes_explored)
        }
        Ok(r) => return Err(format!("branch-and-bound gives {}", r.value)),
        Err(SolveError::BudgetExhausted { best, nodes }) if best.len() >= dp => {
            format!(
                "branch-and-bound budget exhausted after {nodes} nodes, incumbent {}",
                best.len()
            )
        }
        Err(e) => return Err(format!("branch-and-bound: {e}")),
    };
    Ok(format!(
        "gamma_nt = 18, certificate valid, {bnb} in {:.1}s",
        start.elapsed().as_secs_f64()
    ))
}

fn dp_matches_brute_force() -> Outcome {
    let mut checked = 0;
    for n in 2..=12 {
        for tree in enumerate_trees(n).unwrap() {
            let dp = ntd_number_tree_dp(&tree).map_err(|e| e.to_string())?;
            let brute = solve_exact(&tree, ParamKind::Ntd, Method::BruteForce)
                .map_err(|e| e.to_string())?;
            if dp.value != brute.value
                || !is_ntd_set(&tree, dp.witness)
                || dp.witness.len() != dp.value
            {
                return Err(format!("{tree:?}: dp {} brute {}", dp.value, brute.value));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} trees of order 2..=12, 0 discrepancies"))
}

fn enumeration_counts() -> Outcome {
    let expected = [1, 1, 2, 3, 6, 11, 23, 47, 106];
    let mut counts = Vec::new();
    for (n, want) in (2..=10).zip(expected) {
        let generated = enumerate_trees(n).unwrap().count();
        let oracle = prufer_oracle_count(n).unwrap();
        if generated != oracle || generated != want {
            return Err(format!(
                "n={n}: generated {generated}, oracle {oracle}, expected {want}"
            ));
        }
        counts.push(generated);
    }
    Ok(format!("counts {counts:?} match the Prüfer oracle"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("even-order characterization", even_characterization),
        ("odd-order characterization", odd_characterization),
        ("upper bound (n+1)/2", half_bound),
        ("domination chain", chain),
        ("exceptional graphs", exceptional_values),
        ("spanning-tree corollary", spanning_corollary),
        ("generator soundness", generator_soundness),
        ("36-vertex fixture", worked_member),
        ("tree DP vs brute force", dp_matches_brute_force),
        ("enumeration vs Prüfer oracle", enumeration_counts),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("acceptance: {}/10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
