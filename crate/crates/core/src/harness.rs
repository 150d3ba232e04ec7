//! Exhaustive checks of the extremal results over enumerated trees and the
//! fixed exceptional graphs, producing machine-readable reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::canonical_code_string;
use crate::enumerate::{enumerate_trees, MAX_ENUMERATION_ORDER};
use crate::families::{b_graphs, c5, is_subdivided_star, recognize_t, spanning_trees};
use crate::graph::Graph;
use crate::solve::{chain_values, ntd_number_tree_dp, solve_exact, Method, ParamKind, SolveError};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Theorem {
    /// Even order: `γnt = n/2` iff the tree is in the family.
    EvenCharacterization,
    /// Odd order: `γnt = (n+1)/2` iff the tree is a subdivided star.
    OddCharacterization,
    /// `γnt ≤ (n+1)/2`, with equality only on subdivided stars.
    HalfBound,
    /// `γ ≤ γnt ≤ γt`.
    Chain,
    /// The exceptional graphs have `γnt = n/2`, and `C5` has `γnt = 3`.
    Bgraphs,
    /// Every spanning tree of an exceptional graph is in the family.
    SpanningCorollary,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::EvenCharacterization,
        Theorem::OddCharacterization,
        Theorem::HalfBound,
        Theorem::Chain,
        Theorem::Bgraphs,
        Theorem::SpanningCorollary,
    ];

    pub fn flag(self) -> &'static str {
        match self {
            Theorem::EvenCharacterization => "even",
            Theorem::OddCharacterization => "odd",
            Theorem::HalfBound => "half-bound",
            Theorem::Chain => "chain",
            Theorem::Bgraphs => "bgraphs",
            Theorem::SpanningCorollary => "spanning",
        }
    }

    /// Whether the check runs over enumerated trees (and so needs a max order).
    pub fn uses_enumeration(self) -> bool {
        !matches!(self, Theorem::Bgraphs | Theorem::SpanningCorollary)
    }

    fn orders(self, max_order: usize) -> Vec<usize> {
        match self {
            Theorem::EvenCharacterization => (4..=max_order).step_by(2).collect(),
            Theorem::OddCharacterization => (3..=max_order).step_by(2).collect(),
            Theorem::HalfBound => (3..=max_order).collect(),
            Theorem::Chain => (2..=max_order).collect(),
            Theorem::Bgraphs | Theorem::SpanningCorollary => vec![],
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown theorem `{0}` (expected even, odd, half-bound, chain, bgraphs or spanning)")]
pub struct UnknownTheorem(String);

impl FromStr for Theorem {
    type Err = UnknownTheorem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.flag() == s.to_ascii_lowercase())
            .ok_or_else(|| UnknownTheorem(s.to_string()))
    }
}

/// Result for one order (or one named graph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRow {
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub label: Option<String>,
    pub examined: usize,
    /// Graphs attaining the extremal value, where that notion applies.
    pub extremal: Option<usize>,
    /// Graphs the structural test accepts, where there is one.
    pub accepted: Option<usize>,
    /// Canonical codes of offending trees (or labels of offending graphs), sorted.
    pub mismatches: Vec<String>,
}

impl OrderRow {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub examined: usize,
    pub extremal: Option<usize>,
    pub accepted: Option<usize>,
    pub mismatches: usize,
}

/// Kept apart from the rest so reports compare byte-for-byte without it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_seconds: f64,
    pub parallelism: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub theorem: Theorem,
    pub max_order: Option<usize>,
    pub rows: Vec<OrderRow>,
    pub totals: Totals,
    pub passed: bool,
    pub timing: Timing,
}

impl VerificationReport {
    /// The report without its timing object, for determinism comparisons.
    pub fn deterministic_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("report serializes");
        value
            .as_object_mut()
            .expect("report is an object")
            .remove("timing");
        value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_order: usize,
    /// Worker threads; 1 runs everything on a single thread.
    pub parallelism: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: 10,
            parallelism: 1,
        }
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("max order {order} outside {min}..={max} for {theorem}")]
    OrderOutOfRange {
        theorem: Theorem,
        order: usize,
        min: usize,
        max: usize,
    },
    #[error("parallelism must be at least 1")]
    ZeroParallelism,
    #[error("solver failed on {graph}: {source}")]
    Solver { graph: String, source: SolveError },
    #[error("could not start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Outcome of checking one graph.
#[derive(Debug, Clone, Copy, Default)]
struct Check {
    extremal: bool,
    accepted: bool,
    mismatch: bool,
}

pub fn verify(theorem: Theorem, opts: &VerifyOptions) -> Result<VerificationReport, HarnessError> {
    if opts.parallelism == 0 {
        return Err(HarnessError::ZeroParallelism);
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.parallelism)
        .build()?;
    let (rows, max_order) = if theorem.uses_enumeration() {
        let min = theorem.orders(MAX_ENUMERATION_ORDER)[0];
        if !(min..=MAX_ENUMERATION_ORDER).contains(&opts.max_order) {
            return Err(HarnessError::OrderOutOfRange {
                theorem,
                order: opts.max_order,
                min,
                max: MAX_ENUMERATION_ORDER,
            });
        }
        let rows = theorem
            .orders(opts.max_order)
            .into_iter()
            .map(|n| pool.install(|| tree_row(theorem, n)))
            .collect::<Result<Vec<_>, _>>()?;
        (rows, Some(opts.max_order))
    } else if theorem == Theorem::Bgraphs {
        (bgraph_rows()?, None)
    } else {
        (pool.install(spanning_rows)?, None)
    };

    let sum_opt = |f: fn(&OrderRow) -> Option<usize>| -> Option<usize> {
        rows.iter().map(f).sum::<Option<usize>>()
    };
    let totals = Totals {
        examined: rows.iter().map(|r| r.examined).sum(),
        extremal: sum_opt(|r| r.extremal),
        accepted: sum_opt(|r| r.accepted),
        mismatches: rows.iter().map(|r| r.mismatches.len()).sum(),
    };
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        theorem,
        max_order,
        passed: totals.mismatches == 0,
        totals,
        rows,
        timing: Timing {
            wall_seconds: start.elapsed().as_secs_f64(),
            parallelism: opts.parallelism,
        },
    })
}

fn solver_error(tree: &Graph, source: SolveError) -> HarnessError {
    HarnessError::Solver {
        graph: canonical_code_string(tree).unwrap_or_else(|_| format!("{tree:?}")),
        source,
    }
}

fn ntd_of_tree(tree: &Graph) -> Result<usize, HarnessError> {
    ntd_number_tree_dp(tree)
        .map(|r| r.value)
        .map_err(|e| solver_error(tree, e))
}

fn check_tree(theorem: Theorem, tree: &Graph) -> Result<Check, HarnessError> {
    let n = tree.order();
    let check = match theorem {
        Theorem::EvenCharacterization => {
            let extremal = 2 * ntd_of_tree(tree)? == n;
            let accepted = recognize_t(tree)
                .expect("enumerated trees of even order >= 4")
                .is_some();
            Check {
                extremal,
                accepted,
                mismatch: extremal != accepted,
            }
        }
        Theorem::OddCharacterization => {
            let extremal = 2 * ntd_of_tree(tree)? == n + 1;
            let accepted = is_subdivided_star(tree).is_some();
            Check {
                extremal,
                accepted,
                mismatch: extremal != accepted,
            }
        }
        Theorem::HalfBound => {
            let twice = 2 * ntd_of_tree(tree)?;
            let extremal = twice == n + 1;
            let accepted = is_subdivided_star(tree).is_some();
            Check {
                extremal,
                accepted,
                mismatch: twice > n + 1 || extremal != accepted,
            }
        }
        Theorem::Chain => {
            let values = chain_values(tree).map_err(|e| solver_error(tree, e))?;
            Check {
                mismatch: !values.holds(),
                ..Check::default()
            }
        }
        Theorem::Bgraphs | Theorem::SpanningCorollary => unreachable!("not a per-tree check"),
    };
    Ok(check)
}

fn tree_row(theorem: Theorem, n: usize) -> Result<OrderRow, HarnessError> {
    let trees: Vec<Graph> = enumerate_trees(n).expect("order validated").collect();
    let checks = trees
        .par_iter()
        .map(|t| check_tree(theorem, t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut mismatches: Vec<String> = trees
        .iter()
        .zip(&checks)
        .filter(|(_, c)| c.mismatch)
        .map(|(t, _)| canonical_code_string(t).expect("tree"))
        .collect();
    mismatches.sort();
    let counts = matches!(
        theorem,
        Theorem::EvenCharacterization | Theorem::OddCharacterization | Theorem::HalfBound
    );
    let count = |f: fn(&Check) -> bool| counts.then(|| checks.iter().filter(|c| f(c)).count());
    Ok(OrderRow {
        order: n,
        label: None,
        examined: trees.len(),
        extremal: count(|c| c.extremal),
        accepted: count(|c| c.accepted),
        mismatches,
    })
}

/// The exceptional graphs with labels, followed by `C5`.
pub fn named_exceptional_graphs() -> Vec<(String, Graph)> {
    let mut graphs: Vec<(String, Graph)> = b_graphs()
        .into_iter()
        .enumerate()
        .map(|(i, g)| (format!("B{}", i + 1), g))
        .collect();
    graphs.push(("C5".to_string(), c5()));
    graphs
}

fn bgraph_rows() -> Result<Vec<OrderRow>, HarnessError> {
    named_exceptional_graphs()
        .into_iter()
        .map(|(label, g)| {
            let n = g.order();
            let value = solve_exact(&g, ParamKind::Ntd, Method::BruteForce)
                .map_err(|source| HarnessError::Solver {
                    graph: label.clone(),
                    source,
                })?
                .value;
            // C5 sits at the odd bound, the B graphs at n/2
            let expected = n.div_ceil(2);
            let ok = value == expected;
            Ok(OrderRow {
                order: n,
                mismatches: if ok {
                    vec![]
                } else {
                    vec![format!("{label}: gamma_nt = {value}, expected {expected}")]
                },
                label: Some(label),
                examined: 1,
                extremal: Some(usize::from(ok)),
                accepted: None,
            })
        })
        .collect()
}

fn spanning_rows() -> Result<Vec<OrderRow>, HarnessError> {
    b_graphs()
        .into_iter()
        .enumerate()
        .map(|(i, g)| {
            let trees = spanning_trees(&g).expect("exceptional graphs are small and connected");
            let verdicts: Vec<bool> = trees
                .par_iter()
                .map(|t| recognize_t(t).expect("even order >= 4").is_some())
                .collect();
            let mismatches: Vec<String> = trees
                .iter()
                .zip(&verdicts)
                .filter(|(_, &ok)| !ok)
                .map(|(t, _)| canonical_code_string(t).expect("tree"))
                .collect();
            Ok(OrderRow {
                order: g.order(),
                label: Some(format!("B{}", i + 1)),
                examined: trees.len(),
                extremal: None,
                accepted: Some(verdicts.iter().filter(|&&ok| ok).count()),
                mismatches,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(theorem: Theorem, max_order: usize, parallelism: usize) -> VerificationReport {
        verify(
            theorem,
            &VerifyOptions {
                max_order,
                parallelism,
            },
        )
        .unwrap()
    }

    #[test]
    fn small_even_run() {
        let report = run(Theorem::EvenCharacterization, 8, 1);
        assert!(report.passed, "{report:?}");
        let examined: Vec<_> = report.rows.iter().map(|r| r.examined).collect();
        assert_eq!(examined, vec![2, 6, 23]);
    }

    #[test]
    fn odd_run_has_one_extremal_tree_per_order() {
        let report = run(Theorem::OddCharacterization, 9, 2);
        assert!(report.passed);
        assert!(report.rows.iter().all(|r| r.extremal == Some(1)));
    }

    #[test]
    fn parallelism_does_not_change_the_report() {
        let one = run(Theorem::HalfBound, 9, 1);
        let two = run(Theorem::HalfBound, 9, 2);
        assert_eq!(one.deterministic_json(), two.deterministic_json());
    }

    #[test]
    fn fixed_graph_checks() {
        let report = run(Theorem::Bgraphs, 0, 1);
        assert!(report.passed);
        assert_eq!(report.rows.len(), 6);
        assert_eq!(report.max_order, None);
        assert!(run(Theorem::SpanningCorollary, 0, 1).passed);
    }

    #[test]
    fn theorem_flags_and_errors() {
        for t in Theorem::ALL {
            assert_eq!(t.flag().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
        let err = verify(
            Theorem::EvenCharacterization,
            &VerifyOptions {
                max_order: 21,
                parallelism: 1,
            },
        );
        assert!(matches!(err, Err(HarnessError::OrderOutOfRange { .. })));
        let json = serde_json::to_value(run(Theorem::Chain, 4, 1)).unwrap();
        assert_eq!(json["schema"], 1);
        assert_eq!(json["theorem"], "CHAIN");
    }
}
