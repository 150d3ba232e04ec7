//! Exact solvers for the domination number γ, the total domination number γt
//! and the neighborhood total domination number γnt.

mod bnb;
mod brute;
mod tree_dp;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use tree_dp::ntd_number_tree_dp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ParamKind {
    Domination,
    TotalDomination,
    Ntd,
}

impl ParamKind {
    pub const ALL: [ParamKind; 3] = [
        ParamKind::Domination,
        ParamKind::TotalDomination,
        ParamKind::Ntd,
    ];

    /// Whether `set` is a set of this kind in `g`.
    pub fn accepts(self, g: &Graph, set: VertexSet) -> bool {
        match self {
            ParamKind::Domination => is_dominating_set(g, set),
            ParamKind::TotalDomination => is_total_dominating_set(g, set),
            ParamKind::Ntd => is_ntd_set(g, set),
        }
    }

    /// Command-line spelling.
    pub fn flag(self) -> &'static str {
        match self {
            ParamKind::Domination => "gamma",
            ParamKind::TotalDomination => "gamma-t",
            ParamKind::Ntd => "gamma-nt",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

impl FromStr for ParamKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        ParamKind::ALL
            .into_iter()
            .find(|k| k.flag() == s)
            .ok_or_else(|| format!("unknown parameter {s:?} (expected gamma, gamma-t or gamma-nt)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    BruteForce,
    BranchAndBound,
    TreeDp,
}

impl Method {
    pub fn flag(self) -> &'static str {
        match self {
            Method::BruteForce => "bruteforce",
            Method::BranchAndBound => "bnb",
            Method::TreeDp => "treedp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Method::BruteForce, Method::BranchAndBound, Method::TreeDp]
            .into_iter()
            .find(|m| m.flag() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected bruteforce, bnb or treedp)"))
    }
}

/// An optimum value together with a set attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub kind: ParamKind,
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub nodes_explored: u64,
    #[serde(with = "duration_secs")]
    pub elapsed: Duration,
}

mod duration_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        f64::deserialize(d).map(Duration::from_secs_f64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("{method} does not support {kind}")]
    UnsupportedMethod { kind: ParamKind, method: Method },
    #[error("no {kind} set exists in this graph")]
    Unsatisfiable { kind: ParamKind },
    #[error("search budget exhausted after {nodes} nodes; best set found has size {}", best.len())]
    BudgetExhausted { best: VertexSet, nodes: u64 },
}

impl SolveError {
    /// Input did not meet the solver's preconditions, as opposed to a
    /// well-posed instance with no solution or a search that ran out of time.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            SolveError::EmptyGraph
                | SolveError::Disconnected
                | SolveError::NotATree
                | SolveError::UnsupportedMethod { .. }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub method: Method,
    pub budget: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            method: Method::BranchAndBound,
            budget: None,
        }
    }
}

/// `N[S] = V`.
pub fn is_dominating_set(g: &Graph, set: VertexSet) -> bool {
    g.closed_neighborhood(set) == g.vertices()
}

/// `N(S) = V`; a graph with an isolated vertex has none.
pub fn is_total_dominating_set(g: &Graph, set: VertexSet) -> bool {
    g.open_neighborhood(set) == g.vertices()
}

/// `N[S] = V` and `G[N(S)]` has no isolated vertex.
pub fn is_ntd_set(g: &Graph, set: VertexSet) -> bool {
    is_dominating_set(g, set) && g.isolated_within(g.open_neighborhood(set)).is_empty()
}

pub fn solve_exact(g: &Graph, kind: ParamKind, method: Method) -> Result<SolveResult, SolveError> {
    solve_with(
        g,
        kind,
        &SolveOptions {
            method,
            budget: None,
        },
    )
}

pub fn solve_with(
    g: &Graph,
    kind: ParamKind,
    options: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if g.order() == 0 {
        return Err(SolveError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    if options.method == Method::TreeDp {
        if kind != ParamKind::Ntd {
            return Err(SolveError::UnsupportedMethod {
                kind,
                method: Method::TreeDp,
            });
        }
        return ntd_number_tree_dp(g);
    }
    if g.order() == 1 && kind != ParamKind::Domination {
        return Err(SolveError::Unsatisfiable { kind });
    }
    let start = Instant::now();
    let deadline = options.budget.map(|b| start + b);
    let outcome = match options.method {
        Method::BruteForce => brute::minimum(g, kind, deadline),
        Method::BranchAndBound => bnb::minimum(g, kind, deadline),
        Method::TreeDp => unreachable!("handled above"),
    };
    let (witness, nodes_explored) = outcome?;
    debug_assert!(kind.accepts(g, witness));
    Ok(SolveResult {
        kind,
        value: witness.len(),
        witness,
        method: options.method,
        nodes_explored,
        elapsed: start.elapsed(),
    })
}

/// The three parameters of one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainValues {
    pub gamma: usize,
    pub gamma_nt: usize,
    pub gamma_t: usize,
}

impl ChainValues {
    /// γ ≤ γnt ≤ γt.
    pub fn holds(&self) -> bool {
        self.gamma <= self.gamma_nt && self.gamma_nt <= self.gamma_t
    }
}

/// Solves all three parameters exactly by branch-and-bound.
pub fn chain_values(g: &Graph) -> Result<ChainValues, SolveError> {
    let solve = |kind| solve_exact(g, kind, Method::BranchAndBound).map(|r| r.value);
    Ok(ChainValues {
        gamma: solve(ParamKind::Domination)?,
        gamma_nt: solve(ParamKind::Ntd)?,
        gamma_t: solve(ParamKind::TotalDomination)?,
    })
}

pub fn check_chain(g: &Graph) -> Result<bool, SolveError> {
    chain_values(g).map(|v| v.holds())
}

/// γnt ≤ (n+1)/2, compared as 2·γnt ≤ n+1.
pub fn check_half_bound(g: &Graph) -> Result<bool, SolveError> {
    let value = solve_exact(g, ParamKind::Ntd, Method::BranchAndBound)?.value;
    Ok(2 * value <= g.order() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn checker_examples() {
        let p4 = path(4);
        assert!(is_dominating_set(&p4, set(&[1, 2])));
        assert!(!is_dominating_set(&p4, set(&[0])));
        assert!(is_dominating_set(&star(3), set(&[0])));

        assert!(is_total_dominating_set(&p4, set(&[1, 2])));
        assert!(!is_total_dominating_set(&p4, set(&[0, 3])));
        assert!(is_total_dominating_set(&cycle(4), set(&[0, 1])));

        assert!(is_ntd_set(&p4, set(&[1, 2])));
        assert!(!is_ntd_set(&path(6), set(&[1, 4])));
        assert!(is_ntd_set(&star(3), set(&[0, 1])));
    }

    #[test]
    fn flags_round_trip() {
        for kind in ParamKind::ALL {
            assert_eq!(kind.flag().parse::<ParamKind>().unwrap(), kind);
        }
        assert_eq!("treedp".parse::<Method>().unwrap(), Method::TreeDp);
        assert!("gamma-x".parse::<ParamKind>().is_err());
    }

    #[test]
    fn solver_examples() {
        for method in [Method::BruteForce, Method::BranchAndBound] {
            let ntd = |g: &Graph| solve_exact(g, ParamKind::Ntd, method).unwrap().value;
            assert_eq!(ntd(&path(4)), 2);
            assert_eq!(ntd(&star(3)), 2);
            assert_eq!(ntd(&star(5)), 2);
            assert_eq!(ntd(&double_star(2, 2)), 2);
            assert_eq!(ntd(&cycle(5)), 3);
            assert_eq!(
                solve_exact(&path(4), ParamKind::Domination, method)
                    .unwrap()
                    .value,
                2
            );
            assert_eq!(
                solve_exact(&path(4), ParamKind::TotalDomination, method)
                    .unwrap()
                    .value,
                2
            );
        }
    }

    #[test]
    fn solver_errors() {
        let k1 = Graph::new(1).unwrap();
        assert_eq!(
            solve_exact(&k1, ParamKind::Ntd, Method::BranchAndBound),
            Err(SolveError::Unsatisfiable {
                kind: ParamKind::Ntd
            })
        );
        assert_eq!(
            solve_exact(&k1, ParamKind::Domination, Method::BruteForce)
                .unwrap()
                .value,
            1
        );
        let err = solve_exact(
            &Graph::new(2).unwrap(),
            ParamKind::Ntd,
            Method::BranchAndBound,
        )
        .unwrap_err();
        assert_eq!(err, SolveError::Disconnected);
        assert!(err.is_precondition());
        assert!(!SolveError::Unsatisfiable {
            kind: ParamKind::Ntd
        }
        .is_precondition());
        assert_eq!(
            solve_exact(&path(4), ParamKind::Domination, Method::TreeDp),
            Err(SolveError::UnsupportedMethod {
                kind: ParamKind::Domination,
                method: Method::TreeDp
            })
        );
        assert_eq!(
            solve_exact(&cycle(4), ParamKind::Ntd, Method::TreeDp),
            Err(SolveError::NotATree)
        );
        assert_eq!(
            solve_exact(
                &Graph::new(0).unwrap(),
                ParamKind::Ntd,
                Method::BranchAndBound
            ),
            Err(SolveError::EmptyGraph)
        );
    }

    #[test]
    fn chain_and_half_bound() {
        let c5 = chain_values(&cycle(5)).unwrap();
        assert_eq!((c5.gamma, c5.gamma_nt, c5.gamma_t), (2, 3, 3));
        let k13 = chain_values(&star(3)).unwrap();
        assert_eq!((k13.gamma, k13.gamma_nt, k13.gamma_t), (1, 2, 2));
        assert!(check_chain(&path(4)).unwrap());

        for g in [cycle(5), path(5), path(6)] {
            assert!(check_half_bound(&g).unwrap());
        }
        let ntd = |g: &Graph| {
            solve_exact(g, ParamKind::Ntd, Method::BruteForce)
                .unwrap()
                .value
        };
        assert_eq!(ntd(&cycle(5)), 3);
        assert_eq!(ntd(&path(5)), 3);
        assert_eq!(ntd(&path(6)), 3);
    }

    #[test]
    fn isolate_free_condition_is_not_monotone() {
        // exhaustive search on P6 for a nonempty S whose G[N(S)] is isolate-free
        // while G[N(S + v)] is not
        let p6 = path(6);
        let isolate_free = |s: VertexSet| p6.isolated_within(p6.open_neighborhood(s)).is_empty();
        let mut found = None;
        'outer: for bits in 1u64..1 << 6 {
            let s = VertexSet::from_bits(bits);
            if !isolate_free(s) {
                continue;
            }
            for v in (p6.vertices() - s).iter() {
                if !isolate_free(s.with(v)) {
                    found = Some((s, v));
                    break 'outer;
                }
            }
        }
        assert_eq!(found, Some((set(&[0, 1]), 3)));
        assert!(isolate_free(set(&[1, 2])));
        assert!(!isolate_free(set(&[1, 2, 4])));
    }

    #[test]
    fn full_ntd_sets_are_superset_closed_on_p6() {
        let p6 = path(6);
        for bits in 0u64..1 << 6 {
            let s = VertexSet::from_bits(bits);
            if is_ntd_set(&p6, s) {
                for v in (p6.vertices() - s).iter() {
                    assert!(is_ntd_set(&p6, s.with(v)), "{s} + {v}");
                }
            }
        }
    }
}
