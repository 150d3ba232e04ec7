use std::collections::VecDeque;
use std::time::Instant;

use super::{ParamKind, SolveError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Depth-first branch-and-bound.
///
/// Vertices are renumbered in BFS order from a maximum-degree vertex. Each
/// node picks the lowest-numbered unmet requirement and branches over the
/// vertices that can meet it; a candidate tried in one branch is excluded
/// from its later siblings. Requirements are:
///
/// - domination: an undominated `u` needs a member of `N[u]`;
/// - total domination: `u` outside `N(S)` needs a member of `N(u)`;
/// - NTD: domination first; once `S` dominates, an isolated `x` of
///   `G[N(S)]` needs some `z` sharing a neighbor with `x` (possibly `x` itself).
///
/// The NTD repair step only runs on dominating sets, so the isolate-free
/// condition never prunes a partial set.
pub(super) fn minimum(
    g: &Graph,
    kind: ParamKind,
    deadline: Option<Instant>,
) -> Result<(VertexSet, u64), SolveError> {
    let order = bfs_order(g);
    let mut position = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let h = g.relabel(&position);
    let incumbent = greedy(&h, kind);
    let mut search = Search {
        g: &h,
        kind,
        max_degree: h.max_degree(),
        best: incumbent,
        nodes: 0,
        deadline,
        timed_out: false,
    };
    search.visit(VertexSet::EMPTY, VertexSet::EMPTY);
    let to_original = |set: VertexSet| set.iter().map(|i| order[i]).collect::<VertexSet>();
    if search.timed_out {
        return Err(SolveError::BudgetExhausted {
            best: to_original(search.best),
            nodes: search.nodes,
        });
    }
    Ok((to_original(search.best), search.nodes))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let start = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap_or(0);
    let mut seen = VertexSet::singleton(start);
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for w in (g.neighbors(u) - seen).iter() {
            seen.insert(w);
            queue.push_back(w);
        }
    }
    // unreachable vertices keep their relative order at the end
    order.extend((g.vertices() - seen).iter());
    order
}

/// Greedy feasible set used as the initial incumbent.
fn greedy(g: &Graph, kind: ParamKind) -> VertexSet {
    let all = g.vertices();
    let reach = |v: usize| match kind {
        ParamKind::TotalDomination => g.neighbors(v),
        _ => g.closed_neighbors(v),
    };
    let covered = |s: VertexSet| match kind {
        ParamKind::TotalDomination => g.open_neighborhood(s),
        _ => g.closed_neighborhood(s),
    };
    let mut set = VertexSet::EMPTY;
    loop {
        let missing = all - covered(set);
        if missing.is_empty() {
            break;
        }
        let Some(v) = (all - set)
            .iter()
            .max_by_key(|&v| ((reach(v) & missing).len(), std::cmp::Reverse(v)))
        else {
            break;
        };
        if (reach(v) & missing).is_empty() {
            break;
        }
        set.insert(v);
    }
    if kind == ParamKind::Ntd {
        // an isolated x of G[N(S)] is repaired by putting x itself in S:
        // N(x) joins N(S) and every vertex of N(x) is adjacent to x
        loop {
            let isolated = g.isolated_within(g.open_neighborhood(set));
            match isolated.first() {
                Some(x) if !set.contains(x) => set.insert(x),
                _ => break,
            }
        }
    }
    if kind.accepts(g, set) {
        set
    } else {
        all
    }
}

struct Search<'g> {
    g: &'g Graph,
    kind: ParamKind,
    max_degree: usize,
    best: VertexSet,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl Search<'_> {
    /// Candidates for the next branch and a lower bound on how many more
    /// vertices are needed; `None` when `set` is already feasible.
    fn requirement(&self, set: VertexSet) -> Option<(VertexSet, usize)> {
        let g = self.g;
        let all = g.vertices();
        let per_vertex = |missing: usize, reach: usize| missing.div_ceil(reach.max(1));
        match self.kind {
            ParamKind::Domination => {
                let undominated = all - g.closed_neighborhood(set);
                let u = undominated.first()?;
                Some((
                    g.closed_neighbors(u),
                    per_vertex(undominated.len(), self.max_degree + 1),
                ))
            }
            ParamKind::TotalDomination => {
                let missing = all - g.open_neighborhood(set);
                let u = missing.first()?;
                Some((g.neighbors(u), per_vertex(missing.len(), self.max_degree)))
            }
            ParamKind::Ntd => {
                let open = g.open_neighborhood(set);
                let undominated = all - (open | set);
                if let Some(u) = undominated.first() {
                    return Some((
                        g.closed_neighbors(u),
                        per_vertex(undominated.len(), self.max_degree + 1),
                    ));
                }
                let x = g.isolated_within(open).first()?;
                Some((g.open_neighborhood(g.neighbors(x)), 1))
            }
        }
    }

    fn visit(&mut self, set: VertexSet, excluded: VertexSet) {
        self.nodes += 1;
        if self.timed_out {
            return;
        }
        if self.nodes & 0x3FF == 0 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
            return;
        }
        let Some((candidates, bound)) = self.requirement(set) else {
            if set.len() < self.best.len() {
                self.best = set;
            }
            return;
        };
        if set.len() + bound >= self.best.len() {
            return;
        }
        let mut excluded = excluded;
        for w in (candidates - set - excluded).iter() {
            self.visit(set.with(w), excluded);
            excluded.insert(w);
            if self.timed_out || set.len() + 1 >= self.best.len() {
                return;
            }
        }
    }
}
