use std::collections::BTreeMap;

use thiserror::Error;

use crate::canonical::{canonical_labeling, canonical_tree_code};
use crate::graph::Graph;

/// Largest order [`spanning_trees`] accepts.
pub const MAX_SPANNING_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpanningError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("order {0} exceeds {MAX_SPANNING_ORDER}")]
    TooLarge(usize),
}

/// One representative of every isomorphism class of spanning trees of `g`,
/// canonically labeled and sorted by canonical code.
pub fn spanning_trees(g: &Graph) -> Result<Vec<Graph>, SpanningError> {
    let n = g.order();
    if n > MAX_SPANNING_ORDER {
        return Err(SpanningError::TooLarge(n));
    }
    if n == 0 || !g.is_connected() {
        return Err(SpanningError::Disconnected);
    }
    let edges = g.edges();
    let mut classes = BTreeMap::new();
    let mut chosen = Vec::with_capacity(n - 1);
    let mut forest = Forest::new(n);
    extend(&edges, 0, n, &mut forest, &mut chosen, &mut |tree_edges| {
        let tree = Graph::from_edges(n, tree_edges).expect("subset of valid edges");
        let code = canonical_tree_code(&tree).expect("acyclic with n-1 edges");
        classes
            .entry(code)
            .or_insert_with(|| canonical_labeling(&tree).expect("tree"));
    });
    Ok(classes.into_values().collect())
}

/// Include-or-skip recursion over the edge list, never closing a cycle.
fn extend(
    edges: &[(usize, usize)],
    next: usize,
    n: usize,
    forest: &mut Forest,
    chosen: &mut Vec<(usize, usize)>,
    emit: &mut impl FnMut(&[(usize, usize)]),
) {
    if chosen.len() == n - 1 {
        emit(chosen);
        return;
    }
    if edges.len() - next < n - 1 - chosen.len() {
        return;
    }
    let (u, v) = edges[next];
    if forest.root(u) != forest.root(v) {
        let saved = forest.parent.clone();
        forest.union(u, v);
        chosen.push((u, v));
        extend(edges, next + 1, n, forest, chosen, emit);
        chosen.pop();
        forest.parent = saved;
    }
    extend(edges, next + 1, n, forest, chosen, emit);
}

struct Forest {
    parent: Vec<usize>,
}

impl Forest {
    fn new(n: usize) -> Self {
        Forest {
            parent: (0..n).collect(),
        }
    }

    fn root(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, u: usize, v: usize) {
        let (ru, rv) = (self.root(u), self.root(v));
        self.parent[ru] = rv;
    }
}
