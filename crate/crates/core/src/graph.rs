use std::collections::VecDeque;

use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the {MAX_VERTICES}-vertex capacity")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// Undirected simple graph on vertices `0..n` with one bitset row per vertex.
///
/// Rows are symmetric, irreflexive and never carry bits at or above `n`.
/// A graph is immutable once built; [`Graph::add_edge`] is only used while
/// constructing it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|row| row.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|row| row.len()).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph { n: self.n, adj }
    }

    /// `N(S)`: every vertex adjacent to some member of `set`.
    pub fn open_neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, set: VertexSet) -> VertexSet {
        self.open_neighborhood(set) | set
    }

    /// `G[S]`, relabeled so that the i-th smallest member of `set` becomes vertex i.
    pub fn induced_subgraph(&self, set: VertexSet) -> Graph {
        let members = set.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![VertexSet::EMPTY; members.len()];
        for (i, &v) in members.iter().enumerate() {
            for w in (self.adj[v] & set).iter() {
                adj[i].insert(index[w]);
            }
        }
        Graph {
            n: members.len(),
            adj,
        }
    }

    /// True iff some vertex has no neighbor. `n = 0` gives false.
    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|row| row.is_empty())
    }

    /// Members of `set` with no neighbor inside `set`, i.e. the isolated
    /// vertices of `G[set]` without building the subgraph.
    #[inline]
    pub fn isolated_within(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| self.adj[v].is_disjoint(set))
            .collect()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices within distance `radius` of `v`, including `v`.
    pub fn ball(&self, v: usize, radius: usize) -> VertexSet {
        let mut reached = VertexSet::singleton(v);
        for _ in 0..radius {
            reached = self.closed_neighborhood(reached);
        }
        reached
    }

    /// Every pair of distinct members is at distance at least 3.
    pub fn is_2_packing(&self, set: VertexSet) -> bool {
        // closed neighborhoods of a 2-packing are pairwise disjoint
        let mut covered = VertexSet::EMPTY;
        for v in set.iter() {
            let closed = self.closed_neighbors(v);
            if !covered.is_disjoint(closed) {
                return false;
            }
            covered |= closed;
        }
        true
    }

    /// `(L(G), S(G))`: the degree-1 vertices and their neighbors.
    pub fn leaves_and_supports(&self) -> (VertexSet, VertexSet) {
        let leaves: VertexSet = (0..self.n).filter(|&v| self.degree(v) == 1).collect();
        (leaves, self.open_neighborhood(leaves))
    }

    pub fn leaves(&self) -> VertexSet {
        self.leaves_and_supports().0
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut reached = VertexSet::singleton(0);
        loop {
            let next = self.closed_neighborhood(reached);
            if next == reached {
                return reached == self.vertices();
            }
            reached = next;
        }
    }

    /// Connected with `n - 1` edges; the empty graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Small named graphs used throughout tests and fixtures.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// Double star `S(a, b)`: adjacent centers 0 and 1 carrying `a` and `b` leaves.
    pub fn double_star(a: usize, b: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        edges.extend((0..a).map(|i| (0, 2 + i)));
        edges.extend((0..b).map(|i| (1, 2 + a + i)));
        Graph::from_edges(2 + a + b, &edges).expect("valid double star")
    }

    /// Star `K_{1,rays}` with every edge subdivided once; center 0, ray `i` is `2i+1 - 2i+2`.
    pub fn subdivided_star(rays: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..rays {
            edges.push((0, 2 * i + 1));
            edges.push((2 * i + 1, 2 * i + 2));
        }
        Graph::from_edges(2 * rays + 1, &edges).expect("valid subdivided star")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }
}
