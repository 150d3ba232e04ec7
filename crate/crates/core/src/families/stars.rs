use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A star `K_{1,rays}` with every edge subdivided once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdividedStar {
    /// The former star center. For `P3` (one ray) this is the lowest-labeled leaf.
    pub link: usize,
    pub rays: usize,
}

/// Recognizes subdivided stars; `None` for any other graph.
pub fn is_subdivided_star(tree: &Graph) -> Option<SubdividedStar> {
    let n = tree.order();
    if !tree.is_tree() || n < 3 || n.is_multiple_of(2) {
        return None;
    }
    if n == 3 {
        let link = tree.vertices().iter().find(|&v| tree.degree(v) == 1)?;
        return Some(SubdividedStar { link, rays: 1 });
    }
    let rays = (n - 1) / 2;
    let link = tree.vertices().iter().find(|&v| {
        tree.degree(v) == rays && tree.neighbors(v).iter().all(|w| tree.degree(w) == 2)
    })?;
    let middles = tree.neighbors(link);
    tree.vertices()
        .iter()
        .filter(|&v| v != link && !middles.contains(v))
        .all(|v| tree.degree(v) == 1)
        .then_some(SubdividedStar { link, rays })
}
