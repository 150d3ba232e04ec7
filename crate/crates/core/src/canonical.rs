//! Canonical forms for trees.
//!
//! A rooted tree is encoded AHU-style as a balanced parenthesis string: a
//! vertex is `(` followed by its children's codes in ascending byte order,
//! then `)`. A free tree is rooted at its center; a bicentral tree takes the
//! smaller of its two rooted codes.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph is not a tree")]
pub struct NotATree;

const OPEN: u8 = b'(';
const CLOSE: u8 = b')';

/// Per-vertex subtree codes for one rooting.
struct Rooting {
    root: usize,
    parent: Vec<usize>,
    codes: Vec<Vec<u8>>,
}

impl Rooting {
    fn new(tree: &Graph, root: usize) -> Self {
        let n = tree.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([root]);
        parent[root] = root;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in tree.neighbors(u).iter() {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let mut codes: Vec<Vec<u8>> = vec![Vec::new(); n];
        for &u in order.iter().rev() {
            let mut children: Vec<&Vec<u8>> = tree
                .neighbors(u)
                .iter()
                .filter(|&w| parent[w] == u && w != root)
                .map(|w| &codes[w])
                .collect();
            children.sort_unstable();
            let len = 2 + children.iter().map(|c| c.len()).sum::<usize>();
            let mut code = Vec::with_capacity(len);
            code.push(OPEN);
            for c in children {
                code.extend_from_slice(c);
            }
            code.push(CLOSE);
            codes[u] = code;
        }
        Rooting {
            root,
            parent,
            codes,
        }
    }

    fn children(&self, tree: &Graph, u: usize) -> Vec<usize> {
        tree.neighbors(u)
            .iter()
            .filter(|&w| self.parent[w] == u && w != self.root)
            .collect()
    }
}

/// The one or two central vertices of a tree, ascending.
pub fn centers(tree: &Graph) -> Result<Vec<usize>, NotATree> {
    if !tree.is_tree() {
        return Err(NotATree);
    }
    let n = tree.order();
    if n <= 2 {
        return Ok((0..n).collect());
    }
    // peel leaves layer by layer
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for w in tree.neighbors(leaf).iter() {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    Ok(layer)
}

/// Code of `tree` rooted at `root`. The caller guarantees `tree` is a tree.
pub fn rooted_tree_code(tree: &Graph, root: usize) -> Vec<u8> {
    Rooting::new(tree, root).codes.swap_remove(root)
}

/// Root used by the canonical form and its code.
fn canonical_root(tree: &Graph) -> Result<(usize, Vec<u8>), NotATree> {
    let c = centers(tree)?;
    let mut best = (c[0], rooted_tree_code(tree, c[0]));
    if let Some(&other) = c.get(1) {
        let code = rooted_tree_code(tree, other);
        if code < best.1 {
            best = (other, code);
        }
    }
    Ok(best)
}

/// Isomorphism-invariant code: equal for two trees iff they are isomorphic.
pub fn canonical_tree_code(tree: &Graph) -> Result<Vec<u8>, NotATree> {
    canonical_root(tree).map(|(_, code)| code)
}

/// Canonical code rendered as text.
pub fn canonical_code_string(tree: &Graph) -> Result<String, NotATree> {
    canonical_tree_code(tree).map(|c| String::from_utf8(c).expect("parenthesis bytes"))
}

/// Relabels `tree` so that labels follow BFS order of its canonical rooting,
/// visiting children in ascending code order. Isomorphic trees map to
/// identical graphs.
pub fn canonical_labeling(tree: &Graph) -> Result<Graph, NotATree> {
    let (root, _) = canonical_root(tree)?;
    let rooting = Rooting::new(tree, root);
    let n = tree.order();
    let mut perm = vec![usize::MAX; n];
    let mut queue = VecDeque::from([root]);
    let mut next_label = 0;
    while let Some(u) = queue.pop_front() {
        perm[u] = next_label;
        next_label += 1;
        let mut children = rooting.children(tree, u);
        children.sort_by(|&a, &b| rooting.codes[a].cmp(&rooting.codes[b]));
        queue.extend(children);
    }
    Ok(tree.relabel(&perm))
}
