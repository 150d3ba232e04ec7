//! Non-isomorphic free trees of a given order.
//!
//! Rooted trees are generated as canonical level sequences (Beyer and
//! Hedetniemi's successor rule, constant amortized time per tree). A rooted
//! tree is kept only when its root is the canonical root of the underlying
//! free tree: the unique center, or for a bicentral tree the center whose
//! rooted code is smaller. Every free tree therefore appears exactly once.
//!
//! [`prufer_oracle_codes`] computes the same set of isomorphism classes by an
//! unrelated route (decoding labeled trees) and exists to check the generator.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::canonical::{canonical_labeling, canonical_tree_code, rooted_tree_code};
use crate::graph::Graph;

/// Largest order [`enumerate_trees`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 20;

/// Orders accepted by the Prüfer oracle. Beyond 12 the oracle takes minutes.
pub const PRUFER_ORACLE_ORDERS: std::ops::RangeInclusive<usize> = 2..=14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} outside the supported range {min}..={max}")]
    OrderOutOfRange {
        order: usize,
        min: usize,
        max: usize,
    },
}

/// Streams every free tree of one order once, canonically labeled
/// (labels follow BFS order of the canonical rooting).
#[derive(Debug, Clone)]
pub struct TreeStream {
    order: usize,
    levels: Option<Vec<usize>>,
}

pub fn enumerate_trees(order: usize) -> Result<TreeStream, EnumerationError> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&order) {
        return Err(EnumerationError::OrderOutOfRange {
            order,
            min: 1,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(TreeStream {
        order,
        // the path rooted at an end is the first sequence in this order
        levels: Some((0..order).collect()),
    })
}

impl TreeStream {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let levels = self.levels.take()?;
            self.levels = next_level_sequence(&levels);
            if let Some(tree) = centered_tree(&levels) {
                return Some(canonical_labeling(&tree).expect("level sequences describe trees"));
            }
        }
    }
}

/// Successor of a canonical level sequence (root at level 0), or `None`
/// after the star.
fn next_level_sequence(levels: &[usize]) -> Option<Vec<usize>> {
    let p = levels.iter().rposition(|&l| l > 1)?;
    let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1)?;
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - p + q];
    }
    Some(next)
}

/// Builds the rooted tree if its root is the canonical root of the free tree.
fn centered_tree(levels: &[usize]) -> Option<Graph> {
    let n = levels.len();
    let mut parent = vec![0usize; n];
    let mut last_at_level = vec![0usize; n];
    for (i, &l) in levels.iter().enumerate().skip(1) {
        parent[i] = last_at_level[l - 1];
        last_at_level[l] = i;
    }

    // height of each subtree, then the two tallest subtrees under the root
    let mut height = vec![0usize; n];
    for i in (1..n).rev() {
        let p = parent[i];
        height[p] = height[p].max(height[i] + 1);
    }
    let mut tallest: Option<(usize, usize)> = None; // (height, vertex)
    let mut second: Option<usize> = None;
    for i in (1..n).filter(|&i| levels[i] == 1) {
        match tallest {
            Some((h, _)) if height[i] <= h => second = second.max(Some(height[i])),
            _ => {
                second = tallest.map(|(h, _)| h).max(second);
                tallest = Some((height[i], i));
            }
        }
    }

    let edges: Vec<(usize, usize)> = (1..n).map(|i| (parent[i], i)).collect();
    let tree = Graph::from_edges(n, &edges).expect("level sequence edges are valid");
    let Some((h1, tall_child)) = tallest else {
        return Some(tree); // single vertex
    };
    match second {
        Some(h2) if h1 == h2 => Some(tree),
        Some(h2) if h1 == h2 + 1 => bicentral_keep(tree, tall_child),
        None if h1 == 0 => bicentral_keep(tree, tall_child),
        _ => None,
    }
}

/// Root 0 and `other` are the two centers; keep the smaller rooted code.
fn bicentral_keep(tree: Graph, other: usize) -> Option<Graph> {
    (rooted_tree_code(&tree, 0) <= rooted_tree_code(&tree, other)).then_some(tree)
}

/// Decodes a Prüfer sequence over labels `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&j| degree[j] == 1).expect("a leaf remains");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&j| degree[j] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

/// Canonical codes of all labeled trees on `order` vertices.
///
/// Only sequences in which the multiplicity of each label is non-increasing in
/// the label are decoded. A label's multiplicity is its degree minus one, and
/// every tree has a labeling with degrees non-increasing in the label, so each
/// isomorphism class is still reached.
pub fn prufer_oracle_codes(order: usize) -> Result<BTreeSet<Vec<u8>>, EnumerationError> {
    if !PRUFER_ORACLE_ORDERS.contains(&order) {
        return Err(EnumerationError::OrderOutOfRange {
            order,
            min: *PRUFER_ORACLE_ORDERS.start(),
            max: *PRUFER_ORACLE_ORDERS.end(),
        });
    }
    let len = order - 2;
    let mut codes = BTreeSet::new();
    let mut multiplicities = Vec::new();
    for_each_partition(len, len.max(1), order, &mut multiplicities, &mut |parts| {
        let mut seq: Vec<usize> = parts
            .iter()
            .enumerate()
            .flat_map(|(label, &m)| std::iter::repeat_n(label, m))
            .collect();
        loop {
            let tree = prufer_decode(&seq);
            codes.insert(canonical_tree_code(&tree).expect("decoded tree"));
            if !next_permutation(&mut seq) {
                break;
            }
        }
    });
    Ok(codes)
}

pub fn prufer_oracle_count(order: usize) -> Result<usize, EnumerationError> {
    prufer_oracle_codes(order).map(|c| c.len())
}

/// Calls `f` with every non-increasing sequence of positive parts summing to
/// `remaining`, each part at most `max_part`, with at most `max_len` parts.
fn for_each_partition(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    parts: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        f(parts);
        return;
    }
    if parts.len() == max_len {
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        parts.push(part);
        for_each_partition(remaining - part, part, max_len, parts, f);
        parts.pop();
    }
}

/// Lexicographic successor in place; false once the sequence is descending.
fn next_permutation(seq: &mut [usize]) -> bool {
    let Some(i) = seq.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = seq
        .iter()
        .rposition(|&x| x > seq[i])
        .expect("pivot has a successor");
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::{path, star};

    fn codes_of(order: usize) -> Vec<Vec<u8>> {
        enumerate_trees(order)
            .unwrap()
            .map(|t| canonical_tree_code(&t).unwrap())
            .collect()
    }

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_trees(1).unwrap().count(), 1);
        assert_eq!(enumerate_trees(2).unwrap().count(), 1);
        let four = codes_of(4);
        assert_eq!(four.len(), 2);
        let expected: BTreeSet<_> = [path(4), star(3)]
            .iter()
            .map(|t| canonical_tree_code(t).unwrap())
            .collect();
        assert_eq!(four.into_iter().collect::<BTreeSet<_>>(), expected);
        assert_eq!(enumerate_trees(7).unwrap().count(), 11);
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(21).is_err());
        assert!(prufer_oracle_count(1).is_err());
        assert!(prufer_oracle_count(15).is_err());
    }

    #[test]
    fn output_is_canonically_labeled() {
        for t in enumerate_trees(8).unwrap() {
            assert_eq!(canonical_labeling(&t).unwrap(), t);
        }
    }

    #[test]
    fn oracle_small_values() {
        assert_eq!(prufer_oracle_count(2).unwrap(), 1);
        assert_eq!(prufer_oracle_count(3).unwrap(), 1);
        assert_eq!(prufer_oracle_count(5).unwrap(), 3);
        assert_eq!(prufer_oracle_count(6).unwrap(), 6);
    }

    #[test]
    fn decode_known_sequence() {
        // [3, 3, 3] on 5 labels is the star centered at 3
        let t = prufer_decode(&[3, 3, 3]);
        assert_eq!(t.degree(3), 4);
        assert!(t.is_tree());
        assert_eq!(prufer_decode(&[]).edges(), vec![(0, 1)]);
    }

    #[test]
    fn permutations_of_multisets() {
        let mut seq = vec![0, 0, 1];
        let mut seen = vec![seq.clone()];
        while next_permutation(&mut seq) {
            seen.push(seq.clone());
        }
        assert_eq!(seen, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }
}
