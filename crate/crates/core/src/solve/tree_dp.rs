//! Linear-time γnt on trees.
//!
//! Root the tree and process vertices bottom-up. After the children of `v`
//! are merged, a partial solution is summarised by four flags:
//!
//! - `chosen`: `v ∈ S`;
//! - `child_in_set`: some child is in `S` (so `v ∈ N(S)` whatever the parent does);
//! - `child_in_open`: some child is in `N(S)`;
//! - `needs_open`: some child is in `N(S)` with no other neighbor in `N(S)`,
//!   so `v` itself must end up in `N(S)`.
//!
//! Whether a child is dominated and whether it has its neighbor in `N(S)` is
//! settled at the moment it is merged into its parent, because the parent's
//! `chosen` flag is the only outside information it depends on.

use std::time::Instant;

use super::{Method, ParamKind, SolveError, SolveResult};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct State {
    chosen: bool,
    child_in_set: bool,
    child_in_open: bool,
    needs_open: bool,
}

impl State {
    const COUNT: usize = 16;

    fn index(self) -> usize {
        self.chosen as usize
            | (self.child_in_set as usize) << 1
            | (self.child_in_open as usize) << 2
            | (self.needs_open as usize) << 3
    }

    fn from_index(i: usize) -> Self {
        State {
            chosen: i & 1 != 0,
            child_in_set: i & 2 != 0,
            child_in_open: i & 4 != 0,
            needs_open: i & 8 != 0,
        }
    }

    /// Folds a finished child into its parent, or `None` if the child's
    /// constraints fail under this parent.
    fn absorb(self, child: State) -> Option<State> {
        let child_open = child.child_in_set || self.chosen;
        if !(child.chosen || child_open) {
            return None; // child undominated
        }
        if child.needs_open && !child_open {
            return None;
        }
        Some(State {
            chosen: self.chosen,
            child_in_set: self.child_in_set || child.chosen,
            child_in_open: self.child_in_open || child_open,
            needs_open: self.needs_open || (child_open && !child.child_in_open),
        })
    }

    /// Constraints of the root, which has no parent to help.
    fn valid_root(self) -> bool {
        let dominated = self.chosen || self.child_in_set;
        let in_open = self.child_in_set;
        dominated && (!in_open || self.child_in_open) && (!self.needs_open || in_open)
    }
}

type Table = [Option<u32>; State::COUNT];

/// Back-pointer for one merge step: (parent state before, child state).
type Choice = [(u8, u8); State::COUNT];

pub fn ntd_number_tree_dp(tree: &Graph) -> Result<SolveResult, SolveError> {
    let start = Instant::now();
    if !tree.is_tree() {
        return Err(SolveError::NotATree);
    }
    let n = tree.order();
    if n < 2 {
        return Err(SolveError::Unsatisfiable {
            kind: ParamKind::Ntd,
        });
    }

    // parents and a BFS order from root 0
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    order.push(0);
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for w in tree.neighbors(u).iter() {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let children: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            tree.neighbors(u)
                .iter()
                .filter(|&w| w != 0 && parent[w] == u)
                .collect()
        })
        .collect();

    let mut tables: Vec<Table> = vec![[None; State::COUNT]; n];
    let mut choices: Vec<Vec<Choice>> = vec![Vec::new(); n];
    let mut nodes = 0u64;
    for &v in order.iter().rev() {
        let mut table: Table = [None; State::COUNT];
        for chosen in [false, true] {
            let s = State {
                chosen,
                child_in_set: false,
                child_in_open: false,
                needs_open: false,
            };
            table[s.index()] = Some(chosen as u32);
        }
        for &c in &children[v] {
            let mut next: Table = [None; State::COUNT];
            let mut choice: Choice = [(0, 0); State::COUNT];
            for (pi, pc) in table.iter().enumerate() {
                let Some(pc) = pc else { continue };
                for (ci, cc) in tables[c].iter().enumerate() {
                    let Some(cc) = cc else { continue };
                    nodes += 1;
                    let Some(merged) = State::from_index(pi).absorb(State::from_index(ci)) else {
                        continue;
                    };
                    let cost = pc + cc;
                    let slot = &mut next[merged.index()];
                    if slot.is_none_or(|old| cost < old) {
                        *slot = Some(cost);
                        choice[merged.index()] = (pi as u8, ci as u8);
                    }
                }
            }
            table = next;
            choices[v].push(choice);
        }
        tables[v] = table;
    }

    let (root_state, value) = tables[0]
        .iter()
        .enumerate()
        .filter(|(i, _)| State::from_index(*i).valid_root())
        .filter_map(|(i, c)| c.map(|c| (i, c)))
        .min_by_key(|&(i, c)| (c, i))
        .expect("every tree on two or more vertices has an NTD-set");

    // walk the back-pointers down from the root
    let mut witness = VertexSet::EMPTY;
    let mut stack = vec![(0usize, root_state)];
    while let Some((v, mut state)) = stack.pop() {
        if State::from_index(state).chosen {
            witness.insert(v);
        }
        for (k, &c) in children[v].iter().enumerate().rev() {
            let (before, child_state) = choices[v][k][state];
            stack.push((c, child_state as usize));
            state = before as usize;
        }
    }
    debug_assert_eq!(witness.len(), value as usize);
    debug_assert!(super::is_ntd_set(tree, witness));

    Ok(SolveResult {
        kind: ParamKind::Ntd,
        value: value as usize,
        witness,
        method: Method::TreeDp,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn dp(g: &Graph) -> usize {
        let r = ntd_number_tree_dp(g).unwrap();
        assert!(super::super::is_ntd_set(g, r.witness));
        assert_eq!(r.witness.len(), r.value);
        r.value
    }

    #[test]
    fn paths_and_stars() {
        assert_eq!(dp(&path(2)), 2);
        assert_eq!(dp(&path(4)), 2);
        assert_eq!(dp(&path(6)), 3);
        assert_eq!(dp(&path(8)), 4);
        assert_eq!(dp(&star(3)), 2);
        assert_eq!(dp(&star(5)), 2);
        assert_eq!(dp(&double_star(2, 2)), 2);
        assert_eq!(dp(&subdivided_star(4)), 5);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(ntd_number_tree_dp(&cycle(4)), Err(SolveError::NotATree));
        assert_eq!(
            ntd_number_tree_dp(&Graph::new(1).unwrap()),
            Err(SolveError::Unsatisfiable {
                kind: ParamKind::Ntd
            })
        );
    }
}
