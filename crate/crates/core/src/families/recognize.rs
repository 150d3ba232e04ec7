//! Membership test for the extremal family.
//!
//! A member is the same thing as a labeling of its vertices with nine roles
//! whose neighbor counts obey local rules:
//!
//! | role | meaning | neighbors |
//! |------|---------|-----------|
//! | `A0` | underlying vertex | one unit vertex (`P0`, `P1`, `C`), any number of `A0` |
//! | `A1` | underlying vertex of `T0 = K1` carrying appended paths | one of `P0`, `C`; at least one `AS` |
//! | `P0` | P2-unit partner | one of `A0`, `A1` |
//! | `P1` | P2-unit partner carrying appended paths | one `A0`; at least one `AS` |
//! | `C`  | star-unit center | one of `A0`, `A1`; two star leaves, at most one `S1`, none if the `A` is `A1` |
//! | `S0` | star-unit leaf | one `C` |
//! | `S1` | star-unit leaf carrying appended paths | one `C`; at least one `AS` |
//! | `AS` | appended support | one `AL`; one of `P1`, `S1`, `A1` |
//! | `AL` | appended leaf | one `AS` |
//!
//! Hosts are leaves of the base tree by construction, and the only pairs of
//! base-tree leaves within distance 2 are the two leaves of one star-unit and
//! the pairs involving the underlying vertex when `T0 = K1`; the rules forbid
//! exactly those. Underlying vertices induce a connected subtree because no
//! path between two of them can leave `A`.
//!
//! On a tree the labeling problem is solved exactly by dynamic programming
//! over (role of v, role of parent), tracking capped neighbor-category counts.

use std::collections::BTreeSet;

use super::{AppendedGroup, RecognizeError, TCertificate, Unit, UnitKind};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Role {
    A0,
    A1,
    P0,
    P1,
    C,
    S0,
    S1,
    As,
    Al,
}

use Role::*;

const ROLES: [Role; 9] = [A0, A1, P0, P1, C, S0, S1, As, Al];
const CAP: u8 = 3;

type Counts = [u8; 4];

impl Role {
    /// Which counter a neighbor of role `other` feeds, or `None` if such a
    /// neighbor is forbidden.
    fn category(self, other: Role) -> Option<usize> {
        match (self, other) {
            (A0, P0 | P1 | C) => Some(0),
            (A0, A0) => Some(1),
            (A1, P0 | C) => Some(0),
            (A1, As) => Some(1),
            (P0, A0 | A1) => Some(0),
            (P1, A0) => Some(0),
            (P1, As) => Some(1),
            (C, A0) => Some(0),
            (C, A1) => Some(1),
            (C, S0) => Some(2),
            (C, S1) => Some(3),
            (S0, C) => Some(0),
            (S1, C) => Some(0),
            (S1, As) => Some(1),
            (As, Al) => Some(0),
            (As, P1 | S1 | A1) => Some(1),
            (Al, As) => Some(0),
            _ => None,
        }
    }

    fn accepts(self, c: &Counts) -> bool {
        match self {
            A0 => c[0] == 1,
            A1 => c[0] == 1 && c[1] >= 1,
            P0 => c[0] == 1,
            P1 => c[0] == 1 && c[1] >= 1,
            C => c[0] + c[1] == 1 && c[2] + c[3] == 2 && c[3] <= 1 && !(c[1] == 1 && c[3] > 0),
            S0 => c[0] == 1,
            S1 => c[0] == 1 && c[1] >= 1,
            As => c[0] == 1 && c[1] == 1,
            Al => c[0] == 1,
        }
    }

    fn is_underlying(self) -> bool {
        matches!(self, A0 | A1)
    }

    fn is_host(self) -> bool {
        matches!(self, A1 | P1 | S1)
    }
}

fn bump(mut counts: Counts, category: usize) -> Counts {
    counts[category] = (counts[category] + 1).min(CAP);
    counts
}

struct Rooted {
    order: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl Rooted {
    fn new(tree: &Graph) -> Self {
        let n = tree.order();
        let mut parent = vec![usize::MAX; n];
        parent[0] = 0;
        let mut order = vec![0];
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
        let children = (0..n)
            .map(|u| {
                tree.neighbors(u)
                    .iter()
                    .filter(|&w| w != 0 && parent[w] == u)
                    .collect()
            })
            .collect();
        Rooted { order, children }
    }
}

/// `feasible[v][role][parent]`, where parent slot 9 means "no parent".
type Feasible = Vec<[[bool; 10]; 9]>;

struct Labeler<'a> {
    rooted: &'a Rooted,
    feasible: Feasible,
}

impl Labeler<'_> {
    /// Roles a child may take under a parent of role `parent`.
    fn child_roles(&self, child: usize, parent: Role) -> impl Iterator<Item = Role> + '_ {
        ROLES.into_iter().filter(move |&r| {
            parent.category(r).is_some() && self.feasible[child][r as usize][parent as usize]
        })
    }

    /// Reachable count vectors after each prefix of `v`'s children, for `v` in `role`.
    fn layers(&self, v: usize, role: Role) -> Vec<BTreeSet<Counts>> {
        let mut layers = vec![BTreeSet::from([[0u8; 4]])];
        for &c in &self.rooted.children[v] {
            let prev = layers.last().expect("non-empty");
            let mut next = BTreeSet::new();
            for r in self.child_roles(c, role) {
                let cat = role.category(r).expect("filtered");
                next.extend(prev.iter().map(|&counts| bump(counts, cat)));
            }
            layers.push(next);
        }
        layers
    }

    fn closes(role: Role, counts: Counts, parent: Option<Role>) -> bool {
        match parent {
            None => role.accepts(&counts),
            Some(p) => role
                .category(p)
                .is_some_and(|cat| role.accepts(&bump(counts, cat))),
        }
    }
}

fn parent_slot(parent: Option<Role>) -> usize {
    parent.map_or(9, |p| p as usize)
}

/// Returns a certificate if `tree` belongs to the family, `None` otherwise.
pub fn recognize_t(tree: &Graph) -> Result<Option<TCertificate>, RecognizeError> {
    if !tree.is_tree() {
        return Err(RecognizeError::NotATree);
    }
    let n = tree.order();
    if n % 2 == 1 {
        return Err(RecognizeError::OddOrder(n));
    }
    if n < 4 {
        return Err(RecognizeError::TooSmall(n));
    }

    let rooted = Rooted::new(tree);
    let mut labeler = Labeler {
        rooted: &rooted,
        feasible: vec![[[false; 10]; 9]; n],
    };
    for &v in rooted.order.iter().rev() {
        for role in ROLES {
            let last = labeler.layers(v, role).pop().expect("non-empty");
            let mut row = [false; 10];
            for parent in ROLES.map(Some).into_iter().chain([None]) {
                row[parent_slot(parent)] = last.iter().any(|&c| Labeler::closes(role, c, parent));
            }
            labeler.feasible[v][role as usize] = row;
        }
    }

    let Some(root_role) = ROLES
        .into_iter()
        .find(|&r| labeler.feasible[0][r as usize][parent_slot(None)])
    else {
        return Ok(None);
    };

    // top-down: fix a closing count vector, then peel children off the layers
    let mut roles = vec![A0; n];
    let mut stack = vec![(0usize, root_role, None::<Role>)];
    while let Some((v, role, parent)) = stack.pop() {
        roles[v] = role;
        let layers = labeler.layers(v, role);
        let mut target = *layers
            .last()
            .expect("non-empty")
            .iter()
            .find(|&&c| Labeler::closes(role, c, parent))
            .expect("feasible role has a closing vector");
        for (k, &c) in rooted.children[v].iter().enumerate().rev() {
            let (prev, child_role) = layers[k]
                .iter()
                .find_map(|&prev| {
                    labeler
                        .child_roles(c, role)
                        .find(|&r| bump(prev, role.category(r).expect("filtered")) == target)
                        .map(|r| (prev, r))
                })
                .expect("layer entries are reachable");
            stack.push((c, child_role, Some(role)));
            target = prev;
        }
    }
    Ok(Some(certificate_from_roles(tree, &roles)))
}

fn certificate_from_roles(tree: &Graph, roles: &[Role]) -> TCertificate {
    let with_role = |set: VertexSet, wanted: &[Role]| -> Vec<usize> {
        set.iter().filter(|&w| wanted.contains(&roles[w])).collect()
    };
    let mut underlying = VertexSet::EMPTY;
    let mut units = Vec::new();
    let mut l1 = VertexSet::EMPTY;
    let mut groups = Vec::new();
    for v in 0..tree.order() {
        let role = roles[v];
        if role.is_underlying() {
            underlying.insert(v);
            let unit_vertex = with_role(tree.neighbors(v), &[P0, P1, C])[0];
            let unit = if roles[unit_vertex] == C {
                let mut added = vec![unit_vertex];
                added.extend(with_role(tree.neighbors(unit_vertex), &[S0, S1]));
                Unit {
                    t0_vertex: v,
                    kind: UnitKind::StarUnit,
                    added,
                }
            } else {
                Unit {
                    t0_vertex: v,
                    kind: UnitKind::P2Unit,
                    added: vec![unit_vertex],
                }
            };
            units.push(unit);
        }
        if role.is_host() {
            l1.insert(v);
            let pairs = with_role(tree.neighbors(v), &[As])
                .into_iter()
                .map(|s| (s, with_role(tree.neighbors(s), &[Al])[0]))
                .collect();
            groups.push(AppendedGroup { host: v, pairs });
        }
    }
    TCertificate {
        underlying,
        unit_partition: units,
        l1,
        appended_p2s: groups,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::validate_certificate;
    use crate::graph::named::{double_star, path, star};

    fn accepts(t: &Graph) -> bool {
        match recognize_t(t).unwrap() {
            Some(cert) => {
                assert!(validate_certificate(t, &cert).is_valid(), "{cert:?}");
                true
            }
            None => false,
        }
    }

    #[test]
    fn small_members() {
        assert!(accepts(&path(4)));
        assert!(accepts(&star(3)));
        assert!(accepts(&path(6)));
        assert!(accepts(&path(8)));
        assert!(!accepts(&double_star(2, 2)));
        assert!(!accepts(&star(5)));
    }

    #[test]
    fn preconditions() {
        assert_eq!(recognize_t(&path(5)), Err(RecognizeError::OddOrder(5)));
        assert_eq!(recognize_t(&path(2)), Err(RecognizeError::TooSmall(2)));
        assert_eq!(
            recognize_t(&crate::graph::named::cycle(4)),
            Err(RecognizeError::NotATree)
        );
    }
}
