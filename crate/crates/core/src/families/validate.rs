use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{InvalidCertificate, TCertificate, UnitKind};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// One way a certificate fails to describe a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    NotATree,
    VertexOutOfRange { vertex: usize },
    Uncovered { vertex: usize },
    Repeated { vertex: usize },
    UnderlyingMismatch,
    BadUnitShape { t0_vertex: usize },
    EmptyGroup { host: usize },
    L1Mismatch,
    MissingEdge { u: usize, v: usize },
    UnexpectedEdge { u: usize, v: usize },
    UnderlyingDisconnected,
    HostNotBaseLeaf { host: usize },
    L1NotTwoPacking,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotATree => write!(f, "graph is not a tree"),
            Violation::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} in no block"),
            Violation::Repeated { vertex } => write!(f, "vertex {vertex} in several blocks"),
            Violation::UnderlyingMismatch => write!(f, "A differs from the unit vertices"),
            Violation::BadUnitShape { t0_vertex } => {
                write!(f, "unit of {t0_vertex} has the wrong number of vertices")
            }
            Violation::EmptyGroup { host } => write!(f, "host {host} carries no pairs"),
            Violation::L1Mismatch => write!(f, "L1 differs from the append hosts"),
            Violation::MissingEdge { u, v } => write!(f, "edge {u} {v} missing"),
            Violation::UnexpectedEdge { u, v } => write!(f, "edge {u} {v} not explained"),
            Violation::UnderlyingDisconnected => write!(f, "A does not induce a tree"),
            Violation::HostNotBaseLeaf { host } => {
                write!(f, "host {host} is not a leaf of the base tree")
            }
            Violation::L1NotTwoPacking => write!(f, "L1 is not a 2-packing of the base tree"),
        }
    }
}

/// Outcome of [`validate_certificate`]; valid iff no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every structural condition a certificate promises about `tree`.
pub fn validate_certificate(tree: &Graph, cert: &TCertificate) -> Validation {
    let mut violations = Vec::new();
    let n = tree.order();
    if !tree.is_tree() {
        violations.push(Violation::NotATree);
        return Validation { violations };
    }

    let mut referenced: Vec<usize> = cert.underlying.iter().chain(cert.l1.iter()).collect();
    for unit in &cert.unit_partition {
        referenced.extend(unit.vertices());
    }
    for group in &cert.appended_p2s {
        referenced.push(group.host);
        referenced.extend(group.pairs.iter().flat_map(|&(s, l)| [s, l]));
    }
    let out_of_range: BTreeSet<usize> = referenced.into_iter().filter(|&v| v >= n).collect();
    if !out_of_range.is_empty() {
        violations.extend(
            out_of_range
                .into_iter()
                .map(|vertex| Violation::VertexOutOfRange { vertex }),
        );
        return Validation { violations };
    }

    // blocks partition V
    let mut seen = vec![0usize; n];
    for unit in &cert.unit_partition {
        for v in unit.vertices() {
            seen[v] += 1;
        }
    }
    for (s, l) in cert.pairs() {
        seen[s] += 1;
        seen[l] += 1;
    }
    for (vertex, &count) in seen.iter().enumerate() {
        match count {
            0 => violations.push(Violation::Uncovered { vertex }),
            1 => {}
            _ => violations.push(Violation::Repeated { vertex }),
        }
    }

    let unit_roots: VertexSet = cert.unit_partition.iter().map(|u| u.t0_vertex).collect();
    if unit_roots != cert.underlying || cert.unit_partition.len() != cert.underlying.len() {
        violations.push(Violation::UnderlyingMismatch);
    }
    let mut shapes_ok = true;
    for unit in &cert.unit_partition {
        if unit.added.len() != unit.kind.added() {
            violations.push(Violation::BadUnitShape {
                t0_vertex: unit.t0_vertex,
            });
            shapes_ok = false;
        }
    }
    let hosts: VertexSet = cert.appended_p2s.iter().map(|g| g.host).collect();
    for group in cert.appended_p2s.iter().filter(|g| g.pairs.is_empty()) {
        violations.push(Violation::EmptyGroup { host: group.host });
    }
    if hosts != cert.l1 || hosts.len() != cert.appended_p2s.len() {
        violations.push(Violation::L1Mismatch);
    }
    if !violations.is_empty() || !shapes_ok {
        return Validation { violations };
    }

    // the edge set is exactly T[A] plus the unit and appended edges
    let mut expected: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut add = |u: usize, v: usize| {
        expected.insert((u.min(v), u.max(v)));
    };
    for unit in &cert.unit_partition {
        add(unit.t0_vertex, unit.added[0]);
        if unit.kind == UnitKind::StarUnit {
            add(unit.added[0], unit.added[1]);
            add(unit.added[0], unit.added[2]);
        }
    }
    for group in &cert.appended_p2s {
        for &(s, l) in &group.pairs {
            add(group.host, s);
            add(s, l);
        }
    }
    let actual: BTreeSet<(usize, usize)> = tree.edges().into_iter().collect();
    for &(u, v) in expected.difference(&actual) {
        violations.push(Violation::MissingEdge { u, v });
    }
    for &(u, v) in actual.difference(&expected) {
        if !(cert.underlying.contains(u) && cert.underlying.contains(v)) {
            violations.push(Violation::UnexpectedEdge { u, v });
        }
    }
    if !tree.induced_subgraph(cert.underlying).is_tree() {
        violations.push(Violation::UnderlyingDisconnected);
    }

    // L1 lives among the leaves of T1 and is a 2-packing there
    let base_vertices = cert.base_vertices();
    let base = tree.induced_subgraph(base_vertices);
    let index_in_base = |v: usize| (VertexSet::full(v) & base_vertices).len();
    let mut l1_in_base = VertexSet::EMPTY;
    for host in cert.l1.iter() {
        if !base_vertices.contains(host) || base.degree(index_in_base(host)) != 1 {
            violations.push(Violation::HostNotBaseLeaf { host });
        } else {
            l1_in_base.insert(index_in_base(host));
        }
    }
    if !base.is_2_packing(l1_in_base) {
        violations.push(Violation::L1NotTwoPacking);
    }
    Validation { violations }
}

/// `A ∪ B1 ∪ C1`: underlying vertices, star centers and appended leaves.
///
/// When `T0 = K1` carries a P2-unit whose underlying vertex is the host, the
/// underlying vertex and its partner trade places: the tree is the one built
/// with the partner as host, and the plain formula would leave the host's
/// neighbors isolated in `N(D)`.
pub fn certificate_ntd_set(
    tree: &Graph,
    cert: &TCertificate,
) -> Result<VertexSet, InvalidCertificate> {
    let validation = validate_certificate(tree, cert);
    if !validation.is_valid() {
        return Err(InvalidCertificate(validation.violations));
    }
    let mut set = cert.underlying | cert.b1() | cert.c1();
    for unit in &cert.unit_partition {
        if unit.kind == UnitKind::P2Unit && cert.l1.contains(unit.t0_vertex) {
            set.remove(unit.t0_vertex);
            set.insert(unit.added[0]);
        }
    }
    Ok(set)
}
