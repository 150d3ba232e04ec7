//! The extremal tree family: trees built from an underlying tree `T0` by
//! attaching one unit to every vertex (a pendant vertex, or a `P3` joined at
//! its center) to get the base tree `T1`, then hanging paths `P2` off a
//! 2-packing `L1` of leaves of `T1`.
//!
//! Also home to the other named graph families: subdivided stars, the five
//! exceptional graphs `B1..B5`, and `C5`.

mod build;
mod fixtures;
mod recognize;
mod sample;
mod spanning;
mod stars;
mod validate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::VertexSet;

pub use build::build_member;
pub use fixtures::{b_graphs, c5, worked_member_certificate, worked_member_tree};
pub use recognize::recognize_t;
pub use sample::random_spec;
pub use spanning::{spanning_trees, SpanningError, MAX_SPANNING_ORDER};
pub use stars::{is_subdivided_star, SubdividedStar};
pub use validate::{certificate_ntd_set, validate_certificate, Validation, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum UnitKind {
    /// The underlying vertex plus one pendant vertex.
    P2Unit,
    /// The underlying vertex joined to the center of a new `P3`.
    StarUnit,
}

impl UnitKind {
    /// Vertices the unit adds on top of its underlying vertex.
    pub fn added(self) -> usize {
        match self {
            UnitKind::P2Unit => 1,
            UnitKind::StarUnit => 3,
        }
    }
}

/// A leaf of the base tree, named by the underlying vertex whose unit holds it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeafRef {
    /// The pendant vertex of a P2-unit.
    Partner(usize),
    /// Leaf 0 or 1 of a star-unit.
    StarLeaf(usize, usize),
    /// The underlying vertex itself; a leaf of the base tree only when `T0 = K1`.
    Underlying(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Append {
    pub leaf: LeafRef,
    /// Number of appended `P2`s, at least 1.
    pub count: usize,
}

/// Construction recipe for a member of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TSpec {
    /// Edges of the underlying tree on vertices `0..unit_of.len()`.
    pub t0_edges: Vec<(usize, usize)>,
    /// Unit kind of each underlying vertex.
    pub unit_of: Vec<UnitKind>,
    pub appended: Vec<Append>,
}

impl TSpec {
    pub fn order(&self) -> usize {
        self.unit_of.iter().map(|k| 1 + k.added()).sum::<usize>()
            + 2 * self.appended.iter().map(|a| a.count).sum::<usize>()
    }
}

/// One block of the base tree's partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Unit {
    pub t0_vertex: usize,
    pub kind: UnitKind,
    /// `[partner]` for a P2-unit, `[center, leaf, leaf]` for a star-unit.
    pub added: Vec<usize>,
}

impl Unit {
    pub fn center(&self) -> Option<usize> {
        (self.kind == UnitKind::StarUnit).then(|| self.added[0])
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.t0_vertex).chain(self.added.iter().copied())
    }
}

/// The appended paths hanging off one `L1` vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendedGroup {
    pub host: usize,
    /// `(support, leaf)`: the support is adjacent to the host.
    pub pairs: Vec<(usize, usize)>,
}

/// Whether an appended `P2` hangs off a P2-unit (Type-1) or a star-unit (Type-2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AppendType {
    Type1,
    Type2,
}

/// Witness that a labeled tree belongs to the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TCertificate {
    #[serde(rename = "A")]
    pub underlying: VertexSet,
    pub unit_partition: Vec<Unit>,
    #[serde(rename = "L1")]
    pub l1: VertexSet,
    pub appended_p2s: Vec<AppendedGroup>,
}

impl TCertificate {
    /// Base-tree vertices outside the underlying tree.
    pub fn b(&self) -> VertexSet {
        self.unit_partition
            .iter()
            .flat_map(|u| u.added.iter().copied())
            .collect()
    }

    /// Star-unit centers.
    pub fn b1(&self) -> VertexSet {
        self.unit_partition
            .iter()
            .filter_map(Unit::center)
            .collect()
    }

    /// Appended leaves.
    pub fn c1(&self) -> VertexSet {
        self.pairs().map(|(_, leaf)| leaf).collect()
    }

    /// Appended supports.
    pub fn c2(&self) -> VertexSet {
        self.pairs().map(|(support, _)| support).collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.appended_p2s
            .iter()
            .flat_map(|g| g.pairs.iter().copied())
    }

    /// Vertex set of the base tree `T1`.
    pub fn base_vertices(&self) -> VertexSet {
        self.underlying | self.b()
    }

    pub fn unit_containing(&self, v: usize) -> Option<&Unit> {
        self.unit_partition
            .iter()
            .find(|u| u.vertices().any(|w| w == v))
    }

    pub fn append_type(&self, host: usize) -> Option<AppendType> {
        self.unit_containing(host).map(|u| match u.kind {
            UnitKind::P2Unit => AppendType::Type1,
            UnitKind::StarUnit => AppendType::Type2,
        })
    }

    /// The two non-underlying leaves `(a_v, b_v)` of a star-unit, named so
    /// that `b_v` is the blocked one when a leaf carries appended paths.
    pub fn star_leaves(&self, unit: &Unit) -> Option<(usize, usize)> {
        if unit.kind != UnitKind::StarUnit {
            return None;
        }
        let (a, b) = (unit.added[1], unit.added[2]);
        Some(if self.l1.contains(b) { (b, a) } else { (a, b) })
    }

    /// Every star center, plus the sibling leaf of a star leaf that carries
    /// appended paths.
    pub fn blocked(&self) -> VertexSet {
        let mut blocked = VertexSet::EMPTY;
        for unit in &self.unit_partition {
            let Some((a, b)) = self.star_leaves(unit) else {
                continue;
            };
            blocked.insert(unit.added[0]);
            if self.l1.contains(a) {
                blocked.insert(b);
            }
        }
        blocked
    }

    /// `2·#P2-units + 4·#star-units + 2·#appended pairs`.
    pub fn expected_order(&self) -> usize {
        self.unit_partition
            .iter()
            .map(|u| 1 + u.kind.added())
            .sum::<usize>()
            + 2 * self.pairs().count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("underlying tree has no vertices")]
    EmptyUnderlying,
    #[error("underlying edge ({0}, {1}) is out of range or a self-loop")]
    BadEdge(usize, usize),
    #[error("underlying edges do not form a tree")]
    UnderlyingNotTree,
    #[error("{0:?} does not name a leaf of the base tree")]
    NotALeaf(LeafRef),
    #[error("{0:?} listed more than once")]
    DuplicateLeaf(LeafRef),
    #[error("{0:?} has an append count of zero")]
    ZeroCount(LeafRef),
    #[error("append targets are not a 2-packing of the base tree")]
    NotTwoPacking,
    #[error("resulting order {0} exceeds the vertex capacity")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("order {0} is below 4")]
    TooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid certificate: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidCertificate(pub Vec<Violation>);
