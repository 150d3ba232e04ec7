//! Fixed graphs: the five exceptional graphs `B1..B5`, `C5`, and a worked
//! 36-vertex member of the family with its certificate.

use super::{AppendedGroup, TCertificate, Unit, UnitKind};
use crate::graph::named::cycle;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn octagon_with(chords: &[(usize, usize)]) -> Graph {
    let mut g = cycle(8);
    for &(u, v) in chords {
        g.add_edge(u, v).expect("chord is new");
    }
    g
}

/// `B1..B5` in order. `B2` uses labels `t=0, a=1, b=2, c=3, d=4, e=5`; the
/// octagons are labeled cyclically `0..7`.
pub fn b_graphs() -> Vec<Graph> {
    let b2 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 5), (4, 5)])
        .expect("valid B2");
    vec![
        cycle(4),
        b2,
        cycle(8),
        octagon_with(&[(0, 4)]),
        octagon_with(&[(0, 4), (1, 5)]),
    ]
}

pub fn c5() -> Graph {
    cycle(5)
}

const WORKED_MEMBER_EDGES: [(usize, usize); 35] = [
    (0, 1),
    (0, 9),
    (1, 2),
    (1, 6),
    (2, 3),
    (2, 12),
    (3, 4),
    (3, 13),
    (4, 5),
    (4, 7),
    (5, 8),
    (6, 10),
    (6, 11),
    (7, 14),
    (7, 15),
    (8, 16),
    (8, 17),
    (9, 18),
    (9, 19),
    (9, 20),
    (12, 21),
    (12, 22),
    (14, 23),
    (16, 24),
    (16, 25),
    (16, 26),
    (18, 27),
    (19, 28),
    (20, 29),
    (21, 30),
    (22, 31),
    (23, 32),
    (24, 33),
    (25, 34),
    (26, 35),
];

/// A 36-vertex member built on the path `0..5`: P2-units at 0, 2, 3, star-units
/// at 1, 4, 5, and appended paths on the leaves 9, 12, 14, 16.
pub fn worked_member_tree() -> Graph {
    Graph::from_edges(36, &WORKED_MEMBER_EDGES).expect("valid fixture")
}

pub fn worked_member_certificate() -> TCertificate {
    let p2 = |t0_vertex, partner| Unit {
        t0_vertex,
        kind: UnitKind::P2Unit,
        added: vec![partner],
    };
    let star = |t0_vertex, center, a, b| Unit {
        t0_vertex,
        kind: UnitKind::StarUnit,
        added: vec![center, a, b],
    };
    let group = |host, pairs: &[(usize, usize)]| AppendedGroup {
        host,
        pairs: pairs.to_vec(),
    };
    TCertificate {
        underlying: (0..6).collect(),
        unit_partition: vec![
            p2(0, 9),
            star(1, 6, 10, 11),
            p2(2, 12),
            p2(3, 13),
            star(4, 7, 14, 15),
            star(5, 8, 16, 17),
        ],
        l1: VertexSet::from_iter([9, 12, 14, 16]),
        appended_p2s: vec![
            group(9, &[(18, 27), (19, 28), (20, 29)]),
            group(12, &[(21, 30), (22, 31)]),
            group(14, &[(23, 32)]),
            group(16, &[(24, 33), (25, 34), (26, 35)]),
        ],
    }
}
