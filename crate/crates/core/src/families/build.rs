use std::collections::BTreeSet;

use super::{AppendedGroup, LeafRef, SpecError, TCertificate, TSpec, Unit, UnitKind};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Base tree `T1` of a spec with the labels the builder assigns: underlying
/// vertices first, then each unit's added vertices in underlying-vertex order.
pub(super) struct BaseTree {
    pub graph: Graph,
    pub units: Vec<Unit>,
}

impl BaseTree {
    pub fn new(spec: &TSpec) -> Result<Self, SpecError> {
        let t = spec.unit_of.len();
        if t == 0 {
            return Err(SpecError::EmptyUnderlying);
        }
        let base_order: usize = spec.unit_of.iter().map(|k| 1 + k.added()).sum();
        if spec.order() > MAX_VERTICES {
            return Err(SpecError::TooLarge(spec.order()));
        }
        if let Some(&(u, v)) = spec
            .t0_edges
            .iter()
            .find(|&&(u, v)| u >= t || v >= t || u == v)
        {
            return Err(SpecError::BadEdge(u, v));
        }
        // a repeated edge cannot belong to a tree
        let t0 = Graph::from_edges(t, &spec.t0_edges).map_err(|_| SpecError::UnderlyingNotTree)?;
        if !t0.is_tree() {
            return Err(SpecError::UnderlyingNotTree);
        }

        let mut graph = Graph::new(base_order).expect("checked against capacity");
        for (u, v) in t0.edges() {
            graph.add_edge(u, v).expect("fresh edge");
        }
        let mut next = t;
        let mut units = Vec::with_capacity(t);
        for (x, &kind) in spec.unit_of.iter().enumerate() {
            let added: Vec<usize> = (next..next + kind.added()).collect();
            next += kind.added();
            graph.add_edge(x, added[0]).expect("fresh edge");
            if kind == UnitKind::StarUnit {
                graph.add_edge(added[0], added[1]).expect("fresh edge");
                graph.add_edge(added[0], added[2]).expect("fresh edge");
            }
            units.push(Unit {
                t0_vertex: x,
                kind,
                added,
            });
        }
        Ok(BaseTree { graph, units })
    }

    /// Label of a leaf reference, if it names a leaf of `T1`.
    pub fn leaf_label(&self, leaf: LeafRef) -> Option<usize> {
        let label = match leaf {
            LeafRef::Partner(x) => {
                let unit = self.units.get(x)?;
                (unit.kind == UnitKind::P2Unit).then(|| unit.added[0])?
            }
            LeafRef::StarLeaf(x, i) => {
                let unit = self.units.get(x)?;
                (unit.kind == UnitKind::StarUnit && i < 2).then(|| unit.added[1 + i])?
            }
            LeafRef::Underlying(x) => (x < self.units.len()).then_some(x)?,
        };
        (self.graph.degree(label) == 1).then_some(label)
    }

    /// Every leaf of `T1`, as references.
    pub fn leaf_refs(&self) -> Vec<LeafRef> {
        let mut out = Vec::new();
        for unit in &self.units {
            match unit.kind {
                UnitKind::P2Unit => out.push(LeafRef::Partner(unit.t0_vertex)),
                UnitKind::StarUnit => {
                    out.push(LeafRef::StarLeaf(unit.t0_vertex, 0));
                    out.push(LeafRef::StarLeaf(unit.t0_vertex, 1));
                }
            }
            if self.graph.degree(unit.t0_vertex) == 1 {
                out.push(LeafRef::Underlying(unit.t0_vertex));
            }
        }
        out
    }
}

/// Builds the tree described by `spec` together with its certificate.
pub fn build_member(spec: &TSpec) -> Result<(Graph, TCertificate), SpecError> {
    let base = BaseTree::new(spec)?;
    let mut hosts = Vec::with_capacity(spec.appended.len());
    let mut seen = BTreeSet::new();
    for append in &spec.appended {
        if !seen.insert(append.leaf) {
            return Err(SpecError::DuplicateLeaf(append.leaf));
        }
        if append.count == 0 {
            return Err(SpecError::ZeroCount(append.leaf));
        }
        let label = base
            .leaf_label(append.leaf)
            .ok_or(SpecError::NotALeaf(append.leaf))?;
        hosts.push(label);
    }
    let l1: VertexSet = hosts.iter().collect();
    if !base.graph.is_2_packing(l1) {
        return Err(SpecError::NotTwoPacking);
    }

    let n = spec.order();
    let mut tree = Graph::new(n).expect("checked against capacity");
    for (u, v) in base.graph.edges() {
        tree.add_edge(u, v).expect("fresh edge");
    }
    let mut next = base.graph.order();
    let mut groups = Vec::with_capacity(hosts.len());
    for (append, &host) in spec.appended.iter().zip(&hosts) {
        let mut pairs = Vec::with_capacity(append.count);
        for _ in 0..append.count {
            let (support, leaf) = (next, next + 1);
            next += 2;
            tree.add_edge(host, support).expect("fresh edge");
            tree.add_edge(support, leaf).expect("fresh edge");
            pairs.push((support, leaf));
        }
        groups.push(AppendedGroup { host, pairs });
    }
    groups.sort_by_key(|g| g.host);

    let certificate = TCertificate {
        underlying: VertexSet::full(spec.unit_of.len()),
        unit_partition: base.units,
        l1,
        appended_p2s: groups,
    };
    Ok((tree, certificate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_tree_code;
    use crate::families::Append;
    use crate::graph::named::{path, star};

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_tree_code(a).unwrap() == canonical_tree_code(b).unwrap()
    }

    #[test]
    fn k1_with_a_p2_unit_and_one_append_is_p4() {
        let spec = TSpec {
            t0_edges: vec![],
            unit_of: vec![UnitKind::P2Unit],
            appended: vec![Append {
                leaf: LeafRef::Partner(0),
                count: 1,
            }],
        };
        let (t, cert) = build_member(&spec).unwrap();
        assert!(iso(&t, &path(4)));
        assert_eq!(cert.expected_order(), 4);
    }

    #[test]
    fn k1_with_a_star_unit_is_k13() {
        let spec = TSpec {
            t0_edges: vec![],
            unit_of: vec![UnitKind::StarUnit],
            appended: vec![],
        };
        let (t, cert) = build_member(&spec).unwrap();
        assert!(iso(&t, &star(3)));
        assert_eq!(cert.b1().to_vec(), vec![1]);
    }

    #[test]
    fn p2_with_two_appends_is_p8() {
        let spec = TSpec {
            t0_edges: vec![(0, 1)],
            unit_of: vec![UnitKind::P2Unit, UnitKind::P2Unit],
            appended: vec![
                Append {
                    leaf: LeafRef::Partner(0),
                    count: 1,
                },
                Append {
                    leaf: LeafRef::Partner(1),
                    count: 1,
                },
            ],
        };
        let (t, _) = build_member(&spec).unwrap();
        assert!(iso(&t, &path(8)));
    }

    #[test]
    fn spec_errors() {
        let mut spec = TSpec {
            t0_edges: vec![(0, 1)],
            unit_of: vec![UnitKind::StarUnit, UnitKind::P2Unit],
            appended: vec![
                Append {
                    leaf: LeafRef::StarLeaf(0, 0),
                    count: 1,
                },
                Append {
                    leaf: LeafRef::StarLeaf(0, 1),
                    count: 1,
                },
            ],
        };
        assert_eq!(build_member(&spec).unwrap_err(), SpecError::NotTwoPacking);

        spec.appended = vec![Append {
            leaf: LeafRef::Underlying(0),
            count: 1,
        }];
        assert_eq!(
            build_member(&spec).unwrap_err(),
            SpecError::NotALeaf(LeafRef::Underlying(0))
        );
        spec.appended = vec![Append {
            leaf: LeafRef::Partner(0),
            count: 1,
        }];
        assert_eq!(
            build_member(&spec).unwrap_err(),
            SpecError::NotALeaf(LeafRef::Partner(0))
        );
        spec.appended = vec![Append {
            leaf: LeafRef::Partner(1),
            count: 0,
        }];
        assert_eq!(
            build_member(&spec).unwrap_err(),
            SpecError::ZeroCount(LeafRef::Partner(1))
        );

        spec.t0_edges = vec![];
        spec.appended.clear();
        assert_eq!(
            build_member(&spec).unwrap_err(),
            SpecError::UnderlyingNotTree
        );
        spec.t0_edges = vec![(0, 2)];
        assert_eq!(build_member(&spec).unwrap_err(), SpecError::BadEdge(0, 2));
        spec.unit_of.clear();
        assert_eq!(build_member(&spec).unwrap_err(), SpecError::EmptyUnderlying);
    }

    #[test]
    fn spec_json_shape() {
        let spec = TSpec {
            t0_edges: vec![(0, 1)],
            unit_of: vec![UnitKind::StarUnit, UnitKind::P2Unit],
            appended: vec![Append {
                leaf: LeafRef::StarLeaf(0, 1),
                count: 2,
            }],
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(
            json,
            r#"{"t0_edges":[[0,1]],"unit_of":["STAR_UNIT","P2_UNIT"],"appended":[{"leaf":{"star_leaf":[0,1]},"count":2}]}"#
        );
        assert_eq!(serde_json::from_str::<TSpec>(&json).unwrap(), spec);
    }
}
