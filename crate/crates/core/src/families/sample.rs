use rand::seq::SliceRandom;
use rand::Rng;

use super::build::BaseTree;
use super::{Append, TSpec, UnitKind};
use crate::enumerate::prufer_decode;
use crate::vertex_set::VertexSet;

/// Draws a valid spec whose tree has order in `4..=max_order`.
///
/// # Panics
/// If `max_order < 4` or it exceeds the vertex capacity.
pub fn random_spec<R: Rng + ?Sized>(rng: &mut R, max_order: usize) -> TSpec {
    assert!(
        (4..=crate::MAX_VERTICES).contains(&max_order),
        "max_order must lie in 4..={}",
        crate::MAX_VERTICES
    );
    loop {
        if let Some(spec) = attempt(rng, max_order) {
            return spec;
        }
    }
}

fn attempt<R: Rng + ?Sized>(rng: &mut R, max_order: usize) -> Option<TSpec> {
    let t = rng.gen_range(1..=max_order / 2);
    let unit_of: Vec<UnitKind> = (0..t)
        .map(|_| {
            if rng.gen_bool(0.5) {
                UnitKind::P2Unit
            } else {
                UnitKind::StarUnit
            }
        })
        .collect();
    let t0_edges = match t {
        1 => vec![],
        2 => vec![(0, 1)],
        _ => {
            let seq: Vec<usize> = (0..t - 2).map(|_| rng.gen_range(0..t)).collect();
            prufer_decode(&seq).edges()
        }
    };
    let mut spec = TSpec {
        t0_edges,
        unit_of,
        appended: vec![],
    };
    if spec.order() > max_order {
        return None;
    }

    let base = BaseTree::new(&spec).expect("sampled underlying tree is valid");
    let mut leaves = base.leaf_refs();
    leaves.shuffle(rng);
    let mut budget = max_order - spec.order();
    let mut l1 = VertexSet::EMPTY;
    for leaf in leaves {
        if budget < 2 || rng.gen_bool(0.4) {
            continue;
        }
        let label = base.leaf_label(leaf).expect("leaf_refs names leaves");
        if !base.graph.is_2_packing(l1.with(label)) {
            continue;
        }
        l1.insert(label);
        let count = rng.gen_range(1..=(budget / 2).min(3));
        budget -= 2 * count;
        spec.appended.push(Append { leaf, count });
    }
    (spec.order() >= 4).then_some(spec)
}
