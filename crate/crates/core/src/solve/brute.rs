use std::time::Instant;

use super::{ParamKind, SolveError};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Tries every subset in ascending cardinality; the first hit is optimal.
pub(super) fn minimum(
    g: &Graph,
    kind: ParamKind,
    deadline: Option<Instant>,
) -> Result<(VertexSet, u64), SolveError> {
    let n = g.order() as u32;
    let limit = 1u128 << n;
    let mut nodes = 0u64;
    for k in 0..=n {
        if k == 0 {
            nodes += 1;
            if kind.accepts(g, VertexSet::EMPTY) {
                return Ok((VertexSet::EMPTY, nodes));
            }
            continue;
        }
        // Gosper's hack over k-subsets of 0..n
        let mut c: u128 = (1u128 << k) - 1;
        while c < limit {
            nodes += 1;
            let set = VertexSet::from_bits(c as u64);
            if kind.accepts(g, set) {
                return Ok((set, nodes));
            }
            if nodes & 0xFFFF == 0 && deadline.is_some_and(|d| Instant::now() >= d) {
                return Err(SolveError::BudgetExhausted {
                    best: g.vertices(),
                    nodes,
                });
            }
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            c = (((ripple ^ c) >> 2) / low) | ripple;
        }
    }
    Err(SolveError::Unsatisfiable { kind })
}
