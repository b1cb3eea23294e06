use proptest::prelude::*;

use roman_petersen::{PetersenGraph, RomanAssignment};

/// Random labels, then each undominated 0 is raised to 1 or given a
/// 2-labeled neighbor, as chosen by `repair`.
pub fn repair(g: &PetersenGraph, outer: &[u8], inner: &[u8], repair: &[u8]) -> RomanAssignment {
    let mut f = RomanAssignment::from_rings(outer, inner).unwrap();
    for (slot, w) in g.vertices().enumerate() {
        if f.label(w) == 0 && !g.neighbors(w).iter().any(|&x| f.label(x) == 2) {
            match repair[slot] {
                0 => f.set_label(w, 1),
                r => f.set_label(g.neighbors(w)[(r - 1) as usize], 2),
            }
        }
    }
    f
}

pub fn valid_rdf(min_n: usize, max_n: usize) -> impl Strategy<Value = (PetersenGraph, RomanAssignment)> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(0u8..=2, n),
            proptest::collection::vec(0u8..=2, n),
            proptest::collection::vec(0u8..=3, 2 * n),
        )
            .prop_map(move |(outer, inner, fix)| {
                let g = PetersenGraph::p2(n).unwrap();
                let f = repair(&g, &outer, &inner, &fix);
                (g, f)
            })
    })
}
