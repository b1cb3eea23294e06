use super::{Method, SolveResult};
use crate::assignment::RomanAssignment;
use crate::error::{Error, Result};
use crate::graph::PetersenGraph;

/// Largest n accepted by [`solve_brute`] (`3^16` labelings).
pub const BRUTE_MAX_N: usize = 8;

/// Minimum over all `3^{2n}` labelings of P(n, 2) that are RDFs.
///
/// Labelings are enumerated as pairs `(V_2, V_1)` with `V_1` ranging over the
/// subsets of the complement of `V_2`, which visits each labeling exactly once.
pub fn solve_brute(n: usize) -> Result<SolveResult> {
    if n < 5 {
        return Err(Error::Domain(format!("P(n, 2) needs n >= 5, got {n}")));
    }
    if n > BRUTE_MAX_N {
        return Err(Error::Budget(format!(
            "exhaustive search is limited to n <= {BRUTE_MAX_N}, got {n}"
        )));
    }
    let g = PetersenGraph::p2(n)?;
    let order = g.order();
    let full: u32 = (1 << order) - 1;
    let neighbor_mask: Vec<u32> = g
        .vertices()
        .map(|w| g.neighbors(w).iter().fold(0, |m, &x| m | 1 << g.slot(x)))
        .collect();

    // dominated[S] = N(S) for every subset S.
    let mut dominated = vec![0u32; 1 << order];
    for s in 1..=full as usize {
        let low = s.trailing_zeros() as usize;
        dominated[s] = dominated[s & (s - 1)] | neighbor_mask[low];
    }

    let mut best = u32::MAX;
    let mut best_pair = (0u32, 0u32);
    for twos in 0..=full {
        let base = 2 * twos.count_ones();
        let dom = dominated[twos as usize];
        let rest = full & !twos;
        let mut ones = rest;
        loop {
            let zeros = rest & !ones;
            if zeros & !dom == 0 {
                let w = base + ones.count_ones();
                if w < best {
                    best = w;
                    best_pair = (twos, ones);
                }
            }
            if ones == 0 {
                break;
            }
            ones = (ones - 1) & rest;
        }
    }

    let (twos, ones) = best_pair;
    let labels = (0..order)
        .map(|s| {
            if twos >> s & 1 == 1 {
                2
            } else if ones >> s & 1 == 1 {
                1
            } else {
                0
            }
        })
        .collect();
    SolveResult::checked(n, Method::Brute, u64::from(best), RomanAssignment::from_slots(n, labels))
}
