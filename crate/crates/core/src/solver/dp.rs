//! Column sweep for P(n, 2).
//!
//! Column `i` is the pair `(v_i, u_i)`. Every edge joins columns at distance
//! at most 2, so after column `i` only three vertices still have neighbors
//! in later columns: `v_i` (via `v_{i+1}`), `u_{i-1}` (via `u_{i+1}`) and
//! `u_i` (via `u_{i+2}`). The sweep carries one [`Status`] for each.
//!
//! The cycle is closed by guessing the frontier left behind by the last two
//! columns, sweeping from column 0 with that guess as the incoming state, and
//! accepting only sweeps whose final frontier equals the guess.

use super::{Method, SolveResult};
use crate::assignment::RomanAssignment;
use crate::error::{Error, Result};

/// What later columns need to know about a frontier vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    /// Labeled 0 and not yet adjacent to any 2.
    Need = 0,
    /// Labeled 1, or labeled 0 and already dominated.
    Done = 1,
    /// Labeled 2.
    Two = 2,
}

impl Status {
    const ALL: [Status; 3] = [Status::Need, Status::Done, Status::Two];

    fn of(label: u8, dominated: bool) -> Status {
        match label {
            2 => Status::Two,
            1 => Status::Done,
            _ if dominated => Status::Done,
            _ => Status::Need,
        }
    }
}

/// Frontier after column `i`: statuses of `v_i`, `u_{i-1}` and `u_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnState {
    pub outer: Status,
    pub inner_prev: Status,
    pub inner: Status,
}

const STATES: usize = 27;

impl ColumnState {
    fn code(self) -> usize {
        self.outer as usize + 3 * self.inner_prev as usize + 9 * self.inner as usize
    }

    fn decode(code: usize) -> Self {
        ColumnState {
            outer: Status::ALL[code % 3],
            inner_prev: Status::ALL[code / 3 % 3],
            inner: Status::ALL[code / 9],
        }
    }

    /// Adds column `(v_{i+1}, u_{i+1})` labeled `(a, b)`. Returns `None` when
    /// a vertex leaving the frontier would stay undominated.
    pub fn advance(self, a: u8, b: u8) -> Option<ColumnState> {
        // v_i's last neighbor is v_{i+1}; u_{i-1}'s last is u_{i+1}.
        if self.outer == Status::Need && a != 2 {
            return None;
        }
        if self.inner_prev == Status::Need && b != 2 {
            return None;
        }
        Some(ColumnState {
            outer: Status::of(a, self.outer == Status::Two || b == 2),
            inner_prev: self.inner,
            inner: Status::of(b, self.inner_prev == Status::Two || a == 2),
        })
    }
}

/// One transition per state and label pair, cached as a table.
fn transition_table() -> Vec<[Option<usize>; 9]> {
    (0..STATES)
        .map(|code| {
            let state = ColumnState::decode(code);
            std::array::from_fn(|ab| state.advance((ab / 3) as u8, (ab % 3) as u8).map(ColumnState::code))
        })
        .collect()
}

struct SeedOutcome {
    weight: u64,
    labels: Vec<u8>,
}

fn sweep(n: usize, seed: usize, table: &[[Option<usize>; 9]]) -> Option<SeedOutcome> {
    const INF: u64 = u64::MAX;
    let mut cost = [INF; STATES];
    cost[seed] = 0;
    // back[i][s] = (previous state, label pair index) for column i.
    let mut back = vec![[(usize::MAX, 0u8); STATES]; n];
    for column in back.iter_mut() {
        let mut next = [INF; STATES];
        for (s, &c) in cost.iter().enumerate() {
            if c == INF {
                continue;
            }
            for (ab, t) in table[s].iter().enumerate() {
                let Some(t) = *t else { continue };
                let w = c + (ab / 3) as u64 + (ab % 3) as u64;
                if w < next[t] {
                    next[t] = w;
                    column[t] = (s, ab as u8);
                }
            }
        }
        cost = next;
    }
    if cost[seed] == INF {
        return None;
    }
    let mut outer = vec![0u8; n];
    let mut inner = vec![0u8; n];
    let mut s = seed;
    for i in (0..n).rev() {
        let (prev, ab) = back[i][s];
        outer[i] = ab / 3;
        inner[i] = ab % 3;
        s = prev;
    }
    debug_assert_eq!(s, seed);
    outer.extend(inner);
    Some(SeedOutcome { weight: cost[seed], labels: outer })
}

/// Exact minimum RDF weight of P(n, 2) for any `n >= 5`.
///
/// Each of the 27 possible incoming frontiers is swept independently. Among
/// optimal sweeps the witness with the smallest label sequence wins, so the
/// result does not depend on seed order.
pub fn solve_dp(n: usize) -> Result<SolveResult> {
    if n < 5 {
        return Err(Error::Domain(format!("P(n, 2) needs n >= 5, got {n}")));
    }
    let table = transition_table();
    let best = (0..STATES)
        .filter_map(|seed| sweep(n, seed, &table))
        .min_by(|x, y| x.weight.cmp(&y.weight).then_with(|| x.labels.cmp(&y.labels)))
        .ok_or_else(|| Error::Internal(format!("no closed sweep for n = {n}")))?;
    SolveResult::checked(n, Method::Dp, best.weight, RomanAssignment::from_slots(n, best.labels))
}
