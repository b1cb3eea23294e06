//! Explicit optimal Roman dominating functions of P(n, 2) and the closed
//! forms they are measured against.

use serde::Serialize;

use crate::assignment::{is_valid_rdf, RomanAssignment};
use crate::error::{Error, Result};
use crate::graph::{PetersenGraph, VertexId};

/// `n = 7m + t` with `0 <= t <= 6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConstructionCase {
    pub m: usize,
    pub t: usize,
}

impl ConstructionCase {
    pub fn of(n: usize) -> Self {
        ConstructionCase { m: n / 7, t: n % 7 }
    }
}

/// `⌈8n/7⌉` in integer arithmetic.
pub fn ceil_8n_over_7(n: u64) -> u64 {
    (8 * n).div_ceil(7)
}

/// Domination number of P(n, 2): `n - ⌊n/5⌋ - ⌊(n+2)/5⌋`.
pub fn gamma_formula(n: u64) -> u64 {
    n - n / 5 - (n + 2) / 5
}

/// Returns the `(V_2, V_1)` lists of the explicit construction for `n >= 5`.
pub fn construction_sets(n: usize) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    if n < 5 {
        return Err(Error::Domain(format!("construction needs n >= 5, got {n}")));
    }
    let g = PetersenGraph::p2(n)?;
    let v = |i: usize| g.v(i as i64);
    let u = |i: usize| g.u(i as i64);
    match n {
        5 => return Ok((vec![v(0), u(2), u(3)], vec![])),
        6 => return Ok((vec![v(0), u(3), u(4)], vec![v(2)])),
        _ => {}
    }

    let ConstructionCase { m, t } = ConstructionCase::of(n);
    let blocks = if t == 6 { m + 1 } else { m };
    let mut twos: Vec<VertexId> = (0..blocks)
        .flat_map(|i| [v(7 * i), u(7 * i + 3), u(7 * i + 4)])
        .collect();
    let mut ones: Vec<VertexId> = (0..m).flat_map(|i| [v(7 * i + 2), v(7 * i + 5)]).collect();

    match t {
        0 => {}
        1 => ones.extend([v(7 * m - 1), u(7 * m)]),
        2 => {
            twos.push(v(7 * m));
            ones.push(u(7 * m + 1));
        }
        3 => {
            twos.push(v(7 * m));
            ones.extend([u(7 * m + 1), u(7 * m + 2)]);
        }
        4 => {
            twos.extend([v(7 * m - 1), u(7 * m + 1), u(7 * m + 2)]);
            let drop = v(7 * m - 2);
            ones.retain(|&w| w != drop);
        }
        5 => twos.extend([v(7 * m), u(7 * m + 2), u(7 * m + 3)]),
        6 => ones.push(v(7 * m + 2)),
        _ => unreachable!(),
    }
    Ok((twos, ones))
}

/// The explicit RDF of weight `⌈8n/7⌉` for P(n, 2), `n >= 5`.
///
/// Every emitted assignment is checked for validity and weight; a failure is
/// reported as [`Error::Internal`] with the undominated vertices, never
/// repaired.
pub fn construct_rdf(n: usize) -> Result<RomanAssignment> {
    let (twos, ones) = construction_sets(n)?;
    let f = RomanAssignment::from_sets(n, &twos, &ones)
        .map_err(|e| Error::Internal(format!("construction for n = {n}: {e}")))?;
    let [_, n1, n2] = f.class_sizes();
    if n1 != ones.len() || n2 != twos.len() {
        return Err(Error::Internal(format!(
            "construction for n = {n} lists a vertex twice"
        )));
    }
    let g = PetersenGraph::p2(n)?;
    let report = is_valid_rdf(&g, &f)?;
    if !report.valid {
        let names: Vec<String> = report.violations.iter().map(|w| w.to_string()).collect();
        return Err(Error::Internal(format!(
            "construction for n = {n} leaves {} undominated",
            names.join(", ")
        )));
    }
    let expected = ceil_8n_over_7(n as u64);
    if f.weight() != expected {
        return Err(Error::Internal(format!(
            "construction for n = {n} has weight {} instead of {expected}",
            f.weight()
        )));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    #[test]
    fn ceil_examples() {
        assert_eq!(ceil_8n_over_7(7), 8);
        assert_eq!(ceil_8n_over_7(5), 6);
        assert_eq!(ceil_8n_over_7(12), 14);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_formula(5), 3);
        assert_eq!(gamma_formula(10), 6);
        assert_eq!(gamma_formula(7), 5);
    }

    fn sets(f: &RomanAssignment) -> (BTreeSet<String>, BTreeSet<String>) {
        let names = |l| f.class(l).iter().map(|w| w.to_string()).collect();
        (names(2), names(1))
    }

    fn names(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_cases() {
        let f5 = construct_rdf(5).unwrap();
        assert_eq!(sets(&f5), (names(&["v0", "u2", "u3"]), names(&[])));
        assert_eq!(f5.weight(), 6);

        let f7 = construct_rdf(7).unwrap();
        assert_eq!(sets(&f7), (names(&["v0", "u3", "u4"]), names(&["v2", "v5"])));
        assert_eq!(f7.weight(), 8);

        let f12 = construct_rdf(12).unwrap();
        assert_eq!(
            sets(&f12),
            (
                names(&["v0", "u3", "u4", "v7", "u9", "u10"]),
                names(&["v2", "v5"])
            )
        );
        assert_eq!(f12.weight(), 14);
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(construct_rdf(4), Err(Error::Domain(_))));
    }

    #[test]
    fn weight_lines_per_residue() {
        for n in 7..200usize {
            let ConstructionCase { m, t } = ConstructionCase::of(n);
            let (twos, ones) = construction_sets(n).unwrap();
            let m = m as u64;
            let (n2, n1) = match t {
                0 => (3 * m, 2 * m),
                1 => (3 * m, 2 * m + 2),
                2 => (3 * m + 1, 2 * m + 1),
                3 => (3 * m + 1, 2 * m + 2),
                4 => (3 * m + 3, 2 * m - 1),
                5 => (3 * m + 3, 2 * m),
                6 => (3 * m + 3, 2 * m + 1),
                _ => unreachable!(),
            };
            assert_eq!((twos.len() as u64, ones.len() as u64), (n2, n1), "n = {n}");
            assert_eq!(2 * n2 + n1, 8 * m + t as u64 + u64::from(t > 0), "n = {n}");
        }
    }
}
