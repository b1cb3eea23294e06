//! Roman dominating functions on P(n, 2).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{PetersenGraph, VertexId};

/// A total labeling `f : V -> {0, 1, 2}` of P(n, 2).
///
/// Labels are stored by graph slot: `v_0 .. v_{n-1}` then `u_0 .. u_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RomanAssignment {
    n: usize,
    labels: Vec<u8>,
}

impl RomanAssignment {
    pub fn filled(n: usize, label: u8) -> Self {
        assert!(label <= 2, "label {label} out of range");
        RomanAssignment { n, labels: vec![label; 2 * n] }
    }

    pub fn zeros(n: usize) -> Self {
        Self::filled(n, 0)
    }

    /// Builds an assignment from the outer and inner label rows.
    pub fn from_rings(outer: &[u8], inner: &[u8]) -> Result<Self> {
        if outer.len() != inner.len() {
            return Err(Error::Domain(format!(
                "ring lengths differ: outer {} vs inner {}",
                outer.len(),
                inner.len()
            )));
        }
        if let Some(&bad) = outer.iter().chain(inner).find(|&&l| l > 2) {
            return Err(Error::Domain(format!("label {bad} is not in {{0, 1, 2}}")));
        }
        let mut labels = outer.to_vec();
        labels.extend_from_slice(inner);
        Ok(RomanAssignment { n: outer.len(), labels })
    }

    /// Labels `twos` with 2, `ones` with 1 and everything else with 0.
    /// A vertex listed in both sets is rejected.
    pub fn from_sets(n: usize, twos: &[VertexId], ones: &[VertexId]) -> Result<Self> {
        let mut f = Self::zeros(n);
        for &w in twos {
            f.labels[slot(n, w)] = 2;
        }
        for &w in ones {
            let s = slot(n, w);
            if f.labels[s] == 2 {
                return Err(Error::Domain(format!("{w} listed with labels 1 and 2")));
            }
            f.labels[s] = 1;
        }
        Ok(f)
    }

    pub(crate) fn from_slots(n: usize, labels: Vec<u8>) -> Self {
        debug_assert_eq!(labels.len(), 2 * n);
        RomanAssignment { n, labels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, w: VertexId) -> u8 {
        self.labels[slot(self.n, w)]
    }

    pub fn set_label(&mut self, w: VertexId, label: u8) {
        assert!(label <= 2, "label {label} out of range");
        let s = slot(self.n, w);
        self.labels[s] = label;
    }

    pub fn with_label(&self, w: VertexId, label: u8) -> Self {
        let mut f = self.clone();
        f.set_label(w, label);
        f
    }

    pub fn outer(&self) -> &[u8] {
        &self.labels[..self.n]
    }

    pub fn inner(&self) -> &[u8] {
        &self.labels[self.n..]
    }

    /// Labels in slot order; this is also the serialized label sequence used
    /// for deterministic tie-breaking.
    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    /// `f(V) = n_1 + 2 n_2`.
    pub fn weight(&self) -> u64 {
        self.labels.iter().map(|&l| u64::from(l)).sum()
    }

    /// `n_i = |V_i|` for `i = 0, 1, 2`.
    pub fn class_sizes(&self) -> [usize; 3] {
        let mut sizes = [0; 3];
        for &l in &self.labels {
            sizes[l as usize] += 1;
        }
        sizes
    }

    /// The vertices carrying `label`, in scan order.
    pub fn class(&self, label: u8) -> Vec<VertexId> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == label)
            .map(|(s, _)| vertex_at(self.n, s))
            .collect()
    }

    /// The partition `(V_0; V_1; V_2)`.
    pub fn partition(&self) -> [Vec<VertexId>; 3] {
        [self.class(0), self.class(1), self.class(2)]
    }

    pub fn to_json(&self) -> AssignmentJson {
        AssignmentJson {
            n: self.n,
            k: 2,
            outer: self.outer().to_vec(),
            inner: self.inner().to_vec(),
        }
    }

    /// Parses the assignment schema
    /// `{"n": int, "k": 2, "outer": [0|1|2; n], "inner": [0|1|2; n]}`,
    /// reporting the path of the first offending field.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Schema {
            path: "$".into(),
            message: e.to_string(),
        })?;
        Self::from_json_value(&value)
    }

    pub fn from_json_value(value: &Value) -> Result<Self> {
        let schema = |path: &str, message: &str| Error::Schema {
            path: path.to_string(),
            message: message.to_string(),
        };
        let obj = value
            .as_object()
            .ok_or_else(|| schema("$", "expected an object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "n" | "k" | "outer" | "inner") {
                return Err(schema(&format!("$.{key}"), "unknown field"));
            }
        }
        let n = obj
            .get("n")
            .ok_or_else(|| schema("$.n", "missing field"))?
            .as_u64()
            .ok_or_else(|| schema("$.n", "expected a non-negative integer"))?
            as usize;
        match obj.get("k") {
            None => return Err(schema("$.k", "missing field")),
            Some(k) if k.as_u64() == Some(2) => {}
            Some(_) => return Err(schema("$.k", "expected 2")),
        }
        let ring = |name: &str| -> Result<Vec<u8>> {
            let path = format!("$.{name}");
            let items = obj
                .get(name)
                .ok_or_else(|| schema(&path, "missing field"))?
                .as_array()
                .ok_or_else(|| schema(&path, "expected an array"))?;
            if items.len() != n {
                return Err(schema(
                    &path,
                    &format!("expected {n} labels, found {}", items.len()),
                ));
            }
            items
                .iter()
                .enumerate()
                .map(|(i, item)| match item.as_u64() {
                    Some(l @ 0..=2) => Ok(l as u8),
                    _ => Err(schema(&format!("{path}[{i}]"), "expected 0, 1 or 2")),
                })
                .collect()
        };
        let outer = ring("outer")?;
        let inner = ring("inner")?;
        Self::from_rings(&outer, &inner)
    }
}

/// Wire form of an assignment. Index `i` of `outer` / `inner` is the label
/// of `v_i` / `u_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentJson {
    pub n: usize,
    pub k: usize,
    pub outer: Vec<u8>,
    pub inner: Vec<u8>,
}

impl Serialize for RomanAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RomanAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let value = Value::deserialize(d)?;
        Self::from_json_value(&value).map_err(serde::de::Error::custom)
    }
}

fn slot(n: usize, w: VertexId) -> usize {
    match w.ring {
        crate::graph::Ring::Outer => w.index % n,
        crate::graph::Ring::Inner => n + w.index % n,
    }
}

fn vertex_at(n: usize, s: usize) -> VertexId {
    if s < n {
        VertexId::outer(s)
    } else {
        VertexId::inner(s - n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub valid: bool,
    /// Every 0-labeled vertex without a 2-labeled neighbor, in scan order.
    pub violations: Vec<VertexId>,
}

fn check_dims(g: &PetersenGraph, f: &RomanAssignment) -> Result<()> {
    if g.n() != f.n() {
        return Err(Error::DimensionMismatch { assignment: f.n(), graph: g.n() });
    }
    Ok(())
}

fn has_two_neighbor(g: &PetersenGraph, f: &RomanAssignment, w: VertexId) -> bool {
    g.neighbors(w).iter().any(|&x| f.label(x) == 2)
}

/// Checks `V_0 ⊆ N[V_2]`.
pub fn is_valid_rdf(g: &PetersenGraph, f: &RomanAssignment) -> Result<ValidityReport> {
    check_dims(g, f)?;
    let violations: Vec<VertexId> = g
        .vertices()
        .filter(|&w| f.label(w) == 0 && !has_two_neighbor(g, f, w))
        .collect();
    Ok(ValidityReport { valid: violations.is_empty(), violations })
}

/// `true` iff `N[S] = V`.
pub fn is_dominating_set<I>(g: &PetersenGraph, set: I) -> bool
where
    I: IntoIterator<Item = VertexId>,
{
    let mut covered = vec![false; g.order()];
    for w in set {
        for x in g.closed_neighborhood(w) {
            covered[g.slot(x)] = true;
        }
    }
    covered.into_iter().all(|c| c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// A 1-labeled vertex next to a 2 drops to 0.
    DropOne,
    /// A 2 next to another 2 whose other neighbors are all nonzero drops to 0.
    DropTwo,
    /// A 2 next to another 2 drops to 0 and its 0-labeled other neighbors rise to 1.
    SplitTwo,
}

/// One normalization step: the vertex it is keyed on plus every relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizeMove {
    pub kind: MoveKind,
    pub vertex: VertexId,
    pub relabel: Vec<(VertexId, u8)>,
}

impl NormalizeMove {
    pub fn apply(&self, f: &mut RomanAssignment) {
        for &(w, l) in &self.relabel {
            f.set_label(w, l);
        }
    }

    /// Change in weight caused by the move (never positive).
    pub fn weight_delta(&self, before: &RomanAssignment) -> i64 {
        self.relabel
            .iter()
            .map(|&(w, l)| i64::from(l) - i64::from(before.label(w)))
            .sum()
    }
}

/// The first applicable normalization move in scan order, if any.
pub fn find_move(g: &PetersenGraph, f: &RomanAssignment) -> Option<NormalizeMove> {
    for w in g.vertices() {
        match f.label(w) {
            1 if has_two_neighbor(g, f, w) => {
                return Some(NormalizeMove {
                    kind: MoveKind::DropOne,
                    vertex: w,
                    relabel: vec![(w, 0)],
                });
            }
            2 => {
                let nbrs = g.neighbors(w);
                let Some(partner) = nbrs.iter().copied().filter(|&x| f.label(x) == 2).min()
                else {
                    continue;
                };
                let zeros: BTreeSet<VertexId> = nbrs
                    .iter()
                    .copied()
                    .filter(|&x| x != partner && f.label(x) == 0)
                    .collect();
                let mut relabel = vec![(w, 0)];
                let kind = if zeros.is_empty() {
                    MoveKind::DropTwo
                } else {
                    relabel.extend(zeros.into_iter().map(|x| (x, 1)));
                    MoveKind::SplitTwo
                };
                return Some(NormalizeMove { kind, vertex: w, relabel });
            }
            _ => {}
        }
    }
    None
}

/// `true` when no normalization move applies: no `V_1` vertex touches `V_2`
/// and `V_2` is independent.
pub fn is_normalized(g: &PetersenGraph, f: &RomanAssignment) -> bool {
    find_move(g, f).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub assignment: RomanAssignment,
    pub moves: Vec<NormalizeMove>,
}

/// Applies normalization moves until none applies, keeping the move log.
///
/// Each move strictly decreases `(weight, |V_2|)` lexicographically, so the
/// loop runs at most `4n` times. Validity is rechecked around every move.
pub fn normalize_traced(g: &PetersenGraph, f: &RomanAssignment) -> Result<Normalization> {
    let report = is_valid_rdf(g, f)?;
    if !report.valid {
        return Err(Error::InvalidRdf(report.violations));
    }
    let mut current = f.clone();
    let mut moves = Vec::new();
    while let Some(mv) = find_move(g, &current) {
        let before = (current.weight(), current.class_sizes()[2]);
        mv.apply(&mut current);
        let after = (current.weight(), current.class_sizes()[2]);
        if after >= before {
            return Err(Error::Internal(format!(
                "normalization move at {} did not decrease (weight, |V_2|)",
                mv.vertex
            )));
        }
        for &(changed, _) in &mv.relabel {
            for x in g.closed_neighborhood(changed) {
                if current.label(x) == 0 && !has_two_neighbor(g, &current, x) {
                    return Err(Error::Internal(format!(
                        "normalization move at {} left {x} undominated",
                        mv.vertex
                    )));
                }
            }
        }
        moves.push(mv);
    }
    Ok(Normalization { assignment: current, moves })
}

pub fn normalize(g: &PetersenGraph, f: &RomanAssignment) -> Result<RomanAssignment> {
    normalize_traced(g, f).map(|n| n.assignment)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> PetersenGraph {
        PetersenGraph::p2(n).unwrap()
    }

    fn paper_n5(g: &PetersenGraph) -> RomanAssignment {
        RomanAssignment::from_sets(5, &[g.v(0), g.u(2), g.u(3)], &[]).unwrap()
    }

    #[test]
    fn weights() {
        let g = p(5);
        assert_eq!(RomanAssignment::zeros(5).weight(), 0);
        assert_eq!(RomanAssignment::filled(5, 2).weight(), 20);
        assert_eq!(paper_n5(&g).weight(), 6);
    }

    #[test]
    fn validity_examples() {
        let g = p(5);
        assert!(is_valid_rdf(&g, &RomanAssignment::filled(5, 2)).unwrap().valid);
        let zero = is_valid_rdf(&g, &RomanAssignment::zeros(5)).unwrap();
        assert!(!zero.valid);
        assert_eq!(zero.violations.len(), 10);

        let g6 = p(6);
        let f6 = RomanAssignment::from_sets(6, &[g6.v(0), g6.u(3), g6.u(4)], &[g6.v(2)]).unwrap();
        assert!(is_valid_rdf(&g6, &f6).unwrap().valid);
        assert_eq!(f6.weight(), 7);
    }

    #[test]
    fn dimension_mismatch() {
        let g = p(6);
        assert!(matches!(
            is_valid_rdf(&g, &RomanAssignment::zeros(5)),
            Err(Error::DimensionMismatch { assignment: 5, graph: 6 })
        ));
    }

    #[test]
    fn dominating_set_examples() {
        let g = p(5);
        assert!(is_dominating_set(&g, g.vertices()));
        assert!(!is_dominating_set(&g, []));
        assert!(is_dominating_set(&g, [g.v(0), g.u(2), g.u(3)]));
        assert!(!is_dominating_set(&g, [g.v(0), g.u(2)]));
    }

    #[test]
    fn drop_one_fires_once() {
        let g = p(5);
        let f = paper_n5(&g).with_label(g.v(1), 1);
        let n = normalize_traced(&g, &f).unwrap();
        assert_eq!(n.moves.len(), 1);
        assert_eq!(n.moves[0].kind, MoveKind::DropOne);
        assert_eq!(n.moves[0].vertex, g.v(1));
        assert_eq!(n.assignment, paper_n5(&g));
        assert_eq!(n.assignment.weight(), f.weight() - 1);
    }

    #[test]
    fn all_twos_gets_lighter() {
        let g = p(5);
        let f = RomanAssignment::filled(5, 2);
        let out = normalize(&g, &f).unwrap();
        assert!(out.weight() < 20);
        assert!(is_valid_rdf(&g, &out).unwrap().valid);
        assert!(is_normalized(&g, &out));
    }

    #[test]
    fn split_two_keeps_weight_with_two_zero_neighbors() {
        // v0 and v1 labeled 2; v4 and u0 are 0 and dominated only by v0.
        let g = p(5);
        let mut f = paper_n5(&g);
        f.set_label(g.v(1), 2);
        let mv = find_move(&g, &f).unwrap();
        assert_eq!(mv.vertex, g.v(0));
        assert_eq!(mv.kind, MoveKind::SplitTwo);
        assert_eq!(mv.weight_delta(&f), 0);
    }

    #[test]
    fn rejects_invalid_input() {
        let g = p(5);
        assert!(matches!(
            normalize(&g, &RomanAssignment::zeros(5)),
            Err(Error::InvalidRdf(v)) if v.len() == 10
        ));
    }

    #[test]
    fn json_schema() {
        let g = p(5);
        let f = paper_n5(&g);
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"n":5,"k":2,"outer":[2,0,0,0,0],"inner":[0,0,2,2,0]}"#
        );
        assert_eq!(RomanAssignment::from_json_str(&text).unwrap(), f);

        let bad = r#"{"n":5,"k":2,"outer":[2,0,3,0,0],"inner":[0,0,2,2,0]}"#;
        assert!(matches!(
            RomanAssignment::from_json_str(bad),
            Err(Error::Schema { path, .. }) if path == "$.outer[2]"
        ));
        let short = r#"{"n":5,"k":2,"outer":[2,0,0,0],"inner":[0,0,2,2,0]}"#;
        assert!(matches!(
            RomanAssignment::from_json_str(short),
            Err(Error::Schema { path, .. }) if path == "$.outer"
        ));
        let k3 = r#"{"n":5,"k":3,"outer":[2,0,0,0,0],"inner":[0,0,2,2,0]}"#;
        assert!(matches!(
            RomanAssignment::from_json_str(k3),
            Err(Error::Schema { path, .. }) if path == "$.k"
        ));
    }
}
