//! The generalized Petersen graph P(n, k).
//!
//! Vertices are the outer cycle `v_0 .. v_{n-1}` and the inner vertices
//! `u_0 .. u_{n-1}`. Edges are `v_i v_{i+1}`, the spokes `v_i u_i` and the
//! inner steps `u_i u_{i+k}`, all subscripts modulo n.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Outer,
    Inner,
}

/// A vertex `v_i` (outer) or `u_i` (inner). The index is always reduced mod n.
///
/// The derived ordering is the canonical scan order: the whole outer ring by
/// index, then the whole inner ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId {
    pub ring: Ring,
    pub index: usize,
}

impl VertexId {
    pub fn outer(index: usize) -> Self {
        VertexId { ring: Ring::Outer, index }
    }

    pub fn inner(index: usize) -> Self {
        VertexId { ring: Ring::Inner, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ring {
            Ring::Outer => write!(f, "v{}", self.index),
            Ring::Inner => write!(f, "u{}", self.index),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersenGraph {
    n: usize,
    k: usize,
    // Indexed by `slot`: outer vertices first, then inner.
    adjacency: Vec<[VertexId; 3]>,
}

impl PetersenGraph {
    /// Builds P(n, k). Requires `k >= 1` and `n >= 2k + 1`; smaller n would
    /// produce loops or doubled inner edges.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("P(n, k) needs k >= 1".into()));
        }
        if n < 2 * k + 1 {
            return Err(Error::Domain(format!(
                "P(n, k) needs n >= 2k + 1, got n = {n}, k = {k}"
            )));
        }
        let mut adjacency = Vec::with_capacity(2 * n);
        for i in 0..n {
            adjacency.push([
                VertexId::outer((i + n - 1) % n),
                VertexId::outer((i + 1) % n),
                VertexId::inner(i),
            ]);
        }
        for i in 0..n {
            adjacency.push([
                VertexId::inner((i + n - k) % n),
                VertexId::inner((i + k) % n),
                VertexId::outer(i),
            ]);
        }
        Ok(PetersenGraph { n, k, adjacency })
    }

    /// P(n, 2), the only family the theorem-specific modules accept.
    pub fn p2(n: usize) -> Result<Self> {
        Self::new(n, 2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        2 * self.n
    }

    pub fn edge_count(&self) -> usize {
        3 * self.n
    }

    /// Canonical vertex for a possibly negative or unreduced subscript.
    pub fn vertex(&self, ring: Ring, index: i64) -> VertexId {
        let index = index.rem_euclid(self.n as i64) as usize;
        VertexId { ring, index }
    }

    pub fn v(&self, index: i64) -> VertexId {
        self.vertex(Ring::Outer, index)
    }

    pub fn u(&self, index: i64) -> VertexId {
        self.vertex(Ring::Inner, index)
    }

    /// Dense position of `w` in `0..2n`, matching the scan order.
    pub fn slot(&self, w: VertexId) -> usize {
        let index = w.index % self.n;
        match w.ring {
            Ring::Outer => index,
            Ring::Inner => self.n + index,
        }
    }

    pub fn vertex_at(&self, slot: usize) -> VertexId {
        if slot < self.n {
            VertexId::outer(slot)
        } else {
            VertexId::inner(slot - self.n)
        }
    }

    /// All vertices in scan order: `v_0 .. v_{n-1}, u_0 .. u_{n-1}`.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.order()).map(move |s| self.vertex_at(s))
    }

    pub fn neighbors(&self, w: VertexId) -> [VertexId; 3] {
        self.adjacency[self.slot(w)]
    }

    pub fn closed_neighborhood(&self, w: VertexId) -> [VertexId; 4] {
        let [a, b, c] = self.neighbors(w);
        let w = VertexId { ring: w.ring, index: w.index % self.n };
        [w, a, b, c]
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        let b = VertexId { ring: b.ring, index: b.index % self.n };
        self.neighbors(a).contains(&b)
    }

    /// Every edge once: outer cycle, spokes, then inner steps, each by index.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.n;
        let mut edges = Vec::with_capacity(3 * n);
        edges.extend((0..n).map(|i| (VertexId::outer(i), VertexId::outer((i + 1) % n))));
        edges.extend((0..n).map(|i| (VertexId::outer(i), VertexId::inner(i))));
        edges.extend((0..n).map(|i| (VertexId::inner(i), VertexId::inner((i + self.k) % n))));
        edges
    }
}
