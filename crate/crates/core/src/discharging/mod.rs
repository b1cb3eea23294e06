//! Weight redistribution over a normalized Roman dominating function.
//!
//! Every vertex receives `g(w)`: 0.5 on `V_2`, 1 on `V_1`, and half the
//! number of 2-labeled neighbors on `V_0`. The residual is `r(w) = g(w) - 0.5`.
//! All quantities are half-integers and are stored doubled.

mod audit;

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

use serde::Serialize;

pub use audit::{
    lemma_audit, lower_bound_audit, LemmaFlags, LemmaOutcome, LowerBoundSummary, Violation,
    WindowClass, WindowRecord, WindowReport,
};

use crate::assignment::{find_move, is_valid_rdf, RomanAssignment};
use crate::error::{Error, Result};
use crate::graph::{PetersenGraph, VertexId};

/// An exact multiple of 0.5, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct HalfWeight(i64);

impl HalfWeight {
    pub const ZERO: HalfWeight = HalfWeight(0);
    pub const HALF: HalfWeight = HalfWeight(1);
    pub const ONE: HalfWeight = HalfWeight(2);
    pub const THREE_HALVES: HalfWeight = HalfWeight(3);
    pub const TWO: HalfWeight = HalfWeight(4);

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfWeight(doubled)
    }

    pub const fn from_int(value: i64) -> Self {
        HalfWeight(2 * value)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    /// The value as an integer, if it is one.
    pub fn as_int(self) -> Option<i64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }
}

impl Add for HalfWeight {
    type Output = HalfWeight;
    fn add(self, rhs: HalfWeight) -> HalfWeight {
        HalfWeight(self.0 + rhs.0)
    }
}

impl AddAssign for HalfWeight {
    fn add_assign(&mut self, rhs: HalfWeight) {
        self.0 += rhs.0;
    }
}

impl Sub for HalfWeight {
    type Output = HalfWeight;
    fn sub(self, rhs: HalfWeight) -> HalfWeight {
        HalfWeight(self.0 - rhs.0)
    }
}

impl std::iter::Sum for HalfWeight {
    fn sum<I: Iterator<Item = HalfWeight>>(iter: I) -> HalfWeight {
        iter.fold(HalfWeight::ZERO, Add::add)
    }
}

impl fmt::Display for HalfWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        if abs.is_multiple_of(2) {
            write!(f, "{sign}{}", abs / 2)
        } else {
            write!(f, "{sign}{}.5", abs / 2)
        }
    }
}

/// The vertices `v_j, u_j` for `j` in the circular range `start .. start + width`.
///
/// When `width > n` columns repeat; the window is then a multiset and each
/// occurrence counts separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub start: i64,
    pub width: usize,
}

impl Window {
    pub fn new(start: i64, width: usize) -> Self {
        Window { start, width }
    }

    /// Column indices in window order, reduced mod n.
    pub fn columns(self, n: usize) -> impl Iterator<Item = usize> {
        let start = self.start.rem_euclid(n as i64) as usize;
        (0..self.width).map(move |j| (start + j) % n)
    }

    pub fn vertices(self, n: usize) -> impl Iterator<Item = VertexId> {
        self.columns(n)
            .flat_map(|j| [VertexId::outer(j), VertexId::inner(j)])
    }
}

/// `g` and `r` for one normalized RDF, with the hypotheses checked once.
#[derive(Debug, Clone)]
pub struct Discharging<'a> {
    graph: &'a PetersenGraph,
    assignment: &'a RomanAssignment,
    g: Vec<HalfWeight>,
}

impl<'a> Discharging<'a> {
    /// Requires P(n, 2), a valid RDF, and a fixpoint of normalization (no
    /// 1-labeled or 2-labeled neighbor of any 2-labeled vertex).
    pub fn new(graph: &'a PetersenGraph, assignment: &'a RomanAssignment) -> Result<Self> {
        if graph.k() != 2 {
            return Err(Error::Domain(format!("discharging needs k = 2, got {}", graph.k())));
        }
        let report = is_valid_rdf(graph, assignment)?;
        if !report.valid {
            return Err(Error::InvalidRdf(report.violations));
        }
        if let Some(mv) = find_move(graph, assignment) {
            return Err(Error::Hypothesis(format!(
                "assignment is not normalized: a {:?} move applies at {}",
                mv.kind, mv.vertex
            )));
        }
        let g = graph
            .vertices()
            .map(|w| match assignment.label(w) {
                2 => HalfWeight::HALF,
                1 => HalfWeight::ONE,
                _ => {
                    let twos = graph
                        .neighbors(w)
                        .iter()
                        .filter(|&&x| assignment.label(x) == 2)
                        .count();
                    HalfWeight::from_doubled(twos as i64)
                }
            })
            .collect();
        Ok(Discharging { graph, assignment, g })
    }

    pub fn graph(&self) -> &PetersenGraph {
        self.graph
    }

    pub fn assignment(&self) -> &RomanAssignment {
        self.assignment
    }

    pub fn g_value(&self, w: VertexId) -> HalfWeight {
        self.g[self.graph.slot(w)]
    }

    pub fn r_value(&self, w: VertexId) -> HalfWeight {
        self.g_value(w) - HalfWeight::HALF
    }

    pub fn total_g(&self) -> HalfWeight {
        self.g.iter().copied().sum()
    }

    pub fn total_r(&self) -> HalfWeight {
        self.graph.vertices().map(|w| self.r_value(w)).sum()
    }

    /// `r` summed over the window starting at column `start` of `width` columns.
    pub fn r_window(&self, start: i64, width: usize) -> HalfWeight {
        Window::new(start, width)
            .vertices(self.graph.n())
            .map(|w| self.r_value(w))
            .sum()
    }
}

pub fn g_value(g: &PetersenGraph, f: &RomanAssignment, w: VertexId) -> Result<HalfWeight> {
    Ok(Discharging::new(g, f)?.g_value(w))
}

pub fn total_g(g: &PetersenGraph, f: &RomanAssignment) -> Result<HalfWeight> {
    Ok(Discharging::new(g, f)?.total_g())
}

pub fn r_window(g: &PetersenGraph, f: &RomanAssignment, start: i64, width: usize) -> Result<HalfWeight> {
    if width == 0 {
        return Err(Error::Domain("window width must be at least 1".into()));
    }
    Ok(Discharging::new(g, f)?.r_window(start, width))
}
