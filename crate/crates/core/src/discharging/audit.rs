//! Empirical checks of the width-7 window structure on optimal assignments.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{Discharging, HalfWeight, Window};
use crate::assignment::RomanAssignment;
use crate::error::{Error, Result};
use crate::graph::{PetersenGraph, VertexId};
use crate::solver::solve_dp;

const WIDTH: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaOutcome {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The hypothesis of the implication does not hold for this window.
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl LemmaOutcome {
    fn implication(premise: bool, conclusion: bool) -> Self {
        match (premise, conclusion) {
            (false, _) => LemmaOutcome::NotApplicable,
            (true, true) => LemmaOutcome::Pass,
            (true, false) => LemmaOutcome::Fail,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaOutcome::Pass => "pass",
            LemmaOutcome::Fail => "fail",
            LemmaOutcome::NotApplicable => "n/a",
        }
    }
}

/// Outcome of each window implication for a single window start `i`.
///
/// * `outer_center`: `r(i) <= 0.5` implies `v_{i+3} ∉ V_2`.
/// * `outer_flanks`: `r(i) <= 0.5` implies `v_{i+2}, v_{i+4} ∉ V_2`.
/// * `inner_center`: `r(i) <= 0.5` implies `u_{i+3} ∉ V_2`.
/// * `light_shape`: `r(i) <= 0.5` implies `r(i) = 0.5`, the window's `V_1` is
///   `{v_{i+3}}` and its `V_2` is `{u_{i+1}, u_{i+2}, v_{i+5}}` or
///   `{u_{i+4}, u_{i+5}, v_{i+1}}`.
/// * `light_neighbors`: `r(i) = 0.5` implies the windows at `i - 7` and
///   `i + 7` carry at least 1 and 1.5 in some order.
/// * `between_light`: `r(i - 7) = r(i + 7) = 0.5` implies `r(i) >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaFlags {
    pub outer_center: LemmaOutcome,
    pub outer_flanks: LemmaOutcome,
    pub inner_center: LemmaOutcome,
    pub light_shape: LemmaOutcome,
    pub light_neighbors: LemmaOutcome,
    pub between_light: LemmaOutcome,
}

impl LemmaFlags {
    pub const NAMES: [&'static str; 6] = [
        "outer_center",
        "outer_flanks",
        "inner_center",
        "light_shape",
        "light_neighbors",
        "between_light",
    ];

    pub fn outcomes(&self) -> [LemmaOutcome; 6] {
        [
            self.outer_center,
            self.outer_flanks,
            self.inner_center,
            self.light_shape,
            self.light_neighbors,
            self.between_light,
        ]
    }

    pub fn any_failed(&self) -> bool {
        self.outcomes().contains(&LemmaOutcome::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum WindowClass {
    /// `r = 0.5`
    S1,
    /// `r = 1`
    S2,
    /// `r >= 1.5` with at most one neighboring index in S1.
    S31,
    /// `r >= 1.5` with both neighboring indices in S1.
    S32,
}

impl WindowClass {
    pub fn as_str(self) -> &'static str {
        match self {
            WindowClass::S1 => "S1",
            WindowClass::S2 => "S2",
            WindowClass::S31 => "S31",
            WindowClass::S32 => "S32",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowRecord {
    /// Position in the report: the rotation `i` for the lemma audit, the
    /// index `i` of the window at `7i` for the lower-bound audit.
    pub index: usize,
    pub start: usize,
    pub r_doubled: HalfWeight,
    /// Only set by the lower-bound audit; `None` there means `r < 0.5`.
    pub class: Option<WindowClass>,
    pub lemmas: LemmaFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub window_start: Option<usize>,
    pub detail: String,
}

/// The counting argument over the `n` windows at offsets `7i`, with every
/// half-integer quantity doubled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundSummary {
    pub s1: usize,
    pub s2: usize,
    pub s31: usize,
    pub s32: usize,
    /// `|S1| <= |S31| + 2|S32|`
    pub counting_ok: bool,
    /// Every S32 window has `r >= 2`.
    pub s32_heavy_ok: bool,
    /// `14 * weight`
    pub seven_weight_doubled: i64,
    /// `Σ r(7i) + 7n`, doubled.
    pub window_sum_doubled: i64,
    /// `0.5|S1| + |S2| + 1.5|S31| + 2|S32| + 7n`, doubled.
    pub class_floor_doubled: i64,
    /// `|S1| + |S2| + |S31| + |S32| + 7n = 8n`, doubled.
    pub eight_n_doubled: i64,
    /// `7 * weight` equals the window sum (each vertex lies in 7 windows).
    pub identity_ok: bool,
    /// Window sum is at least the class floor.
    pub class_floor_ok: bool,
    /// `7 * weight >= 8n`.
    pub chain_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    pub n: usize,
    pub weight: u64,
    pub optimum: u64,
    /// `n < 7`: width-7 windows revisit columns; results are informational.
    pub degenerate: bool,
    pub windows: Vec<WindowRecord>,
    pub lower_bound: Option<LowerBoundSummary>,
    pub violations: Vec<Violation>,
}

impl WindowReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the audit hypotheses: valid, normalized, and of optimal weight as
/// computed by the column-sweep solver.
fn prepare<'a>(g: &'a PetersenGraph, f: &'a RomanAssignment) -> Result<(Discharging<'a>, u64)> {
    if g.k() != 2 || g.n() < 5 {
        return Err(Error::Domain(format!(
            "window audits need P(n, 2) with n >= 5, got P({}, {})",
            g.n(),
            g.k()
        )));
    }
    let d = Discharging::new(g, f).map_err(|e| match e {
        Error::InvalidRdf(v) => Error::Hypothesis(format!("not an RDF ({} undominated)", v.len())),
        other => other,
    })?;
    let optimum = solve_dp(g.n())?.optimum;
    if f.weight() != optimum {
        return Err(Error::Hypothesis(format!(
            "assignment weight {} is not the optimum {optimum}",
            f.weight()
        )));
    }
    Ok((d, optimum))
}

struct WindowTable {
    n: usize,
    r: Vec<HalfWeight>,
    flags: Vec<LemmaFlags>,
}

impl WindowTable {
    fn build(d: &Discharging<'_>) -> Self {
        let n = d.graph().n();
        let r: Vec<HalfWeight> = (0..n).map(|i| d.r_window(i as i64, WIDTH)).collect();
        let flags = (0..n).map(|i| lemma_flags(d, &r, i)).collect();
        WindowTable { n, r, flags }
    }

    fn r_at(&self, start: i64) -> HalfWeight {
        self.r[start.rem_euclid(self.n as i64) as usize]
    }

    fn lemma_violations(&self, starts: impl Iterator<Item = usize>) -> Vec<Violation> {
        let mut out = Vec::new();
        for start in starts {
            let flags = &self.flags[start];
            for (name, outcome) in LemmaFlags::NAMES.iter().zip(flags.outcomes()) {
                if outcome == LemmaOutcome::Fail {
                    out.push(Violation {
                        check: name.to_string(),
                        window_start: Some(start),
                        detail: format!("r = {}", self.r[start]),
                    });
                }
            }
        }
        out
    }
}

fn lemma_flags(d: &Discharging<'_>, r: &[HalfWeight], i: usize) -> LemmaFlags {
    let g = d.graph();
    let f = d.assignment();
    let n = g.n() as i64;
    let i = i as i64;
    let at = |s: i64| r[s.rem_euclid(n) as usize];
    let r_here = at(i);
    let light = r_here <= HalfWeight::HALF;
    let not_two = |w: VertexId| f.label(w) != 2;

    let window: BTreeSet<VertexId> = Window::new(i, WIDTH).vertices(g.n()).collect();
    let in_class = |label: u8| -> BTreeSet<VertexId> {
        window.iter().copied().filter(|&w| f.label(w) == label).collect()
    };
    let shape_ok = || {
        let ones = in_class(1);
        let twos = in_class(2);
        let left: BTreeSet<VertexId> = [g.u(i + 1), g.u(i + 2), g.v(i + 5)].into();
        let right: BTreeSet<VertexId> = [g.u(i + 4), g.u(i + 5), g.v(i + 1)].into();
        r_here == HalfWeight::HALF
            && ones == BTreeSet::from([g.v(i + 3)])
            && (twos == left || twos == right)
    };

    let (before, after) = (at(i - 7), at(i + 7));
    LemmaFlags {
        outer_center: LemmaOutcome::implication(light, not_two(g.v(i + 3))),
        outer_flanks: LemmaOutcome::implication(light, not_two(g.v(i + 2)) && not_two(g.v(i + 4))),
        inner_center: LemmaOutcome::implication(light, not_two(g.u(i + 3))),
        light_shape: LemmaOutcome::implication(light, light && shape_ok()),
        light_neighbors: LemmaOutcome::implication(
            r_here == HalfWeight::HALF,
            (before >= HalfWeight::ONE && after >= HalfWeight::THREE_HALVES)
                || (before >= HalfWeight::THREE_HALVES && after >= HalfWeight::ONE),
        ),
        between_light: LemmaOutcome::implication(
            before == HalfWeight::HALF && after == HalfWeight::HALF,
            r_here >= HalfWeight::TWO,
        ),
    }
}

/// Evaluates every window implication at all `n` rotations of the width-7
/// window on a normalized optimal assignment.
pub fn lemma_audit(g: &PetersenGraph, f: &RomanAssignment) -> Result<WindowReport> {
    let (d, optimum) = prepare(g, f)?;
    let table = WindowTable::build(&d);
    let windows = (0..g.n())
        .map(|i| WindowRecord {
            index: i,
            start: i,
            r_doubled: table.r[i],
            class: None,
            lemmas: table.flags[i],
        })
        .collect();
    let violations = table.lemma_violations(0..g.n());
    Ok(WindowReport {
        n: g.n(),
        weight: f.weight(),
        optimum,
        degenerate: g.n() < WIDTH,
        windows,
        lower_bound: None,
        violations,
    })
}

/// Classifies the windows at offsets `7i` and recomputes the counting chain
/// that ends in `7 * weight >= 8n`. Needs `n >= 7`.
pub fn lower_bound_audit(g: &PetersenGraph, f: &RomanAssignment) -> Result<WindowReport> {
    if g.n() < WIDTH {
        return Err(Error::Domain(format!(
            "lower-bound audit needs n >= 7, got {}",
            g.n()
        )));
    }
    let (d, optimum) = prepare(g, f)?;
    let table = WindowTable::build(&d);
    let n = g.n();
    let starts: Vec<usize> = (0..n).map(|i| 7 * i % n).collect();
    let r: Vec<HalfWeight> = starts.iter().map(|&s| table.r_at(s as i64)).collect();
    let light: Vec<bool> = r.iter().map(|&x| x == HalfWeight::HALF).collect();

    let mut violations = Vec::new();
    let mut windows = Vec::with_capacity(n);
    let mut counts = [0usize; 4];
    let mut s32_heavy_ok = true;
    for i in 0..n {
        let neighbors: BTreeSet<usize> = [(i + n - 1) % n, (i + 1) % n].into();
        let light_neighbors = neighbors.iter().filter(|&&j| light[j]).count();
        let class = match r[i] {
            x if x == HalfWeight::HALF => Some(WindowClass::S1),
            x if x == HalfWeight::ONE => Some(WindowClass::S2),
            x if x >= HalfWeight::THREE_HALVES && light_neighbors == 2 => Some(WindowClass::S32),
            x if x >= HalfWeight::THREE_HALVES => Some(WindowClass::S31),
            _ => None,
        };
        match class {
            Some(c) => counts[c as usize] += 1,
            None => violations.push(Violation {
                check: "classification".into(),
                window_start: Some(starts[i]),
                detail: format!("window {i} has r = {} below 0.5", r[i]),
            }),
        }
        if class == Some(WindowClass::S32) && r[i] < HalfWeight::TWO {
            s32_heavy_ok = false;
            violations.push(Violation {
                check: "s32_heavy".into(),
                window_start: Some(starts[i]),
                detail: format!("window {i} is in S32 with r = {}", r[i]),
            });
        }
        windows.push(WindowRecord {
            index: i,
            start: starts[i],
            r_doubled: r[i],
            class,
            lemmas: table.flags[starts[i]],
        });
    }
    let distinct: BTreeSet<usize> = starts.iter().copied().collect();
    violations.extend(table.lemma_violations(distinct.into_iter()));

    let [s1, s2, s31, s32] = counts;
    let counting_ok = s1 <= s31 + 2 * s32;
    if !counting_ok {
        violations.push(Violation {
            check: "counting".into(),
            window_start: None,
            detail: format!("|S1| = {s1} exceeds |S31| + 2|S32| = {}", s31 + 2 * s32),
        });
    }

    let n_i = n as i64;
    let weight = f.weight() as i64;
    let seven_weight_doubled = 14 * weight;
    let r_sum: i64 = r.iter().map(|x| x.doubled()).sum();
    let window_sum_doubled = r_sum + 14 * n_i;
    let class_floor_doubled = (s1 + 2 * s2 + 3 * s31 + 4 * s32) as i64 + 14 * n_i;
    let eight_n_doubled = 2 * (s1 + s2 + s31 + s32) as i64 + 14 * n_i;
    let identity_ok = seven_weight_doubled == window_sum_doubled
        && d.total_g() == HalfWeight::from_int(weight);
    let class_floor_ok = window_sum_doubled >= class_floor_doubled;
    let chain_ok = 7 * weight >= 8 * n_i;
    for (ok, check, detail) in [
        (identity_ok, "identity", format!("14w = {seven_weight_doubled}, window sum = {window_sum_doubled}")),
        (class_floor_ok, "class_floor", format!("window sum {window_sum_doubled} < floor {class_floor_doubled}")),
        (chain_ok, "chain", format!("7 * {weight} < 8 * {n}")),
    ] {
        if !ok {
            violations.push(Violation { check: check.into(), window_start: None, detail });
        }
    }

    Ok(WindowReport {
        n,
        weight: f.weight(),
        optimum,
        degenerate: false,
        windows,
        lower_bound: Some(LowerBoundSummary {
            s1,
            s2,
            s31,
            s32,
            counting_ok,
            s32_heavy_ok,
            seven_weight_doubled,
            window_sum_doubled,
            class_floor_doubled,
            eight_n_doubled,
            identity_ok,
            class_floor_ok,
            chain_ok,
        }),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignment::normalize;

    fn optimum(n: usize) -> (PetersenGraph, RomanAssignment) {
        let g = PetersenGraph::p2(n).unwrap();
        let f = normalize(&g, &solve_dp(n).unwrap().witness).unwrap();
        (g, f)
    }

    #[test]
    fn rejects_non_optimal() {
        let g = PetersenGraph::p2(7).unwrap();
        let f = crate::construct::construct_rdf(7).unwrap().with_label(g.u(0), 1);
        assert!(matches!(lemma_audit(&g, &f), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn lower_bound_needs_seven() {
        let (g, f) = optimum(6);
        assert!(matches!(lower_bound_audit(&g, &f), Err(Error::Domain(_))));
        assert!(lemma_audit(&g, &f).unwrap().degenerate);
    }

    #[test]
    fn n7_chain_is_tight() {
        let (g, f) = optimum(7);
        let report = lower_bound_audit(&g, &f).unwrap();
        let lb = report.lower_bound.unwrap();
        assert_eq!(lb.seven_weight_doubled, 2 * 56);
        assert_eq!(lb.eight_n_doubled, 2 * 56);
        assert!(lb.chain_ok);
        assert!(report.violations.is_empty());
    }
}
