//! Exact minimum Roman domination weight of P(n, 2).
//!
//! Two independent routes: [`solve_brute`] enumerates every labeling for tiny
//! n, [`solve_dp`] sweeps columns `(v_i, u_i)` around the cycle.

mod brute;
mod dp;

use serde::Serialize;

pub use brute::{solve_brute, BRUTE_MAX_N};
pub use dp::{solve_dp, ColumnState, Status};

use crate::assignment::{is_valid_rdf, RomanAssignment};
use crate::error::{Error, Result};
use crate::graph::PetersenGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Dp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub n: usize,
    pub method: Method,
    pub optimum: u64,
    pub witness: RomanAssignment,
}

impl SolveResult {
    fn checked(n: usize, method: Method, optimum: u64, witness: RomanAssignment) -> Result<Self> {
        let g = PetersenGraph::p2(n)?;
        let report = is_valid_rdf(&g, &witness)?;
        if !report.valid {
            return Err(Error::Internal(format!(
                "{method:?} witness for n = {n} is not a valid RDF"
            )));
        }
        if witness.weight() != optimum {
            return Err(Error::Internal(format!(
                "{method:?} witness for n = {n} weighs {} but optimum is {optimum}",
                witness.weight()
            )));
        }
        Ok(SolveResult { n, method, optimum, witness })
    }
}

pub fn solve(n: usize, method: Method) -> Result<SolveResult> {
    match method {
        Method::Brute => solve_brute(n),
        Method::Dp => solve_dp(n),
    }
}
