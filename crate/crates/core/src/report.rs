//! All four invariants of one `(graph, k)` pair, with certificates.

use serde::Serialize;

use crate::domatic::{d_xk, DomaticResult};
use crate::domination::{gamma_xk, GammaResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, DOMATIC_ORACLE_CAP, GAMMA_ORACLE_CAP};
use crate::Mode;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub k: usize,
    /// `γ×k`; absent when `δ < k − 1`.
    pub gamma: Option<GammaResult>,
    /// `d×k`; absent when `δ < k − 1`.
    pub domatic: Option<DomaticResult>,
    /// `γ×k,t`; absent when `δ < k`.
    pub gamma_total: Option<GammaResult>,
    /// `d×k,t`; absent when `δ < k`.
    pub domatic_total: Option<DomaticResult>,
}

/// Runs `f` only when the degree gate for `mode` holds.
pub(crate) fn gated<T>(
    g: &Graph,
    k: usize,
    mode: Mode,
    f: impl FnOnce() -> Result<T>,
) -> Result<Option<T>> {
    if g.min_degree() < mode.required_degree(k) {
        Ok(None)
    } else {
        f().map(Some)
    }
}

impl InvariantReport {
    /// Computes every invariant whose degree gate holds. Only `k = 0` fails.
    pub fn compute(g: &Graph, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        Ok(Self {
            n: g.n(),
            edges: g.edge_count(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            k,
            gamma: gated(g, k, Mode::Closed, || gamma_xk(g, k, Mode::Closed))?,
            domatic: gated(g, k, Mode::Closed, || d_xk(g, k, Mode::Closed))?,
            gamma_total: gated(g, k, Mode::Open, || gamma_xk(g, k, Mode::Open))?,
            domatic_total: gated(g, k, Mode::Open, || d_xk(g, k, Mode::Open))?,
        })
    }
}

/// A disagreement between a search solver and its brute-force oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub invariant: &'static str,
    pub solver: usize,
    pub oracle: usize,
}

/// Re-derives every present invariant with the oracles. Invariants on graphs
/// above an oracle's size cap are skipped.
pub fn cross_check(g: &Graph, report: &InvariantReport) -> Result<Vec<Mismatch>> {
    let k = report.k;
    let mut mismatches = Vec::new();
    let mut compare = |invariant, solver: usize, oracle: usize| {
        if solver != oracle {
            mismatches.push(Mismatch {
                invariant,
                solver,
                oracle,
            });
        }
    };
    if g.n() <= GAMMA_ORACLE_CAP {
        if let Some(r) = &report.gamma {
            compare(
                "gamma",
                r.value,
                oracle::gamma_oracle(g, k, Mode::Closed)?.value,
            );
        }
        if let Some(r) = &report.gamma_total {
            compare(
                "gamma_total",
                r.value,
                oracle::gamma_oracle(g, k, Mode::Open)?.value,
            );
        }
    }
    if g.n() <= DOMATIC_ORACLE_CAP {
        if let Some(r) = &report.domatic {
            compare(
                "domatic",
                r.value,
                oracle::d_oracle(g, k, Mode::Closed)?.value,
            );
        }
        if let Some(r) = &report.domatic_total {
            compare(
                "domatic_total",
                r.value,
                oracle::d_oracle(g, k, Mode::Open)?.value,
            );
        }
    }
    Ok(mismatches)
}
