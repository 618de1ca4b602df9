//! Exact solvers for k-tuple domination and k-tuple domatic numbers of
//! finite simple graphs, brute-force oracles for cross-checking them, and a
//! verifier that evaluates the known bounds on these invariants for a
//! concrete `(graph, k)` pair.
//!
//! A set `S` is a *k-tuple dominating set* (kDS) when `|N[v] ∩ S| >= k` for
//! every vertex `v`, and a *k-tuple total dominating set* (kTDS) when
//! `|N(v) ∩ S| >= k`. The corresponding minimum sizes are `γ×k` and `γ×k,t`;
//! the maximum number of classes in a partition of `V` into such sets are
//! `d×k` and `d×k,t`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub mod domatic;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;
pub mod spec;
pub mod theorems;

pub use domatic::{d_xk, is_domatic_partition, zelinka_partition, DomaticPartition, DomaticResult};
pub use domination::{
    gamma_xk, is_ktuple_dominating, is_ktuple_total_dominating, kjoin_decomposition_exists,
    GammaResult,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexSet};
pub use oracle::{d_oracle, gamma_oracle};
pub use report::InvariantReport;
pub use spec::GraphSpec;
pub use theorems::{verify_all, CheckStatus, TheoremReport};

/// Which neighborhood a domination condition counts in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `N[v]`: k-tuple domination.
    Closed,
    /// `N(v)`: k-tuple total domination.
    Open,
}

impl Mode {
    /// Smallest minimum degree for which a set of this kind exists.
    pub fn required_degree(self, k: usize) -> usize {
        match self {
            Mode::Closed => k.saturating_sub(1),
            Mode::Open => k,
        }
    }

    pub(crate) fn adjective(self) -> &'static str {
        match self {
            Mode::Closed => "closed",
            Mode::Open => "total",
        }
    }

    /// Fails unless `k >= 1` and `g` admits a set of this kind.
    pub(crate) fn check_gate(self, g: &Graph, k: usize) -> Result<()> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        let delta = g.min_degree();
        if delta < self.required_degree(k) {
            return Err(Error::NoDominatingSet {
                k,
                delta,
                mode: self,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Closed => "closed",
            Mode::Open => "open",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Mode::Closed),
            "open" | "total" => Ok(Mode::Open),
            other => Err(Error::InvalidParameter(format!("unknown mode {other:?}"))),
        }
    }
}
