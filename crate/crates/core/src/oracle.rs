//! Brute-force reference solvers.
//!
//! Nothing here shares code with the search solvers: the domination tests
//! are written from the two-case definition with plain adjacency queries,
//! subsets are scanned by cardinality, and partitions are generated as
//! restricted growth strings.

use crate::domatic::{DomaticBounds, DomaticPartition, DomaticResult};
use crate::domination::GammaResult;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Mode;

pub const GAMMA_ORACLE_CAP: usize = 20;
pub const DOMATIC_ORACLE_CAP: usize = 10;

fn gate(g: &Graph, k: usize, mode: Mode) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let delta = g.min_degree();
    let needed = match mode {
        Mode::Closed => k - 1,
        Mode::Open => k,
    };
    if delta < needed {
        return Err(Error::NoDominatingSet { k, delta, mode });
    }
    Ok(())
}

/// Two-case test on a membership mask.
fn dominated_by(g: &Graph, member: &[bool], k: usize, mode: Mode) -> bool {
    let n = g.n();
    (0..n).all(|v| {
        let adjacent_members = (0..n).filter(|&u| member[u] && g.is_adjacent(v, u)).count();
        match mode {
            Mode::Open => adjacent_members >= k,
            Mode::Closed if member[v] => adjacent_members + 1 >= k,
            Mode::Closed => adjacent_members >= k,
        }
    })
}

/// Next mask with the same popcount (Gosper's hack).
fn next_combination(mask: u64) -> u64 {
    let low = mask & mask.wrapping_neg();
    let ripple = mask + low;
    ripple | (((mask ^ ripple) >> 2) / low)
}

/// `γ×k` / `γ×k,t` by scanning subsets in increasing cardinality.
pub fn gamma_oracle(g: &Graph, k: usize, mode: Mode) -> Result<GammaResult> {
    gamma_oracle_capped(g, k, mode, GAMMA_ORACLE_CAP)
}

pub fn gamma_oracle_capped(g: &Graph, k: usize, mode: Mode, cap: usize) -> Result<GammaResult> {
    let n = g.n();
    let cap = cap.min(62);
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    gate(g, k, mode)?;
    let mut scanned = 0u64;
    for size in 1..=n {
        let mut mask: u64 = (1 << size) - 1;
        while mask < (1 << n) {
            scanned += 1;
            let member: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            if dominated_by(g, &member, k, mode) {
                return Ok(GammaResult {
                    value: size,
                    witness: VertexSet::from_vertices(n, (0..n).filter(|&v| member[v]))?,
                    mode,
                    k,
                    nodes_explored: scanned,
                });
            }
            mask = next_combination(mask);
        }
    }
    unreachable!("the full vertex set passes once the degree gate holds")
}

/// Restricted growth strings: `labels[0] = 0`, `labels[i] <= max(labels[..i]) + 1`.
struct PartitionWalk<'a> {
    g: &'a Graph,
    k: usize,
    mode: Mode,
    max_blocks: usize,
    labels: Vec<usize>,
    best: Option<Vec<usize>>,
    best_blocks: usize,
    scanned: u64,
}

impl PartitionWalk<'_> {
    fn visit(&mut self, i: usize, blocks: usize) {
        if i == self.labels.len() {
            self.scanned += 1;
            if blocks > self.best_blocks
                && (0..blocks).all(|b| {
                    let member: Vec<bool> = self.labels.iter().map(|&l| l == b).collect();
                    dominated_by(self.g, &member, self.k, self.mode)
                })
            {
                self.best_blocks = blocks;
                self.best = Some(self.labels.clone());
            }
            return;
        }
        for b in 0..=blocks.min(self.max_blocks - 1) {
            self.labels[i] = b;
            self.visit(i + 1, blocks.max(b + 1));
        }
    }
}

/// `d×k` / `d×k,t` by enumerating every set partition of `V` with between
/// 2 and `⌊(δ+1)/k⌋` blocks.
pub fn d_oracle(g: &Graph, k: usize, mode: Mode) -> Result<DomaticResult> {
    let n = g.n();
    if n > DOMATIC_ORACLE_CAP {
        return Err(Error::OracleCap {
            n,
            cap: DOMATIC_ORACLE_CAP,
        });
    }
    gate(g, k, mode)?;
    let max_blocks = (g.min_degree() + 1) / k;

    let mut walk = PartitionWalk {
        g,
        k,
        mode,
        max_blocks,
        labels: vec![0; n],
        best: None,
        best_blocks: 1,
        scanned: 0,
    };
    if max_blocks >= 2 {
        walk.visit(1, 1);
    }
    let PartitionWalk {
        best,
        best_blocks,
        scanned,
        ..
    } = walk;

    let witness = match best {
        Some(labels) => DomaticPartition::from_coloring(k, mode, &labels, best_blocks),
        None => DomaticPartition::trivial(g, k, mode),
    };
    Ok(DomaticResult {
        value: witness.len(),
        witness,
        bounds_used: DomaticBounds {
            degree_ceiling: max_blocks,
            gamma_ceiling: None,
            zelinka_floor: None,
        },
        nodes_explored: scanned,
    })
}
