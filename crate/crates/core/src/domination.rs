//! k-tuple (total) domination: predicates, an exact branch-and-bound solver
//! for `γ×k` / `γ×k,t`, and the k-join decomposition search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Mode;

fn check_universe(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::UniverseMismatch {
            expected: g.n(),
            found: s.universe(),
        });
    }
    Ok(())
}

/// `|N[v] ∩ s| >= k` for every vertex `v`.
///
/// This is the same condition as "members have at least `k - 1` neighbors in
/// `s`, non-members at least `k`", counted with `v` itself included.
pub fn is_ktuple_dominating(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    check_universe(g, s)?;
    Ok((0..g.n()).all(|v| g.closed_count(v, s) >= k))
}

/// `|N(v) ∩ s| >= k` for every vertex `v`.
pub fn is_ktuple_total_dominating(g: &Graph, s: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    check_universe(g, s)?;
    Ok((0..g.n()).all(|v| g.open_count(v, s) >= k))
}

pub(crate) fn satisfies(g: &Graph, s: &VertexSet, k: usize, mode: Mode) -> bool {
    let count = |v| match mode {
        Mode::Closed => g.closed_count(v, s),
        Mode::Open => g.open_count(v, s),
    };
    (0..g.n()).all(|v| count(v) >= k)
}

/// Exact `γ×k` (closed mode) or `γ×k,t` (open mode) with a witness set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaResult {
    pub value: usize,
    pub witness: VertexSet,
    pub mode: Mode,
    pub k: usize,
    pub nodes_explored: u64,
}

/// The neighborhoods a vertex's demand is counted over: `N[v]` or `N(v)`.
/// Both relations are symmetric, so the same lists say whose counters
/// change when a vertex is decided.
pub(crate) fn demand_lists(g: &Graph, mode: Mode) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|v| {
            let mut list = g.neighbor_list(v).to_vec();
            if mode == Mode::Closed {
                let at = list.partition_point(|&u| u < v);
                list.insert(at, v);
            }
            list
        })
        .collect()
}

/// Greedy cover: repeatedly take the vertex that serves the most vertices
/// still below `k`, lowest id on ties.
fn greedy_cover(lists: &[Vec<usize>], k: usize) -> Vec<bool> {
    let n = lists.len();
    let mut chosen = vec![false; n];
    let mut cover = vec![0usize; n];
    loop {
        let best = (0..n)
            .filter(|&u| !chosen[u])
            .map(|u| (lists[u].iter().filter(|&&w| cover[w] < k).count(), u))
            .filter(|&(score, _)| score > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, u)) = best else { break };
        chosen[u] = true;
        for &w in &lists[u] {
            cover[w] += 1;
        }
    }
    chosen
}

struct GammaSearch<'a> {
    lists: &'a [Vec<usize>],
    k: usize,
    order: Vec<usize>,
    /// Largest number of demands one vertex can serve.
    max_reach: usize,
    chosen: Vec<bool>,
    cover: Vec<usize>,
    undecided: Vec<usize>,
    size: usize,
    residual_sum: usize,
    best: Vec<bool>,
    best_size: usize,
    nodes: u64,
}

impl GammaSearch<'_> {
    fn lower_bound(&self) -> usize {
        let max_residual = self
            .cover
            .iter()
            .map(|&c| self.k.saturating_sub(c))
            .max()
            .unwrap_or(0);
        max_residual.max(self.residual_sum.div_ceil(self.max_reach))
    }

    fn include(&mut self, u: usize, sign: bool) {
        for &w in &self.lists[u] {
            if sign {
                if self.cover[w] < self.k {
                    self.residual_sum -= 1;
                }
                self.cover[w] += 1;
                self.undecided[w] -= 1;
            } else {
                self.cover[w] -= 1;
                if self.cover[w] < self.k {
                    self.residual_sum += 1;
                }
                self.undecided[w] += 1;
            }
        }
        self.chosen[u] = sign;
        if sign {
            self.size += 1;
        } else {
            self.size -= 1;
        }
    }

    fn search(&mut self, depth: usize) {
        self.nodes += 1;
        if self.residual_sum == 0 {
            if self.size < self.best_size {
                self.best_size = self.size;
                self.best.clone_from(&self.chosen);
            }
            return;
        }
        if depth == self.order.len() || self.size + self.lower_bound() >= self.best_size {
            return;
        }
        let u = self.order[depth];

        self.include(u, true);
        self.search(depth + 1);
        self.include(u, false);

        // Exclude u: every demand it could serve loses one candidate.
        for &w in &self.lists[u] {
            self.undecided[w] -= 1;
        }
        let feasible = self.lists[u]
            .iter()
            .all(|&w| self.cover[w] + self.undecided[w] >= self.k);
        if feasible {
            self.search(depth + 1);
        }
        for &w in &self.lists[u] {
            self.undecided[w] += 1;
        }
    }
}

/// Exact minimum k-tuple dominating set (`mode = Closed`) or k-tuple total
/// dominating set (`mode = Open`).
///
/// Branch and bound over vertices in ascending degree order (ties by id),
/// seeded with a greedy upper bound. A branch is cut when some vertex can
/// no longer reach `k` from its chosen plus undecided neighbors, or when
/// the largest residual demand (or the total residual spread over the
/// best possible reach) cannot beat the incumbent.
pub fn gamma_xk(g: &Graph, k: usize, mode: Mode) -> Result<GammaResult> {
    mode.check_gate(g, k)?;
    let n = g.n();
    let lists = demand_lists(g, mode);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));

    let greedy = greedy_cover(&lists, k);
    let greedy_size = greedy.iter().filter(|&&c| c).count();

    let mut search = GammaSearch {
        lists: &lists,
        k,
        order,
        max_reach: lists.iter().map(Vec::len).max().unwrap_or(1).max(1),
        chosen: vec![false; n],
        cover: vec![0; n],
        undecided: lists.iter().map(Vec::len).collect(),
        size: 0,
        residual_sum: n * k,
        best: greedy,
        best_size: greedy_size,
        nodes: 0,
    };
    search.search(0);

    let witness = VertexSet::from_mask(n, &search.best);
    debug_assert!(satisfies(g, &witness, k, mode));
    Ok(GammaResult {
        value: search.best_size,
        witness,
        mode,
        k,
        nodes_explored: search.nodes,
    })
}

/// Looks for `T ⊆ V` with `|T| = t`, `δ(G[T]) >= k - 1`, and every vertex
/// outside `T` adjacent to at least `k` members of `T`, i.e. a split of `g`
/// as a k-join of `G - T` onto `G[T]` (or `g = G[T]` when `t = n`).
///
/// The search works on open neighborhoods with separate in/out demands and
/// does not share code with [`gamma_xk`].
pub fn kjoin_decomposition_exists(g: &Graph, k: usize, t: usize) -> Result<Option<VertexSet>> {
    Mode::Closed.check_gate(g, k)?;
    let n = g.n();
    if t > n {
        return Err(Error::SizeExceedsOrder { t, n });
    }
    let mut search = JoinSearch {
        g,
        k,
        t,
        state: vec![Side::Undecided; n],
        inside: vec![0; n],
        open: (0..n).map(|v| g.degree(v)).collect(),
        taken: 0,
    };
    Ok(search.run(0).then(|| {
        VertexSet::from_mask(
            n,
            &search
                .state
                .iter()
                .map(|&s| s == Side::In)
                .collect::<Vec<_>>(),
        )
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Undecided,
    In,
    Out,
}

struct JoinSearch<'a> {
    g: &'a Graph,
    k: usize,
    t: usize,
    state: Vec<Side>,
    /// Neighbors already placed in T.
    inside: Vec<usize>,
    /// Neighbors still undecided.
    open: Vec<usize>,
    taken: usize,
}

impl JoinSearch<'_> {
    fn need(&self, v: usize) -> usize {
        match self.state[v] {
            Side::In | Side::Undecided => self.k - 1,
            Side::Out => self.k,
        }
    }

    fn viable(&self, v: usize) -> bool {
        self.inside[v] + self.open[v] >= self.need(v)
    }

    fn place(&mut self, v: usize, side: Side) -> bool {
        self.state[v] = side;
        if side == Side::In {
            self.taken += 1;
        }
        let mut ok = self.viable(v);
        for &w in self.g.neighbor_list(v) {
            self.open[w] -= 1;
            if side == Side::In {
                self.inside[w] += 1;
            }
            ok &= self.viable(w);
        }
        ok
    }

    fn unplace(&mut self, v: usize) {
        let side = self.state[v];
        for &w in self.g.neighbor_list(v) {
            self.open[w] += 1;
            if side == Side::In {
                self.inside[w] -= 1;
            }
        }
        if side == Side::In {
            self.taken -= 1;
        }
        self.state[v] = Side::Undecided;
    }

    fn run(&mut self, v: usize) -> bool {
        let n = self.g.n();
        if v == n {
            return self.taken == self.t && (0..n).all(|u| self.inside[u] >= self.need(u));
        }
        let remaining = n - v;
        if self.taken < self.t {
            if self.place(v, Side::In) && self.run(v + 1) {
                return true;
            }
            self.unplace(v);
        }
        if self.t - self.taken < remaining {
            if self.place(v, Side::Out) && self.run(v + 1) {
                return true;
            }
            self.unplace(v);
        }
        false
    }
}
