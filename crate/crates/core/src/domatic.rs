//! k-tuple (total) domatic partitions and the exact `d×k` / `d×k,t` solver.

use serde::Serialize;

use crate::domination::{demand_lists, gamma_xk, satisfies};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Mode;

/// A partition of `V(G)` whose classes are claimed to be k-tuple (total)
/// dominating sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DomaticPartition {
    pub k: usize,
    pub mode: Mode,
    pub classes: Vec<VertexSet>,
}

impl DomaticPartition {
    /// The one-class partition `{V}`.
    pub fn trivial(g: &Graph, k: usize, mode: Mode) -> Self {
        Self {
            k,
            mode,
            classes: vec![g.vertex_set()],
        }
    }

    /// Classes from a colouring `colors[v] ∈ 0..count`, numbered by colour.
    pub fn from_coloring(k: usize, mode: Mode, colors: &[usize], count: usize) -> Self {
        let n = colors.len();
        let mut classes = vec![VertexSet::new(n); count];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].insert(v);
        }
        Self { k, mode, classes }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Size of the smallest class.
    pub fn min_class_size(&self) -> Option<usize> {
        self.classes.iter().map(VertexSet::len).min()
    }
}

/// Checks that `p` partitions `V(g)` into non-empty classes that each pass
/// the k-tuple (total) domination test for `p.mode`.
///
/// Errors on structural faults that make `p` not a partition of this graph
/// at all: a class over a different vertex universe, or a vertex in two
/// classes.
pub fn is_domatic_partition(g: &Graph, p: &DomaticPartition) -> Result<bool> {
    if p.k == 0 {
        return Err(Error::InvalidK);
    }
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for class in &p.classes {
        if class.universe() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: class.universe(),
            });
        }
        if let Some(v) = class.iter().find(|&v| seen.contains(v)) {
            return Err(Error::OverlappingClasses { vertex: v });
        }
        seen.union_with(class);
    }
    Ok(!p.classes.is_empty()
        && seen.len() == n
        && p.classes
            .iter()
            .all(|c| !c.is_empty() && satisfies(g, c, p.k, p.mode)))
}

/// Bounds that framed a domatic search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct DomaticBounds {
    /// `⌊(δ+1)/k⌋` in closed mode, `⌊δ/k⌋` in open mode.
    pub degree_ceiling: usize,
    /// `⌊n/γ⌋` with `γ` the matching domination number, when computed.
    pub gamma_ceiling: Option<usize>,
    /// `⌊n/(k(n−δ))⌋`, closed mode only, when at least one.
    pub zelinka_floor: Option<usize>,
}

impl DomaticBounds {
    pub fn ceiling(&self) -> usize {
        self.gamma_ceiling
            .map_or(self.degree_ceiling, |g| g.min(self.degree_ceiling))
    }
}

/// Exact `d×k` (closed) or `d×k,t` (open) with a witness partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DomaticResult {
    pub value: usize,
    pub witness: DomaticPartition,
    pub bounds_used: DomaticBounds,
    pub nodes_explored: u64,
}

/// `⌊n/(k(n−δ))⌋`, or `None` when that is zero.
pub fn zelinka_floor(g: &Graph, k: usize) -> Option<usize> {
    let class_size = k * (g.n() - g.min_degree());
    (g.n() >= class_size).then(|| g.n() / class_size)
}

/// Partition into `ℓ = ⌊n/(k(n−δ))⌋` classes: `ℓ−1` blocks of `k(n−δ)`
/// consecutive ids and a final block holding the rest. Any set of at least
/// `k(n−δ)` vertices is a kDS, so every class qualifies.
pub fn zelinka_partition(g: &Graph, k: usize) -> Result<DomaticPartition> {
    Mode::Closed.check_gate(g, k)?;
    let n = g.n();
    let class_size = k * (n - g.min_degree());
    if n < class_size {
        return Err(Error::VacuousBound { n, class_size });
    }
    let count = n / class_size;
    let colors: Vec<usize> = (0..n).map(|v| (v / class_size).min(count - 1)).collect();
    let p = DomaticPartition::from_coloring(k, Mode::Closed, &colors, count);
    debug_assert!(is_domatic_partition(g, &p).unwrap_or(false));
    Ok(p)
}

/// Backtracking colouring of `V` with exactly `colors` classes, each of
/// which must reach `k` in every vertex's demand neighborhood.
struct ColorSearch<'a> {
    lists: &'a [Vec<usize>],
    k: usize,
    colors: usize,
    color: Vec<usize>,
    /// `hits[w * colors + c]`: demand neighbors of `w` coloured `c`.
    hits: Vec<usize>,
    undecided: Vec<usize>,
    class_size: Vec<usize>,
    opened: usize,
    nodes: u64,
}

impl<'a> ColorSearch<'a> {
    fn new(lists: &'a [Vec<usize>], k: usize, colors: usize) -> Self {
        let n = lists.len();
        Self {
            lists,
            k,
            colors,
            color: vec![usize::MAX; n],
            hits: vec![0; n * colors],
            undecided: lists.iter().map(Vec::len).collect(),
            class_size: vec![0; colors],
            opened: 0,
            nodes: 0,
        }
    }

    fn assign(&mut self, v: usize, c: usize) -> bool {
        self.color[v] = c;
        self.class_size[c] += 1;
        if c == self.opened {
            self.opened += 1;
        }
        for &w in &self.lists[v] {
            self.hits[w * self.colors + c] += 1;
            self.undecided[w] -= 1;
        }
        self.lists[v].iter().all(|&w| {
            let row = &self.hits[w * self.colors..(w + 1) * self.colors];
            row.iter().all(|&h| h + self.undecided[w] >= self.k)
        })
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        for &w in &self.lists[v] {
            self.hits[w * self.colors + c] -= 1;
            self.undecided[w] += 1;
        }
        self.class_size[c] -= 1;
        if self.class_size[c] == 0 {
            self.opened -= 1;
        }
        self.color[v] = usize::MAX;
    }

    fn run(&mut self, v: usize) -> bool {
        self.nodes += 1;
        let n = self.color.len();
        if v == n {
            return true;
        }
        // Every class needs at least k members.
        let deficit: usize = self
            .class_size
            .iter()
            .map(|&s| self.k.saturating_sub(s))
            .sum();
        if deficit > n - v {
            return false;
        }
        // New colours open in ascending order, so vertex 0 always gets 0.
        for c in 0..(self.opened + 1).min(self.colors) {
            if self.assign(v, c) && self.run(v + 1) {
                return true;
            }
            self.unassign(v);
        }
        false
    }
}

/// Exact `d×k` (closed mode) or `d×k,t` (open mode).
///
/// The search starts at the ceiling `min(degree ceiling, ⌊n/γ⌋)` and walks
/// down; the first class count that admits a valid colouring is the answer.
/// In closed mode the constructive floor `⌊n/(k(n−δ))⌋` ends the walk early
/// with its block partition as the witness.
pub fn d_xk(g: &Graph, k: usize, mode: Mode) -> Result<DomaticResult> {
    mode.check_gate(g, k)?;
    let n = g.n();
    let delta = g.min_degree();
    let gamma = gamma_xk(g, k, mode)?;
    let bounds = DomaticBounds {
        degree_ceiling: match mode {
            Mode::Closed => (delta + 1) / k,
            Mode::Open => delta / k,
        },
        gamma_ceiling: Some(n / gamma.value),
        zelinka_floor: match mode {
            Mode::Closed => zelinka_floor(g, k),
            Mode::Open => None,
        },
    };
    let ceiling = bounds.ceiling();
    let floor = bounds.zelinka_floor.unwrap_or(1).max(1);
    debug_assert!(floor <= ceiling.max(1));

    let lists = demand_lists(g, mode);
    let mut nodes = gamma.nodes_explored;
    for colors in (floor + 1..=ceiling).rev() {
        let mut search = ColorSearch::new(&lists, k, colors);
        let found = search.run(0);
        nodes += search.nodes;
        if found {
            let witness = DomaticPartition::from_coloring(k, mode, &search.color, colors);
            debug_assert!(is_domatic_partition(g, &witness).unwrap_or(false));
            return Ok(DomaticResult {
                value: colors,
                witness,
                bounds_used: bounds,
                nodes_explored: nodes,
            });
        }
    }

    let witness = if floor >= 2 {
        zelinka_partition(g, k)?
    } else {
        DomaticPartition::trivial(g, k, mode)
    };
    Ok(DomaticResult {
        value: witness.len(),
        witness,
        bounds_used: bounds,
        nodes_explored: nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn partition(n: usize, k: usize, mode: Mode, classes: &[&[usize]]) -> DomaticPartition {
        DomaticPartition {
            k,
            mode,
            classes: classes
                .iter()
                .map(|c| VertexSet::from_vertices(n, c.iter().copied()).unwrap())
                .collect(),
        }
    }

    #[test]
    fn partition_predicate_examples() {
        let k4 = complete(4).unwrap();
        assert!(
            is_domatic_partition(&k4, &partition(4, 2, Mode::Closed, &[&[0, 1], &[2, 3]])).unwrap()
        );
        let c5 = cycle(5).unwrap();
        assert!(
            is_domatic_partition(&c5, &DomaticPartition::trivial(&c5, 3, Mode::Closed)).unwrap()
        );
        let c4 = cycle(4).unwrap();
        assert!(
            is_domatic_partition(&c4, &partition(4, 1, Mode::Closed, &[&[0, 1], &[2, 3]])).unwrap()
        );
        assert!(
            is_domatic_partition(&c4, &partition(4, 1, Mode::Open, &[&[0, 1], &[2, 3]])).unwrap()
        );
    }

    #[test]
    fn partition_predicate_rejections() {
        let k4 = complete(4).unwrap();
        // Missing vertex 3.
        assert!(
            !is_domatic_partition(&k4, &partition(4, 1, Mode::Closed, &[&[0, 1], &[2]])).unwrap()
        );
        // Empty class.
        assert!(
            !is_domatic_partition(&k4, &partition(4, 1, Mode::Closed, &[&[0, 1, 2, 3], &[]]))
                .unwrap()
        );
        // Class {0} is not a 2-tuple dominating set.
        assert!(
            !is_domatic_partition(&k4, &partition(4, 2, Mode::Closed, &[&[0], &[1, 2, 3]]))
                .unwrap()
        );
        assert_eq!(
            is_domatic_partition(&k4, &partition(4, 1, Mode::Closed, &[&[0, 1], &[1, 2, 3]])),
            Err(Error::OverlappingClasses { vertex: 1 })
        );
        assert!(matches!(
            is_domatic_partition(&k4, &partition(5, 1, Mode::Closed, &[&[0, 1, 2, 3, 4]])),
            Err(Error::UniverseMismatch { .. })
        ));
    }

    #[test]
    fn domatic_examples() {
        assert_eq!(
            d_xk(&complete(7).unwrap(), 3, Mode::Closed).unwrap().value,
            2
        );
        assert_eq!(d_xk(&cycle(5).unwrap(), 2, Mode::Closed).unwrap().value, 1);
        assert_eq!(
            d_xk(&complete(4).unwrap(), 2, Mode::Closed).unwrap().value,
            2
        );
        let chain = clique_chain(2).unwrap();
        assert_eq!(d_xk(&chain, 2, Mode::Open).unwrap().value, 1);
        assert_eq!(d_xk(&chain, 2, Mode::Closed).unwrap().value, 2);
        assert_eq!(
            d_xk(&complete_bipartite(2, 2).unwrap(), 2, Mode::Closed)
                .unwrap()
                .value,
            1
        );
        assert_eq!(d_xk(&cycle(4).unwrap(), 1, Mode::Open).unwrap().value, 2);
    }

    #[test]
    fn domatic_witness_and_bounds() {
        let g = complete_bipartite(4, 4).unwrap();
        let r = d_xk(&g, 2, Mode::Closed).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.len(), 2);
        assert!(is_domatic_partition(&g, &r.witness).unwrap());
        assert_eq!(r.bounds_used.degree_ceiling, 2);
        assert_eq!(r.bounds_used.gamma_ceiling, Some(2));
    }

    #[test]
    fn domatic_gate() {
        assert!(matches!(
            d_xk(&complete(3).unwrap(), 5, Mode::Closed),
            Err(Error::NoDominatingSet { .. })
        ));
    }

    #[test]
    fn zelinka_examples() {
        let k6 = complete(6).unwrap();
        let p = zelinka_partition(&k6, 2).unwrap();
        assert_eq!(
            p.classes.iter().map(VertexSet::len).collect::<Vec<_>>(),
            vec![2, 2, 2]
        );
        assert!(is_domatic_partition(&k6, &p).unwrap());

        let p = zelinka_partition(&complete(4).unwrap(), 1).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.classes.iter().all(|c| c.len() == 1));

        assert_eq!(
            zelinka_partition(&cycle(5).unwrap(), 2),
            Err(Error::VacuousBound {
                n: 5,
                class_size: 6
            })
        );
    }

    #[test]
    fn zelinka_last_class_absorbs_remainder() {
        // n = 7, δ = 6, k = 2: blocks of 2, three classes, last one of size 3.
        let p = zelinka_partition(&complete(7).unwrap(), 2).unwrap();
        assert_eq!(
            p.classes.iter().map(VertexSet::len).collect::<Vec<_>>(),
            vec![2, 2, 3]
        );
    }
}
