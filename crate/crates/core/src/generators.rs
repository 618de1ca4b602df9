//! Graph families used as instances and sharpness witnesses.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Pairing attempts before [`random_regular`] gives up.
pub const PAIRING_RETRIES: usize = 1000;

fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// K_n.
pub fn complete(n: usize) -> Result<Graph> {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            b.add_edge(u, v)?;
        }
    }
    b.build()
}

/// K_{a,b} with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!(
            "complete bipartite sides must be positive, got ({a}, {b})"
        )));
    }
    let mut builder = GraphBuilder::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            builder.add_edge(u, v)?;
        }
    }
    builder.build()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Disjoint union; part `i` occupies the id block right after part `i - 1`.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter(
            "disjoint union of zero graphs".into(),
        ));
    }
    let n = parts.iter().map(Graph::n).sum();
    let mut b = GraphBuilder::new(n);
    let mut offset = 0;
    for part in parts {
        for (u, v) in part.edges() {
            b.add_edge(offset + u, offset + v)?;
        }
        offset += part.n();
    }
    b.build()
}

/// How each vertex of `G` is attached to `H` in a k-join.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinRule {
    /// Every vertex of `G` is joined to all of `V(H)`.
    All,
    /// Every vertex of `G` is joined to exactly `k` vertices of `H`, drawn
    /// from a generator seeded with the given value.
    ExactlySeeded(u64),
}

/// The k-join `G ∘_k H`: `g` keeps ids `0..|g|`, `h` is shifted after it, and
/// every `g` vertex receives at least `k` edges into `h` according to `rule`.
pub fn k_join(g: &Graph, h: &Graph, k: usize, rule: JoinRule) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    if h.n() < k {
        return Err(Error::InvalidParameter(format!(
            "k-join needs |V(H)| >= k, got |V(H)| = {} and k = {k}",
            h.n()
        )));
    }
    let (ng, nh) = (g.n(), h.n());
    let mut b = GraphBuilder::new(ng + nh);
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        b.add_edge(ng + u, ng + v)?;
    }
    match rule {
        JoinRule::All => {
            for u in 0..ng {
                for w in 0..nh {
                    b.add_edge(u, ng + w)?;
                }
            }
        }
        JoinRule::ExactlySeeded(seed) => {
            let mut rng = rng_from(seed);
            for u in 0..ng {
                let mut picks = rand::seq::index::sample(&mut rng, nh, k).into_vec();
                picks.sort_unstable();
                for w in picks {
                    b.add_edge(u, ng + w)?;
                }
            }
        }
    }
    b.build()
}

/// Four copies H1..H4 of K_k with H_i completely joined to H_{i+1}.
/// Copy `i` (zero based) occupies ids `i*k..(i+1)*k`.
pub fn clique_chain(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let mut b = GraphBuilder::new(4 * k);
    let block = |i: usize| i * k..(i + 1) * k;
    for i in 0..4 {
        for u in block(i) {
            for v in block(i).filter(|&v| v > u) {
                b.add_edge(u, v)?;
            }
            if i < 3 {
                for v in block(i + 1) {
                    b.add_edge(u, v)?;
                }
            }
        }
    }
    b.build()
}

/// Erdős–Rényi G(n, p). Pairs are visited in lexicographic order so the
/// output is a pure function of `(n, p, seed)`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = rng_from(seed);
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v)?;
            }
        }
    }
    b.build()
}

/// Uniform-ish random r-regular graph from the configuration (pairing)
/// model, rejecting loops and multi-edges.
pub fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if r >= n || (n * r) % 2 == 1 {
        return Err(Error::InfeasibleRegular { n, r });
    }
    let mut rng = rng_from(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..PAIRING_RETRIES {
        points.shuffle(&mut rng);
        let mut b = GraphBuilder::new(n);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || b.has_edge(u, v) {
                continue 'attempt;
            }
            b.add_edge(u, v)?;
        }
        return b.build();
    }
    Err(Error::PairingFailed {
        attempts: PAIRING_RETRIES,
    })
}
