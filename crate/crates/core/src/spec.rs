//! Textual graph descriptions.
//!
//! | form                           | graph                                   |
//! |--------------------------------|-----------------------------------------|
//! | `complete:N`                   | K_N                                     |
//! | `complete-bipartite:A,B`       | K_{A,B}                                 |
//! | `cycle:N`, `path:N`            | C_N, P_N                                |
//! | `clique-chain:K`               | four K_K copies joined in a chain       |
//! | `gnp:N,P[,SEED]`               | G(N, P)                                 |
//! | `random-regular:N,R[,SEED]`    | pairing-model R-regular graph           |
//! | `union(S1;S2;...)`             | disjoint union                          |
//! | `kjoin(G;H;K[;seeded=SEED])`   | k-join, all edges or exactly K seeded   |
//! | `file:PATH`                    | edge-list file                          |

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::{self, JoinRule};
use crate::graph::Graph;
use crate::io;

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    DisjointUnion(Vec<GraphSpec>),
    KJoin {
        g: Box<GraphSpec>,
        h: Box<GraphSpec>,
        k: usize,
        rule: JoinRule,
    },
    CliqueChain(usize),
    Gnp {
        n: usize,
        p: f64,
        seed: Option<u64>,
    },
    RandomRegular {
        n: usize,
        r: usize,
        seed: Option<u64>,
    },
    FromFile(PathBuf),
}

impl GraphSpec {
    pub fn family(&self) -> &'static str {
        match self {
            GraphSpec::Complete(_) => "complete",
            GraphSpec::CompleteBipartite(..) => "complete-bipartite",
            GraphSpec::Cycle(_) => "cycle",
            GraphSpec::Path(_) => "path",
            GraphSpec::DisjointUnion(_) => "disjoint-union",
            GraphSpec::KJoin { .. } => "k-join",
            GraphSpec::CliqueChain(_) => "clique-chain",
            GraphSpec::Gnp { .. } => "gnp",
            GraphSpec::RandomRegular { .. } => "random-regular",
            GraphSpec::FromFile(_) => "from-file",
        }
    }

    /// Fills every missing seed of a random family with `seed`.
    pub fn with_seed(self, seed: u64) -> Self {
        match self {
            GraphSpec::Gnp { n, p, seed: None } => GraphSpec::Gnp {
                n,
                p,
                seed: Some(seed),
            },
            GraphSpec::RandomRegular { n, r, seed: None } => GraphSpec::RandomRegular {
                n,
                r,
                seed: Some(seed),
            },
            GraphSpec::DisjointUnion(parts) => {
                GraphSpec::DisjointUnion(parts.into_iter().map(|p| p.with_seed(seed)).collect())
            }
            GraphSpec::KJoin { g, h, k, rule } => GraphSpec::KJoin {
                g: Box::new(g.with_seed(seed)),
                h: Box::new(h.with_seed(seed)),
                k,
                rule,
            },
            other => other,
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Complete(n) => generators::complete(*n),
            GraphSpec::CompleteBipartite(a, b) => generators::complete_bipartite(*a, *b),
            GraphSpec::Cycle(n) => generators::cycle(*n),
            GraphSpec::Path(n) => generators::path(*n),
            GraphSpec::DisjointUnion(parts) => {
                let graphs = parts
                    .iter()
                    .map(GraphSpec::build)
                    .collect::<Result<Vec<_>>>()?;
                generators::disjoint_union(&graphs)
            }
            GraphSpec::KJoin { g, h, k, rule } => {
                generators::k_join(&g.build()?, &h.build()?, *k, *rule)
            }
            GraphSpec::CliqueChain(k) => generators::clique_chain(*k),
            GraphSpec::Gnp { n, p, seed } => {
                let seed = seed.ok_or_else(|| Error::MissingSeed(self.to_string()))?;
                generators::gnp(*n, *p, seed)
            }
            GraphSpec::RandomRegular { n, r, seed } => {
                let seed = seed.ok_or_else(|| Error::MissingSeed(self.to_string()))?;
                generators::random_regular(*n, *r, seed)
            }
            GraphSpec::FromFile(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                io::read_graph(&text)
            }
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seed_suffix = |seed: &Option<u64>| seed.map(|s| format!(",{s}")).unwrap_or_default();
        match self {
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::CompleteBipartite(a, b) => write!(f, "complete-bipartite:{a},{b}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::CliqueChain(k) => write!(f, "clique-chain:{k}"),
            GraphSpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p}{}", seed_suffix(seed)),
            GraphSpec::RandomRegular { n, r, seed } => {
                write!(f, "random-regular:{n},{r}{}", seed_suffix(seed))
            }
            GraphSpec::FromFile(path) => write!(f, "file:{}", path.display()),
            GraphSpec::DisjointUnion(parts) => {
                let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "union({})", inner.join(";"))
            }
            GraphSpec::KJoin { g, h, k, rule } => match rule {
                JoinRule::All => write!(f, "kjoin({g};{h};{k})"),
                JoinRule::ExactlySeeded(s) => write!(f, "kjoin({g};{h};{k};seeded={s})"),
            },
        }
    }
}

fn bad(s: &str, why: &str) -> Error {
    Error::InvalidParameter(format!("graph spec {s:?}: {why}"))
}

/// Splits on `;` outside parentheses.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(bad(s, "unbalanced parentheses"));
        }
    }
    if depth != 0 {
        return Err(bad(s, "unbalanced parentheses"));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn num<T: FromStr>(whole: &str, field: &str) -> Result<T> {
    field
        .trim()
        .parse()
        .map_err(|_| bad(whole, &format!("cannot parse {field:?}")))
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(raw: &str) -> Result<Self> {
        let s = raw.trim();
        if let Some(inner) = s.strip_prefix("union(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner)?
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<GraphSpec>>>()?;
            return Ok(GraphSpec::DisjointUnion(parts));
        }
        if let Some(inner) = s.strip_prefix("kjoin(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner)?;
            let (g, h, k, rule) = match parts.as_slice() {
                [g, h, k] => (g, h, k, JoinRule::All),
                [g, h, k, rule] => {
                    let rule = match rule.trim() {
                        "all" => JoinRule::All,
                        r => match r.strip_prefix("seeded=") {
                            Some(seed) => JoinRule::ExactlySeeded(num(s, seed)?),
                            None => return Err(bad(s, "join rule must be `all` or `seeded=SEED`")),
                        },
                    };
                    (g, h, k, rule)
                }
                _ => return Err(bad(s, "expected kjoin(G;H;K[;RULE])")),
            };
            return Ok(GraphSpec::KJoin {
                g: Box::new(g.parse()?),
                h: Box::new(h.parse()?),
                k: num(s, k)?,
                rule,
            });
        }
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GraphSpec::FromFile(PathBuf::from(path)));
        }

        let (family, args) = s
            .split_once(':')
            .ok_or_else(|| bad(s, "expected FAMILY:ARGS"))?;
        let args: Vec<&str> = args.split(',').collect();
        let spec = match (family, args.as_slice()) {
            ("complete", [n]) => GraphSpec::Complete(num(s, n)?),
            ("complete-bipartite", [a, b]) => GraphSpec::CompleteBipartite(num(s, a)?, num(s, b)?),
            ("cycle", [n]) => GraphSpec::Cycle(num(s, n)?),
            ("path", [n]) => GraphSpec::Path(num(s, n)?),
            ("clique-chain", [k]) => GraphSpec::CliqueChain(num(s, k)?),
            ("gnp", [n, p]) => GraphSpec::Gnp {
                n: num(s, n)?,
                p: num(s, p)?,
                seed: None,
            },
            ("gnp", [n, p, seed]) => GraphSpec::Gnp {
                n: num(s, n)?,
                p: num(s, p)?,
                seed: Some(num(s, seed)?),
            },
            ("random-regular", [n, r]) => GraphSpec::RandomRegular {
                n: num(s, n)?,
                r: num(s, r)?,
                seed: None,
            },
            ("random-regular", [n, r, seed]) => GraphSpec::RandomRegular {
                n: num(s, n)?,
                r: num(s, r)?,
                seed: Some(num(s, seed)?),
            },
            _ => return Err(bad(s, "unknown family or wrong number of arguments")),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_every_family() {
        for text in [
            "complete:6",
            "complete-bipartite:2,3",
            "cycle:5",
            "path:4",
            "clique-chain:2",
            "gnp:8,0.5,3",
            "gnp:8,0.5",
            "random-regular:6,3,1",
            "union(complete:3;complete:3)",
            "kjoin(complete:2;complete:3;2;seeded=7)",
            "kjoin(union(path:2;path:2);cycle:4;2)",
            "file:/tmp/g.txt",
        ] {
            let spec: GraphSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }

    #[test]
    fn builds_composites() {
        let spec: GraphSpec = "union(complete:3;complete:3)".parse().unwrap();
        let g = spec.build().unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 6));
        let spec: GraphSpec = "kjoin(complete:1;complete:2;1)".parse().unwrap();
        assert_eq!(spec.build().unwrap(), generators::complete(3).unwrap());
    }

    #[test]
    fn random_families_need_seeds() {
        let spec: GraphSpec = "gnp:5,0.5".parse().unwrap();
        assert!(matches!(spec.build(), Err(Error::MissingSeed(_))));
        let seeded = spec.with_seed(9);
        assert_eq!(seeded.build().unwrap(), generators::gnp(5, 0.5, 9).unwrap());
        let kept: GraphSpec = "gnp:5,0.5,2".parse().unwrap();
        assert_eq!(kept.clone().with_seed(9), kept);
    }

    #[test]
    fn rejects_garbage() {
        for text in [
            "",
            "complete",
            "complete:x",
            "cycle:1,2",
            "union(complete:3",
            "wheel:5",
            "kjoin(a;b)",
        ] {
            assert!(text.parse::<GraphSpec>().is_err(), "{text}");
        }
    }
}
