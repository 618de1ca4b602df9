//! Instance-level evaluation of the bounds relating `γ×k`, `d×k`, their
//! total variants, and the complement graph.
//!
//! Every check compares exact rationals. An upper bound `lhs <= rhs` is
//! reported as [`CheckStatus::Sharp`] when the integer `lhs` reaches
//! `⌊rhs⌋` (the best any integer can do); equality-case consequences are
//! only asserted when `lhs == rhs` holds exactly.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::domatic::{d_xk, DomaticResult};
use crate::domination::{gamma_xk, kjoin_decomposition_exists, GammaResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{gated, InvariantReport};
use crate::Mode;

pub type Rational = Ratio<i64>;

/// Check ids in report order.
pub const CHECK_IDS: [&str; 16] = [
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C5b",
    "C6",
    "C7",
    "C7-regular",
    "C7-structure",
    "C7-corollary",
    "C8",
    "C9-lower",
    "C9-upper",
    "C10",
    "C11",
];

/// Graphs above this order skip the k-join decomposition scan.
pub const DECOMPOSITION_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Holds,
    /// Holds, and the bound is attained.
    Sharp,
    Violated,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Sharp => "sharp",
            CheckStatus::Violated => "violated",
            CheckStatus::NotApplicable => "not-applicable",
        }
    }
}

fn ratio_str<S: Serializer>(
    value: &Option<Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match value {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: &'static str,
    pub statement: &'static str,
    #[serde(serialize_with = "ratio_str")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "ratio_str")]
    pub rhs: Option<Rational>,
    pub status: CheckStatus,
    pub notes: Vec<String>,
}

impl CheckRecord {
    fn not_applicable(id: &'static str, statement: &'static str, why: impl Into<String>) -> Self {
        Self {
            id,
            statement,
            lhs: None,
            rhs: None,
            status: CheckStatus::NotApplicable,
            notes: vec![why.into()],
        }
    }

    fn with(
        id: &'static str,
        statement: &'static str,
        lhs: Rational,
        rhs: Rational,
        status: CheckStatus,
    ) -> Self {
        Self {
            id,
            statement,
            lhs: Some(lhs),
            rhs: Some(rhs),
            status,
            notes: Vec::new(),
        }
    }

    /// `lhs <= rhs`.
    fn upper(id: &'static str, statement: &'static str, lhs: Rational, rhs: Rational) -> Self {
        let status = if lhs > rhs {
            CheckStatus::Violated
        } else if lhs == rhs || lhs == rhs.floor() {
            CheckStatus::Sharp
        } else {
            CheckStatus::Holds
        };
        let mut rec = Self::with(id, statement, lhs, rhs, status);
        if status == CheckStatus::Sharp && lhs != rhs {
            rec.notes.push(format!(
                "attains the integer part {} of the bound",
                rhs.floor()
            ));
        }
        rec
    }

    /// `lhs >= rhs`.
    fn lower(id: &'static str, statement: &'static str, lhs: Rational, rhs: Rational) -> Self {
        let status = if lhs < rhs {
            CheckStatus::Violated
        } else if lhs == rhs.ceil() {
            CheckStatus::Sharp
        } else {
            CheckStatus::Holds
        };
        Self::with(id, statement, lhs, rhs, status)
    }

    /// Marks the record violated when an equality-case consequence fails.
    fn require(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.status = CheckStatus::Violated;
            self.notes.push(note.into());
        }
    }

    fn exact_equality(&self) -> bool {
        self.lhs.is_some() && self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceInfo {
    pub n: usize,
    pub edges: usize,
    pub k: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub complement_min_degree: usize,
    pub regular: bool,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremInvariants {
    pub gamma: Option<GammaResult>,
    pub domatic: Option<DomaticResult>,
    pub gamma_total: Option<GammaResult>,
    pub domatic_total: Option<DomaticResult>,
    pub complement_domatic: Option<DomaticResult>,
    /// Smallest `t` admitting a k-join decomposition onto `t` vertices.
    pub min_decomposition: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub instance: InstanceInfo,
    pub invariants: TheoremInvariants,
    /// Smallest class of the `d×k(G)` witness partition.
    pub r: Option<usize>,
    pub checks: Vec<CheckRecord>,
}

impl TheoremReport {
    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn status(&self, id: &str) -> Option<CheckStatus> {
        self.check(id).map(|c| c.status)
    }

    pub fn violations(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Violated)
    }

    pub fn has_violation(&self) -> bool {
        self.violations().next().is_some()
    }

    /// The four invariants of `G` in report form, for oracle cross-checks.
    pub fn invariant_report(&self) -> InvariantReport {
        InvariantReport {
            n: self.instance.n,
            edges: self.instance.edges,
            min_degree: self.instance.min_degree,
            max_degree: self.instance.max_degree,
            k: self.instance.k,
            gamma: self.invariants.gamma.clone(),
            domatic: self.invariants.domatic.clone(),
            gamma_total: self.invariants.gamma_total.clone(),
            domatic_total: self.invariants.domatic_total.clone(),
        }
    }

    pub fn status_counts(&self) -> BTreeMap<CheckStatus, usize> {
        let mut counts = BTreeMap::new();
        for c in &self.checks {
            *counts.entry(c.status).or_insert(0) += 1;
        }
        counts
    }
}

/// Sums per-status counts over many reports.
pub fn summarize<'a>(
    reports: impl IntoIterator<Item = &'a TheoremReport>,
) -> BTreeMap<CheckStatus, usize> {
    let mut total = BTreeMap::new();
    for r in reports {
        for (status, count) in r.status_counts() {
            *total.entry(status).or_insert(0) += count;
        }
    }
    total
}

fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

fn frac(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}

/// `n = 2k−2`, `(k−1)`-regular, bipartite, `(k−1)²` edges: only
/// `K_{k−1,k−1}` fits.
fn is_balanced_complete_bipartite(g: &Graph, k: usize) -> bool {
    let side = k - 1;
    side >= 1
        && g.n() == 2 * side
        && g.is_regular()
        && g.min_degree() == side
        && g.edge_count() == side * side
        && g.is_bipartite()
}

const C1: &str = "γ×k · d×k <= n; on equality every class is a minimum kDS";
const C2: &str =
    "d×k <= (δ+1)/k; on equality |V_i ∩ N[v]| = k for every class and every v of degree δ";
const C3: &str = "d×k <= n/(k−1) for k >= 2; on equality γ×k = k−1";
const C4: &str = "bipartite, k >= 2: d×k <= n/(2k−2), equality iff G = K_{k−1,k−1}";
const C5: &str = "γ×k + d×k <= n+1";
const C5B: &str = "d×k >= 2: γ×k + d×k <= n/2 + 2";
const C6: &str = "k−1 <= δ <= 2k−2 implies d×k = 1";
const C7: &str = "d×k(G) + d×k(Ḡ) <= (n+1)/k";
const C7_REGULAR: &str = "d×k(G) + d×k(Ḡ) = (n+1)/k implies G regular";
const C7_STRUCTURE: &str =
    "d×k(G) + d×k(Ḡ) = (n+1)/k, d = max side: n/(r+1) + 1/k <= d <= n/r for some r in [k−1, 2k−1]";
const C7_COROLLARY: &str =
    "d×k(G) + d×k(Ḡ) = (n+1)/k, k >= 2, d = max side: n/(2k) + 1/k <= d <= n/(k−1)";
const C8: &str = "d×k >= ⌊n/(k(n−δ))⌋";
const C9_LOWER: &str = "δ >= k: d×k,t <= d×k";
const C9_UPPER: &str = "δ >= k: d×k <= 2·d×k,t";
const C10: &str = "bipartite, δ >= k−1 >= 1: γ×k >= 2k−2, equality iff G = K_{k−1,k−1}";
const C11: &str = "min{t : G splits as a k-join onto t vertices} = γ×k";

/// Computes the invariants of `(g, k)` and evaluates every check.
///
/// Checks whose hypotheses fail are reported as not applicable; only
/// `k = 0` is an error.
pub fn verify_all(g: &Graph, k: usize) -> Result<TheoremReport> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let n = g.n();
    let delta = g.min_degree();
    let complement = g.complement();
    let bipartite = g.is_bipartite();
    let instance = InstanceInfo {
        n,
        edges: g.edge_count(),
        k,
        min_degree: delta,
        max_degree: g.max_degree(),
        complement_min_degree: complement.min_degree(),
        regular: g.is_regular(),
        bipartite,
    };

    let gamma = gated(g, k, Mode::Closed, || gamma_xk(g, k, Mode::Closed))?;
    let domatic = gated(g, k, Mode::Closed, || d_xk(g, k, Mode::Closed))?;
    let gamma_total = gated(g, k, Mode::Open, || gamma_xk(g, k, Mode::Open))?;
    let domatic_total = gated(g, k, Mode::Open, || d_xk(g, k, Mode::Open))?;
    let complement_domatic = if domatic.is_some() {
        gated(&complement, k, Mode::Closed, || {
            d_xk(&complement, k, Mode::Closed)
        })?
    } else {
        None
    };
    let min_decomposition = if gamma.is_some() && n <= DECOMPOSITION_CAP {
        let mut found = None;
        for t in 0..=n {
            if kjoin_decomposition_exists(g, k, t)?.is_some() {
                found = Some(t);
                break;
            }
        }
        found
    } else {
        None
    };

    let mut checks = Vec::new();
    let closed_gate = format!("needs δ >= k−1 = {}, δ = {delta}", k - 1);

    match (&gamma, &domatic) {
        (Some(gm), Some(dm)) => {
            let (gv, dv) = (gm.value, dm.value);

            let mut c1 = CheckRecord::upper("C1", C1, int(gv * dv), int(n));
            if c1.exact_equality() {
                let sizes: Vec<usize> = dm.witness.classes.iter().map(|c| c.len()).collect();
                c1.require(
                    sizes.iter().all(|&s| s == gv),
                    format!("class sizes {sizes:?} are not all γ×k = {gv}"),
                );
            }
            checks.push(c1);

            let mut c2 = CheckRecord::upper("C2", C2, int(dv), frac(delta + 1, k));
            if c2.exact_equality() {
                for v in (0..n).filter(|&v| g.degree(v) == delta) {
                    let closed = g.closed_neighbors(v);
                    for (i, class) in dm.witness.classes.iter().enumerate() {
                        let hit = class.intersection_len(&closed);
                        c2.require(hit == k, format!("|V_{i} ∩ N[{v}]| = {hit}, expected {k}"));
                    }
                }
            }
            checks.push(c2);

            if k >= 2 {
                let mut c3 = CheckRecord::upper("C3", C3, int(dv), frac(n, k - 1));
                if c3.exact_equality() {
                    c3.require(gv == k - 1, format!("equality but γ×k = {gv} != k−1"));
                }
                checks.push(c3);
            } else {
                checks.push(CheckRecord::not_applicable("C3", C3, "needs k >= 2"));
            }

            if bipartite && k >= 2 {
                let mut c4 = CheckRecord::upper("C4", C4, int(dv), frac(n, 2 * k - 2));
                let signature = is_balanced_complete_bipartite(g, k);
                let equal = c4.exact_equality();
                c4.require(
                    !equal || signature,
                    "equality on a graph other than K_{k−1,k−1}",
                );
                c4.require(!signature || equal, "K_{k−1,k−1} without equality");
                checks.push(c4);
            } else {
                checks.push(CheckRecord::not_applicable(
                    "C4",
                    C4,
                    "needs a bipartite graph and k >= 2",
                ));
            }

            if k >= 2 {
                let mut c5 = CheckRecord::upper("C5", C5, int(gv + dv), int(n + 1));
                if k == 2 {
                    c5.notes.push("k = 2: uses d×k <= (δ+1)/k <= n/2".into());
                }
                checks.push(c5);
                if dv >= 2 {
                    checks.push(CheckRecord::upper(
                        "C5b",
                        C5B,
                        int(gv + dv),
                        frac(n, 2) + int(2),
                    ));
                } else {
                    checks.push(CheckRecord::not_applicable("C5b", C5B, "needs d×k >= 2"));
                }
            } else {
                checks.push(CheckRecord::not_applicable("C5", C5, "needs k >= 2"));
                checks.push(CheckRecord::not_applicable("C5b", C5B, "needs k >= 2"));
            }

            if delta <= 2 * k - 2 {
                let status = if dv == 1 {
                    CheckStatus::Holds
                } else {
                    CheckStatus::Violated
                };
                checks.push(CheckRecord::with("C6", C6, int(dv), int(1), status));
            } else {
                checks.push(CheckRecord::not_applicable(
                    "C6",
                    C6,
                    format!("δ = {delta} > 2k−2"),
                ));
            }

            checks.extend(nordhaus_gaddum(g, k, dm, complement_domatic.as_ref()));

            let floor = n / (k * (n - delta));
            checks.push(CheckRecord::lower("C8", C8, int(dv), int(floor)));

            match &domatic_total {
                Some(dt) => {
                    checks.push(CheckRecord::upper(
                        "C9-lower",
                        C9_LOWER,
                        int(dt.value),
                        int(dv),
                    ));
                    checks.push(CheckRecord::upper(
                        "C9-upper",
                        C9_UPPER,
                        int(dv),
                        int(2 * dt.value),
                    ));
                }
                None => {
                    let why = format!("needs δ >= k = {k}, δ = {delta}");
                    checks.push(CheckRecord::not_applicable(
                        "C9-lower",
                        C9_LOWER,
                        why.clone(),
                    ));
                    checks.push(CheckRecord::not_applicable("C9-upper", C9_UPPER, why));
                }
            }

            if bipartite && k >= 2 {
                let mut c10 = CheckRecord::lower("C10", C10, int(gv), int(2 * k - 2));
                let signature = is_balanced_complete_bipartite(g, k);
                let equal = c10.exact_equality();
                c10.require(
                    !equal || signature,
                    "γ×k = 2k−2 on a graph other than K_{k−1,k−1}",
                );
                c10.require(!signature || equal, "K_{k−1,k−1} with γ×k != 2k−2");
                checks.push(c10);
            } else {
                checks.push(CheckRecord::not_applicable(
                    "C10",
                    C10,
                    "needs a bipartite graph and k >= 2",
                ));
            }

            match min_decomposition {
                Some(t) => {
                    let status = if t == gv {
                        CheckStatus::Holds
                    } else {
                        CheckStatus::Violated
                    };
                    checks.push(CheckRecord::with("C11", C11, int(t), int(gv), status));
                }
                None => checks.push(CheckRecord::not_applicable(
                    "C11",
                    C11,
                    format!("decomposition scan limited to n <= {DECOMPOSITION_CAP}"),
                )),
            }
        }
        _ => {
            for (id, statement) in [
                ("C1", C1),
                ("C2", C2),
                ("C3", C3),
                ("C4", C4),
                ("C5", C5),
                ("C5b", C5B),
                ("C6", C6),
                ("C7", C7),
                ("C7-regular", C7_REGULAR),
                ("C7-structure", C7_STRUCTURE),
                ("C7-corollary", C7_COROLLARY),
                ("C8", C8),
                ("C9-lower", C9_LOWER),
                ("C9-upper", C9_UPPER),
                ("C10", C10),
                ("C11", C11),
            ] {
                checks.push(CheckRecord::not_applicable(
                    id,
                    statement,
                    closed_gate.clone(),
                ));
            }
        }
    }

    let r = domatic.as_ref().and_then(|d| d.witness.min_class_size());
    Ok(TheoremReport {
        instance,
        invariants: TheoremInvariants {
            gamma,
            domatic,
            gamma_total,
            domatic_total,
            complement_domatic,
            min_decomposition,
        },
        r,
        checks,
    })
}

/// C7 and its equality-case consequences.
fn nordhaus_gaddum(
    g: &Graph,
    k: usize,
    domatic: &DomaticResult,
    complement: Option<&DomaticResult>,
) -> Vec<CheckRecord> {
    let n = g.n();
    let Some(comp) = complement else {
        let why = format!(
            "needs δ(Ḡ) >= k−1 = {}, δ(Ḡ) = {}",
            k - 1,
            n - 1 - g.max_degree()
        );
        return vec![
            CheckRecord::not_applicable("C7", C7, why.clone()),
            CheckRecord::not_applicable("C7-regular", C7_REGULAR, why.clone()),
            CheckRecord::not_applicable("C7-structure", C7_STRUCTURE, why.clone()),
            CheckRecord::not_applicable("C7-corollary", C7_COROLLARY, why),
        ];
    };

    let sum = CheckRecord::upper("C7", C7, int(domatic.value + comp.value), frac(n + 1, k));
    if !sum.exact_equality() {
        let why = "needs d×k(G) + d×k(Ḡ) = (n+1)/k exactly";
        return vec![
            sum,
            CheckRecord::not_applicable("C7-regular", C7_REGULAR, why),
            CheckRecord::not_applicable("C7-structure", C7_STRUCTURE, why),
            CheckRecord::not_applicable("C7-corollary", C7_COROLLARY, why),
        ];
    }

    let regular_status = if g.is_regular() {
        CheckStatus::Holds
    } else {
        CheckStatus::Violated
    };
    let regular = CheckRecord::with(
        "C7-regular",
        C7_REGULAR,
        int(g.min_degree()),
        int(g.max_degree()),
        regular_status,
    );

    // The larger side plays the role of G.
    let (side, side_name) = if domatic.value >= comp.value {
        (domatic, "G")
    } else {
        (comp, "Ḡ")
    };
    let d = int(side.value);
    let r = side.witness.min_class_size().unwrap_or(0);
    let lower = frac(n, r + 1) + frac(1, k);
    let mut structure =
        CheckRecord::with("C7-structure", C7_STRUCTURE, d, lower, CheckStatus::Holds);
    structure.notes.push(format!(
        "r = {r} (smallest class of the {side_name} witness), d = {}",
        side.value
    ));
    structure.require(
        (k - 1..=2 * k - 1).contains(&r),
        format!("r = {r} outside [{}, {}]", k - 1, 2 * k - 1),
    );
    structure.require(
        r > 0 && d <= frac(n, r),
        format!("d = {d} exceeds n/r = {}", frac(n, r.max(1))),
    );
    structure.require(lower <= d, format!("d = {d} below n/(r+1) + 1/k = {lower}"));

    let corollary = if k >= 2 {
        let low = frac(n, 2 * k) + frac(1, k);
        let high = frac(n, k - 1);
        let mut rec = CheckRecord::with("C7-corollary", C7_COROLLARY, d, low, CheckStatus::Holds);
        rec.require(low <= d, format!("d = {d} below n/(2k) + 1/k = {low}"));
        rec.require(d <= high, format!("d = {d} above n/(k−1) = {high}"));
        rec
    } else {
        CheckRecord::not_applicable("C7-corollary", C7_COROLLARY, "needs k >= 2")
    };

    vec![sum, regular, structure, corollary]
}
