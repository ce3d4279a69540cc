//! Finite verification of the characterization, bounds, family values and
//! implication lattice, over enumerated or file-supplied graphs.
//!
//! Every inequality is checked in exact integer arithmetic. Graphs outside a
//! claim's hypothesis are counted as skipped, never as counterexamples.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonical_key, is_isomorphic, CanonicalKey};
use crate::codes::{is_valid, CodeKind};
use crate::enumerate::{enumerate_trees, TREE_LIMIT};
use crate::error::{Error, Result};
use crate::families::{corona, eid_gap, extremal_tid, family_a, ld_gap, path, sid_gap, star};
use crate::graph::Graph;
use crate::io::write_graph6;
use crate::solver::{all_minimum_codes, parameter, ALL_OPTIMA_LIMIT};
use crate::stream::GraphStream;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    Prop21,
    Prop22,
    Thm24,
    Lem31,
    Thm32,
    Cor33,
    Thm34,
    Cor35,
    Thm36,
    Thm41,
    Thm42,
    Thm43,
    Thm44,
    Prop45,
    Prop46,
    Prop47,
    Fig1,
    LogLb,
    /// Search for girth-5 graphs meeting the 3n/4 bound (informational).
    Girth5Search,
}

impl ClaimId {
    pub const ALL: [ClaimId; 19] = [
        ClaimId::Prop21,
        ClaimId::Prop22,
        ClaimId::Thm24,
        ClaimId::Lem31,
        ClaimId::Thm32,
        ClaimId::Cor33,
        ClaimId::Thm34,
        ClaimId::Cor35,
        ClaimId::Thm36,
        ClaimId::Thm41,
        ClaimId::Thm42,
        ClaimId::Thm43,
        ClaimId::Thm44,
        ClaimId::Prop45,
        ClaimId::Prop46,
        ClaimId::Prop47,
        ClaimId::Fig1,
        ClaimId::LogLb,
        ClaimId::Girth5Search,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Prop21 => "prop-2.1",
            ClaimId::Prop22 => "prop-2.2",
            ClaimId::Thm24 => "thm-2.4",
            ClaimId::Lem31 => "lem-3.1",
            ClaimId::Thm32 => "thm-3.2",
            ClaimId::Cor33 => "cor-3.3",
            ClaimId::Thm34 => "thm-3.4",
            ClaimId::Cor35 => "cor-3.5",
            ClaimId::Thm36 => "thm-3.6",
            ClaimId::Thm41 => "thm-4.1",
            ClaimId::Thm42 => "thm-4.2",
            ClaimId::Thm43 => "thm-4.3",
            ClaimId::Thm44 => "thm-4.4",
            ClaimId::Prop45 => "prop-4.5",
            ClaimId::Prop46 => "prop-4.6",
            ClaimId::Prop47 => "prop-4.7",
            ClaimId::Fig1 => "fig-1",
            ClaimId::LogLb => "log-lb",
            ClaimId::Girth5Search => "girth5-search",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown claim '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Searches report findings without a pass/fail judgement.
    Info,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub claim: String,
    pub scope: String,
    pub checked: usize,
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches: Option<Vec<Counterexample>>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    /// One JSON object with keys in sorted order.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self)
            .expect("report serializes")
            .to_string()
    }
}

enum Check {
    Skip,
    Ok,
    Match(String),
    Fail(String),
}

fn counterexample(g: &Graph, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        graph6: write_graph6(g),
        detail: detail.into(),
    }
}

/// Runs `check` on every graph in parallel and aggregates a report.
fn sweep<F>(
    claim: ClaimId,
    scope: String,
    graphs: &[Graph],
    informational: bool,
    check: F,
) -> Result<Report>
where
    F: Fn(&Graph) -> Result<Check> + Sync,
{
    let start = Instant::now();
    let results: Vec<Check> = graphs.par_iter().map(&check).collect::<Result<_>>()?;
    let mut report = Report {
        claim: claim.as_str().to_owned(),
        scope,
        checked: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        matches: informational.then(Vec::new),
        elapsed_ms: 0,
        verdict: Verdict::Pass,
    };
    for (g, result) in graphs.iter().zip(results) {
        match result {
            Check::Skip => report.skipped += 1,
            Check::Ok => report.checked += 1,
            Check::Match(detail) => {
                report.checked += 1;
                report
                    .matches
                    .get_or_insert_with(Vec::new)
                    .push(counterexample(g, detail));
            }
            Check::Fail(detail) => {
                report.checked += 1;
                report.counterexamples.push(counterexample(g, detail));
            }
        }
    }
    finish(report, start, informational)
}

fn finish(mut report: Report, start: Instant, informational: bool) -> Result<Report> {
    report.counterexamples.sort();
    if let Some(m) = report.matches.as_mut() {
        m.sort();
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report.verdict = if !report.counterexamples.is_empty() {
        Verdict::Fail
    } else if informational {
        Verdict::Info
    } else {
        Verdict::Pass
    };
    Ok(report)
}

fn value(g: &Graph, kind: CodeKind) -> Result<Option<usize>> {
    parameter(g, kind)
}

/// Which half of the extremal characterization a graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExtremalCase {
    /// `K_{1,t}` for `t ≥ 2`.
    Star,
    /// A member of `𝒜*`.
    FamilyA,
    /// A member of `𝒜* ⋈ K_1`.
    FamilyAJoinK1,
    /// `G'' ⋈ K_m` with a leaf on every clique vertex.
    LeafedClique,
}

impl ExtremalCase {
    /// 1 for the graphs with `γ^ID ≥ n - 1`, 2 for the leafed cliques.
    pub fn case(self) -> u8 {
        match self {
            ExtremalCase::LeafedClique => 2,
            _ => 1,
        }
    }
}

pub const EXTREMAL_LIMIT: usize = 12;

/// Integer partitions of `s` as non-increasing sequences, in decreasing
/// lexicographic order.
pub fn partitions(s: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(s, s, &mut Vec::new(), &mut out);
    out
}

/// Members of `𝒜*` (without universal vertex) or `𝒜* ⋈ K_1` on exactly
/// `n` vertices, with their partitions.
pub fn family_a_star_members(n: usize, with_universal: bool) -> Result<Vec<(Vec<usize>, Graph)>> {
    let body = if with_universal {
        n.checked_sub(1)
    } else {
        Some(n)
    };
    let Some(body) = body.filter(|b| b % 2 == 0) else {
        return Ok(Vec::new());
    };
    partitions(body / 2)
        .into_iter()
        .filter(|p| !p.is_empty() && p.as_slice() != [1])
        .map(|p| Ok((p.clone(), family_a(&p, with_universal)?)))
        .collect()
}

type Catalog = Arc<Vec<(CanonicalKey, ExtremalCase)>>;

fn extremal_catalog(n: usize) -> Result<Catalog> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Catalog>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("catalog lock").get(&n) {
        return Ok(hit.clone());
    }
    let mut catalog = Vec::new();
    if n >= 3 {
        catalog.push((canonical_key(&star(n)?)?, ExtremalCase::Star));
    }
    for (_, g) in family_a_star_members(n, false)? {
        catalog.push((canonical_key(&g)?, ExtremalCase::FamilyA));
    }
    for (_, g) in family_a_star_members(n, true)? {
        catalog.push((canonical_key(&g)?, ExtremalCase::FamilyAJoinK1));
    }
    for m in 1..=n / 2 {
        for universal in [false, true] {
            let Some(body) = n.checked_sub(2 * m + usize::from(universal)) else {
                continue;
            };
            if body % 2 == 1 {
                continue;
            }
            for p in partitions(body / 2) {
                let g = extremal_tid(&p, universal, m)?;
                catalog.push((canonical_key(&g)?, ExtremalCase::LeafedClique));
            }
        }
    }
    let catalog = Arc::new(catalog);
    cache
        .lock()
        .expect("catalog lock")
        .insert(n, catalog.clone());
    Ok(catalog)
}

/// Whether `g` (on `n ≥ 3` vertices) lies in the extremal family for total
/// dominating identifying codes, and in which case. Case (i) wins when a
/// graph fits both descriptions.
pub fn is_extremal_member(g: &Graph) -> Result<Option<ExtremalCase>> {
    if g.n() > EXTREMAL_LIMIT {
        return Err(Error::GuardExceeded {
            what: "extremal family membership",
            n: g.n(),
            limit: EXTREMAL_LIMIT,
        });
    }
    if g.n() < 3 {
        return Ok(None);
    }
    let key = canonical_key(g)?;
    let catalog = extremal_catalog(g.n())?;
    Ok(catalog.iter().find(|(k, _)| *k == key).map(|&(_, c)| c))
}

fn is_p3(g: &Graph) -> Result<bool> {
    Ok(g.n() == 3 && is_isomorphic(g, &path(3)?)?)
}

/// Both directions of the extremal characterization on every connected
/// identifiable graph with `n ≥ 3` in `source`.
pub fn verify_characterization(source: &GraphStream) -> Result<Report> {
    let graphs = source.graphs()?;
    sweep(
        ClaimId::Thm24,
        format!("{source}; connected identifiable n>=3"),
        &graphs,
        false,
        |g| {
            if g.n() < 3 || !g.is_connected() || !g.is_identifiable() {
                return Ok(Check::Skip);
            }
            let Some(t) = value(g, CodeKind::TID)? else {
                return Ok(Check::Fail("no total dominating identifying code".into()));
            };
            let n = g.n();
            let p3 = is_p3(g)?;
            let member = is_extremal_member(g)?;
            let mut problems = Vec::new();
            if (t == n) != p3 {
                problems.push(format!("gamma_t={t}=n is {} but P_3 is {p3}", t == n));
            }
            if (t + 1 >= n) != member.is_some() {
                problems.push(format!(
                    "gamma_t={t}, n={n}, extremal membership {member:?}"
                ));
            }
            Ok(if problems.is_empty() {
                Check::Ok
            } else {
                Check::Fail(problems.join("; "))
            })
        },
    )
}

fn ensure_bound_claim(claim: ClaimId) -> Result<()> {
    match claim {
        ClaimId::Prop21
        | ClaimId::Lem31
        | ClaimId::Thm32
        | ClaimId::Cor33
        | ClaimId::Thm34
        | ClaimId::Cor35
        | ClaimId::Thm41
        | ClaimId::Thm42
        | ClaimId::Thm43
        | ClaimId::Thm44
        | ClaimId::LogLb => Ok(()),
        other => Err(Error::InvalidParameter(format!(
            "{other} is not a bound claim"
        ))),
    }
}

fn hypothesis(claim: ClaimId) -> &'static str {
    match claim {
        ClaimId::Prop21 => "connected identifiable n>=3",
        ClaimId::Lem31 => "trees n>=4, not P_4",
        ClaimId::Thm32 => "trees n>=3",
        ClaimId::Cor33 => "twin-free trees n>=3",
        ClaimId::Thm34 => "connected twin-free girth>=5 n>=3",
        ClaimId::Cor35 => "connected girth>=5 n>=3",
        ClaimId::Thm41 => "connected identifiable, gamma^ID>=3",
        ClaimId::Thm42 => "connected identifiable n>=3",
        ClaimId::Thm43 => "connected n>=3",
        ClaimId::Thm44 => "connected identifiable, gamma^L>=2",
        ClaimId::LogLb => "connected identifiable n>=3",
        _ => "",
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Check::Ok
    } else {
        Check::Fail(detail())
    }
}

/// `2^d ≥ x` without overflow.
fn pow2_at_least(d: usize, x: usize) -> bool {
    d >= usize::BITS as usize - 1 || (1usize << d) >= x
}

fn check_bound(claim: ClaimId, g: &Graph) -> Result<Check> {
    use CodeKind::*;
    let n = g.n();
    let connected = g.is_connected();
    let ell = g.leaves().len();
    let s = g.supports().len();
    let tid = |g: &Graph| value(g, TID);
    match claim {
        ClaimId::Prop21 | ClaimId::LogLb | ClaimId::Thm42 => {
            if n < 3 || !connected || !g.is_identifiable() {
                return Ok(Check::Skip);
            }
            let Some(t) = tid(g)? else {
                return Ok(Check::Skip);
            };
            Ok(match claim {
                ClaimId::Prop21 => {
                    let p3 = is_p3(g)?;
                    verdict(if p3 { t == 3 } else { t < n }, || {
                        format!("gamma_t={t}, n={n}")
                    })
                }
                ClaimId::LogLb => {
                    verdict(pow2_at_least(t, n + 1), || format!("gamma_t={t}, n={n}"))
                }
                _ => {
                    let Some(tl) = value(g, TLD)? else {
                        return Ok(Check::Skip);
                    };
                    verdict(tl <= t && t <= 2 * tl, || {
                        format!("gamma_t^L={tl}, gamma_t={t}")
                    })
                }
            })
        }
        ClaimId::Lem31 | ClaimId::Thm32 | ClaimId::Cor33 => {
            if !g.is_tree() || n < 3 {
                return Ok(Check::Skip);
            }
            match claim {
                ClaimId::Lem31 if n < 4 || (n == 4 && ell == 2) => return Ok(Check::Skip),
                ClaimId::Cor33 if !g.is_twin_free() => return Ok(Check::Skip),
                _ => {}
            }
            let Some(t) = tid(g)? else {
                return Ok(Check::Skip);
            };
            Ok(match claim {
                ClaimId::Lem31 => verdict(t + s <= n, || format!("gamma_t={t}, n={n}, s={s}")),
                ClaimId::Thm32 => verdict(5 * t <= 3 * (n + ell), || {
                    format!("gamma_t={t}, n={n}, l={ell}")
                }),
                _ => verdict(4 * t <= 3 * n, || format!("gamma_t={t}, n={n}")),
            })
        }
        ClaimId::Thm34 | ClaimId::Cor35 => {
            if n < 3 || !connected || !g.girth().at_least(5) {
                return Ok(Check::Skip);
            }
            if claim == ClaimId::Thm34 && !g.is_twin_free() {
                return Ok(Check::Skip);
            }
            let Some(t) = tid(g)? else {
                return Ok(Check::Skip);
            };
            Ok(if claim == ClaimId::Thm34 {
                verdict(4 * t <= 3 * n, || format!("gamma_t={t}, n={n}"))
            } else {
                verdict(4 * t + s <= 3 * n + ell, || {
                    format!("gamma_t={t}, n={n}, l={ell}, s={s}")
                })
            })
        }
        ClaimId::Thm41 => {
            if !connected || !g.is_identifiable() {
                return Ok(Check::Skip);
            }
            let Some(id) = value(g, ID)? else {
                return Ok(Check::Skip);
            };
            if id < 3 {
                return Ok(Check::Skip);
            }
            let Some(t) = tid(g)? else {
                return Ok(Check::Skip);
            };
            Ok(verdict(t + 2 <= 2 * id, || {
                format!("gamma_t={t}, gamma^ID={id}")
            }))
        }
        ClaimId::Thm43 => {
            if n < 3 || !connected {
                return Ok(Check::Skip);
            }
            let (Some(l), Some(tl)) = (value(g, LD)?, value(g, TLD)?) else {
                return Ok(Check::Skip);
            };
            Ok(verdict(l <= tl && tl < 2 * l, || {
                format!("gamma^L={l}, gamma_t^L={tl}")
            }))
        }
        ClaimId::Thm44 => {
            if !connected || !g.is_identifiable() {
                return Ok(Check::Skip);
            }
            let Some(l) = value(g, LD)? else {
                return Ok(Check::Skip);
            };
            if l < 2 {
                return Ok(Check::Skip);
            }
            let Some(t) = tid(g)? else {
                return Ok(Check::Skip);
            };
            // t ≤ 3l − log2(l + 1)  ⇔  d = 3l − t ≥ 0 and 2^d ≥ l + 1.
            let ok = 3 * l >= t && pow2_at_least(3 * l - t, l + 1);
            Ok(verdict(ok, || format!("gamma_t={t}, gamma^L={l}")))
        }
        _ => unreachable!("not a bound claim"),
    }
}

/// Checks one bound claim on every graph of `source` meeting its hypothesis.
pub fn verify_bound(claim: ClaimId, source: &GraphStream) -> Result<Report> {
    ensure_bound_claim(claim)?;
    let graphs = source.graphs()?;
    let scope = format!("{source}; {}", hypothesis(claim));
    sweep(claim, scope, &graphs, false, |g| check_bound(claim, g))
}

/// Closed-form parameter values of the constructed families. `max_param`
/// bounds the order for `prop-2.2` and the parameter `k` for the gadgets.
pub fn verify_family_values(claim: ClaimId, max_param: usize) -> Result<Report> {
    let start = Instant::now();
    type Check = Box<dyn Fn(&Graph) -> Result<Option<String>> + Sync>;
    let mut instances: Vec<(Graph, Check)> = Vec::new();
    let scope;
    match claim {
        ClaimId::Prop22 => {
            if max_param > ALL_OPTIMA_LIMIT {
                return Err(Error::GuardExceeded {
                    what: "prop-2.2 family sweep",
                    n: max_param,
                    limit: ALL_OPTIMA_LIMIT,
                });
            }
            scope = format!("calA* and calA* join K_1 members, n<={max_param}");
            for n in 2..=max_param {
                for universal in [false, true] {
                    for (p, g) in family_a_star_members(n, universal)? {
                        instances.push((
                            g,
                            Box::new(move |g: &Graph| {
                                let n = g.n();
                                let sep = value(g, CodeKind::SEP)?;
                                let tid = value(g, CodeKind::TID)?;
                                let mut bad = Vec::new();
                                if sep != Some(n - 1) {
                                    bad.push(format!("gamma_SEP={sep:?}"));
                                }
                                if tid != Some(n - 1) {
                                    bad.push(format!("gamma_t={tid:?}"));
                                }
                                if universal {
                                    let optima = all_minimum_codes(g, CodeKind::SEP)?;
                                    let expected = g.vertices().without(n - 1);
                                    if optima != [expected] {
                                        bad.push(format!(
                                            "{} minimum separating codes",
                                            optima.len()
                                        ));
                                    }
                                }
                                Ok((!bad.is_empty()).then(|| {
                                    format!(
                                        "partition {p:?}, universal={universal}: {}",
                                        bad.join(", ")
                                    )
                                }))
                            }),
                        ));
                    }
                }
            }
        }
        ClaimId::Prop45 => {
            scope = format!("ld_gap(k), 2<=k<={max_param}");
            for k in 2..=max_param {
                instances.push((
                    ld_gap(k)?,
                    Box::new(move |g: &Graph| {
                        expect_values(
                            g,
                            k,
                            &[
                                (CodeKind::LD, (1 << k) - 1),
                                (CodeKind::TID, 3 * (1 << k) - 2 * k - 3),
                            ],
                        )
                    }),
                ));
            }
        }
        ClaimId::Prop46 => {
            scope = format!("sid_gap(k), even 4<=k<={max_param}");
            for k in (4..=max_param).step_by(2) {
                instances.push((
                    sid_gap(k)?,
                    Box::new(move |g: &Graph| {
                        expect_values(g, k, &[(CodeKind::TID, k), (CodeKind::SID, (1 << k) - 2)])
                    }),
                ));
            }
        }
        ClaimId::Prop47 => {
            scope = format!("eid_gap(k), 4<=k<={max_param}");
            for k in 4..=max_param {
                instances.push((
                    eid_gap(k)?,
                    Box::new(move |g: &Graph| {
                        expect_values(g, k, &[(CodeKind::TID, k), (CodeKind::EID, (1 << k) - 1)])
                    }),
                ));
            }
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "{other} is not a family-value claim"
            )));
        }
    }
    let results: Vec<Option<String>> = instances
        .par_iter()
        .map(|(g, check)| check(g))
        .collect::<Result<_>>()?;
    let mut report = Report {
        claim: claim.as_str().to_owned(),
        scope,
        checked: instances.len(),
        skipped: 0,
        counterexamples: Vec::new(),
        matches: None,
        elapsed_ms: 0,
        verdict: Verdict::Pass,
    };
    for ((g, _), r) in instances.iter().zip(results) {
        if let Some(detail) = r {
            report.counterexamples.push(counterexample(g, detail));
        }
    }
    finish(report, start, false)
}

fn expect_values(g: &Graph, k: usize, expected: &[(CodeKind, usize)]) -> Result<Option<String>> {
    let mut bad = Vec::new();
    for &(kind, want) in expected {
        let got = value(g, kind)?;
        if got != Some(want) {
            bad.push(format!("{kind}: expected {want}, got {got:?}"));
        }
    }
    Ok((!bad.is_empty()).then(|| format!("k={k}: {}", bad.join(", "))))
}

/// Edges `X ⇒ Y` of the implication lattice: every code of type X is also
/// a code of type Y.
pub const LATTICE: [(CodeKind, CodeKind); 12] = [
    (CodeKind::FOURID, CodeKind::EID),
    (CodeKind::FOURID, CodeKind::SID),
    (CodeKind::EID, CodeKind::OLD),
    (CodeKind::OLD, CodeKind::TLD),
    (CodeKind::SID, CodeKind::TID),
    (CodeKind::TID, CodeKind::ID),
    (CodeKind::TID, CodeKind::TLD),
    (CodeKind::TLD, CodeKind::LD),
    (CodeKind::TLD, CodeKind::TD),
    (CodeKind::ID, CodeKind::LD),
    (CodeKind::LD, CodeKind::D),
    (CodeKind::TD, CodeKind::D),
];

pub const HIERARCHY_LIMIT: usize = 8;

/// All-subsets sweep of [`LATTICE`].
pub fn verify_hierarchy(source: &GraphStream) -> Result<Report> {
    verify_hierarchy_with(source, &LATTICE)
}

/// All-subsets sweep of arbitrary implication edges. An edge `X ⇒ Y` is
/// only tested on graphs that admit some code of type Y.
pub fn verify_hierarchy_with(
    source: &GraphStream,
    edges: &[(CodeKind, CodeKind)],
) -> Result<Report> {
    let graphs = source.graphs()?;
    if let Some(g) = graphs.iter().find(|g| g.n() > HIERARCHY_LIMIT) {
        return Err(Error::GuardExceeded {
            what: "all-subsets lattice sweep",
            n: g.n(),
            limit: HIERARCHY_LIMIT,
        });
    }
    let scope = format!("{source}; all subsets, {} implications", edges.len());
    sweep(ClaimId::Fig1, scope, &graphs, false, |g| {
        let n = g.n();
        let full = g.vertices();
        let live: Vec<(CodeKind, CodeKind)> = edges
            .iter()
            .copied()
            .filter(|&(_, y)| is_valid(g, y, &full))
            .collect();
        for mask in 0u128..1 << n {
            let code = VertexSet::from_bits(n, mask);
            for &(x, y) in &live {
                if is_valid(g, x, &code) && !is_valid(g, y, &code) {
                    return Ok(Check::Fail(format!("code {code} is {x} but not {y}")));
                }
            }
        }
        Ok(Check::Ok)
    })
}

/// Among twin-free trees of order `n ∈ {4, 8, ..} ≤ max_n`, those with
/// `γ_t^ID = 3n/4` are exactly the 3-coronas of trees on `n/4` vertices.
/// Tight trees are listed in `matches`.
pub fn verify_corona_tightness(max_n: usize) -> Result<Report> {
    if max_n > TREE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "corona tightness sweep",
            n: max_n,
            limit: TREE_LIMIT,
        });
    }
    let start = Instant::now();
    let mut report = Report {
        claim: ClaimId::Thm36.as_str().to_owned(),
        scope: format!("builtin trees n in {{4,8,..}}, n<={max_n}; twin-free"),
        checked: 0,
        skipped: 0,
        counterexamples: Vec::new(),
        matches: Some(Vec::new()),
        elapsed_ms: 0,
        verdict: Verdict::Pass,
    };
    for n in (4..=max_n).step_by(4) {
        let coronas: Vec<Graph> = enumerate_trees(n / 4)?
            .iter()
            .map(|h| corona(h, 3))
            .collect::<Result<_>>()?;
        let corona_keys: HashSet<CanonicalKey> =
            coronas.iter().map(canonical_key).collect::<Result<_>>()?;
        let trees = enumerate_trees(n)?;
        let results: Vec<Option<(bool, CanonicalKey)>> = trees
            .par_iter()
            .map(|t| {
                if !t.is_twin_free() {
                    return Ok(None);
                }
                let tight = value(t, CodeKind::TID)?.is_some_and(|g| 4 * g == 3 * n);
                Ok(Some((tight, canonical_key(t)?)))
            })
            .collect::<Result<_>>()?;
        let mut tight_keys = HashSet::new();
        for (t, r) in trees.iter().zip(results) {
            let Some((tight, key)) = r else {
                report.skipped += 1;
                continue;
            };
            report.checked += 1;
            let is_corona = corona_keys.contains(&key);
            if tight {
                tight_keys.insert(key);
                report
                    .matches
                    .as_mut()
                    .expect("matches present")
                    .push(counterexample(t, format!("n={n}, 3-corona={is_corona}")));
                if !is_corona {
                    report.counterexamples.push(counterexample(
                        t,
                        format!("n={n}: tight but not a 3-corona"),
                    ));
                }
            }
        }
        for c in &coronas {
            if !tight_keys.contains(&canonical_key(c)?) {
                report
                    .counterexamples
                    .push(counterexample(c, format!("n={n}: 3-corona is not tight")));
            }
        }
    }
    finish(report, start, false)
}

/// Lists connected twin-free graphs of girth at least 5 with
/// `γ_t^ID = 3n/4` (or, when `relaxed`, `γ_t^ID = ⌊3n/4⌋`). A graph above
/// the bound is reported as a counterexample.
pub fn search_girth5_tight(source: &GraphStream, relaxed: bool) -> Result<Report> {
    let graphs = source.graphs()?;
    let rule = if relaxed {
        "gamma_t=floor(3n/4)"
    } else {
        "gamma_t=3n/4"
    };
    let scope = format!("{source}; connected twin-free girth>=5 n>=3; {rule}");
    sweep(ClaimId::Girth5Search, scope, &graphs, true, |g| {
        let n = g.n();
        if n < 3 || !g.is_connected() || !g.is_twin_free() || !g.girth().at_least(5) {
            return Ok(Check::Skip);
        }
        let Some(t) = value(g, CodeKind::TID)? else {
            return Ok(Check::Skip);
        };
        if 4 * t > 3 * n {
            return Ok(Check::Fail(format!("gamma_t={t} exceeds 3n/4 for n={n}")));
        }
        let hit = if relaxed {
            t == 3 * n / 4
        } else {
            4 * t == 3 * n
        };
        if !hit {
            return Ok(Check::Ok);
        }
        let tree = g.is_tree();
        Ok(Check::Match(format!(
            "n={n}, gamma_t={t}, tree={tree}, girth={}",
            g.girth()
        )))
    })
}

/// Runs `claim` with its default scope. `max_n` overrides the largest order
/// (or gadget parameter); `source` replaces the builtin stream for the
/// stream-driven claims.
pub fn run_claim(
    claim: ClaimId,
    max_n: Option<usize>,
    source: Option<GraphStream>,
) -> Result<Report> {
    let stream = |default_max: usize, trees: bool| -> GraphStream {
        match &source {
            Some(s) => match max_n {
                Some(m) => s.clone().max_n(m),
                None => s.clone(),
            },
            None => {
                let top = max_n.unwrap_or(default_max);
                if trees {
                    GraphStream::trees(1..=top)
                } else {
                    GraphStream::connected(1..=top)
                }
            }
        }
    };
    let no_source = |claim: ClaimId| -> Result<()> {
        if source.is_some() {
            return Err(Error::InvalidParameter(format!(
                "{claim} does not take a graph source"
            )));
        }
        Ok(())
    };
    match claim {
        ClaimId::Thm24 => verify_characterization(&stream(7, false)),
        ClaimId::Prop21
        | ClaimId::Thm41
        | ClaimId::Thm42
        | ClaimId::Thm43
        | ClaimId::Thm44
        | ClaimId::LogLb => verify_bound(claim, &stream(6, false)),
        ClaimId::Lem31 | ClaimId::Thm32 | ClaimId::Cor33 => verify_bound(claim, &stream(10, true)),
        ClaimId::Thm34 => verify_bound(claim, &stream(7, false).min_girth(5).twin_free()),
        ClaimId::Cor35 => verify_bound(claim, &stream(7, false).min_girth(5)),
        ClaimId::Fig1 => verify_hierarchy(&stream(5, false)),
        ClaimId::Girth5Search => {
            search_girth5_tight(&stream(8, false).min_girth(5).twin_free(), false)
        }
        ClaimId::Thm36 => {
            no_source(claim)?;
            verify_corona_tightness(max_n.unwrap_or(12))
        }
        ClaimId::Prop22 => {
            no_source(claim)?;
            verify_family_values(claim, max_n.unwrap_or(12))
        }
        ClaimId::Prop45 => {
            no_source(claim)?;
            verify_family_values(claim, max_n.unwrap_or(3))
        }
        ClaimId::Prop46 | ClaimId::Prop47 => {
            no_source(claim)?;
            verify_family_values(claim, max_n.unwrap_or(4))
        }
    }
}
