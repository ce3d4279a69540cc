//! Exact minimum codes.
//!
//! Reducible kinds are solved by branch-and-bound over their
//! [`ConstraintSystem`]. Each node propagates forced vertices (a constraint
//! whose undecided support exactly matches its residual threshold) to a
//! fixpoint, bounds with a greedy packing of disjoint residual supports, and
//! branches on the unsatisfied constraint with the least slack: the i-th
//! branch includes the i-th undecided support vertex and excludes the ones
//! before it. FOURID is solved by increasing-size subset search against the
//! predicate. [`minimum_code_oracle`] is an independent brute force over the
//! predicates in [`crate::codes`].

use crate::codes::{for_each_subset_up_to, is_valid, CodeKind};
use crate::constraints::{build_constraints, ConstraintSystem, Infeasibility};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Order limit for the predicate-driven FOURID search.
pub const FOURID_LIMIT: usize = 12;
/// Order limit for [`minimum_code_oracle`].
pub const ORACLE_LIMIT: usize = 20;
/// Order limit for [`all_minimum_codes`].
pub const ALL_OPTIMA_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal(VertexSet),
    Infeasible(Infeasibility),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: CodeKind,
    pub outcome: Outcome,
    pub nodes_explored: u64,
}

impl SolveResult {
    pub fn size(&self) -> Option<usize> {
        self.witness().map(|w| w.len())
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match &self.outcome {
            Outcome::Optimal(w) => Some(w),
            Outcome::Infeasible(_) => None,
        }
    }

    pub fn infeasibility(&self) -> Option<&Infeasibility> {
        match &self.outcome {
            Outcome::Optimal(_) => None,
            Outcome::Infeasible(r) => Some(r),
        }
    }
}

/// `ceil(log2(n + 1))`: any code that separates and covers all `n` vertices
/// needs this many codewords.
pub fn log_floor(n: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < n + 1 {
        k += 1;
    }
    k
}

fn global_floor(kind: CodeKind, n: usize) -> usize {
    match kind {
        CodeKind::ID | CodeKind::TID | CodeKind::EID => log_floor(n),
        CodeKind::SID if n >= 2 => log_floor(n),
        _ => 0,
    }
}

pub fn minimum_code(g: &Graph, kind: CodeKind) -> Result<SolveResult> {
    if kind == CodeKind::FOURID {
        return minimum_fourid(g);
    }
    let sys = build_constraints(g, kind);
    if let Some(reason) = sys.infeasible.clone() {
        return Ok(SolveResult {
            kind,
            outcome: Outcome::Infeasible(reason),
            nodes_explored: 0,
        });
    }
    let mut search = Search::new(&sys, Mode::Optimize, global_floor(kind, g.n()));
    search.run();
    let best = search
        .best
        .expect("the full vertex set satisfies a feasible system");
    debug_assert!(is_valid(g, kind, &best));
    Ok(SolveResult {
        kind,
        outcome: Outcome::Optimal(best),
        nodes_explored: search.nodes,
    })
}

/// The optimum size, or `None` when the graph admits no code of this kind.
pub fn parameter(g: &Graph, kind: CodeKind) -> Result<Option<usize>> {
    Ok(minimum_code(g, kind)?.size())
}

/// Brute force: subsets in increasing size, first valid one wins.
pub fn minimum_code_oracle(g: &Graph, kind: CodeKind) -> Result<SolveResult> {
    let n = g.n();
    if n > ORACLE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "exhaustive oracle",
            n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut nodes = 0u64;
    let mut found = None;
    for_each_subset_up_to(n, n, |members| {
        nodes += 1;
        let c = VertexSet::from_vertices(n, members.iter().copied());
        if is_valid(g, kind, &c) {
            found = Some(c);
            false
        } else {
            true
        }
    });
    let outcome = match found {
        Some(c) => Outcome::Optimal(c),
        None => Outcome::Infeasible(oracle_reason(g, kind)),
    };
    Ok(SolveResult {
        kind,
        outcome,
        nodes_explored: nodes,
    })
}

fn oracle_reason(g: &Graph, kind: CodeKind) -> Infeasibility {
    if matches!(kind, CodeKind::SEP | CodeKind::ID | CodeKind::TID) {
        if let Some(&(u, v)) = g.closed_twin_pairs().first() {
            return Infeasibility::ClosedTwins(u, v);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        if !matches!(kind, CodeKind::D | CodeKind::LD) {
            return Infeasibility::IsolatedVertex(v);
        }
    }
    Infeasibility::NoValidCode
}

/// Every minimum code, sorted by their ascending member lists.
pub fn all_minimum_codes(g: &Graph, kind: CodeKind) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > ALL_OPTIMA_LIMIT {
        return Err(Error::GuardExceeded {
            what: "all_minimum_codes",
            n,
            limit: ALL_OPTIMA_LIMIT,
        });
    }
    let Some(target) = minimum_code(g, kind)?.size() else {
        return Ok(Vec::new());
    };
    let mut codes = if kind.is_reducible() {
        let sys = build_constraints(g, kind);
        let mut search = Search::new(&sys, Mode::Enumerate(target), global_floor(kind, n));
        search.run();
        search.found
    } else {
        let mut codes = Vec::new();
        for_each_size(n, target, |c| {
            if is_valid(g, kind, &c) {
                codes.push(c);
            }
            true
        });
        codes
    };
    codes.sort_by_key(|c| c.to_vec());
    Ok(codes)
}

/// Visits every `size`-subset of `0..n` in lexicographic order.
fn for_each_size(n: usize, size: usize, mut visit: impl FnMut(VertexSet) -> bool) {
    fn rec(
        n: usize,
        size: usize,
        start: usize,
        cur: VertexSet,
        visit: &mut impl FnMut(VertexSet) -> bool,
    ) -> bool {
        if cur.len() == size {
            return visit(cur);
        }
        let remaining = size - cur.len();
        for v in start..=n - remaining {
            if !rec(n, size, v + 1, cur.with(v), visit) {
                return false;
            }
        }
        true
    }
    if size <= n {
        rec(n, size, 0, VertexSet::empty(n), &mut visit);
    }
}

fn minimum_fourid(g: &Graph) -> Result<SolveResult> {
    let n = g.n();
    if n > FOURID_LIMIT {
        return Err(Error::GuardExceeded {
            what: "FOURID search",
            n,
            limit: FOURID_LIMIT,
        });
    }
    let kind = CodeKind::FOURID;
    if !is_valid(g, kind, &g.vertices()) {
        return Ok(SolveResult {
            kind,
            outcome: Outcome::Infeasible(Infeasibility::NoValidCode),
            nodes_explored: 1,
        });
    }
    // Any FOURID code is self-identifying, hence total dominating and
    // identifying whenever the graph has no isolated vertex.
    let seed_kind = if g.min_degree().unwrap_or(0) >= 1 {
        CodeKind::TID
    } else {
        CodeKind::ID
    };
    let start = minimum_code(g, seed_kind)?.size().unwrap_or(0);
    let mut nodes = 0u64;
    for size in start..=n {
        let mut found = None;
        for_each_size(n, size, |c| {
            nodes += 1;
            if is_valid(g, kind, &c) {
                found = Some(c);
                false
            } else {
                true
            }
        });
        if let Some(c) = found {
            return Ok(SolveResult {
                kind,
                outcome: Outcome::Optimal(c),
                nodes_explored: nodes,
            });
        }
    }
    unreachable!("the full vertex set was checked to be valid")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Optimize,
    /// Collect every solution of exactly this size.
    Enumerate(usize),
}

struct Search<'a> {
    sys: &'a ConstraintSystem,
    mode: Mode,
    floor: usize,
    best: Option<VertexSet>,
    bound: usize,
    found: Vec<VertexSet>,
    nodes: u64,
}

/// A constraint that still needs `residual` more codewords from `open`.
struct Pending {
    index: usize,
    open: VertexSet,
    residual: usize,
}

impl<'a> Search<'a> {
    fn new(sys: &'a ConstraintSystem, mode: Mode, floor: usize) -> Self {
        let full = VertexSet::full(sys.n);
        let (best, bound) = match mode {
            Mode::Optimize => (Some(full), sys.n),
            Mode::Enumerate(target) => (None, target),
        };
        Search {
            sys,
            mode,
            floor,
            best,
            bound,
            found: Vec::new(),
            nodes: 0,
        }
    }

    fn run(&mut self) {
        let n = self.sys.n;
        self.branch(VertexSet::empty(n), VertexSet::empty(n));
    }

    /// Forces vertices to a fixpoint. Returns the pending constraints, or
    /// `None` when some constraint can no longer be met.
    fn propagate(&self, inc: &mut VertexSet, exc: &VertexSet) -> Option<Vec<Pending>> {
        loop {
            let mut changed = false;
            let mut pending = Vec::new();
            for (index, c) in self.sys.constraints.iter().enumerate() {
                let have = (c.support & *inc).len();
                if have >= c.threshold {
                    continue;
                }
                let residual = c.threshold - have;
                let open = c.support - *inc - *exc;
                match open.len().cmp(&residual) {
                    std::cmp::Ordering::Less => return None,
                    std::cmp::Ordering::Equal => {
                        *inc = *inc | open;
                        changed = true;
                    }
                    std::cmp::Ordering::Greater => pending.push(Pending {
                        index,
                        open,
                        residual,
                    }),
                }
            }
            if !changed {
                return Some(pending);
            }
        }
    }

    /// Sum of residual thresholds over a greedy family of pairwise-disjoint
    /// open supports, smallest supports first.
    fn packing_bound(pending: &[Pending]) -> usize {
        let mut order: Vec<&Pending> = pending.iter().collect();
        order.sort_by_key(|p| (p.open.len(), p.index));
        let mut used = VertexSet::empty(pending.first().map_or(0, |p| p.open.width()));
        let mut total = 0;
        for p in order {
            if p.open.is_disjoint(&used) {
                used = used | p.open;
                total += p.residual;
            }
        }
        total
    }

    fn branch(&mut self, mut inc: VertexSet, exc: VertexSet) {
        self.nodes += 1;
        let Some(pending) = self.propagate(&mut inc, &exc) else {
            return;
        };
        let lower = (inc.len() + Self::packing_bound(&pending)).max(self.floor);
        match self.mode {
            Mode::Optimize if lower >= self.bound => return,
            Mode::Enumerate(target) if lower > target => return,
            _ => {}
        }
        if pending.is_empty() {
            match self.mode {
                Mode::Optimize => {
                    self.bound = inc.len();
                    self.best = Some(inc);
                }
                Mode::Enumerate(target) => {
                    if inc.len() == target {
                        self.found.push(inc);
                    }
                }
            }
            return;
        }
        let pick = pending
            .iter()
            .min_by_key(|p| (p.open.len() - p.residual, p.index))
            .expect("pending is non-empty");
        let mut excluded = exc;
        for v in pick.open {
            self.branch(inc.with(v), excluded);
            excluded.insert(v);
            if self.mode == Mode::Optimize && self.bound <= self.floor.max(inc.len()) {
                return;
            }
        }
    }
}
