//! Encoding of code kinds as multi-cover hitting-set systems.
//!
//! A code `C` satisfies a constraint `(S, b)` when `|C ∩ S| ≥ b`. Every kind
//! except [`CodeKind::FOURID`] is exactly the conjunction of such constraints:
//!
//! | kind | constraints |
//! |------|-------------|
//! | D    | `(N[v], 1)` for every `v` |
//! | TD   | `(N(v), 1)` for every `v` |
//! | SEP  | `(N[u] △ N[v], 1)` for every `u < v` |
//! | ID   | D ∪ SEP |
//! | TID  | TD ∪ SEP |
//! | LD   | D ∪ `(N(u) △ N(v) ∪ {u, v}, 1)` for every `u < v` |
//! | TLD  | TD ∪ the LD pair constraints |
//! | OLD  | TD ∪ `(N(u) △ N(v), 1)` for every `u < v` |
//! | SID  | `(N[u] \ N[v], 1)` for every ordered `u ≠ v` |
//! | EID  | `(N[v], 3)` for every `v` ∪ `(N[u] △ N[v], 3)` for every `u < v` |

use std::fmt;

use crate::codes::CodeKind;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Which definitional requirement a constraint encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    Vertex(usize),
    Pair(usize, usize),
    Ordered(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub support: VertexSet,
    pub threshold: usize,
    pub origin: Origin,
}

impl Constraint {
    pub fn is_satisfied_by(&self, code: &VertexSet) -> bool {
        (self.support & *code).len() >= self.threshold
    }
}

/// Why a graph admits no code of a given kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Infeasibility {
    ClosedTwins(usize, usize),
    IsolatedVertex(usize),
    /// A constraint demands more vertices than its support holds.
    ShortSupport {
        origin: Origin,
        needed: usize,
        available: usize,
    },
    /// Not even the whole vertex set is a valid code (used for FOURID).
    NoValidCode,
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasibility::ClosedTwins(u, v) => write!(f, "vertices {u} and {v} are closed twins"),
            Infeasibility::IsolatedVertex(v) => write!(f, "vertex {v} is isolated"),
            Infeasibility::ShortSupport {
                origin,
                needed,
                available,
            } => {
                let what = match origin {
                    Origin::Vertex(v) => format!("vertex {v}"),
                    Origin::Pair(u, v) => format!("pair ({u}, {v})"),
                    Origin::Ordered(u, v) => format!("ordered pair ({u}, {v})"),
                };
                write!(
                    f,
                    "{what} needs {needed} codewords but only {available} can help"
                )
            }
            Infeasibility::NoValidCode => write!(f, "the full vertex set is not a valid code"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pub n: usize,
    pub kind: CodeKind,
    pub constraints: Vec<Constraint>,
    /// False exactly for FOURID, which has no constraint encoding.
    pub reducible: bool,
    pub infeasible: Option<Infeasibility>,
}

impl ConstraintSystem {
    /// Whether `code` meets every constraint. Always false for infeasible
    /// systems; meaningless (false) for non-reducible kinds.
    pub fn is_satisfied_by(&self, code: &VertexSet) -> bool {
        self.reducible
            && self.infeasible.is_none()
            && self.constraints.iter().all(|c| c.is_satisfied_by(code))
    }
}

pub fn build_constraints(g: &Graph, kind: CodeKind) -> ConstraintSystem {
    let n = g.n();
    let mut raw: Vec<Constraint> = Vec::new();
    let vertex = |raw: &mut Vec<Constraint>, support: VertexSet, threshold: usize, v: usize| {
        raw.push(Constraint {
            support,
            threshold,
            origin: Origin::Vertex(v),
        })
    };
    let pairs = || (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)));
    let pair = |u: usize, v: usize, support: VertexSet, threshold: usize| Constraint {
        support,
        threshold,
        origin: Origin::Pair(u, v),
    };

    let dominate = |raw: &mut Vec<Constraint>| {
        for v in 0..n {
            vertex(raw, g.closed(v), 1, v);
        }
    };
    let total = |raw: &mut Vec<Constraint>| {
        for v in 0..n {
            vertex(raw, g.open(v), 1, v);
        }
    };
    let separate = |raw: &mut Vec<Constraint>| {
        raw.extend(pairs().map(|(u, v)| pair(u, v, g.closed(u) ^ g.closed(v), 1)));
    };
    let locate = |raw: &mut Vec<Constraint>| {
        raw.extend(pairs().map(|(u, v)| pair(u, v, (g.open(u) ^ g.open(v)).with(u).with(v), 1)));
    };

    match kind {
        CodeKind::D => dominate(&mut raw),
        CodeKind::TD => total(&mut raw),
        CodeKind::SEP => separate(&mut raw),
        CodeKind::ID => {
            dominate(&mut raw);
            separate(&mut raw);
        }
        CodeKind::TID => {
            total(&mut raw);
            separate(&mut raw);
        }
        CodeKind::LD => {
            dominate(&mut raw);
            locate(&mut raw);
        }
        CodeKind::TLD => {
            total(&mut raw);
            locate(&mut raw);
        }
        CodeKind::OLD => {
            total(&mut raw);
            raw.extend(pairs().map(|(u, v)| pair(u, v, g.open(u) ^ g.open(v), 1)));
        }
        CodeKind::SID => {
            for (u, v) in pairs() {
                for (a, b) in [(u, v), (v, u)] {
                    raw.push(Constraint {
                        support: g.closed(a) - g.closed(b),
                        threshold: 1,
                        origin: Origin::Ordered(a, b),
                    });
                }
            }
        }
        CodeKind::EID => {
            for v in 0..n {
                vertex(&mut raw, g.closed(v), 3, v);
            }
            raw.extend(pairs().map(|(u, v)| pair(u, v, g.closed(u) ^ g.closed(v), 3)));
        }
        CodeKind::FOURID => {
            return ConstraintSystem {
                n,
                kind,
                constraints: Vec::new(),
                reducible: false,
                infeasible: None,
            };
        }
    }

    let infeasible = raw
        .iter()
        .find(|c| c.support.len() < c.threshold)
        .map(|c| describe_infeasibility(kind, c));

    ConstraintSystem {
        n,
        kind,
        constraints: if infeasible.is_some() {
            raw
        } else {
            normalize(raw)
        },
        reducible: true,
        infeasible,
    }
}

fn describe_infeasibility(kind: CodeKind, c: &Constraint) -> Infeasibility {
    match (c.origin, c.support.is_empty(), kind) {
        (Origin::Pair(u, v), true, CodeKind::SEP | CodeKind::ID | CodeKind::TID) => {
            Infeasibility::ClosedTwins(u, v)
        }
        (Origin::Vertex(v), true, _) => Infeasibility::IsolatedVertex(v),
        (origin, _, _) => Infeasibility::ShortSupport {
            origin,
            needed: c.threshold,
            available: c.support.len(),
        },
    }
}

/// Removes duplicates and dominated constraints. `(S, b)` is dominated by
/// `(S', b')` when `S' ⊆ S` and `b' ≥ b`; among identical constraints the
/// first one is kept.
fn normalize(raw: Vec<Constraint>) -> Vec<Constraint> {
    let mut kept: Vec<Constraint> = Vec::with_capacity(raw.len());
    'outer: for (i, c) in raw.iter().enumerate() {
        for (j, d) in raw.iter().enumerate() {
            if i == j {
                continue;
            }
            let identical = d.support == c.support && d.threshold == c.threshold;
            let dominates = d.support.is_subset(&c.support) && d.threshold >= c.threshold;
            if dominates && (!identical || j < i) {
                continue 'outer;
            }
        }
        kept.push(*c);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn p3_tid_reduces_to_unit_constraints() {
        let sys = build_constraints(&path(3), CodeKind::TID);
        assert!(sys.infeasible.is_none());
        let mut supports: Vec<Vec<usize>> =
            sys.constraints.iter().map(|c| c.support.to_vec()).collect();
        supports.sort();
        assert_eq!(supports, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn closed_twins_make_sep_infeasible() {
        let sys = build_constraints(&path(2), CodeKind::SEP);
        assert_eq!(sys.infeasible, Some(Infeasibility::ClosedTwins(0, 1)));
        assert!(!sys.is_satisfied_by(&VertexSet::full(2)));
    }

    #[test]
    fn isolated_vertex_makes_td_infeasible() {
        let sys = build_constraints(&Graph::empty(1).unwrap(), CodeKind::TD);
        assert_eq!(sys.infeasible, Some(Infeasibility::IsolatedVertex(0)));
    }

    #[test]
    fn eid_reports_short_support() {
        let sys = build_constraints(&path(4), CodeKind::EID);
        assert_eq!(
            sys.infeasible,
            Some(Infeasibility::ShortSupport {
                origin: Origin::Vertex(0),
                needed: 3,
                available: 2
            })
        );
    }

    #[test]
    fn fourid_is_not_reducible() {
        let sys = build_constraints(&path(4), CodeKind::FOURID);
        assert!(!sys.reducible);
        assert!(sys.constraints.is_empty());
    }

    #[test]
    fn normalized_systems_have_no_dominated_constraints() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        for kind in CodeKind::ALL.into_iter().filter(|k| k.is_reducible()) {
            let sys = build_constraints(&g, kind);
            if sys.infeasible.is_some() {
                continue;
            }
            for (i, a) in sys.constraints.iter().enumerate() {
                assert!(a.threshold >= 1 && a.threshold <= a.support.len());
                for (j, b) in sys.constraints.iter().enumerate() {
                    if i != j {
                        assert!(
                            !(b.support.is_subset(&a.support) && b.threshold >= a.threshold),
                            "{kind}: {b:?} dominates {a:?}"
                        );
                    }
                }
            }
        }
    }
}
