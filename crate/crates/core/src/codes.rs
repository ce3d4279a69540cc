//! Validity predicates for the eleven identification-type code variants.
//!
//! All predicates work on the I-set `I(v) = N[v] ∩ C` of each vertex. Scans
//! are deterministic: per-vertex conditions are checked first in increasing
//! vertex order, then pairs `(u, v)` with `u < v` in lexicographic order.
//! Ordered-pair conditions check `(u, v)` before `(v, u)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CodeKind {
    /// Dominating set.
    D,
    /// Total dominating set.
    TD,
    /// Separating code: pairwise distinct I-sets.
    SEP,
    /// Identifying code.
    ID,
    /// Total dominating identifying code.
    TID,
    /// Locating-dominating set.
    LD,
    /// Locating-total dominating set.
    TLD,
    /// Open locating-dominating set.
    OLD,
    /// Self-identifying code.
    SID,
    /// Error-correcting identifying code.
    EID,
    /// (1,≤4)-identifying code.
    FOURID,
}

impl CodeKind {
    pub const ALL: [CodeKind; 11] = [
        CodeKind::D,
        CodeKind::TD,
        CodeKind::SEP,
        CodeKind::ID,
        CodeKind::TID,
        CodeKind::LD,
        CodeKind::TLD,
        CodeKind::OLD,
        CodeKind::SID,
        CodeKind::EID,
        CodeKind::FOURID,
    ];

    /// Short lowercase name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            CodeKind::D => "d",
            CodeKind::TD => "td",
            CodeKind::SEP => "sep",
            CodeKind::ID => "id",
            CodeKind::TID => "tid",
            CodeKind::LD => "ld",
            CodeKind::TLD => "tld",
            CodeKind::OLD => "old",
            CodeKind::SID => "sid",
            CodeKind::EID => "eid",
            CodeKind::FOURID => "4id",
        }
    }

    /// Whether the kind can be written as a multi-cover hitting-set system.
    pub fn is_reducible(self) -> bool {
        self != CodeKind::FOURID
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        CodeKind::ALL
            .into_iter()
            .find(|k| k.name() == lower || (lower == "fourid" && *k == CodeKind::FOURID))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown code kind '{s}'")))
    }
}

/// First failed requirement found by [`violation_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `I(v)` is empty.
    Uncovered(usize),
    /// `N(v) ∩ C` is empty.
    Undominated(usize),
    /// `I(u) = I(v)`.
    Colliding(usize, usize),
    /// `N(u) ∩ C = N(v) ∩ C`.
    OpenColliding(usize, usize),
    /// `I(u) ⊆ I(v)` for the ordered pair `(u, v)`.
    Subsumed(usize, usize),
    /// `|I(v)| < 3`.
    SmallISet { vertex: usize, size: usize },
    /// `|I(u) △ I(v)| < 3`.
    SmallDifference { u: usize, v: usize, size: usize },
    /// Two distinct vertex sets of size at most 4 with equal I-sets.
    SubsetCollision { first: VertexSet, second: VertexSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered(v) => write!(f, "vertex {v} is not covered"),
            Violation::Undominated(v) => write!(f, "vertex {v} has no neighbour in the code"),
            Violation::Colliding(u, v) => write!(f, "vertices {u} and {v} have equal I-sets"),
            Violation::OpenColliding(u, v) => {
                write!(f, "vertices {u} and {v} have equal open I-sets")
            }
            Violation::Subsumed(u, v) => {
                write!(f, "I-set of vertex {u} is contained in I-set of vertex {v}")
            }
            Violation::SmallISet { vertex, size } => {
                write!(f, "vertex {vertex} has I-set of size {size} < 3")
            }
            Violation::SmallDifference { u, v, size } => write!(
                f,
                "vertices {u} and {v} have I-set symmetric difference of size {size} < 3"
            ),
            Violation::SubsetCollision { first, second } => {
                write!(f, "vertex sets {first} and {second} have equal I-sets")
            }
        }
    }
}

/// `I(v) = N[v] ∩ C`.
pub fn iset(g: &Graph, code: &VertexSet, v: usize) -> Result<VertexSet> {
    let (_, closed) = g.neighborhoods(v)?;
    Ok(closed & *code)
}

/// `I(X)`: union of the I-sets of the members of `x`.
pub fn iset_of_set(g: &Graph, code: &VertexSet, x: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in x {
        out = out | (g.closed(v) & *code);
    }
    out
}

pub fn is_valid(g: &Graph, kind: CodeKind, code: &VertexSet) -> bool {
    violation_witness(g, kind, code).is_none()
}

pub fn violation_witness(g: &Graph, kind: CodeKind, code: &VertexSet) -> Option<Violation> {
    let n = g.n();
    let c = *code;
    let closed_i: Vec<VertexSet> = (0..n).map(|v| g.closed(v) & c).collect();
    let open_i = |v: usize| g.open(v) & c;

    let uncovered = || {
        (0..n)
            .find(|&v| closed_i[v].is_empty())
            .map(Violation::Uncovered)
    };
    let undominated = || {
        (0..n)
            .find(|&v| open_i(v).is_empty())
            .map(Violation::Undominated)
    };
    let pairs = || (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)));
    let colliding = |filter: &dyn Fn(usize, usize) -> bool| {
        pairs()
            .find(|&(u, v)| filter(u, v) && closed_i[u] == closed_i[v])
            .map(|(u, v)| Violation::Colliding(u, v))
    };
    let any_pair = |_: usize, _: usize| true;
    let non_codewords = |u: usize, v: usize| !c.contains(u) && !c.contains(v);

    match kind {
        CodeKind::D => uncovered(),
        CodeKind::TD => undominated(),
        CodeKind::SEP => colliding(&any_pair),
        CodeKind::ID => uncovered().or_else(|| colliding(&any_pair)),
        CodeKind::TID => undominated().or_else(|| colliding(&any_pair)),
        CodeKind::LD => uncovered().or_else(|| colliding(&non_codewords)),
        CodeKind::TLD => undominated().or_else(|| colliding(&non_codewords)),
        CodeKind::OLD => undominated().or_else(|| {
            pairs()
                .find(|&(u, v)| open_i(u) == open_i(v))
                .map(|(u, v)| Violation::OpenColliding(u, v))
        }),
        CodeKind::SID => pairs()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .find(|&(u, v)| closed_i[u].is_subset(&closed_i[v]))
            .map(|(u, v)| Violation::Subsumed(u, v)),
        CodeKind::EID => (0..n)
            .find(|&v| closed_i[v].len() < 3)
            .map(|v| Violation::SmallISet {
                vertex: v,
                size: closed_i[v].len(),
            })
            .or_else(|| {
                pairs()
                    .map(|(u, v)| (u, v, (closed_i[u] ^ closed_i[v]).len()))
                    .find(|&(_, _, size)| size < 3)
                    .map(|(u, v, size)| Violation::SmallDifference { u, v, size })
            }),
        CodeKind::FOURID => subset_collision(g, &c, 4),
    }
}

/// Finds two distinct vertex sets of size at most `max_size` with equal
/// I-sets. Sets are visited by size, then in lexicographic order of their
/// sorted members; the reported pair is (earlier set, first set colliding
/// with it).
fn subset_collision(g: &Graph, code: &VertexSet, max_size: usize) -> Option<Violation> {
    let n = g.n();
    let closed_i: Vec<VertexSet> = (0..n).map(|v| g.closed(v) & *code).collect();
    let mut seen: HashMap<u128, VertexSet> = HashMap::new();
    let mut found = None;
    for_each_subset_up_to(n, max_size, |members| {
        let x = VertexSet::from_vertices(n, members.iter().copied());
        let image = members
            .iter()
            .fold(VertexSet::empty(n), |acc, &v| acc | closed_i[v]);
        match seen.get(&image.bits()) {
            Some(&first) => {
                found = Some(Violation::SubsetCollision { first, second: x });
                false
            }
            None => {
                seen.insert(image.bits(), x);
                true
            }
        }
    });
    found
}

/// Calls `visit` on every subset of `0..n` with at most `max_size` members,
/// ordered by size and then lexicographically. Stops when `visit` returns false.
pub(crate) fn for_each_subset_up_to(
    n: usize,
    max_size: usize,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    let mut stack = Vec::with_capacity(max_size);
    for size in 0..=max_size.min(n) {
        if !combinations(n, size, 0, &mut stack, &mut visit) {
            return;
        }
    }
}

fn combinations(
    n: usize,
    size: usize,
    start: usize,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if stack.len() == size {
        return visit(stack);
    }
    let remaining = size - stack.len();
    for v in start..=n - remaining {
        stack.push(v);
        let keep_going = combinations(n, size, v + 1, stack, visit);
        stack.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn a3() -> Graph {
        let mut edges = vec![];
        for i in 0..6usize {
            for j in i + 1..6 {
                if j - i <= 2 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(6, &edges).unwrap()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn kind_names_round_trip() {
        for k in CodeKind::ALL {
            assert_eq!(k.name().parse::<CodeKind>().unwrap(), k);
        }
        assert!("xid".parse::<CodeKind>().is_err());
    }

    #[test]
    fn iset_examples() {
        let p3 = path(3);
        assert_eq!(iset(&p3, &set(3, &[1]), 0).unwrap().to_vec(), vec![1]);
        assert!(iset(&p3, &VertexSet::empty(3), 2).unwrap().is_empty());
        assert!(iset(&p3, &set(3, &[1]), 3).is_err());
        // A_3 with x_2..x_6 as codewords: I(x_1) = {x_2, x_3}.
        assert_eq!(
            iset(&a3(), &set(6, &[1, 2, 3, 4, 5]), 0).unwrap().to_vec(),
            vec![1, 2]
        );
    }

    #[test]
    fn iset_of_set_examples() {
        let p4 = path(4);
        let c = set(4, &[1, 2]);
        assert_eq!(iset_of_set(&p4, &c, &set(4, &[0, 3])).to_vec(), vec![1, 2]);
        assert_eq!(
            iset_of_set(&p4, &c, &set(4, &[2])),
            iset(&p4, &c, 2).unwrap()
        );
        assert!(iset_of_set(&p4, &c, &VertexSet::empty(4)).is_empty());
        assert_eq!(
            iset_of_set(&p4, &p4.vertices(), &p4.vertices()),
            p4.vertices()
        );
    }

    #[test]
    fn validity_examples() {
        let c6 = cycle(6);
        assert!(is_valid(&c6, CodeKind::TID, &set(6, &[0, 1, 2, 3])));
        assert_eq!(
            violation_witness(&c6, CodeKind::TID, &set(6, &[0, 1, 2, 3])),
            None
        );
        // Adjacent codewords 0 and 1 see the same closed neighbourhood trace.
        assert_eq!(
            violation_witness(&c6, CodeKind::TID, &set(6, &[0, 1, 3, 4])),
            Some(Violation::Colliding(0, 1))
        );

        let p3 = path(3);
        assert_eq!(
            violation_witness(&p3, CodeKind::TID, &set(3, &[0, 1])),
            Some(Violation::Colliding(0, 1))
        );
        for n in 1..6 {
            let g = path(n);
            assert!(is_valid(&g, CodeKind::D, &g.vertices()));
            assert_eq!(
                violation_witness(&g, CodeKind::TD, &VertexSet::empty(n)),
                Some(Violation::Undominated(0))
            );
        }
    }

    #[test]
    fn eid_checks_vertex_condition_first() {
        let k4 = Graph::empty(4).unwrap().complement();
        assert_eq!(
            violation_witness(&k4, CodeKind::EID, &set(4, &[0, 1])),
            Some(Violation::SmallISet { vertex: 0, size: 2 })
        );
        // All I-sets equal V: vertex condition holds, pairs fail.
        assert_eq!(
            violation_witness(&k4, CodeKind::EID, &k4.vertices()),
            Some(Violation::SmallDifference {
                u: 0,
                v: 1,
                size: 0
            })
        );
    }

    #[test]
    fn sid_scans_both_orders() {
        // P_3 with full code: I(0) = {0,1} ⊆ I(1) = {0,1,2}.
        let p3 = path(3);
        assert_eq!(
            violation_witness(&p3, CodeKind::SID, &p3.vertices()),
            Some(Violation::Subsumed(0, 1))
        );
        // K_2 minus nothing: I(1) ⊆ I(0) is found after (0, 1).
        let k2 = path(2);
        assert_eq!(
            violation_witness(&k2, CodeKind::SID, &k2.vertices()),
            Some(Violation::Subsumed(0, 1))
        );
    }

    #[test]
    fn fourid_on_tiny_graphs() {
        let k1 = Graph::empty(1).unwrap();
        assert!(is_valid(&k1, CodeKind::FOURID, &k1.vertices()));
        assert!(!is_valid(&k1, CodeKind::FOURID, &VertexSet::empty(1)));
        // P_3: I({0,2}) = I({0,1,2}).
        let p3 = path(3);
        assert!(matches!(
            violation_witness(&p3, CodeKind::FOURID, &p3.vertices()),
            Some(Violation::SubsetCollision { .. })
        ));
    }

    #[test]
    fn subset_visit_order() {
        let mut seen = vec![];
        for_each_subset_up_to(3, 2, |s| {
            seen.push(s.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![0, 2],
                vec![1, 2]
            ]
        );
    }
}
