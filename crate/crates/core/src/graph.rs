//! Immutable simple undirected graphs on vertices `0..n`.
//!
//! Re-indexing conventions used by the constructive operations:
//!
//! * [`Graph::complete_join`]: vertices of `self` keep their indices, vertices
//!   of `other` are shifted by `self.n()`.
//! * [`Graph::attach_leaves`]: new leaves are appended after the existing
//!   vertices, one per target in increasing target order.
//! * [`Graph::induced_delete`]: surviving vertices keep their relative order.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// True when every cycle has length at least `g` (vacuously for forests).
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Acyclic => true,
            Girth::Finite(len) => len >= g,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralSummary {
    pub connected: bool,
    pub girth: Girth,
    pub leaves: VertexSet,
    pub supports: VertexSet,
    pub leaf_count: usize,
    pub support_count: usize,
    pub closed_twin_pairs: Vec<(usize, usize)>,
    pub open_twin_pairs: Vec<(usize, usize)>,
    pub identifiable: bool,
    pub twin_free: bool,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        })
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<VertexSet>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        let g = Graph { n, adj };
        debug_assert!(g.check_invariants(), "asymmetric or reflexive rows");
        g
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn check_invariants(&self) -> bool {
        (0..self.n).all(|v| {
            let row = self.adj[v];
            row.width() == self.n
                && !row.contains(v)
                && VertexSet::from_bits(self.n, row.bits()) == row
                && row.iter().all(|u| u < self.n && self.adj[u].contains(v))
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Open neighbourhood N(v). Panics if `v >= n`.
    #[inline]
    pub fn open(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood N[v]. Panics if `v >= n`.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn neighborhoods(&self, v: usize) -> Result<(VertexSet, VertexSet)> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok((self.open(v), self.closed(v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(self.n, 0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = next - seen;
            seen = seen | next;
        }
        seen.len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() == self.n - 1
    }

    /// Shortest cycle length via a breadth-first scan from every vertex.
    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// L(G): vertices of degree 1.
    pub fn leaves(&self) -> VertexSet {
        VertexSet::from_vertices(self.n, (0..self.n).filter(|&v| self.degree(v) == 1))
    }

    /// S(G): vertices adjacent to at least one leaf.
    pub fn supports(&self) -> VertexSet {
        let leaves = self.leaves();
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| !self.adj[v].is_disjoint(&leaves)),
        )
    }

    pub fn closed_twin_pairs(&self) -> Vec<(usize, usize)> {
        self.twin_pairs(|g, v| g.closed(v))
    }

    pub fn open_twin_pairs(&self) -> Vec<(usize, usize)> {
        self.twin_pairs(|g, v| g.open(v))
    }

    fn twin_pairs(&self, nbhd: impl Fn(&Graph, usize) -> VertexSet) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if nbhd(self, u) == nbhd(self, v) {
                    pairs.push((u, v));
                }
            }
        }
        pairs
    }

    /// No two vertices share a closed neighbourhood.
    pub fn is_identifiable(&self) -> bool {
        self.closed_twin_pairs().is_empty()
    }

    pub fn is_twin_free(&self) -> bool {
        self.is_identifiable() && self.open_twin_pairs().is_empty()
    }

    pub fn structural_summary(&self) -> StructuralSummary {
        let leaves = self.leaves();
        let supports = self.supports();
        let closed_twin_pairs = self.closed_twin_pairs();
        let open_twin_pairs = self.open_twin_pairs();
        StructuralSummary {
            connected: self.is_connected(),
            girth: self.girth(),
            leaf_count: leaves.len(),
            support_count: supports.len(),
            leaves,
            supports,
            identifiable: closed_twin_pairs.is_empty(),
            twin_free: closed_twin_pairs.is_empty() && open_twin_pairs.is_empty(),
            closed_twin_pairs,
            open_twin_pairs,
        }
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| (full - self.adj[v]).without(v))
            .collect();
        Graph::from_rows(self.n, adj)
    }

    /// Disjoint union of `self` and `other` plus every cross edge.
    pub fn complete_join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    fn combine(&self, other: &Graph, join: bool) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n)?;
        }
        if join {
            for u in 0..self.n {
                for v in 0..other.n {
                    g.add_edge(u, self.n + v)?;
                }
            }
        }
        Ok(g)
    }

    /// Appends one pendant vertex per member of `targets`.
    pub fn attach_leaves(&self, targets: &VertexSet) -> Result<Graph> {
        if let Some(bad) = targets.iter().find(|&t| t >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let n = self.n + targets.len();
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (i, t) in targets.iter().enumerate() {
            g.add_edge(t, self.n + i)?;
        }
        Ok(g)
    }

    /// Induced subgraph on the vertices not in `removed`.
    pub fn induced_delete(&self, removed: &VertexSet) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !removed.contains(v)).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep`, re-indexed in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let m = keep.len();
        let adj = keep
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    m,
                    self.adj[v]
                        .iter()
                        .filter(|&u| index[u] != usize::MAX)
                        .map(|u| index[u]),
                )
            })
            .collect();
        Graph::from_rows(m, adj)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![VertexSet::empty(self.n); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Graph::from_rows(self.n, adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
