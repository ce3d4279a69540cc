//! Isomorph-free enumeration of connected graphs and free trees.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::canonical::canonical_key;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::vertex_set::VertexSet;

/// Largest order of the builtin connected-graph enumeration.
pub const CONNECTED_LIMIT: usize = 8;
/// Largest order of the builtin free-tree enumeration.
pub const TREE_LIMIT: usize = 16;

fn range_error(what: &'static str, n: usize, limit: usize) -> Error {
    if n == 0 {
        Error::InvalidParameter(format!("{what} needs n >= 1"))
    } else {
        Error::GuardExceeded { what, n, limit }
    }
}

/// All connected graphs on `n` vertices, one per isomorphism class, in
/// canonical labelling, ordered by edge count and then canonical graph6.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending every class of order `n - 1` by one vertex in every possible
/// way reaches every class of order `n`; duplicates are removed by
/// canonical key.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > CONNECTED_LIMIT {
        return Err(range_error(
            "connected graph enumeration",
            n,
            CONNECTED_LIMIT,
        ));
    }
    static LEVELS: [OnceLock<Vec<String>>; CONNECTED_LIMIT + 1] =
        [const { OnceLock::new() }; CONNECTED_LIMIT + 1];
    let level = LEVELS[n].get_or_init(|| connected_level(n));
    Ok(level
        .iter()
        .map(|s| parse_graph6(s).expect("cached graph6 is valid"))
        .collect())
}

fn connected_level(n: usize) -> Vec<String> {
    if n == 1 {
        return vec![crate::io::write_graph6(&Graph::empty(1).expect("K_1"))];
    }
    let parents = enumerate_connected(n - 1).expect("smaller level in range");
    let mut seen: BTreeSet<(usize, String)> = BTreeSet::new();
    for parent in &parents {
        let m = parent.n();
        for mask in 1u128..1 << m {
            let nbhd = VertexSet::from_bits(m, mask);
            let child = extend(parent, nbhd);
            let key = canonical_key(&child).expect("order within guard");
            seen.insert((child.edge_count(), key.as_str().to_owned()));
        }
    }
    seen.into_iter().map(|(_, s)| s).collect()
}

/// `g` plus one new vertex adjacent to `nbhd`.
fn extend(g: &Graph, nbhd: VertexSet) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(nbhd.iter().map(|v| (v, n)));
    Graph::new(n + 1, &edges).expect("valid extension")
}

/// Every graph on `n ≤ 7` vertices up to isomorphism (connected or not),
/// by extending each class of order `n - 1` with every neighbourhood,
/// including the empty one.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    const LIMIT: usize = 7;
    if n > LIMIT {
        return Err(range_error("graph enumeration", n, LIMIT));
    }
    let mut level = vec![Graph::empty(0)?];
    for m in 0..n {
        let mut seen = BTreeSet::new();
        for g in &level {
            for mask in 0u128..1 << m {
                let child = extend(g, VertexSet::from_bits(m, mask));
                seen.insert((child.edge_count(), canonical_key(&child)?));
            }
        }
        level = seen
            .into_iter()
            .map(|(_, k)| parse_graph6(k.as_str()))
            .collect::<Result<_>>()?;
    }
    Ok(level)
}

/// A rooted tree as its canonical level sequence: preorder depths with the
/// child subtrees of every vertex in non-increasing (order, sequence) order.
type Levels = Vec<u8>;

/// Canonical rooted trees with exactly `m` vertices, sorted.
fn rooted_trees(m: usize, memo: &mut Vec<Vec<Levels>>) -> Vec<Levels> {
    while memo.len() <= m {
        let size = memo.len();
        let level = if size == 0 {
            Vec::new()
        } else {
            let mut out = Vec::new();
            let mut children = Vec::new();
            forests(size - 1, usize::MAX, memo, &mut children, &mut out);
            out.sort();
            out
        };
        memo.push(level);
    }
    memo[m].clone()
}

/// Enumerates multisets of rooted trees with total order `remaining`, each
/// of order at most `max_part`, as non-increasing sequences; every multiset
/// is hung below a new root and pushed to `out`.
fn forests(
    remaining: usize,
    max_part: usize,
    memo: &[Vec<Levels>],
    chosen: &mut Vec<Levels>,
    out: &mut Vec<Levels>,
) {
    if remaining == 0 {
        let mut seq = vec![0u8];
        for child in chosen.iter() {
            seq.extend(child.iter().map(|d| d + 1));
        }
        out.push(seq);
        return;
    }
    let largest = remaining.min(max_part);
    for size in (1..=largest).rev() {
        for t in memo[size].iter().rev() {
            if let Some(prev) = chosen.last() {
                // Keep the sequence non-increasing in (size, levels).
                if (t.len(), t) > (prev.len(), prev) {
                    continue;
                }
            }
            chosen.push(t.clone());
            forests(remaining - size, size, memo, chosen, out);
            chosen.pop();
        }
    }
}

fn levels_to_graph(seq: &[u8]) -> Graph {
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (v, &d) in seq.iter().enumerate() {
        stack.truncate(d as usize);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::new(seq.len(), &edges).expect("level sequence is a tree")
}

/// All free trees on `n` vertices up to isomorphism, each rooted at a
/// centroid (vertex 0).
///
/// A tree with one centroid is a root whose branches all have fewer than
/// `n/2` vertices; a tree with two centroids is two rooted trees of order
/// `n/2` joined at their roots, counted once per unordered pair.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > TREE_LIMIT {
        return Err(range_error("tree enumeration", n, TREE_LIMIT));
    }
    let mut memo = Vec::new();
    rooted_trees(n / 2, &mut memo);
    let mut seqs: Vec<Levels> = Vec::new();
    forests(n - 1, (n - 1) / 2, &memo, &mut Vec::new(), &mut seqs);
    if n.is_multiple_of(2) {
        let halves = &memo[n / 2];
        for (i, a) in halves.iter().enumerate() {
            for b in &halves[..=i] {
                let mut seq = a.clone();
                seq.extend(b.iter().map(|d| d + 1));
                seqs.push(seq);
            }
        }
    }
    Ok(seqs.iter().map(|s| levels_to_graph(s)).collect())
}
