//! Independent oracles, written from the definitions with plain vectors and
//! no use of the library's predicates, encodings or canonical forms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use idcode_core::{CodeKind, Graph};

pub type Set = Vec<bool>;

fn closed(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.n()).filter(|&u| u == v || g.has_edge(u, v)).collect()
}

fn open(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.n()).filter(|&u| g.has_edge(u, v)).collect()
}

fn trace(nbhd: &[usize], code: &Set) -> BTreeSet<usize> {
    nbhd.iter().copied().filter(|&u| code[u]).collect()
}

/// `I(X)`: codewords in the union of closed neighbourhoods of `xs`.
fn trace_of(g: &Graph, xs: &[usize], code: &Set) -> BTreeSet<usize> {
    xs.iter()
        .flat_map(|&x| trace(&closed(g, x), code))
        .collect()
}

/// Direct evaluation of each kind's definition.
pub fn satisfies(g: &Graph, kind: CodeKind, code: &Set) -> bool {
    let n = g.n();
    let i: Vec<BTreeSet<usize>> = (0..n).map(|v| trace(&closed(g, v), code)).collect();
    let o: Vec<BTreeSet<usize>> = (0..n).map(|v| trace(&open(g, v), code)).collect();
    let pairs = || (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)));
    let dominating = i.iter().all(|s| !s.is_empty());
    let total = o.iter().all(|s| !s.is_empty());
    let separating = pairs().all(|(u, v)| i[u] != i[v]);
    let locating = pairs().all(|(u, v)| code[u] || code[v] || i[u] != i[v]);
    match kind {
        CodeKind::D => dominating,
        CodeKind::TD => total,
        CodeKind::SEP => separating,
        CodeKind::ID => dominating && separating,
        CodeKind::TID => total && separating,
        CodeKind::LD => dominating && locating,
        CodeKind::TLD => total && locating,
        CodeKind::OLD => total && pairs().all(|(u, v)| o[u] != o[v]),
        CodeKind::SID => (0..n).all(|u| (0..n).all(|v| u == v || !i[u].is_subset(&i[v]))),
        CodeKind::EID => {
            i.iter().all(|s| s.len() >= 3)
                && pairs().all(|(u, v)| i[u].symmetric_difference(&i[v]).count() >= 3)
        }
        CodeKind::FOURID => {
            let subsets: Vec<Vec<usize>> = (0u32..1 << n)
                .filter(|m| m.count_ones() <= 4)
                .map(|m| (0..n).filter(|&b| m >> b & 1 == 1).collect())
                .collect();
            let images: Vec<BTreeSet<usize>> =
                subsets.iter().map(|x| trace_of(g, x, code)).collect();
            (0..images.len()).all(|a| (a + 1..images.len()).all(|b| images[a] != images[b]))
        }
    }
}

pub fn set_from_mask(n: usize, mask: u32) -> Set {
    (0..n).map(|b| mask >> b & 1 == 1).collect()
}

/// Smallest size of a valid code, by scanning subsets in order of size.
pub fn brute_force_minimum(g: &Graph, kind: CodeKind) -> Option<usize> {
    let n = g.n();
    let mut masks: Vec<u32> = (0u32..1 << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    masks
        .into_iter()
        .find(|&m| satisfies(g, kind, &set_from_mask(n, m)))
        .map(|m| m.count_ones() as usize)
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

/// Minimum upper-triangle bit pattern over all relabellings: an exact
/// isomorphism invariant, by exhaustion. Fine for `n ≤ 7`.
pub fn brute_canonical(adj: &[Vec<bool>], perms: &[Vec<usize>]) -> u64 {
    let n = adj.len();
    perms
        .iter()
        .map(|p| {
            let mut bits = 0u64;
            for j in 1..n {
                for i in 0..j {
                    bits = bits << 1 | u64::from(adj[p[i]][p[j]]);
                }
            }
            bits
        })
        .min()
        .unwrap_or(0)
}

fn is_connected_matrix(adj: &[Vec<bool>]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if adj[v][u] && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Number of connected graphs on `n` vertices up to isomorphism, by
/// canonicalizing every labelled graph.
pub fn connected_count_by_dedup(n: usize) -> usize {
    let perms = permutations(n);
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if is_connected_matrix(&adj) {
            classes.insert(brute_canonical(&adj, &perms));
        }
    }
    classes.len()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// Edges of the labelled tree with the given Prüfer sequence.
pub fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// AHU string of the tree rooted at `root`.
fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu(adj, u, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Isomorphism invariant of a free tree: the smallest AHU string over its
/// centroids.
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn size(adj: &[Vec<usize>], v: usize, p: usize, sz: &mut [usize]) -> usize {
        let mut s = 1;
        for &u in &adj[v] {
            if u != p {
                s += size(adj, u, v, sz);
            }
        }
        sz[v] = s;
        s
    }
    let mut sz = vec![0; n];
    size(&adj, 0, usize::MAX, &mut sz);
    let heaviest = |v: usize| {
        let mut best = n - sz[v];
        for &u in &adj[v] {
            if sz[u] < sz[v] {
                best = best.max(sz[u]);
            }
        }
        best
    };
    let m = (0..n).map(heaviest).min().unwrap();
    (0..n)
        .filter(|&v| heaviest(v) == m)
        .map(|c| ahu(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// Number of free trees on `n` vertices, deduplicating all `n^(n-2)`
/// labelled trees.
pub fn tree_count_by_prufer(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut classes = HashSet::new();
    loop {
        classes.insert(tree_code(n, &prufer_decode(&seq, n)));
        let mut i = 0;
        loop {
            if i == len {
                return classes.len();
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}
