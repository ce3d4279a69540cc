//! Canonical labelling by colour refinement and individualization.
//!
//! The search tree is defined label-invariantly: refine the ordered
//! partition to an equitable one, individualize each vertex of the first
//! non-singleton cell in turn, recurse. Every leaf is a relabelling; the
//! canonical form is the one whose upper-triangle bit string is largest.
//! Swapping two twins in the same cell is an automorphism fixing the
//! partition, so only one twin per class is individualized.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_graph6;

/// Largest order accepted by the permutation search.
pub const CANONICAL_LIMIT: usize = 16;

/// graph6 bytes of the canonical relabelling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    Ok(CanonicalKey(write_graph6(&canonical_form(g)?).into_bytes()))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        guard(g)?;
        guard(h)?;
        return Ok(false);
    }
    Ok(canonical_key(g)? == canonical_key(h)?)
}

/// `g` relabelled into canonical order.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    guard(g)?;
    let perm = canonical_labeling(g);
    Ok(g.permute(&perm))
}

fn guard(g: &Graph) -> Result<()> {
    if g.n() > CANONICAL_LIMIT {
        return Err(Error::GuardExceeded {
            what: "canonical labelling",
            n: g.n(),
            limit: CANONICAL_LIMIT,
        });
    }
    Ok(())
}

/// `perm[v]` is the canonical label of `v`.
fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut best: Option<(u128, Vec<usize>)> = None;
    let start = refine(g, vec![(0..n).collect()]);
    search(g, start, &mut best);
    let (_, order) = best.unwrap_or((0, Vec::new()));
    let mut perm = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        perm[v] = label;
    }
    perm
}

type Partition = Vec<Vec<usize>>;

fn search(g: &Graph, partition: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = partition.iter().position(|cell| cell.len() > 1) else {
        let order: Vec<usize> = partition.iter().map(|cell| cell[0]).collect();
        let bits = leaf_bits(g, &order);
        if best.as_ref().is_none_or(|(b, _)| bits > *b) {
            *best = Some((bits, order));
        }
        return;
    };
    let cell = &partition[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&u| are_twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut child = partition.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&u| u != v).collect();
        child.splice(target..=target, [vec![v], rest]);
        search(g, refine(g, child), best);
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    g.open(u).without(v) == g.open(v).without(u)
}

/// Bits `x(0,1), x(0,2), x(1,2), ...` of the relabelled graph, first bit most
/// significant, so integer order is lexicographic order.
fn leaf_bits(g: &Graph, order: &[usize]) -> u128 {
    let mut bits = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            bits = bits << 1 | u128::from(g.has_edge(order[i], order[j]));
        }
    }
    bits
}

/// Splits cells by the number of neighbours in every cell until stable.
/// New cells are ordered by their signature, which only depends on the
/// structure, never on labels.
fn refine(g: &Graph, mut partition: Partition) -> Partition {
    loop {
        let mut cell_of = vec![0; g.n()];
        for (i, cell) in partition.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let signature = |v: usize| {
            let mut counts = vec![0usize; partition.len()];
            for u in g.open(v).iter() {
                counts[cell_of[u]] += 1;
            }
            counts
        };
        let mut next: Partition = Vec::with_capacity(partition.len());
        for cell in &partition {
            let mut keyed: Vec<(Vec<usize>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == partition.len() {
            return next;
        }
        partition = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{a_k, complete, cycle, family_a, path, star};

    #[test]
    fn isomorphism_examples() {
        assert!(is_isomorphic(&cycle(4).unwrap(), &family_a(&[1, 1], false).unwrap()).unwrap());
        assert!(!is_isomorphic(&path(4).unwrap(), &star(4).unwrap()).unwrap());
        assert!(is_isomorphic(&a_k(2).unwrap(), &path(4).unwrap()).unwrap());
    }

    #[test]
    fn relabelling_invariance() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
        let key = canonical_key(&g).unwrap();
        for perm in [[5, 4, 3, 2, 1, 0], [1, 2, 3, 4, 5, 0], [2, 0, 4, 1, 5, 3]] {
            assert_eq!(canonical_key(&g.permute(&perm)).unwrap(), key);
        }
    }

    #[test]
    fn guard_and_trivial_cases() {
        assert!(canonical_key(&Graph::empty(17).unwrap()).is_err());
        assert_eq!(
            canonical_key(&Graph::empty(0).unwrap()).unwrap().as_str(),
            "?"
        );
        assert_eq!(canonical_key(&complete(3).unwrap()).unwrap().as_str(), "Bw");
        // A larger symmetric graph: the Petersen graph.
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
        }
        let p = Graph::new(10, &edges).unwrap();
        let key = canonical_key(&p).unwrap();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_key(&p.permute(&perm)).unwrap(), key);
    }
}
