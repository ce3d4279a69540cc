//! Generators for the named graph families and gadgets.
//!
//! Vertex orders are fixed so that codes written against them are
//! reproducible. Each generator documents its layout.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `A_k` on `x_1..x_2k` (indices `0..2k`): `x_i ~ x_j` iff `|i - j| ≤ k - 1`.
pub fn a_k(k: usize) -> Result<Graph> {
    let n = 2 * k;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if j - i < k {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Complete join of `A_{k}` for each part `k`, blocks in the given order,
/// optionally followed by one universal vertex.
pub fn family_a(partition: &[usize], with_universal: bool) -> Result<Graph> {
    if let Some(&bad) = partition.iter().find(|&&k| k == 0) {
        return Err(invalid(format!("partition parts must be >= 1, got {bad}")));
    }
    let mut g = Graph::empty(0)?;
    for &k in partition {
        g = g.complete_join(&a_k(k)?)?;
    }
    if with_universal {
        g = g.complete_join(&Graph::empty(1)?)?;
    }
    Ok(g)
}

/// `G''` from [`family_a`] joined to `K_m`, then a pendant leaf on every
/// clique vertex. Layout: `G''` vertices, clique, leaves in clique order.
pub fn extremal_tid(partition: &[usize], with_universal: bool, m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(invalid("extremal_tid needs m >= 1"));
    }
    let inner = family_a(partition, with_universal)?;
    let base = inner.complete_join(&complete(m)?)?;
    let clique = VertexSet::from_vertices(base.n(), inner.n()..base.n());
    base.attach_leaves(&clique)
}

/// `t`-corona: a private path `P_t` hung from every base vertex by one end.
/// Layout: base vertices, then for each base vertex `v` in order the path
/// vertices starting with the one adjacent to `v`.
pub fn corona(base: &Graph, t: usize) -> Result<Graph> {
    if base.n() == 0 {
        return Err(invalid("corona of the empty graph"));
    }
    if !(1..=3).contains(&t) {
        return Err(invalid(format!("corona depth must be 1, 2 or 3, got {t}")));
    }
    let b = base.n();
    let n = (t + 1) * b;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for v in 0..b {
        let first = b + v * t;
        edges.push((v, first));
        for i in 1..t {
            edges.push((first + i - 1, first + i));
        }
    }
    Graph::new(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

/// `K_n` minus the matching `{0,1}, {2,3}, ...` of size `floor(n/2)`.
pub fn complete_minus_matching(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete_minus_matching needs n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !(u % 2 == 0 && v == u + 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// `T_k`: centre `c`, one pendant leaf `p`, and `k` branches `c–u_i–v_i–w_i`.
/// Order `3k + 2`, with `γ^L = k + 1` and `γ_t^L = 2k + 1`.
///
/// Layout: `c = 0`, `p = 1`, then `u_i, v_i, w_i` at `2 + 3i ..`.
pub fn subdivided_star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("subdivided_star needs k >= 1"));
    }
    let n = 3 * k + 2;
    let mut edges = vec![(0, 1)];
    for i in 0..k {
        let u = 2 + 3 * i;
        edges.extend([(0, u), (u, u + 1), (u + 1, u + 2)]);
    }
    Graph::new(n, &edges)
}

/// Subsets of `0..k` (as bitmasks, increasing) with size in `sizes`.
fn subsets(k: usize, sizes: impl Fn(u32) -> bool) -> Vec<u32> {
    (0u32..1 << k).filter(|s| sizes(s.count_ones())).collect()
}

/// The gadget `G_k` separating `γ^L` from `γ_t^ID`.
///
/// Layout: `a_0..a_{k-1}`, leaves `b_0..b_{k-1}`, then for each subset `S`
/// of `A` with `|S| ≥ 2` (increasing bitmask) the block `x_S, x'_S, y_S, z_S`.
pub fn ld_gap(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(invalid("ld_gap needs k >= 2"));
    }
    if k > 5 {
        return Err(invalid("ld_gap supports k <= 5"));
    }
    let blocks = subsets(k, |s| s >= 2);
    let n = 2 * k + 4 * blocks.len();
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, k + i)).collect();
    for (j, &s) in blocks.iter().enumerate() {
        let x = 2 * k + 4 * j;
        let (xp, y, z) = (x + 1, x + 2, x + 3);
        for a in (0..k).filter(|&a| s >> a & 1 == 1) {
            edges.extend([(x, a), (xp, a)]);
        }
        edges.extend([(x, xp), (x, y), (z, x), (z, xp), (z, y)]);
    }
    Graph::new(n, &edges)
}

/// Gadget with `γ_t^ID = k` and `γ_S^ID = 2^k - 2` for even `k ≥ 4`.
///
/// Layout: clique vertices `x_1..x_k` at `0..k`, then one outer vertex per
/// subset `X'` of `X` with `1 ≤ |X'| ≤ k - 2`, in increasing bitmask order.
/// Outer vertices of complementary subsets are adjacent; the singleton
/// `{x_{2i+1}}` is paired with `{x_{2i+2}}` (0-based: `{2i}` with `{2i+1}`).
/// The matching `x_1x_k, x_2x_3, x_4x_5, ..., x_{k-2}x_{k-1}` is removed from
/// the clique (0-based: `(0, k-1), (1, 2), (3, 4), ..., (k-3, k-2)`).
pub fn sid_gap(k: usize) -> Result<Graph> {
    if k < 4 || k % 2 == 1 {
        return Err(invalid("sid_gap needs an even k >= 4"));
    }
    if k > 6 {
        return Err(invalid("sid_gap supports k <= 6"));
    }
    let outer = subsets(k, |s| s >= 1 && s as usize <= k - 2);
    let index_of = |mask: u32| k + outer.binary_search(&mask).expect("subset present");
    let full = (1u32 << k) - 1;
    let n = k + outer.len();

    let mut removed = vec![(0, k - 1)];
    removed.extend((0..(k - 2) / 2).map(|i| (2 * i + 1, 2 * i + 2)));
    let mut edges = Vec::new();
    for u in 0..k {
        for v in u + 1..k {
            if !removed.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    for &mask in &outer {
        let me = index_of(mask);
        for x in (0..k).filter(|&x| mask >> x & 1 == 1) {
            edges.push((me, x));
        }
        let partner = if mask.count_ones() == 1 {
            let x = mask.trailing_zeros() as usize;
            if x.is_multiple_of(2) {
                Some(1u32 << (x + 1))
            } else {
                None
            }
        } else {
            Some(full & !mask)
        };
        if let Some(p) = partner {
            let other = index_of(p);
            if me < other {
                edges.push((me, other));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Gadget with `γ_t^ID = k` and `γ_E^ID = 2^k - 1` for `k ≥ 4`.
///
/// Layout: path `x_1..x_k` at `0..k`, then one vertex per nonempty subset
/// `X'` of `X` that is not some `N[x_i] ∩ X`, in increasing bitmask order.
/// The vertex for `X' = X` is joined to every vertex whose subset is a
/// singleton.
pub fn eid_gap(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(invalid("eid_gap needs k >= 4"));
    }
    if k > 6 {
        return Err(invalid("eid_gap supports k <= 6"));
    }
    let closed: Vec<u32> = (0..k)
        .map(|i| {
            let mut m = 1u32 << i;
            if i > 0 {
                m |= 1 << (i - 1);
            }
            if i + 1 < k {
                m |= 1 << (i + 1);
            }
            m
        })
        .collect();
    let ys: Vec<u32> = subsets(k, |s| s >= 1)
        .into_iter()
        .filter(|m| !closed.contains(m))
        .collect();
    let n = k + ys.len();
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    let full = (1u32 << k) - 1;
    let w = k + ys
        .iter()
        .position(|&m| m == full)
        .expect("X itself is a subset");
    for (j, &mask) in ys.iter().enumerate() {
        let me = k + j;
        for x in (0..k).filter(|&x| mask >> x & 1 == 1) {
            edges.push((me, x));
        }
        if mask.count_ones() == 1 {
            edges.push((w, me));
        }
    }
    Graph::new(n, &edges)
}

/// Vertex status labels of the tree family grown from `P_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    A,
    B,
    C,
    D,
}

impl Status {
    pub fn letter(self) -> char {
        match self {
            Status::A => 'A',
            Status::B => 'B',
            Status::C => 'C',
            Status::D => 'D',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeOp {
    /// Hang `P_5` with statuses D, D, B, A, C from a status-C vertex.
    Phi1(usize),
    /// Hang `P_4` with statuses D, B, A, C from a status-D vertex.
    Phi2(usize),
}

impl FromStr for TreeOp {
    type Err = Error;

    /// Parses `phi1@v` or `phi2@v`.
    fn from_str(s: &str) -> Result<Self> {
        let (op, at) = s
            .split_once('@')
            .ok_or_else(|| invalid(format!("tree operation '{s}' must look like phi2@3")))?;
        let at: usize = at
            .trim()
            .parse()
            .map_err(|_| invalid(format!("bad attachment vertex in '{s}'")))?;
        match op.trim() {
            "phi1" => Ok(TreeOp::Phi1(at)),
            "phi2" => Ok(TreeOp::Phi2(at)),
            other => Err(invalid(format!("unknown tree operation '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatusedTree {
    pub tree: Graph,
    pub status: Vec<Status>,
}

/// Grows a tree from `P_8` (statuses C, A, B, D, D, B, A, C) by applying
/// `ops` in order. New vertices are appended in path order.
pub fn cal_t(ops: &[TreeOp]) -> Result<StatusedTree> {
    use Status::*;
    let mut edges: Vec<(usize, usize)> = (1..8).map(|i| (i - 1, i)).collect();
    let mut status = vec![C, A, B, D, D, B, A, C];
    for &op in ops {
        let (at, required, added): (usize, Status, &[Status]) = match op {
            TreeOp::Phi1(at) => (at, C, &[D, D, B, A, C]),
            TreeOp::Phi2(at) => (at, D, &[D, B, A, C]),
        };
        let found = *status.get(at).ok_or(Error::VertexOutOfRange {
            vertex: at,
            n: status.len(),
        })?;
        if found != required {
            return Err(Error::WrongStatus {
                vertex: at,
                found: found.letter(),
                required: required.letter(),
            });
        }
        let first = status.len();
        edges.push((at, first));
        for i in 1..added.len() {
            edges.push((first + i - 1, first + i));
        }
        status.extend_from_slice(added);
    }
    let tree = Graph::new(status.len(), &edges)?;
    Ok(StatusedTree { tree, status })
}

/// Named family with parameters, as accepted by the `gen` command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    AK(usize),
    CalA {
        partition: Vec<usize>,
        with_universal: bool,
    },
    ExtremalTid {
        partition: Vec<usize>,
        with_universal: bool,
        m: usize,
    },
    Corona {
        base: Graph,
        t: usize,
    },
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteMinusMatching(usize),
    SubdividedStar(usize),
    LdGap(usize),
    SidGap(usize),
    EidGap(usize),
    CalT(Vec<TreeOp>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::AK(k) => a_k(*k),
            FamilySpec::CalA {
                partition,
                with_universal,
            } => family_a(partition, *with_universal),
            FamilySpec::ExtremalTid {
                partition,
                with_universal,
                m,
            } => extremal_tid(partition, *with_universal, *m),
            FamilySpec::Corona { base, t } => corona(base, *t),
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::CompleteMinusMatching(n) => complete_minus_matching(*n),
            FamilySpec::SubdividedStar(k) => subdivided_star(*k),
            FamilySpec::LdGap(k) => ld_gap(*k),
            FamilySpec::SidGap(k) => sid_gap(*k),
            FamilySpec::EidGap(k) => eid_gap(*k),
            FamilySpec::CalT(ops) => Ok(cal_t(ops)?.tree),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::AK(k) => write!(f, "a_k(k={k})"),
            FamilySpec::CalA {
                partition,
                with_universal,
            } => write!(f, "calA({partition:?}, universal={with_universal})"),
            FamilySpec::ExtremalTid {
                partition,
                with_universal,
                m,
            } => write!(
                f,
                "extremal-tid({partition:?}, universal={with_universal}, m={m})"
            ),
            FamilySpec::Corona { base, t } => write!(f, "corona(n={}, t={t})", base.n()),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Star(n) => write!(f, "star({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::CompleteMinusMatching(n) => write!(f, "complete-minus-matching({n})"),
            FamilySpec::SubdividedStar(k) => write!(f, "subdivided-star({k})"),
            FamilySpec::LdGap(k) => write!(f, "ld-gap({k})"),
            FamilySpec::SidGap(k) => write!(f, "sid-gap({k})"),
            FamilySpec::EidGap(k) => write!(f, "eid-gap({k})"),
            FamilySpec::CalT(ops) => write!(f, "calT({} ops)", ops.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().collect()
    }

    #[test]
    fn a_k_small_cases() {
        assert_eq!(a_k(0).unwrap().n(), 0);
        let a1 = a_k(1).unwrap();
        assert_eq!((a1.n(), a1.edge_count()), (2, 0));
        assert_eq!(edges(&a_k(2).unwrap()), vec![(0, 1), (1, 2), (2, 3)]);
        let a3 = a_k(3).unwrap();
        assert_eq!(a3.open(0).to_vec(), vec![1, 2]);
        for k in 0..6 {
            assert_eq!(a_k(k).unwrap().n(), 2 * k);
        }
    }

    #[test]
    fn family_a_examples() {
        let c4 = family_a(&[1, 1], false).unwrap();
        assert_eq!(c4.degree_sequence(), vec![2, 2, 2, 2]);
        assert_eq!(c4.girth(), Girth::Finite(4));
        let p3 = family_a(&[1], true).unwrap();
        assert_eq!(edges(&p3), vec![(0, 2), (1, 2)]);
        assert_eq!(family_a(&[1, 1, 2, 3], false).unwrap().n(), 14);
        assert!(family_a(&[0], false).is_err());
    }

    #[test]
    fn extremal_tid_examples() {
        let p4 = extremal_tid(&[], false, 2).unwrap();
        assert_eq!(edges(&p4), vec![(0, 1), (0, 2), (1, 3)]);
        let bull = extremal_tid(&[], true, 2).unwrap();
        assert_eq!(bull.n(), 5);
        assert_eq!(bull.edge_count(), 5);
        assert_eq!(bull.degree_sequence(), vec![1, 1, 2, 3, 3]);
        let fig4d = extremal_tid(&[1], true, 1).unwrap();
        assert_eq!(fig4d.n(), 5);
        for (p, u, m) in [
            (vec![1, 2], false, 3),
            (vec![], true, 1),
            (vec![2], true, 2),
        ] {
            let g = extremal_tid(&p, u, m).unwrap();
            let sum: usize = p.iter().sum();
            assert_eq!(g.n(), 2 * sum + usize::from(u) + 2 * m);
        }
        assert!(extremal_tid(&[], false, 0).is_err());
    }

    #[test]
    fn corona_examples() {
        let k1 = complete(1).unwrap();
        assert_eq!(corona(&k1, 3).unwrap(), path(4).unwrap());
        let p2 = path(2).unwrap();
        let c = corona(&p2, 3).unwrap();
        assert_eq!(c.n(), 8);
        assert!(c.is_tree());
        let k4 = complete(4).unwrap();
        let c1 = corona(&k4, 1).unwrap();
        assert_eq!(c1.n(), 8);
        assert_eq!(c1.supports().to_vec(), vec![0, 1, 2, 3]);
        assert!(corona(&k4, 4).is_err());
        for t in 1..=3 {
            assert_eq!(corona(&k4, t).unwrap().n(), (t + 1) * 4);
        }
    }

    #[test]
    fn basic_families() {
        assert_eq!(star(5).unwrap().degree(0), 4);
        assert_eq!(cycle(6).unwrap().degree_sequence(), vec![2; 6]);
        assert!(cycle(2).is_err());
        let g = complete_minus_matching(7).unwrap();
        assert_eq!(g.edge_count(), 21 - 3);
        assert_eq!(g.degree(6), 6);
    }

    #[test]
    fn subdivided_star_shape() {
        for k in 1..=5 {
            let t = subdivided_star(k).unwrap();
            assert_eq!(t.n(), 3 * k + 2);
            assert!(t.is_tree());
            assert_eq!(t.leaves().len(), k + 1);
        }
        assert!(subdivided_star(0).is_err());
    }

    #[test]
    fn gadget_orders() {
        for k in 2..=4 {
            let g = ld_gap(k).unwrap();
            assert_eq!(g.n(), 2 * k + 4 * ((1 << k) - k - 1));
            assert!(g.is_connected() && g.is_identifiable());
        }
        assert_eq!(sid_gap(4).unwrap().n(), 14);
        assert_eq!(sid_gap(6).unwrap().n(), 62);
        assert!(sid_gap(5).is_err());
        assert_eq!(eid_gap(4).unwrap().n(), 15);
        assert_eq!(eid_gap(5).unwrap().n(), 31);
        assert!(eid_gap(3).is_err());
        assert!(ld_gap(1).is_err());
    }

    #[test]
    fn sid_gap_structure() {
        let g = sid_gap(4).unwrap();
        // Removed matching x1x4, x2x3.
        assert!(!g.has_edge(0, 3) && !g.has_edge(1, 2));
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && g.has_edge(1, 3) && g.has_edge(2, 3));
        // Every outer vertex has exactly one outer neighbour.
        for v in 4..14 {
            assert_eq!(
                (g.open(v) - VertexSet::from_vertices(14, 0..4)).len(),
                1,
                "vertex {v}"
            );
        }
        assert!(g.is_connected());
    }

    #[test]
    fn eid_gap_structure() {
        let g = eid_gap(4).unwrap();
        let x = VertexSet::from_vertices(15, 0..4);
        let w = (4..15).find(|&v| g.open(v) & x == x).unwrap();
        let singles: Vec<_> = (4..15).filter(|&v| (g.open(v) & x).len() == 1).collect();
        assert_eq!(singles.len(), 4);
        for s in singles {
            assert!(g.has_edge(w, s));
        }
    }

    #[test]
    fn cal_t_construction() {
        use Status::*;
        let t0 = cal_t(&[]).unwrap();
        assert_eq!(t0.tree, path(8).unwrap());
        assert_eq!(t0.status, vec![C, A, B, D, D, B, A, C]);
        let t1 = cal_t(&[TreeOp::Phi2(3)]).unwrap();
        assert_eq!(t1.tree.n(), 12);
        let t2 = cal_t(&[TreeOp::Phi1(0)]).unwrap();
        assert_eq!(t2.tree.n(), 13);
        assert!(t2.tree.is_tree());
        assert_eq!(
            cal_t(&[TreeOp::Phi2(0)]),
            Err(Error::WrongStatus {
                vertex: 0,
                found: 'C',
                required: 'D'
            })
        );
        assert_eq!("phi1@7".parse::<TreeOp>().unwrap(), TreeOp::Phi1(7));
        assert!("phi3@1".parse::<TreeOp>().is_err());
    }
}
