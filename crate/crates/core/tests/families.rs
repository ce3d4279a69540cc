mod common;

use common::brute_force_minimum;
use idcode_core::families::{
    a_k, cal_t, complete, complete_minus_matching, corona, cycle, eid_gap, extremal_tid, family_a,
    ld_gap, path, sid_gap, star, subdivided_star, Status, TreeOp,
};
use idcode_core::verify::partitions;
use idcode_core::{is_isomorphic, parameter, CodeKind, Graph};

use CodeKind::*;

fn oracle(g: &Graph, kind: CodeKind) -> Option<usize> {
    brute_force_minimum(g, kind)
}

#[test]
fn orders_match_closed_forms() {
    for k in 0..=6 {
        assert_eq!(a_k(k).unwrap().n(), 2 * k);
    }
    for s in 0..=4 {
        for p in partitions(s) {
            for u in [false, true] {
                for m in 1..=3 {
                    let sum: usize = p.iter().sum();
                    assert_eq!(
                        extremal_tid(&p, u, m).unwrap().n(),
                        2 * sum + usize::from(u) + 2 * m
                    );
                }
            }
        }
    }
    for k in 2..=5 {
        assert_eq!(ld_gap(k).unwrap().n(), 2 * k + 4 * ((1 << k) - k - 1));
    }
    for k in [4, 6] {
        assert_eq!(sid_gap(k).unwrap().n(), (1 << k) - 2);
    }
    for k in 4..=6 {
        assert_eq!(eid_gap(k).unwrap().n(), (1 << k) - 1);
    }
    for t in 1..=3 {
        for h in [path(1).unwrap(), path(3).unwrap(), cycle(5).unwrap()] {
            assert_eq!(corona(&h, t).unwrap().n(), (t + 1) * h.n());
        }
    }
    assert_eq!(subdivided_star(3).unwrap().n(), 11);
}

#[test]
fn small_tid_values_against_exhaustive_search() {
    assert_eq!(oracle(&path(3).unwrap(), TID), Some(3));
    assert_eq!(oracle(&path(4).unwrap(), TID), Some(3));
    // K_{1,2} is P_3, the one graph needing every vertex
    for t in 3..=6 {
        assert_eq!(oracle(&star(t + 1).unwrap(), TID), Some(t), "K_1,{t}");
    }
    for k in 2..=5 {
        assert_eq!(oracle(&a_k(k).unwrap(), TID), Some(2 * k - 1), "A_{k}");
    }
    assert_eq!(oracle(&cycle(6).unwrap(), TID), Some(4));
    assert_eq!(oracle(&cycle(8).unwrap(), TID), Some(6));
}

#[test]
fn family_a_members_need_n_minus_one() {
    for s in 2..=5 {
        for p in partitions(s)
            .into_iter()
            .filter(|p| p.iter().all(|&k| k >= 2) || p.len() > 1)
        {
            for u in [false, true] {
                let g = family_a(&p, u).unwrap();
                let n = g.n();
                assert_eq!(oracle(&g, SEP), Some(n - 1), "{p:?} {u}");
                assert_eq!(oracle(&g, TID), Some(n - 1), "{p:?} {u}");
            }
        }
    }
}

#[test]
fn extremal_tid_outputs_need_n_minus_one() {
    for s in 0..=4 {
        for p in partitions(s) {
            for u in [false, true] {
                for m in 1..=3 {
                    let g = extremal_tid(&p, u, m).unwrap();
                    if g.n() > 12 || !g.is_identifiable() || !g.is_connected() {
                        continue;
                    }
                    let want = if is_isomorphic(&g, &path(3).unwrap()).unwrap() {
                        3
                    } else {
                        g.n() - 1
                    };
                    assert_eq!(parameter(&g, TID).unwrap(), Some(want), "{p:?} {u} {m}");
                }
            }
        }
    }
}

#[test]
fn tightness_witnesses() {
    // 1-corona of K_4 with one leaf removed
    let c = corona(&complete(4).unwrap(), 1).unwrap();
    let g = c.induced(&(0..7).collect::<Vec<_>>());
    let (t, id) = (oracle(&g, TID).unwrap(), oracle(&g, ID).unwrap());
    assert_eq!(t + 2, 2 * id);

    let g = complete_minus_matching(7).unwrap();
    assert_eq!(oracle(&g, TID), Some(6));
    assert_eq!(oracle(&g, TLD), Some(3));

    let g = subdivided_star(3).unwrap();
    assert_eq!(oracle(&g, LD), Some(4));
    assert_eq!(oracle(&g, TLD), Some(7));

    let g = corona(&path(2).unwrap(), 3).unwrap();
    assert_eq!(oracle(&g, TID), Some(6));
}

#[test]
fn gadget_values_against_exhaustive_search() {
    let g = ld_gap(2).unwrap();
    assert_eq!(oracle(&g, LD), Some(3));
    assert_eq!(oracle(&g, TID), Some(5));
    let g = sid_gap(4).unwrap();
    assert_eq!(oracle(&g, TID), Some(4));
    assert_eq!(oracle(&g, SID), Some(14));
    let g = eid_gap(4).unwrap();
    assert_eq!(oracle(&g, TID), Some(4));
    assert_eq!(oracle(&g, EID), Some(15));
}

#[test]
fn tree_family_members() {
    let ops_list: Vec<Vec<TreeOp>> = vec![
        vec![],
        vec![TreeOp::Phi2(3)],
        vec![TreeOp::Phi2(4), TreeOp::Phi2(8)],
        vec![TreeOp::Phi1(0)],
        vec![TreeOp::Phi1(7), TreeOp::Phi2(8)],
    ];
    for ops in ops_list {
        let t = cal_t(&ops).unwrap();
        let g = &t.tree;
        assert!(g.is_tree() && g.is_twin_free());
        assert_eq!(g.leaves().len(), g.supports().len());
        if ops.iter().all(|op| matches!(op, TreeOp::Phi2(_))) {
            let base: Vec<usize> = (0..g.n()).filter(|&v| t.status[v] == Status::D).collect();
            let expected = corona(&g.induced(&base), 3).unwrap();
            assert!(is_isomorphic(g, &expected).unwrap(), "{ops:?}");
            assert_eq!(4 * parameter(g, TID).unwrap().unwrap(), 3 * g.n());
        }
    }
    assert!(cal_t(&[TreeOp::Phi1(3)]).is_err());
    assert!(cal_t(&[TreeOp::Phi2(0)]).is_err());
    assert_eq!("phi2@4".parse::<TreeOp>().unwrap(), TreeOp::Phi2(4));
}
