use ccq_core::connect::{answer_queries, connected_components, node_resolution};
use ccq_core::poly::int;
use ccq_core::realroot::{AlgebraicNumber, Ordinate};
use ccq_core::topo2d::{FiberKind, TopologyGraph, VertexKind};
use ccq_core::Error;
use proptest::prelude::*;

fn at(v: i64) -> AlgebraicNumber {
    AlgebraicNumber::from_rational(int(v))
}

/// `k` strands running left to right; each entry of `crossings` makes the
/// strands at heights `i` and `i + 1` cross through an apparent node.
fn braid(k: usize, crossings: &[usize]) -> TopologyGraph {
    let mut g = TopologyGraph::default();
    let mut x = 0;
    let sample = |g: &mut TopologyGraph, x: &mut i64| {
        let f = g.push_fiber(at(*x), FiberKind::Sample);
        *x += 1;
        (0..k).map(|j| g.push_vertex(f, Ordinate::Exact(at(j as i64)), VertexKind::Regular)).collect::<Vec<_>>()
    };
    let mut left = sample(&mut g, &mut x);
    for &i in crossings {
        let f = g.push_fiber(at(x), FiberKind::Critical);
        x += 1;
        let mid: Vec<usize> = (0..k - 1)
            .map(|j| {
                let kind = if j == i { VertexKind::ApparentNode } else { VertexKind::Regular };
                g.push_vertex(f, Ordinate::Exact(at(j as i64)), kind)
            })
            .collect();
        g.v_app.push(mid[i]);
        let right = sample(&mut g, &mut x);
        for side in [&left, &right] {
            for (j, &v) in side.iter().enumerate() {
                let target = if j <= i { j } else { j - 1 };
                g.add_edge(v, mid[target]);
            }
        }
        left = right;
    }
    g
}

fn strand_end(g: &TopologyGraph, start: usize) -> usize {
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        let next: Vec<usize> = g.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [] => return cur,
            [w] => (prev, cur) = (cur, *w),
            _ => panic!("branching at {cur}"),
        }
    }
}

fn crossings() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (2usize..6).prop_flat_map(|k| (Just(k), prop::collection::vec(0..k - 1, 0..8)))
}

proptest! {
    #[test]
    fn resolution_separates_strands((k, cs) in crossings()) {
        let g = braid(k, &cs);
        let h = node_resolution(&g).unwrap();
        prop_assert_eq!(h.vertices.len(), g.vertices.len() - cs.len());
        prop_assert_eq!(h.edges.len(), g.edges.len() - 2 * cs.len());
        prop_assert!(h.v_app.is_empty());
        prop_assert!(h.vertices.iter().all(|v| h.degree(v.id) <= 2));
        prop_assert_eq!(answer_queries(&h).component_count, k);

        // each crossing swaps the heights of two strands
        let mut perm: Vec<usize> = (0..k).collect();
        for &i in &cs {
            perm.swap(i, i + 1);
        }
        let first = &h.fibers[0].ids;
        let last = &h.fibers[h.fibers.len() - 1].ids;
        for (end, &strand) in perm.iter().enumerate() {
            prop_assert_eq!(strand_end(&h, first[strand]), last[end]);
        }
    }

    #[test]
    fn resolution_without_nodes_is_identity((k, cs) in crossings()) {
        let mut g = braid(k, &cs);
        g.v_app.clear();
        prop_assert_eq!(node_resolution(&g).unwrap(), g.clone());
        let labels = connected_components(&g);
        prop_assert_eq!(labels.len(), g.vertices.len());
    }
}

#[test]
fn single_x_pairs_opposite_branches() {
    let g = braid(2, &[0]);
    let h = node_resolution(&g).unwrap();
    let (l, r) = (&g.fibers[0].ids, &g.fibers[2].ids);
    let want: std::collections::BTreeSet<_> = [(l[0], r[1]), (l[1], r[0])].into_iter().collect();
    assert_eq!(h.edges, want);
}

#[test]
fn malformed_nodes_are_rejected() {
    let mut g = braid(2, &[0]);
    let node = g.v_app[0];
    let r = g.fibers[2].ids[1];
    g.edges.remove(&(node.min(r), node.max(r)));
    assert!(matches!(node_resolution(&g), Err(Error::GenericityViolation(_))));

    // four neighbours, all on the left
    let mut g = braid(3, &[0]);
    let node = g.v_app[0];
    let extra = g.fibers[0].ids[2];
    let old = g.neighbors(node).into_iter().find(|&w| g.vertex(w).unwrap().fiber == 2).unwrap();
    g.edges.remove(&(node.min(old), node.max(old)));
    g.add_edge(extra, node);
    assert!(matches!(node_resolution(&g), Err(Error::GenericityViolation(_))));
}
