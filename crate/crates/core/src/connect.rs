//! Node resolution and the final query partition.

use std::collections::BTreeMap;

use crate::topo2d::TopologyGraph;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// 1-based query indices; each block ascending, blocks ordered by their
    /// first element.
    pub blocks: Vec<Vec<usize>>,
    pub component_count: usize,
}

/// Replaces each apparent node by the two strands crossing there.
///
/// Around a node whose tangents are not vertical the cyclic order of the
/// four neighbours is `L_low, L_up, R_up, R_low`, and each branch continues
/// into the one after next: `L_low` with `R_up` and `L_up` with `R_low`.
/// An isolated apparent node (both preimages non-real) has no neighbours and
/// is simply dropped, since it carries no real point of the space curve.
pub fn node_resolution(g: &TopologyGraph) -> Result<TopologyGraph> {
    let mut out = g.clone();
    for &v in &g.v_app {
        let node = g
            .vertex(v)
            .ok_or_else(|| Error::Internal(format!("apparent node {v} is not a vertex")))?;
        let nbrs = g.neighbors(v);
        if nbrs.is_empty() {
            out.remove_vertex(v);
            continue;
        }
        let side = |off: isize| -> Vec<usize> {
            let mut s: Vec<usize> = nbrs
                .iter()
                .copied()
                .filter(|&w| g.vertex(w).map(|x| x.fiber as isize - node.fiber as isize) == Some(off))
                .collect();
            // ids grow with the ordinate inside a fiber
            let order = |w: &usize| g.fibers[node.fiber.wrapping_add_signed(off)].ids.iter().position(|x| x == w);
            s.sort_by_key(order);
            s
        };
        let (left, right) = (side(-1), side(1));
        if nbrs.len() != 4 || left.len() != 2 || right.len() != 2 {
            return Err(Error::GenericityViolation(format!(
                "apparent node {v} has {} neighbours split {}/{}, expected 4 split 2/2",
                nbrs.len(),
                left.len(),
                right.len()
            )));
        }
        out.remove_vertex(v);
        out.add_edge(left[0], right[1]);
        out.add_edge(left[1], right[0]);
    }
    out.v_app.clear();
    Ok(out)
}

fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
    let mut r = x;
    while parent[&r] != r {
        r = parent[&r];
    }
    let mut c = x;
    while parent[&c] != r {
        let next = parent[&c];
        parent.insert(c, r);
        c = next;
    }
    r
}

/// Component label of every vertex: the smallest vertex id in its component.
pub fn connected_components(g: &TopologyGraph) -> BTreeMap<usize, usize> {
    let mut parent: BTreeMap<usize, usize> = g.vertices.iter().map(|v| (v.id, v.id)).collect();
    for &(a, b) in &g.edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            // keep the smaller id as root so labels are canonical
            parent.insert(ra.max(rb), ra.min(rb));
        }
    }
    let ids: Vec<usize> = parent.keys().copied().collect();
    ids.into_iter().map(|id| (id, find(&mut parent, id))).collect()
}

/// Groups the query points (control vertices, in abscissa order) by
/// connected component of the resolved graph.
pub fn answer_queries(g: &TopologyGraph) -> Partition {
    let labels = connected_components(g);
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, v) in g.v_ctrl.iter().enumerate() {
        blocks.entry(labels[v]).or_default().push(i + 1);
    }
    let mut blocks: Vec<Vec<usize>> = blocks.into_values().collect();
    blocks.sort();
    let mut roots: Vec<usize> = labels.values().copied().collect();
    roots.sort_unstable();
    roots.dedup();
    Partition { blocks, component_count: roots.len() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;
    use crate::realroot::{AlgebraicNumber, Ordinate};
    use crate::topo2d::{FiberKind, VertexKind};

    fn at(v: i64) -> Ordinate {
        Ordinate::Exact(AlgebraicNumber::from_rational(int(v)))
    }

    /// Left fiber (a, b), node, right fiber (c, d), ordinates ascending.
    fn single_x() -> (TopologyGraph, [usize; 5]) {
        let mut g = TopologyGraph::default();
        let f0 = g.push_fiber(AlgebraicNumber::from_rational(int(-1)), FiberKind::Sample);
        let f1 = g.push_fiber(AlgebraicNumber::from_rational(int(0)), FiberKind::Critical);
        let f2 = g.push_fiber(AlgebraicNumber::from_rational(int(1)), FiberKind::Sample);
        let a = g.push_vertex(f0, at(-1), VertexKind::Regular);
        let b = g.push_vertex(f0, at(1), VertexKind::Regular);
        let v = g.push_vertex(f1, at(0), VertexKind::ApparentNode);
        let c = g.push_vertex(f2, at(-1), VertexKind::Regular);
        let d = g.push_vertex(f2, at(1), VertexKind::Regular);
        for w in [a, b, c, d] {
            g.add_edge(v, w);
        }
        g.v_app.push(v);
        (g, [a, b, v, c, d])
    }

    #[test]
    fn x_node_pairs_opposite_branches() {
        let (g, [a, b, _, c, d]) = single_x();
        let r = node_resolution(&g).unwrap();
        assert_eq!(r.vertices.len(), 4);
        assert_eq!(r.edges.iter().copied().collect::<Vec<_>>(), vec![(a, d), (b, c)]);
        assert_eq!(answer_queries(&r).component_count, 2);
    }

    #[test]
    fn components_are_canonical() {
        let (g, _) = single_x();
        let labels = connected_components(&g);
        assert!(labels.values().all(|&l| l == 0));
        assert!(connected_components(&TopologyGraph::default()).is_empty());
    }
}
