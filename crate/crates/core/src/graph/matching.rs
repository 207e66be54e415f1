//! Bipartite maximum matching and the König vertex cover.

use super::{Bipartition, Graph};
use crate::vertex_set::VertexSet;

/// A maximum-cardinality matching found with augmenting paths from side 0.
/// Edges come back as `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph, b: &Bipartition) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for root in b.part(0).iter() {
        let mut visited = VertexSet::EMPTY;
        augment(g, root, &mut mate, &mut visited);
    }
    let mut out: Vec<(usize, usize)> = (0..n)
        .filter(|&u| mate[u] != usize::MAX && u < mate[u])
        .map(|u| (u, mate[u]))
        .collect();
    out.sort_unstable();
    out
}

/// Kuhn's depth-first augmentation from a left vertex.
fn augment(g: &Graph, left: usize, mate: &mut [usize], visited: &mut VertexSet) -> bool {
    for right in g.neighbors(left).iter() {
        if visited.contains(right) {
            continue;
        }
        visited.insert(right);
        if mate[right] == usize::MAX || augment(g, mate[right], mate, visited) {
            mate[right] = left;
            mate[left] = right;
            return true;
        }
    }
    false
}

/// König's construction: with `Z` the vertices reachable from unmatched
/// side-0 vertices along alternating paths, the cover is
/// `(side0 \ Z) ∪ (side1 ∩ Z)`. Its size equals `|matching|` when the
/// matching is maximum.
pub fn minimum_vertex_cover(
    g: &Graph,
    b: &Bipartition,
    matching: &[(usize, usize)],
) -> VertexSet {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for &(u, v) in matching {
        mate[u] = v;
        mate[v] = u;
    }
    let left = b.part(0);
    let right = b.part(1);
    let mut reached: VertexSet = left.iter().filter(|&u| mate[u] == usize::MAX).collect();
    let mut frontier = reached;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for u in frontier.iter() {
            if left.contains(u) {
                // non-matching edges left -> right
                for w in g.neighbors(u).iter() {
                    if mate[u] != w {
                        next.insert(w);
                    }
                }
            } else if mate[u] != usize::MAX {
                next.insert(mate[u]);
            }
        }
        frontier = next.difference(reached);
        reached = reached.union(frontier);
    }
    let cover = left.difference(reached).union(right.intersection(reached));
    debug_assert_eq!(cover.len(), matching.len(), "matching is not maximum");
    cover
}

impl Graph {
    /// Whether every edge meets `c`.
    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| c.contains(u) || c.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{exhaustive_independence_number, make_grid};
    use proptest::prelude::*;

    fn brute_max_matching(g: &Graph) -> usize {
        fn go(edges: &[(usize, usize)], used: VertexSet) -> usize {
            match edges.split_first() {
                None => 0,
                Some((&(u, v), rest)) => {
                    let skip = go(rest, used);
                    if used.contains(u) || used.contains(v) {
                        skip
                    } else {
                        skip.max(1 + go(rest, used.with(u).with(v)))
                    }
                }
            }
        }
        go(&g.edges(), VertexSet::EMPTY)
    }

    fn brute_min_cover(g: &Graph) -> usize {
        (0u64..1 << g.vertex_count())
            .map(VertexSet::from_bits)
            .filter(|c| g.is_vertex_cover(*c))
            .map(|c| c.len())
            .min()
            .unwrap()
    }

    #[test]
    fn small_matchings() {
        let c4 = Graph::cycle(4).unwrap();
        let b = c4.bipartition().unwrap();
        assert_eq!(maximum_matching(&c4, &b).len(), 2);
        let p3 = Graph::path(3).unwrap();
        assert_eq!(maximum_matching(&p3, &p3.bipartition().unwrap()).len(), 1);
        let g = make_grid(3, 3).unwrap();
        let m = maximum_matching(&g, &g.bipartition().unwrap());
        assert_eq!(m.len(), 4);
        assert_eq!(brute_max_matching(&g), 4);
    }

    #[test]
    fn covers() {
        let c4 = Graph::cycle(4).unwrap();
        let b = c4.bipartition().unwrap();
        let c = minimum_vertex_cover(&c4, &b, &maximum_matching(&c4, &b));
        assert_eq!(c.len(), 2);
        assert!(c4.is_vertex_cover(c));

        let e = Graph::path(2).unwrap();
        let b = e.bipartition().unwrap();
        assert_eq!(minimum_vertex_cover(&e, &b, &maximum_matching(&e, &b)).len(), 1);

        let g = make_grid(2, 3).unwrap();
        let b = g.bipartition().unwrap();
        let c = minimum_vertex_cover(&g, &b, &maximum_matching(&g, &b));
        assert_eq!(c.len(), 3);
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_vertex_cover(c));
        assert_eq!(brute_min_cover(&g), 3);
    }

    fn arb_bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
        (1..=max_side, 1..=max_side).prop_flat_map(|(a, b)| {
            proptest::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
                let mut g = Graph::new(a + b).unwrap();
                for i in 0..a {
                    for j in 0..b {
                        if bits[i * b + j] {
                            g.add_edge(i, a + j).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn koenig_and_gallai(g in arb_bipartite(6), mask in any::<u16>()) {
            let w = VertexSet::from_bits(mask as u64).intersection(g.vertices());
            let sub = g.induced_subgraph(w).unwrap().graph;
            let b = sub.bipartition().unwrap();
            let m = maximum_matching(&sub, &b);
            let cover = minimum_vertex_cover(&sub, &b, &m);
            prop_assert!(sub.is_vertex_cover(cover));
            prop_assert_eq!(m.len(), cover.len());
            prop_assert_eq!(m.len(), brute_max_matching(&sub));
            prop_assert_eq!(cover.len(), brute_min_cover(&sub));
            // Gallai: alpha + tau = |W|
            prop_assert_eq!(
                exhaustive_independence_number(&sub, sub.vertices()) + cover.len(),
                w.len()
            );
        }
    }
}
