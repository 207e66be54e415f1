use super::Graph;
use crate::vertex_set::VertexSet;

impl Graph {
    /// Exact independence number.
    pub fn independence_number(&self) -> usize {
        self.alpha_within(self.vertices())
    }

    /// Independence number of the induced subgraph on `w`.
    pub fn alpha_within(&self, w: VertexSet) -> usize {
        let mut s = Search::new(self, usize::MAX);
        s.best = greedy_independent(self, w).len();
        s.expand(w, 0);
        s.best
    }

    /// Whether `w` contains an independent set of size `k`. Stops as soon as
    /// one is found.
    pub fn has_independent_subset(&self, w: VertexSet, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        if w.len() < k {
            return false;
        }
        let greedy = greedy_independent(self, w).len();
        if greedy >= k {
            return true;
        }
        let mut s = Search::new(self, k);
        s.best = greedy;
        s.expand(w, 0);
        s.best >= k
    }

    /// A maximum independent set (ties broken by the search order).
    pub fn maximum_independent_set(&self) -> VertexSet {
        let alpha = self.independence_number();
        independent_sets(self, alpha)
            .into_iter()
            .next()
            .unwrap_or(VertexSet::EMPTY)
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: usize,
    target: usize,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, target: usize) -> Self {
        Search { g, best: 0, target }
    }

    fn expand(&mut self, mut cand: VertexSet, mut size: usize) {
        loop {
            if size > self.best {
                self.best = size;
            }
            if self.best >= self.target || cand.is_empty() {
                return;
            }
            if size + cand.len() <= self.best
                || size + clique_cover_bound(self.g, cand) <= self.best
            {
                return;
            }
            // A vertex of degree <= 1 lies in some maximum independent set.
            let mut branch = None;
            let mut branch_degree = 0;
            let mut forced = None;
            for v in cand.iter() {
                let d = self.g.neighbors(v).intersection(cand).len();
                if d <= 1 {
                    forced = Some(v);
                    break;
                }
                if d > branch_degree {
                    branch_degree = d;
                    branch = Some(v);
                }
            }
            if let Some(v) = forced {
                cand = cand.difference(self.g.neighbors(v)).without(v);
                size += 1;
                continue;
            }
            let v = branch.expect("nonempty candidate set");
            self.expand(cand.difference(self.g.neighbors(v)).without(v), size + 1);
            cand = cand.without(v);
        }
    }
}

/// Greedy partition of `cand` into cliques; its size bounds alpha from above.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut count = 0;
    while let Some(v) = cand.min_vertex() {
        let mut clique = VertexSet::singleton(v);
        let mut common = g.neighbors(v).intersection(cand);
        while let Some(w) = common.min_vertex() {
            clique.insert(w);
            common = common.intersection(g.neighbors(w));
        }
        cand = cand.difference(clique);
        count += 1;
    }
    count
}

/// Minimum-degree greedy independent set inside `cand`.
fn greedy_independent(g: &Graph, mut cand: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| g.neighbors(v).intersection(cand).len())
            .expect("nonempty");
        out.insert(v);
        cand = cand.difference(g.neighbors(v)).without(v);
    }
    out
}

/// All independent sets of size exactly `k`, in lexicographic order.
pub fn independent_sets(g: &Graph, k: usize) -> Vec<VertexSet> {
    fn go(g: &Graph, chosen: VertexSet, allowed: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if chosen.len() == k {
            out.push(chosen);
            return;
        }
        if chosen.len() + allowed.len() < k {
            return;
        }
        for v in allowed.iter() {
            let rest = allowed.above(v).difference(g.neighbors(v));
            go(g, chosen.with(v), rest, k, out);
        }
    }
    let mut out = Vec::new();
    go(g, VertexSet::EMPTY, g.vertices(), k, &mut out);
    out
}

/// Reference independence number of `g[w]` by checking every subset.
/// Intended for small graphs (at most ~20 vertices in `w`).
pub fn exhaustive_independence_number(g: &Graph, w: VertexSet) -> usize {
    let members: Vec<usize> = w.iter().collect();
    assert!(members.len() <= 24, "exhaustive search on {} vertices", members.len());
    let mut best = 0;
    for mask in 0u64..(1u64 << members.len()) {
        let s: VertexSet = (0..members.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| members[i])
            .collect();
        if s.len() > best && g.is_independent(s) {
            best = s.len();
        }
    }
    best
}
