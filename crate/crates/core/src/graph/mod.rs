//! Simple undirected graphs over at most 64 vertices, with the independence,
//! matching and square-sequence machinery the complexes are built on.

mod grid;
mod independence;
mod matching;
mod square_sequence;

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

pub use grid::make_grid;
pub use independence::{exhaustive_independence_number, independent_sets};
pub use matching::{maximum_matching, minimum_vertex_cover};
pub use square_sequence::{
    build_square_sequence, grid_isomorphism, grid_sequence, random_edge_sequence,
    random_square_sequence, valid_attachments, GlueKind, GlueStep, Square, SquareSequence,
};

/// A simple undirected graph with dense bitmask adjacency.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: BTreeMap<usize, String>,
}

impl Graph {
    pub fn new(vertex_count: usize) -> Result<Self> {
        if vertex_count > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(vertex_count));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; vertex_count],
            labels: BTreeMap::new(),
        })
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(vertex_count)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The cycle `C_n` on `0..n` with edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> Result<usize> {
        if self.adj.len() == MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(MAX_UNIVERSE + 1));
        }
        self.adj.push(VertexSet::EMPTY);
        Ok(self.adj.len() - 1)
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop((u, v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.adj.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                universe: self.adj.len(),
            });
        }
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.adj.len())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Whether `w` spans no edge.
    pub fn is_independent(&self, w: VertexSet) -> bool {
        w.iter().all(|v| self.adj[v].is_disjoint(w))
    }

    /// Edges with both endpoints in `w`.
    pub fn edges_within(&self, w: VertexSet) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in w.iter() {
            out.extend(
                self.adj[u]
                    .intersection(w)
                    .iter()
                    .filter(|&v| v > u)
                    .map(|v| (u, v)),
            );
        }
        out
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) -> Result<()> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    /// The induced subgraph on `w`, re-indexed in ascending order.
    pub fn induced_subgraph(&self, w: VertexSet) -> Result<InducedSubgraph> {
        if let Some(m) = w.max_vertex() {
            self.check_vertex(m)?;
        }
        let vertices: Vec<usize> = w.iter().collect();
        let mut position = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut graph = Graph::new(vertices.len())?;
        for (i, &v) in vertices.iter().enumerate() {
            graph.adj[i] = self.adj[v].intersection(w).map(&position);
            if let Some(l) = self.labels.get(&v) {
                graph.labels.insert(i, l.clone());
            }
        }
        Ok(InducedSubgraph { graph, vertices })
    }

    /// Vertices adjacent to both `u` and `v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> VertexSet {
        self.adj[u].intersection(self.adj[v])
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]));
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.adj.is_empty() || self.component_of(0) == self.vertices()
    }

    pub fn component_count(&self) -> usize {
        let mut rest = self.vertices();
        let mut count = 0;
        while let Some(v) = rest.min_vertex() {
            rest = rest.difference(self.component_of(v));
            count += 1;
        }
        count
    }

    /// `|E| - |V| + c`, the dimension of the cycle space.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .into_iter()
            .all(|(u, v)| self.common_neighbors(u, v).is_empty())
    }

    /// Breadth-first 2-colouring, or an odd cycle as witness.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Err(Error::OddCycle(odd_cycle(&parent, u, w)));
                    }
                }
            }
        }
        Ok(Bipartition { side })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_ok()
    }
}

/// Joins the tree paths from `u` and `w` to their lowest common ancestor.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let ancestors = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let pu = ancestors(u);
    let pw = ancestors(w);
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    // pu[i] == pw[j] is the common ancestor
    let mut cycle: Vec<usize> = pu[..=i].to_vec();
    cycle.extend(pw[..j].iter().rev());
    cycle
}

/// A graph re-indexed onto a vertex subset; `vertices[i]` is the original
/// vertex behind new vertex `i`.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// A proper 2-colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    #[inline]
    pub fn side(&self, v: usize) -> u8 {
        self.side[v]
    }

    pub fn part(&self, side: u8) -> VertexSet {
        self.side
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == side)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.side[u] != self.side[v])
    }
}
