//! Square sequence graphs: a 4-cycle grown by gluing further 4-cycles along
//! an existing edge or an existing path of length two.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{make_grid, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GlueKind {
    Edge,
    Corner,
}

/// One gluing instruction. `attach` is `[u, y]` for edge gluing (an existing
/// edge) or `[u, y, v]` for corner gluing (an existing path with middle `y`).
/// New vertices take the next free indices, `x` before `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlueStep {
    pub kind: GlueKind,
    pub attach: Vec<usize>,
}

impl GlueStep {
    pub fn edge(u: usize, y: usize) -> Self {
        GlueStep {
            kind: GlueKind::Edge,
            attach: vec![u, y],
        }
    }

    pub fn corner(u: usize, y: usize, v: usize) -> Self {
        GlueStep {
            kind: GlueKind::Corner,
            attach: vec![u, y, v],
        }
    }
}

/// A materialized square `G_i` with edges `xu, xv, yu, yv`. `kind` is `None`
/// for the initial square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Square {
    pub kind: Option<GlueKind>,
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
}

impl Square {
    pub fn vertices(&self) -> [usize; 4] {
        [self.x, self.y, self.u, self.v]
    }

    /// The square minus the new vertices: the shared edge `{u, y}` for edge
    /// gluing, the shared path `u - y - v` for corner gluing.
    pub fn shared_vertices(&self) -> Vec<usize> {
        match self.kind {
            Some(GlueKind::Edge) => vec![self.u, self.y],
            Some(GlueKind::Corner) => vec![self.u, self.y, self.v],
            None => vec![],
        }
    }

    pub fn edges(&self) -> [(usize, usize); 4] {
        [
            (self.x, self.u),
            (self.x, self.v),
            (self.y, self.u),
            (self.y, self.v),
        ]
    }
}

/// `H_1 ⊆ .. ⊆ H_n` together with the squares `G_1 .. G_n`.
///
/// The vertices of `H_i` are exactly `0..|V(H_i)|`, so every `H_i` is an
/// induced subgraph of `H_n` on a prefix of the vertex indices.
#[derive(Clone, Debug)]
pub struct SquareSequence {
    steps: Vec<GlueStep>,
    graphs: Vec<Graph>,
    squares: Vec<Square>,
}

impl SquareSequence {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn steps(&self) -> &[GlueStep] {
        &self.steps
    }

    /// `H_i` for `1 <= i <= len`.
    pub fn graph(&self, i: usize) -> &Graph {
        &self.graphs[i - 1]
    }

    /// `G_i` for `1 <= i <= len`.
    pub fn square(&self, i: usize) -> &Square {
        &self.squares[i - 1]
    }

    pub fn last(&self) -> &Graph {
        self.graphs.last().expect("at least the initial square")
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn is_edge_only(&self) -> bool {
        self.steps.iter().all(|s| s.kind == GlueKind::Edge)
    }
}

fn initial_square() -> (Graph, Square) {
    let g = Graph::cycle(4).expect("C4");
    // x = 0 is adjacent to u = 1 and v = 3; y = 2 is opposite x.
    let sq = Square {
        kind: None,
        x: 0,
        y: 2,
        u: 1,
        v: 3,
    };
    (g, sq)
}

/// Materializes and validates a gluing script.
pub fn build_square_sequence(script: &[GlueStep]) -> Result<SquareSequence> {
    let (h1, sq1) = initial_square();
    let mut graphs = vec![h1];
    let mut squares = vec![sq1];
    for (step, glue) in script.iter().enumerate() {
        let prev = graphs.last().expect("nonempty");
        let invalid = |reason: String| Error::InvalidAttachment { step, reason };
        let n = prev.vertex_count();
        for &a in &glue.attach {
            if a >= n {
                return Err(invalid(format!("vertex {a} does not exist (graph has {n})")));
            }
        }
        let mut next = prev.clone();
        let square = match (glue.kind, glue.attach.as_slice()) {
            (GlueKind::Edge, &[u, y]) => {
                if !prev.has_edge(u, y) {
                    return Err(invalid(format!("{{{u},{y}}} is not an edge")));
                }
                let x = next.add_vertex()?;
                let v = next.add_vertex()?;
                next.add_edge(x, u)?;
                next.add_edge(x, v)?;
                next.add_edge(v, y)?;
                Square {
                    kind: Some(GlueKind::Edge),
                    x,
                    y,
                    u,
                    v,
                }
            }
            (GlueKind::Corner, &[u, y, v]) => {
                if u == v {
                    return Err(invalid(format!("path endpoints coincide ({u})")));
                }
                if !prev.has_edge(u, y) {
                    return Err(invalid(format!("{{{u},{y}}} is not an edge")));
                }
                if !prev.has_edge(v, y) {
                    return Err(invalid(format!("{{{v},{y}}} is not an edge")));
                }
                let x = next.add_vertex()?;
                next.add_edge(x, u)?;
                next.add_edge(x, v)?;
                Square {
                    kind: Some(GlueKind::Corner),
                    x,
                    y,
                    u,
                    v,
                }
            }
            (kind, attach) => {
                return Err(invalid(format!(
                    "{kind:?} gluing needs {} attachment vertices, got {}",
                    if kind == GlueKind::Edge { 2 } else { 3 },
                    attach.len()
                )))
            }
        };
        debug_assert_eq!(next.cycle_rank(), graphs.len() + 1);
        graphs.push(next);
        squares.push(square);
    }
    Ok(SquareSequence {
        steps: script.to_vec(),
        graphs,
        squares,
    })
}

/// Every step that could be applied to `g`: both orientations of every edge
/// for edge gluing, and every path `u - y - v` (`u < v`) for corner gluing.
pub fn valid_attachments(g: &Graph) -> Vec<GlueStep> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        out.push(GlueStep::edge(a, b));
        out.push(GlueStep::edge(b, a));
    }
    for y in 0..g.vertex_count() {
        let nb: Vec<usize> = g.neighbors(y).iter().collect();
        for (i, &u) in nb.iter().enumerate() {
            for &v in &nb[i + 1..] {
                out.push(GlueStep::corner(u, y, v));
            }
        }
    }
    out
}

/// A sequence of the given length whose every step is drawn uniformly from
/// [`valid_attachments`] of the current graph.
pub fn random_square_sequence<R: Rng + ?Sized>(length: usize, rng: &mut R) -> SquareSequence {
    random_with(length, rng, |_| true)
}

/// As [`random_square_sequence`], restricted to edge gluing.
pub fn random_edge_sequence<R: Rng + ?Sized>(length: usize, rng: &mut R) -> SquareSequence {
    random_with(length, rng, |s| s.kind == GlueKind::Edge)
}

fn random_with<R: Rng + ?Sized>(
    length: usize,
    rng: &mut R,
    keep: impl Fn(&GlueStep) -> bool,
) -> SquareSequence {
    assert!(length >= 1, "a square sequence has length at least 1");
    let mut script = Vec::new();
    let mut g = initial_square().0;
    for _ in 1..length {
        let options: Vec<GlueStep> = valid_attachments(&g).into_iter().filter(&keep).collect();
        let step = options.choose(rng).expect("C4 always admits attachments").clone();
        script.push(step);
        g = build_square_sequence(&script).expect("valid by construction").last().clone();
    }
    build_square_sequence(&script).expect("valid by construction")
}

/// The canonical sequence of the `m x n` grid: squares row by row from the
/// bottom, each row left to right. The first row and the first square of
/// every row are edge-glued, all others corner-glued. Every `H_i` carries
/// `"(i,j)"` coordinate labels.
pub fn grid_sequence(m: usize, n: usize) -> Result<SquareSequence> {
    if m < 2 || n < 2 {
        return Err(Error::GridTooSmall { m, n });
    }
    // seq index of grid coordinate (i, j), 1-based coordinates
    let mut index = vec![vec![usize::MAX; n + 1]; m + 1];
    index[1][1] = 0;
    index[1][2] = 1;
    index[2][2] = 2;
    index[2][1] = 3;
    let mut next = 4;
    let mut script = Vec::new();
    for a in 1..m {
        for b in 1..n {
            if a == 1 && b == 1 {
                continue;
            }
            if a == 1 {
                // shared left side (1,b)-(2,b); x = (1,b+1), v = (2,b+1)
                script.push(GlueStep::edge(index[1][b], index[2][b]));
                index[1][b + 1] = next;
                index[2][b + 1] = next + 1;
                next += 2;
            } else if b == 1 {
                // shared bottom side (a,1)-(a,2); x = (a+1,1), v = (a+1,2)
                script.push(GlueStep::edge(index[a][1], index[a][2]));
                index[a + 1][1] = next;
                index[a + 1][2] = next + 1;
                next += 2;
            } else {
                // path (a,b+1) - (a,b) - (a+1,b); x = (a+1,b+1)
                script.push(GlueStep::corner(
                    index[a][b + 1],
                    index[a][b],
                    index[a + 1][b],
                ));
                index[a + 1][b + 1] = next;
                next += 1;
            }
        }
    }
    let mut seq = build_square_sequence(&script)?;
    let mut labels = vec![String::new(); m * n];
    for (i, row) in index.iter().enumerate().skip(1) {
        for (j, &v) in row.iter().enumerate().skip(1) {
            labels[v] = format!("({i},{j})");
        }
    }
    for g in &mut seq.graphs {
        for v in 0..g.vertex_count() {
            g.set_label(v, labels[v].clone())?;
        }
    }
    Ok(seq)
}

/// Reads the `"(i,j)"` labels of `g` as row-major grid indices and checks that
/// this relabeling maps `g` exactly onto `make_grid(m, n)`. Returns the map
/// (sequence vertex -> grid vertex) on success.
pub fn grid_isomorphism(g: &Graph, m: usize, n: usize) -> Option<Vec<usize>> {
    let grid = make_grid(m, n).ok()?;
    if g.vertex_count() != grid.vertex_count() || g.edge_count() != grid.edge_count() {
        return None;
    }
    let mut map = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let label = g.label(v)?;
        let (i, j) = label.strip_prefix('(')?.strip_suffix(')')?.split_once(',')?;
        let (i, j): (usize, usize) = (i.trim().parse().ok()?, j.trim().parse().ok()?);
        if !(1..=m).contains(&i) || !(1..=n).contains(&j) {
            return None;
        }
        map.push((i - 1) * n + (j - 1));
    }
    let mut seen = vec![false; map.len()];
    for &t in &map {
        if std::mem::replace(&mut seen[t], true) {
            return None;
        }
    }
    g.edges()
        .iter()
        .all(|&(u, v)| grid.has_edge(map[u], map[v]))
        .then_some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn empty_script_is_c4() {
        let s = build_square_sequence(&[]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.last(), &Graph::cycle(4).unwrap());
        let sq = s.square(1);
        for (a, b) in sq.edges() {
            assert!(s.last().has_edge(a, b));
        }
    }

    #[test]
    fn one_edge_step_gives_ladder() {
        let s = build_square_sequence(&[GlueStep::edge(0, 1)]).unwrap();
        let h2 = s.graph(2);
        assert_eq!((h2.vertex_count(), h2.edge_count()), (6, 7));
        let sq = s.square(2);
        assert_eq!((sq.u, sq.y, sq.x, sq.v), (0, 1, 4, 5));
        for (a, b) in sq.edges() {
            assert!(h2.has_edge(a, b));
        }
        // same degree sequence as the 2x3 grid
        let mut deg: Vec<usize> = (0..6).map(|v| h2.neighbors(v).len()).collect();
        let grid = make_grid(2, 3).unwrap();
        let mut gdeg: Vec<usize> = (0..6).map(|v| grid.neighbors(v).len()).collect();
        deg.sort();
        gdeg.sort();
        assert_eq!(deg, gdeg);
    }

    #[test]
    fn invalid_attachments() {
        // {0,2} is a diagonal of the initial C4
        let err = build_square_sequence(&[GlueStep::corner(0, 2, 1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAttachment { step: 0, .. }));
        let err = build_square_sequence(&[GlueStep::edge(0, 2)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAttachment { .. }));
        let err = build_square_sequence(&[GlueStep::edge(0, 9)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAttachment { .. }));
        let err = build_square_sequence(&[GlueStep::corner(1, 0, 1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAttachment { .. }));
        let bad = GlueStep {
            kind: GlueKind::Edge,
            attach: vec![0, 1, 2],
        };
        assert!(build_square_sequence(&[bad]).is_err());
        let err =
            build_square_sequence(&[GlueStep::edge(0, 1), GlueStep::corner(4, 0, 2)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAttachment { step: 1, .. }));
    }

    #[test]
    fn grid_sequences() {
        let s = grid_sequence(2, 2).unwrap();
        assert_eq!(s.len(), 1);
        let s = grid_sequence(3, 3).unwrap();
        assert_eq!(s.len(), 4);
        let kinds: Vec<_> = s.squares().iter().map(|q| q.kind).collect();
        assert_eq!(
            kinds,
            vec![
                None,
                Some(GlueKind::Edge),
                Some(GlueKind::Edge),
                Some(GlueKind::Corner)
            ]
        );
        for n in 2..7 {
            let s = grid_sequence(2, n).unwrap();
            assert_eq!(s.len(), n - 1);
            assert!(s.is_edge_only());
        }
        for m in 2..6 {
            for n in 2..6 {
                let s = grid_sequence(m, n).unwrap();
                assert_eq!(s.len(), (m - 1) * (n - 1));
                let g = s.last();
                assert_eq!(g.vertex_count(), m * n);
                assert_eq!(g.edge_count(), m * (n - 1) + n * (m - 1));
                assert!(grid_isomorphism(g, m, n).is_some(), "{m}x{n}");
            }
        }
        assert!(grid_sequence(1, 3).is_err());
    }

    #[test]
    fn grid_corner_steps_have_one_common_neighbor() {
        let s = grid_sequence(4, 5).unwrap();
        for i in 2..=s.len() {
            let sq = s.square(i);
            if sq.kind == Some(GlueKind::Corner) {
                assert_eq!(s.graph(i - 1).common_neighbors(sq.u, sq.v).len(), 1);
            }
        }
    }

    #[test]
    fn isomorphism_rejects_wrong_labels() {
        let s = grid_sequence(3, 3).unwrap();
        let mut g = s.last().clone();
        g.set_label(0, "(3,3)").unwrap();
        assert!(grid_isomorphism(&g, 3, 3).is_none());
        assert!(grid_isomorphism(s.last(), 3, 4).is_none());
    }

    #[test]
    fn random_sequences_are_well_formed() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for len in 1..=7 {
            for _ in 0..10 {
                let s = random_square_sequence(len, &mut rng);
                assert_eq!(s.len(), len);
                for i in 1..=len {
                    let h = s.graph(i);
                    assert!(h.is_connected());
                    assert!(h.is_bipartite());
                    assert!(h.is_triangle_free());
                    assert_eq!(h.cycle_rank(), i);
                }
                let e = random_edge_sequence(len, &mut rng);
                assert!(e.is_edge_only());
            }
        }
    }
}
