use super::Graph;
use crate::error::{Error, Result};

/// The `m x n` grid graph. Vertex `(i, j)` (1-based) gets index
/// `(i - 1) * n + (j - 1)` and the label `"(i,j)"`.
///
/// Paths are not grids: both sides must be at least 2.
pub fn make_grid(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || n < 2 {
        return Err(Error::GridTooSmall { m, n });
    }
    let mut g = Graph::new(m * n)?;
    let idx = |i: usize, j: usize| (i - 1) * n + (j - 1);
    for i in 1..=m {
        for j in 1..=n {
            g.set_label(idx(i, j), format!("({i},{j})"))?;
            if j < n {
                g.add_edge(idx(i, j), idx(i, j + 1))?;
            }
            if i < m {
                g.add_edge(idx(i, j), idx(i + 1, j))?;
            }
        }
    }
    Ok(g)
}
