use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// The boundary map from `dim`-faces to `(dim - 1)`-faces, stored by column.
///
/// Rows and columns follow the sorted face order of the complex. For
/// `dim == 0` there is a single row, the empty face, and every entry is 1
/// (the augmentation map).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub rows: usize,
    /// `columns[j]` lists `(row, ±1)` sorted by row.
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m[i][j] = s as i64;
            }
        }
        m
    }

    /// Debug dump: a `dim rows cols nnz` header line, then one `row col value`
    /// triplet per line in row-major order.
    pub fn dump(&self) -> String {
        let mut triplets: Vec<(usize, usize, i8)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |&(i, s)| (i, j, s)))
            .collect();
        triplets.sort_unstable();
        let mut out = format!("dim {} {} {} {}\n", self.dim, self.rows, self.cols(), triplets.len());
        for (i, j, s) in triplets {
            writeln!(out, "{i} {j} {s}").expect("write to string");
        }
        out
    }
}

/// `∂_0 .. ∂_dim` for a nonvoid complex. Removing the `j`-th smallest vertex
/// of a face contributes sign `(-1)^j`.
pub fn boundary_matrices(k: &SimplicialComplex) -> Result<Vec<BoundaryMatrix>> {
    if k.is_void() {
        return Err(Error::VoidComplex);
    }
    let dim = k.dimension().expect("nonvoid");
    let mut out = Vec::new();
    if dim < 0 {
        return Ok(out);
    }
    out.push(BoundaryMatrix {
        dim: 0,
        rows: 1,
        columns: vec![vec![(0, 1)]; k.faces(0).len()],
    });
    for d in 1..=dim as usize {
        let columns = k
            .faces(d)
            .iter()
            .map(|&f| {
                let mut col: Vec<(usize, i8)> = f
                    .iter()
                    .enumerate()
                    .map(|(j, v)| {
                        let row = k.position(f.without(v)).expect("downward closed");
                        (row, if j % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|&(r, _)| r);
                col
            })
            .collect();
        out.push(BoundaryMatrix {
            dim: d,
            rows: k.faces(d - 1).len(),
            columns,
        });
    }
    Ok(out)
}
