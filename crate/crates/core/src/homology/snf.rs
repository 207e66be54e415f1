//! Exact Smith normal form over the integers.
//!
//! Elimination runs in two phases. The sparse phase repeatedly pivots on
//! entries equal to ±1: clearing the pivot row by column operations leaves
//! the pivot alone in its row and column, so both can be dropped and the
//! invariant factor 1 recorded. Entries are machine integers with checked
//! arithmetic; on overflow the phase restarts with arbitrary-precision
//! entries. Whatever remains goes through a dense elimination over `BigInt`
//! that always pivots on the smallest nonzero magnitude.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Rank and invariant factors `d_1 | d_2 | .. | d_r` (all positive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    /// Invariant factors greater than 1.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form of a dense integer matrix.
pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let columns: Vec<Vec<(usize, i64)>> = (0..cols)
        .map(|j| {
            (0..rows)
                .filter(|&i| m[i][j] != 0)
                .map(|i| (i, m[i][j]))
                .collect()
        })
        .collect();
    smith_normal_form_sparse(rows, columns)
}

/// Smith normal form of a matrix given by sorted sparse columns.
pub fn smith_normal_form_sparse(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> SmithForm {
    let (units, residual) = match unit_phase(rows, columns.clone()) {
        Some(r) => r,
        None => {
            let big = columns
                .into_iter()
                .map(|c| c.into_iter().map(|(i, v)| (i, BigInt::from(v))).collect())
                .collect();
            unit_phase(rows, big).expect("BigInt arithmetic does not overflow")
        }
    };
    let mut factors = vec![BigInt::one(); units];
    factors.extend(dense_snf(residual));
    SmithForm {
        rank: factors.len(),
        invariant_factors: factors,
    }
}

trait Scalar: Clone + std::fmt::Debug {
    fn vanishes(&self) -> bool;
    fn is_pm_one(&self) -> bool;
    /// `self * other`, or `None` on overflow.
    fn mul(&self, other: &Self) -> Option<Self>;
    /// `self - other`, or `None` on overflow.
    fn sub(&self, other: &Self) -> Option<Self>;
    /// `-self`, or `None` on overflow.
    fn neg(&self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_pm_one(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_pm_one(&self) -> bool {
        self.abs().is_one()
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Unit-pivot elimination. Returns the number of unit pivots and the
/// remaining nonzero block as a dense matrix, or `None` on overflow.
fn unit_phase<T: Scalar>(
    rows: usize,
    mut cols: Vec<Vec<(usize, T)>>,
) -> Option<(usize, Vec<Vec<BigInt>>)> {
    // row -> columns that may hold an entry there; entries can go stale
    let mut row_cols: Vec<Vec<usize>> = vec![Vec::new(); rows];
    for (j, col) in cols.iter().enumerate() {
        for (i, _) in col {
            row_cols[*i].push(j);
        }
    }
    let mut col_alive = vec![true; cols.len()];
    let mut units = 0usize;
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&j| cols[j].len());

    let mut progress = true;
    while progress {
        progress = false;
        for &c in &order {
            if !col_alive[c] || cols[c].is_empty() {
                continue;
            }
            // unit entry in the sparsest row
            let Some((r, p)) = cols[c]
                .iter()
                .filter(|(_, v)| v.is_pm_one())
                .min_by_key(|(i, _)| row_cols[*i].len())
                .map(|(i, v)| (*i, v.clone()))
            else {
                continue;
            };
            let pivot_col = std::mem::take(&mut cols[c]);
            col_alive[c] = false;
            let mut others = std::mem::take(&mut row_cols[r]);
            others.sort_unstable();
            others.dedup();
            for j in others {
                if j == c || !col_alive[j] {
                    continue;
                }
                let Ok(pos) = cols[j].binary_search_by_key(&r, |(i, _)| *i) else {
                    continue;
                };
                // p is its own inverse
                let factor = cols[j][pos].1.mul(&p)?;
                let merged = axpy(&cols[j], &factor, &pivot_col)?;
                for (i, _) in &merged {
                    if cols[j].binary_search_by_key(i, |(k, _)| *k).is_err() {
                        row_cols[*i].push(j);
                    }
                }
                cols[j] = merged;
            }
            units += 1;
            progress = true;
        }
        if progress {
            for (i, list) in row_cols.iter_mut().enumerate() {
                list.sort_unstable();
                list.dedup();
                list.retain(|&j| {
                    col_alive[j] && cols[j].binary_search_by_key(&i, |(k, _)| *k).is_ok()
                });
            }
        }
    }

    let live: Vec<usize> = (0..cols.len())
        .filter(|&j| col_alive[j] && !cols[j].is_empty())
        .collect();
    let mut live_rows: Vec<usize> = live
        .iter()
        .flat_map(|&j| cols[j].iter().map(|(i, _)| *i))
        .collect();
    live_rows.sort_unstable();
    live_rows.dedup();
    let mut dense = vec![vec![BigInt::zero(); live.len()]; live_rows.len()];
    for (jj, &j) in live.iter().enumerate() {
        for (i, v) in &cols[j] {
            let ii = live_rows.binary_search(i).expect("collected");
            dense[ii][jj] = v.to_big();
        }
    }
    Some((units, dense))
}

/// `a - f * b` on sorted sparse columns, dropping zeros.
fn axpy<T: Scalar>(a: &[(usize, T)], f: &T, b: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        if y == b.len() || (x < a.len() && a[x].0 < b[y].0) {
            out.push(a[x].clone());
            x += 1;
        } else if x == a.len() || b[y].0 < a[x].0 {
            out.push((b[y].0, f.mul(&b[y].1)?.neg()?));
            y += 1;
        } else {
            let v = a[x].1.sub(&f.mul(&b[y].1)?)?;
            if !v.vanishes() {
                out.push((a[x].0, v));
            }
            x += 1;
            y += 1;
        }
    }
    Some(out)
}

/// Dense Smith normal form over `BigInt`; returns the nonzero diagonal.
fn dense_snf(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut moved = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..n {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    moved = true;
                }
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            // the pivot must divide the rest of the block
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if v.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}
