//! Exact row echelon reduction over the integers.
//!
//! Rows are stored sparsely and divided by their content after every update,
//! which keeps entries small on incidence-type matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactMatrix;

type SparseRow = Vec<(usize, BigInt)>;

/// Pivot rows and columns of an echelon reduction.
///
/// `rows[t]` and `cols[t]` are original indices and the square submatrix
/// `m[rows, cols]` is nonsingular; its size is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivots {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Pivots {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn normalize(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `a * row - b * pivot`, dropping cancelled entries.
fn combine(row: &SparseRow, a: &BigInt, pivot: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, a * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &row[i - 1].1 - b * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

fn cost(row: &SparseRow) -> (usize, u64) {
    (row.len(), row[0].1.bits())
}

/// Echelon reduction returning pivot rows and columns.
pub fn pivots(m: &ExactMatrix) -> Pivots {
    let mut active: Vec<(usize, SparseRow)> = (0..m.rows())
        .filter_map(|i| {
            let row: SparseRow =
                m.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect();
            (!row.is_empty()).then(|| {
                let mut row = row;
                normalize(&mut row);
                (i, row)
            })
        })
        .collect();
    let mut out = Pivots { rows: Vec::new(), cols: Vec::new() };
    for col in 0..m.cols() {
        let mut best: Option<usize> = None;
        for (k, (_, row)) in active.iter().enumerate() {
            if row[0].0 == col && best.is_none_or(|b| cost(row) < cost(&active[b].1)) {
                best = Some(k);
            }
        }
        let Some(b) = best else { continue };
        let (orig, pivot) = active.swap_remove(b);
        let p = &pivot[0].1;
        let mut next = Vec::with_capacity(active.len());
        for (i, row) in active.drain(..) {
            if row[0].0 != col {
                next.push((i, row));
                continue;
            }
            let g = p.gcd(&row[0].1);
            let a = p / &g;
            let c = &row[0].1 / &g;
            let mut r = combine(&row, &a, &pivot, &c);
            if !r.is_empty() {
                normalize(&mut r);
                if r[0].1.is_negative() {
                    r.iter_mut().for_each(|e| e.1 = -&e.1);
                }
                next.push((i, r));
            }
        }
        active = next;
        out.rows.push(orig);
        out.cols.push(col);
        if active.is_empty() {
            break;
        }
    }
    out
}

/// Exact rank over the rationals.
pub fn rank(m: &ExactMatrix) -> usize {
    pivots(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_cycle_incidence() {
        // d_0 of C_4: edges (0,1),(0,3),(1,2),(2,3)
        let d = ExactMatrix::from_rows(&[[-1, 1, 0, 0], [-1, 0, 0, 1], [0, -1, 1, 0], [0, 0, -1, 1]]);
        assert_eq!(rank(&d), 3);
        assert_eq!(rank(&ExactMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn pivot_submatrix_is_nonsingular() {
        let m = ExactMatrix::from_rows(&[[2, 4, 1], [1, 2, 0], [3, 6, 1], [0, 0, 5]]);
        let p = pivots(&m);
        assert_eq!(p.rank(), 2);
        let sub = m.submatrix(&p.rows, &p.cols);
        assert!(!super::super::modular::det(&sub).unwrap().is_zero());
    }
}
