//! Rank of small rational matrices by Gaussian elimination.

use num_traits::Zero;

use crate::rational::Rational;

/// Rank of a dense row-major matrix; consumes it.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let inv = pivot_row[col].recip();
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
