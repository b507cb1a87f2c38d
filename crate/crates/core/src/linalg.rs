//! Exact row reduction over ℚ(i).

use num_traits::Zero;

use crate::coeff::GaussianRational;

/// Rank of a dense matrix given as rows.
pub fn rank(rows: &[Vec<GaussianRational>]) -> usize {
    let mut m: Vec<Vec<GaussianRational>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        let pivot_row: Vec<GaussianRational> = m[rank].iter().map(|c| c * &inv).collect();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot_row) {
                *c -= &(&factor * p);
            }
        }
        m[rank] = pivot_row;
        rank += 1;
    }
    rank
}
