//! Dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::rational::Rat;

/// Rank by Gaussian elimination; rows may have any common length.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = a[rank][col].recip();
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (entry, p) in row[col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *entry -= &factor * p;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
    }
}
