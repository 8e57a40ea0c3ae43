//! Dense rank computation over F_p.

use crate::polyring::PrimeField;

/// Rank of a row-major matrix by Gaussian elimination. Consumes the rows.
pub fn rank_mod_p(field: PrimeField, mut rows: Vec<Vec<u64>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for r in (rank + 1)..nrows {
            let factor = rows[r][col];
            if factor == 0 {
                continue;
            }
            let scale = field.mul(factor, inv);
            for c in col..ncols {
                let sub = field.mul(scale, rows[rank][c]);
                rows[r][c] = field.sub(rows[r][c], sub);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_of_small_matrices() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(rank_mod_p(f, vec![]), 0);
        assert_eq!(rank_mod_p(f, vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_mod_p(f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_mod_p(f, vec![vec![1, 2], vec![2, 5]]), 2);
        // 3 = 10 mod 7 makes the rows dependent mod 7 only
        assert_eq!(rank_mod_p(f, vec![vec![1, 3], vec![3, 2]]), 1);
    }
}
