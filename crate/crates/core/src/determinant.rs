//! Divisionless determinants over a commutative ring.
//!
//! Laplace expansion along the last used row, memoized over column subsets: the
//! minor on rows `0..r` and column set `S` (|S| = r) is
//! `Σ_{j∈S} (−1)^{pos(j, S) + r − 1} · M[r−1][j] · minor(S∖{j})`.
//! This costs O(2ⁿ·n) ring multiplications and never divides.

use crate::scalar::Ring;

/// Largest supported matrix order; subset tables are indexed by `u32` bitmasks.
pub const MAX_ORDER: usize = 20;

/// Determinant of the square matrix `rows[i][j]`. An empty matrix has determinant one.
///
/// Panics if the matrix is not square or exceeds [`MAX_ORDER`].
pub fn det<T: Ring>(rows: &[Vec<T>]) -> T {
    let n = rows.len();
    assert!(n <= MAX_ORDER, "matrix order {n} exceeds {MAX_ORDER}");
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return T::one();
    }

    // layer[mask] holds the minor for column set `mask` on rows 0..popcount(mask).
    let size = 1usize << n;
    let mut prev: Vec<Option<T>> = vec![None; size];
    prev[0] = Some(T::one());
    for r in 1..=n {
        let mut next: Vec<Option<T>> = vec![None; size];
        let row = &rows[r - 1];
        for mask in 1..size as u32 {
            if mask.count_ones() as usize != r {
                continue;
            }
            let mut acc = T::zero();
            let mut pos = 0usize;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = &row[j];
                let sub = prev[(mask & !(1 << j)) as usize]
                    .as_ref()
                    .expect("sub-minor computed in previous layer");
                if !entry.is_zero() && !sub.is_zero() {
                    let term = entry.mul(sub);
                    // Sign of the cofactor at (r−1, pos) within this r×r minor.
                    acc = if (pos + r - 1).is_multiple_of(2) {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                pos += 1;
            }
            next[mask as usize] = Some(acc);
        }
        prev = next;
    }
    prev[size - 1].take().expect("full minor")
}
