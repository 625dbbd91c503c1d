//! Published counts of unlabeled k-trees, `K_{n,k}` for `n = 0..=9`.
//!
//! The same values appear in the OEIS as A000055 (k=1), A054581 (k=2),
//! A078792 (k=3), A078793 (k=4), A201702 (k=5) and A224917 (stable row).
//! Note that `n` counts hedra; a k-tree with `n` hedra has `n + k` vertices.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReferenceData {
    /// `rows[k - 1][n]` is `K_{n,k}`.
    pub rows: [[u64; 10]; 5],
    /// `K_{n,k}` once it no longer depends on `k`.
    pub stable: [u64; 10],
}

pub const TABLE1: ReferenceData = ReferenceData {
    rows: [
        [1, 1, 1, 2, 3, 6, 11, 23, 47, 106],
        [1, 1, 1, 2, 5, 12, 39, 136, 529, 2171],
        [1, 1, 1, 2, 5, 15, 58, 275, 1505, 9003],
        [1, 1, 1, 2, 5, 15, 64, 331, 2150, 15817],
        [1, 1, 1, 2, 5, 15, 64, 342, 2321, 18578],
    ],
    stable: [1, 1, 1, 2, 5, 15, 64, 342, 2344, 19137],
};

impl ReferenceData {
    pub fn max_k(&self) -> usize {
        self.rows.len()
    }

    pub fn max_n(&self) -> usize {
        self.stable.len() - 1
    }

    pub fn row(&self, k: usize) -> Option<&[u64; 10]> {
        k.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn cell_count(&self) -> usize {
        (self.rows.len() + 1) * self.stable.len()
    }
}
