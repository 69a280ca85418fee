//! Bit-packed vectors and matrices over GF(2).
//!
//! Qubit/column index `i` maps to word `i / 64`, bit `i % 64`. Everything the
//! rest of the crate does with syndromes, stabiliser supports and kernels
//! bottoms out in the word-level XOR loops here.

/// A fixed-length bit vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of the AND of two vectors, i.e. the GF(2) inner product.
    #[inline]
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Number of positions where both vectors are set.
    pub fn and_count(&self, other: &BitVec) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Keep only the given positions, reindexed in order.
    pub fn select(&self, positions: &[usize]) -> BitVec {
        let mut out = BitVec::zeros(positions.len());
        for (new, &old) in positions.iter().enumerate() {
            if self.get(old) {
                out.set(new, true);
            }
        }
        out
    }
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A dense GF(2) matrix stored as rows of [`BitVec`].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BitMatrix {
    pub cols: usize,
    pub rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        BitMatrix { cols, rows: Vec::new() }
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { cols, rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitVec::from_indices(n, [i])).collect();
        BitMatrix { cols: n, rows }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, row: BitVec) {
        debug_assert_eq!(row.len(), self.cols);
        self.rows.push(row);
    }

    /// In-place reduction to reduced row-echelon form.
    ///
    /// Returns the rank and the pivot column of each pivot row.
    pub fn row_reduce(&mut self) -> (usize, Vec<usize>) {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..self.rows.len()).find(|&i| self.rows[i].get(c)) else {
                continue;
            };
            self.rows.swap(r, p);
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows.len() {
                break;
            }
        }
        (r, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().0
    }

    /// Basis of the kernel of the transpose action: all `v` with `v · M = 0`,
    /// where `v` ranges over GF(2)^rows.
    ///
    /// Equivalently the left null space; this is what redundancy bases are.
    pub fn left_kernel(&self) -> Vec<BitVec> {
        // Row reduce [M | I] and read off the identity block rows where M vanished.
        let n_rows = self.rows.len();
        let mut aug = BitMatrix::new(self.cols + n_rows);
        for (i, row) in self.rows.iter().enumerate() {
            let mut a = BitVec::zeros(self.cols + n_rows);
            for j in row.iter_ones() {
                a.set(j, true);
            }
            a.set(self.cols + i, true);
            aug.push_row(a);
        }
        // Eliminate on the first `cols` columns only.
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..aug.rows.len()).find(|&i| aug.rows[i].get(c)) else {
                continue;
            };
            aug.rows.swap(r, p);
            let pivot_row = aug.rows[r].clone();
            for (i, row) in aug.rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            r += 1;
        }
        aug.rows[r..]
            .iter()
            .map(|row| row.select(&(self.cols..self.cols + n_rows).collect::<Vec<_>>()))
            .collect()
    }

    /// Basis of the right null space: all `v` with `M · v = 0`.
    pub fn kernel(&self) -> Vec<BitVec> {
        self.transposed().left_kernel()
    }

    pub fn transposed(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.rows.len());
        for c in 0..self.cols {
            let mut row = BitVec::zeros(self.rows.len());
            for (i, r) in self.rows.iter().enumerate() {
                if r.get(c) {
                    row.set(i, true);
                }
            }
            t.push_row(row);
        }
        t
    }

    /// Reduce `v` against the rows of an already row-reduced matrix.
    pub fn reduce_vector(&self, v: &BitVec, pivots: &[usize]) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    /// True if `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVec) -> bool {
        let mut m = self.clone();
        let (_, pivots) = m.row_reduce();
        m.reduce_vector(v, &pivots).is_zero()
    }

    /// Canonical form of the row space (reduced echelon rows, zero rows dropped).
    pub fn row_space_canonical(&self) -> BitMatrix {
        let mut m = self.clone();
        let (rank, _) = m.row_reduce();
        m.rows.truncate(rank);
        m
    }
}
