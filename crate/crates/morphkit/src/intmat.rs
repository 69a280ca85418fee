//! Integer matrix normal forms: Hermite (lower-triangular, row convention)
//! and Smith, plus integer kernels. Sizes here are tiny (m <= 6), so the
//! arithmetic is plain i64 with overflow checks left to debug builds.

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[a] += k * row[b]
    pub fn add_row_multiple(&mut self, a: usize, b: usize, k: i64) {
        for j in 0..self.cols {
            let v = self[(b, j)];
            self[(a, j)] += k * v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            self[(i, j)] = -self[(i, j)];
        }
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self[(i, k)];
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += v * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMat {
        let mut out = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        // Fraction-free Gaussian elimination (Bareiss) on a copy.
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = 1i64;
        for k in 0..n.saturating_sub(1) {
            if a[(k, k)] == 0 {
                let Some(p) = (k + 1..n).find(|&i| a[(i, k)] != 0) else {
                    return 0;
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[(i, j)] = (a[(i, j)] * a[(k, k)] - a[(i, k)] * a[(k, j)]) / prev;
                }
                a[(i, k)] = 0;
            }
            prev = a[(k, k)];
        }
        if n == 0 {
            return 1;
        }
        sign * a[(n - 1, n - 1)]
    }
}

impl std::ops::Index<(usize, usize)> for IntMat {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Hermite Normal Form, lower-triangular row convention: returns `(h, u)` with
/// `h = u · a`, `u` unimodular, `h` lower-triangular with positive diagonal
/// and each below-diagonal entry reduced into `[0, diagonal of its column)`.
///
/// Zero rows (rank deficiency) collect at the top; for full-rank square input
/// `h` is square lower-triangular.
pub fn hnf_lower(a: &IntMat) -> (IntMat, IntMat) {
    // Process columns right-to-left, assigning pivot rows from the bottom, so
    // a full-rank square input comes out lower-triangular with pivot (i, i).
    let rows = a.rows;
    let cols = a.cols;
    let mut h = a.clone();
    let mut u = IntMat::identity(rows);
    let mut pivot_row = rows;
    for col in (0..cols).rev() {
        if pivot_row == 0 {
            break;
        }
        loop {
            let mut nonzero: Vec<usize> =
                (0..pivot_row).filter(|&i| h[(i, col)] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let r = nonzero[0];
                h.swap_rows(pivot_row - 1, r);
                u.swap_rows(pivot_row - 1, r);
                break;
            }
            nonzero.sort_by_key(|&i| h[(i, col)].unsigned_abs());
            let (small, big) = (nonzero[0], nonzero[1]);
            let q = h[(big, col)] / h[(small, col)];
            h.add_row_multiple(big, small, -q);
            u.add_row_multiple(big, small, -q);
        }
        if h[(pivot_row - 1, col)] == 0 {
            continue;
        }
        pivot_row -= 1;
        if h[(pivot_row, col)] < 0 {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let d = h[(pivot_row, col)];
        for i in pivot_row + 1..rows {
            let v = h[(i, col)];
            let q = v.div_euclid(d);
            if q != 0 {
                h.add_row_multiple(i, pivot_row, -q);
                u.add_row_multiple(i, pivot_row, -q);
            }
        }
    }
    (h, u)
}

/// Smith Normal Form: returns `(d, u, v)` with `d = u · a · v`, `u`, `v`
/// unimodular and `d` diagonal with `d[i] | d[i+1]`.
pub fn smith_normal_form(a: &IntMat) -> (IntMat, IntMat, IntMat) {
    let mut d = a.clone();
    let mut u = IntMat::identity(a.rows);
    let mut v = IntMat::identity(a.cols);
    let n = a.rows.min(a.cols);
    for t in 0..n {
        // Find a non-zero pivot in the remaining block.
        let Some((pi, pj)) = (t..a.rows)
            .flat_map(|i| (t..a.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| d[(i, j)] != 0)
            .min_by_key(|&(i, j)| d[(i, j)].unsigned_abs())
        else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut v, t, pj);
        loop {
            // Clear column t below and row t right of the pivot.
            let mut dirty = false;
            for i in t + 1..a.rows {
                if d[(i, t)] != 0 {
                    let q = d[(i, t)].div_euclid(d[(t, t)]);
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                    if d[(i, t)] != 0 {
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..a.cols {
                if d[(t, j)] != 0 {
                    let q = d[(t, j)].div_euclid(d[(t, t)]);
                    add_col_multiple(&mut d, j, t, -q);
                    add_col_multiple(&mut v, j, t, -q);
                    if d[(t, j)] != 0 {
                        swap_cols(&mut d, t, j);
                        swap_cols(&mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    // Enforce the divisibility chain.
    loop {
        let mut fixed = true;
        for t in 0..n.saturating_sub(1) {
            let (a1, a2) = (d[(t, t)], d[(t + 1, t + 1)]);
            if a1 != 0 && a2 % a1 != 0 {
                // Standard trick: add column t+1 to column t and re-eliminate.
                add_col_multiple(&mut d, t, t + 1, 1);
                add_col_multiple(&mut v, t, t + 1, 1);
                let (nd, nu, nv) = smith_block(&d, &u, &v, t);
                d = nd;
                u = nu;
                v = nv;
                fixed = false;
            }
        }
        if fixed {
            break;
        }
    }
    (d, u, v)
}

fn smith_block(d: &IntMat, u: &IntMat, v: &IntMat, t: usize) -> (IntMat, IntMat, IntMat) {
    // Re-run elimination from block t after the divisibility fix-up.
    let mut d = d.clone();
    let mut u = u.clone();
    let mut v = v.clone();
    let n = d.rows.min(d.cols);
    for s in t..n {
        let Some((pi, pj)) = (s..d.rows)
            .flat_map(|i| (s..d.cols).map(move |j| (i, j)))
            .filter(|&(i, j)| d[(i, j)] != 0)
            .min_by_key(|&(i, j)| d[(i, j)].unsigned_abs())
        else {
            break;
        };
        d.swap_rows(s, pi);
        u.swap_rows(s, pi);
        swap_cols(&mut d, s, pj);
        swap_cols(&mut v, s, pj);
        loop {
            let mut dirty = false;
            for i in s + 1..d.rows {
                if d[(i, s)] != 0 {
                    let q = d[(i, s)].div_euclid(d[(s, s)]);
                    d.add_row_multiple(i, s, -q);
                    u.add_row_multiple(i, s, -q);
                    if d[(i, s)] != 0 {
                        d.swap_rows(s, i);
                        u.swap_rows(s, i);
                        dirty = true;
                    }
                }
            }
            for j in s + 1..d.cols {
                if d[(s, j)] != 0 {
                    let q = d[(s, j)].div_euclid(d[(s, s)]);
                    add_col_multiple(&mut d, j, s, -q);
                    add_col_multiple(&mut v, j, s, -q);
                    if d[(s, j)] != 0 {
                        swap_cols(&mut d, s, j);
                        swap_cols(&mut v, s, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
        if d[(s, s)] < 0 {
            d.negate_row(s);
            u.negate_row(s);
        }
    }
    (d, u, v)
}

fn swap_cols(m: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows {
        m.data.swap(i * m.cols + a, i * m.cols + b);
    }
}

fn add_col_multiple(m: &mut IntMat, a: usize, b: usize, k: i64) {
    for i in 0..m.rows {
        let v = m[(i, b)];
        m[(i, a)] += k * v;
    }
}

/// Basis (as rows) of the integer kernel `{x : x · a = 0}`.
pub fn left_kernel(a: &IntMat) -> IntMat {
    // x·a = 0  <=>  aᵀ·xᵀ = 0; use SNF of a: d = u·a·v => x·a = x·u⁻¹·d·v⁻¹.
    // With y = x·u⁻¹: y·d = 0 means y_i = 0 wherever d_i != 0. Kernel rows of
    // y are unit vectors on zero-diagonal positions; x = y·u.
    let (d, u, _v) = smith_normal_form(a);
    let n = a.rows;
    let mut rows = Vec::new();
    for i in 0..n {
        let diag = if i < d.cols { d[(i, i)] } else { 0 };
        if diag == 0 {
            rows.push(u.row(i).to_vec());
        }
    }
    if rows.is_empty() {
        return IntMat::zeros(0, n);
    }
    IntMat::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_of_toric_like_lattice() {
        let a = IntMat::from_rows(&[vec![4, 0], vec![0, 4]]);
        let (h, u) = hnf_lower(&a);
        assert_eq!(h, a);
        assert_eq!(u.mul(&a), h);
    }

    #[test]
    fn hnf_reduces_below_diagonal() {
        // Same lattice as [[4,0],[2,2]] but messier generators.
        let a = IntMat::from_rows(&[vec![4, 0], vec![6, 2]]);
        let (h, u) = hnf_lower(&a);
        assert_eq!(u.mul(&a), h);
        assert_eq!(h[(0, 1)], 0);
        assert!(h[(0, 0)] > 0 && h[(1, 1)] > 0);
        assert!(h[(1, 0)] >= 0 && h[(1, 0)] < h[(0, 0)]);
        assert_eq!(h.det().abs(), a.det().abs());
    }

    #[test]
    fn snf_divisibility() {
        let a = IntMat::from_rows(&[vec![4, 0], vec![2, 2]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        assert_eq!(d[(0, 0)], 2);
        assert_eq!(d[(1, 1)], 4);
        assert_eq!(d[(0, 1)], 0);
        assert_eq!(d[(1, 0)], 0);
    }

    #[test]
    fn snf_of_half_gross_lattice() {
        let a = IntMat::from_rows(&[
            vec![6, 0, 0, 0],
            vec![2, 2, 0, 0],
            vec![3, 0, 3, 0],
            vec![4, 1, 1, 1],
        ]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).mul(&v), d);
        let diag: Vec<i64> = (0..4).map(|i| d[(i, i)]).collect();
        assert_eq!(diag.iter().product::<i64>(), 36);
        for w in diag.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn kernel_of_projection() {
        // Map Z^3 -> Z, (x, y, z) -> x + 2y + 3z; kernel rank 2.
        let a = IntMat::from_rows(&[vec![1], vec![2], vec![3]]);
        let k = left_kernel(&a);
        assert_eq!(k.rows, 2);
        for i in 0..k.rows {
            let r = k.row(i);
            assert_eq!(r[0] + 2 * r[1] + 3 * r[2], 0);
        }
    }
}
