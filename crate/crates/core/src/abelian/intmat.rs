//! Dense integer matrices and the unimodular normal forms built on them.
//!
//! Arithmetic is on `i128` with overflow checks; an overflow is a bug at
//! the scales this crate targets and panics with the operation name.

use std::fmt;

use serde::{Deserialize, Serialize};

#[inline]
pub(crate) fn add(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in addition")
}

#[inline]
pub(crate) fn sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b).expect("integer overflow in subtraction")
}

#[inline]
pub(crate) fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in multiplication")
}

/// Extended gcd: returns `(g, x, y)` with `a x + b y = g >= 0`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, sub(old_r, mul(q, r)));
        (old_s, s) = (s, sub(old_s, mul(q, s)));
        (old_t, t) = (t, sub(old_t, mul(q, t)));
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    ext_gcd(a, b).0
}

/// Representative of `a` modulo `m` in `[0, m)`; `m == 0` means no reduction.
#[inline]
pub fn reduce_mod(a: i128, m: u64) -> i128 {
    if m == 0 {
        a
    } else {
        a.rem_euclid(m as i128)
    }
}

/// Inverse of `a` modulo `m` (for `m == 0`, only `±1` are invertible).
pub fn unit_inverse(a: i128, m: u64) -> Option<i128> {
    if m == 0 {
        return match a {
            1 => Some(1),
            -1 => Some(-1),
            _ => None,
        };
    }
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd(reduce_mod(a, m), m as i128);
    (g == 1).then(|| reduce_mod(x, m))
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn diagonal(entries: &[i128]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    /// Builds from row vectors; all rows must have length `cols`.
    pub fn from_rows(rows: &[Vec<i128>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let rows: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        Self::from_rows(&rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i128] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<i128> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b != 0 {
                        let idx = r * out.cols + c;
                        out.data[idx] = add(out.data[idx], mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0i128, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { add(acc, mul(a, b)) })
            })
            .collect()
    }

    /// Block matrix `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| -x).collect() }
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| add(a, b)).collect(),
        }
    }

    pub fn scale(&self, k: i128) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| mul(x, k)).collect() }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: i128) {
        if k == 0 {
            return;
        }
        for c in 0..self.cols {
            let s = self.get(src, c);
            if s != 0 {
                let v = add(self.get(dst, c), mul(k, s));
                self.set(dst, c, v);
            }
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: i128) {
        if k == 0 {
            return;
        }
        for r in 0..self.rows {
            let s = self.get(r, src);
            if s != 0 {
                let v = add(self.get(r, dst), mul(k, s));
                self.set(r, dst, v);
            }
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, -v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m = self.clone();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m.get(k, k) == 0 {
                match (k + 1..n).find(|&r| m.get(r, k) != 0) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = sub(mul(m.get(i, j), m.get(k, k)), mul(m.get(i, k), m.get(k, j))) / prev;
                    m.set(i, j, v);
                }
            }
            prev = m.get(k, k);
        }
        sign * m.get(n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs() == 1
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `v`, maintained alongside it.
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithForm {
    /// Nonzero diagonal entries in order (a divisibility chain).
    pub fn invariants(&self) -> Vec<i128> {
        (0..self.rank).map(|i| self.d.get(i, i)).collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut v_inv = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize, i128)> = None;
        for r in t..rows {
            for c in t..cols {
                let x = d.get(r, c).abs();
                if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                    best = Some((r, c, x));
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);
        v_inv.swap_rows(t, pc);

        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                let x = d.get(r, t);
                if x == 0 {
                    continue;
                }
                let q = x.div_euclid(d.get(t, t));
                d.add_row_multiple(r, t, -q);
                u.add_row_multiple(r, t, -q);
                if d.get(r, t) != 0 {
                    d.swap_rows(t, r);
                    u.swap_rows(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                let x = d.get(t, c);
                if x == 0 {
                    continue;
                }
                let q = x.div_euclid(d.get(t, t));
                d.add_col_multiple(c, t, -q);
                v.add_col_multiple(c, t, -q);
                v_inv.add_row_multiple(t, c, q);
                if d.get(t, c) != 0 {
                    d.swap_cols(t, c);
                    v.swap_cols(t, c);
                    v_inv.swap_rows(t, c);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let p = d.get(t, t);
            let bad = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| d.get(r, c) % p != 0));
            match bad {
                Some(r) => {
                    d.add_row_multiple(t, r, 1);
                    u.add_row_multiple(t, r, 1);
                }
                None => break,
            }
        }
        if d.get(t, t) < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SmithForm { u, d, v, v_inv, rank: t }
}

/// Row-style Hermite normal form of the lattice spanned by `gens`.
///
/// Returns the nonzero rows in echelon form (strictly increasing pivot
/// columns, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`) together with the pivot columns.
pub fn hermite_rows(gens: &[Vec<i128>], ncols: usize) -> (Vec<Vec<i128>>, Vec<usize>) {
    let (rows, pivots, _) = echelon(gens.to_vec(), ncols, ncols);
    (rows, pivots)
}

/// Echelon form that only pivots on the first `pivot_limit` columns.
///
/// Rows whose first `pivot_limit` entries end up zero (but which are not
/// entirely zero) are returned in the third component; trailing columns
/// ride along as a transformation record.
fn echelon(mut rows: Vec<Vec<i128>>, ncols: usize, pivot_limit: usize) -> (Vec<Vec<i128>>, Vec<usize>, Vec<Vec<i128>>) {
    let mut out: Vec<Vec<i128>> = Vec::new();
    let mut pivots = Vec::new();
    for row in &rows {
        debug_assert_eq!(row.len(), ncols);
    }
    for col in 0..pivot_limit {
        // gather rows with nonzero entry in this column and run Euclid on them
        loop {
            let mut nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            nz.sort_by_key(|&i| rows[i][col].abs());
            let p = nz[0];
            let pv = rows[p][col];
            let pivot_row = rows[p].clone();
            for &i in &nz[1..] {
                let q = rows[i][col].div_euclid(pv);
                if q != 0 {
                    for (x, &y) in rows[i].iter_mut().zip(&pivot_row) {
                        if y != 0 {
                            *x = sub(*x, mul(q, y));
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| rows[i][col] != 0) {
            let mut r = rows.swap_remove(i);
            if r[col] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            out.push(r);
            pivots.push(col);
        }
    }
    // reduce entries above pivots
    for k in 0..out.len() {
        let (pc, pv) = (pivots[k], out[k][pivots[k]]);
        for j in 0..k {
            let q = out[j][pc].div_euclid(pv);
            if q != 0 {
                let pr = out[k].clone();
                for (x, &y) in out[j].iter_mut().zip(&pr) {
                    if y != 0 {
                        *x = sub(*x, mul(q, y));
                    }
                }
            }
        }
    }
    rows.retain(|r| r.iter().any(|&x| x != 0));
    (out, pivots, rows)
}

/// A ℤ-basis of `{x ∈ ℤ^cols : M x = 0}`, as row vectors in Hermite form.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<i128>> {
    let (r, c) = (m.rows, m.cols);
    // rows of [Mᵀ | I]; a row with vanishing Mᵀ part records a kernel vector
    let rows: Vec<Vec<i128>> = (0..c)
        .map(|j| {
            let mut row = vec![0i128; r + c];
            for i in 0..r {
                row[i] = m.get(i, j);
            }
            row[r + j] = 1;
            row
        })
        .collect();
    let (_, _, rest) = echelon(rows, r + c, r);
    let kernel: Vec<Vec<i128>> = rest.into_iter().map(|row| row[r..].to_vec()).collect();
    hermite_rows(&kernel, c).0
}

/// Solves `v = a · basis` for an echelon basis (as produced by
/// [`hermite_rows`]); `None` if `v` is not in the row lattice.
pub fn echelon_coords(basis: &[Vec<i128>], pivots: &[usize], v: &[i128]) -> Option<Vec<i128>> {
    let mut rest = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (row, &pc) in basis.iter().zip(pivots) {
        let x = rest[pc];
        if x % row[pc] != 0 {
            return None;
        }
        let q = x / row[pc];
        if q != 0 {
            for (a, &b) in rest.iter_mut().zip(row) {
                if b != 0 {
                    *a = sub(*a, mul(q, b));
                }
            }
        }
        coords.push(q);
    }
    rest.iter().all(|&x| x == 0).then_some(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_smith(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d.get(i, j), 0);
                }
            }
        }
        let inv = s.invariants();
        for w in inv.windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check_smith(&IntMatrix::diagonal(&[2, 3]));
        assert_eq!(s.invariants(), vec![1, 6]);
    }

    #[test]
    fn zero_and_identity() {
        let s = check_smith(&IntMatrix::zeros(3, 2));
        assert_eq!(s.rank, 0);
        assert!(s.d.is_zero());
        let s = check_smith(&IntMatrix::identity(4));
        assert_eq!(s.d, IntMatrix::identity(4));
    }

    #[test]
    fn rectangular() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        let s = check_smith(&m);
        assert_eq!(s.invariants(), vec![2, 6, 12]);
    }

    #[test]
    fn kernel_of_row() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 6]], 3);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(m.mul_vec(v), vec![0]);
        }
        // the kernel lattice has index 1 in its saturation: a basis of
        // {x: x1 + 2x2 + 3x3 = 0} has determinant-1 completions
        let (h, p) = hermite_rows(&k, 3);
        assert!(echelon_coords(&h, &p, &[-2, 1, 0]).is_some());
        assert!(echelon_coords(&h, &p, &[-3, 0, 1]).is_some());
    }

    #[test]
    fn unit_inverses() {
        assert_eq!(unit_inverse(3, 4), Some(3));
        assert_eq!(unit_inverse(2, 4), None);
        assert_eq!(unit_inverse(-1, 0), Some(-1));
        assert_eq!(unit_inverse(2, 0), None);
    }
}
