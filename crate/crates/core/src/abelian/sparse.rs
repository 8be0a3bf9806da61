//! Sparse cochain complexes of cyclic groups and their reduction by
//! eliminating unit-coefficient pairs.
//!
//! Degree `k` has generators with orders (`0` = ℤ) and, optionally, an
//! integer filtration label. The differential raises degree by one.
//! Eliminating a pair `(a, b)` with `d a = u·b + …`, `u` a unit modulo the
//! common order, replaces the complex by a chain-homotopy-equivalent
//! smaller one; if both ends carry the same filtration label the
//! equivalence is filtered, so every spectral-sequence page from `E₁` on
//! is preserved.

use std::collections::{BTreeMap, BTreeSet};

use super::intmat::{reduce_mod, unit_inverse, IntMatrix};
use super::lattice::{Lattice, Subquotient};
use super::FgAbGroup;

#[derive(Clone, Debug, Default)]
pub struct SparseComplex {
    orders: Vec<Vec<u64>>,
    filt: Vec<Vec<i64>>,
    /// `d[k][i]`: image of generator `i` of degree `k` in degree `k + 1`.
    d: Vec<Vec<BTreeMap<usize, i128>>>,
}

impl SparseComplex {
    pub fn new() -> SparseComplex {
        SparseComplex::default()
    }

    /// Appends degree `len()` with the given generator orders (filtration 0).
    pub fn push_degree(&mut self, orders: Vec<u64>) -> usize {
        let n = orders.len();
        self.push_filtered_degree(orders, vec![0; n])
    }

    pub fn push_filtered_degree(&mut self, orders: Vec<u64>, filt: Vec<i64>) -> usize {
        assert_eq!(orders.len(), filt.len());
        let n = orders.len();
        self.orders.push(orders);
        self.filt.push(filt);
        self.d.push(vec![BTreeMap::new(); n]);
        self.orders.len() - 1
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn ngens(&self, k: usize) -> usize {
        self.orders[k].len()
    }

    pub fn orders(&self, k: usize) -> &[u64] {
        &self.orders[k]
    }

    pub fn filtration(&self, k: usize) -> &[i64] {
        &self.filt[k]
    }

    /// Adds `coeff` to the coefficient of `tgt` in `d(src)`, `src` in degree `k`.
    pub fn add_entry(&mut self, k: usize, src: usize, tgt: usize, coeff: i128) {
        let o = self.orders[k + 1][tgt];
        let e = self.d[k][src].entry(tgt).or_insert(0);
        *e = reduce_mod(*e + coeff, o);
        if *e == 0 {
            self.d[k][src].remove(&tgt);
        }
    }

    pub fn column(&self, k: usize, src: usize) -> &BTreeMap<usize, i128> {
        &self.d[k][src]
    }

    /// Dense matrix of `d : C^k → C^{k+1}` (zero columns if `k + 1` is
    /// beyond the top degree).
    pub fn dense_differential(&self, k: usize) -> IntMatrix {
        let rows = if k + 1 < self.len() { self.ngens(k + 1) } else { 0 };
        let mut m = IntMatrix::zeros(rows, self.ngens(k));
        if k + 1 < self.len() {
            for (j, col) in self.d[k].iter().enumerate() {
                for (&i, &c) in col {
                    m.set(i, j, c);
                }
            }
        }
        m
    }

    /// Checks `d ∘ d = 0` modulo the relations.
    pub fn check_d_squared(&self) -> bool {
        for k in 0..self.len().saturating_sub(2) {
            for col in &self.d[k] {
                let mut acc: BTreeMap<usize, i128> = BTreeMap::new();
                for (&mid, &c) in col {
                    for (&t, &e) in &self.d[k + 1][mid] {
                        *acc.entry(t).or_insert(0) += c * e;
                    }
                }
                if acc.iter().any(|(&t, &v)| reduce_mod(v, self.orders[k + 2][t]) != 0) {
                    return false;
                }
            }
        }
        true
    }

    /// Eliminates unit pairs until none remain; pairs must share a
    /// filtration label.
    pub fn reduce(&self) -> SparseComplex {
        let top = self.len();
        let mut out = self.d.clone();
        // drop order-1 generators entirely
        let mut alive: Vec<Vec<bool>> = self.orders.iter().map(|os| os.iter().map(|&o| o != 1).collect()).collect();
        for k in 0..top {
            for col in out[k].iter_mut() {
                if k + 1 < top {
                    col.retain(|&t, _| alive[k + 1][t]);
                }
            }
        }
        let mut inc: Vec<Vec<BTreeSet<usize>>> = self.orders.iter().map(|os| vec![BTreeSet::new(); os.len()]).collect();
        for k in 0..top.saturating_sub(1) {
            for (s, col) in out[k].iter().enumerate() {
                if !alive[k][s] {
                    continue;
                }
                for &t in col.keys() {
                    inc[k + 1][t].insert(s);
                }
            }
        }

        for k in 0..top.saturating_sub(1) {
            for a in 0..self.ngens(k) {
                if !alive[k][a] {
                    continue;
                }
                let oa = self.orders[k][a];
                let fa = self.filt[k][a];
                let pick = out[k][a]
                    .iter()
                    .filter(|(&b, &c)| {
                        self.orders[k + 1][b] == oa && self.filt[k + 1][b] == fa && unit_inverse(c, oa).is_some()
                    })
                    .min_by_key(|(&b, _)| (inc[k + 1][b].len(), b))
                    .map(|(&b, &c)| (b, c));
                let Some((b, u)) = pick else { continue };
                let uinv = unit_inverse(u, oa).expect("unit");
                let da: Vec<(usize, i128)> = out[k][a].iter().filter(|(&t, _)| t != b).map(|(&t, &c)| (t, c)).collect();
                let others: Vec<usize> = inc[k + 1][b].iter().copied().filter(|&s| s != a).collect();
                for s in others {
                    let c = out[k][s][&b];
                    let factor = reduce_mod(c * uinv, oa);
                    for &(t, e) in &da {
                        let ot = self.orders[k + 1][t];
                        let old = out[k][s].get(&t).copied().unwrap_or(0);
                        let v = reduce_mod(old - factor * e, ot);
                        if v == 0 {
                            out[k][s].remove(&t);
                            inc[k + 1][t].remove(&s);
                        } else {
                            out[k][s].insert(t, v);
                            inc[k + 1][t].insert(s);
                        }
                    }
                    out[k][s].remove(&b);
                }
                // remove a: its incoming entries and outgoing records
                if k > 0 {
                    for z in std::mem::take(&mut inc[k][a]) {
                        out[k - 1][z].remove(&a);
                    }
                }
                for (&t, _) in &out[k][a] {
                    inc[k + 1][t].remove(&a);
                }
                out[k][a].clear();
                // remove b: its outgoing entries
                if k + 2 <= top - 1 {
                    for (&t, _) in &out[k + 1][b] {
                        inc[k + 2][t].remove(&b);
                    }
                }
                out[k + 1][b].clear();
                inc[k + 1][b].clear();
                alive[k][a] = false;
                alive[k + 1][b] = false;
            }
        }

        // compact the survivors
        let index: Vec<Vec<Option<usize>>> = alive
            .iter()
            .map(|al| {
                let mut n = 0;
                al.iter()
                    .map(|&x| {
                        x.then(|| {
                            n += 1;
                            n - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let mut r = SparseComplex::new();
        for k in 0..top {
            let keep: Vec<usize> = (0..self.ngens(k)).filter(|&i| alive[k][i]).collect();
            r.push_filtered_degree(
                keep.iter().map(|&i| self.orders[k][i]).collect(),
                keep.iter().map(|&i| self.filt[k][i]).collect(),
            );
        }
        for k in 0..top {
            for i in 0..self.ngens(k) {
                let Some(ni) = index[k][i] else { continue };
                for (&t, &c) in &out[k][i] {
                    let nt = index[k + 1][t].expect("entry into a removed generator");
                    r.d[k][ni].insert(nt, c);
                }
            }
        }
        r
    }

    /// `H^k` as a subquotient of the (dense) degree-`k` coordinates.
    /// Degree `k` must have a successor unless it is known to be the top.
    pub fn dense_cohomology(&self, k: usize) -> Subquotient {
        let g = FgAbGroup::from_orders(self.orders[k].clone());
        let z = if k + 1 < self.len() {
            let next = FgAbGroup::from_orders(self.orders[k + 1].clone());
            Lattice::preimage(&self.dense_differential(k), &next.relations())
        } else {
            Lattice::full(self.ngens(k))
        };
        let mut b = g.relations();
        if k > 0 {
            b = b.sum(&Lattice::full(self.ngens(k - 1)).image(&self.dense_differential(k - 1)));
        }
        Subquotient::new(z, b)
    }

    /// Cohomology in degree `k` in invariant-factor form, after reduction.
    /// The caller must include degree `k + 1` for the answer to be exact.
    pub fn cohomology(&self, k: usize) -> FgAbGroup {
        self.reduce().dense_cohomology(k).group()
    }

    /// All cohomology groups for degrees `0..len()-1`, sharing one reduction.
    pub fn cohomology_all(&self) -> Vec<FgAbGroup> {
        let r = self.reduce();
        (0..self.len().saturating_sub(1)).map(|k| r.dense_cohomology(k).group()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // ℤ --2--> ℤ --0--> ℤ --1--> ℤ
    fn sample() -> SparseComplex {
        let mut c = SparseComplex::new();
        for _ in 0..4 {
            c.push_degree(vec![0]);
        }
        c.add_entry(0, 0, 0, 2);
        c.add_entry(2, 0, 0, 1);
        c
    }

    #[test]
    fn cohomology_of_small_complex() {
        let c = sample();
        assert!(c.check_d_squared());
        let h = c.cohomology_all();
        assert_eq!(h[0].invariant_factors(), Vec::<u64>::new());
        assert_eq!(h[1].invariant_factors(), vec![2]);
        assert_eq!(h[2].invariant_factors(), Vec::<u64>::new());
        let r = c.reduce();
        assert_eq!(r.ngens(2) + r.ngens(3), 0);
    }

    #[test]
    fn reduction_respects_filtration() {
        let mut c = SparseComplex::new();
        c.push_filtered_degree(vec![0], vec![0]);
        c.push_filtered_degree(vec![0], vec![1]);
        c.add_entry(0, 0, 0, 1);
        let r = c.reduce();
        assert_eq!(r.ngens(0), 1);
        let mut c2 = SparseComplex::new();
        c2.push_degree(vec![0]);
        c2.push_degree(vec![0]);
        c2.add_entry(0, 0, 0, 1);
        assert_eq!(c2.reduce().ngens(0), 0);
    }

    #[test]
    fn fill_in_is_tracked() {
        // a -> b0 + b1 ; b0 -> 3c, b1 -> -3c
        let mut c = SparseComplex::new();
        c.push_degree(vec![0]);
        c.push_degree(vec![0, 0]);
        c.push_degree(vec![0]);
        c.add_entry(0, 0, 0, 1);
        c.add_entry(0, 0, 1, 1);
        c.add_entry(1, 0, 0, 3);
        c.add_entry(1, 1, 0, -3);
        assert!(c.check_d_squared());
        let h = c.cohomology_all();
        assert!(h[0].is_trivial());
        assert!(h[1].is_trivial());
        assert_eq!(c.reduce().dense_cohomology(2).orders(), &[3]);
    }
}
