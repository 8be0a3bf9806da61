//! Finite groups given by multiplication tables.

use std::collections::VecDeque;

use crate::abelian::FgAbGroup;
use crate::error::{Error, Result};

/// Elements are `0..order`; `mul(a, b)` is `a·b`.
#[derive(Clone, PartialEq, Eq)]
pub struct FinGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
}

impl std::fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinGroup(order {})", self.order)
    }
}

impl FinGroup {
    /// Checks closure, identity, inverses and associativity.
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<FinGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Invalid("a group needs at least one element".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Invalid("multiplication table is not square or has entries out of range".into()));
        }
        if identity >= n {
            return Err(Error::Invalid("identity out of range".into()));
        }
        if (0..n).any(|a| table[identity][a] != a || table[a][identity] != a) {
            return Err(Error::Invalid(format!("{identity} is not a two-sided identity")));
        }
        let flat: Vec<u32> = table.iter().flatten().map(|&v| v as u32).collect();
        let mut inverse = vec![u32::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity) {
                Some(b) if table[b][a] == identity => inverse[a] = b as u32,
                _ => return Err(Error::Invalid(format!("element {a} has no two-sided inverse"))),
            }
        }
        let g = FinGroup { order: n, table: flat, identity, inverse };
        for a in 0..n {
            for b in 0..n {
                let ab = g.mul(a, b);
                for c in 0..n {
                    if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::Invalid(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(g)
    }

    /// For tables known to come from a group.
    pub(crate) fn from_fn(order: usize, identity: usize, mul: impl Fn(usize, usize) -> usize) -> FinGroup {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u32);
            }
        }
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] as usize == identity {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        FinGroup { order, table, identity, inverse }
    }

    pub fn trivial() -> FinGroup {
        FinGroup::cyclic(1)
    }

    /// `ℤ/m` with element `k` the residue `k`.
    pub fn cyclic(m: usize) -> FinGroup {
        assert!(m > 0);
        FinGroup::from_fn(m, 0, |a, b| (a + b) % m)
    }

    /// The dihedral group of order `2k`: `r^i s^j` is element `2i + j`.
    pub fn dihedral(k: usize) -> FinGroup {
        assert!(k > 0);
        FinGroup::from_fn(2 * k, 0, |a, b| {
            let (i1, j1, i2, j2) = (a / 2, a % 2, b / 2, b % 2);
            // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
            let i = if j1 == 0 { (i1 + i2) % k } else { (i1 + k - i2) % k };
            2 * i + (j1 + j2) % 2
        })
    }

    /// Permutations of `{0, 1, 2}` in lexicographic order, composed as
    /// functions (`(a·b)(x) = a(b(x))`).
    pub fn symmetric3() -> FinGroup {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        FinGroup::from_fn(6, 0, |a, b| {
            let (pa, pb) = (perms[a], perms[b]);
            idx([pa[pb[0]], pa[pb[1]], pa[pb[2]]])
        })
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}`: element `2u + s` is `(-1)^s·e_u`
    /// with `e = (1, i, j, k)`.
    pub fn quaternion() -> FinGroup {
        // unit products: e_u e_v = sign · e_w
        let prod = |u: usize, v: usize| -> (usize, usize) {
            match (u, v) {
                (0, v) => (v, 0),
                (u, 0) => (u, 0),
                (u, v) if u == v => (0, 1),
                (1, 2) => (3, 0),
                (2, 3) => (1, 0),
                (3, 1) => (2, 0),
                (2, 1) => (3, 1),
                (3, 2) => (1, 1),
                (1, 3) => (2, 1),
                _ => unreachable!(),
            }
        };
        FinGroup::from_fn(8, 0, |a, b| {
            let (w, s) = prod(a / 2, b / 2);
            2 * w + (a % 2 + b % 2 + s) % 2
        })
    }

    /// `A × B` with `(a, b) ↦ a·|B| + b`.
    pub fn product(a: &FinGroup, b: &FinGroup) -> FinGroup {
        let nb = b.order;
        FinGroup::from_fn(a.order * nb, a.identity * nb + b.identity, |x, y| {
            a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)
        })
    }

    /// A finite abelian group, elements in the order of
    /// [`FgAbGroup::elements`].
    pub fn from_ab(g: &FgAbGroup) -> Result<FinGroup> {
        let els = g.elements()?;
        Ok(FinGroup::from_fn(els.len(), 0, |a, b| g.element_index(&g.add(&els[a], &els[b]))))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut r = self.identity;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Sorted list of element orders, an isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    pub fn is_subgroup(&self, s: &[usize]) -> bool {
        let mut mem = vec![false; self.order];
        for &x in s {
            mem[x] = true;
        }
        mem[self.identity] && s.iter().all(|&a| s.iter().all(|&b| mem[self.mul(a, self.inv(b))]))
    }

    pub fn is_normal(&self, s: &[usize]) -> bool {
        let mut mem = vec![false; self.order];
        for &x in s {
            mem[x] = true;
        }
        self.is_subgroup(s) && (0..self.order).all(|g| s.iter().all(|&h| mem[self.mul(self.mul(g, h), self.inv(g))]))
    }

    /// The subgroup on `elems` (sorted, closed) as a group in its own
    /// right; element `i` is `elems[i]`.
    pub fn subgroup(&self, elems: &[usize]) -> Result<FinGroup> {
        if !elems.windows(2).all(|w| w[0] < w[1]) || !self.is_subgroup(elems) {
            return Err(Error::Invalid("subset is not a sorted subgroup".into()));
        }
        let pos = |x: usize| elems.binary_search(&x).expect("closed subset");
        Ok(FinGroup::from_fn(elems.len(), pos(self.identity), |a, b| pos(self.mul(elems[a], elems[b]))))
    }

    /// `G/N` with cosets numbered by first occurrence, and the projection.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FinGroup, Vec<usize>)> {
        if !self.is_normal(normal) {
            return Err(Error::Invalid("quotient by a subset that is not a normal subgroup".into()));
        }
        let mut label = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if label[g] == usize::MAX {
                for &h in normal {
                    label[self.mul(g, h)] = reps.len();
                }
                reps.push(g);
            }
        }
        let q = FinGroup::from_fn(reps.len(), label[self.identity], |a, b| label[self.mul(reps[a], reps[b])]);
        Ok((q, label))
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let mut comms = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                comms.push(self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated(&comms)
    }

    /// `G/[G, G]` in invariant-factor form.
    pub fn abelianization(&self) -> FgAbGroup {
        let (q, _) = self.quotient(&self.commutator_subgroup()).expect("commutator subgroup is normal");
        q.abelian_invariants().expect("abelian quotient")
    }

    /// Invariant factors of an abelian group, read off from how many
    /// elements each prime power kills.
    pub fn abelian_invariants(&self) -> Result<FgAbGroup> {
        if !self.is_abelian() {
            return Err(Error::Invalid("group is not abelian".into()));
        }
        let mut primes = Vec::new();
        let mut m = self.order;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                primes.push(p);
                while m % p == 0 {
                    m /= p;
                }
            }
            p += 1;
        }
        let orders: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        let mut factors: Vec<u64> = Vec::new();
        for p in primes {
            // c_k = #{g : g^{p^k} = 1} = p^{Σ_i min(k, e_i)}
            let mut ranks = Vec::new();
            let mut prev_log = 0u32;
            let mut pk = 1usize;
            loop {
                pk *= p;
                let c = orders.iter().filter(|&&o| pk % o == 0).count();
                let log = c.ilog(p);
                if log == prev_log {
                    break;
                }
                ranks.push((log - prev_log) as usize);
                prev_log = log;
            }
            // ranks[k] = number of factors of order ≥ p^{k+1}
            let mut powers = Vec::new();
            for k in 0..ranks.len() {
                let next = ranks.get(k + 1).copied().unwrap_or(0);
                for _ in 0..ranks[k] - next {
                    powers.push((p as u64).pow(k as u32 + 1));
                }
            }
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, q) in powers.into_iter().enumerate() {
                if i < factors.len() {
                    factors[i] *= q;
                } else {
                    factors.push(q);
                }
            }
        }
        Ok(FgAbGroup::from_orders(factors).canonical())
    }

    /// Exhaustive isomorphism test for small groups.
    pub fn is_isomorphic(&self, other: &FinGroup) -> bool {
        if self.order != other.order || self.order_profile() != other.order_profile() {
            return false;
        }
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        while span.len() < self.order {
            let g = (0..self.order)
                .filter(|x| span.binary_search(x).is_err())
                .max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)))
                .unwrap();
            gens.push(g);
            span = self.generated(&gens);
        }
        let cands: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| {
                let o = self.element_order(g);
                (0..other.order).filter(|&y| other.element_order(y) == o).collect()
            })
            .collect();
        let mut choice = vec![0usize; gens.len()];
        loop {
            let imgs: Vec<usize> = choice.iter().zip(&cands).map(|(&c, cs)| cs[c]).collect();
            if self.extends_to_iso(&gens, &imgs, other) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == choice.len() {
                    return false;
                }
                choice[i] += 1;
                if choice[i] < cands[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }

    fn extends_to_iso(&self, gens: &[usize], imgs: &[usize], other: &FinGroup) -> bool {
        let mut map = vec![usize::MAX; self.order];
        map[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(imgs) {
                let (y, v) = (self.mul(x, g), other.mul(map[x], h));
                if map[y] == usize::MAX {
                    map[y] = v;
                    queue.push_back(y);
                } else if map[y] != v {
                    return false;
                }
            }
        }
        let mut hit = vec![false; other.order];
        for &v in &map {
            if hit[v] {
                return false;
            }
            hit[v] = true;
        }
        is_homomorphism(self, other, &map)
    }
}

pub fn is_homomorphism(src: &FinGroup, tgt: &FinGroup, f: &[usize]) -> bool {
    f.len() == src.order()
        && f.iter().all(|&v| v < tgt.order())
        && (0..src.order()).all(|a| (0..src.order()).all(|b| f[src.mul(a, b)] == tgt.mul(f[a], f[b])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_are_groups() {
        for g in [FinGroup::cyclic(6), FinGroup::symmetric3(), FinGroup::dihedral(4), FinGroup::quaternion()] {
            assert!(FinGroup::new(g.table(), g.identity()).is_ok());
        }
        assert!(!FinGroup::symmetric3().is_abelian());
        assert!(FinGroup::symmetric3().is_isomorphic(&FinGroup::dihedral(3)));
        assert!(!FinGroup::quaternion().is_isomorphic(&FinGroup::dihedral(4)));
        assert!(FinGroup::product(&FinGroup::cyclic(2), &FinGroup::cyclic(3)).is_isomorphic(&FinGroup::cyclic(6)));
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FinGroup::new(vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(FinGroup::new(vec![vec![0, 1], vec![1, 0]], 1).is_err());
    }

    #[test]
    fn abelianizations() {
        assert_eq!(FinGroup::symmetric3().abelianization().invariant_factors(), vec![2]);
        assert_eq!(FinGroup::quaternion().abelianization().invariant_factors(), vec![2, 2]);
        assert_eq!(FinGroup::cyclic(4).abelianization().invariant_factors(), vec![4]);
        let g = FinGroup::product(&FinGroup::cyclic(2), &FinGroup::cyclic(4));
        assert_eq!(g.abelian_invariants().unwrap().invariant_factors(), vec![2, 4]);
        let h = FinGroup::product(&FinGroup::cyclic(4), &FinGroup::cyclic(6));
        assert_eq!(h.abelian_invariants().unwrap().invariant_factors(), vec![2, 12]);
    }

    #[test]
    fn from_ab_matches_cyclic() {
        let g = FinGroup::from_ab(&FgAbGroup::from_orders(vec![2, 3])).unwrap();
        assert!(g.is_isomorphic(&FinGroup::cyclic(6)));
    }
}
