//! Group (co)homology from the bar resolution, Tor/Ext, and the
//! comparison checks built on them (balanced, Shapiro, hom–tensor).
//!
//! Cochains are inhomogeneous: `Cⁿ(G, A) = Map(Gⁿ, A)` with generator
//! `(t, j)` the function sending the tuple `t` to the `j`-th generator of
//! `A`. Tuples are encoded in base `|G|`, first entry most significant;
//! generator `(t, j)` has index `index(t)·ngens(A) + j`.

use crate::abelian::{AbMorphism, ChainComplex, FgAbGroup, IntMatrix, SparseComplex};
use crate::error::{Error, Result};
use crate::homotopy::FinGroup;

use super::module::GModule;

/// Cap on the number of ℤ-generators in any one degree of a bar complex.
pub const BAR_BUDGET: usize = 100_000;

/// A module given by sparse columns of its action matrices.
pub(crate) trait SparseModule {
    fn orders(&self) -> &[u64];
    /// Nonzero entries `(row, coeff)` of column `j` of the matrix of `g`.
    fn act_column(&self, g: usize, j: usize) -> Vec<(usize, i128)>;
}

impl SparseModule for GModule {
    fn orders(&self) -> &[u64] {
        self.carrier().orders()
    }

    fn act_column(&self, g: usize, j: usize) -> Vec<(usize, i128)> {
        let m = self.action(g);
        (0..m.rows()).filter_map(|r| (m.get(r, j) != 0).then(|| (r, m.get(r, j)))).collect()
    }
}

pub(crate) fn tuple_count(g: usize, n: usize, k: usize, what: &str) -> Result<usize> {
    let cap = || Error::Budget { what: what.to_string(), limit: BAR_BUDGET };
    let t = g.checked_pow(n as u32).ok_or_else(cap)?;
    let total = t.checked_mul(k).ok_or_else(cap)?;
    if total > BAR_BUDGET {
        return Err(cap());
    }
    Ok(t)
}

pub(crate) fn digits(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut d = vec![0; len];
    for slot in d.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    d
}

pub(crate) fn index(d: &[usize], base: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * base + x)
}

fn sign(i: usize) -> i128 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Emits `(src, tgt, coeff)` for `d : Cᵖ(G, M) → Cᵖ⁺¹(G, M)`,
/// `(df)(g₁…g_{p+1}) = g₁f(g₂…) + Σ(−1)ⁱf(…gᵢg_{i+1}…) + (−1)^{p+1}f(g₁…g_p)`.
pub(crate) fn cochain_differential<M: SparseModule + ?Sized>(
    g: &FinGroup,
    m: &M,
    p: usize,
    mut emit: impl FnMut(usize, usize, i128),
) {
    let n = g.order();
    let k = m.orders().len();
    let count = n.pow(p as u32);
    for ti in 0..count {
        let t = digits(ti, n, p);
        for j in 0..k {
            let src = ti * k + j;
            for s1 in 0..n {
                let tgt = s1 * count + ti;
                for (row, c) in m.act_column(s1, j) {
                    emit(src, tgt * k + row, c);
                }
            }
            for i in 1..=p {
                for a in 0..n {
                    let mut s = Vec::with_capacity(p + 1);
                    s.extend_from_slice(&t[..i - 1]);
                    s.push(a);
                    s.push(g.mul(g.inv(a), t[i - 1]));
                    s.extend_from_slice(&t[i..]);
                    emit(src, index(&s, n) * k + j, sign(i));
                }
            }
            for last in 0..n {
                emit(src, (ti * n + last) * k + j, sign(p + 1));
            }
        }
    }
}

/// Emits `(src, tgt, coeff)` for `∂ : C_p(G, M) → C_{p−1}(G, M)`,
/// `∂(t ⊗ a) = (t₂…t_p) ⊗ t₁⁻¹a + Σ(−1)ⁱ(…tᵢt_{i+1}…) ⊗ a + (−1)ᵖ(t₁…t_{p−1}) ⊗ a`.
fn chain_boundary<M: SparseModule + ?Sized>(g: &FinGroup, m: &M, p: usize, mut emit: impl FnMut(usize, usize, i128)) {
    if p == 0 {
        return;
    }
    let n = g.order();
    let k = m.orders().len();
    for ti in 0..n.pow(p as u32) {
        let t = digits(ti, n, p);
        for j in 0..k {
            let src = ti * k + j;
            let tail = index(&t[1..], n);
            for (row, c) in m.act_column(g.inv(t[0]), j) {
                emit(src, tail * k + row, c);
            }
            for i in 1..p {
                let mut s = t.clone();
                s[i - 1] = g.mul(t[i - 1], t[i]);
                s.remove(i);
                emit(src, index(&s, n) * k + j, sign(i));
            }
            emit(src, index(&t[..p - 1], n) * k + j, sign(p));
        }
    }
}

/// Chain complex `C_top → ⋯ → C_0` stored as a cochain complex with
/// degree `top − n` holding `C_n`.
struct ReversedChains {
    top: usize,
    sc: SparseComplex,
}

impl ReversedChains {
    fn new(orders: Vec<Vec<u64>>) -> ReversedChains {
        let top = orders.len() - 1;
        let mut sc = SparseComplex::new();
        for o in orders.into_iter().rev() {
            sc.push_degree(o);
        }
        ReversedChains { top, sc }
    }

    /// `src ∈ C_n`, `tgt ∈ C_{n−1}`.
    fn entry(&mut self, n: usize, src: usize, tgt: usize, c: i128) {
        self.sc.add_entry(self.top - n, src, tgt, c);
    }

    /// `H_0 … H_{top−1}`.
    fn homology(&self) -> Vec<FgAbGroup> {
        debug_assert!(self.sc.check_d_squared());
        let r = self.sc.reduce();
        (0..self.top).map(|n| r.dense_cohomology(self.top - n).group()).collect()
    }
}

fn repeat_orders(o: &[u64], times: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(o.len() * times);
    for _ in 0..times {
        v.extend_from_slice(o);
    }
    v
}

/// The inhomogeneous cochain complex in degrees `0..=top`.
pub fn cochain_complex(a: &GModule, top: usize) -> Result<SparseComplex> {
    let g = a.group();
    let k = a.carrier().ngens();
    let mut sc = SparseComplex::new();
    for p in 0..=top {
        let t = tuple_count(g.order(), p, k, "bar cochains")?;
        sc.push_degree(repeat_orders(a.carrier().orders(), t));
    }
    for p in 0..top {
        cochain_differential(g, a, p, |s, t, c| sc.add_entry(p, s, t, c));
    }
    Ok(sc)
}

/// `H⁰(G, A) … H^max(G, A)`.
pub fn group_cohomology_all(a: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    let sc = cochain_complex(a, max + 1)?;
    debug_assert!(sc.check_d_squared());
    Ok(sc.cohomology_all().into_iter().map(|h| h.canonical()).collect())
}

pub fn group_cohomology(a: &GModule, n: usize) -> Result<FgAbGroup> {
    Ok(group_cohomology_all(a, n)?.pop().expect("nonempty"))
}

/// `H_0(G, A) … H_max(G, A)` from `C_*(G, A) = ℤ[Gⁿ] ⊗ A`.
pub fn group_homology_all(a: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    let g = a.group();
    let k = a.carrier().ngens();
    let top = max + 1;
    let orders = (0..=top)
        .map(|p| Ok(repeat_orders(a.carrier().orders(), tuple_count(g.order(), p, k, "bar chains")?)))
        .collect::<Result<Vec<_>>>()?;
    let mut rc = ReversedChains::new(orders);
    for p in 1..=top {
        chain_boundary(g, a, p, |s, t, c| rc.entry(p, s, t, c));
    }
    Ok(rc.homology().into_iter().map(|h| h.canonical()).collect())
}

pub fn group_homology(a: &GModule, n: usize) -> Result<FgAbGroup> {
    Ok(group_homology_all(a, n)?.pop().expect("nonempty"))
}

/// The homogeneous bar resolution `B_n = ℤ[G^{n+1}]`,
/// `∂(g₀…g_n) = Σ(−1)ⁱ(g₀…ĝᵢ…g_n)`, as a chain complex of free abelian
/// groups; `G` acts diagonally (see [`BarResolution::module`]).
#[derive(Clone, Debug)]
pub struct BarResolution {
    pub group: FinGroup,
    pub complex: ChainComplex,
}

pub fn bar_resolution(g: &FinGroup, length: usize) -> Result<BarResolution> {
    let n = g.order();
    let ranks = (0..=length).map(|p| tuple_count(n, p + 1, 1, "bar resolution")).collect::<Result<Vec<_>>>()?;
    let groups: Vec<FgAbGroup> = ranks.iter().map(|&r| FgAbGroup::free(r)).collect();
    let mut boundaries = Vec::with_capacity(length);
    for p in 1..=length {
        let mut m = IntMatrix::zeros(ranks[p - 1], ranks[p]);
        for x in 0..ranks[p] {
            let t = digits(x, n, p + 1);
            for i in 0..=p {
                let mut s = t.clone();
                s.remove(i);
                let y = index(&s, n);
                m.set(y, x, m.get(y, x) + sign(i));
            }
        }
        boundaries.push(AbMorphism::new(groups[p].clone(), groups[p - 1].clone(), m)?);
    }
    Ok(BarResolution { group: g.clone(), complex: ChainComplex::new(groups, boundaries)? })
}

impl BarResolution {
    pub fn length(&self) -> usize {
        self.complex.length()
    }

    /// `B_n` as a permutation module.
    pub fn module(&self, n: usize) -> GModule {
        let g = &self.group;
        let size = g.order();
        let rank = self.complex.group(n).ngens();
        let action = (0..size)
            .map(|x| {
                let mut m = IntMatrix::zeros(rank, rank);
                for c in 0..rank {
                    let t: Vec<usize> = digits(c, size, n + 1).into_iter().map(|y| g.mul(x, y)).collect();
                    m.set(index(&t, size), c, 1);
                }
                m
            })
            .collect();
        GModule::new(g.clone(), self.complex.group(n).clone(), action).expect("diagonal action")
    }

    /// The augmented complex `B_length → ⋯ → B_0 → ℤ` has zero homology
    /// at `ℤ` and at `B_0 … B_{length−1}`.
    pub fn augmentation_exact(&self) -> bool {
        let l = self.length();
        let mut groups = vec![FgAbGroup::integers()];
        groups.extend(self.complex.groups().iter().cloned());
        let eps = IntMatrix::from_rows(&[vec![1; self.complex.group(0).ngens()]], self.complex.group(0).ngens());
        let mut bds = vec![AbMorphism::new(groups[1].clone(), groups[0].clone(), eps).expect("augmentation")];
        bds.extend((1..=l).map(|p| self.complex.boundary(p).clone()));
        let aug = ChainComplex::new(groups, bds).expect("augmentation composes to zero");
        (0..=l).all(|n| aug.homology(n).is_trivial())
    }
}

/// `Tor_n^{ℤ[G]}(M, N)` for `ℤ`-free `M`, computed as `H_n(G, M ⊗ N)`
/// (`M` is made a right module by `m·g = g⁻¹m`).
pub fn tor(m: &GModule, n_mod: &GModule, n: usize) -> Result<FgAbGroup> {
    Ok(tor_all(m, n_mod, n)?.pop().expect("nonempty"))
}

pub fn tor_all(m: &GModule, n_mod: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    if !m.is_z_free() {
        return Err(Error::Invalid("Tor is implemented for a Z-free first argument".into()));
    }
    group_homology_all(&GModule::tensor(m, n_mod)?, max)
}

/// `Ext^n_{ℤ[G]}(M, N)` for `ℤ`-free `M`, computed as `Hⁿ(G, Hom(M, N))`.
pub fn ext(m: &GModule, n_mod: &GModule, n: usize) -> Result<FgAbGroup> {
    Ok(ext_all(m, n_mod, n)?.pop().expect("nonempty"))
}

pub fn ext_all(m: &GModule, n_mod: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    group_cohomology_all(&GModule::hom(m, n_mod)?, max)
}

/// Two lists of groups expected to agree degreewise (canonical forms).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub left: Vec<FgAbGroup>,
    pub right: Vec<FgAbGroup>,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.left.len() == self.right.len() && self.left.iter().zip(&self.right).all(|(a, b)| a.is_isomorphic(b))
    }
}

/// `Tor_*(M, N)` three ways: resolving `M`, resolving `N`, and the total
/// complex of both resolutions tensored together.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedReport {
    pub resolve_first: Vec<FgAbGroup>,
    pub resolve_second: Vec<FgAbGroup>,
    pub total: Vec<FgAbGroup>,
}

impl BalancedReport {
    pub fn holds(&self) -> bool {
        let same =
            |a: &[FgAbGroup], b: &[FgAbGroup]| a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.is_isomorphic(y));
        same(&self.resolve_first, &self.resolve_second) && same(&self.resolve_first, &self.total)
    }
}

pub fn balanced_check(m: &GModule, n_mod: &GModule, max: usize) -> Result<BalancedReport> {
    if !m.is_z_free() || !n_mod.is_z_free() {
        return Err(Error::Invalid("the balanced check needs Z-free modules on both sides".into()));
    }
    let resolve_first = tor_all(m, n_mod, max)?;
    let resolve_second = homogeneous_coinvariants(&GModule::tensor(n_mod, m)?, max)?;
    let total = tot_of_resolutions(&GModule::tensor(m, n_mod)?, max)?;
    Ok(BalancedReport { resolve_first, resolve_second, total })
}

/// `H_*` of `(B ⊗ T)_G` with `B` homogeneous; orbit representatives
/// `(e, h₁…h_n) ⊗ v`.
fn homogeneous_coinvariants(t: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    let g = t.group();
    let size = g.order();
    let k = t.carrier().ngens();
    let top = max + 1;
    let orders = (0..=top)
        .map(|p| Ok(repeat_orders(t.carrier().orders(), tuple_count(size, p, k, "homogeneous chains")?)))
        .collect::<Result<Vec<_>>>()?;
    let mut rc = ReversedChains::new(orders);
    for p in 1..=top {
        for hi in 0..size.pow(p as u32) {
            let h = digits(hi, size, p);
            let hinv = g.inv(h[0]);
            let normalized: Vec<usize> = h[1..].iter().map(|&x| g.mul(hinv, x)).collect();
            let face0 = index(&normalized, size);
            for j in 0..k {
                let src = hi * k + j;
                for (row, c) in t.act_column(hinv, j) {
                    rc.entry(p, src, face0 * k + row, c);
                }
                for i in 1..=p {
                    let mut s = h.clone();
                    s.remove(i - 1);
                    rc.entry(p, src, index(&s, size) * k + j, sign(i));
                }
            }
        }
    }
    Ok(rc.homology().into_iter().map(|h| h.canonical()).collect())
}

/// `H_*` of `Tot((B ⊗ M) ⊗_G (B ⊗ N))`; in bidegree `(p, q)` the orbit
/// representatives are `(e, h₁…h_p; k₀…k_q) ⊗ v`, `v ∈ M ⊗ N`.
fn tot_of_resolutions(t: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    let g = t.group();
    let size = g.order();
    let k = t.carrier().ngens();
    let top = max + 1;
    // offsets[n][p]: start of block (p, n − p) inside Tot_n; every block
    // has |G|^{n+1} tuples
    let mut offsets = Vec::with_capacity(top + 1);
    let mut orders = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let block = tuple_count(size, n + 1, k * (n + 1), "total complex")?;
        offsets.push((0..=n).map(|p| p * block * k).collect::<Vec<_>>());
        orders.push(repeat_orders(t.carrier().orders(), block * (n + 1)));
    }
    let mut rc = ReversedChains::new(orders);
    for n in 1..=top {
        for p in 0..=n {
            let q = n - p;
            let kq = size.pow(q as u32 + 1);
            for hi in 0..size.pow(p as u32) {
                let h = digits(hi, size, p);
                for ki in 0..kq {
                    let kk = digits(ki, size, q + 1);
                    for j in 0..k {
                        let src = offsets[n][p] + (hi * kq + ki) * k + j;
                        if p > 0 {
                            let hinv = g.inv(h[0]);
                            let nh: Vec<usize> = h[1..].iter().map(|&x| g.mul(hinv, x)).collect();
                            let nk: Vec<usize> = kk.iter().map(|&x| g.mul(hinv, x)).collect();
                            let base = offsets[n - 1][p - 1] + (index(&nh, size) * kq + index(&nk, size)) * k;
                            for (row, c) in t.act_column(hinv, j) {
                                rc.entry(n, src, base + row, c);
                            }
                            for i in 1..=p {
                                let mut s = h.clone();
                                s.remove(i - 1);
                                rc.entry(n, src, offsets[n - 1][p - 1] + (index(&s, size) * kq + ki) * k + j, sign(i));
                            }
                        }
                        if q > 0 {
                            let kq1 = kq / size;
                            for jj in 0..=q {
                                let mut s = kk.clone();
                                s.remove(jj);
                                let tgt = offsets[n - 1][p] + (hi * kq1 + index(&s, size)) * k + j;
                                rc.entry(n, src, tgt, sign(p) * sign(jj));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(rc.homology().into_iter().map(|h| h.canonical()).collect())
}

/// `Hⁿ(H, A)` against `Hⁿ(G, Coind_H^G A)` for `n ≤ max`.
pub fn shapiro_check(a: &GModule, g: &FinGroup, iota: &[usize], max: usize) -> Result<Comparison> {
    let coind = GModule::coinduced(a, g, iota)?;
    Ok(Comparison { left: group_cohomology_all(a, max)?, right: group_cohomology_all(&coind, max)? })
}

/// Cardinalities of `Hom_G(B ⊗ A, C)` and `Hom_ℤ(A, Hom_G(B, C))` for an
/// abelian group `A` and finite `G`-modules `B`, `C`, by enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdjunctionCount {
    pub tensor_side: u128,
    pub hom_side: u128,
}

impl AdjunctionCount {
    pub fn holds(&self) -> bool {
        self.tensor_side == self.hom_side
    }
}

/// Enumeration cap on candidate homomorphisms.
pub const ENUMERATION_BUDGET: usize = 1_000_000;

pub fn hom_tensor_adjunction_check(a: &FgAbGroup, b: &GModule, c: &GModule) -> Result<AdjunctionCount> {
    if b.group() != c.group() {
        return Err(Error::Invalid("B and C are modules over different groups".into()));
    }
    if !a.is_finite() || !b.carrier().is_finite() || !c.carrier().is_finite() {
        return Err(Error::Invalid("the adjunction check enumerates, so all carriers must be finite".into()));
    }
    let ba = GModule::tensor(b, &GModule::trivial(b.group(), a))?;
    let tensor_side = equivariant_homs(&ba, c)?.len() as u128;
    let hom_bc = equivariant_homs(b, c)?;
    let cg = c.carrier();
    let mut hom_side = 1u128;
    for &o in a.orders() {
        let killed = hom_bc
            .iter()
            .filter(|f| {
                f.chunks(cg.ngens().max(1))
                    .all(|col| cg.is_zero(&col.iter().map(|&x| x * o as i128).collect::<Vec<_>>()))
            })
            .count();
        hom_side *= killed as u128;
    }
    Ok(AdjunctionCount { tensor_side, hom_side })
}

/// All `G`-maps `X → Y` as concatenated image columns.
fn equivariant_homs(x: &GModule, y: &GModule) -> Result<Vec<Vec<i128>>> {
    let yc = y.carrier();
    let elems = yc.elements()?;
    let candidates: Vec<Vec<&Vec<i128>>> = x
        .carrier()
        .orders()
        .iter()
        .map(|&o| {
            elems
                .iter()
                .filter(|e| o == 0 || yc.is_zero(&e.iter().map(|&v| v * o as i128).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let total =
        candidates.iter().try_fold(1usize, |acc, c| acc.checked_mul(c.len()).filter(|&t| t <= ENUMERATION_BUDGET));
    if total.is_none() {
        return Err(Error::Budget { what: "homomorphism enumeration".into(), limit: ENUMERATION_BUDGET });
    }
    let r = x.carrier().ngens();
    let s = yc.ngens();
    let mut out = Vec::new();
    let mut choice = vec![0usize; r];
    loop {
        let mut f = IntMatrix::zeros(s, r);
        for (i, &c) in choice.iter().enumerate() {
            for (row, &v) in candidates[i][c].iter().enumerate() {
                f.set(row, i, v);
            }
        }
        let equivariant = (0..x.group().order()).all(|g| {
            let lhs = f.mul(x.action(g));
            let rhs = y.action(g).mul(&f);
            (0..r).all(|col| {
                yc.is_zero(&lhs.column(col).iter().zip(rhs.column(col)).map(|(a, b)| a - b).collect::<Vec<_>>())
            })
        });
        if equivariant {
            out.push((0..r).flat_map(|col| f.column(col)).collect());
        }
        let mut i = 0;
        loop {
            if i == r {
                return Ok(out);
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// A generator of a cyclic group, or `None`.
fn cyclic_generator(g: &FinGroup) -> Option<usize> {
    (0..g.order()).find(|&x| g.element_order(x) == g.order())
}

fn add_dense(sc: &mut SparseComplex, k: usize, m: &IntMatrix) {
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            if m.get(r, c) != 0 {
                sc.add_entry(k, c, r, m.get(r, c));
            }
        }
    }
}

fn periodic_maps(a: &GModule) -> Result<(IntMatrix, IntMatrix)> {
    let g = a.group();
    let t = cyclic_generator(g).ok_or_else(|| Error::Invalid("the periodic resolution needs a cyclic group".into()))?;
    let n = a.carrier().ngens();
    let t_minus_1 = a.action(t).add(&IntMatrix::identity(n).neg());
    let norm = (0..g.order()).fold(IntMatrix::zeros(n, n), |acc, x| acc.add(a.action(x)));
    Ok((t_minus_1, norm))
}

/// `Hⁿ(ℤ/m, A)` from `A --(t−1)--> A --N--> A --(t−1)--> ⋯`.
pub fn periodic_cohomology(a: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    let (tm, norm) = periodic_maps(a)?;
    let mut sc = SparseComplex::new();
    for _ in 0..=max + 1 {
        sc.push_degree(a.carrier().orders().to_vec());
    }
    for k in 0..=max {
        add_dense(&mut sc, k, if k % 2 == 0 { &tm } else { &norm });
    }
    Ok(sc.cohomology_all().into_iter().map(|h| h.canonical()).collect())
}

/// `H_n(ℤ/m, A)` from `⋯ --(t−1)--> A --N--> A --(t−1)--> A`.
pub fn periodic_homology(a: &GModule, max: usize) -> Result<Vec<FgAbGroup>> {
    let (tm, norm) = periodic_maps(a)?;
    let top = max + 1;
    let mut rc = ReversedChains::new(vec![a.carrier().orders().to_vec(); top + 1]);
    for n in 1..=top {
        let m = if n % 2 == 1 { &tm } else { &norm };
        for c in 0..m.cols() {
            for r in 0..m.rows() {
                if m.get(r, c) != 0 {
                    rc.entry(n, c, r, m.get(r, c));
                }
            }
        }
    }
    Ok(rc.homology().into_iter().map(|h| h.canonical()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(v: &[FgAbGroup]) -> Vec<Vec<u64>> {
        v.iter().map(|g| g.invariant_factors()).collect()
    }

    #[test]
    fn cyclic_cohomology_with_integer_coefficients() {
        for m in [2usize, 3] {
            let a = GModule::integers(&FinGroup::cyclic(m));
            let h = group_cohomology_all(&a, 4).unwrap();
            let mm = m as u64;
            assert_eq!(factors(&h), vec![vec![0], vec![], vec![mm], vec![], vec![mm]]);
            assert_eq!(h, periodic_cohomology(&a, 4).unwrap());
        }
    }

    #[test]
    fn homology_of_cyclic_and_abelianization() {
        let a = GModule::integers(&FinGroup::cyclic(3));
        let h = group_homology_all(&a, 3).unwrap();
        assert_eq!(factors(&h), vec![vec![0], vec![3], vec![], vec![3]]);
        assert_eq!(h, periodic_homology(&a, 3).unwrap());
        let s3 = FinGroup::symmetric3();
        assert_eq!(group_homology(&GModule::integers(&s3), 1).unwrap(), s3.abelianization());
    }

    #[test]
    fn bar_resolution_is_exact() {
        for g in [FinGroup::trivial(), FinGroup::cyclic(2), FinGroup::cyclic(3)] {
            let b = bar_resolution(&g, 3).unwrap();
            assert_eq!(b.complex.group(1).ngens(), g.order().pow(2));
            assert!(b.augmentation_exact());
            assert_eq!(b.module(1).carrier().ngens(), g.order().pow(2));
        }
    }

    #[test]
    fn tor_and_ext_examples() {
        let g = FinGroup::cyclic(2);
        let zg = GModule::regular(&g);
        let n = GModule::trivial(&g, &FgAbGroup::cyclic(4));
        let t = tor_all(&zg, &n, 3).unwrap();
        assert!(t[0].is_isomorphic(&FgAbGroup::cyclic(4)));
        assert!(t[1..].iter().all(FgAbGroup::is_trivial));
        let z = GModule::integers(&g);
        assert_eq!(ext_all(&z, &z, 4).unwrap(), group_cohomology_all(&z, 4).unwrap());
        let z5 = GModule::integers(&FinGroup::cyclic(5));
        assert!(tor(&z5, &z5, 1).unwrap().is_isomorphic(&FgAbGroup::cyclic(5)));
    }

    #[test]
    fn balanced_for_small_cases() {
        let g = FinGroup::cyclic(2);
        let z = GModule::integers(&g);
        let r = balanced_check(&z, &z, 3).unwrap();
        assert!(r.holds(), "{r:?}");
        let free = balanced_check(&GModule::regular(&g), &z, 2).unwrap();
        assert!(free.holds());
        assert!(free.total[1..].iter().all(FgAbGroup::is_trivial));
    }

    #[test]
    fn shapiro_from_trivial_subgroup() {
        let a = GModule::integers(&FinGroup::trivial());
        let c = shapiro_check(&a, &FinGroup::cyclic(2), &[0], 3).unwrap();
        assert!(c.holds());
        assert!(c.right[1..].iter().all(FgAbGroup::is_trivial));
    }

    #[test]
    fn adjunction_counts() {
        let g = FinGroup::cyclic(2);
        let b = GModule::trivial(&g, &FgAbGroup::cyclic(2)).clone();
        let swap = GModule::from_generator_action(
            g.clone(),
            FgAbGroup::from_orders(vec![2, 2]),
            &[(1, IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]], 2))],
        )
        .unwrap();
        let r = hom_tensor_adjunction_check(&FgAbGroup::cyclic(4), &swap, &swap).unwrap();
        assert!(r.holds());
        let zero = GModule::trivial(&g, &FgAbGroup::trivial());
        let r0 = hom_tensor_adjunction_check(&FgAbGroup::cyclic(2), &b, &zero).unwrap();
        assert_eq!((r0.tensor_side, r0.hom_side), (1, 1));
    }
}
