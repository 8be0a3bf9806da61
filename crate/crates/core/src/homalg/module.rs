//! Modules over integral group rings of finite groups, and group
//! extensions.

use std::collections::VecDeque;

use crate::abelian::intmat::reduce_mod;
use crate::abelian::{AbMorphism, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::homotopy::{is_homomorphism, FinGroup};

/// A left `ℤ[G]`-module: a finitely generated abelian group with one
/// automorphism matrix per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    group: FinGroup,
    carrier: FgAbGroup,
    action: Vec<IntMatrix>,
}

fn reduce_rows(m: &IntMatrix, orders: &[u64]) -> IntMatrix {
    let mut out = m.clone();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(r, c, reduce_mod(m.get(r, c), orders[r]));
        }
    }
    out
}

impl GModule {
    /// Checks that every matrix is an endomorphism of the carrier, that
    /// the identity acts trivially and that `g·(h·a) = (gh)·a`.
    pub fn new(group: FinGroup, carrier: FgAbGroup, action: Vec<IntMatrix>) -> Result<GModule> {
        if action.len() != group.order() {
            return Err(Error::Dimension(format!(
                "{} action matrices for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        let action = action
            .iter()
            .map(|m| AbMorphism::new(carrier.clone(), carrier.clone(), m.clone()).map(|f| f.matrix().clone()))
            .collect::<Result<Vec<_>>>()?;
        let m = GModule { group, carrier, action };
        m.check()?;
        Ok(m)
    }

    fn check(&self) -> Result<()> {
        let o = self.carrier.orders();
        let id = reduce_rows(&IntMatrix::identity(self.carrier.ngens()), o);
        if self.action[self.group.identity()] != id {
            return Err(Error::Invalid("the identity element does not act as the identity".into()));
        }
        for g in 0..self.group.order() {
            for h in 0..self.group.order() {
                let lhs = reduce_rows(&self.action[g].mul(&self.action[h]), o);
                if lhs != self.action[self.group.mul(g, h)] {
                    return Err(Error::Invalid(format!("action is not multiplicative at ({g}, {h})")));
                }
            }
        }
        Ok(())
    }

    /// Extends matrices given on some elements (typically generators) to
    /// the whole group by closure, then validates.
    pub fn from_generator_action(group: FinGroup, carrier: FgAbGroup, given: &[(usize, IntMatrix)]) -> Result<GModule> {
        let n = carrier.ngens();
        let o = carrier.orders().to_vec();
        let mut action: Vec<Option<IntMatrix>> = vec![None; group.order()];
        action[group.identity()] = Some(reduce_rows(&IntMatrix::identity(n), &o));
        let mut queue = VecDeque::from([group.identity()]);
        while let Some(x) = queue.pop_front() {
            for (g, m) in given {
                if *g >= group.order() || m.rows() != n || m.cols() != n {
                    return Err(Error::Invalid(format!("action matrix for element {g} has the wrong shape")));
                }
                let y = group.mul(*g, x);
                let my = reduce_rows(&m.mul(action[x].as_ref().unwrap()), &o);
                match &action[y] {
                    None => {
                        action[y] = Some(my);
                        queue.push_back(y);
                    }
                    Some(prev) if *prev != my => {
                        return Err(Error::Invalid(format!("given matrices are inconsistent at element {y}")))
                    }
                    _ => {}
                }
            }
        }
        let action = action
            .into_iter()
            .map(|m| m.ok_or_else(|| Error::Invalid("given elements do not generate the group".into())))
            .collect::<Result<Vec<_>>>()?;
        GModule::new(group, carrier, action)
    }

    pub fn trivial(group: &FinGroup, carrier: &FgAbGroup) -> GModule {
        let id = reduce_rows(&IntMatrix::identity(carrier.ngens()), carrier.orders());
        GModule { group: group.clone(), carrier: carrier.clone(), action: vec![id; group.order()] }
    }

    /// `ℤ` with trivial action.
    pub fn integers(group: &FinGroup) -> GModule {
        GModule::trivial(group, &FgAbGroup::integers())
    }

    /// `ℤ[G]` with basis the group elements, `g·e_x = e_{gx}`.
    pub fn regular(group: &FinGroup) -> GModule {
        let n = group.order();
        let action = (0..n)
            .map(|g| {
                let mut m = IntMatrix::zeros(n, n);
                for x in 0..n {
                    m.set(group.mul(g, x), x, 1);
                }
                m
            })
            .collect();
        GModule { group: group.clone(), carrier: FgAbGroup::free(n), action }
    }

    pub fn group(&self) -> &FinGroup {
        &self.group
    }

    pub fn carrier(&self) -> &FgAbGroup {
        &self.carrier
    }

    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    pub fn act(&self, g: usize, v: &[i128]) -> Vec<i128> {
        self.carrier.reduce(&self.action[g].mul_vec(v))
    }

    pub fn is_z_free(&self) -> bool {
        self.carrier.orders().iter().all(|&o| o == 0)
    }

    /// Restriction along an injective homomorphism `ι : H → G`.
    pub fn restrict(&self, h: &FinGroup, iota: &[usize]) -> Result<GModule> {
        if !is_homomorphism(h, &self.group, iota) {
            return Err(Error::Invalid("restriction along a map that is not a homomorphism".into()));
        }
        Ok(GModule {
            group: h.clone(),
            carrier: self.carrier.clone(),
            action: iota.iter().map(|&g| self.action[g].clone()).collect(),
        })
    }

    /// `M ⊗_ℤ N` with the diagonal action; generator `(i, j)` is
    /// `mᵢ ⊗ nⱼ` at index `i·|gens N| + j`, of order `gcd(oᵢ, oⱼ)`.
    pub fn tensor(m: &GModule, n: &GModule) -> Result<GModule> {
        if m.group != n.group {
            return Err(Error::Invalid("tensor of modules over different groups".into()));
        }
        let (om, on) = (m.carrier.orders(), n.carrier.orders());
        let orders: Vec<u64> = om
            .iter()
            .flat_map(|&a| on.iter().map(move |&b| crate::abelian::intmat::gcd(a as i128, b as i128) as u64))
            .collect();
        let carrier = FgAbGroup::from_orders(orders.clone());
        let action = (0..m.group.order()).map(|g| reduce_rows(&kron(&m.action[g], &n.action[g]), &orders)).collect();
        Ok(GModule { group: m.group.clone(), carrier, action })
    }

    /// `Hom_ℤ(M, N)` for `ℤ`-free `M`, with `(g·f)(x) = g·f(g⁻¹x)`; the
    /// coordinates are `(f(e₁), …, f(e_r))`.
    pub fn hom(m: &GModule, n: &GModule) -> Result<GModule> {
        if m.group != n.group {
            return Err(Error::Invalid("Hom of modules over different groups".into()));
        }
        if !m.is_z_free() {
            return Err(Error::Invalid("Hom(M, N) is implemented for Z-free M only".into()));
        }
        let r = m.carrier.ngens();
        let k = n.carrier.ngens();
        let carrier = n.carrier.power(r);
        let action = (0..m.group.order())
            .map(|g| {
                let minv = &m.action[m.group.inv(g)];
                let ng = &n.action[g];
                let mut out = IntMatrix::zeros(r * k, r * k);
                for i in 0..r {
                    for l in 0..r {
                        let c = minv.get(l, i);
                        if c == 0 {
                            continue;
                        }
                        for a in 0..k {
                            for b in 0..k {
                                out.set(i * k + a, l * k + b, out.get(i * k + a, l * k + b) + c * ng.get(a, b));
                            }
                        }
                    }
                }
                reduce_rows(&out, carrier.orders())
            })
            .collect();
        Ok(GModule { group: m.group.clone(), carrier, action })
    }

    /// `Coind_H^G A = Hom_{ℤ[H]}(ℤ[G], A)`, `H` embedded by `iota`. A
    /// function is stored by its values on the right coset representatives
    /// (least element of each coset `Hx`), and `(g·f)(x) = f(xg)`.
    pub fn coinduced(a: &GModule, g: &FinGroup, iota: &[usize]) -> Result<GModule> {
        let h = &a.group;
        if !is_homomorphism(h, g, iota) {
            return Err(Error::Invalid("iota is not a homomorphism".into()));
        }
        let cosets = RightCosets::new(g, iota)?;
        let k = a.carrier.ngens();
        let idx = cosets.reps.len();
        let carrier = a.carrier.power(idx);
        let action = (0..g.order())
            .map(|x| {
                let mut out = IntMatrix::zeros(idx * k, idx * k);
                for (j, &r) in cosets.reps.iter().enumerate() {
                    // r·x = h·r'
                    let (jp, hh) = cosets.decompose(g.mul(r, x));
                    let ah = &a.action[hh];
                    for u in 0..k {
                        for v in 0..k {
                            out.set(j * k + u, jp * k + v, ah.get(u, v));
                        }
                    }
                }
                reduce_rows(&out, carrier.orders())
            })
            .collect();
        GModule::new(g.clone(), carrier, action)
    }
}

/// Right cosets `Hx` of an embedded subgroup.
pub(crate) struct RightCosets {
    /// Least element of each coset.
    pub reps: Vec<usize>,
    /// `coset[x]` and `h_of[x]` with `x = ι(h_of[x])·reps[coset[x]]`.
    coset: Vec<usize>,
    h_of: Vec<usize>,
}

impl RightCosets {
    pub fn new(g: &FinGroup, iota: &[usize]) -> Result<RightCosets> {
        let mut seen = vec![false; g.order()];
        for &x in iota {
            if seen[x] {
                return Err(Error::Invalid("iota is not injective".into()));
            }
            seen[x] = true;
        }
        let mut coset = vec![usize::MAX; g.order()];
        let mut h_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset[x] == usize::MAX {
                for (hi, &hg) in iota.iter().enumerate() {
                    let y = g.mul(hg, x);
                    coset[y] = reps.len();
                    h_of[y] = hi;
                }
                reps.push(x);
            }
        }
        Ok(RightCosets { reps, coset, h_of })
    }

    /// `(j, h)` with `x = ι(h)·reps[j]`.
    pub fn decompose(&self, x: usize) -> (usize, usize) {
        (self.coset[x], self.h_of[x])
    }
}

pub(crate) fn kron(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let c = a.get(i, j);
            if c == 0 {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, c * b.get(k, l));
                }
            }
        }
    }
    out
}

/// `1 → H → G → Q → 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupExtension {
    pub h: FinGroup,
    pub g: FinGroup,
    pub q: FinGroup,
    pub iota: Vec<usize>,
    pub pi: Vec<usize>,
}

impl GroupExtension {
    pub fn new(h: FinGroup, g: FinGroup, q: FinGroup, iota: Vec<usize>, pi: Vec<usize>) -> Result<GroupExtension> {
        if !is_homomorphism(&h, &g, &iota) || !is_homomorphism(&g, &q, &pi) {
            return Err(Error::Invalid("iota and pi must be homomorphisms".into()));
        }
        let mut img = iota.clone();
        img.sort_unstable();
        img.dedup();
        if img.len() != h.order() {
            return Err(Error::Invalid("iota is not injective".into()));
        }
        let mut hit = vec![false; q.order()];
        for &y in &pi {
            hit[y] = true;
        }
        if hit.contains(&false) {
            return Err(Error::Invalid("pi is not surjective".into()));
        }
        let kernel: Vec<usize> = (0..g.order()).filter(|&x| pi[x] == q.identity()).collect();
        if kernel != img {
            return Err(Error::Invalid("image of iota differs from the kernel of pi".into()));
        }
        if !g.is_normal(&img) {
            return Err(Error::Invalid("image of iota is not normal".into()));
        }
        Ok(GroupExtension { h, g, q, iota, pi })
    }

    /// `N ◁ G → G → G/N` for a normal subgroup given by its elements.
    pub fn from_normal_subgroup(g: &FinGroup, normal: &[usize]) -> Result<GroupExtension> {
        let mut elems = normal.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let h = g.subgroup(&elems)?;
        let (q, pi) = g.quotient(&elems)?;
        GroupExtension::new(h, g.clone(), q, elems, pi)
    }

    /// Least preimage of each element of `Q`.
    pub fn section(&self) -> Vec<usize> {
        let mut s = vec![usize::MAX; self.q.order()];
        for x in (0..self.g.order()).rev() {
            s[self.pi[x]] = x;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_and_trivial_modules() {
        let g = FinGroup::symmetric3();
        let r = GModule::regular(&g);
        assert!(GModule::new(g.clone(), r.carrier().clone(), (0..6).map(|x| r.action(x).clone()).collect()).is_ok());
        let t = GModule::trivial(&g, &FgAbGroup::cyclic(4));
        assert_eq!(t.act(3, &[3]), vec![3]);
    }

    #[test]
    fn sign_module_from_generators() {
        let g = FinGroup::cyclic(2);
        let m =
            GModule::from_generator_action(g, FgAbGroup::integers(), &[(1, IntMatrix::from_i64_rows(&[vec![-1]], 1))])
                .unwrap();
        assert_eq!(m.act(1, &[5]), vec![-5]);
        let bad = GModule::from_generator_action(
            FinGroup::cyclic(3),
            FgAbGroup::integers(),
            &[(1, IntMatrix::from_i64_rows(&[vec![-1]], 1))],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn coinduction_from_whole_group_is_identity() {
        let g = FinGroup::cyclic(4);
        let a = GModule::integers(&g);
        let c = GModule::coinduced(&a, &g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(c, a);
        let t = GModule::coinduced(&GModule::integers(&FinGroup::trivial()), &g, &[0]).unwrap();
        assert_eq!(t.carrier().ngens(), 4);
    }

    #[test]
    fn extension_of_z4() {
        let e = GroupExtension::from_normal_subgroup(&FinGroup::cyclic(4), &[0, 2]).unwrap();
        assert_eq!(e.q.order(), 2);
        assert_eq!(e.section(), vec![0, 1]);
        assert!(GroupExtension::from_normal_subgroup(&FinGroup::symmetric3(), &[0, 1]).is_err());
    }
}
