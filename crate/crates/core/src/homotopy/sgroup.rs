//! Simplicial groups with finite levels, and their Moore complexes.

use std::sync::Arc;

use super::group::{is_homomorphism, FinGroup};
use crate::abelian::SimplicialAbGroup;
use crate::error::{Error, Result};
use crate::simplicial::{constructions::disc, TruncSSet};

/// Level `n` is a [`FinGroup`] whose elements are the `n`-cells of the
/// underlying simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGroup {
    levels: Vec<FinGroup>,
    sset: Arc<TruncSSet>,
}

impl SimplicialGroup {
    pub fn new(levels: Vec<FinGroup>, sset: Arc<TruncSSet>) -> Result<SimplicialGroup> {
        let g = SimplicialGroup::new_unchecked(levels, sset)?;
        let problems = g.validate();
        if let Some(p) = problems.first() {
            return Err(Error::Invalid(format!("not a simplicial group: {p}")));
        }
        Ok(g)
    }

    pub(crate) fn new_unchecked(levels: Vec<FinGroup>, sset: Arc<TruncSSet>) -> Result<SimplicialGroup> {
        if levels.len() != sset.trunc_dim() + 1 || levels.iter().enumerate().any(|(n, g)| g.order() != sset.cells(n)) {
            return Err(Error::Dimension("group orders do not match cell counts".into()));
        }
        Ok(SimplicialGroup { levels, sset })
    }

    /// `disc G`, constant with identity structure maps.
    pub fn discrete(g: &FinGroup, d: usize) -> SimplicialGroup {
        SimplicialGroup { levels: vec![g.clone(); d + 1], sset: Arc::new(disc(g.order(), d)) }
    }

    /// Forgets that a finite simplicial abelian group is abelian.
    pub fn from_ab(a: &SimplicialAbGroup) -> Result<SimplicialGroup> {
        let levels = a.levels().iter().map(FinGroup::from_ab).collect::<Result<Vec<_>>>()?;
        SimplicialGroup::new_unchecked(levels, Arc::new(a.underlying()?))
    }

    pub fn trunc_dim(&self) -> usize {
        self.sset.trunc_dim()
    }

    pub fn level(&self, n: usize) -> &FinGroup {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[FinGroup] {
        &self.levels
    }

    pub fn underlying(&self) -> &Arc<TruncSSet> {
        &self.sset
    }

    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        self.sset.face_map(n, i)
    }

    pub fn degen(&self, n: usize, i: usize) -> &[usize] {
        self.sset.degen_map(n, i)
    }

    /// Simplicial identities on the underlying set, then the homomorphism
    /// property of every structure map.
    pub fn validate(&self) -> Vec<String> {
        let mut out: Vec<String> = self.sset.validate().iter().map(|v| format!("{v:?}")).collect();
        let d = self.trunc_dim();
        for n in 1..=d {
            for i in 0..=n {
                if !is_homomorphism(&self.levels[n], &self.levels[n - 1], self.face(n, i)) {
                    out.push(format!("d_{i} on level {n} is not a homomorphism"));
                }
            }
        }
        for n in 0..d {
            for i in 0..=n {
                if !is_homomorphism(&self.levels[n], &self.levels[n + 1], self.degen(n, i)) {
                    out.push(format!("s_{i} on level {n} is not a homomorphism"));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.levels.iter().all(FinGroup::is_abelian)
    }
}

/// `N_n = ⋂_{i>0} ker dᵢ` as sorted element lists of `G_n`, with
/// `d₀ : N_n → N_{n-1}` recorded elementwise.
#[derive(Clone, Debug)]
pub struct MooreComplex {
    pub subgroups: Vec<Vec<usize>>,
    /// `boundaries[n][j] = d₀(subgroups[n][j])`; empty for `n = 0`.
    pub boundaries: Vec<Vec<usize>>,
}

pub fn moore_complex(g: &SimplicialGroup) -> Result<MooreComplex> {
    let d = g.trunc_dim();
    let mut subgroups = Vec::with_capacity(d + 1);
    let mut boundaries = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let e = if n == 0 { 0 } else { g.level(n - 1).identity() };
        let sub: Vec<usize> = (0..g.level(n).order()).filter(|&x| (1..=n).all(|i| g.face(n, i)[x] == e)).collect();
        let bd: Vec<usize> = if n == 0 { Vec::new() } else { sub.iter().map(|&x| g.face(n, 0)[x]).collect() };
        subgroups.push(sub);
        boundaries.push(bd);
    }
    for n in 1..=d {
        for &b in &boundaries[n] {
            if subgroups[n - 1].binary_search(&b).is_err() {
                return Err(Error::Inconsistent(format!("d₀ does not map N_{n} into N_{}", n - 1)));
            }
        }
        if n >= 2 {
            let e = g.level(n - 2).identity();
            if boundaries[n].iter().any(|&b| g.face(n - 1, 0)[b] != e) {
                return Err(Error::Inconsistent(format!("d₀d₀ is nontrivial on N_{n}")));
            }
        }
    }
    Ok(MooreComplex { subgroups, boundaries })
}

impl MooreComplex {
    /// Cycles of degree `n`, sorted.
    pub fn cycles(&self, g: &SimplicialGroup, n: usize) -> Vec<usize> {
        if n == 0 {
            return self.subgroups[0].clone();
        }
        let e = g.level(n - 1).identity();
        self.subgroups[n].iter().zip(&self.boundaries[n]).filter(|(_, &b)| b == e).map(|(&x, _)| x).collect()
    }

    /// Boundaries landing in degree `n`, sorted.
    pub fn boundary_image(&self, n: usize) -> Vec<usize> {
        let mut b = self.boundaries[n + 1].clone();
        b.sort_unstable();
        b.dedup();
        b
    }
}

/// `πₙ(G) = Z_n / B_n` of the Moore complex, for `n + 1 <= D`.
pub fn pi_n_group(g: &SimplicialGroup, n: usize) -> Result<FinGroup> {
    if n + 1 > g.trunc_dim() {
        return Err(Error::Dimension(format!("π_{n} needs truncation at least {}", n + 1)));
    }
    let mc = moore_complex(g)?;
    let z = mc.cycles(g, n);
    let b = mc.boundary_image(n);
    let zg = g.level(n).subgroup(&z)?;
    let b_in_z: Vec<usize> = b
        .iter()
        .map(|x| z.binary_search(x).map_err(|_| Error::Inconsistent("a boundary is not a cycle".into())))
        .collect::<Result<_>>()?;
    if !zg.is_normal(&b_in_z) {
        return Err(Error::Inconsistent(format!("B_{n} is not normal in Z_{n}")));
    }
    Ok(zg.quotient(&b_in_z)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::{dold_kan_gamma, ChainComplex, FgAbGroup};

    #[test]
    fn discrete_group() {
        let g = SimplicialGroup::discrete(&FinGroup::symmetric3(), 3);
        assert!(g.validate().is_empty());
        let mc = moore_complex(&g).unwrap();
        assert_eq!(mc.subgroups[0].len(), 6);
        assert!(mc.subgroups[1..].iter().all(|s| s.len() == 1));
        assert!(pi_n_group(&g, 0).unwrap().is_isomorphic(&FinGroup::symmetric3()));
        assert_eq!(pi_n_group(&g, 1).unwrap().order(), 1);
    }

    #[test]
    fn gamma_of_a_sphere() {
        let b = ChainComplex::concentrated(FgAbGroup::cyclic(3), 1);
        let a = dold_kan_gamma(&b, 3).unwrap();
        let g = SimplicialGroup::from_ab(&a).unwrap();
        assert!(g.validate().is_empty());
        assert_eq!(pi_n_group(&g, 0).unwrap().order(), 1);
        assert!(pi_n_group(&g, 1).unwrap().is_isomorphic(&FinGroup::cyclic(3)));
        assert_eq!(pi_n_group(&g, 2).unwrap().order(), 1);
    }
}
