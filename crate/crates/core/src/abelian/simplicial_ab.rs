//! Truncated simplicial objects in finitely generated abelian groups.

use super::intmat::IntMatrix;
use super::{AbMorphism, FgAbGroup};
use crate::error::{Error, Result};
use crate::simplicial::monotone::{coface, identity};
use crate::simplicial::TruncSSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialAbGroup {
    levels: Vec<FgAbGroup>,
    /// `faces[n][i] = dᵢ : A_n → A_{n−1}`; `faces[0]` is empty.
    faces: Vec<Vec<AbMorphism>>,
    /// `degens[n][i] = sᵢ : A_n → A_{n+1}` for `n < D`.
    degens: Vec<Vec<AbMorphism>>,
}

impl SimplicialAbGroup {
    pub fn new(
        levels: Vec<FgAbGroup>,
        faces: Vec<Vec<AbMorphism>>,
        degens: Vec<Vec<AbMorphism>>,
    ) -> Result<SimplicialAbGroup> {
        let a = Self::new_unchecked(levels, faces, degens)?;
        let report = a.validate();
        if !report.is_empty() {
            return Err(Error::Invalid(format!("simplicial identities fail: {}", report.join("; "))));
        }
        Ok(a)
    }

    pub(crate) fn new_unchecked(
        levels: Vec<FgAbGroup>,
        faces: Vec<Vec<AbMorphism>>,
        degens: Vec<Vec<AbMorphism>>,
    ) -> Result<SimplicialAbGroup> {
        let d = levels.len().checked_sub(1).ok_or_else(|| Error::Invalid("no levels".into()))?;
        let shape_ok = faces.len() == d + 1
            && degens.len() == d
            && (0..=d).all(|n| faces[n].len() == if n == 0 { 0 } else { n + 1 })
            && (0..d).all(|n| degens[n].len() == n + 1);
        if !shape_ok {
            return Err(Error::Dimension("wrong number of face or degeneracy maps".into()));
        }
        for n in 0..=d {
            for f in &faces[n] {
                if f.source() != &levels[n] || f.target() != &levels[n - 1] {
                    return Err(Error::Dimension(format!("face at level {n} has wrong groups")));
                }
            }
            if n < d {
                for s in &degens[n] {
                    if s.source() != &levels[n] || s.target() != &levels[n + 1] {
                        return Err(Error::Dimension(format!("degeneracy at level {n} has wrong groups")));
                    }
                }
            }
        }
        Ok(SimplicialAbGroup { levels, faces, degens })
    }

    /// Constant simplicial group on `a`.
    pub fn discrete(a: &FgAbGroup, d: usize) -> SimplicialAbGroup {
        let id = AbMorphism::identity(a);
        SimplicialAbGroup {
            levels: vec![a.clone(); d + 1],
            faces: (0..=d).map(|n| if n == 0 { Vec::new() } else { vec![id.clone(); n + 1] }).collect(),
            degens: (0..d).map(|n| vec![id.clone(); n + 1]).collect(),
        }
    }

    pub fn trunc_dim(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &FgAbGroup {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[FgAbGroup] {
        &self.levels
    }

    pub fn face(&self, n: usize, i: usize) -> &AbMorphism {
        &self.faces[n][i]
    }

    pub fn degen(&self, n: usize, i: usize) -> &AbMorphism {
        &self.degens[n][i]
    }

    /// Violated simplicial identities, as readable strings.
    pub fn validate(&self) -> Vec<String> {
        let d = self.trunc_dim();
        let mut bad = Vec::new();
        let eq = |a: &AbMorphism, b: &AbMorphism| a.add(&b.neg()).is_zero();
        for n in 2..=d {
            for j in 0..=n {
                for i in 0..j {
                    let l = self.face(n - 1, i).compose(self.face(n, j)).unwrap();
                    let r = self.face(n - 1, j - 1).compose(self.face(n, i)).unwrap();
                    if !eq(&l, &r) {
                        bad.push(format!("d{i}d{j} at level {n}"));
                    }
                }
            }
        }
        for n in 0..d.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let l = self.degen(n + 1, i).compose(self.degen(n, j)).unwrap();
                    let r = self.degen(n + 1, j + 1).compose(self.degen(n, i)).unwrap();
                    if !eq(&l, &r) {
                        bad.push(format!("s{i}s{j} at level {n}"));
                    }
                }
            }
        }
        for n in 0..d {
            let id = AbMorphism::identity(&self.levels[n]);
            for j in 0..=n {
                let s = self.degen(n, j);
                for i in 0..=n + 1 {
                    let l = self.face(n + 1, i).compose(s).unwrap();
                    let ok = if i < j {
                        n == 0 || eq(&l, &self.degen(n - 1, j - 1).compose(self.face(n, i)).unwrap())
                    } else if i == j || i == j + 1 {
                        eq(&l, &id)
                    } else {
                        n == 0 || eq(&l, &self.degen(n - 1, j).compose(self.face(n, i - 1)).unwrap())
                    };
                    if !ok {
                        bad.push(format!("d{i}s{j} at level {n}"));
                    }
                }
            }
        }
        bad
    }

    /// `θ* : A_n → A_m` for a monotone `θ : [m] → [n]`.
    pub fn operator(&self, theta: &[usize], n: usize) -> AbMorphism {
        let m = theta.len() - 1;
        if theta == identity(n).as_slice() && m == n {
            return AbMorphism::identity(&self.levels[n]);
        }
        if let Some(j) = (0..m).find(|&j| theta[j] == theta[j + 1]) {
            // θ = θ' ∘ σʲ
            let rest: Vec<usize> = (0..m).map(|x| if x <= j { theta[x] } else { theta[x + 1] }).collect();
            let inner = self.operator(&rest, n);
            return self.degen(m - 1, j).compose(&inner).unwrap();
        }
        // injective, not the identity: θ = δⁱ ∘ θ''
        let i = (0..=n).find(|v| !theta.contains(v)).expect("non-identity injection misses a vertex");
        let rest: Vec<usize> = theta.iter().map(|&v| if v < i { v } else { v - 1 }).collect();
        debug_assert_eq!(crate::simplicial::monotone::compose(&coface(n, i), &rest), theta);
        let inner = self.operator(&rest, n - 1);
        inner.compose(self.face(n, i)).unwrap()
    }

    /// Underlying simplicial set (all groups must be finite); elements in
    /// the order of [`FgAbGroup::elements`].
    pub fn underlying(&self) -> Result<TruncSSet> {
        let d = self.trunc_dim();
        let els: Vec<Vec<Vec<i128>>> = self.levels.iter().map(|g| g.elements()).collect::<Result<_>>()?;
        let cells: Vec<usize> = els.iter().map(|e| e.len()).collect();
        let mut faces = Vec::with_capacity(d + 1);
        let mut degens = Vec::with_capacity(d);
        for n in 0..=d {
            let mut fs = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    let f = self.face(n, i);
                    fs.push(els[n].iter().map(|v| self.levels[n - 1].element_index(&f.apply(v))).collect());
                }
            }
            faces.push(fs);
            if n < d {
                let mut ss = Vec::new();
                for i in 0..=n {
                    let s = self.degen(n, i);
                    ss.push(els[n].iter().map(|v| self.levels[n + 1].element_index(&s.apply(v))).collect());
                }
                degens.push(ss);
            }
        }
        TruncSSet::from_raw(cells, faces, degens)
    }

    /// Levelwise direct sum.
    pub fn direct_sum(&self, other: &SimplicialAbGroup) -> Result<SimplicialAbGroup> {
        if self.trunc_dim() != other.trunc_dim() {
            return Err(Error::Dimension("direct sum of differently truncated groups".into()));
        }
        let levels = self.levels.iter().zip(&other.levels).map(|(a, b)| a.direct_sum(b)).collect();
        let faces = self
            .faces
            .iter()
            .zip(&other.faces)
            .map(|(fa, fb)| fa.iter().zip(fb).map(|(a, b)| a.direct_sum(b)).collect())
            .collect();
        let degens = self
            .degens
            .iter()
            .zip(&other.degens)
            .map(|(fa, fb)| fa.iter().zip(fb).map(|(a, b)| a.direct_sum(b)).collect())
            .collect();
        Self::new_unchecked(levels, faces, degens)
    }

    /// Raw matrices, for serialization.
    pub fn face_matrix(&self, n: usize, i: usize) -> &IntMatrix {
        self.faces[n][i].matrix()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_is_valid_and_operators_are_identities() {
        let a = FgAbGroup::from_orders(vec![2, 0]);
        let g = SimplicialAbGroup::discrete(&a, 3);
        assert!(g.validate().is_empty());
        let op = g.operator(&[0, 0, 2], 3);
        assert_eq!(op.matrix(), &IntMatrix::identity(2));
    }
}
