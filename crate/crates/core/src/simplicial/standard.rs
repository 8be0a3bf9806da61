//! Standard simplices, boundaries, horns and nerves of finite posets.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monotone::{codegeneracy, coface, compose, monotone_maps};
use super::{SimplicialMap, TruncSSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum StandardKind {
    Simplex,
    Boundary,
    Horn,
}

/// A simplicial set whose `m`-simplices are labelled by vertex sequences
/// (monotone maps for `Δⁿ` and its subcomplexes, chains for nerves).
#[derive(Clone, Debug)]
pub struct Labelled {
    pub sset: Arc<TruncSSet>,
    /// `labels[m][x]` is the vertex sequence of simplex `x`.
    pub labels: Vec<Vec<Vec<usize>>>,
    lookup: Vec<HashMap<Vec<usize>, usize>>,
}

impl Labelled {
    /// Builds the simplicial set from sequences closed under deleting and
    /// repeating entries.
    fn from_sequences(labels: Vec<Vec<Vec<usize>>>) -> Labelled {
        let d = labels.len() - 1;
        let lookup: Vec<HashMap<Vec<usize>, usize>> =
            labels.iter().map(|lvl| lvl.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        let mut faces = vec![Vec::new()];
        for m in 1..=d {
            faces.push(
                (0..=m)
                    .map(|i| labels[m].iter().map(|s| lookup[m - 1][&compose(s, &coface(m, i))]).collect())
                    .collect(),
            );
        }
        let degens = (0..d)
            .map(|m| {
                (0..=m)
                    .map(|i| labels[m].iter().map(|s| lookup[m + 1][&compose(s, &codegeneracy(m, i))]).collect())
                    .collect()
            })
            .collect();
        let cells = labels.iter().map(|l| l.len()).collect();
        let sset = TruncSSet::from_raw(cells, faces, degens).expect("standard shape");
        Labelled { sset: Arc::new(sset), labels, lookup }
    }

    pub fn index_of(&self, m: usize, seq: &[usize]) -> Option<usize> {
        self.lookup[m].get(seq).copied()
    }

    /// Inclusion into `other` matching labels (all labels must exist there).
    pub fn inclusion_into(&self, other: &Labelled) -> Result<SimplicialMap> {
        let levels = self
            .labels
            .iter()
            .enumerate()
            .map(|(m, lvl)| {
                lvl.iter()
                    .map(|s| other.index_of(m, s).ok_or_else(|| Error::Invalid("label missing in target".into())))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(self.sset.clone(), other.sset.clone(), levels)
    }
}

/// `Δⁿ`, `∂Δⁿ` or `Λⁿₖ`, truncated at `d`, simplices in lexicographic
/// order of their vertex sequences.
pub fn build_standard_labelled(kind: StandardKind, n: usize, k: Option<usize>, d: usize) -> Result<Labelled> {
    let keep: Box<dyn Fn(&[usize]) -> bool> = match kind {
        StandardKind::Simplex => Box::new(|_| true),
        StandardKind::Boundary => Box::new(move |s: &[usize]| (0..=n).any(|v| !s.contains(&v))),
        StandardKind::Horn => {
            let k = k.ok_or_else(|| Error::Invalid("a horn needs k".into()))?;
            if k > n {
                return Err(Error::Invalid(format!("horn index {k} out of range for n = {n}")));
            }
            Box::new(move |s: &[usize]| (0..=n).any(|v| v != k && !s.contains(&v)))
        }
    };
    let labels = (0..=d).map(|m| monotone_maps(m, n).into_iter().filter(|s| keep(s)).collect()).collect();
    Ok(Labelled::from_sequences(labels))
}

pub fn build_standard(kind: StandardKind, n: usize, k: Option<usize>, d: usize) -> Result<TruncSSet> {
    Ok(build_standard_labelled(kind, n, k, d)?.sset.as_ref().clone())
}

pub fn simplex(n: usize, d: usize) -> Labelled {
    build_standard_labelled(StandardKind::Simplex, n, None, d).expect("simplex")
}

pub fn boundary(n: usize, d: usize) -> Labelled {
    build_standard_labelled(StandardKind::Boundary, n, None, d).expect("boundary")
}

pub fn horn(n: usize, k: usize, d: usize) -> Result<Labelled> {
    build_standard_labelled(StandardKind::Horn, n, Some(k), d)
}

/// Nerve of a finite poset given by `leq[a][b] = (a <= b)`; `m`-simplices
/// are weakly increasing chains of length `m + 1`, lexicographically.
pub fn nerve(leq: &[Vec<bool>], d: usize) -> Labelled {
    let p = leq.len();
    let mut levels: Vec<Vec<Vec<usize>>> = Vec::with_capacity(d + 1);
    levels.push((0..p).map(|a| vec![a]).collect());
    for m in 1..=d {
        let mut next = Vec::new();
        for c in &levels[m - 1] {
            let last = *c.last().unwrap();
            for b in 0..p {
                if leq[last][b] {
                    let mut e = c.clone();
                    e.push(b);
                    next.push(e);
                }
            }
        }
        next.sort();
        levels.push(next);
    }
    Labelled::from_sequences(levels)
}

/// The map `Δⁿ → X` classifying `x ∈ X_n` (Yoneda).
pub fn yoneda_map(delta: &Labelled, x_space: &Arc<TruncSSet>, n: usize, x: usize) -> Result<SimplicialMap> {
    let levels =
        delta.labels.iter().map(|lvl| lvl.iter().map(|theta| x_space.apply_operator(theta, n, x)).collect()).collect();
    SimplicialMap::new_unchecked(delta.sset.clone(), x_space.clone(), levels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_counts() {
        assert_eq!(build_standard(StandardKind::Simplex, 1, None, 2).unwrap().cell_counts(), &[2, 3, 4]);
        assert_eq!(build_standard(StandardKind::Simplex, 0, None, 3).unwrap().cell_counts(), &[1, 1, 1, 1]);
        assert_eq!(build_standard(StandardKind::Boundary, 1, None, 1).unwrap().cell_counts(), &[2, 2]);
        assert!(build_standard(StandardKind::Horn, 2, Some(3), 2).is_err());
    }

    #[test]
    fn all_standard_complexes_validate() {
        for d in 0..=4 {
            for n in 0..=4 {
                assert!(build_standard(StandardKind::Simplex, n, None, d).unwrap().validate().is_empty());
                assert!(build_standard(StandardKind::Boundary, n, None, d).unwrap().validate().is_empty());
                for k in 0..=n {
                    assert!(build_standard(StandardKind::Horn, n, Some(k), d).unwrap().validate().is_empty());
                }
            }
        }
    }

    #[test]
    fn horn_has_the_right_nondegenerate_faces() {
        let h = horn(2, 1, 2).unwrap();
        assert_eq!(h.sset.nondegenerate(1).len(), 2);
        assert_eq!(h.sset.nondegenerate(2).len(), 0);
        let inc = h.inclusion_into(&simplex(2, 2)).unwrap();
        assert!(inc.is_levelwise_injective());
    }
}
