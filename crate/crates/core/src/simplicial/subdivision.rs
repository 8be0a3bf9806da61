//! Barycentric subdivision of standard simplices and the `Ex` functor.

use std::collections::HashMap;
use std::sync::Arc;

use super::hom::HomSearch;
use super::lifting::shell_tuples;
use super::monotone::{codegeneracy, coface};
use super::standard::{nerve, simplex, Labelled};
use super::{SimplicialMap, TruncSSet};
use crate::error::{Error, Result};

/// `sd Δⁿ`: the nerve of nonempty subsets of `{0..n}` (vertex `v` is the
/// subset with bitmask `v + 1`), with the last-vertex map `sd Δⁿ → Δⁿ`
/// sending a subset to its largest element.
pub struct Subdivision {
    pub n: usize,
    pub sd: Labelled,
    pub last_vertex: SimplicialMap,
}

fn max_elem(mask: usize) -> usize {
    usize::BITS as usize - 1 - mask.leading_zeros() as usize
}

pub fn subdivision_simplex(n: usize, d: usize) -> Subdivision {
    let p = (1usize << (n + 1)) - 1;
    let leq: Vec<Vec<bool>> = (0..p).map(|a| (0..p).map(|b| (a + 1) & !(b + 1) == 0).collect()).collect();
    let sd = nerve(&leq, d);
    let delta = simplex(n, d);
    let levels = sd
        .labels
        .iter()
        .enumerate()
        .map(|(m, lvl)| {
            lvl.iter()
                .map(|chain| {
                    let seq: Vec<usize> = chain.iter().map(|&v| max_elem(v + 1)).collect();
                    delta.index_of(m, &seq).expect("monotone sequence")
                })
                .collect()
        })
        .collect();
    let last_vertex = SimplicialMap::new_unchecked(sd.sset.clone(), delta.sset.clone(), levels).expect("shape");
    Subdivision { n, sd, last_vertex }
}

impl Subdivision {
    /// `sd θ : sd Δᵐ → sd Δⁿ` for monotone `θ : [m] → [n]`, as level maps.
    pub fn induced(&self, from: &Subdivision, theta: &[usize]) -> Vec<Vec<usize>> {
        let image = |v: usize| -> usize {
            let mask = v + 1;
            let mut out = 0usize;
            for (i, &t) in theta.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    out |= 1 << t;
                }
            }
            out - 1
        };
        from.sd
            .labels
            .iter()
            .enumerate()
            .map(|(m, lvl)| {
                lvl.iter()
                    .map(|chain| {
                        let c: Vec<usize> = chain.iter().map(|&v| image(v)).collect();
                        self.sd.index_of(m, &c).expect("image chain")
                    })
                    .collect()
            })
            .collect()
    }

    /// `x ∘ (last vertex)` for `x ∈ X_n`, as level maps `sd Δⁿ → X`.
    pub fn epsilon_of(&self, x_space: &TruncSSet, x: usize) -> Vec<Vec<usize>> {
        let delta = simplex(self.n, x_space.trunc_dim());
        self.last_vertex
            .levels()
            .iter()
            .enumerate()
            .map(|(m, l)| l.iter().map(|&s| x_space.apply_operator(&delta.labels[m][s], self.n, x)).collect())
            .collect()
    }
}

/// `Ex X` together with the maps `sd Δⁿ → X` representing its cells.
pub struct ExComplex {
    pub sset: Arc<TruncSSet>,
    /// `cells[n][c]` is cell `c` of level `n` as level maps of `sd Δⁿ → X`.
    pub cells: Vec<Vec<Vec<Vec<usize>>>>,
    pub epsilon: SimplicialMap,
}

/// One application of `Ex`, with a per-level cell budget.
pub fn ex_once(x: &Arc<TruncSSet>, budget: usize) -> Result<ExComplex> {
    let d = x.trunc_dim();
    let sds: Vec<Subdivision> = (0..=d).map(|n| subdivision_simplex(n, d)).collect();
    let mut cells = Vec::with_capacity(d + 1);
    let mut index: Vec<HashMap<Vec<Vec<usize>>, usize>> = Vec::with_capacity(d + 1);
    for sd in &sds {
        let maps = HomSearch::new(&sd.sd.sset, x)?
            .all(budget)
            .map_err(|_| Error::Budget { what: format!("Ex level {}", sd.n), limit: budget })?;
        index.push(maps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect());
        cells.push(maps);
    }
    let compose = |f: &[Vec<usize>], g: &[Vec<usize>]| -> Vec<Vec<usize>> {
        g.iter().enumerate().map(|(m, l)| l.iter().map(|&c| f[m][c]).collect()).collect()
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let mut fs = Vec::new();
        for i in 0..=n {
            let sdi = sds[n].induced(&sds[n - 1], &coface(n, i));
            fs.push(cells[n].iter().map(|f| index[n - 1][&compose(f, &sdi)]).collect());
        }
        faces.push(fs);
    }
    let mut degens = Vec::new();
    for n in 0..d {
        let mut ss = Vec::new();
        for i in 0..=n {
            let sdi = sds[n].induced(&sds[n + 1], &codegeneracy(n, i));
            ss.push(cells[n].iter().map(|f| index[n + 1][&compose(f, &sdi)]).collect());
        }
        degens.push(ss);
    }
    let ex = Arc::new(TruncSSet::from_raw(cells.iter().map(|c| c.len()).collect(), faces, degens)?);
    let eps_levels = (0..=d).map(|n| (0..x.cells(n)).map(|c| index[n][&sds[n].epsilon_of(x, c)]).collect()).collect();
    let epsilon = SimplicialMap::new_unchecked(x.clone(), ex.clone(), eps_levels)?;
    Ok(ExComplex { sset: ex, cells, epsilon })
}

/// `Ex^steps X` and the composite `ε : X → Ex^steps X`.
pub fn ex(x: &Arc<TruncSSet>, steps: usize, budget: usize) -> Result<(Arc<TruncSSet>, SimplicialMap)> {
    if steps == 0 {
        return Err(Error::Invalid("Ex needs at least one step".into()));
    }
    let mut cur = ex_once(x, budget)?;
    let mut eps = cur.epsilon.clone();
    for _ in 1..steps {
        let next = ex_once(&cur.sset, budget)?;
        eps = next.epsilon.compose(&eps)?;
        cur = next;
    }
    Ok((cur.sset, eps))
}

/// For a horn `h : Λⁿₖ → Ex X` given by its faces `hᵢ ∈ (Ex X)_{n−1}`
/// (`i ≠ k`), does `ε ∘ h : Λⁿₖ → Ex² X` extend over `Δⁿ`? Decided by
/// searching for `sd Δⁿ → Ex X` restricting to `hᵢ ∘ (last vertex)` on the
/// subdivided faces.
pub fn epsilon_horn_extends(ex_x: &Arc<TruncSSet>, n: usize, k: usize, horn_faces: &[(usize, usize)]) -> Result<bool> {
    let d = ex_x.trunc_dim();
    let top = subdivision_simplex(n, d);
    let face_sd = subdivision_simplex(n - 1, d);
    let mut search = HomSearch::new(&top.sd.sset, ex_x)?;
    for &(i, h) in horn_faces {
        if i == k {
            return Err(Error::Invalid("horn face list contains the missing face".into()));
        }
        let inc = top.induced(&face_sd, &coface(n, i));
        let vals = face_sd.epsilon_of(ex_x, h);
        for (m, l) in inc.iter().enumerate() {
            for (c, &target_cell) in l.iter().enumerate() {
                search.fix(m, target_cell, vals[m][c]);
            }
        }
    }
    Ok(search.exists())
}

/// The first horn `Λⁿₖ → Ex X` whose composite into `Ex² X` does not
/// extend, if any.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ExFillReport {
    pub horns_checked: usize,
    pub failure: Option<(usize, usize, Vec<usize>)>,
}

impl ExFillReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs [`epsilon_horn_extends`] on every horn of `Ex X` with
/// `1 <= n <= max_n`.
pub fn ex_horns_fill(x: &Arc<TruncSSet>, max_n: usize, budget: usize) -> Result<ExFillReport> {
    let exx = ex_once(x, budget)?.sset;
    let mut checked = 0;
    for n in 1..=max_n.min(x.trunc_dim()) {
        for k in 0..=n {
            let idx: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
            for h in shell_tuples(&exx, n, Some(k))? {
                checked += 1;
                let faces: Vec<(usize, usize)> = idx.iter().copied().zip(h.iter().copied()).collect();
                if !epsilon_horn_extends(&exx, n, k, &faces)? {
                    return Ok(ExFillReport { horns_checked: checked, failure: Some((n, k, h)) });
                }
            }
        }
    }
    Ok(ExFillReport { horns_checked: checked, failure: None })
}

#[cfg(test)]
mod tests {
    use super::super::constructions::disc;
    use super::super::standard::boundary;
    use super::*;

    #[test]
    fn sd_of_interval() {
        let s = subdivision_simplex(1, 1);
        assert_eq!(s.sd.sset.cells(0), 3);
        assert_eq!(s.sd.sset.nondegenerate(1).len(), 2);
        // vertex {0,1} has bitmask 3, index 2, and goes to vertex 1
        assert_eq!(s.last_vertex.apply(0, 2), 1);
        assert!(s.last_vertex.is_valid());
        let s0 = subdivision_simplex(0, 2);
        assert_eq!(s0.sd.sset.cell_counts(), &[1, 1, 1]);
    }

    #[test]
    fn ex_of_discrete_and_boundary() {
        let a = Arc::new(disc(3, 2));
        let (e, eps) = ex(&a, 1, 100_000).unwrap();
        assert_eq!(e.cell_counts(), a.cell_counts());
        assert!(eps.is_valid() && eps.is_levelwise_injective() && eps.is_levelwise_surjective());
        let b = boundary(1, 1).sset;
        let (e, eps) = ex(&b, 1, 100_000).unwrap();
        assert!(e.validate().is_empty());
        assert!(eps.is_valid() && eps.is_levelwise_injective());
        assert_eq!(e.cells(0), b.cells(0));
    }

    #[test]
    fn horns_of_ex_fill_one_step_later() {
        use super::super::standard::horn;
        let l = horn(2, 1, 2).unwrap().sset;
        let r = ex_horns_fill(&l, 2, 100_000).unwrap();
        assert!(r.holds() && r.horns_checked > 0, "{r:?}");
    }
}
