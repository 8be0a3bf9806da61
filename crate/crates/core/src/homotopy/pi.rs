//! `π₀`, loop objects `Ωⁿ`, homotopy sets `πₙ = π₀ ∘ Ωⁿ`, the filler
//! multiplication on them, and fibres of maps.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::relations::{delta, generated_equivalence, ExObject, Quotient, Relation};
use crate::simplicial::monotone::{codegeneracy, coface, compose as compose_seq, is_surjective};
use crate::simplicial::standard::{simplex, Labelled};
use crate::simplicial::{product, HomSearch, PointedTruncSSet, SimplicialMap, TruncSSet};

/// A set of homotopy classes: the vertices with the generated homotopy
/// relation, and the quotient.
#[derive(Clone, Debug)]
pub struct HomotopyClassSet {
    pub underlying: ExObject,
    pub quotient: Quotient,
    pub basepoint_class: Option<usize>,
}

impl HomotopyClassSet {
    pub fn len(&self) -> usize {
        self.quotient.size
    }

    pub fn is_empty(&self) -> bool {
        self.quotient.size == 0
    }

    pub fn class_of(&self, vertex: usize) -> usize {
        self.quotient.projection[vertex]
    }

    /// Vertices in class `c`, ascending.
    pub fn members(&self, c: usize) -> Vec<usize> {
        (0..self.quotient.projection.len()).filter(|&v| self.quotient.projection[v] == c).collect()
    }
}

/// Coequaliser of `d₁, d₀ : X₁ ⇉ X₀`.
pub fn pi0(x: &TruncSSet) -> Result<HomotopyClassSet> {
    if x.trunc_dim() < 1 {
        return Err(Error::Dimension("π₀ needs the 1-cells".into()));
    }
    let n = x.cells(0);
    let pairs: Vec<(usize, usize)> = (0..x.cells(1)).map(|e| (x.face(1, 1, e), x.face(1, 0, e))).collect();
    let rel = generated_equivalence(&Relation::from_pairs(n, n, &pairs)?)?;
    let underlying = ExObject::new(rel)?;
    let quotient = delta(&underlying);
    Ok(HomotopyClassSet { underlying, quotient, basepoint_class: None })
}

pub fn pi0_pointed(x: &PointedTruncSSet) -> Result<HomotopyClassSet> {
    let mut h = pi0(&x.space)?;
    h.basepoint_class = Some(h.class_of(x.basepoint));
    Ok(h)
}

/// `(ΩⁿX, x)` with, for each level `m`, the maps `Δⁿ × Δᵐ → X` it consists
/// of (as level vectors on the product).
#[derive(Clone, Debug)]
pub struct LoopSpace {
    pub n: usize,
    pub space: PointedTruncSSet,
    pub maps: Vec<Vec<Vec<Vec<usize>>>>,
    /// For each vertex of `ΩⁿX`, the `n`-simplex of `X` it picks out.
    pub vertex_simplex: Vec<usize>,
}

struct Cylinder {
    sset: Arc<TruncSSet>,
    delta_m: Labelled,
    /// `|Δᵐ_k|` per level, for decoding product indices.
    widths: Vec<usize>,
    on_boundary: Vec<Vec<bool>>,
}

fn cylinder(delta_n: &Labelled, m: usize, d: usize) -> Result<Cylinder> {
    let delta_m = simplex(m, d);
    let (p, _, _) = product(&delta_n.sset, &delta_m.sset)?;
    let widths: Vec<usize> = (0..=d).map(|k| delta_m.sset.cells(k)).collect();
    let n = delta_n.labels[0].len() - 1;
    let on_boundary = (0..=d)
        .map(|k| (0..p.cells(k)).map(|c| !is_surjective(&delta_n.labels[k][c / widths[k]], n)).collect())
        .collect();
    Ok(Cylinder { sset: p, delta_m, widths, on_boundary })
}

/// `ΩⁿX` truncated at `D − n`, where `D` is the truncation of `X`.
pub fn loop_space(x: &PointedTruncSSet, n: usize) -> Result<LoopSpace> {
    loop_space_budget(x, n, crate::DEFAULT_CELL_BUDGET)
}

pub fn loop_space_budget(x: &PointedTruncSSet, n: usize, budget: usize) -> Result<LoopSpace> {
    let d = x.space.trunc_dim();
    if n == 0 || n > d {
        return Err(Error::Dimension(format!("Ω^{n} of a complex truncated at {d}")));
    }
    let dl = d - n;
    let delta_n = simplex(n, d);
    let base: Vec<usize> = (0..=d).map(|k| x.base_at(k)).collect();
    let cyls: Vec<Cylinder> = (0..=dl).map(|m| cylinder(&delta_n, m, d)).collect::<Result<_>>()?;

    let mut maps: Vec<Vec<Vec<Vec<usize>>>> = Vec::with_capacity(dl + 1);
    for cyl in &cyls {
        let mut search = HomSearch::new(&cyl.sset, &x.space)?;
        for (k, flags) in cyl.on_boundary.iter().enumerate() {
            for (c, &b) in flags.iter().enumerate() {
                if b {
                    search.fix(k, c, base[k]);
                }
            }
        }
        maps.push(search.all(budget)?);
    }
    let lookup: Vec<HashMap<&[Vec<usize>], usize>> =
        maps.iter().map(|lvl| lvl.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect()).collect();

    // φ ↦ φ ∘ (1 × θ) for θ : [m'] → [m]
    let precompose = |m_src: usize, m_tgt: usize, theta: &[usize]| -> Result<Vec<usize>> {
        let (src, tgt) = (&cyls[m_src], &cyls[m_tgt]);
        let cell_map: Vec<Vec<usize>> = (0..=d)
            .map(|k| {
                (0..src.sset.cells(k))
                    .map(|c| {
                        let (a, b) = (c / src.widths[k], c % src.widths[k]);
                        let seq = compose_seq(theta, &src.delta_m.labels[k][b]);
                        a * tgt.widths[k] + tgt.delta_m.index_of(k, &seq).expect("monotone")
                    })
                    .collect()
            })
            .collect();
        maps[m_tgt]
            .iter()
            .map(|phi| {
                let img: Vec<Vec<usize>> =
                    cell_map.iter().enumerate().map(|(k, cm)| cm.iter().map(|&c| phi[k][c]).collect()).collect();
                lookup[m_src]
                    .get(img.as_slice())
                    .copied()
                    .ok_or_else(|| Error::Inconsistent("loop space is not closed under structure maps".into()))
            })
            .collect()
    };
    let mut faces = vec![Vec::new()];
    for m in 1..=dl {
        faces.push((0..=m).map(|i| precompose(m - 1, m, &coface(m, i))).collect::<Result<Vec<_>>>()?);
    }
    let degens = (0..dl)
        .map(|m| (0..=m).map(|i| precompose(m + 1, m, &codegeneracy(m, i))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let cells = maps.iter().map(|l| l.len()).collect();
    let space = Arc::new(TruncSSet::from_raw(cells, faces, degens)?);

    let top = delta_n.index_of(n, &(0..=n).collect::<Vec<_>>()).expect("top simplex");
    let vertex_simplex: Vec<usize> = maps[0].iter().map(|phi| phi[n][top]).collect();
    let constant = vertex_simplex
        .iter()
        .position(|&s| s == base[n])
        .ok_or_else(|| Error::Inconsistent("constant loop missing".into()))?;
    Ok(LoopSpace { n, space: PointedTruncSSet::new(space, constant)?, maps, vertex_simplex })
}

/// `πₙ(X, x)` together with the loop data it was computed from.
#[derive(Clone, Debug)]
pub struct HomotopySet {
    pub classes: HomotopyClassSet,
    pub loops: LoopSpace,
}

/// `π₀(ΩⁿX)`, computed from the `(n+1)`-truncation of `X`.
pub fn pi_n(x: &PointedTruncSSet, n: usize) -> Result<HomotopyClassSet> {
    Ok(pi_n_full(x, n)?.classes)
}

pub fn pi_n_full(x: &PointedTruncSSet, n: usize) -> Result<HomotopySet> {
    let d = x.space.trunc_dim();
    if n == 0 || n + 1 > d {
        return Err(Error::Dimension(format!("π_{n} needs truncation at least {}", n + 1)));
    }
    let small = PointedTruncSSet::new(Arc::new(x.space.truncate(n + 1)), x.basepoint)?;
    let loops = loop_space(&small, n)?;
    let classes = pi0_pointed(&loops.space)?;
    Ok(HomotopySet { classes, loops })
}

impl HomotopySet {
    /// Class of an `n`-simplex of `X` all of whose faces are the basepoint.
    pub fn class_of_simplex(&self, s: usize) -> Option<usize> {
        self.loops.vertex_simplex.iter().position(|&v| v == s).map(|i| self.classes.class_of(i))
    }

    /// Full multiplication table of `πₙ` by horn filling in `X`; see
    /// [`pi_n_mult`].
    pub fn mult_table(&self, x: &PointedTruncSSet) -> Result<Vec<Vec<usize>>> {
        let n = self.loops.n;
        let base_n = x.base_at(n);
        let loop_index: HashMap<usize, usize> =
            self.loops.vertex_simplex.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let k = self.classes.len();
        let mut table = vec![vec![usize::MAX; k]; k];
        let verts = self.loops.vertex_simplex.len();
        let mut filled = vec![false; verts * verts];
        for sigma in 0..x.space.cells(n + 1) {
            let ok = (0..=n + 1)
                .filter(|&i| i + 1 != n && i != n && i != n + 1)
                .all(|i| x.space.face(n + 1, i, sigma) == base_n);
            if !ok {
                continue;
            }
            let (Some(&a), Some(&b)) = (
                loop_index.get(&x.space.face(n + 1, n - 1, sigma)),
                loop_index.get(&x.space.face(n + 1, n + 1, sigma)),
            ) else {
                continue;
            };
            let p = *loop_index
                .get(&x.space.face(n + 1, n, sigma))
                .ok_or_else(|| Error::Inconsistent("filler face is not a loop".into()))?;
            let (ca, cb, cp) = (self.classes.class_of(a), self.classes.class_of(b), self.classes.class_of(p));
            filled[a * verts + b] = true;
            match table[ca][cb] {
                usize::MAX => table[ca][cb] = cp,
                prev if prev != cp => {
                    return Err(Error::Inconsistent(format!(
                        "product of classes {ca} and {cb} depends on representatives or filler"
                    )))
                }
                _ => {}
            }
        }
        if let Some(i) = filled.iter().position(|&f| !f) {
            return Err(Error::NoFiller(format!(
                "no filler for the multiplication horn on loops {} and {}",
                i / verts,
                i % verts
            )));
        }
        Ok(table)
    }
}

/// `a · b` in `πₙ(X, x)`: fill the horn `Λⁿ⁺¹ₙ` with face `n−1 = α`, face
/// `n+1 = β` and basepoint elsewhere, and take the class of `dₙσ`. Every
/// representative pair and every filler is checked to give the same class.
pub fn pi_n_mult(x: &PointedTruncSSet, n: usize, a: usize, b: usize) -> Result<usize> {
    let h = pi_n_full(x, n)?;
    if a >= h.classes.len() || b >= h.classes.len() {
        return Err(Error::Invalid("class index out of range".into()));
    }
    Ok(h.mult_table(x)?[a][b])
}

/// The fibre of `f` over the vertex `y`: simplices mapping to the
/// degenerate tower on `y`, with its inclusion.
#[derive(Clone, Debug)]
pub struct Fibre {
    pub space: Arc<TruncSSet>,
    pub inclusion: SimplicialMap,
    /// First vertex of the fibre, if any.
    pub basepoint: Option<usize>,
}

pub fn fibre(f: &SimplicialMap, y: usize) -> Result<Fibre> {
    let target = PointedTruncSSet::new(f.target().clone(), y)?;
    let src = f.source();
    let keep: Vec<Vec<bool>> = (0..=src.trunc_dim())
        .map(|n| {
            let b = target.base_at(n);
            (0..src.cells(n)).map(|c| f.apply(n, c) == b).collect()
        })
        .collect();
    let (space, inclusion) = sub_complex(src, &keep)?;
    let basepoint = (space.cells(0) > 0).then_some(0);
    Ok(Fibre { space, inclusion, basepoint })
}

/// The subcomplex on the marked cells (which must be closed under the
/// structure maps), with its inclusion.
pub fn sub_complex(x: &Arc<TruncSSet>, keep: &[Vec<bool>]) -> Result<(Arc<TruncSSet>, SimplicialMap)> {
    let d = x.trunc_dim();
    let old: Vec<Vec<usize>> = keep.iter().map(|k| (0..k.len()).filter(|&c| k[c]).collect()).collect();
    let new_index: Vec<HashMap<usize, usize>> =
        old.iter().map(|o| o.iter().enumerate().map(|(i, &c)| (c, i)).collect()).collect();
    let remap = |n: usize, v: usize| -> Result<usize> {
        new_index[n].get(&v).copied().ok_or_else(|| Error::Invalid("marked cells are not a subcomplex".into()))
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        faces.push(
            (0..=n)
                .map(|i| old[n].iter().map(|&c| remap(n - 1, x.face(n, i, c))).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let degens = (0..d)
        .map(|n| {
            (0..=n)
                .map(|i| old[n].iter().map(|&c| remap(n + 1, x.degen(n, i, c))).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = Arc::new(TruncSSet::from_raw(old.iter().map(|o| o.len()).collect(), faces, degens)?);
    let inc = SimplicialMap::new(sub.clone(), x.clone(), old)?;
    Ok((sub, inc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{boundary, simplex};
    use crate::simplicial::{disc, is_kan};

    #[test]
    fn pi0_examples() {
        assert_eq!(pi0(&simplex(2, 2).sset).unwrap().len(), 1);
        assert_eq!(pi0(&boundary(1, 2).sset).unwrap().len(), 2);
        assert_eq!(pi0(&disc(4, 2)).unwrap().len(), 4);
        assert!(pi0(&disc(4, 0)).is_err());
    }

    #[test]
    fn loops_of_a_point() {
        let pt = PointedTruncSSet::new(Arc::new(disc(1, 3)), 0).unwrap();
        let l = loop_space(&pt, 2).unwrap();
        assert_eq!(l.space.space.cell_counts(), &[1, 1]);
        let d = PointedTruncSSet::new(Arc::new(disc(3, 2)), 1).unwrap();
        assert_eq!(pi_n(&d, 1).unwrap().len(), 1);
    }

    #[test]
    fn fibre_of_identity_is_degenerate_tower() {
        let x = simplex(2, 3).sset;
        let f = fibre(&SimplicialMap::identity(x.clone()), 1).unwrap();
        assert_eq!(f.space.cell_counts(), &[1, 1, 1, 1]);
        assert!(is_kan(&f.space).unwrap());
    }
}
