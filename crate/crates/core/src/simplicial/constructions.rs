//! Discrete complexes, tensoring with a set, products and pushouts.

use std::sync::Arc;

use super::{SimplicialMap, TruncSSet};
use crate::error::{Error, Result};

/// `disc A`: every level is `A`, all structure maps identities.
pub fn disc(size: usize, d: usize) -> TruncSSet {
    let id: Vec<usize> = (0..size).collect();
    TruncSSet::from_raw(
        vec![size; d + 1],
        (0..=d).map(|n| if n == 0 { Vec::new() } else { vec![id.clone(); n + 1] }).collect(),
        (0..d).map(|n| vec![id.clone(); n + 1]).collect(),
    )
    .expect("shape")
}

/// The terminal object `Δ⁰`.
pub fn terminal(d: usize) -> TruncSSet {
    disc(1, d)
}

/// The unique map to the terminal object.
pub fn to_terminal(x: &Arc<TruncSSet>) -> SimplicialMap {
    let t = Arc::new(terminal(x.trunc_dim()));
    let levels = (0..=x.trunc_dim()).map(|n| vec![0; x.cells(n)]).collect();
    SimplicialMap::new_unchecked(x.clone(), t, levels).expect("shape")
}

/// `S · A`: level `n` is `S_n × A` (index `s·|A| + a`), acting on `S` only.
pub fn tensor_set(s: &TruncSSet, a: usize) -> TruncSSet {
    let d = s.trunc_dim();
    let lift = |m: &[usize]| -> Vec<usize> {
        let mut out = Vec::with_capacity(m.len() * a);
        for &y in m {
            for j in 0..a {
                out.push(y * a + j);
            }
        }
        out
    };
    TruncSSet::from_raw(
        s.cell_counts().iter().map(|&c| c * a).collect(),
        (0..=d).map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| lift(s.face_map(n, i))).collect() }).collect(),
        (0..d).map(|n| (0..=n).map(|i| lift(s.degen_map(n, i))).collect()).collect(),
    )
    .expect("shape")
}

/// Levelwise product with its projections; `(x, y) ↦ x·|Y_n| + y`.
pub fn product(x: &Arc<TruncSSet>, y: &Arc<TruncSSet>) -> Result<(Arc<TruncSSet>, SimplicialMap, SimplicialMap)> {
    let d = x.trunc_dim();
    if y.trunc_dim() != d {
        return Err(Error::Dimension(format!("product of truncations {d} and {}", y.trunc_dim())));
    }
    let pair = |fx: &[usize], fy: &[usize], my: usize| -> Vec<usize> {
        let mut out = Vec::with_capacity(fx.len() * fy.len());
        for &a in fx {
            for &b in fy {
                out.push(a * my + b);
            }
        }
        out
    };
    let cells: Vec<usize> = (0..=d).map(|n| x.cells(n) * y.cells(n)).collect();
    let faces = (0..=d)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| pair(x.face_map(n, i), y.face_map(n, i), y.cells(n - 1))).collect()
            }
        })
        .collect();
    let degens =
        (0..d).map(|n| (0..=n).map(|i| pair(x.degen_map(n, i), y.degen_map(n, i), y.cells(n + 1))).collect()).collect();
    let p = Arc::new(TruncSSet::from_raw(cells, faces, degens)?);
    let p1 = (0..=d).map(|n| (0..p.cells(n)).map(|c| c / y.cells(n).max(1)).collect()).collect();
    let p2 = (0..=d).map(|n| (0..p.cells(n)).map(|c| c % y.cells(n).max(1)).collect()).collect();
    let p1 = SimplicialMap::new_unchecked(p.clone(), x.clone(), p1)?;
    let p2 = SimplicialMap::new_unchecked(p.clone(), y.clone(), p2)?;
    Ok((p, p1, p2))
}

/// `f × g : A × B → X × Y` given both products (as built by [`product`]).
pub fn product_map(
    f: &SimplicialMap,
    g: &SimplicialMap,
    source: &Arc<TruncSSet>,
    target: &Arc<TruncSSet>,
) -> Result<SimplicialMap> {
    let d = source.trunc_dim();
    let levels = (0..=d)
        .map(|n| {
            let (nb, ny) = (g.source().cells(n), g.target().cells(n));
            (0..source.cells(n)).map(|c| f.apply(n, c / nb) * ny + g.apply(n, c % nb)).collect()
        })
        .collect();
    SimplicialMap::new_unchecked(source.clone(), target.clone(), levels)
}

/// The pairing `⟨f, g⟩ : A → X × Y` into a product built by [`product`].
pub fn pairing(f: &SimplicialMap, g: &SimplicialMap, target: &Arc<TruncSSet>) -> Result<SimplicialMap> {
    let d = f.source().trunc_dim();
    let levels = (0..=d)
        .map(|n| {
            let ny = g.target().cells(n);
            (0..f.source().cells(n)).map(|c| f.apply(n, c) * ny + g.apply(n, c)).collect()
        })
        .collect();
    SimplicialMap::new_unchecked(f.source().clone(), target.clone(), levels)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Pushout of `X ← A → Y`, with its two legs. Classes are numbered by
/// first occurrence in `X ⊔ Y` order.
pub fn pushout(f: &SimplicialMap, g: &SimplicialMap) -> Result<(Arc<TruncSSet>, SimplicialMap, SimplicialMap)> {
    if f.source().as_ref() != g.source().as_ref() {
        return Err(Error::Dimension("pushout legs need a common source".into()));
    }
    let (a, x, y) = (f.source(), f.target(), g.target());
    let d = a.trunc_dim();
    if x.trunc_dim() != d || y.trunc_dim() != d {
        return Err(Error::Dimension("pushout of differently truncated sets".into()));
    }
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    let mut reps: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let nx = x.cells(n);
        let mut uf = UnionFind::new(nx + y.cells(n));
        for c in 0..a.cells(n) {
            uf.union(f.apply(n, c), nx + g.apply(n, c));
        }
        let total = nx + y.cells(n);
        let mut label = vec![usize::MAX; total];
        let mut cls = vec![0; total];
        let mut rep = Vec::new();
        for e in 0..total {
            let r = uf.find(e);
            if label[r] == usize::MAX {
                label[r] = rep.len();
                rep.push(e);
            }
            cls[e] = label[r];
        }
        class_of.push(cls);
        reps.push(rep);
    }
    let elem_face = |n: usize, i: usize, e: usize| -> usize {
        let nx = x.cells(n);
        if e < nx {
            x.face(n, i, e)
        } else {
            x.cells(n - 1) + y.face(n, i, e - nx)
        }
    };
    let elem_degen = |n: usize, i: usize, e: usize| -> usize {
        let nx = x.cells(n);
        if e < nx {
            x.degen(n, i, e)
        } else {
            x.cells(n + 1) + y.degen(n, i, e - nx)
        }
    };
    let mut faces = vec![Vec::new()];
    for n in 1..=d {
        let mut fs = Vec::new();
        for i in 0..=n {
            let mut m = vec![usize::MAX; reps[n].len()];
            for e in 0..class_of[n].len() {
                let c = class_of[n][e];
                let v = class_of[n - 1][elem_face(n, i, e)];
                if m[c] == usize::MAX {
                    m[c] = v;
                } else if m[c] != v {
                    return Err(Error::Inconsistent(format!("pushout face d{i} ill-defined at level {n}")));
                }
            }
            fs.push(m);
        }
        faces.push(fs);
    }
    let mut degens = Vec::new();
    for n in 0..d {
        let mut ss = Vec::new();
        for i in 0..=n {
            let mut m = vec![usize::MAX; reps[n].len()];
            for e in 0..class_of[n].len() {
                let c = class_of[n][e];
                let v = class_of[n + 1][elem_degen(n, i, e)];
                if m[c] == usize::MAX {
                    m[c] = v;
                } else if m[c] != v {
                    return Err(Error::Inconsistent(format!("pushout degeneracy s{i} ill-defined at level {n}")));
                }
            }
            ss.push(m);
        }
        degens.push(ss);
    }
    let p = Arc::new(TruncSSet::from_raw(reps.iter().map(|r| r.len()).collect(), faces, degens)?);
    let lx = (0..=d).map(|n| class_of[n][..x.cells(n)].to_vec()).collect();
    let ly = (0..=d).map(|n| class_of[n][x.cells(n)..].to_vec()).collect();
    Ok((
        p.clone(),
        SimplicialMap::new_unchecked(x.clone(), p.clone(), lx)?,
        SimplicialMap::new_unchecked(y.clone(), p, ly)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::super::standard::{boundary, simplex};
    use super::*;

    #[test]
    fn product_and_tensor_counts() {
        let d1 = simplex(1, 1).sset;
        let (p, p1, p2) = product(&d1, &d1).unwrap();
        assert_eq!(p.cell_counts(), &[4, 9]);
        assert!(p.validate().is_empty() && p1.is_valid() && p2.is_valid());
        let b = boundary(1, 1).sset;
        assert_eq!(tensor_set(&b, 2).cell_counts(), &[4, 4]);
        assert_eq!(tensor_set(&terminal(2), 3).cell_counts(), &[3, 3, 3]);
    }

    #[test]
    fn wedge_of_two_intervals() {
        let pt = Arc::new(terminal(1));
        let d1 = simplex(1, 1);
        let end1 = SimplicialMap::new(pt.clone(), d1.sset.clone(), vec![vec![1], vec![2]]).unwrap();
        let end0 = SimplicialMap::new(pt.clone(), d1.sset.clone(), vec![vec![0], vec![0]]).unwrap();
        let (w, l1, l2) = pushout(&end1, &end0).unwrap();
        assert_eq!(w.cells(0), 3);
        assert!(w.validate().is_empty() && l1.is_valid() && l2.is_valid());
    }
}
