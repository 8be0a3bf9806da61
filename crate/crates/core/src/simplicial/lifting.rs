//! Lifting-property checkers: horn and boundary fillers for maps, Kan
//! complexes, and weak equivalences through the homotopy-lifting diagram
//! `D^{n+1}`.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use super::constructions::{product, product_map, pushout, to_terminal};
use super::hom::HomSearch;
use super::standard::{boundary, horn, simplex, Labelled};
use super::{SimplicialMap, TruncSSet};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LiftMode {
    Horn,
    Boundary,
}

/// An unfillable lifting square: the prescribed faces in the source (the
/// entries for `i ≠ k`, or all faces in boundary mode) and the target
/// simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftWitness {
    pub n: usize,
    pub k: Option<usize>,
    pub faces: Vec<usize>,
    pub target_simplex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub holds: bool,
    pub trunc_dim: usize,
    pub witness: Option<LiftWitness>,
}

/// Face tuples of a horn or boundary in `X`, one per map `Λ → X`, in
/// canonical order. `k = None` means the full boundary.
pub(crate) fn shell_tuples(x: &TruncSSet, n: usize, k: Option<usize>) -> Result<Vec<Vec<usize>>> {
    let d = x.trunc_dim();
    let shell: Labelled = match k {
        Some(k) => horn(n, k, d)?,
        None => boundary(n, d),
    };
    if n == 0 {
        // ∂Δ⁰ is empty: the unique map
        return Ok(vec![Vec::new()]);
    }
    let face_cells: Vec<(usize, usize)> = (0..=n)
        .filter(|&i| Some(i) != k)
        .map(|i| {
            let seq: Vec<usize> = (0..=n).filter(|&v| v != i).collect();
            (i, shell.index_of(n - 1, &seq).expect("face present"))
        })
        .collect();
    let mut out = Vec::new();
    HomSearch::new(&shell.sset, x)?.for_each(|m| {
        out.push(face_cells.iter().map(|&(_, c)| m[n - 1][c]).collect());
        std::ops::ControlFlow::Continue(())
    });
    Ok(out)
}

fn key_of(x: &TruncSSet, n: usize, k: Option<usize>, c: usize) -> Vec<usize> {
    (0..=n).filter(|&i| Some(i) != k).map(|i| x.face(n, i, c)).collect()
}

/// Checks every lifting square against `Λⁿₖ ↪ Δⁿ` (horn mode) or
/// `∂Δⁿ ↪ Δⁿ` (boundary mode) for `n <= D`, returning the first failure in
/// order of `(n, k, horn, target simplex)`.
pub fn is_fibration(f: &SimplicialMap, mode: LiftMode) -> Result<LiftReport> {
    let (x, y) = (f.source(), f.target());
    let d = x.trunc_dim();
    let start = if mode == LiftMode::Horn { 1 } else { 0 };
    for n in start..=d {
        let ks: Vec<Option<usize>> = match mode {
            LiftMode::Horn => (0..=n).map(Some).collect(),
            LiftMode::Boundary => vec![None],
        };
        for k in ks {
            // achievable (shell, image) pairs
            let mut achieved: HashSet<(Vec<usize>, usize)> = HashSet::new();
            for c in 0..x.cells(n) {
                achieved.insert((if n == 0 { Vec::new() } else { key_of(x, n, k, c) }, f.apply(n, c)));
            }
            let mut by_key: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
            for c in 0..y.cells(n) {
                by_key.entry(if n == 0 { Vec::new() } else { key_of(y, n, k, c) }).or_default().push(c);
            }
            for h in shell_tuples(x, n, k)? {
                let image: Vec<usize> = h.iter().map(|&c| f.apply(n - 1, c)).collect();
                let Some(ys) = by_key.get(&image) else { continue };
                for &yc in ys {
                    if !achieved.contains(&(h.clone(), yc)) {
                        return Ok(LiftReport {
                            holds: false,
                            trunc_dim: d,
                            witness: Some(LiftWitness { n, k, faces: h, target_simplex: yc }),
                        });
                    }
                }
            }
        }
    }
    Ok(LiftReport { holds: true, trunc_dim: d, witness: None })
}

pub fn is_kan_report(x: &Arc<TruncSSet>) -> Result<LiftReport> {
    is_fibration(&to_terminal(x), LiftMode::Horn)
}

pub fn is_kan(x: &Arc<TruncSSet>) -> Result<bool> {
    Ok(is_kan_report(x)?.holds)
}

/// The diagram `D^{n+1}`: pushout of `∂Δⁿ ← ∂Δⁿ × Δ¹ → Δⁿ × Δ¹`, with the
/// two end inclusions `j₀, j₁ : Δⁿ → D^{n+1}`.
pub struct DiDiagram {
    pub space: Arc<TruncSSet>,
    pub j0: SimplicialMap,
    pub j1: SimplicialMap,
}

pub fn di_diagram(n: usize, d: usize) -> Result<DiDiagram> {
    let dn = simplex(n, d);
    let bn = boundary(n, d);
    let d1 = simplex(1, d);
    let (prod, _, _) = product(&dn.sset, &d1.sset)?;
    let (bprod, bp1, _) = product(&bn.sset, &d1.sset)?;
    let inc = bn.inclusion_into(&dn)?;
    let id1 = SimplicialMap::identity(d1.sset.clone());
    let inc_prod = product_map(&inc, &id1, &bprod, &prod)?;
    let (space, _leg_b, leg_p) = pushout(&bp1, &inc_prod)?;
    let end = |e: usize| -> Result<SimplicialMap> {
        // Δⁿ → Δⁿ × Δ¹, x ↦ (x, constant e)
        let levels = (0..=d)
            .map(|m| {
                let ny = d1.sset.cells(m);
                let c = d1.index_of(m, &vec![e; m + 1]).expect("constant");
                (0..dn.sset.cells(m)).map(|x| leg_p.apply(m, x * ny + c)).collect()
            })
            .collect();
        SimplicialMap::new(dn.sset.clone(), space.clone(), levels)
    };
    Ok(DiDiagram { j0: end(0)?, j1: end(1)?, space })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiWitness {
    pub n: usize,
    /// Faces of the boundary map into the source.
    pub boundary_faces: Vec<usize>,
    /// The target simplex it has no homotopy-lift for.
    pub target_simplex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiReport {
    pub holds: bool,
    pub checked_up_to: usize,
    pub source_kan: bool,
    pub target_kan: bool,
    pub witness: Option<DiWitness>,
}

/// Surjectivity of `DIₙ(f)` for `n <= D − 1` (so that `D^{n+1}` is fully
/// present): every square `∂Δⁿ → X`, `Δⁿ → Y` admits `α ∈ X_n` extending
/// the boundary and a homotopy `H : D^{n+1} → Y` from the given simplex
/// (`H j₀`) to `f α` (`H j₁`).
pub fn is_di_weak_equivalence(f: &SimplicialMap) -> Result<DiReport> {
    let (x, y) = (f.source(), f.target());
    let d = x.trunc_dim();
    let source_kan = is_kan(x)?;
    let target_kan = is_kan(y)?;
    if d == 0 {
        return Err(Error::Invalid("weak-equivalence check needs truncation at least 1".into()));
    }
    let top = d - 1;
    for n in 0..=top {
        let diag = di_diagram(n, d)?;
        let mut x_by_key: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for c in 0..x.cells(n) {
            x_by_key.entry(if n == 0 { Vec::new() } else { x.face_tuple(n, c) }).or_default().push(c);
        }
        let mut y_by_key: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for c in 0..y.cells(n) {
            y_by_key.entry(if n == 0 { Vec::new() } else { y.face_tuple(n, c) }).or_default().push(c);
        }
        let dn = simplex(n, d);
        for a in shell_tuples(x, n, None)? {
            let image: Vec<usize> = a.iter().map(|&c| f.apply(n - 1, c)).collect();
            let Some(ys) = y_by_key.get(&image) else { continue };
            let alphas = x_by_key.get(&a).cloned().unwrap_or_default();
            for &beta in ys {
                let beta_map = super::standard::yoneda_map(&dn, y, n, beta)?;
                let found = alphas.iter().any(|&alpha| {
                    let fa = super::standard::yoneda_map(&dn, y, n, f.apply(n, alpha)).expect("yoneda");
                    let mut s = HomSearch::new(&diag.space, y).expect("same truncation");
                    s.fix_along(&diag.j0, &beta_map) && s.fix_along(&diag.j1, &fa) && s.exists()
                });
                if !found {
                    return Ok(DiReport {
                        holds: false,
                        checked_up_to: top,
                        source_kan,
                        target_kan,
                        witness: Some(DiWitness { n, boundary_faces: a, target_simplex: beta }),
                    });
                }
            }
        }
    }
    Ok(DiReport { holds: true, checked_up_to: top, source_kan, target_kan, witness: None })
}

#[cfg(test)]
mod tests {
    use super::super::constructions::disc;
    use super::*;

    #[test]
    fn kan_examples() {
        assert!(is_kan(&Arc::new(disc(3, 3))).unwrap());
        assert!(!is_kan(&simplex(1, 2).sset).unwrap());
        let l = horn(2, 1, 2).unwrap().sset;
        let r = is_kan_report(&l).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().n, 2);
    }

    #[test]
    fn identity_lifts_everything() {
        let x = simplex(2, 2).sset;
        let id = SimplicialMap::identity(x);
        assert!(is_fibration(&id, LiftMode::Horn).unwrap().holds);
        assert!(is_fibration(&id, LiftMode::Boundary).unwrap().holds);
    }

    #[test]
    fn di_diagram_has_two_vertices() {
        let dd = di_diagram(1, 2).unwrap();
        assert_eq!(dd.space.cells(0), 2);
        assert!(dd.space.validate().is_empty());
    }

    #[test]
    fn di_examples() {
        let a = Arc::new(disc(2, 2));
        assert!(is_di_weak_equivalence(&SimplicialMap::identity(a.clone())).unwrap().holds);
        let r = is_di_weak_equivalence(&to_terminal(&a)).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness.unwrap().n, 1);
        let swap = SimplicialMap::new(a.clone(), a.clone(), vec![vec![1, 0]; 3]).unwrap();
        assert!(is_di_weak_equivalence(&swap).unwrap().holds);
    }
}
