//! Enumeration of simplicial maps between truncated simplicial sets,
//! optionally with part of the map prescribed.
//!
//! Images of degenerate cells are forced by those of lower cells; a
//! nondegenerate cell may go to any target cell whose faces match the
//! images already chosen. The search is depth-first over source cells in
//! (level, index) order, so maps come out lexicographically ordered.

use std::ops::ControlFlow;
use std::sync::Arc;

use super::{SimplicialMap, TruncSSet};
use crate::error::{Error, Result};

pub struct HomSearch<'a> {
    source: &'a TruncSSet,
    target: &'a TruncSSet,
    fixed: Vec<Vec<Option<usize>>>,
}

#[derive(Clone, Copy)]
enum Slot {
    Forced { n: usize, x: usize, i: usize, y: usize },
    Free { n: usize, x: usize },
}

impl<'a> HomSearch<'a> {
    pub fn new(source: &'a TruncSSet, target: &'a TruncSSet) -> Result<HomSearch<'a>> {
        if source.trunc_dim() != target.trunc_dim() {
            return Err(Error::Dimension(format!(
                "hom between truncations {} and {}",
                source.trunc_dim(),
                target.trunc_dim()
            )));
        }
        let fixed = source.cell_counts().iter().map(|&c| vec![None; c]).collect();
        Ok(HomSearch { source, target, fixed })
    }

    /// Prescribes the image of one cell.
    pub fn fix(&mut self, n: usize, x: usize, value: usize) -> &mut Self {
        self.fixed[n][x] = Some(value);
        self
    }

    /// Prescribes `f ∘ i = g` for `i : A → S`, `g : A → X`. Returns `false`
    /// if the prescription is already contradictory.
    pub fn fix_along(&mut self, i: &SimplicialMap, g: &SimplicialMap) -> bool {
        for n in 0..=self.source.trunc_dim() {
            for a in 0..i.source().cells(n) {
                let (x, v) = (i.apply(n, a), g.apply(n, a));
                match self.fixed[n][x] {
                    Some(w) if w != v => return false,
                    _ => self.fixed[n][x] = Some(v),
                }
            }
        }
        true
    }

    fn slots(&self) -> Vec<Slot> {
        let s = self.source;
        let mut out = Vec::new();
        for n in 0..=s.trunc_dim() {
            let info = s.degeneracy_info(n);
            for x in 0..s.cells(n) {
                if let Some((i, y)) = info[x] {
                    out.push(Slot::Forced { n, x, i, y });
                }
            }
            for x in 0..s.cells(n) {
                if info[x].is_none() {
                    out.push(Slot::Free { n, x });
                }
            }
        }
        out
    }

    fn candidates(&self, slot: Slot, assign: &[Vec<usize>]) -> Vec<usize> {
        let (s, t) = (self.source, self.target);
        match slot {
            Slot::Forced { n, x, i, y } => {
                let v = t.degen(n - 1, i, assign[n - 1][y]);
                let faces_ok = (0..=n).all(|j| t.face(n, j, v) == assign[n - 1][s.face(n, j, x)]);
                let fixed_ok = self.fixed[n][x].is_none_or(|w| w == v);
                if faces_ok && fixed_ok {
                    vec![v]
                } else {
                    Vec::new()
                }
            }
            Slot::Free { n, x } => {
                if n == 0 {
                    return match self.fixed[0][x] {
                        Some(w) if w < t.cells(0) => vec![w],
                        Some(_) => Vec::new(),
                        None => (0..t.cells(0)).collect(),
                    };
                }
                let tuple: Vec<usize> = (0..=n).map(|j| assign[n - 1][s.face(n, j, x)]).collect();
                let cands = t.cells_with_faces(n, &tuple);
                match self.fixed[n][x] {
                    Some(w) => {
                        if cands.contains(&w) {
                            vec![w]
                        } else {
                            Vec::new()
                        }
                    }
                    None => cands.to_vec(),
                }
            }
        }
    }

    /// Calls `visit` on each map (as level vectors) in canonical order
    /// until it breaks.
    pub fn for_each(&self, mut visit: impl FnMut(&[Vec<usize>]) -> ControlFlow<()>) {
        let slots = self.slots();
        let mut assign: Vec<Vec<usize>> = self.source.cell_counts().iter().map(|&c| vec![usize::MAX; c]).collect();
        if slots.is_empty() {
            let _ = visit(&assign);
            return;
        }
        let mut cands: Vec<Vec<usize>> = vec![Vec::new(); slots.len()];
        let mut ptr = vec![0usize; slots.len()];
        let mut pos = 0usize;
        cands[0] = self.candidates(slots[0], &assign);
        loop {
            if ptr[pos] < cands[pos].len() {
                let v = cands[pos][ptr[pos]];
                ptr[pos] += 1;
                let (n, x) = match slots[pos] {
                    Slot::Forced { n, x, .. } | Slot::Free { n, x } => (n, x),
                };
                assign[n][x] = v;
                if pos + 1 == slots.len() {
                    if visit(&assign).is_break() {
                        return;
                    }
                } else {
                    pos += 1;
                    cands[pos] = self.candidates(slots[pos], &assign);
                    ptr[pos] = 0;
                }
            } else {
                if pos == 0 {
                    return;
                }
                pos -= 1;
            }
        }
    }

    pub fn first(&self) -> Option<Vec<Vec<usize>>> {
        let mut found = None;
        self.for_each(|m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn exists(&self) -> bool {
        self.first().is_some()
    }

    pub fn count(&self) -> usize {
        let mut c = 0;
        self.for_each(|_| {
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    /// All maps, failing once more than `budget` have been found.
    pub fn all(&self, budget: usize) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut out = Vec::new();
        let mut over = false;
        self.for_each(|m| {
            if out.len() == budget {
                over = true;
                return ControlFlow::Break(());
            }
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
        if over {
            return Err(Error::Budget { what: "hom-set enumeration".into(), limit: budget });
        }
        Ok(out)
    }
}

/// `hom(S, X)` as simplicial maps, in canonical order.
pub fn hom_maps(s: &Arc<TruncSSet>, x: &Arc<TruncSSet>) -> Result<Vec<SimplicialMap>> {
    hom_maps_budget(s, x, crate::DEFAULT_CELL_BUDGET)
}

pub fn hom_maps_budget(s: &Arc<TruncSSet>, x: &Arc<TruncSSet>, budget: usize) -> Result<Vec<SimplicialMap>> {
    HomSearch::new(s, x)?
        .all(budget)?
        .into_iter()
        .map(|levels| SimplicialMap::new_unchecked(s.clone(), x.clone(), levels))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::constructions::{disc, terminal};
    use super::super::standard::{boundary, simplex};
    use super::*;

    #[test]
    fn small_hom_sets() {
        let b = boundary(1, 1).sset;
        assert_eq!(hom_maps(&b, &b).unwrap().len(), 4);
        let d1 = simplex(1, 1).sset;
        assert_eq!(hom_maps(&d1, &Arc::new(terminal(1))).unwrap().len(), 1);
        for m in hom_maps(&b, &b).unwrap() {
            assert!(m.is_valid());
        }
    }

    #[test]
    fn yoneda_on_standard_targets() {
        for d in 1..=3 {
            for n in 0..=d {
                let s = simplex(n, d).sset;
                for target in [simplex(2, d).sset, boundary(2, d).sset, Arc::new(disc(3, d))] {
                    assert_eq!(hom_maps(&s, &target).unwrap().len(), target.cells(n));
                }
            }
        }
    }
}
