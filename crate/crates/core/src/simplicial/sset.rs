//! Truncated simplicial sets with every simplex (degenerate ones too)
//! stored explicitly.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// A simplicial set truncated at dimension `D`.
///
/// `faces[n][i][x] = dᵢ x` for `1 <= n <= D` (`faces[0]` is empty) and
/// `degens[n][i][x] = sᵢ x` for `n < D`.
#[derive(Clone, Debug)]
pub struct TruncSSet {
    cells: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
    face_index: OnceLock<Arc<Vec<HashMap<Vec<usize>, Vec<usize>>>>>,
    degenerate: OnceLock<Arc<Vec<Vec<Option<(usize, usize)>>>>>,
}

impl PartialEq for TruncSSet {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells && self.faces == other.faces && self.degens == other.degens
    }
}

impl Eq for TruncSSet {}

/// One failed simplicial identity (or malformed entry).
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    pub identity: String,
    pub level: usize,
    pub index: usize,
}

impl TruncSSet {
    /// Accepts any data of the right outer shape; see [`TruncSSet::validate`].
    pub fn from_raw(cells: Vec<usize>, faces: Vec<Vec<Vec<usize>>>, degens: Vec<Vec<Vec<usize>>>) -> Result<TruncSSet> {
        let d = cells.len().checked_sub(1).ok_or_else(|| Error::Invalid("no levels".into()))?;
        if faces.len() != d + 1 || degens.len() != d {
            return Err(Error::Dimension(format!(
                "truncation {d} needs {} face levels and {d} degeneracy levels",
                d + 1
            )));
        }
        for n in 0..=d {
            let want = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != want {
                return Err(Error::Dimension(format!("level {n} needs {want} face maps")));
            }
            if n < d && degens[n].len() != n + 1 {
                return Err(Error::Dimension(format!("level {n} needs {} degeneracy maps", n + 1)));
            }
        }
        Ok(TruncSSet { cells, faces, degens, face_index: OnceLock::new(), degenerate: OnceLock::new() })
    }

    /// Like [`TruncSSet::from_raw`] but rejects anything `validate` reports.
    pub fn new(cells: Vec<usize>, faces: Vec<Vec<Vec<usize>>>, degens: Vec<Vec<Vec<usize>>>) -> Result<TruncSSet> {
        let x = Self::from_raw(cells, faces, degens)?;
        let report = x.validate();
        if let Some(v) = report.first() {
            return Err(Error::Invalid(format!(
                "{} violations, first: {} at level {} index {}",
                report.len(),
                v.identity,
                v.level,
                v.index
            )));
        }
        Ok(x)
    }

    pub fn empty(d: usize) -> TruncSSet {
        Self::from_raw(
            vec![0; d + 1],
            (0..=d).map(|n| if n == 0 { Vec::new() } else { vec![Vec::new(); n + 1] }).collect(),
            (0..d).map(|n| vec![Vec::new(); n + 1]).collect(),
        )
        .expect("shape")
    }

    pub fn trunc_dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cells(&self, n: usize) -> usize {
        self.cells[n]
    }

    pub fn cell_counts(&self) -> &[usize] {
        &self.cells
    }

    #[inline]
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    #[inline]
    pub fn degen(&self, n: usize, i: usize, x: usize) -> usize {
        self.degens[n][i][x]
    }

    pub fn face_map(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    pub fn degen_map(&self, n: usize, i: usize) -> &[usize] {
        &self.degens[n][i]
    }

    pub fn raw_faces(&self) -> &Vec<Vec<Vec<usize>>> {
        &self.faces
    }

    pub fn raw_degens(&self) -> &Vec<Vec<Vec<usize>>> {
        &self.degens
    }

    /// `(d₀x, …, dₙx)`; empty for vertices.
    pub fn face_tuple(&self, n: usize, x: usize) -> Vec<usize> {
        if n == 0 {
            Vec::new()
        } else {
            (0..=n).map(|i| self.faces[n][i][x]).collect()
        }
    }

    /// Face tuple → cells with that boundary, per level.
    pub(crate) fn face_index_all(&self) -> &Arc<Vec<HashMap<Vec<usize>, Vec<usize>>>> {
        self.face_index.get_or_init(|| {
            Arc::new(
                (0..=self.trunc_dim())
                    .map(|n| {
                        let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                        for x in 0..self.cells[n] {
                            m.entry(self.face_tuple(n, x)).or_default().push(x);
                        }
                        m
                    })
                    .collect(),
            )
        })
    }

    /// Cells of level `n` with the given face tuple, in index order.
    pub fn cells_with_faces(&self, n: usize, faces: &[usize]) -> &[usize] {
        self.face_index_all()[n].get(faces).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// For each cell, `Some((i, y))` with `x = sᵢ y` (smallest `i`), or
    /// `None` when nondegenerate.
    pub fn degeneracy_info(&self, n: usize) -> &[Option<(usize, usize)>] {
        &self.degenerate.get_or_init(|| {
            let d = self.trunc_dim();
            let mut info: Vec<Vec<Option<(usize, usize)>>> = self.cells.iter().map(|&c| vec![None; c]).collect();
            for n in 0..d {
                for i in (0..=n).rev() {
                    for y in 0..self.cells[n] {
                        let x = self.degens[n][i][y];
                        if x < self.cells[n + 1] {
                            info[n + 1][x] = Some((i, y));
                        }
                    }
                }
            }
            Arc::new(info)
        })[n]
    }

    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        self.degeneracy_info(n)[x].is_some()
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.cells[n]).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// `θ* x` for a monotone `θ : [m] → [n]`, via faces and degeneracies.
    pub fn apply_operator(&self, theta: &[usize], n: usize, x: usize) -> usize {
        let m = theta.len() - 1;
        if m == n && theta.iter().enumerate().all(|(i, &v)| i == v) {
            return x;
        }
        if let Some(j) = (0..m).find(|&j| theta[j] == theta[j + 1]) {
            let rest: Vec<usize> = (0..m).map(|t| if t <= j { theta[t] } else { theta[t + 1] }).collect();
            let y = self.apply_operator(&rest, n, x);
            return self.degens[m - 1][j][y];
        }
        let i = (0..=n).find(|v| !theta.contains(v)).expect("non-identity injection misses a vertex");
        let rest: Vec<usize> = theta.iter().map(|&v| if v < i { v } else { v - 1 }).collect();
        self.apply_operator(&rest, n - 1, self.faces[n][i][x])
    }

    /// Every violated simplicial identity and every out-of-range entry,
    /// in a deterministic order.
    pub fn validate(&self) -> Vec<Violation> {
        let d = self.trunc_dim();
        let mut out = Vec::new();
        let mut range_ok = true;
        let bad = |out: &mut Vec<Violation>, s: String, level: usize, index: usize| {
            out.push(Violation { identity: s, level, index })
        };
        for n in 1..=d {
            for i in 0..=n {
                let f = &self.faces[n][i];
                if f.len() != self.cells[n] {
                    bad(&mut out, format!("d{i} has wrong length"), n, 0);
                    range_ok = false;
                    continue;
                }
                for (x, &y) in f.iter().enumerate() {
                    if y >= self.cells[n - 1] {
                        bad(&mut out, format!("d{i} out of range"), n, x);
                        range_ok = false;
                    }
                }
            }
        }
        for n in 0..d {
            for i in 0..=n {
                let s = &self.degens[n][i];
                if s.len() != self.cells[n] {
                    bad(&mut out, format!("s{i} has wrong length"), n, 0);
                    range_ok = false;
                    continue;
                }
                for (x, &y) in s.iter().enumerate() {
                    if y >= self.cells[n + 1] {
                        bad(&mut out, format!("s{i} out of range"), n, x);
                        range_ok = false;
                    }
                }
            }
        }
        if !range_ok {
            return out;
        }
        let df = |n: usize, i: usize, x: usize| self.faces[n][i][x];
        let sg = |n: usize, i: usize, x: usize| self.degens[n][i][x];
        // dᵢdⱼ = dⱼ₋₁dᵢ, i < j
        for n in 2..=d {
            for x in 0..self.cells[n] {
                for j in 0..=n {
                    for i in 0..j {
                        if df(n - 1, i, df(n, j, x)) != df(n - 1, j - 1, df(n, i, x)) {
                            bad(&mut out, format!("d{i}d{j} = d{}d{i}", j - 1), n, x);
                        }
                    }
                }
            }
        }
        // sᵢsⱼ = sⱼ₊₁sᵢ, i <= j
        for n in 0..d.saturating_sub(1) {
            for x in 0..self.cells[n] {
                for j in 0..=n {
                    for i in 0..=j {
                        if sg(n + 1, i, sg(n, j, x)) != sg(n + 1, j + 1, sg(n, i, x)) {
                            bad(&mut out, format!("s{i}s{j} = s{}s{i}", j + 1), n, x);
                        }
                    }
                }
            }
        }
        for n in 0..d {
            for x in 0..self.cells[n] {
                for j in 0..=n {
                    let y = sg(n, j, x);
                    for i in 0..=n + 1 {
                        let l = df(n + 1, i, y);
                        if i < j {
                            if l != sg(n - 1, j - 1, df(n, i, x)) {
                                bad(&mut out, format!("d{i}s{j} = s{}d{i}", j - 1), n, x);
                            }
                        } else if i == j || i == j + 1 {
                            if l != x {
                                bad(&mut out, format!("d{i}s{j} = id"), n, x);
                            }
                        } else if l != sg(n - 1, j, df(n, i - 1, x)) {
                            bad(&mut out, format!("d{i}s{j} = s{j}d{}", i - 1), n, x);
                        }
                    }
                }
            }
        }
        out
    }

    /// Restriction to levels `0..=d`.
    pub fn truncate(&self, d: usize) -> TruncSSet {
        assert!(d <= self.trunc_dim());
        Self::from_raw(self.cells[..=d].to_vec(), self.faces[..=d].to_vec(), self.degens[..d].to_vec()).expect("shape")
    }
}

/// A basepoint-carrying simplicial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedTruncSSet {
    pub space: Arc<TruncSSet>,
    pub basepoint: usize,
}

impl PointedTruncSSet {
    pub fn new(space: impl Into<Arc<TruncSSet>>, basepoint: usize) -> Result<PointedTruncSSet> {
        let space = space.into();
        if basepoint >= space.cells(0) {
            return Err(Error::Invalid(format!("basepoint {basepoint} out of range")));
        }
        Ok(PointedTruncSSet { space, basepoint })
    }

    /// The basepoint's totally degenerate simplex at level `n`.
    pub fn base_at(&self, n: usize) -> usize {
        let mut x = self.basepoint;
        for k in 0..n {
            x = self.space.degen(k, 0, x);
        }
        x
    }
}

/// A simplicial map, levelwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: Arc<TruncSSet>,
    target: Arc<TruncSSet>,
    levels: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(source: Arc<TruncSSet>, target: Arc<TruncSSet>, levels: Vec<Vec<usize>>) -> Result<SimplicialMap> {
        let m = Self::new_unchecked(source, target, levels)?;
        if let Some(msg) = m.first_failure() {
            return Err(Error::Invalid(msg));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        source: Arc<TruncSSet>,
        target: Arc<TruncSSet>,
        levels: Vec<Vec<usize>>,
    ) -> Result<SimplicialMap> {
        if source.trunc_dim() != target.trunc_dim() {
            return Err(Error::Dimension(format!(
                "map between truncations {} and {}",
                source.trunc_dim(),
                target.trunc_dim()
            )));
        }
        if levels.len() != source.trunc_dim() + 1 {
            return Err(Error::Dimension("one level map per dimension".into()));
        }
        for (n, l) in levels.iter().enumerate() {
            if l.len() != source.cells(n) || l.iter().any(|&y| y >= target.cells(n)) {
                return Err(Error::Invalid(format!("level {n} map has wrong length or range")));
            }
        }
        Ok(SimplicialMap { source, target, levels })
    }

    fn first_failure(&self) -> Option<String> {
        let (s, t) = (&self.source, &self.target);
        for n in 1..=s.trunc_dim() {
            for i in 0..=n {
                for x in 0..s.cells(n) {
                    if self.levels[n - 1][s.face(n, i, x)] != t.face(n, i, self.levels[n][x]) {
                        return Some(format!("map does not commute with d{i} at level {n}, cell {x}"));
                    }
                }
            }
        }
        for n in 0..s.trunc_dim() {
            for i in 0..=n {
                for x in 0..s.cells(n) {
                    if self.levels[n + 1][s.degen(n, i, x)] != t.degen(n, i, self.levels[n][x]) {
                        return Some(format!("map does not commute with s{i} at level {n}, cell {x}"));
                    }
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn identity(x: Arc<TruncSSet>) -> SimplicialMap {
        let levels = (0..=x.trunc_dim()).map(|n| (0..x.cells(n)).collect()).collect();
        SimplicialMap { source: x.clone(), target: x, levels }
    }

    pub fn source(&self) -> &Arc<TruncSSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<TruncSSet> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &SimplicialMap) -> Result<SimplicialMap> {
        if first.target.as_ref() != self.source.as_ref() {
            return Err(Error::Dimension("composing maps with mismatched ends".into()));
        }
        let levels =
            first.levels.iter().enumerate().map(|(n, l)| l.iter().map(|&x| self.levels[n][x]).collect()).collect();
        Ok(SimplicialMap { source: first.source.clone(), target: self.target.clone(), levels })
    }

    pub fn is_levelwise_injective(&self) -> bool {
        self.levels.iter().all(|l| {
            let mut seen = std::collections::HashSet::new();
            l.iter().all(|x| seen.insert(*x))
        })
    }

    pub fn is_levelwise_surjective(&self) -> bool {
        self.levels.iter().enumerate().all(|(n, l)| {
            let mut hit = vec![false; self.target.cells(n)];
            l.iter().for_each(|&x| hit[x] = true);
            hit.iter().all(|&h| h)
        })
    }
}

/// Are the two simplicial sets isomorphic through the given levelwise
/// bijections? Helper for tests comparing constructions.
pub fn is_isomorphism(f: &SimplicialMap) -> bool {
    f.is_valid() && f.is_levelwise_injective() && f.is_levelwise_surjective()
}
