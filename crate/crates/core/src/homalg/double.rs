//! First-quadrant double complexes of finitely generated abelian groups.
//!
//! `groups[p][q]` sits at column `p`, row `q`; `d_h : (p, q) → (p − 1, q)`
//! and `d_v : (p, q) → (p, q − 1)` commute, and the sign is applied when
//! totalizing: `d = d_h + (−1)ᵖ d_v`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::abelian::intmat::{gcd, reduce_mod};
use crate::abelian::{AbMorphism, ChainComplex, Exactness, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleComplex {
    width: usize,
    height: usize,
    groups: Vec<Vec<FgAbGroup>>,
    /// `dh[p][q] : (p, q) → (p − 1, q)`, `p >= 1`; `dh[0]` is empty.
    dh: Vec<Vec<AbMorphism>>,
    /// `dv[p][q] : (p, q) → (p, q − 1)`, `q >= 1`; `dv[p][0]` is a
    /// placeholder zero map.
    dv: Vec<Vec<AbMorphism>>,
}

fn zero_to_trivial(a: &FgAbGroup) -> AbMorphism {
    AbMorphism::zero(a, &FgAbGroup::trivial())
}

impl DoubleComplex {
    /// `dh[p - 1][q]` is the map out of `(p, q)`; `dv[p][q - 1]` likewise.
    pub fn new(groups: Vec<Vec<FgAbGroup>>, dh: Vec<Vec<IntMatrix>>, dv: Vec<Vec<IntMatrix>>) -> Result<DoubleComplex> {
        let width = groups.len();
        let height = groups.first().map_or(0, Vec::len);
        if width == 0 || height == 0 || groups.iter().any(|c| c.len() != height) {
            return Err(Error::Dimension("the grid must be a nonempty rectangle".into()));
        }
        if dh.len() + 1 != width || dh.iter().any(|c| c.len() != height) {
            return Err(Error::Dimension("need (width − 1) × height horizontal maps".into()));
        }
        if dv.len() != width || dv.iter().any(|c| c.len() + 1 != height) {
            return Err(Error::Dimension("need width × (height − 1) vertical maps".into()));
        }
        let mut h = vec![Vec::new()];
        for p in 1..width {
            h.push(
                (0..height)
                    .map(|q| AbMorphism::new(groups[p][q].clone(), groups[p - 1][q].clone(), dh[p - 1][q].clone()))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let mut v = Vec::with_capacity(width);
        for p in 0..width {
            let mut col = vec![zero_to_trivial(&groups[p][0])];
            for q in 1..height {
                col.push(AbMorphism::new(groups[p][q].clone(), groups[p][q - 1].clone(), dv[p][q - 1].clone())?);
            }
            v.push(col);
        }
        let d = DoubleComplex { width, height, groups, dh: h, dv: v };
        d.check()?;
        Ok(d)
    }

    fn check(&self) -> Result<()> {
        for p in 2..self.width {
            for q in 0..self.height {
                if !self.dh[p - 1][q].compose(&self.dh[p][q])?.is_zero() {
                    return Err(Error::Invalid(format!("d_h ∘ d_h ≠ 0 at ({p}, {q})")));
                }
            }
        }
        for p in 0..self.width {
            for q in 2..self.height {
                if !self.dv[p][q - 1].compose(&self.dv[p][q])?.is_zero() {
                    return Err(Error::Invalid(format!("d_v ∘ d_v ≠ 0 at ({p}, {q})")));
                }
            }
        }
        for p in 1..self.width {
            for q in 1..self.height {
                let a = self.dv[p - 1][q].compose(&self.dh[p][q])?;
                let b = self.dh[p][q - 1].compose(&self.dv[p][q])?;
                if !a.add(&b.neg()).is_zero() {
                    return Err(Error::Invalid(format!("square at ({p}, {q}) does not commute")));
                }
            }
        }
        Ok(())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn group(&self, p: usize, q: usize) -> &FgAbGroup {
        &self.groups[p][q]
    }

    pub fn transpose(&self) -> DoubleComplex {
        let groups = (0..self.height).map(|q| (0..self.width).map(|p| self.groups[p][q].clone()).collect()).collect();
        let dh = (1..self.height).map(|q| (0..self.width).map(|p| self.dv[p][q].matrix().clone()).collect()).collect();
        let dv = (0..self.height).map(|q| (1..self.width).map(|p| self.dh[p][q].matrix().clone()).collect()).collect();
        DoubleComplex::new(groups, dh, dv).expect("transpose of a valid double complex")
    }

    /// Row `q` as a chain complex in the `p` direction.
    pub fn row(&self, q: usize) -> ChainComplex {
        let groups = (0..self.width).map(|p| self.groups[p][q].clone()).collect();
        let bds = (1..self.width).map(|p| self.dh[p][q].clone()).collect();
        ChainComplex::new(groups, bds).expect("rows of a valid double complex")
    }

    pub fn column(&self, p: usize) -> ChainComplex {
        let groups = self.groups[p].clone();
        let bds = (1..self.height).map(|q| self.dv[p][q].clone()).collect();
        ChainComplex::new(groups, bds).expect("columns of a valid double complex")
    }

    /// `Tot_n = ⊕_{p+q=n} A_{p,q}`, ordered by increasing `p`.
    pub fn total_complex(&self) -> ChainComplex {
        let top = self.width + self.height - 2;
        let cells = |n: usize| -> Vec<(usize, usize)> {
            (0..self.width).filter(|&p| p <= n && n - p < self.height).map(|p| (p, n - p)).collect()
        };
        let mut groups = Vec::with_capacity(top + 1);
        let mut offsets = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let mut orders = Vec::new();
            let mut off = Vec::new();
            for (p, q) in cells(n) {
                off.push(((p, q), orders.len()));
                orders.extend_from_slice(self.groups[p][q].orders());
            }
            groups.push(FgAbGroup::from_orders(orders));
            offsets.push(off);
        }
        let find = |n: usize, cell: (usize, usize)| offsets[n].iter().find(|(c, _)| *c == cell).map(|(_, o)| *o);
        let mut bds = Vec::with_capacity(top);
        for n in 1..=top {
            let mut m = IntMatrix::zeros(groups[n - 1].ngens(), groups[n].ngens());
            for &((p, q), src) in &offsets[n] {
                let mut place = |tgt: usize, mat: &IntMatrix, s: i128| {
                    for r in 0..mat.rows() {
                        for c in 0..mat.cols() {
                            m.set(tgt + r, src + c, m.get(tgt + r, src + c) + s * mat.get(r, c));
                        }
                    }
                };
                if p > 0 {
                    if let Some(t) = find(n - 1, (p - 1, q)) {
                        place(t, self.dh[p][q].matrix(), 1);
                    }
                }
                if q > 0 {
                    if let Some(t) = find(n - 1, (p, q - 1)) {
                        place(t, self.dv[p][q].matrix(), if p % 2 == 0 { 1 } else { -1 });
                    }
                }
            }
            bds.push(AbMorphism::new(groups[n].clone(), groups[n - 1].clone(), m).expect("entries reduce"));
        }
        ChainComplex::new(groups, bds).expect("d² = 0 on the total complex")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssemblyOutcome {
    /// Rows exact and the total complex is exact.
    Holds,
    /// Rows exact but the total complex is not; a lemma violation.
    Fails,
    /// The precondition fails at this row.
    RowNotExact(usize),
}

pub fn acyclic_assembly_check(d: &DoubleComplex) -> AssemblyOutcome {
    if let Some(q) = (0..d.height).find(|&q| !d.row(q).is_exact(Exactness::Regular)) {
        return AssemblyOutcome::RowNotExact(q);
    }
    if d.total_complex().is_exact(Exactness::Regular) {
        AssemblyOutcome::Holds
    } else {
        AssemblyOutcome::Fails
    }
}

/// A random homomorphism `ℤ/a → ℤ/b` as the image of the generator.
fn random_hom(rng: &mut ChaCha8Rng, a: u64, b: u64) -> i128 {
    let k: i128 = rng.gen_range(-2..=2);
    match (a, b) {
        (_, 1) => 0,
        (0, 0) => k,
        (0, b) => reduce_mod(k, b),
        (_, 0) => 0,
        (a, b) => reduce_mod(k * (b / gcd(a as i128, b as i128) as u64) as i128, b),
    }
}

const FACTORS: [u64; 4] = [0, 2, 3, 4];

/// Parameters for [`random_exact_rows`].
#[derive(Clone, Copy, Debug)]
pub struct RandomGrid {
    pub max_width: usize,
    pub max_height: usize,
    pub max_rank: usize,
}

impl Default for RandomGrid {
    fn default() -> Self {
        RandomGrid { max_width: 4, max_height: 4, max_rank: 4 }
    }
}

/// A double complex whose rows are exact by construction: each row is a
/// sum of disks `P --1--> P` with `P ∈ {ℤ, ℤ/2, ℤ/3, ℤ/4}`, the vertical
/// maps are chain maps of rows (nonzero only out of odd rows, so
/// `d_v² = 0`), and each cell is then scrambled by a random automorphism.
pub fn random_exact_rows(rng: &mut ChaCha8Rng, shape: RandomGrid) -> DoubleComplex {
    let width = rng.gen_range(2..=shape.max_width.max(2));
    let height = rng.gen_range(1..=shape.max_height.max(1));
    // disks[q]: (top column p >= 1, order)
    let mut disks: Vec<Vec<(usize, u64)>> = Vec::with_capacity(height);
    for _ in 0..height {
        let mut load = vec![0usize; width];
        let mut row = Vec::new();
        for _ in 0..rng.gen_range(0..=2 * shape.max_rank) {
            let p = rng.gen_range(1..width);
            if load[p] < shape.max_rank && load[p - 1] < shape.max_rank {
                load[p] += 1;
                load[p - 1] += 1;
                row.push((p, *FACTORS.choose(rng).unwrap()));
            }
        }
        disks.push(row);
    }
    // generators of cell (p, q): disks touching column p, in disk order;
    // gens[q][p] = list of (disk index, order)
    let gens: Vec<Vec<Vec<(usize, u64)>>> = disks
        .iter()
        .map(|row| {
            (0..width)
                .map(|p| {
                    row.iter()
                        .enumerate()
                        .filter(|(_, &(top, _))| top == p || top == p + 1)
                        .map(|(i, &(_, o))| (i, o))
                        .collect()
                })
                .collect()
        })
        .collect();
    let pos = |q: usize, p: usize, disk: usize| gens[q][p].iter().position(|&(i, _)| i == disk);
    let mut dh: Vec<Vec<IntMatrix>> = Vec::with_capacity(width - 1);
    for p in 1..width {
        let mut col = Vec::with_capacity(height);
        for q in 0..height {
            let mut m = IntMatrix::zeros(gens[q][p - 1].len(), gens[q][p].len());
            for (c, &(disk, _)) in gens[q][p].iter().enumerate() {
                if disks[q][disk].0 == p {
                    m.set(pos(q, p - 1, disk).unwrap(), c, 1);
                }
            }
            col.push(m);
        }
        dh.push(col);
    }
    // vertical chain maps out of odd rows: for a disk at top column p in
    // row q, choose f_p : P → A_{p,q−1} freely and set f_{p−1} = d_h f_p
    let mut dv: Vec<Vec<IntMatrix>> = (0..width)
        .map(|p| (1..height).map(|q| IntMatrix::zeros(gens[q - 1][p].len(), gens[q][p].len())).collect())
        .collect();
    for q in (1..height).step_by(2) {
        for (disk, &(top, o)) in disks[q].iter().enumerate() {
            let targets = &gens[q - 1][top];
            let image: Vec<i128> = targets.iter().map(|&(_, to)| random_hom(rng, o, to)).collect();
            let c_top = pos(q, top, disk).unwrap();
            for (r, &v) in image.iter().enumerate() {
                dv[top][q - 1].set(r, c_top, v);
            }
            let below = dh[top - 1][q - 1].mul_vec(&image);
            let c_low = pos(q, top - 1, disk).unwrap();
            for (r, &v) in below.iter().enumerate() {
                let to = gens[q - 1][top - 1][r].1;
                dv[top - 1][q - 1].set(r, c_low, reduce_mod(v, to));
            }
        }
    }
    let groups: Vec<Vec<FgAbGroup>> = (0..width)
        .map(|p| (0..height).map(|q| FgAbGroup::from_orders(gens[q][p].iter().map(|&(_, o)| o).collect())).collect())
        .collect();
    // scramble each cell by φ and conjugate the maps
    let autos: Vec<Vec<(IntMatrix, IntMatrix)>> =
        (0..width).map(|p| (0..height).map(|q| random_automorphism(rng, &groups[p][q])).collect()).collect();
    let conj = |m: &IntMatrix, src: (usize, usize), tgt: (usize, usize)| -> IntMatrix {
        let out = autos[tgt.0][tgt.1].0.mul(m).mul(&autos[src.0][src.1].1);
        let orders = groups[tgt.0][tgt.1].orders();
        let mut r = out.clone();
        for i in 0..out.rows() {
            for j in 0..out.cols() {
                r.set(i, j, reduce_mod(out.get(i, j), orders[i]));
            }
        }
        r
    };
    let dh = (1..width).map(|p| (0..height).map(|q| conj(&dh[p - 1][q], (p, q), (p - 1, q))).collect()).collect();
    let dv = (0..width).map(|p| (1..height).map(|q| conj(&dv[p][q - 1], (p, q), (p, q - 1))).collect()).collect();
    DoubleComplex::new(groups, dh, dv).expect("generated grid is a double complex")
}

/// `(φ, φ⁻¹)`: a permutation of equal-order generators composed with a
/// few shears `e_i ↦ e_i + k·e_j` between generators of equal order.
fn random_automorphism(rng: &mut ChaCha8Rng, g: &FgAbGroup) -> (IntMatrix, IntMatrix) {
    let n = g.ngens();
    let o = g.orders();
    let mut phi = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    for _ in 0..3 {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j || o[i] != o[j] {
            continue;
        }
        let swap = rng.gen_bool(0.5);
        let mut e = IntMatrix::identity(n);
        let mut einv = IntMatrix::identity(n);
        if swap {
            for m in [&mut e, &mut einv] {
                m.set(i, i, 0);
                m.set(j, j, 0);
                m.set(i, j, 1);
                m.set(j, i, 1);
            }
        } else {
            let k: i128 = rng.gen_range(1..=2);
            // column i of φ gains k·e_j
            e.set(j, i, k);
            einv.set(j, i, -k);
        }
        phi = e.mul(&phi);
        inv = inv.mul(&einv);
    }
    (phi, inv)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> FgAbGroup {
        FgAbGroup::integers()
    }

    #[test]
    fn cone_of_identity_rows() {
        // two rows, each ℤ --1--> ℤ, vertical identity on the right column
        let groups = vec![vec![z(), z()], vec![z(), z()]];
        let one = IntMatrix::identity(1);
        let d = DoubleComplex::new(groups, vec![vec![one.clone(), one.clone()]], vec![vec![one.clone()], vec![one]])
            .unwrap();
        assert_eq!(acyclic_assembly_check(&d), AssemblyOutcome::Holds);
        let t = d.total_complex();
        assert_eq!(t.group(1).ngens(), 2);
        let tt = d.transpose().total_complex();
        for n in 0..=2 {
            assert_eq!(t.homology(n).torsion_order(), tt.homology(n).torsion_order());
        }
    }

    #[test]
    fn single_column_total_is_the_column() {
        let groups = vec![vec![z(), FgAbGroup::cyclic(2)]];
        let d = DoubleComplex::new(groups, vec![], vec![vec![IntMatrix::zeros(1, 1)]]).unwrap();
        assert_eq!(d.total_complex(), d.column(0));
    }

    #[test]
    fn non_exact_row_is_a_precondition_failure() {
        let groups = vec![vec![z()], vec![z()]];
        let d = DoubleComplex::new(groups, vec![vec![IntMatrix::diagonal(&[2])]], vec![vec![], vec![]]).unwrap();
        assert_eq!(acyclic_assembly_check(&d), AssemblyOutcome::RowNotExact(0));
    }

    #[test]
    fn noncommuting_square_rejected() {
        let groups = vec![vec![z(), z()], vec![z(), z()]];
        let one = IntMatrix::identity(1);
        let two = IntMatrix::diagonal(&[2]);
        assert!(DoubleComplex::new(groups, vec![vec![one.clone(), one.clone()]], vec![vec![one], vec![two]]).is_err());
    }

    #[test]
    fn random_grids_assemble() {
        let mut rng = seeded_rng(7);
        let mut vertical = 0;
        for _ in 0..20 {
            let d = random_exact_rows(&mut rng, RandomGrid::default());
            assert_eq!(acyclic_assembly_check(&d), AssemblyOutcome::Holds);
            if (0..d.width()).any(|p| (1..d.height()).any(|q| !d.column(p).boundary(q).is_zero())) {
                vertical += 1;
            }
        }
        assert!(vertical >= 5, "only {vertical} grids have vertical maps");
    }
}
