//! The normalized Moore complex `N` and its inverse `Γ`.

use super::intmat::IntMatrix;
use super::lattice::{Lattice, Subquotient};
use super::{AbMorphism, ChainComplex, FgAbGroup, SimplicialAbGroup};
use crate::error::Result;
use crate::simplicial::monotone::{codegeneracy, coface, compose, epi_mono, surjections};

/// `N(A)_n = ⋂_{i>0} ker dᵢ` with boundary `d₀`, together with the
/// subquotient presentations used (numerators are the normalized
/// lattices in `A_n` coordinates).
pub fn normalized_lattices(a: &SimplicialAbGroup) -> Vec<Subquotient> {
    let d = a.trunc_dim();
    (0..=d)
        .map(|n| {
            let mut lat = Lattice::full(a.level(n).ngens());
            for i in 1..=n {
                lat = lat.intersect(&a.face(n, i).kernel_lattice());
            }
            Subquotient::new(lat, a.level(n).relations())
        })
        .collect()
}

pub fn dold_kan_n(a: &SimplicialAbGroup) -> ChainComplex {
    let sq = normalized_lattices(a);
    let groups: Vec<FgAbGroup> = sq.iter().map(|s| s.group()).collect();
    let mut boundaries = Vec::new();
    for n in 1..sq.len() {
        let d0 = a.face(n, 0).matrix();
        let cols: Vec<Vec<i128>> = sq[n]
            .generators()
            .iter()
            .map(|g| sq[n - 1].coords(&d0.mul_vec(g)).expect("d₀ preserves normalized chains"))
            .collect();
        let mut m = IntMatrix::zeros(groups[n - 1].ngens(), groups[n].ngens());
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        boundaries.push(AbMorphism::new(groups[n].clone(), groups[n - 1].clone(), m).expect("compatible"));
    }
    ChainComplex::new(groups, boundaries).expect("d₀ on normalized chains squares to zero")
}

/// Summand layout of `Γ(B)_n`: `(k, surjection [n] ↠ [k], offset)`.
fn gamma_summands(b: &ChainComplex, n: usize) -> Vec<(usize, Vec<usize>, usize)> {
    let mut out = Vec::new();
    let mut off = 0;
    for k in 0..=n.min(b.length()) {
        for s in surjections(n, k) {
            out.push((k, s, off));
            off += b.group(k).ngens();
        }
    }
    out
}

fn gamma_level(b: &ChainComplex, n: usize) -> FgAbGroup {
    let mut orders = Vec::new();
    for (k, _, _) in gamma_summands(b, n) {
        orders.extend_from_slice(b.group(k).orders());
    }
    FgAbGroup::from_orders(orders)
}

/// `θ* : Γ(B)_n → Γ(B)_m` for monotone `θ : [m] → [n]`.
fn gamma_operator(b: &ChainComplex, theta: &[usize], n: usize) -> AbMorphism {
    let m = theta.len() - 1;
    let src = gamma_summands(b, n);
    let tgt = gamma_summands(b, m);
    let (sg, tg) = (gamma_level(b, n), gamma_level(b, m));
    let mut mat = IntMatrix::zeros(tg.ngens(), sg.ngens());
    for (k, sigma, off) in &src {
        let (tau, delta) = epi_mono(&compose(sigma, theta));
        let j = delta.len() - 1;
        let block = if j == *k {
            Some(IntMatrix::identity(b.group(*k).ngens()))
        } else if j + 1 == *k && delta == coface(*k, 0) {
            Some(b.boundary(*k).matrix().clone())
        } else {
            None
        };
        let Some(block) = block else { continue };
        let &(_, _, toff) = tgt.iter().find(|(kk, s, _)| *kk == j && *s == tau).expect("summand exists");
        for r in 0..block.rows() {
            for c in 0..block.cols() {
                mat.set(toff + r, off + c, block.get(r, c));
            }
        }
    }
    AbMorphism::new(sg, tg, mat).expect("Γ structure map is compatible")
}

pub fn dold_kan_gamma(b: &ChainComplex, d: usize) -> Result<SimplicialAbGroup> {
    let levels: Vec<FgAbGroup> = (0..=d).map(|n| gamma_level(b, n)).collect();
    let faces = (0..=d)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|i| gamma_operator(b, &coface(n, i), n)).collect() })
        .collect();
    let degens = (0..d).map(|n| (0..=n).map(|i| gamma_operator(b, &codegeneracy(n, i), n)).collect()).collect();
    SimplicialAbGroup::new(levels, faces, degens)
}

/// The unit `B → N Γ(B)`: `B_n` included as the identity summand of
/// `Γ(B)_n`. Returns whether it is an isomorphism of chain complexes onto
/// the normalized complex, up to degree `min(D, length B)`.
pub fn gamma_unit_is_iso(b: &ChainComplex, gamma: &SimplicialAbGroup) -> bool {
    let sq = normalized_lattices(gamma);
    let top = gamma.trunc_dim();
    for n in 0..=top {
        let layout = gamma_summands(b, n);
        let dim = gamma.level(n).ngens();
        let incl: Vec<Vec<i128>> = if n <= b.length() {
            let &(_, _, off) = layout.iter().find(|(k, _, _)| *k == n).expect("identity summand");
            (0..b.group(n).ngens())
                .map(|i| {
                    let mut v = vec![0; dim];
                    v[off + i] = 1;
                    v
                })
                .collect()
        } else {
            Vec::new()
        };
        let image = Lattice::from_generators(dim, &incl).sum(&gamma.level(n).relations());
        // the image must be exactly the normalized lattice plus relations
        if image != sq[n].numerator().sum(&gamma.level(n).relations()) {
            return false;
        }
        // and the unit must be injective: B_n relations are pulled back exactly
        if n <= b.length() {
            let pulled: Vec<u64> = {
                let &(_, _, off) = layout.iter().find(|(k, _, _)| *k == n).unwrap();
                gamma.level(n).orders()[off..off + b.group(n).ngens()].to_vec()
            };
            if pulled != b.group(n).orders() {
                return false;
            }
        }
    }
    // d₀ on the identity summand of Γ_n is ∂ into the identity summand of Γ_{n−1}
    for n in 1..=top.min(b.length()) {
        let layout_n = gamma_summands(b, n);
        let layout_m = gamma_summands(b, n - 1);
        let &(_, _, off) = layout_n.iter().find(|(k, _, _)| *k == n).unwrap();
        let &(_, _, toff) = layout_m.iter().find(|(k, _, _)| *k == n - 1).unwrap();
        let d0 = gamma.face(n, 0).matrix();
        let bd = b.boundary(n).matrix();
        for c in 0..b.group(n).ngens() {
            let mut v = vec![0; gamma.level(n).ngens()];
            v[off + c] = 1;
            let img = d0.mul_vec(&v);
            let mut expect = vec![0; gamma.level(n - 1).ngens()];
            for r in 0..b.group(n - 1).ngens() {
                expect[toff + r] = bd.get(r, c);
            }
            let diff: Vec<i128> = img.iter().zip(&expect).map(|(x, y)| x - y).collect();
            if !gamma.level(n - 1).is_zero(&diff) {
                return false;
            }
        }
    }
    true
}

/// Both Dold–Kan round trips on canonical forms through degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RoundTrip {
    /// `N Γ B ≅ B`: the unit is an isomorphism and groups and homology
    /// agree degreewise.
    pub n_gamma: bool,
    /// `Γ N A ≅ A` for `A = Γ B`: levelwise canonical forms agree and
    /// `N` of both sides agree.
    pub gamma_n: bool,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.n_gamma && self.gamma_n
    }
}

pub fn dold_kan_round_trip(b: &ChainComplex, d: usize) -> Result<RoundTrip> {
    let a = dold_kan_gamma(b, d)?;
    let nb = dold_kan_n(&a);
    let top = d.min(b.length());
    let pad = |c: &ChainComplex, n: usize| if n <= c.length() { c.group(n).canonical() } else { FgAbGroup::trivial() };
    let n_gamma = gamma_unit_is_iso(b, &a)
        && (0..=d).all(|n| pad(&nb, n) == pad(b, n))
        && (0..=top).all(|n| nb.homology(n).is_isomorphic(&b.homology(n)));
    let again = dold_kan_gamma(&nb, d)?;
    let gamma_n = (0..=d).all(|n| again.level(n).is_isomorphic(a.level(n))) && {
        let nn = dold_kan_n(&again);
        (0..=d).all(|n| pad(&nn, n) == pad(&nb, n))
    };
    Ok(RoundTrip { n_gamma, gamma_n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_of_discrete_is_concentrated() {
        let a = FgAbGroup::from_orders(vec![3, 0]);
        let c = dold_kan_n(&SimplicialAbGroup::discrete(&a, 3));
        assert!(c.group(0).is_isomorphic(&a));
        for n in 1..=3 {
            assert!(c.group(n).is_trivial());
        }
    }

    #[test]
    fn gamma_of_circle_like_complex() {
        let b = ChainComplex::from_data(vec![vec![0], vec![0]], vec![IntMatrix::zeros(1, 1)]).unwrap();
        let g = dold_kan_gamma(&b, 3).unwrap();
        for n in 0..=3 {
            assert_eq!(g.level(n).free_rank(), 1 + n);
        }
        assert!(gamma_unit_is_iso(&b, &g));
        let nb = dold_kan_n(&g);
        for n in 0..=1 {
            assert!(nb.group(n).is_isomorphic(b.group(n)));
            assert!(nb.homology(n).is_isomorphic(&b.homology(n)));
        }
    }

    #[test]
    fn gamma_with_nonzero_boundary() {
        let b = ChainComplex::from_data(
            vec![vec![4], vec![0, 2], vec![0]],
            vec![IntMatrix::from_i64_rows(&[vec![1, 2]], 2), IntMatrix::from_i64_rows(&[vec![4], vec![0]], 1)],
        )
        .unwrap();
        let g = dold_kan_gamma(&b, 3).unwrap();
        assert!(gamma_unit_is_iso(&b, &g));
        let nb = dold_kan_n(&g);
        for n in 0..=2 {
            assert!(nb.homology(n).is_isomorphic(&b.homology(n)), "degree {n}");
        }
    }

    #[test]
    fn round_trips_on_random_complexes() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let b = crate::abelian::random_complex(&mut rng, &Default::default());
            let r = dold_kan_round_trip(&b, 3).unwrap();
            assert!(r.holds(), "{b:?} {r:?}");
        }
    }
}
