//! Sublattices of ℤⁿ in Hermite normal form, and subquotients `L / M`
//! with explicit generators and a coordinate map.

use super::intmat::{echelon_coords, hermite_rows, kernel_basis, reduce_mod, smith_normal_form, IntMatrix};
use super::FgAbGroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    dim: usize,
    basis: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn from_generators(dim: usize, gens: &[Vec<i128>]) -> Lattice {
        let (basis, pivots) = hermite_rows(gens, dim);
        Lattice { dim, basis, pivots }
    }

    pub fn zero(dim: usize) -> Lattice {
        Lattice { dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(dim: usize) -> Lattice {
        let basis = (0..dim)
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        Lattice { dim, basis, pivots: (0..dim).collect() }
    }

    /// Lattice spanned by `orders[i] · e_i` (the relation lattice of a
    /// cyclic decomposition; order 0 contributes nothing).
    pub fn diagonal(orders: &[u64]) -> Lattice {
        let dim = orders.len();
        let gens: Vec<Vec<i128>> = orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o != 0)
            .map(|(i, &o)| {
                let mut v = vec![0; dim];
                v[i] = o as i128;
                v
            })
            .collect();
        Lattice::from_generators(dim, &gens)
    }

    /// Coordinate sublattice spanned by the selected unit vectors.
    pub fn coordinate(dim: usize, selected: impl IntoIterator<Item = usize>) -> Lattice {
        let gens: Vec<Vec<i128>> = selected
            .into_iter()
            .map(|i| {
                let mut v = vec![0; dim];
                v[i] = 1;
                v
            })
            .collect();
        Lattice::from_generators(dim, &gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i128>] {
        &self.basis
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        self.coords(v).is_some()
    }

    /// Coefficients of `v` in the Hermite basis.
    pub fn coords(&self, v: &[i128]) -> Option<Vec<i128>> {
        assert_eq!(v.len(), self.dim, "vector dimension mismatch");
        echelon_coords(&self.basis, &self.pivots, v)
    }

    pub fn is_subset_of(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        let gens: Vec<Vec<i128>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Lattice::from_generators(self.dim, &gens)
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.dim, other.dim);
        if self.rank() == 0 || other.rank() == 0 {
            return Lattice::zero(self.dim);
        }
        // a·B1 = b·B2  ⇔  (a, b) ∈ ker [B1ᵀ | −B2ᵀ]
        let b1 = IntMatrix::from_rows(&self.basis, self.dim).transpose();
        let b2 = IntMatrix::from_rows(&other.basis, self.dim).transpose();
        let k = kernel_basis(&b1.hcat(&b2.neg()));
        let gens: Vec<Vec<i128>> = k.iter().map(|v| b1.mul_vec(&v[..self.rank()])).collect();
        Lattice::from_generators(self.dim, &gens)
    }

    /// Image under `m : ℤ^dim → ℤ^rows`.
    pub fn image(&self, m: &IntMatrix) -> Lattice {
        assert_eq!(m.cols(), self.dim);
        let gens: Vec<Vec<i128>> = self.basis.iter().map(|b| m.mul_vec(b)).collect();
        Lattice::from_generators(m.rows(), &gens)
    }

    /// `{x ∈ ℤ^cols : m x ∈ target}`.
    pub fn preimage(m: &IntMatrix, target: &Lattice) -> Lattice {
        assert_eq!(m.rows(), target.dim);
        let n = m.cols();
        if target.rank() == 0 {
            return Lattice::from_generators(n, &kernel_basis(m));
        }
        let bt = IntMatrix::from_rows(&target.basis, target.dim).transpose();
        let k = kernel_basis(&m.hcat(&bt.neg()));
        let gens: Vec<Vec<i128>> = k.into_iter().map(|v| v[..n].to_vec()).collect();
        Lattice::from_generators(n, &gens)
    }
}

/// The group `num / den` for lattices `den ⊆ num ⊆ ℤⁿ`, decomposed into
/// cyclic summands with explicit generators.
#[derive(Clone, Debug)]
pub struct Subquotient {
    num: Lattice,
    den: Lattice,
    /// Orders of the nontrivial summands; a divisibility chain of orders
    /// `>= 2` followed by zeros (infinite cyclic).
    orders: Vec<u64>,
    /// Generator of each summand, as a vector in the ambient ℤⁿ.
    gens: Vec<Vec<i128>>,
    /// Row `j` of `transform` maps num-coordinates to summand coordinate;
    /// only the rows for kept summands are stored.
    transform: IntMatrix,
}

impl Subquotient {
    pub fn new(num: Lattice, den: Lattice) -> Subquotient {
        assert_eq!(num.dim, den.dim);
        let k = num.rank();
        let rel_rows: Vec<Vec<i128>> =
            den.basis.iter().map(|b| num.coords(b).expect("denominator not contained in numerator")).collect();
        let c = IntMatrix::from_rows(&rel_rows, k);
        let s = smith_normal_form(&c);
        // new basis of num: rows of V⁻¹·B; coordinates a ↦ a·V
        let b = IntMatrix::from_rows(&num.basis, num.dim);
        let new_basis = s.v_inv.mul(&b);
        let mut orders = Vec::new();
        let mut gens = Vec::new();
        let mut keep = Vec::new();
        for i in 0..k {
            let o = if i < s.rank { s.d.get(i, i) as u64 } else { 0 };
            if o != 1 {
                orders.push(o);
                gens.push(new_basis.row(i).to_vec());
                keep.push(i);
            }
        }
        let vt = s.v.transpose();
        let rows: Vec<Vec<i128>> = keep.iter().map(|&i| vt.row(i).to_vec()).collect();
        let transform = IntMatrix::from_rows(&rows, k);
        Subquotient { num, den, orders, gens, transform }
    }

    pub fn numerator(&self) -> &Lattice {
        &self.num
    }

    pub fn denominator(&self) -> &Lattice {
        &self.den
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn generators(&self) -> &[Vec<i128>] {
        &self.gens
    }

    pub fn group(&self) -> FgAbGroup {
        FgAbGroup::from_orders(self.orders.clone())
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    /// Coordinates of `v ∈ num` in the summand basis, each reduced modulo
    /// its order. `None` if `v ∉ num`.
    pub fn coords(&self, v: &[i128]) -> Option<Vec<i128>> {
        let a = self.num.coords(v)?;
        let raw = self.transform.mul_vec(&a);
        Some(raw.iter().zip(&self.orders).map(|(&x, &o)| reduce_mod(x, o)).collect())
    }

    pub fn is_zero_class(&self, v: &[i128]) -> bool {
        self.coords(v).is_some_and(|c| c.iter().all(|&x| x == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_of_z2_by_sublattice() {
        let num = Lattice::full(2);
        let den = Lattice::from_generators(2, &[vec![2, 0], vec![0, 3]]);
        let sq = Subquotient::new(num, den);
        assert_eq!(sq.orders(), &[6]);
        let g = &sq.generators()[0];
        // the generator has order 6 modulo den
        for k in 1..6i128 {
            let v: Vec<i128> = g.iter().map(|&x| x * k).collect();
            assert!(!sq.is_zero_class(&v));
        }
        let v: Vec<i128> = g.iter().map(|&x| x * 6).collect();
        assert!(sq.is_zero_class(&v));
    }

    #[test]
    fn coords_round_trip() {
        let num = Lattice::from_generators(3, &[vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 1]]);
        let den = Lattice::from_generators(3, &[vec![0, 4, 0]]);
        let sq = Subquotient::new(num, den.clone());
        assert_eq!(sq.orders(), &[2, 0, 0]);
        for g in sq.generators() {
            let c = sq.coords(g).unwrap();
            assert_eq!(c.iter().filter(|&&x| x != 0).count(), 1);
        }
    }

    #[test]
    fn intersect_and_preimage() {
        let a = Lattice::from_generators(2, &[vec![2, 0], vec![0, 1]]);
        let b = Lattice::from_generators(2, &[vec![1, 0], vec![0, 3]]);
        let i = a.intersect(&b);
        assert!(i.contains(&[2, 3]));
        assert!(!i.contains(&[1, 3]));
        assert!(!i.contains(&[2, 1]));
        let m = IntMatrix::from_rows(&[vec![1, 1]], 2);
        let pre = Lattice::preimage(&m, &Lattice::from_generators(1, &[vec![2]]));
        assert!(pre.contains(&[1, 1]));
        assert!(pre.contains(&[1, -1]));
        assert!(!pre.contains(&[1, 0]));
    }
}
