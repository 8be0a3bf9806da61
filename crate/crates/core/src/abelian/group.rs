//! Finitely generated abelian groups given by cyclic decompositions, and
//! homomorphisms between them as integer matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::intmat::{reduce_mod, IntMatrix};
use super::lattice::{Lattice, Subquotient};
use crate::error::{Error, Result};

/// `ℤ/o₀ ⊕ ℤ/o₁ ⊕ ⋯` with `0` standing for ℤ.
///
/// Any list of orders is accepted (including `1`s and non-dividing
/// factors); [`FgAbGroup::canonical`] gives the invariant-factor form,
/// which is what equality up to isomorphism compares.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbGroup {
    orders: Vec<u64>,
}

impl FgAbGroup {
    pub fn from_orders(orders: Vec<u64>) -> FgAbGroup {
        FgAbGroup { orders }
    }

    pub fn trivial() -> FgAbGroup {
        FgAbGroup { orders: Vec::new() }
    }

    pub fn integers() -> FgAbGroup {
        FgAbGroup { orders: vec![0] }
    }

    pub fn cyclic(m: u64) -> FgAbGroup {
        FgAbGroup { orders: vec![m] }
    }

    pub fn free(rank: usize) -> FgAbGroup {
        FgAbGroup { orders: vec![0; rank] }
    }

    /// `copies` copies of `self`.
    pub fn power(&self, copies: usize) -> FgAbGroup {
        let mut orders = Vec::with_capacity(self.orders.len() * copies);
        for _ in 0..copies {
            orders.extend_from_slice(&self.orders);
        }
        FgAbGroup { orders }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn ngens(&self) -> usize {
        self.orders.len()
    }

    /// Invariant factors: torsion orders `>= 2` in a divisibility chain,
    /// then one `0` per free summand.
    pub fn invariant_factors(&self) -> Vec<u64> {
        if self.orders.iter().all(|&o| o == 0 || o >= 2) && is_chain(&self.orders) {
            return self.orders.clone();
        }
        Subquotient::new(Lattice::full(self.ngens()), self.relations()).orders().to_vec()
    }

    pub fn canonical(&self) -> FgAbGroup {
        FgAbGroup { orders: self.invariant_factors() }
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    pub fn free_rank(&self) -> usize {
        self.orders.iter().filter(|&&o| o == 0).count()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.iter().all(|&o| o == 1)
    }

    /// Group order, `None` when infinite or beyond `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        self.orders.iter().try_fold(1u128, |acc, &o| if o == 0 { None } else { acc.checked_mul(o as u128) })
    }

    /// Torsion subgroup order (product of the finite cyclic orders).
    pub fn torsion_order(&self) -> u128 {
        self.orders.iter().filter(|&&o| o != 0).map(|&o| o as u128).product()
    }

    /// Relation lattice of the presentation.
    pub fn relations(&self) -> Lattice {
        Lattice::diagonal(&self.orders)
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        FgAbGroup { orders }
    }

    pub fn reduce(&self, v: &[i128]) -> Vec<i128> {
        v.iter().zip(&self.orders).map(|(&x, &o)| reduce_mod(x, o)).collect()
    }

    pub fn is_zero(&self, v: &[i128]) -> bool {
        v.iter().zip(&self.orders).all(|(&x, &o)| reduce_mod(x, o) == 0)
    }

    pub fn add(&self, a: &[i128], b: &[i128]) -> Vec<i128> {
        let s: Vec<i128> = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
        self.reduce(&s)
    }

    /// All elements of a finite group in lexicographic order of reduced
    /// coordinates.
    pub fn elements(&self) -> Result<Vec<Vec<i128>>> {
        let card = self.cardinality().ok_or_else(|| Error::Invalid("cannot enumerate an infinite group".into()))?;
        if card > crate::DEFAULT_CELL_BUDGET as u128 {
            return Err(Error::Budget { what: "group elements".into(), limit: crate::DEFAULT_CELL_BUDGET });
        }
        let mut out = vec![Vec::new()];
        for &o in &self.orders {
            let mut next = Vec::with_capacity(out.len() * o as usize);
            for v in &out {
                for x in 0..o as i128 {
                    let mut w: Vec<i128> = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Index of a reduced element in the order of [`FgAbGroup::elements`].
    pub fn element_index(&self, v: &[i128]) -> usize {
        let mut idx = 0usize;
        for (&x, &o) in v.iter().zip(&self.orders) {
            idx = idx * o as usize + reduce_mod(x, o) as usize;
        }
        idx
    }
}

fn is_chain(orders: &[u64]) -> bool {
    let tors: Vec<u64> = orders.iter().copied().filter(|&o| o != 0).collect();
    let zeros_after = orders.iter().skip_while(|&&o| o != 0).all(|&o| o == 0);
    zeros_after && tors.windows(2).all(|w| w[1] % w[0] == 0)
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.invariant_factors().iter().map(|&o| if o == 0 { "Z".to_string() } else { format!("Z/{o}") }).collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A homomorphism given on generators: column `j` is the image of the
/// `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbMorphism {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl AbMorphism {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<AbMorphism> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, groups need {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.ngens(),
                source.ngens()
            )));
        }
        let rel = target.relations();
        for (j, &o) in source.orders().iter().enumerate() {
            if o == 0 {
                continue;
            }
            let v: Vec<i128> = matrix.column(j).iter().map(|&x| x * o as i128).collect();
            if !rel.contains(&v) {
                return Err(Error::Invalid(format!(
                    "generator {j} of order {o} is not sent to an element of compatible order"
                )));
            }
        }
        Ok(Self::new_unchecked(source, target, matrix))
    }

    /// Skips the compatibility check but still reduces entries.
    pub(crate) fn new_unchecked(source: FgAbGroup, target: FgAbGroup, mut matrix: IntMatrix) -> AbMorphism {
        for r in 0..matrix.rows() {
            let o = target.orders()[r];
            for c in 0..matrix.cols() {
                let x = reduce_mod(matrix.get(r, c), o);
                matrix.set(r, c, x);
            }
        }
        AbMorphism { source, target, matrix }
    }

    pub fn identity(g: &FgAbGroup) -> AbMorphism {
        AbMorphism::new_unchecked(g.clone(), g.clone(), IntMatrix::identity(g.ngens()))
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> AbMorphism {
        AbMorphism {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.ngens(), source.ngens()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[i128]) -> Vec<i128> {
        self.target.reduce(&self.matrix.mul_vec(v))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &AbMorphism) -> Result<AbMorphism> {
        if first.target.orders() != self.source.orders() {
            return Err(Error::Dimension("composing morphisms with mismatched groups".into()));
        }
        Ok(AbMorphism::new_unchecked(first.source.clone(), self.target.clone(), self.matrix.mul(&first.matrix)))
    }

    pub fn add(&self, other: &AbMorphism) -> AbMorphism {
        AbMorphism::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.add(&other.matrix))
    }

    pub fn neg(&self) -> AbMorphism {
        AbMorphism::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.neg())
    }

    pub fn is_zero(&self) -> bool {
        (0..self.source.ngens()).all(|j| self.target.is_zero(&self.matrix.column(j)))
    }

    /// Lattice of source coordinates mapping into the target relations.
    pub fn kernel_lattice(&self) -> Lattice {
        Lattice::preimage(&self.matrix, &self.target.relations())
    }

    /// Image plus target relations, as a lattice in target coordinates.
    pub fn image_lattice(&self) -> Lattice {
        Lattice::full(self.source.ngens()).image(&self.matrix).sum(&self.target.relations())
    }

    pub fn kernel(&self) -> Subquotient {
        Subquotient::new(self.kernel_lattice(), self.source.relations())
    }

    pub fn image(&self) -> Subquotient {
        Subquotient::new(self.image_lattice(), self.target.relations())
    }

    pub fn cokernel(&self) -> Subquotient {
        Subquotient::new(Lattice::full(self.target.ngens()), self.image_lattice())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().ngens() == 0
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().ngens() == 0
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &AbMorphism) -> AbMorphism {
        let (r1, c1) = (self.matrix.rows(), self.matrix.cols());
        let (r2, c2) = (other.matrix.rows(), other.matrix.cols());
        let mut m = IntMatrix::zeros(r1 + r2, c1 + c2);
        for r in 0..r1 {
            for c in 0..c1 {
                m.set(r, c, self.matrix.get(r, c));
            }
        }
        for r in 0..r2 {
            for c in 0..c2 {
                m.set(r1 + r, c1 + c, other.matrix.get(r, c));
            }
        }
        AbMorphism {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            matrix: m,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(FgAbGroup::from_orders(vec![2, 3]).invariant_factors(), vec![6]);
        assert_eq!(FgAbGroup::from_orders(vec![0, 4, 1, 2]).invariant_factors(), vec![2, 4, 0]);
        assert_eq!(FgAbGroup::from_orders(vec![1, 1]).invariant_factors(), Vec::<u64>::new());
        assert_eq!(FgAbGroup::from_orders(vec![6, 4]).invariant_factors(), vec![2, 12]);
        assert_eq!(format!("{}", FgAbGroup::from_orders(vec![0, 2])), "Z/2 + Z");
    }

    #[test]
    fn morphism_compatibility() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        assert!(AbMorphism::new(z2.clone(), z4.clone(), IntMatrix::from_rows(&[vec![2]], 1)).is_ok());
        assert!(AbMorphism::new(z2.clone(), z4.clone(), IntMatrix::from_rows(&[vec![1]], 1)).is_err());
        let f = AbMorphism::new(z4.clone(), z2.clone(), IntMatrix::from_rows(&[vec![1]], 1)).unwrap();
        assert!(f.is_surjective());
        assert_eq!(f.kernel().orders(), &[2]);
        let z = FgAbGroup::integers();
        let m = AbMorphism::new(z.clone(), z, IntMatrix::from_rows(&[vec![5]], 1)).unwrap();
        assert!(m.is_injective());
        assert_eq!(m.cokernel().orders(), &[5]);
    }

    #[test]
    fn element_enumeration() {
        let g = FgAbGroup::from_orders(vec![2, 3]);
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 6);
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.element_index(e), i);
        }
    }
}
