use proptest::prelude::*;

use kanforge::abelian::{smith_normal_form, IntMatrix};
use kanforge::relations::{
    canonical_decomposition, compose, converse, generated_equivalence, is_equivalence, leq, Relation,
};

fn relation(src: usize, dst: usize) -> impl Strategy<Value = Relation> {
    prop::collection::vec(any::<bool>(), src * dst).prop_map(move |bits| {
        let mut r = Relation::empty(src, dst);
        for (i, b) in bits.into_iter().enumerate() {
            r.set(i / dst, i % dst, b);
        }
        r
    })
}

fn triple() -> impl Strategy<Value = (Relation, Relation, Relation)> {
    (1usize..=6, 1usize..=6, 1usize..=6, 1usize..=6)
        .prop_flat_map(|(a, b, c, d)| (relation(a, b), relation(b, c), relation(c, d)))
}

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i128..=6, c), r)
            .prop_map(move |rows| IntMatrix::from_rows(&rows, c))
    })
}

proptest! {
    #[test]
    fn composition_associative((r, s, t) in triple()) {
        let left = compose(&t, &compose(&s, &r).unwrap()).unwrap();
        let right = compose(&compose(&t, &s).unwrap(), &r).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn converse_reverses_composition((r, s, _) in triple()) {
        let a = converse(&compose(&s, &r).unwrap());
        let b = compose(&converse(&r), &converse(&s)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn generated_equivalence_is_least(r in (1usize..=6).prop_flat_map(|n| relation(n, n))) {
        let e = generated_equivalence(&r).unwrap();
        prop_assert!(is_equivalence(&e).unwrap());
        prop_assert!(leq(&r, &e).unwrap());
        prop_assert_eq!(generated_equivalence(&e).unwrap(), e);
    }

    #[test]
    fn tabulation_recomposes(r in (1usize..=6, 1usize..=6).prop_flat_map(|(a, b)| relation(a, b))) {
        let t = canonical_decomposition(&r);
        prop_assert_eq!(t.recompose(r.src_size(), r.dst_size()), r);
    }

    #[test]
    fn smith_form_diagonalises(m in matrix()) {
        let s = smith_normal_form(&m);
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        let inv = s.invariants();
        prop_assert!(inv.iter().all(|&x| x > 0));
        prop_assert!(inv.windows(2).all(|w| w[1] % w[0] == 0));
    }
}
