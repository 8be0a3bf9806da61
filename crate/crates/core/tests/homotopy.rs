use std::sync::Arc;

use kanforge::abelian::FgAbGroup;
use kanforge::classifying::{k_space, w_bar_group, w_bar_sset, w_total};
use kanforge::homotopy::{fibre, pi_n, pi_n_full, pi_n_group, FinGroup, SimplicialGroup};
use kanforge::simplicial::{is_fibration, is_kan, LiftMode, PointedTruncSSet};

fn pointed(x: kanforge::simplicial::TruncSSet) -> PointedTruncSSet {
    PointedTruncSSet::new(Arc::new(x), 0).unwrap()
}

#[test]
fn w_bar_homotopy_groups() {
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::symmetric3()] {
        let sg = SimplicialGroup::discrete(&g, 4);
        let x = pointed(w_bar_sset(&sg).unwrap());
        assert_eq!(pi_n(&x, 1).unwrap().len(), g.order());
        for n in 2..=3 {
            assert_eq!(pi_n(&x, n).unwrap().len(), 1);
        }
    }
}

#[test]
fn loop_multiplication_matches_group() {
    for g in [FinGroup::cyclic(3), FinGroup::symmetric3()] {
        let sg = SimplicialGroup::discrete(&g, 3);
        let x = pointed(w_bar_sset(&sg).unwrap());
        let h = pi_n_full(&x, 1).unwrap();
        let table = h.mult_table(&x).unwrap();
        let e = h.classes.basepoint_class.unwrap();
        let grp = FinGroup::new(table, e).unwrap();
        assert!(grp.is_isomorphic(&g));
    }
}

#[test]
fn eilenberg_mac_lane_z3_2() {
    let k = k_space(&FgAbGroup::cyclic(3), 2, 4).unwrap();
    let x = pointed(k.underlying().unwrap());
    assert_eq!(pi_n(&x, 1).unwrap().len(), 1);
    assert_eq!(pi_n(&x, 2).unwrap().len(), 3);
    assert_eq!(pi_n(&x, 3).unwrap().len(), 1);
    let sg = SimplicialGroup::from_ab(&k).unwrap();
    assert_eq!(pi_n_group(&sg, 2).unwrap().order(), 3);
    let h = pi_n_full(&x, 2).unwrap();
    let t = h.mult_table(&x).unwrap();
    let grp = FinGroup::new(t, h.classes.basepoint_class.unwrap()).unwrap();
    assert!(grp.is_isomorphic(&FinGroup::cyclic(3)));
}

#[test]
fn w_projection_is_a_fibration_with_fibre_g() {
    for g in [FinGroup::cyclic(2), FinGroup::cyclic(3), FinGroup::symmetric3()] {
        let w = w_total(&SimplicialGroup::discrete(&g, 3)).unwrap();
        assert!(is_kan(w.total.underlying()).unwrap());
        assert!(is_kan(&w.quotient).unwrap());
        assert!(is_fibration(&w.projection, LiftMode::Horn).unwrap().holds);
        let f = fibre(&w.projection, 0).unwrap();
        assert!(f.space.cell_counts().iter().all(|&c| c == g.order()));
        assert!(is_kan(&f.space).unwrap());
    }
}

#[test]
fn w_bar_group_route() {
    let sg = SimplicialGroup::discrete(&FinGroup::cyclic(4), 4);
    let wb = w_bar_group(&sg).unwrap();
    assert!(wb.validate().is_empty());
    assert_eq!(pi_n_group(&wb, 1).unwrap().order(), 4);
    assert_eq!(pi_n_group(&wb, 2).unwrap().order(), 1);
}
