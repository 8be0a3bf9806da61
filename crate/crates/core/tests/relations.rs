use std::time::Instant;

use kanforge::relations::{adjunction_oracles, relation_oracles};

#[test]
fn relation_oracles_exhaustive_to_four() {
    let t = Instant::now();
    for o in relation_oracles(4) {
        assert!(o.holds(), "{o:?}");
    }
    eprintln!("relation oracles: {:?}", t.elapsed());
}

#[test]
fn adjunction_exhaustive_to_three() {
    for o in adjunction_oracles(3) {
        assert!(o.holds(), "{o:?}");
        assert!(o.cases > 0);
    }
}
