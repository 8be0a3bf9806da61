//! The standard example corpus: small simplicial sets, finite groups,
//! simplicial groups, maps, complexes, extensions and modules, together
//! with the file set written by `kanforge corpus`.

use std::sync::Arc;

use crate::abelian::{ChainComplex, FgAbGroup};
use crate::classifying::{k_space, w_bar_group, w_total};
use crate::error::Result;
use crate::homalg::{GModule, GroupExtension};
use crate::homotopy::{FinGroup, SimplicialGroup};
use crate::io;
use crate::relations::{ExObject, Relation};
use crate::simplicial::standard::{boundary, horn, nerve, simplex, Labelled};
use crate::simplicial::{disc, terminal, SimplicialMap, TruncSSet};

/// Small simplicial sets truncated at `d`.
pub fn simplicial_sets(d: usize) -> Vec<(String, TruncSSet)> {
    let own = |l: Labelled| l.sset.as_ref().clone();
    let mut out = vec![
        ("point".to_string(), terminal(d)),
        ("delta1".to_string(), own(simplex(1, d))),
        ("delta2".to_string(), own(simplex(2, d))),
        ("boundary1".to_string(), own(boundary(1, d))),
        ("boundary2".to_string(), own(boundary(2, d))),
    ];
    for k in 0..=2 {
        out.push((format!("horn2_{k}"), own(horn(2, k, d).expect("k <= 2"))));
    }
    out.push(("disc2".to_string(), disc(2, d)));
    out.push(("disc3".to_string(), disc(3, d)));
    // 0 ≤ 1, 0 ≤ 2
    let vee = vec![vec![true, true, true], vec![false, true, false], vec![false, false, true]];
    out.push(("nerve_vee".to_string(), own(nerve(&vee, d))));
    out
}

pub fn groups() -> Vec<(String, FinGroup)> {
    vec![
        ("z2".to_string(), FinGroup::cyclic(2)),
        ("z3".to_string(), FinGroup::cyclic(3)),
        ("z4".to_string(), FinGroup::cyclic(4)),
        ("z6".to_string(), FinGroup::cyclic(6)),
        ("s3".to_string(), FinGroup::symmetric3()),
        ("q8".to_string(), FinGroup::quaternion()),
    ]
}

/// Discrete groups, `K(A, n)` and `W̄` of a discrete group.
pub fn simplicial_groups(d: usize) -> Result<Vec<(String, SimplicialGroup)>> {
    let mut out = Vec::new();
    for (name, g) in [("z2", FinGroup::cyclic(2)), ("z3", FinGroup::cyclic(3)), ("s3", FinGroup::symmetric3())] {
        out.push((format!("disc_{name}"), SimplicialGroup::discrete(&g, d)));
    }
    for (m, n) in [(2, 1), (2, 2), (3, 2)] {
        let k = k_space(&FgAbGroup::cyclic(m), n, d)?;
        out.push((format!("k_z{m}_{n}"), SimplicialGroup::from_ab(&k)?));
    }
    out.push(("wbar_z2".to_string(), w_bar_group(&SimplicialGroup::discrete(&FinGroup::cyclic(2), d))?));
    Ok(out)
}

/// Maps: `∂Δ¹ ↪ Δ¹`, `Λ²₁ ↪ Δ²`, `Δ¹ → Δ⁰`, and the projection
/// `U(WG) → W̄G` for `G = ℤ/2`.
pub fn maps(d: usize) -> Result<Vec<(String, SimplicialMap)>> {
    let b = boundary(1, d);
    let s1 = simplex(1, d);
    let l = horn(2, 1, d)?;
    let s2 = simplex(2, d);
    let mut out = vec![
        ("boundary1_in_delta1".to_string(), b.inclusion_into(&s1)?),
        ("horn2_1_in_delta2".to_string(), l.inclusion_into(&s2)?),
        ("delta1_to_point".to_string(), crate::simplicial::to_terminal(&s1.sset)),
    ];
    let w = w_total(&SimplicialGroup::discrete(&FinGroup::cyclic(2), d))?;
    out.push(("w_z2".to_string(), w.projection));
    Ok(out)
}

pub fn complexes() -> Vec<(String, ChainComplex)> {
    let z = FgAbGroup::integers;
    vec![
        ("sphere_z_1".to_string(), ChainComplex::sphere(z(), 1)),
        ("disk_z_2".to_string(), ChainComplex::disk(z(), 2)),
        ("sphere_z2_1".to_string(), ChainComplex::sphere(FgAbGroup::cyclic(2), 1)),
        (
            "times2".to_string(),
            ChainComplex::from_data(
                vec![vec![0], vec![0]],
                vec![crate::abelian::IntMatrix::from_i64_rows(&[vec![2]], 1)],
            )
            .expect("valid"),
        ),
    ]
}

/// `ℤ/2 → ℤ/4 → ℤ/2`, `ℤ/3 → ℤ/2×ℤ/3 → ℤ/2`, `ℤ/3 → S₃ → ℤ/2`.
pub fn extensions() -> Result<Vec<(String, GroupExtension)>> {
    let z6 = FinGroup::product(&FinGroup::cyclic(2), &FinGroup::cyclic(3));
    let s3 = FinGroup::symmetric3();
    let rot = s3.generated(&[(1..s3.order()).find(|&a| s3.element_order(a) == 3).expect("3-cycle")]);
    Ok(vec![
        ("z4ext".to_string(), GroupExtension::from_normal_subgroup(&FinGroup::cyclic(4), &[0, 2])?),
        ("z6ext".to_string(), GroupExtension::from_normal_subgroup(&z6, &[0, 1, 2])?),
        ("s3ext".to_string(), GroupExtension::from_normal_subgroup(&s3, &rot)?),
    ])
}

/// Every corpus file as `(file name, contents)`, in a fixed order.
pub fn files(d: usize) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (name, x) in simplicial_sets(d) {
        out.push((format!("{name}.json"), io::sset_to_json(&x)));
    }
    for (name, g) in groups() {
        out.push((format!("{name}.group.json"), io::group_to_json(&g)));
    }
    for (name, g) in simplicial_groups(d)? {
        out.push((format!("{name}.sgroup.json"), io::sgroup_to_json(&g)));
    }
    for (name, f) in maps(d)? {
        out.push((format!("{name}.map.json"), io::map_to_json(&f)));
    }
    for (name, c) in complexes() {
        out.push((format!("{name}.complex.json"), io::complex_to_json(&c)));
    }
    for (name, e) in extensions()? {
        out.push((format!("{name}.json"), io::extension_to_json(&e)));
    }
    let z2 = FinGroup::cyclic(2);
    out.push(("ztriv.json".to_string(), io::module_to_json(&GModule::integers(&z2))));
    let sign = GModule::from_generator_action(
        z2.clone(),
        FgAbGroup::integers(),
        &[(1, crate::abelian::IntMatrix::from_i64_rows(&[vec![-1]], 1))],
    )?;
    out.push(("zsign_z2.json".to_string(), io::module_to_json(&sign)));
    out.push(("regular_z3.json".to_string(), io::module_to_json(&GModule::regular(&FinGroup::cyclic(3)))));
    let eq = Relation::from_pairs(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)])?;
    out.push(("equiv3.rel.json".to_string(), io::relation_to_json(&eq)));
    out.push(("equiv3.exobj.json".to_string(), io::ex_object_to_json(&ExObject::new(eq)?)));
    Ok(out)
}

/// `disc A` for every corpus group `A`, as plain simplicial sets.
pub fn discrete_sets(d: usize) -> Vec<(String, Arc<TruncSSet>)> {
    groups().into_iter().map(|(n, g)| (format!("disc_{n}"), Arc::new(disc(g.order(), d)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_files_round_trip() {
        let files = files(2).unwrap();
        let names: Vec<&str> = files.iter().map(|(n, _)| n.as_str()).collect();
        for needed in ["boundary1.json", "z4ext.json", "ztriv.json"] {
            assert!(names.contains(&needed));
        }
        for (name, text) in &files {
            let again = if name.ends_with(".sgroup.json") {
                io::sgroup_to_json(&io::sgroup_from_json(text, name).unwrap())
            } else if name.ends_with(".group.json") {
                io::group_to_json(&io::group_from_json(text, name).unwrap())
            } else if name.ends_with(".map.json") {
                io::map_to_json(&io::map_from_json(text, name).unwrap())
            } else if name.ends_with(".complex.json") {
                io::complex_to_json(&io::complex_from_json(text, name).unwrap())
            } else if name.ends_with("ext.json") {
                io::extension_to_json(&io::extension_from_json(text, name).unwrap())
            } else {
                continue;
            };
            assert_eq!(&again, text, "{name}");
        }
    }

    #[test]
    fn corpus_sets_validate() {
        for (name, x) in simplicial_sets(3) {
            assert!(x.validate().is_empty(), "{name}");
        }
        for (name, g) in simplicial_groups(3).unwrap() {
            assert!(g.validate().is_empty(), "{name}");
        }
    }
}
