//! JSON file formats.
//!
//! Writers emit keys in declaration order; readers accept any order and
//! ignore unknown keys, so a simplicial-group file also reads as a
//! simplicial-set file. Errors carry the source name and either the
//! line/column of a syntax error or the offending field.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abelian::{ChainComplex, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::homalg::{GModule, GroupExtension, LhsReport};
use crate::homotopy::{FinGroup, SimplicialGroup};
use crate::relations::{ExObject, Relation};
use crate::simplicial::{SimplicialMap, TruncSSet};

fn syntax(source: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{source}: line {} column {}: {e}", e.line(), e.column()))
}

/// Content that parsed but fails a mathematical check becomes
/// [`Error::Invalid`]; shape problems stay [`Error::Parse`].
fn at(source: &str, field: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{source}: {field}: {m}")),
        Error::Invalid(m) | Error::Dimension(m) | Error::Inconsistent(m) => {
            Error::Invalid(format!("{source}: {field}: {m}"))
        }
        other => other,
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, source: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| syntax(source, e))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Reads a whole file; I/O failures become [`Error::Parse`] naming the path.
pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

// ---------------------------------------------------------------- sset

#[derive(Serialize, Deserialize)]
struct SSetFile {
    trunc_dim: usize,
    cells: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
}

impl SSetFile {
    fn of(x: &TruncSSet) -> SSetFile {
        SSetFile {
            trunc_dim: x.trunc_dim(),
            cells: x.cell_counts().to_vec(),
            faces: x.raw_faces().clone(),
            degens: x.raw_degens().clone(),
        }
    }

    fn build(self, source: &str) -> Result<TruncSSet> {
        let x = self.build_raw(source)?;
        if let Some(v) = x.validate().first() {
            return Err(Error::Invalid(format!(
                "{source}: simplicial identities: {} fails at level {} index {}",
                v.identity, v.level, v.index
            )));
        }
        Ok(x)
    }

    fn build_raw(self, source: &str) -> Result<TruncSSet> {
        if self.cells.len() != self.trunc_dim + 1 {
            return Err(Error::Parse(format!(
                "{source}: cells: trunc_dim {} needs {} entries, got {}",
                self.trunc_dim,
                self.trunc_dim + 1,
                self.cells.len()
            )));
        }
        for (n, level) in self.faces.iter().enumerate() {
            for (i, map) in level.iter().enumerate() {
                check_map(source, &format!("faces[{n}][{i}]"), map, &self.cells, n, n.wrapping_sub(1))?;
            }
        }
        for (n, level) in self.degens.iter().enumerate() {
            for (i, map) in level.iter().enumerate() {
                check_map(source, &format!("degens[{n}][{i}]"), map, &self.cells, n, n + 1)?;
            }
        }
        TruncSSet::from_raw(self.cells, self.faces, self.degens).map_err(|e| {
            Error::Parse(format!("{source}: {}", e.to_string().trim_start_matches("dimension mismatch: ")))
        })
    }
}

fn check_map(source: &str, field: &str, map: &[usize], cells: &[usize], from: usize, to: usize) -> Result<()> {
    let (Some(&len), Some(&bound)) = (cells.get(from), cells.get(to)) else {
        return Err(Error::Parse(format!("{source}: {field}: level out of range")));
    };
    if map.len() != len {
        return Err(Error::Parse(format!("{source}: {field}: expected {len} entries, got {}", map.len())));
    }
    if let Some(k) = map.iter().position(|&y| y >= bound) {
        return Err(Error::Parse(format!("{source}: {field}[{k}]: {} is not a cell (level has {bound})", map[k])));
    }
    Ok(())
}

pub fn sset_to_json(x: &TruncSSet) -> String {
    pretty(&SSetFile::of(x))
}

pub fn sset_from_json(text: &str, source: &str) -> Result<TruncSSet> {
    parse::<SSetFile>(text, source)?.build(source)
}

/// Shape checks only; run [`TruncSSet::validate`] for the identities.
pub fn sset_from_json_unchecked(text: &str, source: &str) -> Result<TruncSSet> {
    parse::<SSetFile>(text, source)?.build_raw(source)
}

// ---------------------------------------------------------------- maps

#[derive(Serialize, Deserialize)]
struct MapFile {
    source: SSetFile,
    target: SSetFile,
    levels: Vec<Vec<usize>>,
}

/// `{"source": sset, "target": sset, "levels": [[image of each n-cell]]}`.
pub fn map_to_json(f: &SimplicialMap) -> String {
    pretty(&MapFile { source: SSetFile::of(f.source()), target: SSetFile::of(f.target()), levels: f.levels().to_vec() })
}

pub fn map_from_json(text: &str, source: &str) -> Result<SimplicialMap> {
    let file: MapFile = parse(text, source)?;
    let s = Arc::new(file.source.build(&format!("{source}: source"))?);
    let t = Arc::new(file.target.build(&format!("{source}: target"))?);
    SimplicialMap::new(s, t, file.levels).map_err(|e| at(source, "levels", e))
}

// ---------------------------------------------------------------- relations

#[derive(Serialize, Deserialize)]
struct RelationFile {
    src: usize,
    dst: usize,
    rows: Vec<String>,
}

impl RelationFile {
    fn of(r: &Relation) -> RelationFile {
        RelationFile { src: r.src_size(), dst: r.dst_size(), rows: r.row_strings() }
    }

    fn build(self, source: &str) -> Result<Relation> {
        Relation::from_strings(self.src, self.dst, &self.rows).map_err(|e| at(source, "rows", e))
    }
}

#[derive(Serialize, Deserialize)]
struct ExObjectFile {
    carrier: usize,
    rel: RelationFile,
}

pub fn relation_to_json(r: &Relation) -> String {
    pretty(&RelationFile::of(r))
}

pub fn relation_from_json(text: &str, source: &str) -> Result<Relation> {
    parse::<RelationFile>(text, source)?.build(source)
}

pub fn ex_object_to_json(x: &ExObject) -> String {
    pretty(&ExObjectFile { carrier: x.carrier_size(), rel: RelationFile::of(x.rel()) })
}

pub fn ex_object_from_json(text: &str, source: &str) -> Result<ExObject> {
    let file: ExObjectFile = parse(text, source)?;
    let rel = file.rel.build(source)?;
    if rel.src_size() != file.carrier || rel.dst_size() != file.carrier {
        return Err(Error::Parse(format!("{source}: rel: not a relation on a carrier of size {}", file.carrier)));
    }
    ExObject::new(rel).map_err(|e| at(source, "rel", e))
}

// ---------------------------------------------------------------- groups

#[derive(Serialize, Deserialize)]
struct GroupFile {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl GroupFile {
    fn of(g: &FinGroup) -> GroupFile {
        GroupFile { order: g.order(), table: g.table(), identity: g.identity() }
    }

    fn build(self, source: &str, field: &str) -> Result<FinGroup> {
        if self.table.len() != self.order || self.table.iter().any(|r| r.len() != self.order) {
            return Err(Error::Parse(format!("{source}: {field}table: not {0}×{0}", self.order)));
        }
        FinGroup::new(self.table, self.identity).map_err(|e| at(source, &format!("{field}table"), e))
    }
}

pub fn group_to_json(g: &FinGroup) -> String {
    pretty(&GroupFile::of(g))
}

pub fn group_from_json(text: &str, source: &str) -> Result<FinGroup> {
    parse::<GroupFile>(text, source)?.build(source, "")
}

#[derive(Serialize, Deserialize)]
struct SGroupFile {
    trunc_dim: usize,
    cells: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degens: Vec<Vec<Vec<usize>>>,
    groups: Vec<GroupFile>,
}

/// A simplicial-set file with one extra key `groups`: the group on each
/// level's cells. The structure maps must be homomorphisms.
pub fn sgroup_to_json(g: &SimplicialGroup) -> String {
    let s = SSetFile::of(g.underlying());
    pretty(&SGroupFile {
        trunc_dim: s.trunc_dim,
        cells: s.cells,
        faces: s.faces,
        degens: s.degens,
        groups: g.levels().iter().map(GroupFile::of).collect(),
    })
}

pub fn sgroup_from_json(text: &str, source: &str) -> Result<SimplicialGroup> {
    let file: SGroupFile = parse(text, source)?;
    let x = SSetFile { trunc_dim: file.trunc_dim, cells: file.cells, faces: file.faces, degens: file.degens }
        .build(source)?;
    let levels = file
        .groups
        .into_iter()
        .enumerate()
        .map(|(n, g)| g.build(source, &format!("groups[{n}].")))
        .collect::<Result<Vec<_>>>()?;
    SimplicialGroup::new(levels, Arc::new(x)).map_err(|e| at(source, "groups", e))
}

// ---------------------------------------------------------------- complexes

#[derive(Serialize, Deserialize)]
struct ComplexFile {
    length: usize,
    groups: Vec<Vec<u64>>,
    boundaries: Vec<Vec<Vec<i128>>>,
}

/// `boundaries[n-1]` is the matrix of `d_n` (rows index `C_{n-1}`).
pub fn complex_to_json(c: &ChainComplex) -> String {
    pretty(&ComplexFile {
        length: c.length(),
        groups: c.groups().iter().map(|g| g.orders().to_vec()).collect(),
        boundaries: (1..=c.length()).map(|n| c.boundary(n).matrix().to_rows()).collect(),
    })
}

pub fn complex_from_json(text: &str, source: &str) -> Result<ChainComplex> {
    let file: ComplexFile = parse(text, source)?;
    if file.groups.len() != file.length + 1 || file.boundaries.len() != file.length {
        return Err(Error::Parse(format!(
            "{source}: length {} needs {} groups and {} boundaries",
            file.length,
            file.length + 1,
            file.length
        )));
    }
    let mut matrices = Vec::with_capacity(file.length);
    for (k, rows) in file.boundaries.iter().enumerate() {
        let (r, c) = (file.groups[k].len(), file.groups[k + 1].len());
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse(format!("{source}: boundaries[{k}]: expected a {r}×{c} matrix")));
        }
        matrices.push(IntMatrix::from_rows(rows, c));
    }
    ChainComplex::from_data(file.groups, matrices).map_err(|e| at(source, "boundaries", e))
}

// ---------------------------------------------------------------- homalg

#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct ExtensionFile {
    H: GroupFile,
    G: GroupFile,
    Q: GroupFile,
    iota: Vec<usize>,
    pi: Vec<usize>,
}

pub fn extension_to_json(e: &GroupExtension) -> String {
    pretty(&ExtensionFile {
        H: GroupFile::of(&e.h),
        G: GroupFile::of(&e.g),
        Q: GroupFile::of(&e.q),
        iota: e.iota.clone(),
        pi: e.pi.clone(),
    })
}

pub fn extension_from_json(text: &str, source: &str) -> Result<GroupExtension> {
    let f: ExtensionFile = parse(text, source)?;
    let h = f.H.build(source, "H.")?;
    let g = f.G.build(source, "G.")?;
    let q = f.Q.build(source, "Q.")?;
    GroupExtension::new(h, g, q, f.iota, f.pi).map_err(|e| at(source, "iota/pi", e))
}

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    invariant_factors: Vec<u64>,
    #[serde(default)]
    action: BTreeMap<String, Vec<Vec<i128>>>,
}

/// Writes the elements that do not act as the identity; they generate the
/// group unless the action is trivial, in which case `action` is empty.
pub fn module_to_json(m: &GModule) -> String {
    let id = GModule::trivial(m.group(), m.carrier());
    let action = (0..m.group().order())
        .filter(|&g| m.action(g) != id.action(g))
        .map(|g| (g.to_string(), m.action(g).to_rows()))
        .collect();
    pretty(&ModuleFile { invariant_factors: m.carrier().orders().to_vec(), action })
}

/// The group comes from elsewhere (an extension or group file). The
/// listed elements must generate the group and the rest of the action is
/// their closure; an empty or absent `action` is the trivial module.
pub fn module_from_json(text: &str, source: &str, group: &FinGroup) -> Result<GModule> {
    let f: ModuleFile = parse(text, source)?;
    let carrier = FgAbGroup::from_orders(f.invariant_factors);
    let k = carrier.ngens();
    let mut given = Vec::with_capacity(f.action.len());
    for (key, rows) in &f.action {
        let g: usize = key.parse().ok().filter(|&g| g < group.order()).ok_or_else(|| {
            Error::Parse(format!("{source}: action.{key}: not an element index below {}", group.order()))
        })?;
        if rows.len() != k || rows.iter().any(|r| r.len() != k) {
            return Err(Error::Parse(format!("{source}: action.{key}: expected a {k}×{k} matrix")));
        }
        given.push((g, IntMatrix::from_rows(rows, k)));
    }
    if given.is_empty() {
        return Ok(GModule::trivial(group, &carrier));
    }
    GModule::from_generator_action(group.clone(), carrier, &given).map_err(|e| at(source, "action", e))
}

// ---------------------------------------------------------------- reports

fn factors(g: &FgAbGroup) -> Value {
    json!(g.invariant_factors())
}

fn grid(entries: &BTreeMap<(usize, usize), FgAbGroup>) -> Value {
    Value::Object(entries.iter().map(|((p, q), g)| (format!("{p},{q}"), factors(g))).collect())
}

/// The spectral-sequence report. Object keys come out sorted since
/// `serde_json` maps are ordered.
pub fn lhs_report_value(r: &LhsReport) -> Value {
    let pages: serde_json::Map<String, Value> =
        r.result.pages.iter().map(|p| (p.r.to_string(), grid(&p.entries))).collect();
    let rows: serde_json::Map<String, Value> = r
        .abutment
        .iter()
        .map(|a| {
            (
                a.n.to_string(),
                json!({
                    "e_inf_rank": a.e_inf_rank,
                    "e_inf_torsion_order": a.e_inf_torsion.to_string(),
                    "direct": factors(&a.direct),
                    "pass": a.holds(),
                }),
            )
        })
        .collect();
    let e2: serde_json::Map<String, Value> = r
        .e2_check
        .iter()
        .map(|((p, q), (ss, direct))| {
            (
                format!("{p},{q}"),
                json!({"spectral": factors(ss), "direct": factors(direct), "pass": ss.is_isomorphic(direct)}),
            )
        })
        .collect();
    json!({
        "pages": pages,
        "e_infinity": grid(&r.result.e_infinity),
        "total": r.result.total.iter().map(factors).collect::<Vec<_>>(),
        "abutment_check": {"all_pass": r.abutment_holds(), "rows": rows},
        "e2_check": {"all_pass": r.e2_holds(), "entries": e2},
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifying::k_space;
    use crate::homalg::lhs_report;
    use crate::simplicial::standard::{boundary, horn};

    #[test]
    fn sset_round_trip() {
        for x in [boundary(1, 3).sset.as_ref().clone(), horn(2, 1, 3).unwrap().sset.as_ref().clone()] {
            let s = sset_to_json(&x);
            assert_eq!(sset_from_json(&s, "t").unwrap(), x);
            assert_eq!(sset_to_json(&sset_from_json(&s, "t").unwrap()), s);
        }
    }

    #[test]
    fn keys_in_declared_order() {
        let s = sset_to_json(&boundary(1, 1).sset);
        let pos = |k: &str| s.find(k).unwrap();
        assert!(pos("trunc_dim") < pos("cells") && pos("cells") < pos("faces") && pos("faces") < pos("degens"));
    }

    #[test]
    fn reader_accepts_any_key_order() {
        let s = r#"{"degens": [[[0]]], "faces": [[], [[0], [0]]], "cells": [1, 1], "trunc_dim": 1}"#;
        let x = sset_from_json(s, "t").unwrap();
        assert_eq!(x.cell_counts(), &[1, 1]);
    }

    #[test]
    fn syntax_errors_have_a_location() {
        let err = sset_from_json("{\"trunc_dim\": 1,\n \"cells\": [1, }", "bad.json").unwrap_err();
        let Error::Parse(m) = err else { panic!() };
        assert!(m.starts_with("bad.json: line 2"), "{m}");
    }

    #[test]
    fn semantic_errors_name_the_field() {
        let s = r#"{"trunc_dim": 1, "cells": [1, 1], "faces": [[], [[0], [3]]], "degens": [[[0]]]}"#;
        let Error::Parse(m) = sset_from_json(s, "f").unwrap_err() else { panic!() };
        assert!(m.contains("faces[1][1][0]"), "{m}");
        let s = r#"{"trunc_dim": 1, "cells": [2, 1], "faces": [[], [[0], [1]]], "degens": [[[0, 0]]]}"#;
        assert!(matches!(sset_from_json(s, "f"), Err(Error::Invalid(_))));
        assert_eq!(sset_from_json_unchecked(s, "f").unwrap().validate().is_empty(), false);
    }

    #[test]
    fn other_round_trips() {
        let r = Relation::from_pairs(2, 3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(relation_from_json(&relation_to_json(&r), "t").unwrap(), r);
        let e = ExObject::new(Relation::full(3, 3)).unwrap();
        assert_eq!(ex_object_from_json(&ex_object_to_json(&e), "t").unwrap(), e);
        let g = FinGroup::symmetric3();
        assert_eq!(group_from_json(&group_to_json(&g), "t").unwrap(), g);
        let k = SimplicialGroup::from_ab(&k_space(&FgAbGroup::cyclic(2), 1, 2).unwrap()).unwrap();
        assert_eq!(sgroup_from_json(&sgroup_to_json(&k), "t").unwrap(), k);
        let c = ChainComplex::disk(FgAbGroup::from_orders(vec![0, 2]), 2);
        assert_eq!(complex_from_json(&complex_to_json(&c), "t").unwrap(), c);
        let ext = GroupExtension::from_normal_subgroup(&FinGroup::cyclic(4), &[0, 2]).unwrap();
        assert_eq!(extension_from_json(&extension_to_json(&ext), "t").unwrap(), ext);
        let m = GModule::regular(&FinGroup::cyclic(3));
        assert_eq!(module_from_json(&module_to_json(&m), "t", m.group()).unwrap(), m);
        let f = SimplicialMap::identity(Arc::new(disc3()));
        assert_eq!(map_from_json(&map_to_json(&f), "t").unwrap(), f);
    }

    fn disc3() -> TruncSSet {
        crate::simplicial::disc(3, 2)
    }

    #[test]
    fn trivial_module_from_empty_action() {
        let g = FinGroup::cyclic(4);
        let m = module_from_json(r#"{"invariant_factors": [0]}"#, "t", &g).unwrap();
        assert_eq!(m, GModule::integers(&g));
    }

    #[test]
    fn lhs_report_is_sorted_and_stable() {
        let ext = GroupExtension::from_normal_subgroup(&FinGroup::cyclic(4), &[0, 2]).unwrap();
        let a = GModule::integers(&ext.g);
        let v = lhs_report_value(&lhs_report(&ext, &a, 2, 3).unwrap());
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.find("\"abutment_check\"").unwrap() < s.find("\"pages\"").unwrap());
        assert_eq!(v["abutment_check"]["all_pass"], json!(true));
        assert_eq!(s, serde_json::to_string(&v).unwrap());
    }
}
