//! Relations between finite sets as boolean matrices, and the exact
//! completion of the category of finite sets.
//!
//! A relation `R` from `X` to `Y` has `R.get(x, y)` true when `x` is related
//! to `y`. Composition is written in diagrammatic-reverse order: `compose(S,
//! R) = SR` means "first `R`, then `S`".

use std::fmt;

use crate::error::{Error, Result};

/// Rows are bitsets of `words` machine words each, stored contiguously.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    src: usize,
    dst: usize,
    words: usize,
    bits: Vec<u64>,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation {}x{} {:?}", self.src, self.dst, self.row_strings())
    }
}

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

impl Relation {
    pub fn empty(src: usize, dst: usize) -> Relation {
        let words = words_for(dst);
        Relation { src, dst, words, bits: vec![0; src * words] }
    }

    pub fn full(src: usize, dst: usize) -> Relation {
        let mut r = Relation::empty(src, dst);
        for x in 0..src {
            for y in 0..dst {
                r.set(x, y, true);
            }
        }
        r
    }

    pub fn identity(n: usize) -> Relation {
        let mut r = Relation::empty(n, n);
        for x in 0..n {
            r.set(x, x, true);
        }
        r
    }

    /// The `index`-th relation in the enumeration of all `2^{src·dst}`
    /// relations (bit `x·dst + y`); requires `src·dst <= 64`.
    pub fn from_index(src: usize, dst: usize, index: u64) -> Relation {
        assert!(src * dst <= 64, "index enumeration needs at most 64 entries");
        let mut r = Relation::empty(src, dst);
        if dst > 0 {
            let m = if dst == 64 { u64::MAX } else { (1u64 << dst) - 1 };
            for x in 0..src {
                r.bits[x] = (index >> (x * dst)) & m;
            }
        }
        r
    }

    pub fn from_pairs(src: usize, dst: usize, pairs: &[(usize, usize)]) -> Result<Relation> {
        let mut r = Relation::empty(src, dst);
        for &(x, y) in pairs {
            if x >= src || y >= dst {
                return Err(Error::Invalid(format!("pair ({x}, {y}) out of range")));
            }
            r.set(x, y, true);
        }
        Ok(r)
    }

    /// Graph of `f : X → Y`.
    pub fn graph(f: &[usize], dst: usize) -> Result<Relation> {
        let pairs: Vec<(usize, usize)> = f.iter().copied().enumerate().collect();
        Relation::from_pairs(f.len(), dst, &pairs)
    }

    /// Parses rows like `"0101"` (`'1'` = related).
    pub fn from_strings(src: usize, dst: usize, rows: &[String]) -> Result<Relation> {
        if rows.len() != src {
            return Err(Error::Parse(format!("expected {src} rows, got {}", rows.len())));
        }
        let mut r = Relation::empty(src, dst);
        for (x, s) in rows.iter().enumerate() {
            if s.chars().count() != dst {
                return Err(Error::Parse(format!("row {x} has length {}, expected {dst}", s.len())));
            }
            for (y, ch) in s.chars().enumerate() {
                match ch {
                    '1' => r.set(x, y, true),
                    '0' => {}
                    _ => return Err(Error::Parse(format!("row {x} has character {ch:?}"))),
                }
            }
        }
        Ok(r)
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.src).map(|x| (0..self.dst).map(|y| if self.get(x, y) { '1' } else { '0' }).collect()).collect()
    }

    pub fn src_size(&self) -> usize {
        self.src
    }

    pub fn dst_size(&self) -> usize {
        self.dst
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words..(x + 1) * self.words]
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.words + y / 64] >> (y % 64) & 1 == 1
    }

    pub fn set(&mut self, x: usize, y: usize, v: bool) {
        let w = &mut self.bits[x * self.words + y / 64];
        if v {
            *w |= 1 << (y % 64);
        } else {
            *w &= !(1 << (y % 64));
        }
    }

    /// Elements related to `x`, ascending.
    pub fn image_of(&self, x: usize) -> Vec<usize> {
        ones(self.row(x)).collect()
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_square(&self) -> bool {
        self.src == self.dst
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.same_shape(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect();
        Ok(Relation { bits, ..self.clone() })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_shape(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        Ok(Relation { bits, ..self.clone() })
    }

    fn same_shape(&self, other: &Relation) -> Result<()> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::Dimension(format!(
                "relations of shape {}x{} and {}x{}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        Ok(())
    }

    /// The function this relation is the graph of, if it is one.
    pub fn as_function(&self) -> Option<Vec<usize>> {
        (0..self.src)
            .map(|x| {
                let img = self.image_of(x);
                (img.len() == 1).then(|| img[0])
            })
            .collect()
    }
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                w * 64 + b
            })
        })
    })
}

/// `SR`: first `R : X → Y`, then `S : Y → Z`.
pub fn compose(s: &Relation, r: &Relation) -> Result<Relation> {
    if r.dst != s.src {
        return Err(Error::Dimension(format!("cannot compose {}x{} after {}x{}", s.src, s.dst, r.src, r.dst)));
    }
    let mut out = Relation::empty(r.src, s.dst);
    let w = out.words;
    for x in 0..r.src {
        for y in ones(r.row(x)) {
            for (o, &v) in out.bits[x * w..(x + 1) * w].iter_mut().zip(s.row(y)) {
                *o |= v;
            }
        }
    }
    Ok(out)
}

/// `R°`.
pub fn converse(r: &Relation) -> Relation {
    let mut out = Relation::empty(r.dst, r.src);
    for x in 0..r.src {
        for y in ones(r.row(x)) {
            out.set(y, x, true);
        }
    }
    out
}

/// `R ≤ S` (entrywise implication).
pub fn leq(r: &Relation, s: &Relation) -> Result<bool> {
    r.same_shape(s)?;
    Ok(r.bits.iter().zip(&s.bits).all(|(a, b)| a & !b == 0))
}

/// `1_X ≤ f°f` and `ff° ≤ 1_Y`.
pub fn is_graph(f: &Relation) -> bool {
    let fof = compose(&converse(f), f).expect("shapes");
    let ffo = compose(f, &converse(f)).expect("shapes");
    leq(&Relation::identity(f.src), &fof).expect("square") && leq(&ffo, &Relation::identity(f.dst)).expect("square")
}

/// `1_X ≤ R` and `RR° ≤ R`.
pub fn is_equivalence(r: &Relation) -> Result<bool> {
    if !r.is_square() {
        return Err(Error::Dimension("equivalence test on a non-square relation".into()));
    }
    let id = Relation::identity(r.src);
    let rro = compose(r, &converse(r))?;
    Ok(leq(&id, r)? && leq(&rro, r)?)
}

/// Reflexive, symmetric and transitive, checked entry by entry.
pub fn is_equivalence_classical(r: &Relation) -> bool {
    let n = r.src;
    r.is_square()
        && (0..n).all(|x| r.get(x, x))
        && (0..n).all(|x| (0..n).all(|y| r.get(x, y) == r.get(y, x)))
        && (0..n).all(|x| (0..n).all(|y| !r.get(x, y) || (0..n).all(|z| !r.get(y, z) || r.get(x, z))))
}

/// Class index of each element under the equivalence generated by `r`,
/// numbered by first occurrence.
fn classes(r: &Relation) -> (usize, Vec<usize>) {
    let n = r.src;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for x in 0..n {
        for y in 0..n {
            if r.get(x, y) {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut cls = vec![0; n];
    let mut count = 0;
    for x in 0..n {
        let root = find(&mut parent, x);
        if label[root] == usize::MAX {
            label[root] = count;
            count += 1;
        }
        cls[x] = label[root];
    }
    (count, cls)
}

/// Least equivalence relation containing `r`.
pub fn generated_equivalence(r: &Relation) -> Result<Relation> {
    if !r.is_square() {
        return Err(Error::Dimension("generated equivalence of a non-square relation".into()));
    }
    let (_, cls) = classes(r);
    let n = r.src;
    let mut out = Relation::empty(n, n);
    for x in 0..n {
        for y in 0..n {
            if cls[x] == cls[y] {
                out.set(x, y, true);
            }
        }
    }
    Ok(out)
}

/// Tabulation `(Z, p, q)` of `R`: `Z` enumerates the related pairs in
/// row-major order, `p` and `q` are the projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub size: usize,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

pub fn canonical_decomposition(r: &Relation) -> Decomposition {
    let mut p = Vec::new();
    let mut q = Vec::new();
    for x in 0..r.src {
        for y in 0..r.dst {
            if r.get(x, y) {
                p.push(x);
                q.push(y);
            }
        }
    }
    Decomposition { size: p.len(), p, q }
}

impl Decomposition {
    /// `graph(q) ∘ graph(p)°`, which must give back the relation.
    pub fn recompose(&self, src: usize, dst: usize) -> Relation {
        let gp = Relation::graph(&self.p, src).expect("in range");
        let gq = Relation::graph(&self.q, dst).expect("in range");
        compose(&gq, &converse(&gp)).expect("shapes")
    }
}

/// An object `(X, R)` of the exact completion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExObject {
    rel: Relation,
}

impl ExObject {
    pub fn new(rel: Relation) -> Result<ExObject> {
        if !is_equivalence(&rel)? {
            return Err(Error::Invalid("relation is not an equivalence relation".into()));
        }
        Ok(ExObject { rel })
    }

    /// `ε Y = (Y, 1_Y)`.
    pub fn discrete(n: usize) -> ExObject {
        ExObject { rel: Relation::identity(n) }
    }

    pub fn carrier_size(&self) -> usize {
        self.rel.src
    }

    pub fn rel(&self) -> &Relation {
        &self.rel
    }
}

/// A morphism of the exact completion: a relation `f` with `Sf = f = fR`,
/// `R ≤ f°f` and `ff° ≤ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExMorphism {
    source: ExObject,
    target: ExObject,
    rel: Relation,
}

impl ExMorphism {
    pub fn new(source: ExObject, target: ExObject, rel: Relation) -> Result<ExMorphism> {
        if let Some(why) = Self::violation(&source, &target, &rel) {
            return Err(Error::Invalid(why));
        }
        Ok(ExMorphism { source, target, rel })
    }

    pub fn is_valid(source: &ExObject, target: &ExObject, rel: &Relation) -> bool {
        Self::violation(source, target, rel).is_none()
    }

    fn violation(source: &ExObject, target: &ExObject, f: &Relation) -> Option<String> {
        if f.src != source.carrier_size() || f.dst != target.carrier_size() {
            return Some("relation shape does not match the objects".into());
        }
        let (r, s) = (&source.rel, &target.rel);
        if &compose(s, f).unwrap() != f {
            return Some("Sf ≠ f".into());
        }
        if &compose(f, r).unwrap() != f {
            return Some("fR ≠ f".into());
        }
        let fo = converse(f);
        if !leq(r, &compose(&fo, f).unwrap()).unwrap() {
            return Some("R ≰ f°f".into());
        }
        if !leq(&compose(f, &fo).unwrap(), s).unwrap() {
            return Some("ff° ≰ S".into());
        }
        None
    }

    /// The morphism `(X, R) → (Y, S)` induced by a function respecting the
    /// relations: the relation `S ∘ graph(g)`.
    pub fn from_function(source: &ExObject, target: &ExObject, g: &[usize]) -> Result<ExMorphism> {
        let gr = Relation::graph(g, target.carrier_size())?;
        let rel = compose(&target.rel, &gr)?;
        ExMorphism::new(source.clone(), target.clone(), rel)
    }

    pub fn identity(obj: &ExObject) -> ExMorphism {
        ExMorphism { source: obj.clone(), target: obj.clone(), rel: obj.rel.clone() }
    }

    pub fn source(&self) -> &ExObject {
        &self.source
    }

    pub fn target(&self) -> &ExObject {
        &self.target
    }

    pub fn rel(&self) -> &Relation {
        &self.rel
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ExMorphism) -> Result<ExMorphism> {
        if first.target != self.source {
            return Err(Error::Dimension("composing exact-completion morphisms with mismatched ends".into()));
        }
        ExMorphism::new(first.source.clone(), self.target.clone(), compose(&self.rel, &first.rel)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoEpi {
    pub is_mono: bool,
    pub is_regular_epi: bool,
}

/// Mono iff `f°f = R`; regular epi iff `ff° = S`.
pub fn ex_mono_epi(f: &ExMorphism) -> MonoEpi {
    let fo = converse(&f.rel);
    MonoEpi {
        is_mono: compose(&fo, &f.rel).unwrap() == f.source.rel,
        is_regular_epi: compose(&f.rel, &fo).unwrap() == f.target.rel,
    }
}

/// `δ(X, R) = X/R` with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub size: usize,
    pub projection: Vec<usize>,
}

pub fn delta(obj: &ExObject) -> Quotient {
    let (size, projection) = classes(&obj.rel);
    Quotient { size, projection }
}

/// `δ` on morphisms: tabulate `f` as `(E, p, q)`, divide `E` by
/// `T = p°Rp ∩ q°Sq`, check that the induced `p′ : E/T → X/R` is a
/// bijection and return `q′ ∘ p′⁻¹ : X/R → Y/S`.
pub fn delta_morphism(f: &ExMorphism) -> Result<Vec<usize>> {
    let dec = canonical_decomposition(&f.rel);
    let (r, s) = (&f.source.rel, &f.target.rel);
    let e = dec.size;
    let mut t = Relation::empty(e, e);
    for a in 0..e {
        for b in 0..e {
            t.set(a, b, r.get(dec.p[a], dec.p[b]) && s.get(dec.q[a], dec.q[b]));
        }
    }
    let (et_size, et_cls) = classes(&t);
    let dx = delta(&f.source);
    let dy = delta(&f.target);
    let mut p_prime = vec![usize::MAX; et_size];
    let mut q_prime = vec![usize::MAX; et_size];
    for a in 0..e {
        let c = et_cls[a];
        let (px, qy) = (dx.projection[dec.p[a]], dy.projection[dec.q[a]]);
        if p_prime[c] != usize::MAX && p_prime[c] != px {
            return Err(Error::Inconsistent("p′ is not well defined on E/T".into()));
        }
        if q_prime[c] != usize::MAX && q_prime[c] != qy {
            return Err(Error::Inconsistent("q′ is not well defined on E/T".into()));
        }
        p_prime[c] = px;
        q_prime[c] = qy;
    }
    let mut inverse = vec![usize::MAX; dx.size];
    for (c, &px) in p_prime.iter().enumerate() {
        if inverse[px] != usize::MAX {
            return Err(Error::Inconsistent("p′ is not injective".into()));
        }
        inverse[px] = c;
    }
    if inverse.contains(&usize::MAX) {
        return Err(Error::Inconsistent("p′ is not surjective".into()));
    }
    Ok(inverse.iter().map(|&c| q_prime[c]).collect())
}

/// All equivalence relations on an `n`-element set (`n <= 5`), by
/// filtering all square relations through the two-axiom test.
pub fn all_equivalences(n: usize) -> Vec<Relation> {
    assert!(n <= 5, "exhaustive enumeration is limited to 5 elements");
    (0..1u64 << (n * n)).map(|i| Relation::from_index(n, n, i)).filter(|r| is_equivalence(r).unwrap()).collect()
}

/// All morphisms `(X, R) → (Y, S)` of the exact completion, by filtering
/// every relation `X → Y` (requires `|X|·|Y| <= 20`).
pub fn all_ex_morphisms(source: &ExObject, target: &ExObject) -> Vec<ExMorphism> {
    let (m, n) = (source.carrier_size(), target.carrier_size());
    assert!(m * n <= 20, "exhaustive enumeration too large");
    (0..1u64 << (m * n))
        .map(|i| Relation::from_index(m, n, i))
        .filter(|f| ExMorphism::is_valid(source, target, f))
        .map(|f| ExMorphism { source: source.clone(), target: target.clone(), rel: f })
        .collect()
}

/// All functions `[m] → [n]` in lexicographic order.
pub fn all_functions(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        let mut next = Vec::new();
        for f in &out {
            for y in 0..n {
                let mut g = f.clone();
                g.push(y);
                next.push(g);
            }
        }
        out = next;
    }
    out
}

/// One exhaustive oracle: cases tried and the first failing case.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OracleOutcome {
    pub name: String,
    pub cases: u64,
    pub first_failure: Option<String>,
}

impl OracleOutcome {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

struct Tally {
    name: &'static str,
    cases: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally { name, cases: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(case());
        }
    }

    fn done(self) -> OracleOutcome {
        OracleOutcome { name: self.name.to_string(), cases: self.cases, first_failure: self.first_failure }
    }
}

fn all_relations(m: usize, n: usize) -> impl Iterator<Item = Relation> {
    (0..1u64 << (m * n)).map(move |i| Relation::from_index(m, n, i))
}

/// The relation-calculus oracles on carriers of size `1..=max` (`max <= 4`):
/// two-axiom vs classical equivalence relations (with Bell-number counts),
/// the graph criterion, converse as an involution reversing composition,
/// and associativity (whole triples while `3n² <= 12`, otherwise every
/// `S` against every row of `R` and column of `T`).
pub fn relation_oracles(max: usize) -> Vec<OracleOutcome> {
    assert!(max <= 4, "exhaustive relation oracles stop at 4 elements");
    const BELL: [u64; 5] = [1, 1, 2, 5, 15];
    let mut eq = Tally::new("equivalence_two_vs_three_axioms");
    let mut graph = Tally::new("graph_criterion");
    let mut conv = Tally::new("converse_involution");
    let mut assoc = Tally::new("composition_associative");
    for n in 1..=max {
        let mut count = 0;
        for r in all_relations(n, n) {
            let two = is_equivalence(&r).expect("square");
            count += two as u64;
            eq.check(two == is_equivalence_classical(&r), || format!("{r:?}"));
        }
        eq.check(count == BELL[n], || format!("{count} equivalences on {n} elements"));
        for m in 1..=max {
            for f in all_relations(m, n) {
                graph.check(is_graph(&f) == f.as_function().is_some(), || format!("{f:?}"));
                conv.check(converse(&converse(&f)) == f, || format!("{f:?}"));
            }
        }
        // (x, w) of (SR)° reads only row x of R and column w of S
        for r in all_relations(1, n) {
            for s in all_relations(n, 1) {
                let sr = compose(&s, &r).expect("shapes");
                conv.check(converse(&sr) == compose(&converse(&r), &converse(&s)).expect("shapes"), || {
                    format!("({s:?})({r:?})")
                });
            }
        }
        let all: Vec<Relation> = all_relations(n, n).collect();
        if 3 * n * n <= 12 {
            for t in &all {
                for s in &all {
                    for r in &all {
                        let left = compose(t, &compose(s, r).expect("shapes")).expect("shapes");
                        let right = compose(&compose(t, s).expect("shapes"), r).expect("shapes");
                        assoc.check(left == right, || format!("T={t:?} S={s:?} R={r:?}"));
                    }
                }
            }
        } else {
            // entry (x, w) of either side reads only row x of R, all of S
            // and column w of T, so 1×n rows and n×1 columns cover every triple
            let rows: Vec<Relation> = all_relations(1, n).collect();
            let cols: Vec<Relation> = all_relations(n, 1).collect();
            for s in &all {
                let sr: Vec<Relation> = rows.iter().map(|r| compose(s, r).expect("shapes")).collect();
                let ts: Vec<Relation> = cols.iter().map(|t| compose(t, s).expect("shapes")).collect();
                for (t, ts) in cols.iter().zip(&ts) {
                    for (r, sr) in rows.iter().zip(&sr) {
                        let left = compose(t, sr).expect("shapes");
                        let right = compose(ts, r).expect("shapes");
                        assoc.check(left == right, || format!("T={t:?} S={s:?} R={r:?}"));
                    }
                }
            }
        }
    }
    vec![eq.done(), graph.done(), conv.done(), assoc.done()]
}

/// The `δ ⊣ ε` oracles on carriers of size `1..=max` (`max <= 4`): for every
/// object `(X, R)` and set `Y`, `|Hom(δ(X,R), Y)| = |Hom_ex((X,R), εY)|`
/// with `δ` injective on the right-hand side; and `δ` is defined (the
/// `p′` bijection check passes) on every morphism between objects.
pub fn adjunction_oracles(max: usize) -> Vec<OracleOutcome> {
    assert!(max <= 4, "exhaustive adjunction oracles stop at 4 elements");
    let objects: Vec<ExObject> = (1..=max)
        .flat_map(|n| all_equivalences(n).into_iter().map(|r| ExObject::new(r).expect("equivalence")))
        .collect();
    let mut count = Tally::new("hom_counts_agree");
    let mut bij = Tally::new("delta_injective_on_hom");
    let mut pp = Tally::new("p_prime_bijective");
    for x in &objects {
        let q = delta(x);
        for m in 1..=max {
            let ey = ExObject::discrete(m);
            let homs = all_ex_morphisms(x, &ey);
            let set_side = (m as u64).pow(q.size as u32);
            count.check(homs.len() as u64 == set_side, || format!("{:?} → {m}: {} vs {set_side}", x.rel(), homs.len()));
            let mut images = std::collections::HashSet::new();
            for f in &homs {
                match delta_morphism(f) {
                    Ok(g) => bij.check(images.insert(g), || format!("{:?}", f.rel())),
                    Err(e) => bij.check(false, || format!("{:?}: {e}", f.rel())),
                }
            }
        }
        for y in &objects {
            if x.carrier_size() * y.carrier_size() > 16 {
                continue;
            }
            for f in all_ex_morphisms(x, y) {
                let r = delta_morphism(&f);
                pp.check(r.is_ok(), || format!("{:?}: {}", f.rel(), r.unwrap_err()));
            }
        }
    }
    vec![count.done(), bij.done(), pp.done()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_and_annihilators() {
        let r = Relation::from_strings(2, 3, &["101".into(), "010".into()]).unwrap();
        assert_eq!(compose(&Relation::identity(3), &r).unwrap(), r);
        assert_eq!(compose(&r, &Relation::identity(2)).unwrap(), r);
        let z = compose(&Relation::full(2, 2), &Relation::empty(2, 2)).unwrap();
        assert_eq!(z, Relation::empty(2, 2));
        assert_eq!(converse(&Relation::identity(3)), Relation::identity(3));
        assert!(compose(&r, &r).is_err());
    }

    #[test]
    fn graph_composition_matches_functions() {
        for m in 0..=3 {
            for n in 0..=3 {
                for k in 0..=3 {
                    for f in all_functions(m, n) {
                        for g in all_functions(n, k) {
                            let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                            let lhs =
                                compose(&Relation::graph(&g, k).unwrap(), &Relation::graph(&f, n).unwrap()).unwrap();
                            assert_eq!(lhs, Relation::graph(&gf, k).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generated_equivalence_of_one_pair() {
        let r = Relation::from_pairs(3, 3, &[(0, 2)]).unwrap();
        let e = generated_equivalence(&r).unwrap();
        assert_eq!(e.count(), 5);
        assert_eq!(generated_equivalence(&Relation::identity(3)).unwrap(), Relation::identity(3));
    }

    #[test]
    fn decomposition_of_graph() {
        let f = Relation::graph(&[1, 0, 1], 2).unwrap();
        let d = canonical_decomposition(&f);
        assert_eq!(d.p, vec![0, 1, 2]);
        assert_eq!(d.recompose(3, 2), f);
    }

    #[test]
    fn quotient_map_is_regular_epi_not_mono() {
        let r = generated_equivalence(&Relation::from_pairs(3, 3, &[(0, 1)]).unwrap()).unwrap();
        let src = ExObject::discrete(3);
        let tgt = ExObject::new(r.clone()).unwrap();
        let q = ExMorphism::new(src, tgt.clone(), r).unwrap();
        let me = ex_mono_epi(&q);
        assert!(me.is_regular_epi && !me.is_mono);
        let id = ex_mono_epi(&ExMorphism::identity(&tgt));
        assert!(id.is_mono && id.is_regular_epi);
        assert_eq!(delta(&tgt).size, 2);
        assert_eq!(delta_morphism(&q).unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn delta_of_extremes() {
        assert_eq!(delta(&ExObject::discrete(4)).size, 4);
        assert_eq!(delta(&ExObject::new(Relation::full(4, 4)).unwrap()).size, 1);
    }

    #[test]
    fn small_oracles_hold() {
        assert!(relation_oracles(2).iter().all(OracleOutcome::holds));
        assert!(adjunction_oracles(2).iter().all(OracleOutcome::holds));
    }
}
