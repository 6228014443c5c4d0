//! Fully tabulated finite categories, functors, and natural transformations,
//! together with the standard constructions (opposite, product, comma) and
//! exhaustive law validation.
//!
//! A [`FinCat`] stores its composition as an explicit total table over
//! composable pairs, so composition is a lookup and every axiom is checkable
//! by a finite loop. Ids are strings and all enumerations run in
//! lexicographic id order, which makes every operation in this crate
//! deterministic.

use crate::report::ValidationReport;
use crate::{MorId, ObjId};
use serde::Serialize;
use std::collections::BTreeMap;

/// A morphism record: id, domain, codomain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorData {
    pub id: MorId,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// Read-only interface shared by tabulated categories and the computed
/// skeleton categories in [`crate::skel`].
///
/// Implementations must be deterministic: `objects` and `hom` return ids in
/// lexicographic order, and `compose`/`identity` are pure lookups.
pub trait Category {
    fn objects(&self) -> Vec<ObjId>;
    fn hom(&self, a: &str, b: &str) -> Vec<MorId>;
    fn dom(&self, f: &str) -> ObjId;
    fn cod(&self, f: &str) -> ObjId;
    fn identity(&self, a: &str) -> MorId;
    /// `g` after `f`; callers must ensure `cod(f) = dom(g)`.
    fn compose(&self, g: &str, f: &str) -> MorId;

    fn is_identity(&self, f: &str) -> bool {
        self.identity(&self.dom(f)) == f
    }

    /// Two-sided inverse of `f`, if one exists.
    fn inverse(&self, f: &str) -> Option<MorId> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(&b, &a).into_iter().find(|g| {
            self.compose(g, f) == self.identity(&a) && self.compose(f, g) == self.identity(&b)
        })
    }

    fn is_iso(&self, f: &str) -> bool {
        self.inverse(f).is_some()
    }
}

/// A finite category as explicit tables.
///
/// `compose` maps `(g, f)` with `cod(f) = dom(g)` to `g ∘ f`. Construction
/// does not check the axioms; run [`validate_category`] to get the full
/// violation list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinCat {
    pub name: String,
    objects: Vec<ObjId>,
    morphisms: Vec<MorData>,
    identity: BTreeMap<ObjId, MorId>,
    compose: BTreeMap<(MorId, MorId), MorId>,
    #[serde(skip)]
    mor_index: BTreeMap<MorId, usize>,
    #[serde(skip)]
    hom_sets: BTreeMap<(ObjId, ObjId), Vec<MorId>>,
}

impl FinCat {
    pub fn new(
        name: impl Into<String>,
        mut objects: Vec<ObjId>,
        mut morphisms: Vec<MorData>,
        identity: BTreeMap<ObjId, MorId>,
        compose: BTreeMap<(MorId, MorId), MorId>,
    ) -> FinCat {
        objects.sort();
        objects.dedup();
        morphisms.sort_by(|a, b| a.id.cmp(&b.id));
        let mor_index = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id.clone(), i))
            .collect();
        let mut hom_sets: BTreeMap<(ObjId, ObjId), Vec<MorId>> = BTreeMap::new();
        for m in &morphisms {
            hom_sets
                .entry((m.dom.clone(), m.cod.clone()))
                .or_default()
                .push(m.id.clone());
        }
        FinCat {
            name: name.into(),
            objects,
            morphisms,
            identity,
            compose,
            mor_index,
            hom_sets,
        }
    }

    pub fn object_ids(&self) -> &[ObjId] {
        &self.objects
    }

    pub fn morphism_data(&self) -> &[MorData] {
        &self.morphisms
    }

    pub fn has_object(&self, a: &str) -> bool {
        self.objects.binary_search_by(|o| o.as_str().cmp(a)).is_ok()
    }

    pub fn mor(&self, f: &str) -> Option<&MorData> {
        self.mor_index.get(f).map(|&i| &self.morphisms[i])
    }

    pub fn identity_table(&self) -> &BTreeMap<ObjId, MorId> {
        &self.identity
    }

    pub fn compose_table(&self) -> &BTreeMap<(MorId, MorId), MorId> {
        &self.compose
    }

    /// `g ∘ f` as a table lookup, `None` when the pair is not composable or
    /// the cell is missing.
    pub fn compose_opt(&self, g: &str, f: &str) -> Option<&MorId> {
        self.compose.get(&(g.to_string(), f.to_string()))
    }

    pub fn hom_slice(&self, a: &str, b: &str) -> &[MorId] {
        self.hom_sets
            .get(&(a.to_string(), b.to_string()))
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    /// All composable pairs `(g, f)` in lexicographic order.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (&MorData, &MorData)> {
        self.morphisms.iter().flat_map(move |g| {
            self.morphisms
                .iter()
                .filter(move |f| f.cod == g.dom)
                .map(move |f| (g, f))
        })
    }
}

impl Category for FinCat {
    fn objects(&self) -> Vec<ObjId> {
        self.objects.clone()
    }

    fn hom(&self, a: &str, b: &str) -> Vec<MorId> {
        self.hom_slice(a, b).to_vec()
    }

    fn dom(&self, f: &str) -> ObjId {
        self.mor(f).unwrap_or_else(|| panic!("unknown morphism {f}")).dom.clone()
    }

    fn cod(&self, f: &str) -> ObjId {
        self.mor(f).unwrap_or_else(|| panic!("unknown morphism {f}")).cod.clone()
    }

    fn identity(&self, a: &str) -> MorId {
        self.identity[a].clone()
    }

    fn compose(&self, g: &str, f: &str) -> MorId {
        self.compose_opt(g, f)
            .unwrap_or_else(|| panic!("no composite {g} . {f} in {}", self.name))
            .clone()
    }
}

/// Exhaustively check the category axioms. Violations carry the offending
/// cell; an empty report means the table is a category.
pub fn validate_category(c: &FinCat) -> ValidationReport {
    let mut r = ValidationReport::new(format!("category {}", c.name));

    for m in &c.morphisms {
        if !c.has_object(&m.dom) {
            r.push("category.mor.dangling_dom", format!("{} : {} -> {}", m.id, m.dom, m.cod));
        }
        if !c.has_object(&m.cod) {
            r.push("category.mor.dangling_cod", format!("{} : {} -> {}", m.id, m.dom, m.cod));
        }
    }

    for a in &c.objects {
        match c.identity.get(a) {
            None => r.push("category.id.missing", a),
            Some(i) => match c.mor(i) {
                None => r.push("category.id.dangling", format!("{a} = {i}")),
                Some(m) => {
                    if &m.dom != a || &m.cod != a {
                        r.push("category.id.not_endo", format!("{a} = {i} : {} -> {}", m.dom, m.cod));
                    }
                }
            },
        }
    }
    for (a, i) in &c.identity {
        if !c.has_object(a) {
            r.push("category.id.unknown_object", format!("{a} = {i}"));
        }
    }

    // compose defined iff cod(f) = dom(g), with dom/cod of the composite
    // matching dom(f)/cod(g)
    for ((g, f), h) in &c.compose {
        let (Some(gm), Some(fm)) = (c.mor(g), c.mor(f)) else {
            r.push("category.compose.dangling", format!("{g} . {f} = {h}"));
            continue;
        };
        if fm.cod != gm.dom {
            r.push("category.compose.not_composable", format!("{g} . {f}"));
            continue;
        }
        match c.mor(h) {
            None => r.push("category.compose.dangling", format!("{g} . {f} = {h}")),
            Some(hm) => {
                if hm.dom != fm.dom || hm.cod != gm.cod {
                    r.push(
                        "category.compose.bad_boundary",
                        format!("{g} . {f} = {h} : {} -> {}", hm.dom, hm.cod),
                    );
                }
            }
        }
    }
    for (g, f) in c.composable_pairs() {
        if c.compose_opt(&g.id, &f.id).is_none() {
            r.push("category.compose.missing_cell", format!("{} . {}", g.id, f.id));
        }
    }
    if !r.is_valid() {
        // identity/associativity loops below assume a total well-formed table
        return r;
    }

    for m in &c.morphisms {
        let li = c.identity(&m.cod);
        if c.compose(&li, &m.id) != m.id {
            r.push("category.id.left_unit", format!("{} . {}", li, m.id));
        }
        let ri = c.identity(&m.dom);
        if c.compose(&m.id, &ri) != m.id {
            r.push("category.id.right_unit", format!("{} . {}", m.id, ri));
        }
    }

    // h∘(g∘f) = (h∘g)∘f over every composable triple
    for (g, f) in c.composable_pairs() {
        for h in c.morphisms.iter().filter(|h| h.dom == g.cod) {
            let gf = c.compose(&g.id, &f.id);
            let hg = c.compose(&h.id, &g.id);
            if c.compose(&h.id, &gf) != c.compose(&hg, &f.id) {
                r.push(
                    "category.compose.assoc",
                    format!("({}, {}, {})", h.id, g.id, f.id),
                );
            }
        }
    }
    r
}

/// The opposite category: dom/cod swapped, `compose(g, f) = compose_c(f, g)`.
pub fn opposite(c: &FinCat) -> FinCat {
    let morphisms = c
        .morphisms
        .iter()
        .map(|m| MorData {
            id: m.id.clone(),
            dom: m.cod.clone(),
            cod: m.dom.clone(),
        })
        .collect();
    let compose = c
        .compose
        .iter()
        .map(|((g, f), h)| ((f.clone(), g.clone()), h.clone()))
        .collect();
    FinCat::new(
        format!("{}^op", c.name.trim_end_matches("^op")),
        c.objects.clone(),
        morphisms,
        c.identity.clone(),
        compose,
    )
}

/// Canonical id for a pair, used by product and comma constructions.
pub fn pair_id(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// The product category `c × d`: objects and morphisms are pairs,
/// composition is componentwise.
pub fn product_category(c: &FinCat, d: &FinCat) -> FinCat {
    let mut objects = Vec::new();
    for a in &c.objects {
        for b in &d.objects {
            objects.push(pair_id(a, b));
        }
    }
    let mut morphisms = Vec::new();
    for f in &c.morphisms {
        for g in &d.morphisms {
            morphisms.push(MorData {
                id: pair_id(&f.id, &g.id),
                dom: pair_id(&f.dom, &g.dom),
                cod: pair_id(&f.cod, &g.cod),
            });
        }
    }
    let identity = c
        .objects
        .iter()
        .flat_map(|a| {
            d.objects.iter().map(move |b| {
                (
                    pair_id(a, b),
                    pair_id(&c.identity[a], &d.identity[b]),
                )
            })
        })
        .collect();
    let mut compose = BTreeMap::new();
    for ((g1, f1), h1) in &c.compose {
        for ((g2, f2), h2) in &d.compose {
            compose.insert(
                (pair_id(g1, g2), pair_id(f1, f2)),
                pair_id(h1, h2),
            );
        }
    }
    FinCat::new(
        format!("{}x{}", c.name, d.name),
        objects,
        morphisms,
        identity,
        compose,
    )
}

/// A functor between tabulated categories, as explicit object and morphism
/// maps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinFunctor {
    pub name: String,
    pub source: FinCat,
    pub target: FinCat,
    pub obj_map: BTreeMap<ObjId, ObjId>,
    pub mor_map: BTreeMap<MorId, MorId>,
}

impl FinFunctor {
    pub fn identity(c: &FinCat) -> FinFunctor {
        FinFunctor {
            name: format!("id_{}", c.name),
            source: c.clone(),
            target: c.clone(),
            obj_map: c.objects.iter().map(|a| (a.clone(), a.clone())).collect(),
            mor_map: c.morphisms.iter().map(|m| (m.id.clone(), m.id.clone())).collect(),
        }
    }

    /// The constant functor at an object of `target`.
    pub fn constant(name: &str, source: &FinCat, target: &FinCat, at: &str) -> FinFunctor {
        FinFunctor {
            name: name.to_string(),
            source: source.clone(),
            target: target.clone(),
            obj_map: source.objects.iter().map(|a| (a.clone(), at.to_string())).collect(),
            mor_map: source
                .morphisms
                .iter()
                .map(|m| (m.id.clone(), target.identity(at)))
                .collect(),
        }
    }

    pub fn ob(&self, a: &str) -> ObjId {
        self.obj_map
            .get(a)
            .unwrap_or_else(|| panic!("functor {}: no image for object {a}", self.name))
            .clone()
    }

    pub fn mo(&self, f: &str) -> MorId {
        self.mor_map
            .get(f)
            .unwrap_or_else(|| panic!("functor {}: no image for morphism {f}", self.name))
            .clone()
    }

    /// `self ∘ g` (first `g`, then `self`).
    pub fn compose_after(&self, g: &FinFunctor) -> FinFunctor {
        FinFunctor {
            name: format!("{}.{}", self.name, g.name),
            source: g.source.clone(),
            target: self.target.clone(),
            obj_map: g
                .obj_map
                .iter()
                .map(|(a, b)| (a.clone(), self.ob(b)))
                .collect(),
            mor_map: g
                .mor_map
                .iter()
                .map(|(f, h)| (f.clone(), self.mo(h)))
                .collect(),
        }
    }

    /// The same functor viewed between the opposite categories.
    pub fn op(&self) -> FinFunctor {
        FinFunctor {
            name: format!("{}^op", self.name),
            source: opposite(&self.source),
            target: opposite(&self.target),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }
}

/// Check the functor laws exhaustively: total maps, boundary preservation,
/// identities, and composition over all composable pairs.
pub fn validate_functor(f: &FinFunctor) -> ValidationReport {
    let mut r = ValidationReport::new(format!("functor {}", f.name));
    for a in &f.source.objects {
        match f.obj_map.get(a) {
            None => r.push("functor.obj.missing", a),
            Some(b) if !f.target.has_object(b) => {
                r.push("functor.obj.dangling", format!("{a} -> {b}"))
            }
            _ => {}
        }
    }
    for m in &f.source.morphisms {
        match f.mor_map.get(&m.id) {
            None => r.push("functor.mor.missing", &m.id),
            Some(i) => match f.target.mor(i) {
                None => r.push("functor.mor.dangling", format!("{} -> {i}", m.id)),
                Some(im) => {
                    let (ed, ec) = (f.obj_map.get(&m.dom), f.obj_map.get(&m.cod));
                    if ed != Some(&im.dom) || ec != Some(&im.cod) {
                        r.push(
                            "functor.mor.boundary",
                            format!("{} -> {} : {} -> {}", m.id, i, im.dom, im.cod),
                        );
                    }
                }
            },
        }
    }
    if !r.is_valid() {
        return r;
    }
    for a in &f.source.objects {
        if f.mo(&f.source.identity(a)) != f.target.identity(&f.ob(a)) {
            r.push("functor.id", a);
        }
    }
    for (g, h) in f.source.composable_pairs() {
        let lhs = f.mo(&f.source.compose(&g.id, &h.id));
        let rhs = f.target.compose(&f.mo(&g.id), &f.mo(&h.id));
        if lhs != rhs {
            r.push("functor.compose", format!("({}, {})", g.id, h.id));
        }
    }
    r
}

/// A natural transformation between parallel functors, as a component table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinNatTrans {
    pub name: String,
    pub source: FinFunctor,
    pub target: FinFunctor,
    /// Component at each object of the source category.
    pub components: BTreeMap<ObjId, MorId>,
}

impl FinNatTrans {
    pub fn identity(f: &FinFunctor) -> FinNatTrans {
        FinNatTrans {
            name: format!("id_{}", f.name),
            source: f.clone(),
            target: f.clone(),
            components: f
                .source
                .objects
                .iter()
                .map(|a| (a.clone(), f.target.identity(&f.ob(a))))
                .collect(),
        }
    }

    pub fn at(&self, a: &str) -> MorId {
        self.components
            .get(a)
            .unwrap_or_else(|| panic!("nat trans {}: no component at {a}", self.name))
            .clone()
    }

    /// Every component is an iso in the target category.
    pub fn is_iso(&self) -> bool {
        self.components.values().all(|m| self.source.target.is_iso(m))
    }
}

/// Check naturality exhaustively: for every `f : a -> b` of the source
/// category, `G(f) ∘ α_a = α_b ∘ F(f)`.
pub fn validate_nat_trans(t: &FinNatTrans) -> ValidationReport {
    let mut r = ValidationReport::new(format!("nat_trans {}", t.name));
    if t.source.source != t.target.source || t.source.target != t.target.target {
        r.push("nat.parallel", "source/target functors are not parallel");
        return r;
    }
    let cat = &t.source.target;
    for a in &t.source.source.objects {
        match t.components.get(a) {
            None => r.push("nat.component.missing", a),
            Some(m) => match cat.mor(m) {
                None => r.push("nat.component.dangling", format!("{a} = {m}")),
                Some(md) => {
                    if md.dom != t.source.ob(a) || md.cod != t.target.ob(a) {
                        r.push("nat.component.boundary", format!("{a} = {m}"));
                    }
                }
            },
        }
    }
    if !r.is_valid() {
        return r;
    }
    for f in &t.source.source.morphisms {
        let lhs = cat.compose(&t.target.mo(&f.id), &t.at(&f.dom));
        let rhs = cat.compose(&t.at(&f.cod), &t.source.mo(&f.id));
        if lhs != rhs {
            r.push("nat.square", &f.id);
        }
    }
    r
}

/// The comma category `(f ↓ g)` for functors `f : C -> E`, `g : D -> E`.
///
/// Objects are triples `(c, d, α : f(c) -> g(d))`; morphisms are pairs of
/// morphisms making the evident square commute. Returns the category and the
/// two projection functors.
pub fn comma_category(f: &FinFunctor, g: &FinFunctor) -> (FinCat, FinFunctor, FinFunctor) {
    assert_eq!(f.target, g.target, "comma: functors must share a target");
    let e = &f.target;
    let c = &f.source;
    let d = &g.source;

    let obj_id = |x: &str, y: &str, al: &str| format!("({x},{y},{al})");
    let mut objects = Vec::new();
    let mut obj_parts: BTreeMap<ObjId, (ObjId, ObjId, MorId)> = BTreeMap::new();
    for x in &c.objects {
        for y in &d.objects {
            for al in e.hom_slice(&f.ob(x), &g.ob(y)) {
                let id = obj_id(x, y, al);
                obj_parts.insert(id.clone(), (x.clone(), y.clone(), al.clone()));
                objects.push(id);
            }
        }
    }

    // morphisms: (u, v) with g(v) ∘ α = α' ∘ f(u)
    let mut morphisms = Vec::new();
    let mut mor_parts: BTreeMap<MorId, (ObjId, ObjId, MorId, MorId)> = BTreeMap::new();
    for (src, (x, y, al)) in &obj_parts {
        for (tgt, (x2, y2, al2)) in &obj_parts {
            for u in c.hom_slice(x, x2) {
                for v in d.hom_slice(y, y2) {
                    let lhs = e.compose(&g.mo(v), al);
                    let rhs = e.compose(al2, &f.mo(u));
                    if lhs == rhs {
                        let id = format!("[{u},{v}]{src}>{tgt}");
                        mor_parts.insert(id.clone(), (src.clone(), tgt.clone(), u.clone(), v.clone()));
                        morphisms.push(MorData {
                            id,
                            dom: src.clone(),
                            cod: tgt.clone(),
                        });
                    }
                }
            }
        }
    }

    let identity: BTreeMap<ObjId, MorId> = obj_parts
        .iter()
        .map(|(oid, (x, y, _))| {
            (
                oid.clone(),
                format!("[{},{}]{oid}>{oid}", c.identity(x), d.identity(y)),
            )
        })
        .collect();

    let mut compose = BTreeMap::new();
    for (gid, (gsrc, gtgt, gu, gv)) in &mor_parts {
        for (fid, (fsrc, ftgt, fu, fv)) in &mor_parts {
            if ftgt == gsrc {
                let hu = c.compose(gu, fu);
                let hv = d.compose(gv, fv);
                compose.insert(
                    (gid.clone(), fid.clone()),
                    format!("[{hu},{hv}]{fsrc}>{gtgt}"),
                );
            }
        }
    }

    let cat = FinCat::new(
        format!("({}|{})", f.name, g.name),
        objects,
        morphisms,
        identity,
        compose,
    );

    let proj1 = FinFunctor {
        name: format!("pi1({})", cat.name),
        source: cat.clone(),
        target: c.clone(),
        obj_map: obj_parts.iter().map(|(o, (x, _, _))| (o.clone(), x.clone())).collect(),
        mor_map: mor_parts.iter().map(|(m, (_, _, u, _))| (m.clone(), u.clone())).collect(),
    };
    let proj2 = FinFunctor {
        name: format!("pi2({})", cat.name),
        source: cat.clone(),
        target: d.clone(),
        obj_map: obj_parts.iter().map(|(o, (_, y, _))| (o.clone(), y.clone())).collect(),
        mor_map: mor_parts.iter().map(|(m, (_, _, _, v))| (m.clone(), v.clone())).collect(),
    };
    (cat, proj1, proj2)
}

/// Diagram shapes for (co)limit computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Discrete(usize),
    ParallelPair,
    Span,
    Cospan,
    WalkingArrow,
    Custom(FinCat),
}

impl Shape {
    pub fn cat(&self) -> FinCat {
        match self {
            Shape::Discrete(n) => discrete(*n),
            Shape::ParallelPair => parallel_pair(),
            Shape::Span => span(),
            Shape::Cospan => cospan(),
            Shape::WalkingArrow => walking_arrow(),
            Shape::Custom(c) => c.clone(),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Shape::Discrete(n) => format!("discrete({n})"),
            Shape::ParallelPair => "parallel_pair".into(),
            Shape::Span => "span".into(),
            Shape::Cospan => "cospan".into(),
            Shape::WalkingArrow => "walking_arrow".into(),
            Shape::Custom(c) => format!("custom({})", c.name),
        }
    }
}

/// Discrete category on `n` objects `o0 .. o{n-1}`.
pub fn discrete(n: usize) -> FinCat {
    let objects: Vec<ObjId> = (0..n).map(|i| format!("o{i}")).collect();
    let morphisms = objects
        .iter()
        .map(|a| MorData {
            id: format!("id_{a}"),
            dom: a.clone(),
            cod: a.clone(),
        })
        .collect();
    let identity = objects.iter().map(|a| (a.clone(), format!("id_{a}"))).collect();
    let compose = objects
        .iter()
        .map(|a| ((format!("id_{a}"), format!("id_{a}")), format!("id_{a}")))
        .collect();
    FinCat::new(format!("discrete{n}"), objects, morphisms, identity, compose)
}

/// The walking arrow `a0 -> a1`.
pub fn walking_arrow() -> FinCat {
    from_graph("walking_arrow", &["a0", "a1"], &[("f", "a0", "a1")])
}

/// Two parallel arrows `p0 ⇉ p1`.
pub fn parallel_pair() -> FinCat {
    from_graph("parallel_pair", &["p0", "p1"], &[("r", "p0", "p1"), ("s", "p0", "p1")])
}

/// Span `s1 <- s0 -> s2`.
pub fn span() -> FinCat {
    from_graph("span", &["s0", "s1", "s2"], &[("l", "s0", "s1"), ("r", "s0", "s2")])
}

/// Cospan `s0 -> s2 <- s1`.
pub fn cospan() -> FinCat {
    from_graph("cospan", &["s0", "s1", "s2"], &[("l", "s0", "s2"), ("r", "s1", "s2")])
}

/// Category freely generated by a graph with no composable non-identity
/// pairs. Panics if two generators are composable; use it only for shapes.
pub fn from_graph(name: &str, objects: &[&str], arrows: &[(&str, &str, &str)]) -> FinCat {
    for (_, _, c1) in arrows {
        for (_, d2, _) in arrows {
            assert_ne!(c1, d2, "from_graph: composable generator pair");
        }
    }
    let objs: Vec<ObjId> = objects.iter().map(|s| s.to_string()).collect();
    let mut morphisms: Vec<MorData> = objs
        .iter()
        .map(|a| MorData {
            id: format!("id_{a}"),
            dom: a.clone(),
            cod: a.clone(),
        })
        .collect();
    for (f, d, c) in arrows {
        morphisms.push(MorData {
            id: f.to_string(),
            dom: d.to_string(),
            cod: c.to_string(),
        });
    }
    let identity: BTreeMap<ObjId, MorId> =
        objs.iter().map(|a| (a.clone(), format!("id_{a}"))).collect();
    let mut compose = BTreeMap::new();
    for m in &morphisms {
        compose.insert((m.id.clone(), identity[&m.dom].clone()), m.id.clone());
        compose.insert((identity[&m.cod].clone(), m.id.clone()), m.id.clone());
    }
    FinCat::new(name, objs, morphisms, identity, compose)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category_is_valid() {
        assert!(validate_category(&discrete(1)).is_valid());
    }

    #[test]
    fn parallel_pair_is_valid() {
        let c = parallel_pair();
        assert_eq!(c.object_ids().len(), 2);
        assert_eq!(c.morphism_data().len(), 4);
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn mutated_composition_cell_is_cited() {
        // mutate id_a1 . f from f to s in the parallel pair over one arrow
        let c = parallel_pair();
        let mut compose = c.compose_table().clone();
        compose.insert(("id_p1".into(), "r".into()), "s".into());
        let bad = FinCat::new(
            "mutant",
            c.object_ids().to_vec(),
            c.morphism_data().to_vec(),
            c.identity_table().clone(),
            compose,
        );
        let rep = validate_category(&bad);
        assert!(!rep.is_valid());
        assert!(rep
            .violations
            .iter()
            .any(|v| v.law == "category.id.left_unit" && v.witness.contains('r')));
    }

    #[test]
    fn opposite_is_an_involution() {
        for c in [discrete(1), walking_arrow(), parallel_pair(), span()] {
            let oo = opposite(&opposite(&c));
            assert_eq!(oo.object_ids(), c.object_ids());
            assert_eq!(oo.morphism_data(), c.morphism_data());
            assert_eq!(oo.compose_table(), c.compose_table());
            assert!(validate_category(&opposite(&c)).is_valid());
        }
    }

    #[test]
    fn opposite_of_walking_arrow_flips_the_arrow() {
        let op = opposite(&walking_arrow());
        let f = op.mor("f").unwrap();
        assert_eq!((f.dom.as_str(), f.cod.as_str()), ("a1", "a0"));
    }

    #[test]
    fn product_counts_and_validity() {
        let d2 = discrete(2);
        let d3 = discrete(3);
        let p = product_category(&d2, &d3);
        assert_eq!(p.object_ids().len(), 6);
        assert!(validate_category(&p).is_valid());

        // walking_arrow x walking_arrow: the commutative square
        let w = walking_arrow();
        let sq = product_category(&w, &w);
        assert_eq!(sq.object_ids().len(), 4);
        assert_eq!(sq.morphism_data().len(), 9);
        assert!(validate_category(&sq).is_valid());
    }

    #[test]
    fn unit_product_is_isomorphic_to_the_factor() {
        let one = discrete(1);
        let w = walking_arrow();
        let p = product_category(&one, &w);
        assert_eq!(p.object_ids().len(), w.object_ids().len());
        assert_eq!(p.morphism_data().len(), w.morphism_data().len());
        // hom-set sizes match under the evident object pairing
        for a in w.object_ids() {
            for b in w.object_ids() {
                assert_eq!(
                    p.hom_slice(&pair_id("o0", a), &pair_id("o0", b)).len(),
                    w.hom_slice(a, b).len()
                );
            }
        }
    }

    #[test]
    fn comma_of_identities_on_terminal_is_terminal() {
        let one = discrete(1);
        let idf = FinFunctor::identity(&one);
        let (c, p1, p2) = comma_category(&idf, &idf);
        assert_eq!(c.object_ids().len(), 1);
        assert_eq!(c.morphism_data().len(), 1);
        assert!(validate_category(&c).is_valid());
        assert!(validate_functor(&p1).is_valid());
        assert!(validate_functor(&p2).is_valid());
    }

    #[test]
    fn slice_under_source_of_walking_arrow_has_two_objects() {
        // (x ↓ id_C) for C the walking arrow, x = constant at a0
        let w = walking_arrow();
        let one = discrete(1);
        let x = FinFunctor::constant("x", &one, &w, "a0");
        let idc = FinFunctor::identity(&w);
        let (c, _, _) = comma_category(&x, &idc);
        assert_eq!(c.object_ids().len(), 2);
        assert!(validate_category(&c).is_valid());
    }

    #[test]
    fn comma_along_identity_on_discrete_two() {
        let d2 = discrete(2);
        let idf = FinFunctor::identity(&d2);
        let (c, _, _) = comma_category(&idf, &idf);
        assert_eq!(c.object_ids().len(), 2);
        assert_eq!(c.morphism_data().len(), 2);
    }

    #[test]
    fn functor_validation_rejects_mutated_image() {
        let c = parallel_pair();
        let mut f = FinFunctor::identity(&c);
        f.mor_map.insert("r".into(), "s".into());
        // boundaries still match, but id/composition tables are unharmed, so
        // the identity functor with r ↦ s is still a functor; break identity
        // instead
        f.mor_map.insert("id_p0".into(), "r".into());
        let rep = validate_functor(&f);
        assert!(!rep.is_valid());
    }

    #[test]
    fn nat_trans_identity_is_natural_and_mutants_are_cited() {
        let c = parallel_pair();
        let f = FinFunctor::identity(&c);
        let t = FinNatTrans::identity(&f);
        assert!(validate_nat_trans(&t).is_valid());

        let mut bad = t;
        bad.components.insert("p0".into(), "r".into());
        let rep = validate_nat_trans(&bad);
        assert!(!rep.is_valid());
        assert!(rep.violations.iter().any(|v| v.law.starts_with("nat.")));
    }
}
