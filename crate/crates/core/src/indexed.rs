//! Indexed categories: pseudofunctor data over a finite base, coherence
//! checking, restriction along functors, reindexing of sections, and the
//! category of sections.
//!
//! The compositor for a composable pair `f : A -> B`, `g : B -> C` is keyed
//! `(f, g)` and has shape `L(f) ∘ L(g) ⇒ L(g∘f)`; the unitor at `A` has
//! shape `id_{L(A)} ⇒ L(id_A)`. Strict data (identity unitors/compositors)
//! is the default encoding, but every consumer in this crate uses the full
//! pseudo composition law, so genuinely pseudo fixtures work everywhere.

use crate::fincat::{
    validate_category, validate_functor, validate_nat_trans, Category, FinCat, FinFunctor,
    FinNatTrans,
};
use crate::report::ValidationReport;
use crate::search::Cone;
use crate::{MorId, ObjId};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, Serialize, PartialEq, Eq)]
pub enum IndexedError {
    #[error("size exceeded building {what}: {detail} (bound {bound})")]
    SizeExceeded { what: String, detail: String, bound: usize },
}

/// Pseudofunctor data over a finite base category.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexedCat {
    pub name: String,
    pub base: FinCat,
    /// Fibre category over each base object.
    pub fibres: BTreeMap<ObjId, FinCat>,
    /// `L(f) : fibre(cod f) -> fibre(dom f)` for each base morphism.
    pub reindex: BTreeMap<MorId, FinFunctor>,
    /// `η^A : id_{L(A)} ⇒ L(id_A)`, invertible.
    pub unitor: BTreeMap<ObjId, FinNatTrans>,
    /// `μ^{f,g} : L(f) ∘ L(g) ⇒ L(g∘f)` for `cod f = dom g`, invertible.
    pub compositor: BTreeMap<(MorId, MorId), FinNatTrans>,
}

impl IndexedCat {
    /// Build strict indexed data: unitors and compositors are auto-filled
    /// identities. Requires `reindex` to be strictly functorial, which
    /// [`validate_indexed`] will confirm.
    pub fn strict(
        name: impl Into<String>,
        base: FinCat,
        fibres: BTreeMap<ObjId, FinCat>,
        reindex: BTreeMap<MorId, FinFunctor>,
    ) -> IndexedCat {
        let mut unitor = BTreeMap::new();
        for a in base.object_ids() {
            let fib = &fibres[a];
            unitor.insert(
                a.clone(),
                FinNatTrans {
                    name: format!("eta^{a}"),
                    source: FinFunctor::identity(fib),
                    target: reindex[&base.identity(a)].clone(),
                    components: fib
                        .object_ids()
                        .iter()
                        .map(|x| (x.clone(), fib.identity(x)))
                        .collect(),
                },
            );
        }
        let mut compositor = BTreeMap::new();
        for (g, f) in base.composable_pairs() {
            // key (f, g): f first, then g
            let lf = &reindex[&f.id];
            let lg = &reindex[&g.id];
            let lgf = &reindex[&base.compose(&g.id, &f.id)];
            compositor.insert(
                (f.id.clone(), g.id.clone()),
                FinNatTrans {
                    name: format!("mu^{{{},{}}}", f.id, g.id),
                    source: lf.compose_after(lg),
                    target: lgf.clone(),
                    components: lgf
                        .source
                        .object_ids()
                        .iter()
                        .map(|x| (x.clone(), lf.target.identity(&lgf.ob(x))))
                        .collect(),
                },
            );
        }
        IndexedCat {
            name: name.into(),
            base,
            fibres,
            reindex,
            unitor,
            compositor,
        }
    }

    pub fn fibre(&self, a: &str) -> &FinCat {
        &self.fibres[a]
    }

    pub fn rx(&self, f: &str) -> &FinFunctor {
        &self.reindex[f]
    }

    /// Unitor component `η^A_X : X -> L(id_A)(X)`.
    pub fn unitor_at(&self, a: &str, x: &str) -> MorId {
        self.unitor[a].at(x)
    }

    /// Compositor component `μ^{f,g}_X : L(f)(L(g)(X)) -> L(g∘f)(X)` for
    /// `X` in the fibre over `cod g`.
    pub fn compositor_at(&self, f: &str, g: &str, x: &str) -> MorId {
        self.compositor[&(f.to_string(), g.to_string())].at(x)
    }

    /// All unitors and compositors are identities and reindexing is
    /// strictly functorial on the stored tables.
    pub fn is_strict(&self) -> bool {
        self.unitor.iter().all(|(a, t)| {
            t.components
                .iter()
                .all(|(x, m)| *m == self.fibres[a].identity(x))
        }) && self.compositor.iter().all(|((f, _), t)| {
            let fib = &self.reindex[f].target;
            t.components.iter().all(|(x, m)| {
                let lx = t.target.ob(x);
                *m == fib.identity(&lx)
            })
        })
    }
}

/// Exhaustively check the indexed-category invariants: well-formed reindex
/// boundaries, invertible unitor/compositor components, and both coherence
/// families (unitor triangles for every morphism, compositor squares for
/// every composable triple).
pub fn validate_indexed(l: &IndexedCat) -> ValidationReport {
    let mut r = ValidationReport::new(format!("indexed {}", l.name));

    for a in l.base.object_ids() {
        if !l.fibres.contains_key(a) {
            r.push("indexed.fibre.missing", a);
        } else {
            r.absorb(validate_category(&l.fibres[a]));
        }
    }
    if !r.is_valid() {
        return r;
    }
    for m in l.base.morphism_data() {
        match l.reindex.get(&m.id) {
            None => r.push("indexed.reindex.missing", &m.id),
            Some(f) => {
                if f.source != l.fibres[&m.cod] || f.target != l.fibres[&m.dom] {
                    r.push("indexed.reindex.boundary", &m.id);
                } else {
                    r.absorb(validate_functor(f));
                }
            }
        }
    }
    if !r.is_valid() {
        return r;
    }

    for a in l.base.object_ids() {
        match l.unitor.get(a) {
            None => r.push("indexed.unitor.missing", a),
            Some(t) => {
                r.absorb(validate_nat_trans(t));
                if !t.is_iso() {
                    r.push("indexed.unitor.not_iso", a);
                }
            }
        }
    }
    for (g, f) in l.base.composable_pairs() {
        let key = (f.id.clone(), g.id.clone());
        match l.compositor.get(&key) {
            None => r.push("indexed.compositor.missing", format!("({}, {})", f.id, g.id)),
            Some(t) => {
                r.absorb(validate_nat_trans(t));
                if !t.is_iso() {
                    r.push("indexed.compositor.not_iso", format!("({}, {})", f.id, g.id));
                }
            }
        }
    }
    if !r.is_valid() {
        return r;
    }

    // unitor coherence: for every f : A -> B and X over B,
    //   μ^{id_A, f}_X ∘ η^A_{L(f)X} = id   and   μ^{f, id_B}_X ∘ L(f)(η^B_X) = id
    for m in l.base.morphism_data() {
        let fib_a = &l.fibres[&m.dom];
        let lf = l.rx(&m.id);
        for x in l.fibres[&m.cod].object_ids() {
            let lfx = lf.ob(x);
            let left = fib_a.compose(
                &l.compositor_at(&l.base.identity(&m.dom), &m.id, x),
                &l.unitor_at(&m.dom, &lfx),
            );
            if left != fib_a.identity(&lfx) {
                r.push("indexed.coherence.unitor_left", format!("({}, {x})", m.id));
            }
            let right = fib_a.compose(
                &l.compositor_at(&m.id, &l.base.identity(&m.cod), x),
                &lf.mo(&l.unitor_at(&m.cod, x)),
            );
            if right != fib_a.identity(&lfx) {
                r.push("indexed.coherence.unitor_right", format!("({}, {x})", m.id));
            }
        }
    }

    // compositor coherence: for A -f-> B -g-> C -h-> D and X over D,
    //   μ^{f,hg}_X ∘ L(f)(μ^{g,h}_X) = μ^{gf,h}_X ∘ μ^{f,g}_{L(h)X}
    for (g, f) in l.base.composable_pairs() {
        for h in l.base.morphism_data().iter().filter(|h| h.dom == g.cod) {
            let gf = l.base.compose(&g.id, &f.id);
            let hg = l.base.compose(&h.id, &g.id);
            let fib_a = &l.fibres[&f.dom];
            let lf = l.rx(&f.id);
            let lh = l.rx(&h.id);
            for x in l.fibres[&h.cod].object_ids() {
                let lhs = fib_a.compose(
                    &l.compositor_at(&f.id, &hg, x),
                    &lf.mo(&l.compositor_at(&g.id, &h.id, x)),
                );
                let rhs = fib_a.compose(
                    &l.compositor_at(&gf, &h.id, x),
                    &l.compositor_at(&f.id, &g.id, &lh.ob(x)),
                );
                if lhs != rhs {
                    r.push(
                        "indexed.coherence.compositor",
                        format!("({}, {}, {}, {x})", f.id, g.id, h.id),
                    );
                }
            }
        }
    }
    r
}

/// Precompose the indexed category with a functor into its base.
pub fn restrict(l: &IndexedCat, f: &FinFunctor) -> IndexedCat {
    assert_eq!(f.target, l.base, "restrict: functor must land in the base");
    let base = f.source.clone();
    let fibres: BTreeMap<ObjId, FinCat> = base
        .object_ids()
        .iter()
        .map(|d| (d.clone(), l.fibres[&f.ob(d)].clone()))
        .collect();
    let reindex: BTreeMap<MorId, FinFunctor> = base
        .morphism_data()
        .iter()
        .map(|u| (u.id.clone(), l.reindex[&f.mo(&u.id)].clone()))
        .collect();
    let unitor = base
        .object_ids()
        .iter()
        .map(|d| (d.clone(), l.unitor[&f.ob(d)].clone()))
        .collect();
    let mut compositor = BTreeMap::new();
    for (v, u) in base.composable_pairs() {
        compositor.insert(
            (u.id.clone(), v.id.clone()),
            l.compositor[&(f.mo(&u.id), f.mo(&v.id))].clone(),
        );
    }
    IndexedCat {
        name: format!("{}|{}", l.name, f.name),
        base,
        fibres,
        reindex,
        unitor,
        compositor,
    }
}

/// A section of an indexed category: one fibre object per base object plus
/// comparison maps `ξ_f : X_A -> L(f)(X_B)` for every `f : A -> B`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SectionObj {
    pub assignment: BTreeMap<ObjId, ObjId>,
    pub xi: BTreeMap<MorId, MorId>,
}

/// A morphism of sections: a fibre morphism per base object commuting with
/// the comparison maps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SectionMor {
    pub components: BTreeMap<ObjId, MorId>,
}

impl SectionObj {
    pub fn id_string(&self) -> String {
        let objs: Vec<String> = self
            .assignment
            .iter()
            .map(|(a, x)| format!("{a}:{x}"))
            .collect();
        let xis: Vec<String> = self.xi.iter().map(|(f, m)| format!("{f}:{m}")).collect();
        format!("sec({})[{}]", objs.join(","), xis.join(","))
    }
}

impl SectionMor {
    pub fn id_string(&self, dom: &SectionObj, cod: &SectionObj) -> String {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|(a, m)| format!("{a}:{m}"))
            .collect();
        format!("smor({}){}>{}", comps.join(","), dom.id_string(), cod.id_string())
    }
}

/// Check the two section equations pointwise:
/// `ξ_{id_A} = η^A` and `ξ_{g∘f} = μ^{f,g} ∘ L(f)(ξ_g) ∘ ξ_f`.
pub fn validate_section(l: &IndexedCat, s: &SectionObj) -> ValidationReport {
    let mut r = ValidationReport::new("section");
    for a in l.base.object_ids() {
        let Some(x) = s.assignment.get(a) else {
            r.push("section.assignment.missing", a);
            continue;
        };
        if !l.fibres[a].has_object(x) {
            r.push("section.assignment.dangling", format!("{a} = {x}"));
        }
    }
    if !r.is_valid() {
        return r;
    }
    for m in l.base.morphism_data() {
        let Some(xi) = s.xi.get(&m.id) else {
            r.push("section.xi.missing", &m.id);
            continue;
        };
        let fib = &l.fibres[&m.dom];
        let expect_dom = &s.assignment[&m.dom];
        let expect_cod = l.rx(&m.id).ob(&s.assignment[&m.cod]);
        match fib.mor(xi) {
            None => r.push("section.xi.dangling", format!("{} = {xi}", m.id)),
            Some(md) => {
                if &md.dom != expect_dom || md.cod != expect_cod {
                    r.push("section.xi.boundary", format!("{} = {xi}", m.id));
                }
            }
        }
    }
    if !r.is_valid() {
        return r;
    }
    for a in l.base.object_ids() {
        let ida = l.base.identity(a);
        if s.xi[&ida] != l.unitor_at(a, &s.assignment[a]) {
            r.push("section.eq.identity", a);
        }
    }
    for (g, f) in l.base.composable_pairs() {
        let gf = l.base.compose(&g.id, &f.id);
        let fib = &l.fibres[&f.dom];
        let xc = &s.assignment[&g.cod];
        let rhs = fib.compose(
            &fib.compose(&l.compositor_at(&f.id, &g.id, xc), &l.rx(&f.id).mo(&s.xi[&g.id])),
            &s.xi[&f.id],
        );
        if s.xi[&gf] != rhs {
            r.push("section.eq.composite", format!("({}, {})", f.id, g.id));
        }
    }
    r
}

/// The category of sections, fully enumerated.
#[derive(Debug, Clone, Serialize)]
pub struct SectionsCat {
    pub cat: FinCat,
    pub objects: BTreeMap<ObjId, SectionObj>,
    pub morphisms: BTreeMap<MorId, (ObjId, ObjId, SectionMor)>,
}

/// Enumerate all sections of `l` and their morphisms. Fails with
/// `SizeExceeded` once more than `bound` objects (or morphisms) appear.
pub fn sections_category(l: &IndexedCat, bound: usize) -> Result<SectionsCat, IndexedError> {
    let base_objs = l.base.object_ids().to_vec();
    let nonid_mors: Vec<&crate::fincat::MorData> = l
        .base
        .morphism_data()
        .iter()
        .filter(|m| !l.base.is_identity(&m.id))
        .collect();

    // enumerate object assignments
    let mut assignments: Vec<BTreeMap<ObjId, ObjId>> = vec![BTreeMap::new()];
    for a in &base_objs {
        let mut next = Vec::new();
        for partial in &assignments {
            for x in l.fibres[a].object_ids() {
                let mut p = partial.clone();
                p.insert(a.clone(), x.clone());
                next.push(p);
            }
        }
        assignments = next;
    }

    let mut sections: Vec<SectionObj> = Vec::new();
    for assignment in assignments {
        // identities are forced to the unitor components
        let mut xi: BTreeMap<MorId, MorId> = base_objs
            .iter()
            .map(|a| (l.base.identity(a), l.unitor_at(a, &assignment[a])))
            .collect();
        // depth-first over the remaining morphisms, pruning with the
        // composite equation as soon as all three participants are assigned
        fn dfs(
            l: &IndexedCat,
            assignment: &BTreeMap<ObjId, ObjId>,
            nonid: &[&crate::fincat::MorData],
            idx: usize,
            xi: &mut BTreeMap<MorId, MorId>,
            out: &mut Vec<SectionObj>,
            bound: usize,
        ) -> Result<(), IndexedError> {
            if idx == nonid.len() {
                out.push(SectionObj { assignment: assignment.clone(), xi: xi.clone() });
                if out.len() > bound {
                    return Err(IndexedError::SizeExceeded {
                        what: "sections".into(),
                        detail: "object enumeration".into(),
                        bound,
                    });
                }
                return Ok(());
            }
            let m = nonid[idx];
            let fib = &l.fibres[&m.dom];
            let target = l.rx(&m.id).ob(&assignment[&m.cod]);
            for cand in fib.hom_slice(&assignment[&m.dom], &target) {
                xi.insert(m.id.clone(), cand.clone());
                let consistent = check_partial(l, assignment, xi);
                if consistent {
                    dfs(l, assignment, nonid, idx + 1, xi, out, bound)?;
                }
                xi.remove(&m.id);
            }
            Ok(())
        }
        // composite equation on every composable pair whose three morphisms
        // are all assigned so far
        fn check_partial(
            l: &IndexedCat,
            assignment: &BTreeMap<ObjId, ObjId>,
            xi: &BTreeMap<MorId, MorId>,
        ) -> bool {
            for (g, f) in l.base.composable_pairs() {
                let gf = l.base.compose(&g.id, &f.id);
                let (Some(xf), Some(xg), Some(xgf)) = (xi.get(&f.id), xi.get(&g.id), xi.get(&gf))
                else {
                    continue;
                };
                let fib = &l.fibres[&f.dom];
                let xc = &assignment[&g.cod];
                let rhs = fib.compose(
                    &fib.compose(&l.compositor_at(&f.id, &g.id, xc), &l.rx(&f.id).mo(xg)),
                    xf,
                );
                if *xgf != rhs {
                    return false;
                }
            }
            true
        }
        dfs(l, &assignment, &nonid_mors, 0, &mut xi, &mut sections, bound)?;
    }

    // morphisms of sections: componentwise families commuting with ξ
    let mut objects: BTreeMap<ObjId, SectionObj> = BTreeMap::new();
    for s in &sections {
        objects.insert(s.id_string(), s.clone());
    }
    let mut morphisms: BTreeMap<MorId, (ObjId, ObjId, SectionMor)> = BTreeMap::new();
    let mut mor_data = Vec::new();
    for (sid, s) in &objects {
        for (tid, t) in &objects {
            let pools: Vec<Vec<MorId>> = base_objs
                .iter()
                .map(|a| {
                    l.fibres[a]
                        .hom_slice(&s.assignment[a], &t.assignment[a])
                        .to_vec()
                })
                .collect();
            let mut partials: Vec<Vec<MorId>> = vec![Vec::new()];
            for pool in &pools {
                let mut next = Vec::new();
                for p in &partials {
                    for m in pool {
                        let mut q = p.clone();
                        q.push(m.clone());
                        next.push(q);
                    }
                }
                partials = next;
                if partials.is_empty() {
                    break;
                }
            }
            'cand: for comps in partials {
                let components: BTreeMap<ObjId, MorId> =
                    base_objs.iter().cloned().zip(comps).collect();
                // L(f)(α_B) ∘ ξ_f = ζ_f ∘ α_A for every f : A -> B
                for m in l.base.morphism_data() {
                    let fib = &l.fibres[&m.dom];
                    let lhs = fib.compose(&l.rx(&m.id).mo(&components[&m.cod]), &s.xi[&m.id]);
                    let rhs = fib.compose(&t.xi[&m.id], &components[&m.dom]);
                    if lhs != rhs {
                        continue 'cand;
                    }
                }
                let sm = SectionMor { components };
                let id = sm.id_string(s, t);
                morphisms.insert(id.clone(), (sid.clone(), tid.clone(), sm));
                mor_data.push(crate::fincat::MorData {
                    id,
                    dom: sid.clone(),
                    cod: tid.clone(),
                });
                if morphisms.len() > bound * bound.max(1) {
                    return Err(IndexedError::SizeExceeded {
                        what: "sections".into(),
                        detail: "morphism enumeration".into(),
                        bound,
                    });
                }
            }
        }
    }

    let identity: BTreeMap<ObjId, MorId> = objects
        .iter()
        .map(|(sid, s)| {
            let sm = SectionMor {
                components: base_objs
                    .iter()
                    .map(|a| (a.clone(), l.fibres[a].identity(&s.assignment[a])))
                    .collect(),
            };
            (sid.clone(), sm.id_string(s, s))
        })
        .collect();

    let mut compose = BTreeMap::new();
    for (gid, (gs, gt, gm)) in &morphisms {
        for (fid, (fs, ft, fm)) in &morphisms {
            if ft == gs {
                let comp = SectionMor {
                    components: base_objs
                        .iter()
                        .map(|a| {
                            (
                                a.clone(),
                                l.fibres[a].compose(&gm.components[a], &fm.components[a]),
                            )
                        })
                        .collect(),
                };
                compose.insert(
                    (gid.clone(), fid.clone()),
                    comp.id_string(&objects[fs], &objects[gt]),
                );
            }
        }
    }

    let cat = FinCat::new(
        format!("Pi({})", l.name),
        objects.keys().cloned().collect(),
        mor_data,
        identity,
        compose,
    );
    Ok(SectionsCat { cat, objects, morphisms })
}

/// Reindex a section of `L ∘ J1^op` along a cone over `J1`: the functor
/// `E -> L(apex)` sending `e` to `L(λ_e)(X_e)`, with action on a shape
/// morphism `u : e -> e'` given by `μ^{λ_e, J1(u)} ∘ L(λ_e)(ξ_u)`.
pub fn reindex_section(
    l: &IndexedCat,
    j1: &FinFunctor,
    cone: &Cone,
    j2: &SectionObj,
) -> FinFunctor {
    let shape = &j1.source;
    let apex_fibre = &l.fibres[&cone.apex];
    let obj_map: BTreeMap<ObjId, ObjId> = shape
        .object_ids()
        .iter()
        .map(|e| {
            (
                e.clone(),
                l.rx(&cone.legs[e]).ob(&j2.assignment[e]),
            )
        })
        .collect();
    let mor_map: BTreeMap<MorId, MorId> = shape
        .morphism_data()
        .iter()
        .map(|u| {
            let leg = &cone.legs[&u.dom];
            let xe2 = &j2.assignment[&u.cod];
            let m = apex_fibre.compose(
                &l.compositor_at(leg, &j1.mo(&u.id), xe2),
                &l.rx(leg).mo(&j2.xi[&u.id]),
            );
            (u.id.clone(), m)
        })
        .collect();
    FinFunctor {
        name: format!("Lstar({})", j1.name),
        source: shape.clone(),
        target: apex_fibre.clone(),
        obj_map,
        mor_map,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{discrete, walking_arrow};
    use crate::fixtures;

    #[test]
    fn strict_fixture_validates() {
        let l = fixtures::fam_indexed(&fixtures::finset_cat(1), 1);
        assert!(validate_indexed(&l).is_valid());
        assert!(l.is_strict());
    }

    #[test]
    fn families_over_discrete_base_validate() {
        let l = fixtures::constant_indexed("const", &discrete(2), &fixtures::finset_cat(1));
        assert!(validate_indexed(&l).is_valid());
    }

    #[test]
    fn pseudo_fixture_validates_but_is_not_strict() {
        let l = fixtures::pseudo_chain_indexed();
        assert!(validate_indexed(&l).is_valid());
        assert!(!l.is_strict());
    }

    #[test]
    fn mutated_compositor_is_cited() {
        // replace one compositor component with a non-invertible endo of the
        // same object: the report must flag the pair
        let mut l = fixtures::fam_indexed(&fixtures::finset_cat(2), 2);
        let mut mutated = None;
        'outer: for ((f, g), t) in &l.compositor {
            if l.base.is_identity(f) || l.base.is_identity(g) {
                continue;
            }
            let fib = l.fibre(&l.base.mor(f).unwrap().dom);
            for (x, m) in &t.components {
                let md = fib.mor(m).unwrap().clone();
                if let Some(bad) = fib
                    .hom_slice(&md.dom, &md.cod)
                    .iter()
                    .find(|c| !fib.is_iso(c))
                {
                    mutated = Some(((f.clone(), g.clone()), x.clone(), bad.clone()));
                    break 'outer;
                }
            }
        }
        let (key, x, bad) = mutated.expect("a mutable compositor component");
        l.compositor.get_mut(&key).unwrap().components.insert(x, bad);
        let rep = validate_indexed(&l);
        assert!(!rep.is_valid());
        assert!(rep
            .violations
            .iter()
            .any(|v| v.law.starts_with("indexed.") || v.law.starts_with("nat.")));
    }

    #[test]
    fn sections_over_terminal_base_match_the_fibre() {
        let d = fixtures::finset_cat(1);
        let l = fixtures::constant_indexed("k", &discrete(1), &d);
        let s = sections_category(&l, 10_000).unwrap();
        assert_eq!(s.cat.object_ids().len(), d.object_ids().len());
        assert_eq!(s.cat.morphism_data().len(), d.morphism_data().len());
        assert!(validate_category(&s.cat).is_valid());
    }

    #[test]
    fn sections_over_discrete_two_form_the_product() {
        let d = fixtures::finset_cat(1);
        let l = fixtures::constant_indexed("k", &discrete(2), &d);
        let s = sections_category(&l, 10_000).unwrap();
        let n_obj = d.object_ids().len();
        let n_mor = d.morphism_data().len();
        assert_eq!(s.cat.object_ids().len(), n_obj * n_obj);
        assert_eq!(s.cat.morphism_data().len(), n_mor * n_mor);
        assert!(validate_category(&s.cat).is_valid());
    }

    #[test]
    fn sections_over_walking_arrow_count_by_enumeration() {
        // strict constant indexed category over the walking arrow with fibre
        // finset(1): sections are triples (X0, X1, xi : X0 -> X1)
        let d = fixtures::finset_cat(1);
        let l = fixtures::constant_indexed("k", &walking_arrow(), &d);
        let s = sections_category(&l, 10_000).unwrap();
        // oracle: direct enumeration over the fibre tables
        let mut count = 0usize;
        for x0 in d.object_ids() {
            for x1 in d.object_ids() {
                count += d.hom_slice(x0, x1).len();
            }
        }
        assert_eq!(s.cat.object_ids().len(), count);
        assert!(validate_category(&s.cat).is_valid());
        for s_obj in s.objects.values() {
            assert!(validate_section(&l, s_obj).is_valid());
        }
    }

    #[test]
    fn restrict_along_identity_is_representation_identical() {
        let l = fixtures::fam_indexed(&fixtures::finset_cat(1), 1);
        let r = restrict(&l, &FinFunctor::identity(&l.base));
        assert_eq!(r.base, l.base);
        assert_eq!(r.fibres, l.fibres);
        assert_eq!(r.reindex, l.reindex);
    }

    #[test]
    fn restrict_twice_equals_restrict_along_composite() {
        let l = fixtures::fam_indexed(&fixtures::finset_cat(1), 2);
        // inclusion of the walking arrow picking s1 -> s2 via some map
        let w = walking_arrow();
        let f = fixtures::functor_into_finset_base(&w, &l.base, &[("a0", 1), ("a1", 2)]);
        let id = FinFunctor::identity(&w);
        let via_comp = restrict(&l, &f.compose_after(&id));
        let twice = restrict(&restrict(&l, &f), &id);
        assert_eq!(via_comp.fibres, twice.fibres);
        assert_eq!(via_comp.reindex, twice.reindex);
    }
}
