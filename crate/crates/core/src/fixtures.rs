//! Shared fixtures: tabulated skeleta, posets, small groups, the standard
//! indexed categories (constant, families, representable, domain, one
//! genuinely pseudo example), and seeded random fixture generation for the
//! property suites.

use crate::fincat::{validate_functor, Category, FinCat, FinFunctor, MorData, Shape};
use crate::indexed::{sections_category, IndexedCat, SectionObj};
use crate::skel::{FinSetCat, ParFn, PSetCat, SetFn};
use crate::{MorId, ObjId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Skeleton object id for the finite-set categories.
pub fn finset_obj(n: usize) -> ObjId {
    crate::skel::obj_id(n)
}

/// Morphism id of a total function given by its images.
pub fn finset_mor(map: &[usize], cod: usize) -> MorId {
    FinSetCat::new(9, 9).mor_id(&SetFn::new(map.len(), cod, map.to_vec()))
}

/// Morphism id of a partial function; entries equal to `cod` are undefined.
pub fn pset_mor(map: &[usize], cod: usize) -> MorId {
    PSetCat::new(9, 9).mor_id(&ParFn::new(map.len(), cod, map.to_vec()))
}

/// Fully tabulated skeleton of finite sets `{0..max}` and total functions.
pub fn finset_cat(max: usize) -> FinCat {
    assert!(max <= 4, "tabulated finset skeleton is capped at 4");
    let skel = FinSetCat::new(max, max);
    let mut morphisms = Vec::new();
    let mut fns = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for e in 0..SetFn::count(a, b) {
                if a > 0 && b == 0 {
                    continue;
                }
                let f = SetFn::from_index(a, b, e);
                morphisms.push(MorData {
                    id: skel.mor_id(&f),
                    dom: finset_obj(a),
                    cod: finset_obj(b),
                });
                fns.push(f);
            }
        }
    }
    let identity = (0..=max)
        .map(|n| (finset_obj(n), skel.mor_id(&SetFn::identity(n))))
        .collect();
    let mut compose = BTreeMap::new();
    for g in &fns {
        for f in &fns {
            if f.cod == g.dom {
                compose.insert(
                    (skel.mor_id(g), skel.mor_id(f)),
                    skel.mor_id(&g.after(f)),
                );
            }
        }
    }
    FinCat::new(
        format!("finset{max}"),
        (0..=max).map(finset_obj).collect(),
        morphisms,
        identity,
        compose,
    )
}

/// Fully tabulated skeleton of finite sets and partial functions.
pub fn pset_cat(max: usize) -> FinCat {
    assert!(max <= 3, "tabulated pset skeleton is capped at 3");
    let skel = PSetCat::new(max, max);
    let mut morphisms = Vec::new();
    let mut fns = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for e in 0..ParFn::count(a, b) {
                let f = ParFn::from_index(a, b, e);
                morphisms.push(MorData {
                    id: skel.mor_id(&f),
                    dom: finset_obj(a),
                    cod: finset_obj(b),
                });
                fns.push(f);
            }
        }
    }
    let identity = (0..=max)
        .map(|n| (finset_obj(n), skel.mor_id(&ParFn::identity(n))))
        .collect();
    let mut compose = BTreeMap::new();
    for g in &fns {
        for f in &fns {
            if f.cod == g.dom {
                compose.insert(
                    (skel.mor_id(g), skel.mor_id(f)),
                    skel.mor_id(&g.after(f)),
                );
            }
        }
    }
    FinCat::new(
        format!("pset{max}"),
        (0..=max).map(finset_obj).collect(),
        morphisms,
        identity,
        compose,
    )
}

/// Poset as a thin category; `leq` must be a partial order on `elems`.
pub fn poset_cat(name: &str, elems: &[&str], leq: &dyn Fn(&str, &str) -> bool) -> FinCat {
    let objects: Vec<ObjId> = elems.iter().map(|s| s.to_string()).collect();
    let le_id = |a: &str, b: &str| format!("le.{a}.{b}");
    let mut morphisms = Vec::new();
    for a in elems {
        for b in elems {
            if leq(a, b) {
                morphisms.push(MorData {
                    id: le_id(a, b),
                    dom: a.to_string(),
                    cod: b.to_string(),
                });
            }
        }
    }
    let identity = elems.iter().map(|a| (a.to_string(), le_id(a, a))).collect();
    let mut compose = BTreeMap::new();
    for g in &morphisms {
        for f in &morphisms {
            if f.cod == g.dom {
                compose.insert((g.id.clone(), f.id.clone()), le_id(&f.dom, &g.cod));
            }
        }
    }
    FinCat::new(name, objects, morphisms, identity, compose)
}

/// The chain `t0 < t1 < ... < t{n-1}`.
pub fn chain(n: usize) -> FinCat {
    let names: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let leq = |a: &str, b: &str| a[1..].parse::<usize>().unwrap() <= b[1..].parse::<usize>().unwrap();
    poset_cat(&format!("chain{n}"), &refs, &leq)
}

/// The Boolean square lattice `bot < a, b < top`.
pub fn boolean_square() -> FinCat {
    let leq = |x: &str, y: &str| x == y || x == "bot" || y == "top";
    poset_cat("bool2x2", &["a", "b", "bot", "top"], &leq)
}

/// The diamond lattice M3: three incomparable atoms between bot and top.
/// Not distributive, which is exactly what the tractability counterexample
/// needs.
pub fn m3() -> FinCat {
    let leq = |x: &str, y: &str| x == y || x == "bot" || y == "top";
    poset_cat("m3", &["a", "b", "c", "bot", "top"], &leq)
}

/// The group Z/2 as a one-object category: morphisms `e` (identity), `s`.
pub fn bz2() -> FinCat {
    let objects = vec!["x".to_string()];
    let morphisms = vec![
        MorData { id: "e".into(), dom: "x".into(), cod: "x".into() },
        MorData { id: "s".into(), dom: "x".into(), cod: "x".into() },
    ];
    let identity = [("x".to_string(), "e".to_string())].into_iter().collect();
    let compose = [
        (("e".to_string(), "e".to_string()), "e".to_string()),
        (("e".to_string(), "s".to_string()), "s".to_string()),
        (("s".to_string(), "e".to_string()), "s".to_string()),
        (("s".to_string(), "s".to_string()), "e".to_string()),
    ]
    .into_iter()
    .collect();
    FinCat::new("bz2", objects, morphisms, identity, compose)
}

/// F2-linear maps between spaces of dimension `0..=max_dim`, tabulated.
/// A map `a -> b` is stored column-major: column `j` is the image of basis
/// vector `j` as a bitmask of length `b`.
pub fn f2_cat(max_dim: usize) -> FinCat {
    assert!(max_dim <= 2, "tabulated f2 category is capped at dimension 2");
    let obj = |d: usize| format!("v{d}");
    let mor_id = |a: usize, b: usize, cols: &[u32]| {
        let e: usize = cols
            .iter()
            .rev()
            .fold(0usize, |acc, &c| acc * (1 << b) + c as usize);
        let w = ((1usize << (a * b)).saturating_sub(1)).max(1).to_string().len();
        format!("m{a}>{b}:{e:0w$}")
    };
    let mut morphisms = Vec::new();
    let mut mats: Vec<(usize, usize, Vec<u32>)> = Vec::new();
    for a in 0..=max_dim {
        for b in 0..=max_dim {
            let total = 1usize << (a * b);
            for e in 0..total {
                let mut cols = Vec::with_capacity(a);
                let mut rem = e;
                for _ in 0..a {
                    cols.push((rem % (1 << b)) as u32);
                    rem /= 1 << b;
                }
                morphisms.push(MorData {
                    id: mor_id(a, b, &cols),
                    dom: obj(a),
                    cod: obj(b),
                });
                mats.push((a, b, cols));
            }
        }
    }
    let id_cols = |d: usize| (0..d).map(|j| 1u32 << j).collect::<Vec<_>>();
    let identity = (0..=max_dim)
        .map(|d| (obj(d), mor_id(d, d, &id_cols(d))))
        .collect();
    let mul = |n: &(usize, usize, Vec<u32>), m: &(usize, usize, Vec<u32>)| -> Vec<u32> {
        // columns of n∘m: n applied to each column of m
        m.2.iter()
            .map(|&v| {
                let mut acc = 0u32;
                for (j, &col) in n.2.iter().enumerate() {
                    if v >> j & 1 == 1 {
                        acc ^= col;
                    }
                }
                acc
            })
            .collect()
    };
    let mut compose = BTreeMap::new();
    for n in &mats {
        for m in &mats {
            if m.1 == n.0 {
                compose.insert(
                    (mor_id(n.0, n.1, &n.2), mor_id(m.0, m.1, &m.2)),
                    mor_id(m.0, n.1, &mul(n, m)),
                );
            }
        }
    }
    FinCat::new(
        format!("f2dim{max_dim}"),
        (0..=max_dim).map(obj).collect(),
        morphisms,
        identity,
        compose,
    )
}

/// Discrete category whose objects are the given labels.
pub fn discrete_on(name: &str, labels: &[String]) -> FinCat {
    let morphisms = labels
        .iter()
        .map(|l| MorData {
            id: format!("id({l})"),
            dom: l.clone(),
            cod: l.clone(),
        })
        .collect();
    let identity = labels.iter().map(|l| (l.clone(), format!("id({l})"))).collect();
    let compose = labels
        .iter()
        .map(|l| ((format!("id({l})"), format!("id({l})")), format!("id({l})")))
        .collect();
    FinCat::new(name, labels.to_vec(), morphisms, identity, compose)
}

/// Constant indexed category: every fibre is `fibre`, every reindexing the
/// identity functor.
pub fn constant_indexed(name: &str, base: &FinCat, fibre: &FinCat) -> IndexedCat {
    let fibres = base
        .object_ids()
        .iter()
        .map(|a| (a.clone(), fibre.clone()))
        .collect();
    let reindex = base
        .morphism_data()
        .iter()
        .map(|m| (m.id.clone(), FinFunctor::identity(fibre)))
        .collect();
    IndexedCat::strict(name, base.clone(), fibres, reindex)
}

/// The tuple category `d^s`: objects are `s`-tuples of `d`-objects written
/// `[x0,..]`, morphisms are componentwise.
pub fn tuple_cat(d: &FinCat, s: usize) -> FinCat {
    let tuple = |parts: &[&str]| format!("[{}]", parts.join(","));
    let mut obj_tuples: Vec<Vec<ObjId>> = vec![Vec::new()];
    for _ in 0..s {
        let mut next = Vec::new();
        for t in &obj_tuples {
            for x in d.object_ids() {
                let mut t2 = t.clone();
                t2.push(x.clone());
                next.push(t2);
            }
        }
        obj_tuples = next;
    }
    let mut mor_tuples: Vec<Vec<MorId>> = vec![Vec::new()];
    for _ in 0..s {
        let mut next = Vec::new();
        for t in &mor_tuples {
            for m in d.morphism_data() {
                let mut t2 = t.clone();
                t2.push(m.id.clone());
                next.push(t2);
            }
        }
        mor_tuples = next;
    }
    let objects: Vec<ObjId> = obj_tuples
        .iter()
        .map(|t| tuple(&t.iter().map(|s| s.as_str()).collect::<Vec<_>>()))
        .collect();
    let morphisms: Vec<MorData> = mor_tuples
        .iter()
        .map(|t| {
            let doms: Vec<&str> = t.iter().map(|m| d.mor(m).unwrap().dom.as_str()).collect();
            let cods: Vec<&str> = t.iter().map(|m| d.mor(m).unwrap().cod.as_str()).collect();
            MorData {
                id: tuple(&t.iter().map(|s| s.as_str()).collect::<Vec<_>>()),
                dom: tuple(&doms),
                cod: tuple(&cods),
            }
        })
        .collect();
    let identity: BTreeMap<ObjId, MorId> = obj_tuples
        .iter()
        .map(|t| {
            let ids: Vec<MorId> = t.iter().map(|x| d.identity(x)).collect();
            (
                tuple(&t.iter().map(|s| s.as_str()).collect::<Vec<_>>()),
                tuple(&ids.iter().map(|s| s.as_str()).collect::<Vec<_>>()),
            )
        })
        .collect();
    let mut compose = BTreeMap::new();
    for g in &mor_tuples {
        for f in &mor_tuples {
            let composable = g
                .iter()
                .zip(f)
                .all(|(gi, fi)| d.mor(fi).unwrap().cod == d.mor(gi).unwrap().dom);
            if composable {
                let h: Vec<MorId> = g.iter().zip(f).map(|(gi, fi)| d.compose(gi, fi)).collect();
                compose.insert(
                    (
                        tuple(&g.iter().map(|s| s.as_str()).collect::<Vec<_>>()),
                        tuple(&f.iter().map(|s| s.as_str()).collect::<Vec<_>>()),
                    ),
                    tuple(&h.iter().map(|s| s.as_str()).collect::<Vec<_>>()),
                );
            }
        }
    }
    FinCat::new(format!("{}^{s}", d.name), objects, morphisms, identity, compose)
}

fn tuple_parts(id: &str) -> Vec<String> {
    let inner = id
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or_else(|| panic!("not a tuple id: {id}"));
    if inner.is_empty() {
        return Vec::new();
    }
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(inner[start..i].to_string());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(inner[start..].to_string());
    parts
}

/// The families indexed category of `d` over the finite-set skeleton
/// `{0..base_max}`: the fibre over `n` is `d^n` and reindexing along a
/// function precomposes tuples.
pub fn fam_indexed(d: &FinCat, base_max: usize) -> IndexedCat {
    let base = finset_cat(base_max);
    let skel = FinSetCat::new(base_max, base_max);
    let fibres: BTreeMap<ObjId, FinCat> = (0..=base_max)
        .map(|n| (finset_obj(n), tuple_cat(d, n)))
        .collect();
    let tuple = |parts: &[String]| format!("[{}]", parts.join(","));
    let mut reindex = BTreeMap::new();
    for m in base.morphism_data() {
        let f = skel.mor_of(&m.id);
        let src = &fibres[&m.cod];
        let tgt = &fibres[&m.dom];
        let remap = |id: &str| {
            let parts = tuple_parts(id);
            let picked: Vec<String> = f.map.iter().map(|&i| parts[i].clone()).collect();
            tuple(&picked)
        };
        reindex.insert(
            m.id.clone(),
            FinFunctor {
                name: format!("L({})", m.id),
                source: src.clone(),
                target: tgt.clone(),
                obj_map: src.object_ids().iter().map(|x| (x.clone(), remap(x))).collect(),
                mor_map: src
                    .morphism_data()
                    .iter()
                    .map(|mm| (mm.id.clone(), remap(&mm.id)))
                    .collect(),
            },
        );
    }
    IndexedCat::strict(format!("fam({})", d.name), base, fibres, reindex)
}

/// Representable indexed category `C(-, at)` with discrete fibres.
pub fn representable_indexed(c: &FinCat, at: &str) -> IndexedCat {
    let fibres: BTreeMap<ObjId, FinCat> = c
        .object_ids()
        .iter()
        .map(|a| {
            (
                a.clone(),
                discrete_on(&format!("hom({a},{at})"), &c.hom(a, at)),
            )
        })
        .collect();
    let mut reindex = BTreeMap::new();
    for m in c.morphism_data() {
        let src = &fibres[&m.cod];
        let tgt = &fibres[&m.dom];
        let obj_map: BTreeMap<ObjId, ObjId> = src
            .object_ids()
            .iter()
            .map(|h| (h.clone(), c.compose(h, &m.id)))
            .collect();
        let mor_map = src
            .morphism_data()
            .iter()
            .map(|mm| {
                let target_obj = &obj_map[&mm.dom];
                (mm.id.clone(), tgt.identity(target_obj))
            })
            .collect();
        reindex.insert(
            m.id.clone(),
            FinFunctor {
                name: format!("L({})", m.id),
                source: src.clone(),
                target: tgt.clone(),
                obj_map,
                mor_map,
            },
        );
    }
    IndexedCat::strict(format!("rep({},{at})", c.name), c.clone(), fibres, reindex)
}

/// The domain-fibration indexed category: the fibre over `A` is the
/// under-category `A/C`, reindexing precomposes.
pub fn domain_indexed(c: &FinCat) -> IndexedCat {
    let under_mor = |v: &str, g: &str, h: &str| format!("[{v}]{g}>{h}");
    let fibres: BTreeMap<ObjId, FinCat> = c
        .object_ids()
        .iter()
        .map(|a| {
            let objs: Vec<ObjId> = c
                .morphism_data()
                .iter()
                .filter(|m| &m.dom == a)
                .map(|m| m.id.clone())
                .collect();
            let mut morphisms = Vec::new();
            for g in &objs {
                for h in &objs {
                    for v in c.hom_slice(&c.mor(g).unwrap().cod, &c.mor(h).unwrap().cod) {
                        if c.compose(v, g) == *h {
                            morphisms.push(MorData {
                                id: under_mor(v, g, h),
                                dom: g.clone(),
                                cod: h.clone(),
                            });
                        }
                    }
                }
            }
            let identity: BTreeMap<ObjId, MorId> = objs
                .iter()
                .map(|g| {
                    (
                        g.clone(),
                        under_mor(&c.identity(&c.mor(g).unwrap().cod), g, g),
                    )
                })
                .collect();
            let mut compose = BTreeMap::new();
            for m2 in &morphisms {
                for m1 in &morphisms {
                    if m1.cod == m2.dom {
                        let v2 = m2.id[1..].split(']').next().unwrap();
                        let v1 = m1.id[1..].split(']').next().unwrap();
                        compose.insert(
                            (m2.id.clone(), m1.id.clone()),
                            under_mor(&c.compose(v2, v1), &m1.dom, &m2.cod),
                        );
                    }
                }
            }
            (
                a.clone(),
                FinCat::new(format!("{a}/{}", c.name), objs, morphisms, identity, compose),
            )
        })
        .collect();
    let mut reindex = BTreeMap::new();
    for m in c.morphism_data() {
        let src = &fibres[&m.cod];
        let tgt = &fibres[&m.dom];
        let obj_map: BTreeMap<ObjId, ObjId> = src
            .object_ids()
            .iter()
            .map(|g| (g.clone(), c.compose(g, &m.id)))
            .collect();
        let mor_map = src
            .morphism_data()
            .iter()
            .map(|mm| {
                let v = mm.id[1..].split(']').next().unwrap().to_string();
                (
                    mm.id.clone(),
                    under_mor(&v, &obj_map[&mm.dom], &obj_map[&mm.cod]),
                )
            })
            .collect();
        reindex.insert(
            m.id.clone(),
            FinFunctor {
                name: format!("L({})", m.id),
                source: src.clone(),
                target: tgt.clone(),
                obj_map,
                mor_map,
            },
        );
    }
    IndexedCat::strict(format!("dom({})", c.name), c.clone(), fibres, reindex)
}

/// A genuinely pseudo indexed category: base is the 3-chain, every fibre is
/// BZ/2, every reindexing the identity, and the one compositor of
/// non-identity morphisms is the flip `s`. Coherence holds because the
/// 3-chain has no composable triple of non-identities.
pub fn pseudo_chain_indexed() -> IndexedCat {
    let base = chain(3);
    let fib = bz2();
    let fibres: BTreeMap<ObjId, FinCat> = base
        .object_ids()
        .iter()
        .map(|a| (a.clone(), fib.clone()))
        .collect();
    let reindex: BTreeMap<MorId, FinFunctor> = base
        .morphism_data()
        .iter()
        .map(|m| (m.id.clone(), FinFunctor::identity(&fib)))
        .collect();
    let mut l = IndexedCat::strict("pseudo_chain", base, fibres, reindex);
    let key = ("le.t0.t1".to_string(), "le.t1.t2".to_string());
    let t = l.compositor.get_mut(&key).expect("chain compositor");
    t.components.insert("x".into(), "s".into());
    l.name = "pseudo_chain".into();
    l
}

/// A functor from a composite-free shape into a finset base; shape arrows
/// map to the lexicographically first morphism between the chosen images.
pub fn functor_into_finset_base(
    shape: &FinCat,
    base: &FinCat,
    objects: &[(&str, usize)],
) -> FinFunctor {
    let obj_map: BTreeMap<ObjId, ObjId> = objects
        .iter()
        .map(|(o, n)| (o.to_string(), finset_obj(*n)))
        .collect();
    let mor_map = shape
        .morphism_data()
        .iter()
        .map(|m| {
            let (a, b) = (&obj_map[&m.dom], &obj_map[&m.cod]);
            let img = if shape.is_identity(&m.id) {
                base.identity(a)
            } else {
                base.hom_slice(a, b)
                    .first()
                    .unwrap_or_else(|| panic!("no morphism {a} -> {b} in base"))
                    .clone()
            };
            (m.id.clone(), img)
        })
        .collect();
    let f = FinFunctor {
        name: format!("{}->{}", shape.name, base.name),
        source: shape.clone(),
        target: base.clone(),
        obj_map,
        mor_map,
    };
    assert!(validate_functor(&f).is_valid());
    f
}

/// Seeded generator of random valid fixtures for the property suites.
/// Everything it produces fits the acceptance bounds (base and fibres of at
/// most 4 objects / 8 morphisms).
pub struct FixtureGen {
    rng: ChaCha8Rng,
}

impl FixtureGen {
    pub fn new(seed: u64) -> FixtureGen {
        FixtureGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A random small base category (always valid by construction).
    pub fn base(&mut self) -> FinCat {
        match self.rng.gen_range(0..6) {
            0 => crate::fincat::discrete(self.rng.gen_range(1..=3)),
            1 => chain(self.rng.gen_range(2..=3)),
            2 => crate::fincat::walking_arrow(),
            3 => crate::fincat::parallel_pair(),
            4 => finset_cat(1),
            _ => self.random_poset(3),
        }
    }

    fn random_poset(&mut self, n: usize) -> FinCat {
        loop {
            // random partial order on n elements via a random DAG closure
            let mut leq = vec![vec![false; n]; n];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if self.rng.gen_bool(0.4) {
                        leq[i][j] = true;
                    }
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if leq[i][k] && leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
            let count: usize = leq.iter().flatten().filter(|&&b| b).count();
            if count > 8 {
                continue;
            }
            let names: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let rel = leq.clone();
            let f = move |a: &str, b: &str| {
                let ia: usize = a[1..].parse().unwrap();
                let ib: usize = b[1..].parse().unwrap();
                rel[ia][ib]
            };
            let seed: u64 = self.rng.gen();
            return poset_cat(&format!("poset{n}_{seed:08x}"), &refs, &f);
        }
    }

    /// A random small fibre category.
    pub fn fibre(&mut self) -> FinCat {
        match self.rng.gen_range(0..5) {
            0 => finset_cat(1),
            1 => chain(self.rng.gen_range(2..=3)),
            2 => crate::fincat::discrete(self.rng.gen_range(1..=3)),
            3 => bz2(),
            _ => crate::fincat::walking_arrow(),
        }
    }

    /// A random valid indexed category drawn from the constructions that are
    /// closed under validity: constant, families, representable, domain,
    /// and the pseudo chain.
    pub fn indexed(&mut self) -> IndexedCat {
        match self.rng.gen_range(0..6) {
            0 | 1 => {
                let base = self.base();
                let fibre = self.fibre();
                constant_indexed(&format!("const_{}_{}", base.name, fibre.name), &base, &fibre)
            }
            2 => fam_indexed(&finset_cat(1), 1),
            3 => {
                let base = self.base();
                let objs = base.objects();
                let at = objs.choose(&mut self.rng).unwrap().clone();
                representable_indexed(&base, &at)
            }
            4 => {
                let base = self.base();
                domain_indexed(&base)
            }
            _ => pseudo_chain_indexed(),
        }
    }

    /// A random diagram `(J1, J2)` of the given shape into the total setting
    /// of `l`; `None` when the shape admits no section for the drawn `J1`.
    pub fn diagram(&mut self, l: &IndexedCat, shape: &Shape) -> Option<(FinFunctor, SectionObj)> {
        let sh = shape.cat();
        let base_objs = l.base.objects();
        let mut obj_map: BTreeMap<ObjId, ObjId> = BTreeMap::new();
        for e in sh.object_ids() {
            obj_map.insert(e.clone(), base_objs.choose(&mut self.rng).unwrap().clone());
        }
        let mut mor_map: BTreeMap<MorId, MorId> = BTreeMap::new();
        for m in sh.morphism_data() {
            if sh.is_identity(&m.id) {
                mor_map.insert(m.id.clone(), l.base.identity(&obj_map[&m.dom]));
            } else {
                let pool = l.base.hom_slice(&obj_map[&m.dom], &obj_map[&m.cod]);
                if pool.is_empty() {
                    // fall back to an identity-shaped assignment
                    let a = obj_map[&m.dom].clone();
                    obj_map.insert(m.cod.clone(), a.clone());
                    mor_map.insert(m.id.clone(), l.base.identity(&a));
                } else {
                    mor_map.insert(m.id.clone(), pool.choose(&mut self.rng).unwrap().clone());
                }
            }
        }
        // repair morphisms whose endpoints were moved by the fallback
        for m in sh.morphism_data() {
            let im = mor_map[&m.id].clone();
            let md = l.base.mor(&im).unwrap();
            if md.dom != obj_map[&m.dom] || md.cod != obj_map[&m.cod] {
                let pool = l.base.hom_slice(&obj_map[&m.dom], &obj_map[&m.cod]);
                mor_map.insert(m.id.clone(), pool.first()?.clone());
            }
        }
        let j1 = FinFunctor {
            name: format!("J1({})", sh.name),
            source: sh.clone(),
            target: l.base.clone(),
            obj_map,
            mor_map,
        };
        if !validate_functor(&j1).is_valid() {
            return None;
        }
        let restricted = crate::indexed::restrict(l, &j1);
        let sections = sections_category(&restricted, 4000).ok()?;
        let ids: Vec<&ObjId> = sections.objects.keys().collect();
        if ids.is_empty() {
            return None;
        }
        let pick = ids[self.rng.gen_range(0..ids.len())];
        Some((j1, sections.objects[pick].clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;
    use crate::indexed::validate_indexed;

    #[test]
    fn tabulated_skeleta_validate() {
        assert!(validate_category(&finset_cat(3)).is_valid());
        assert!(validate_category(&pset_cat(2)).is_valid());
    }

    #[test]
    fn finset_counts() {
        let c = finset_cat(2);
        assert_eq!(c.object_ids().len(), 3);
        // sum over a,b <= 2 of b^a minus the empty homs
        assert_eq!(c.morphism_data().len(), 11);
    }

    #[test]
    fn posets_and_groups_validate() {
        for c in [chain(3), boolean_square(), m3(), bz2(), f2_cat(2)] {
            assert!(validate_category(&c).is_valid(), "{} invalid", c.name);
        }
    }

    #[test]
    fn f2_dimension_one_hom_has_two_maps() {
        let c = f2_cat(1);
        assert_eq!(c.hom_slice("v1", "v1").len(), 2);
        let id = c.identity("v1");
        let other: Vec<_> = c
            .hom_slice("v1", "v1")
            .iter()
            .filter(|m| **m != id)
            .collect();
        // the zero map squares to itself
        assert_eq!(c.compose(other[0], other[0]), *other[0]);
    }

    #[test]
    fn standard_indexed_fixtures_validate() {
        let fixtures: Vec<IndexedCat> = vec![
            constant_indexed("k", &chain(2), &finset_cat(1)),
            fam_indexed(&finset_cat(1), 2),
            representable_indexed(&chain(3), "t2"),
            domain_indexed(&chain(3)),
            pseudo_chain_indexed(),
        ];
        for l in fixtures {
            let rep = validate_indexed(&l);
            assert!(rep.is_valid(), "{}: {rep}", l.name);
        }
    }

    #[test]
    fn generator_produces_valid_fixtures() {
        let mut g = FixtureGen::new(7);
        for _ in 0..12 {
            let l = g.indexed();
            assert!(validate_indexed(&l).is_valid(), "{} invalid", l.name);
            assert!(l.base.object_ids().len() <= 4);
            assert!(l.base.morphism_data().len() <= 8);
            for f in l.fibres.values() {
                assert!(f.object_ids().len() <= 4, "{} fibre too big", l.name);
                assert!(f.morphism_data().len() <= 9);
            }
        }
    }
}
