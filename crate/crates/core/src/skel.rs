//! Concrete machinery for bounded skeleta of finite sets: total and partial
//! functions as index vectors, dependent sums/products of finite families,
//! and `Category` implementations whose composition is computed on demand.
//!
//! The computed categories exist because a fully tabulated composition table
//! for the skeleton above ~5 elements is astronomically large, while the
//! individual hom-sets the checkers touch stay tiny.

use crate::fincat::Category;
use crate::{MorId, ObjId};
use serde::Serialize;

/// A total function between finite sets `0..dom -> 0..cod`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SetFn {
    pub dom: usize,
    pub cod: usize,
    pub map: Vec<usize>,
}

impl SetFn {
    pub fn new(dom: usize, cod: usize, map: Vec<usize>) -> SetFn {
        debug_assert_eq!(map.len(), dom);
        debug_assert!(map.iter().all(|&v| v < cod));
        SetFn { dom, cod, map }
    }

    pub fn identity(n: usize) -> SetFn {
        SetFn { dom: n, cod: n, map: (0..n).collect() }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &SetFn) -> SetFn {
        debug_assert_eq!(f.cod, self.dom);
        SetFn {
            dom: f.dom,
            cod: self.cod,
            map: f.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    /// Index of this function in the enumeration of `cod^dom` functions.
    /// `f(0)` is the least-significant digit.
    pub fn index(&self) -> usize {
        let mut e = 0usize;
        for &v in self.map.iter().rev() {
            e = e * self.cod + v;
        }
        e
    }

    pub fn from_index(dom: usize, cod: usize, mut e: usize) -> SetFn {
        let mut map = Vec::with_capacity(dom);
        for _ in 0..dom {
            map.push(e % cod);
            e /= cod;
        }
        SetFn { dom, cod, map }
    }

    /// Number of functions `dom -> cod` (with `0^0 = 1`).
    pub fn count(dom: usize, cod: usize) -> usize {
        if dom == 0 {
            1
        } else {
            cod.checked_pow(dom as u32).expect("hom count overflow")
        }
    }

    pub fn is_bijection(&self) -> bool {
        if self.dom != self.cod {
            return false;
        }
        let mut seen = vec![false; self.cod];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }
}

/// Pair encoding for the chosen product `a × b`: `(i, j) ↦ i*b + j`.
pub fn pair_encode(i: usize, j: usize, b: usize) -> usize {
    i * b + j
}

pub fn pair_decode(e: usize, b: usize) -> (usize, usize) {
    (e / b, e % b)
}

/// First projection `a × b -> a` as a function.
pub fn proj1(a: usize, b: usize) -> SetFn {
    SetFn::new(a * b, a, (0..a * b).map(|e| e / b).collect())
}

/// Second projection `a × b -> b`.
pub fn proj2(a: usize, b: usize) -> SetFn {
    SetFn::new(a * b, b, (0..a * b).map(|e| e % b).collect())
}

/// Pairing `<f, g> : c -> a × b` of `f : c -> a`, `g : c -> b`.
pub fn pair_fn(f: &SetFn, g: &SetFn) -> SetFn {
    debug_assert_eq!(f.dom, g.dom);
    SetFn::new(
        f.dom,
        f.cod * g.cod,
        (0..f.dom).map(|x| pair_encode(f.map[x], g.map[x], g.cod)).collect(),
    )
}

/// `f × g` on chosen products.
pub fn times_fn(f: &SetFn, g: &SetFn) -> SetFn {
    let mut map = Vec::with_capacity(f.dom * g.dom);
    for i in 0..f.dom {
        for j in 0..g.dom {
            map.push(pair_encode(f.map[i], g.map[j], g.cod));
        }
    }
    SetFn::new(f.dom * g.dom, f.cod * g.cod, map)
}

/// Evaluation `(a ⇒ b) × a -> b` for the chosen exponential `b^a`
/// (functions ordered by [`SetFn::index`]).
pub fn eval_fn(a: usize, b: usize) -> SetFn {
    let exp = SetFn::count(a, b);
    let mut map = Vec::with_capacity(exp * a);
    for e in 0..exp {
        let f = SetFn::from_index(a, b, e);
        for x in 0..a {
            map.push(f.map[x]);
        }
    }
    SetFn::new(exp * a, b, map)
}

/// Currying `Λ(h) : c -> (a ⇒ b)` of `h : c × a -> b`.
pub fn curry_fn(h: &SetFn, c: usize, a: usize) -> SetFn {
    debug_assert_eq!(h.dom, c * a);
    let b = h.cod;
    let map = (0..c)
        .map(|y| {
            SetFn::new(a, b, (0..a).map(|x| h.map[pair_encode(y, x, a)]).collect()).index()
        })
        .collect();
    SetFn::new(c, SetFn::count(a, b), map)
}

/// Coproduct injections for the chosen coproduct `a ⊔ b` (`a` first).
pub fn inj1(a: usize, b: usize) -> SetFn {
    SetFn::new(a, a + b, (0..a).collect())
}

pub fn inj2(a: usize, b: usize) -> SetFn {
    SetFn::new(b, a + b, (a..a + b).collect())
}

/// Copairing `[f, g] : a ⊔ b -> c`.
pub fn copair_fn(f: &SetFn, g: &SetFn) -> SetFn {
    debug_assert_eq!(f.cod, g.cod);
    let mut map = f.map.clone();
    map.extend_from_slice(&g.map);
    SetFn::new(f.dom + g.dom, f.cod, map)
}

/// Pullback of the coproduct diagram `b >-> b ⊔ c <-< c` along
/// `g : a -> b ⊔ c`: the two fibres of `a`, each given by its size together
/// with the monic inclusion into `a` (increasing enumeration).
pub fn coproduct_fibres(g: &SetFn, b: usize) -> (Subset, Subset) {
    let left: Vec<usize> = (0..g.dom).filter(|&x| g.map[x] < b).collect();
    let right: Vec<usize> = (0..g.dom).filter(|&x| g.map[x] >= b).collect();
    (Subset::new(g.dom, left), Subset::new(g.dom, right))
}

/// A subset of `0..ambient`, with its inclusion as the increasing
/// enumeration of its elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subset {
    pub ambient: usize,
    pub elems: Vec<usize>,
}

impl Subset {
    pub fn new(ambient: usize, elems: Vec<usize>) -> Subset {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Subset { ambient, elems }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    /// The inclusion `size -> ambient`.
    pub fn inclusion(&self) -> SetFn {
        SetFn::new(self.elems.len(), self.ambient, self.elems.clone())
    }

    /// Position of an ambient element inside the subset, if present.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elems.binary_search(&x).ok()
    }
}

/// A partial function `0..dom ⇀ 0..cod`; `cod` itself is the "undefined"
/// sentinel in `map`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ParFn {
    pub dom: usize,
    pub cod: usize,
    pub map: Vec<usize>,
}

impl ParFn {
    pub fn new(dom: usize, cod: usize, map: Vec<usize>) -> ParFn {
        debug_assert_eq!(map.len(), dom);
        debug_assert!(map.iter().all(|&v| v <= cod));
        ParFn { dom, cod, map }
    }

    pub fn identity(n: usize) -> ParFn {
        ParFn { dom: n, cod: n, map: (0..n).collect() }
    }

    pub fn defined_at(&self, x: usize) -> Option<usize> {
        let v = self.map[x];
        (v < self.cod).then_some(v)
    }

    pub fn after(&self, f: &ParFn) -> ParFn {
        debug_assert_eq!(f.cod, self.dom);
        let map = f
            .map
            .iter()
            .map(|&v| {
                if v < f.cod {
                    self.map[v].min(self.cod)
                } else {
                    self.cod
                }
            })
            .collect();
        ParFn { dom: f.dom, cod: self.cod, map }
    }

    /// Index in the enumeration of `(cod+1)^dom` partial functions.
    pub fn index(&self) -> usize {
        let mut e = 0usize;
        for &v in self.map.iter().rev() {
            e = e * (self.cod + 1) + v;
        }
        e
    }

    pub fn from_index(dom: usize, cod: usize, mut e: usize) -> ParFn {
        let mut map = Vec::with_capacity(dom);
        for _ in 0..dom {
            map.push(e % (cod + 1));
            e /= cod + 1;
        }
        ParFn { dom, cod, map }
    }

    pub fn count(dom: usize, cod: usize) -> usize {
        (cod + 1).checked_pow(dom as u32).expect("hom count overflow")
    }

    /// The domain of definition, as a subset of `dom`.
    pub fn domain(&self) -> Subset {
        Subset::new(
            self.dom,
            (0..self.dom).filter(|&x| self.map[x] < self.cod).collect(),
        )
    }
}

/// A finite family of finite sets over the index set `0..sizes.len()`, with
/// chosen encodings of its dependent sum and product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinFam {
    pub sizes: Vec<usize>,
}

impl FinFam {
    pub fn constant(n: usize, size: usize) -> FinFam {
        FinFam { sizes: vec![size; n] }
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Σ-size: the disjoint union, encoded by offsets in index order.
    pub fn sigma_size(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn sigma_encode(&self, i: usize, k: usize) -> usize {
        debug_assert!(k < self.sizes[i]);
        self.sizes[..i].iter().sum::<usize>() + k
    }

    pub fn sigma_decode(&self, mut e: usize) -> (usize, usize) {
        for (i, &s) in self.sizes.iter().enumerate() {
            if e < s {
                return (i, e);
            }
            e -= s;
        }
        panic!("sigma index out of range");
    }

    /// Π-size: the dependent product, encoded mixed-radix with the component
    /// at index 0 least significant.
    pub fn pi_size(&self) -> usize {
        self.sizes
            .iter()
            .try_fold(1usize, |acc, &s| acc.checked_mul(s))
            .expect("pi size overflow")
    }

    pub fn pi_encode(&self, choices: &[usize]) -> usize {
        debug_assert_eq!(choices.len(), self.sizes.len());
        let mut e = 0usize;
        for (&c, &s) in choices.iter().zip(&self.sizes).rev() {
            debug_assert!(c < s);
            e = e * s + c;
        }
        e
    }

    pub fn pi_decode(&self, mut e: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.sizes.len());
        for &s in &self.sizes {
            out.push(e % s);
            e /= s;
        }
        out
    }
}

fn skel_obj(n: usize) -> ObjId {
    assert!(n <= 9, "skeleton object out of the supported id range");
    format!("s{n}")
}

fn skel_obj_of(id: &str) -> usize {
    id.strip_prefix('s')
        .and_then(|s| s.parse().ok())
        .unwrap_or_else(|| panic!("not a skeleton object id: {id}"))
}

/// The bounded skeleton of finite sets and total functions as a computed
/// [`Category`]: objects `s0..s{objects_max}`, composition by evaluation.
///
/// `ambient_max` bounds the objects that chosen coproducts may produce; it
/// can exceed `objects_max` so that tensors of listed objects exist without
/// the listed range having to be closed under them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinSetCat {
    pub objects_max: usize,
    pub ambient_max: usize,
}

impl FinSetCat {
    pub fn new(objects_max: usize, ambient_max: usize) -> FinSetCat {
        assert!(objects_max <= ambient_max && ambient_max <= 9);
        FinSetCat { objects_max, ambient_max }
    }

    /// Ids embed the image tuple, so lexicographic id order is lexicographic
    /// order of image tuples; in particular identities precede the other
    /// bijections, which fixes the tie-breaking of universal-object searches.
    pub fn mor_id(&self, f: &SetFn) -> MorId {
        let digits: String = f.map.iter().map(|v| char::from(b'0' + *v as u8)).collect();
        format!("f{}>{}:{digits}", f.dom, f.cod)
    }

    pub fn mor_of(&self, id: &str) -> SetFn {
        let body = id.strip_prefix('f').expect("finset morphism id");
        let (dom, rest) = body.split_once('>').expect("finset morphism id");
        let (cod, digits) = rest.split_once(':').expect("finset morphism id");
        SetFn::new(
            dom.parse().unwrap(),
            cod.parse().unwrap(),
            digits.bytes().map(|b| (b - b'0') as usize).collect(),
        )
    }
}

impl Category for FinSetCat {
    fn objects(&self) -> Vec<ObjId> {
        (0..=self.objects_max).map(skel_obj).collect()
    }

    fn hom(&self, a: &str, b: &str) -> Vec<MorId> {
        let (a, b) = (skel_obj_of(a), skel_obj_of(b));
        if a > 0 && b == 0 {
            return Vec::new();
        }
        (0..SetFn::count(a, b))
            .map(|e| self.mor_id(&SetFn::from_index(a, b, e)))
            .collect()
    }

    fn dom(&self, f: &str) -> ObjId {
        skel_obj(self.mor_of(f).dom)
    }

    fn cod(&self, f: &str) -> ObjId {
        skel_obj(self.mor_of(f).cod)
    }

    fn identity(&self, a: &str) -> MorId {
        self.mor_id(&SetFn::identity(skel_obj_of(a)))
    }

    fn compose(&self, g: &str, f: &str) -> MorId {
        self.mor_id(&self.mor_of(g).after(&self.mor_of(f)))
    }
}

/// The bounded skeleton of finite sets and partial functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PSetCat {
    pub objects_max: usize,
    pub ambient_max: usize,
}

impl PSetCat {
    pub fn new(objects_max: usize, ambient_max: usize) -> PSetCat {
        assert!(objects_max <= ambient_max && ambient_max <= 9);
        PSetCat { objects_max, ambient_max }
    }

    /// Same digit encoding as [`FinSetCat::mor_id`]; the digit equal to the
    /// codomain marks "undefined".
    pub fn mor_id(&self, f: &ParFn) -> MorId {
        let digits: String = f.map.iter().map(|v| char::from(b'0' + *v as u8)).collect();
        format!("p{}>{}:{digits}", f.dom, f.cod)
    }

    pub fn mor_of(&self, id: &str) -> ParFn {
        let body = id.strip_prefix('p').expect("pset morphism id");
        let (dom, rest) = body.split_once('>').expect("pset morphism id");
        let (cod, digits) = rest.split_once(':').expect("pset morphism id");
        ParFn::new(
            dom.parse().unwrap(),
            cod.parse().unwrap(),
            digits.bytes().map(|b| (b - b'0') as usize).collect(),
        )
    }
}

impl Category for PSetCat {
    fn objects(&self) -> Vec<ObjId> {
        (0..=self.objects_max).map(skel_obj).collect()
    }

    fn hom(&self, a: &str, b: &str) -> Vec<MorId> {
        let (a, b) = (skel_obj_of(a), skel_obj_of(b));
        (0..ParFn::count(a, b))
            .map(|e| self.mor_id(&ParFn::from_index(a, b, e)))
            .collect()
    }

    fn dom(&self, f: &str) -> ObjId {
        skel_obj(self.mor_of(f).dom)
    }

    fn cod(&self, f: &str) -> ObjId {
        skel_obj(self.mor_of(f).cod)
    }

    fn identity(&self, a: &str) -> MorId {
        self.mor_id(&ParFn::identity(skel_obj_of(a)))
    }

    fn compose(&self, g: &str, f: &str) -> MorId {
        self.mor_id(&self.mor_of(g).after(&self.mor_of(f)))
    }
}

/// Numeric value of a skeleton object id.
pub fn obj_size(id: &str) -> usize {
    skel_obj_of(id)
}

/// Skeleton object id for a size.
pub fn obj_id(n: usize) -> ObjId {
    skel_obj(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn setfn_index_roundtrip() {
        for dom in 0..4 {
            for cod in 1..4 {
                for e in 0..SetFn::count(dom, cod) {
                    let f = SetFn::from_index(dom, cod, e);
                    assert_eq!(f.index(), e);
                }
            }
        }
    }

    #[test]
    fn curry_uncurry_against_eval() {
        // Λ(h) satisfies ev ∘ (Λ(h) × id) = h for every h : c × a -> b
        let (c, a, b) = (2, 2, 2);
        for e in 0..SetFn::count(c * a, b) {
            let h = SetFn::from_index(c * a, b, e);
            let l = curry_fn(&h, c, a);
            let ev = eval_fn(a, b);
            let recovered = ev.after(&times_fn(&l, &SetFn::identity(a)));
            assert_eq!(recovered, h);
        }
    }

    #[test]
    fn exponential_bijection_counts() {
        // |hom(c × a, b)| = |hom(c, a ⇒ b)| exhaustively at small sizes
        for c in 0..3 {
            for a in 0..3 {
                for b in 1..3 {
                    assert_eq!(
                        SetFn::count(c * a, b),
                        SetFn::count(c, SetFn::count(a, b))
                    );
                }
            }
        }
    }

    #[test]
    fn parfn_compose_respects_definedness() {
        // f : 2 ⇀ 2 defined only at 0; g : 2 ⇀ 1 defined only at 1
        let f = ParFn::new(2, 2, vec![1, 2]);
        let g = ParFn::new(2, 1, vec![1, 0]);
        let gf = g.after(&f);
        assert_eq!(gf.defined_at(0), Some(0));
        assert_eq!(gf.defined_at(1), None);
    }

    #[test]
    fn finfam_pi_sigma_roundtrip() {
        let fam = FinFam { sizes: vec![2, 3, 1] };
        assert_eq!(fam.sigma_size(), 6);
        assert_eq!(fam.pi_size(), 6);
        for e in 0..fam.sigma_size() {
            let (i, k) = fam.sigma_decode(e);
            assert_eq!(fam.sigma_encode(i, k), e);
        }
        for e in 0..fam.pi_size() {
            assert_eq!(fam.pi_encode(&fam.pi_decode(e)), e);
        }
    }

    #[test]
    fn coproduct_fibres_split_the_domain() {
        // g : 3 -> 2 ⊔ 2 with images [0, 3, 1]
        let g = SetFn::new(3, 4, vec![0, 3, 1]);
        let (l, r) = coproduct_fibres(&g, 2);
        assert_eq!(l.elems, vec![0, 2]);
        assert_eq!(r.elems, vec![1]);
        assert_eq!(l.size() + r.size(), 3);
    }

    #[test]
    fn finset_cat_composition_matches_evaluation() {
        let c = FinSetCat::new(3, 6);
        let f = SetFn::new(2, 3, vec![1, 2]);
        let g = SetFn::new(3, 2, vec![0, 1, 1]);
        let gf = c.compose(&c.mor_id(&g), &c.mor_id(&f));
        assert_eq!(c.mor_of(&gf).map, vec![1, 1]);
        assert_eq!(c.hom("s2", "s3").len(), 9);
    }
}
