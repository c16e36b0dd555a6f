//! The module category `Aᵀ` and the comodule category `A_Q` of a finite SMM.
//!
//! Objects and arrows are plain elements of `A`. Composition is the product
//! in classical order: `t ∘ s = t·s` (first `s`, then `t`).

mod bimodule;
mod regular;
mod simplicial;

use serde::Serialize;

use crate::finmon::{SmmInstance, Violation};

pub use bimodule::{forgetful_bimodule, hom_tensor, monoidal_constraint_check, ForgetfulBimodule};
pub use regular::{classify_source_regular, GModule, RegularClassification};
pub use simplicial::{simplicial_object, simplicial_words, SimplicialData, SymbolicSimplicial};

/// Which of the two categories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// `Aᵀ`: algebras of the monad `T`.
    Modules,
    /// `A_Q`: coalgebras of the comonad `Q`.
    Comodules,
}

/// An arrow with its domain and codomain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    pub elem: usize,
    pub dom: usize,
    pub cod: usize,
}

/// `xμ = xT(x)` and `xη = 1`.
pub fn is_t_algebra(inst: &SmmInstance, x: usize) -> bool {
    inst.mul(x, inst.mu) == inst.mul(x, inst.tt(x)) && inst.mul(x, inst.eta) == inst.unit()
}

/// `tx = yT(t)`.
pub fn is_t_arrow(inst: &SmmInstance, t: usize, x: usize, y: usize) -> bool {
    inst.mul(t, x) == inst.mul(y, inst.tt(t))
}

/// `Q(u)u = δu` and `εu = 1`.
pub fn is_q_coalgebra(inst: &SmmInstance, u: usize) -> bool {
    inst.mul(inst.qq(u), u) == inst.mul(inst.delta, u) && inst.mul(inst.eps, u) == inst.unit()
}

/// `Q(s)u = vs`.
pub fn is_q_arrow(inst: &SmmInstance, s: usize, u: usize, v: usize) -> bool {
    inst.mul(inst.qq(s), u) == inst.mul(v, s)
}

pub fn enum_t_algebras(inst: &SmmInstance) -> Vec<usize> {
    inst.monoid.elements().filter(|&x| is_t_algebra(inst, x)).collect()
}

pub fn enum_q_coalgebras(inst: &SmmInstance) -> Vec<usize> {
    inst.monoid.elements().filter(|&u| is_q_coalgebra(inst, u)).collect()
}

pub fn t_hom_set(inst: &SmmInstance, x: usize, y: usize) -> Vec<usize> {
    inst.monoid.elements().filter(|&t| is_t_arrow(inst, t, x, y)).collect()
}

pub fn q_hom_set(inst: &SmmInstance, u: usize, v: usize) -> Vec<usize> {
    inst.monoid.elements().filter(|&s| is_q_arrow(inst, s, u, v)).collect()
}

/// `x ⊛ y = yQ(x)δ`.
pub fn h_tensor_obj(inst: &SmmInstance, x: usize, y: usize) -> usize {
    inst.prod(&[y, inst.qq(x), inst.delta])
}

/// `s ⊛ t = y₂Q(s)ηt` for `s: x₁ → y₁`, `t: x₂ → y₂`.
pub fn h_tensor_arr(inst: &SmmInstance, s: Arrow, t: Arrow) -> Arrow {
    Arrow {
        elem: inst.prod(&[t.cod, inst.qq(s.elem), inst.eta, t.elem]),
        dom: h_tensor_obj(inst, s.dom, t.dom),
        cod: h_tensor_obj(inst, s.cod, t.cod),
    }
}

/// `u ⊻ v = μT(v)u`.
pub fn v_tensor_obj(inst: &SmmInstance, u: usize, v: usize) -> usize {
    inst.prod(&[inst.mu, inst.tt(v), u])
}

/// `s ⊻ t = tεT(s)u₂` for `s: u₁ → v₁`, `t: u₂ → v₂`.
pub fn v_tensor_arr(inst: &SmmInstance, s: Arrow, t: Arrow) -> Arrow {
    Arrow {
        elem: inst.prod(&[t.elem, inst.eps, inst.tt(s.elem), t.dom]),
        dom: v_tensor_obj(inst, s.dom, t.dom),
        cod: v_tensor_obj(inst, s.cod, t.cod),
    }
}

/// One of the two categories of a fixed instance, with uniform accessors.
#[derive(Clone, Copy)]
pub struct ElementCategory<'a> {
    pub inst: &'a SmmInstance,
    pub kind: Kind,
}

impl<'a> ElementCategory<'a> {
    pub fn modules(inst: &'a SmmInstance) -> Self {
        ElementCategory {
            inst,
            kind: Kind::Modules,
        }
    }

    pub fn comodules(inst: &'a SmmInstance) -> Self {
        ElementCategory {
            inst,
            kind: Kind::Comodules,
        }
    }

    pub fn is_object(&self, x: usize) -> bool {
        match self.kind {
            Kind::Modules => is_t_algebra(self.inst, x),
            Kind::Comodules => is_q_coalgebra(self.inst, x),
        }
    }

    pub fn objects(&self) -> Vec<usize> {
        match self.kind {
            Kind::Modules => enum_t_algebras(self.inst),
            Kind::Comodules => enum_q_coalgebras(self.inst),
        }
    }

    pub fn is_arrow(&self, a: Arrow) -> bool {
        match self.kind {
            Kind::Modules => is_t_arrow(self.inst, a.elem, a.dom, a.cod),
            Kind::Comodules => is_q_arrow(self.inst, a.elem, a.dom, a.cod),
        }
    }

    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        match self.kind {
            Kind::Modules => t_hom_set(self.inst, x, y),
            Kind::Comodules => q_hom_set(self.inst, x, y),
        }
    }

    /// Every arrow between objects.
    pub fn arrows(&self) -> Vec<Arrow> {
        let obs = self.objects();
        let mut out = Vec::new();
        for &x in &obs {
            for &y in &obs {
                out.extend(self.hom(x, y).into_iter().map(|elem| Arrow { elem, dom: x, cod: y }));
            }
        }
        out
    }

    /// `ε` for `Aᵀ`, `η` for `A_Q`.
    pub fn unit_object(&self) -> usize {
        match self.kind {
            Kind::Modules => self.inst.eps,
            Kind::Comodules => self.inst.eta,
        }
    }

    pub fn identity(&self, x: usize) -> Arrow {
        Arrow {
            elem: self.inst.unit(),
            dom: x,
            cod: x,
        }
    }

    /// `t ∘ s`; `None` unless `s.cod == t.dom`.
    pub fn compose(&self, t: Arrow, s: Arrow) -> Option<Arrow> {
        (s.cod == t.dom).then(|| Arrow {
            elem: self.inst.mul(t.elem, s.elem),
            dom: s.dom,
            cod: t.cod,
        })
    }

    pub fn tensor_obj(&self, x: usize, y: usize) -> usize {
        match self.kind {
            Kind::Modules => h_tensor_obj(self.inst, x, y),
            Kind::Comodules => v_tensor_obj(self.inst, x, y),
        }
    }

    pub fn tensor_arr(&self, s: Arrow, t: Arrow) -> Arrow {
        match self.kind {
            Kind::Modules => h_tensor_arr(self.inst, s, t),
            Kind::Comodules => v_tensor_arr(self.inst, s, t),
        }
    }

    pub fn are_isomorphic(&self, x: usize, y: usize) -> bool {
        let unit = self.inst.unit();
        let back = self.hom(y, x);
        self.hom(x, y).iter().any(|&s| {
            back.iter()
                .any(|&t| self.inst.mul(t, s) == unit && self.inst.mul(s, t) == unit)
        })
    }
}

/// Whether `x` and `y` are isomorphic objects of `Aᵀ`.
pub fn are_isomorphic_objects(inst: &SmmInstance, x: usize, y: usize) -> bool {
    let c = ElementCategory::modules(inst);
    c.is_object(x) && c.is_object(y) && c.are_isomorphic(x, y)
}

fn violation(axiom: &'static str, witness: &[(&'static str, usize)]) -> Violation {
    Violation {
        axiom,
        witness: witness.to_vec(),
    }
}

/// Strict monoidality, exhaustively over objects, arrows and their triples:
/// closure, associativity, unit laws, functoriality and interchange.
pub fn strict_monoidal_check(cat: &ElementCategory<'_>) -> Vec<Violation> {
    let mut out = Vec::new();
    let obs = cat.objects();
    let arrows = cat.arrows();
    let unit = cat.unit_object();
    if !cat.is_object(unit) {
        out.push(violation("unit-object", &[("unit", unit)]));
    }
    for &x in &obs {
        if cat.tensor_obj(unit, x) != x || cat.tensor_obj(x, unit) != x {
            out.push(violation("unit-law-objects", &[("x", x)]));
        }
        if !cat.is_arrow(cat.identity(x)) {
            out.push(violation("identity", &[("x", x)]));
        }
        for &y in &obs {
            let xy = cat.tensor_obj(x, y);
            if !cat.is_object(xy) {
                out.push(violation("closure-objects", &[("x", x), ("y", y)]));
            }
            if cat.tensor_arr(cat.identity(x), cat.identity(y)) != cat.identity(xy) {
                out.push(violation("tensor-identities", &[("x", x), ("y", y)]));
            }
            for &z in &obs {
                if cat.tensor_obj(xy, z) != cat.tensor_obj(x, cat.tensor_obj(y, z)) {
                    out.push(violation("associativity-objects", &[("x", x), ("y", y), ("z", z)]));
                }
            }
        }
    }
    let id_unit = cat.identity(unit);
    for &s in &arrows {
        if cat.tensor_arr(id_unit, s) != s || cat.tensor_arr(s, id_unit) != s {
            out.push(violation(
                "unit-law-arrows",
                &[("s", s.elem), ("dom", s.dom), ("cod", s.cod)],
            ));
        }
        for &t in &arrows {
            let st = cat.tensor_arr(s, t);
            if !cat.is_arrow(st) {
                out.push(violation("closure-arrows", &[("s", s.elem), ("t", t.elem)]));
            }
            if let Some(ts) = cat.compose(t, s) {
                if !cat.is_arrow(ts) {
                    out.push(violation("closure-composition", &[("s", s.elem), ("t", t.elem)]));
                }
            }
            for &r in &arrows {
                if cat.tensor_arr(st, r) != cat.tensor_arr(s, cat.tensor_arr(t, r)) {
                    out.push(violation(
                        "associativity-arrows",
                        &[("s", s.elem), ("t", t.elem), ("r", r.elem)],
                    ));
                }
            }
        }
    }
    // interchange: (s'∘s) ⊛ (t'∘t) = (s'⊛t') ∘ (s⊛t)
    for &s in &arrows {
        for &s2 in arrows.iter().filter(|a| a.dom == s.cod) {
            for &t in &arrows {
                for &t2 in arrows.iter().filter(|a| a.dom == t.cod) {
                    let lhs = cat.tensor_arr(cat.compose(s2, s).unwrap(), cat.compose(t2, t).unwrap());
                    let rhs = cat.compose(cat.tensor_arr(s2, t2), cat.tensor_arr(s, t));
                    if rhs != Some(lhs) {
                        out.push(violation(
                            "interchange",
                            &[("s", s.elem), ("s'", s2.elem), ("t", t.elem), ("t'", t2.elem)],
                        ));
                    }
                }
            }
        }
    }
    out
}

/// `⟨μ, δ, ε⟩` is a comonoid in `Aᵀ`, and `1_μ ⊛ t = t`, `t ⊛ 1_μ = Q(t)`.
pub fn comonoid_check(inst: &SmmInstance) -> Vec<Violation> {
    let cat = ElementCategory::modules(inst);
    let mut out = Vec::new();
    let (mu, delta, eps) = (inst.mu, inst.delta, inst.eps);
    if !cat.is_object(mu) {
        out.push(violation("comonoid-object", &[("mu", mu)]));
        return out;
    }
    let mm = cat.tensor_obj(mu, mu);
    let d = Arrow {
        elem: delta,
        dom: mu,
        cod: mm,
    };
    let e = Arrow {
        elem: eps,
        dom: mu,
        cod: eps,
    };
    if !cat.is_arrow(d) {
        out.push(violation("comultiplication-arrow", &[("delta", delta)]));
    }
    if !cat.is_arrow(e) {
        out.push(violation("counit-arrow", &[("eps", eps)]));
    }
    let one = cat.identity(mu);
    let left = cat.compose(cat.tensor_arr(d, one), d);
    let right = cat.compose(cat.tensor_arr(one, d), d);
    if left.is_none() || left != right {
        out.push(violation("coassociativity", &[("delta", delta)]));
    }
    if cat.compose(cat.tensor_arr(e, one), d) != Some(one) {
        out.push(violation("counit-left", &[("eps", eps)]));
    }
    if cat.compose(cat.tensor_arr(one, e), d) != Some(one) {
        out.push(violation("counit-right", &[("eps", eps)]));
    }
    for t in cat.arrows() {
        if cat.tensor_arr(one, t).elem != t.elem {
            out.push(violation("identity-tensor-left", &[("t", t.elem)]));
        }
        if cat.tensor_arr(t, one).elem != inst.qq(t.elem) {
            out.push(violation("identity-tensor-right", &[("t", t.elem)]));
        }
    }
    out
}

/// `⟨δ, μ, η⟩` is a monoid in `A_Q`.
pub fn monoid_check(inst: &SmmInstance) -> Vec<Violation> {
    let cat = ElementCategory::comodules(inst);
    let mut out = Vec::new();
    let (mu, delta, eta) = (inst.mu, inst.delta, inst.eta);
    if !cat.is_object(delta) {
        out.push(violation("monoid-object", &[("delta", delta)]));
        return out;
    }
    let dd = cat.tensor_obj(delta, delta);
    let m = Arrow {
        elem: mu,
        dom: dd,
        cod: delta,
    };
    let u = Arrow {
        elem: eta,
        dom: cat.unit_object(),
        cod: delta,
    };
    if !cat.is_arrow(m) {
        out.push(violation("multiplication-arrow", &[("mu", mu)]));
    }
    if !cat.is_arrow(u) {
        out.push(violation("unit-arrow", &[("eta", eta)]));
    }
    let one = cat.identity(delta);
    let left = cat.compose(m, cat.tensor_arr(m, one));
    let right = cat.compose(m, cat.tensor_arr(one, m));
    if left.is_none() || left != right {
        out.push(violation("associativity", &[("mu", mu)]));
    }
    if cat.compose(m, cat.tensor_arr(u, one)) != Some(one) {
        out.push(violation("unit-left", &[("eta", eta)]));
    }
    if cat.compose(m, cat.tensor_arr(one, u)) != Some(one) {
        out.push(violation("unit-right", &[("eta", eta)]));
    }
    out
}

/// For every object `x`: `Aᵀ(μ, x) = xT(A)`, `x: μ → x` is an arrow, and
/// `Aᵀ(μ, -)` separates parallel arrows.
pub fn representable_check(inst: &SmmInstance) -> Vec<Violation> {
    let cat = ElementCategory::modules(inst);
    let mut out = Vec::new();
    let obs = cat.objects();
    for &x in &obs {
        let hom = t_hom_set(inst, inst.mu, x);
        let image = crate::finmon::sorted(inst.monoid.elements().map(|a| inst.mul(x, inst.tt(a))));
        if hom != image {
            out.push(violation("hom-from-mu", &[("x", x)]));
        }
        if !is_t_arrow(inst, x, inst.mu, x) {
            out.push(violation("element-is-arrow", &[("x", x)]));
        }
        for &y in &obs {
            let hom = t_hom_set(inst, x, y);
            for &s in &hom {
                for &t in &hom {
                    if s != t && inst.mul(s, x) == inst.mul(t, x) {
                        out.push(violation("faithful", &[("x", x), ("y", y), ("s", s), ("t", t)]));
                    }
                }
            }
        }
    }
    out
}

/// JSON dump of one category: objects, hom-sets and the tensor table.
pub fn category_dump(cat: &ElementCategory<'_>) -> serde_json::Value {
    let obs = cat.objects();
    let homs: Vec<serde_json::Value> = obs
        .iter()
        .flat_map(|&x| {
            obs.iter()
                .map(move |&y| serde_json::json!({ "dom": x, "cod": y, "arrows": cat.hom(x, y) }))
        })
        .collect();
    let tensor: Vec<Vec<usize>> = obs
        .iter()
        .map(|&x| obs.iter().map(|&y| cat.tensor_obj(x, y)).collect())
        .collect();
    serde_json::json!({
        "kind": cat.kind,
        "objects": obs,
        "unit": cat.unit_object(),
        "homs": homs,
        "tensor": tensor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finmon::{enumerate_monoids, enumerate_smm, FiniteMonoid};

    fn z2() -> SmmInstance {
        SmmInstance::trivial_on(FiniteMonoid::cyclic(2), 1).unwrap()
    }

    #[test]
    fn objects_of_small_instances() {
        let one = SmmInstance::trivial_one();
        assert_eq!(enum_t_algebras(&one), vec![0]);
        assert_eq!(enum_q_coalgebras(&one), vec![0]);
        let z = z2();
        assert_eq!(enum_t_algebras(&z), vec![1]);
        assert_eq!(enum_q_coalgebras(&z), vec![1]);
        assert_eq!(t_hom_set(&z, 1, 1), vec![0, 1]);
        assert_eq!(h_tensor_obj(&z, 1, 1), 1);
        assert_eq!(v_tensor_obj(&z, 1, 1), 1);
    }

    #[test]
    fn trivial_instances_have_the_single_object_eps() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, false).unwrap() {
                for inst in enumerate_smm(&m) {
                    assert_eq!(enum_t_algebras(&inst), vec![inst.eps]);
                }
            }
        }
    }

    #[test]
    fn checks_pass_on_enumerated_instances() {
        for n in 1..=3 {
            for m in enumerate_monoids(n, true).unwrap() {
                for inst in enumerate_smm(&m) {
                    assert!(strict_monoidal_check(&ElementCategory::modules(&inst)).is_empty());
                    assert!(strict_monoidal_check(&ElementCategory::comodules(&inst)).is_empty());
                    assert!(comonoid_check(&inst).is_empty());
                    assert!(monoid_check(&inst).is_empty());
                    assert!(representable_check(&inst).is_empty());
                }
            }
        }
    }

    #[test]
    fn corrupted_delta_breaks_the_comonoid() {
        let mut z = z2();
        z.delta = 0;
        assert!(!comonoid_check(&z).is_empty());
    }

    #[test]
    fn unit_is_isomorphic_to_itself() {
        let z = z2();
        assert!(are_isomorphic_objects(&z, 1, 1));
        assert!(!are_isomorphic_objects(&z, 0, 1));
    }

    #[test]
    fn dump_shape() {
        let z = z2();
        let v = category_dump(&ElementCategory::modules(&z));
        assert_eq!(v["objects"], serde_json::json!([1]));
        assert_eq!(v["tensor"], serde_json::json!([[1]]));
        assert_eq!(v["kind"], "modules");
    }
}
